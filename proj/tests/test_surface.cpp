// The periodic surface: exact checks, and the section tracer against two oracles.
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "support.hpp"
#include "thinsec/section.hpp"
#include "thinsec/surface.hpp"

using namespace thinsec;

namespace
{
  struct Counts
  {
    int components = 0;
    int spanning = 0;
  };

  bool spans(const std::array<bool, 4>& t) { return (t[0] && t[1]) || (t[2] && t[3]); }

  std::array<bool, 4> touches(const Point2& p, double R, double tol)
  {
    return {p.x1 <= -R + tol, p.x1 >= R - tol, p.x3 <= -R + tol, p.x3 >= R - tol};
  }

  // components by quadratic endpoint matching and depth first search
  Counts brute_force(const std::vector<Segment2>& segs, double R, double tol)
  {
    const size_t n = segs.size();
    auto close = [&](const Point2& p, const Point2& r) { return std::abs(p.x1 - r.x1) <= tol && std::abs(p.x3 - r.x3) <= tol; };
    std::vector<int> comp(n, -1);
    Counts c;
    for (size_t s = 0; s < n; s++)
    {
      if (comp[s] >= 0) continue;
      std::array<bool, 4> t{};
      std::vector<size_t> stack{s};
      comp[s] = c.components;
      while (!stack.empty())
      {
        size_t i = stack.back();
        stack.pop_back();
        for (const Point2& p : {segs[i].a, segs[i].b})
        {
          auto ti = touches(p, R, tol);
          for (int k = 0; k < 4; k++) t[k] = t[k] || ti[k];
        }
        for (size_t j = 0; j < n; j++)
          if (comp[j] < 0 && (close(segs[i].a, segs[j].a) || close(segs[i].a, segs[j].b) ||
                              close(segs[i].b, segs[j].a) || close(segs[i].b, segs[j].b)))
          {
            comp[j] = c.components;
            stack.push_back(j);
          }
      }
      c.components++;
      c.spanning += spans(t);
    }
    return c;
  }

  // spanning components of the set of grid cells the segments pass through
  int raster_spanning(const std::vector<Segment2>& segs, double R, double h, double offset)
  {
    const double lo = -R - offset;
    const int n = static_cast<int>(std::ceil((2 * R + 2 * offset) / h)) + 1;
    auto cell = [&](double v) { return std::clamp(static_cast<int>(std::floor((v - lo) / h)), 0, n - 1); };
    std::vector<char> on(static_cast<size_t>(n) * n, 0);
    for (const Segment2& s : segs)
    {
      const double len = std::hypot(s.b.x1 - s.a.x1, s.b.x3 - s.a.x3);
      const int steps = std::max(1, static_cast<int>(std::ceil(len / (h / 4))));
      for (int k = 0; k <= steps; k++)
      {
        const double t = static_cast<double>(k) / steps;
        on[static_cast<size_t>(cell(s.a.x1 + t * (s.b.x1 - s.a.x1))) * n + cell(s.a.x3 + t * (s.b.x3 - s.a.x3))] = 1;
      }
    }
    const int first = cell(-R + h / 2), last = cell(R - h / 2);
    std::vector<int> label(on.size(), -1);
    int spanning = 0, next = 0;
    for (size_t start = 0; start < on.size(); start++)
    {
      if (!on[start] || label[start] >= 0) continue;
      std::array<bool, 4> t{};
      std::vector<size_t> stack{start};
      label[start] = next;
      while (!stack.empty())
      {
        size_t v = stack.back();
        stack.pop_back();
        const int i = static_cast<int>(v / n), j = static_cast<int>(v % n);
        t[0] = t[0] || i <= first;
        t[1] = t[1] || i >= last;
        t[2] = t[2] || j <= first;
        t[3] = t[3] || j >= last;
        const int di[] = {1, -1, 0, 0}, dj[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; k++)
        {
          const int a = i + di[k], b = j + dj[k];
          if (a < 0 || b < 0 || a >= n || b >= n) continue;
          const size_t w = static_cast<size_t>(a) * n + b;
          if (on[w] && label[w] < 0)
          {
            label[w] = next;
            stack.push_back(w);
          }
        }
      }
      next++;
      spanning += spans(t);
    }
    return spanning;
  }

  // proper crossing of two segments (shared endpoints and touching excluded)
  bool cross(const Segment2& s, const Segment2& t)
  {
    auto orient = [](const Point2& p, const Point2& q, const Point2& r) {
      const double v = (q.x1 - p.x1) * (r.x3 - p.x3) - (q.x3 - p.x3) * (r.x1 - p.x1);
      return v > 1e-12 ? 1 : v < -1e-12 ? -1 : 0;
    };
    const int o1 = orient(s.a, s.b, t.a), o2 = orient(s.a, s.b, t.b);
    const int o3 = orient(t.a, t.b, s.a), o4 = orient(t.a, t.b, s.b);
    return o1 * o2 < 0 && o3 * o4 < 0;
  }

  template<class F>
  ErrorKind kind_of(F&& f)
  {
    try
    {
      f();
    }
    catch (const Error& e)
    {
      return e.kind();
    }
    return ErrorKind::Audit;
  }
}

TEST_SUITE("surface")
{
  TEST_CASE("exact checks")
  {
    for (int ex : {1, 2})
    {
      CAPTURE(ex);
      PLSurface S = build_surface(ex);
      CHECK(holes_in_unit_square(S));
      SaddleLevels sl = saddle_levels(S);
      CHECK(sl.values.size() == 6);
      CHECK(sl.distinct);
      CHECK(sl.collisions.empty());
      EulerReport e = euler_characteristic(S);
      CHECK(e.closed);
      CHECK(e.euler == -4);
      CHECK(e.genus == 3);
      CHECK(in_lattice({pure_x2_translation(S)}, 3 * pure_x2_translation(S)));
      CHECK_FALSE(in_lattice({pure_x2_translation(S)}, pure_x2_translation(S) / 2));
    }
    PLSurface S = build_surface(1);
    Vec3 p = printed_symmetry_centre(S);
    Vec3 found{Rational(1, 2), p[1], Rational(3, 4)};
    CHECK(check_central_symmetry(S, found));
    // shifting the centre along x2 by a non-period breaks the symmetry
    Vec3 shifted{found[0], found[1] + Rational(1, 7), found[2]};
    CHECK_FALSE(check_central_symmetry(S, shifted));
  }

  TEST_CASE("tracer errors")
  {
    PLSurface S = build_surface(1);
    CHECK(kind_of([&] { trace_section(S, 0.3, 0, 1e-9); }) == ErrorKind::EmptyWindow);
    const double saddle = to_double(saddle_levels(S).values[0]);
    CHECK(kind_of([&] { trace_section(S, saddle, 5, 1e-9); }) == ErrorKind::NearSaddle);
    CHECK(kind_of([&] { trace_section(S, saddle + to_double(S.period), 5, 1e-9); }) == ErrorKind::NearSaddle);
    auto levels = random_levels(S, 50, 3, 1e-9);
    CHECK(levels.size() == 50);
    for (double y : levels) CHECK_NOTHROW(trace_section(S, y, 2, 1e-9));
  }

  TEST_CASE("tracer against brute force and raster oracles")
  {
    const double R = 6, eps = 1e-9;
    for (int ex : {1, 2})
    {
      PLSurface S = build_surface(ex);
      for (double y : random_levels(S, 8, 101 + ex, eps))
      {
        CAPTURE(ex);
        CAPTURE(y);
        auto comps = trace_section(S, y, R, eps);
        Census c = component_census(comps, R);
        auto segs = section_segments(S, y, R, eps);
        Counts bf = brute_force(segs, R, 1e-7);
        CHECK(bf.components == static_cast<int>(comps.size()));
        CHECK(bf.spanning == c.spanning);
        CHECK(raster_spanning(segs, R, 0.05, 0.0137) == c.spanning);
        CHECK(c.closed + c.clipped + c.spanning == static_cast<int>(comps.size()));
      }
    }
  }

  TEST_CASE("periodicity and embeddedness")
  {
    const double R = 4, eps = 1e-9;
    PLSurface S = build_surface(1);
    const double P = to_double(pure_x2_translation(S));
    for (double y : random_levels(S, 5, 9, eps))
    {
      CAPTURE(y);
      Census c0 = component_census(trace_section(S, y, R, eps), R);
      Census c1 = component_census(trace_section(S, y + P, R, eps), R);
      CHECK(c0.spanning == c1.spanning);
      CHECK(c0.clipped == c1.clipped);
      CHECK(c0.closed == c1.closed);

      // distinct components never cross
      auto comps = trace_section(S, y, R, eps);
      std::vector<std::pair<Segment2, size_t>> all;
      for (size_t k = 0; k < comps.size(); k++)
        for (const auto& pl : comps[k].polylines)
          for (size_t i = 1; i < pl.size(); i++) all.push_back({{pl[i - 1], pl[i]}, k});
      int crossings = 0;
      for (size_t i = 0; i < all.size(); i++)
        for (size_t j = i + 1; j < all.size(); j++)
          if (all[i].second != all[j].second && cross(all[i].first, all[j].first)) crossings++;
      CHECK(crossings == 0);
    }
  }
}
