#include "thinsec/section.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <string>

namespace thinsec
{
  namespace
  {
    struct Hole
    {
      double x_lo, x_hi, y_lo, y_hi;
    };

    struct Plate
    {
      double z;
      std::vector<int> holes;
    };

    struct Wall
    {
      int hole;
      double z_lo, z_hi;
    };

    // the surface in doubles; hole indices are rect indices minus one
    struct Numeric
    {
      std::vector<Hole> holes;
      std::vector<Plate> plates;
      std::vector<Wall> walls;
      double P = 0, shift_x = 0, shift_z = 0;
    };

    Numeric numeric(const PLSurface& S)
    {
      Numeric n;
      for (size_t i = 1; i < S.rects.size(); i++)
      {
        const Rect& r = S.rects[i];
        n.holes.push_back({to_double(r.x_lo), to_double(r.x_hi), to_double(r.y_lo), to_double(r.y_hi)});
      }
      for (const auto& h : S.horizontals)
      {
        Plate p{to_double(h.z), {}};
        for (int i : h.holes) p.holes.push_back(i - 1);
        n.plates.push_back(std::move(p));
      }
      for (const auto& w : S.walls) n.walls.push_back({w.rect - 1, to_double(w.z_lo), to_double(w.z_hi)});
      n.P = to_double(S.period);
      n.shift_x = to_double(S.lattice[1][1]);
      n.shift_z = to_double(S.lattice[2][1]);
      return n;
    }

    double wrap(double y, double P)
    {
      double r = std::fmod(y, P);
      return r < 0 ? r + P : r;
    }

    bool near_saddle(const Numeric& n, double y, double eps)
    {
      for (const Hole& h : n.holes)
        for (double e : {h.y_lo, h.y_hi})
        {
          double d = wrap(y - e, n.P);
          if (d < eps || n.P - d < eps) return true;
        }
      return false;
    }

    struct Key
    {
      long long x, z;
      bool operator<(const Key& o) const { return x != o.x ? x < o.x : z < o.z; }
    };

    struct UnionFind
    {
      std::vector<size_t> parent;
      explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), size_t{0}); }
      size_t find(size_t x)
      {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      }
      void join(size_t a, size_t b) { parent[find(a)] = find(b); }
    };
  }

  const char* window_class_name(WindowClass c)
  {
    switch (c)
    {
      case WindowClass::Spanning: return "spanning";
      case WindowClass::Clipped: return "boundary-clipped";
      case WindowClass::Closed: return "closed";
    }
    return "?";
  }

  double default_eps()
  {
    if (const char* env = std::getenv("THINSECTIONS_PRECISION"))
    {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && *end == '\0' && v > 0 && std::isfinite(v)) return v;
    }
    return 1e-9;
  }

  std::vector<Segment2> section_segments(const PLSurface& S, double level, double R, double eps)
  {
    if (!(R > 0) || !std::isfinite(R)) throw Error(ErrorKind::EmptyWindow, "window radius must be positive");
    const Numeric n = numeric(S);
    if (near_saddle(n, level, eps)) throw Error(ErrorKind::NearSaddle, "level " + std::to_string(level));

    std::vector<Segment2> raw;
    const long kmin = static_cast<long>(std::floor(-R)) - 1, kmax = static_cast<long>(std::ceil(R)) + 1;
    for (long k3 = kmin; k3 <= kmax; k3++)
      for (long k1 = kmin; k1 <= kmax; k1++)
      {
        // translate by k1 e2 + k3 e3 (plus a multiple of the pure x2 period)
        double y = wrap(level - static_cast<double>(k3) * n.shift_z - static_cast<double>(k1) * n.shift_x, n.P);
        // a translate whose hole edge sits on the plane is a tangency in the window
        if (near_saddle(n, y, eps))
          throw Error(ErrorKind::NearSaddle, "level " + std::to_string(level) + " meets a translated saddle");
        auto hit = [&](int h) { return n.holes[static_cast<size_t>(h)].y_lo < y && y < n.holes[static_cast<size_t>(h)].y_hi; };
        const double x0 = static_cast<double>(k1), z0 = static_cast<double>(k3);
        for (const Plate& p : n.plates)
        {
          std::vector<std::pair<double, double>> gaps;
          for (int h : p.holes)
            if (hit(h)) gaps.emplace_back(n.holes[static_cast<size_t>(h)].x_lo, n.holes[static_cast<size_t>(h)].x_hi);
          std::sort(gaps.begin(), gaps.end());
          double cur = 0;
          for (const auto& [g0, g1] : gaps)
          {
            raw.push_back({{x0 + cur, z0 + p.z}, {x0 + g0, z0 + p.z}});
            cur = g1;
          }
          raw.push_back({{x0 + cur, z0 + p.z}, {x0 + 1, z0 + p.z}});
        }
        for (const Wall& w : n.walls)
          if (hit(w.hole))
            for (double xx : {n.holes[static_cast<size_t>(w.hole)].x_lo, n.holes[static_cast<size_t>(w.hole)].x_hi})
              raw.push_back({{x0 + xx, z0 + w.z_lo}, {x0 + xx, z0 + w.z_hi}});
      }

    std::vector<Segment2> out;
    for (Segment2 s : raw)
    {
      if (s.a.x3 == s.b.x3)
      {
        if (std::fabs(s.a.x3) > R) continue;
        s.a.x1 = std::max(s.a.x1, -R);
        s.b.x1 = std::min(s.b.x1, R);
        if (s.a.x1 < s.b.x1) out.push_back(s);
      }
      else
      {
        if (std::fabs(s.a.x1) > R) continue;
        s.a.x3 = std::max(s.a.x3, -R);
        s.b.x3 = std::min(s.b.x3, R);
        if (s.a.x3 < s.b.x3) out.push_back(s);
      }
    }
    return out;
  }

  std::vector<SectionComponent> trace_section(const PLSurface& S, double level, double R, double eps)
  {
    const std::vector<Segment2> segs = section_segments(S, level, R, eps);
    std::map<Key, size_t> index;
    std::vector<Point2> pts;
    auto node = [&](const Point2& p) {
      Key k{std::llround(p.x1 / eps), std::llround(p.x3 / eps)};
      auto [it, fresh] = index.emplace(k, pts.size());
      if (fresh) pts.push_back(p);
      return it->second;
    };
    std::vector<std::pair<size_t, size_t>> edges;
    for (const auto& s : segs) edges.emplace_back(node(s.a), node(s.b));

    UnionFind uf(pts.size());
    for (const auto& [a, b] : edges) uf.join(a, b);
    std::vector<std::vector<size_t>> adj(pts.size());
    for (size_t e = 0; e < edges.size(); e++)
    {
      adj[edges[e].first].push_back(e);
      adj[edges[e].second].push_back(e);
    }

    std::map<size_t, size_t> comp_of_root;
    std::vector<SectionComponent> comps;
    std::vector<std::vector<size_t>> comp_nodes;
    for (size_t v = 0; v < pts.size(); v++)
    {
      auto [it, fresh] = comp_of_root.emplace(uf.find(v), comps.size());
      if (fresh)
      {
        comps.emplace_back();
        comp_nodes.emplace_back();
      }
      comp_nodes[it->second].push_back(v);
    }
    for (const auto& [a, b] : edges) comps[comp_of_root[uf.find(a)]].segments++;

    std::vector<bool> used(edges.size(), false);
    auto walk = [&](size_t start, std::vector<Point2>& chain) {
      size_t v = start;
      chain.push_back(pts[v]);
      for (;;)
      {
        size_t next_edge = edges.size();
        for (size_t e : adj[v])
          if (!used[e])
          {
            next_edge = e;
            break;
          }
        if (next_edge == edges.size()) return;
        used[next_edge] = true;
        v = edges[next_edge].first == v ? edges[next_edge].second : edges[next_edge].first;
        chain.push_back(pts[v]);
      }
    };

    for (size_t c = 0; c < comps.size(); c++)
    {
      SectionComponent& sc = comps[c];
      bool all_two = true;
      double xmin = INFINITY, xmax = -INFINITY, zmin = INFINITY, zmax = -INFINITY;
      for (size_t v : comp_nodes[c])
      {
        const Point2& p = pts[v];
        xmin = std::min(xmin, p.x1);
        xmax = std::max(xmax, p.x1);
        zmin = std::min(zmin, p.x3);
        zmax = std::max(zmax, p.x3);
        if (adj[v].size() != 2) all_two = false;
      }
      sc.touches = {xmin <= -R + eps, xmax >= R - eps, zmin <= -R + eps, zmax >= R - eps};
      sc.diameter = std::hypot(xmax - xmin, zmax - zmin);
      bool boundary = sc.touches[0] || sc.touches[1] || sc.touches[2] || sc.touches[3];
      if ((sc.touches[0] && sc.touches[1]) || (sc.touches[2] && sc.touches[3]))
        sc.window_class = WindowClass::Spanning;
      else if (all_two && !boundary)
        sc.window_class = WindowClass::Closed;
      else
        sc.window_class = WindowClass::Clipped;
      // open chains start at odd-degree nodes, loops anywhere
      for (size_t v : comp_nodes[c])
        if (adj[v].size() % 2 == 1)
          while (std::any_of(adj[v].begin(), adj[v].end(), [&](size_t e) { return !used[e]; }))
          {
            sc.polylines.emplace_back();
            walk(v, sc.polylines.back());
          }
      for (size_t v : comp_nodes[c])
        while (std::any_of(adj[v].begin(), adj[v].end(), [&](size_t e) { return !used[e]; }))
        {
          sc.polylines.emplace_back();
          walk(v, sc.polylines.back());
        }
    }
    return comps;
  }

  Census component_census(const std::vector<SectionComponent>& components, double R)
  {
    Census c;
    for (const auto& s : components)
    {
      switch (s.window_class)
      {
        case WindowClass::Spanning: c.spanning++; break;
        case WindowClass::Closed: c.closed++; break;
        case WindowClass::Clipped: c.clipped++; break;
      }
      if (s.diameter >= R) c.long_components++;
    }
    return c;
  }

  std::vector<double> random_levels(const PLSurface& S, int n, std::uint64_t seed, double eps)
  {
    const Numeric num = numeric(S);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, num.P);
    std::vector<double> out;
    while (static_cast<int>(out.size()) < n)
    {
      double y = U(rng);
      if (!near_saddle(num, y, eps)) out.push_back(y);
    }
    return out;
  }
}
