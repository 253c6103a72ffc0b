// Helpers shared by the unit tests and the acceptance runner: random small
// systems on a rational grid, exact orbit closures, and the move property
// checks.  Everything is seeded.
#ifndef THINSEC_TESTS_SUPPORT_HPP
#define THINSEC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "thinsec/band_complex.hpp"
#include "thinsec/cycle.hpp"
#include "thinsec/iis.hpp"
#include "thinsec/linalg.hpp"

namespace thinsec::testing
{
  // endpoints live on this grid; sample points are taken off it so their
  // orbits never meet a critical point
  constexpr long kGrid = 60;
  constexpr long kOffGrid = 7;

  inline Rational grid(long k) { return Rational(k, kGrid); }

  inline long uniform(std::mt19937_64& rng, long lo, long hi)
  {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  }

  //! system over Q with support [0, 1] and 2..4 pairs on the grid; the
  //! support ends are usually attained so reductions have something to do
  inline IIS random_iis(std::mt19937_64& rng)
  {
    const int n = static_cast<int>(uniform(rng, 2, 4));
    std::vector<IntervalPair> pairs;
    for (int i = 0; i < n; i++)
    {
      long w = uniform(rng, 3, kGrid / 2);
      long l = uniform(rng, 0, kGrid - w), r = uniform(rng, 0, kGrid - w);
      if (i == 0 && uniform(rng, 0, 3) > 0) l = 0;
      if (i == 1 && uniform(rng, 0, 3) > 0) r = kGrid - w;
      pairs.push_back({{grid(l), grid(l + w)}, {grid(r), grid(r + w)}});
    }
    return make_iis(nullptr, Rational(0), Rational(1), std::move(pairs));
  }

  //! a point of [A, B] off the grid
  inline FieldElement random_point(std::mt19937_64& rng, const FieldElement& A, const FieldElement& B)
  {
    const long den = kGrid * kOffGrid;
    Rational a = A.rational_value(), b = B.rational_value();
    for (;;)
    {
      Rational x = a + (b - a) * Rational(uniform(rng, 1, den - 1), den);
      // reject points on the grid
      Rational on = x * kGrid;
      on.canonicalize();
      if (on.get_den() != 1) return FieldElement(x);
    }
  }

  using PointSet = std::set<FieldElement, ResidueLess>;

  //! the whole (finite) orbit of x; max_vertices guards against surprises
  inline PointSet full_orbit(const IIS& s, const FieldElement& x, size_t max_vertices = 100000)
  {
    PointSet seen{x};
    std::vector<FieldElement> todo{x};
    while (!todo.empty() && seen.size() < max_vertices)
    {
      FieldElement v = todo.back();
      todo.pop_back();
      for (const OrbitEdge& e : orbit_neighbors(s, v))
        if (seen.insert(e.y).second) todo.push_back(e.y);
    }
    return seen;
  }

  //! neighbours of x across the bands of a complex
  inline std::vector<std::pair<FieldElement, int>> band_neighbors(const BandComplex& X, const FieldElement& x)
  {
    std::vector<std::pair<FieldElement, int>> out;
    for (size_t i = 0; i < X.bands.size(); i++)
    {
      const Band& b = X.bands[i];
      if (b.bottom <= x && x <= b.bottom + b.width)
      {
        FieldElement y = x - b.bottom + b.top;
        if (y != x) out.emplace_back(y, static_cast<int>(i));
      }
      if (b.top <= x && x <= b.top + b.width)
      {
        FieldElement y = x - b.top + b.bottom;
        if (y != x) out.emplace_back(y, static_cast<int>(i));
      }
    }
    return out;
  }

  inline PointSet full_band_orbit(const BandComplex& X, const FieldElement& x, size_t max_vertices = 100000)
  {
    PointSet seen{x};
    std::vector<FieldElement> todo{x};
    while (!todo.empty() && seen.size() < max_vertices)
    {
      FieldElement v = todo.back();
      todo.pop_back();
      for (const auto& [y, band] : band_neighbors(X, v))
        if (seen.insert(y).second) todo.push_back(y);
    }
    return seen;
  }

  inline bool in_support(const BandComplex& X, const FieldElement& x)
  {
    return arc_containing(X, x) >= 0;
  }

  inline FieldElement total_width(const BandComplex& X)
  {
    FieldElement s = 0;
    for (const Band& b : X.bands) s += b.width;
    return s;
  }

  inline FieldElement width_length_mass(const BandComplex& X)
  {
    FieldElement s = 0;
    for (const Band& b : X.bands) s += b.length * b.width;
    return s;
  }

  inline bool well_formed(const BandComplex& X)
  {
    for (const auto& a : X.arcs)
      if (!(a.lo < a.hi)) return false;
    for (const Band& b : X.bands)
    {
      if (sign_of(b.width) <= 0 || sgn(b.length) <= 0) return false;
      for (const FieldElement* base : {&b.bottom, &b.top})
      {
        int ai = arc_containing(X, *base);
        if (ai < 0 || X.arcs[static_cast<size_t>(ai)].hi < *base + b.width) return false;
      }
    }
    return true;
  }

  struct PropertyReport
  {
    long checks = 0;
    long failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what)
    {
      checks++;
      if (!ok && failures++ == 0) first_failure = what;
    }
  };

  //! transmit and reduce bookkeeping plus orbit equivalence on random systems
  inline PropertyReport check_iis_moves(int systems, std::uint64_t seed, int depth = 6, int points = 4)
  {
    PropertyReport rep;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < systems; t++)
    {
      const IIS s = random_iis(rng);
      const std::string tag = "system " + std::to_string(t);
      std::vector<FieldElement> xs;
      for (int k = 0; k < points; k++) xs.push_back(random_point(rng, s.A, s.B));

      for (int i = 0; i < s.order(); i++)
        for (int j = 0; j < s.order(); j++)
          for (Member ei : {Member::Left, Member::Right})
            for (Member ej : {Member::Left, Member::Right})
            {
              if (i == j) continue;
              const Interval& mv = s.pairs[static_cast<size_t>(i)].get(ei);
              const Interval& along = s.pairs[static_cast<size_t>(j)].get(ej);
              if (mv.lo < along.lo || along.hi < mv.hi) continue;
              TransmitResult tr = transmit(s, i, ei, j, ej);
              const IIS& u = tr.system;
              bool ok = u.A == s.A && u.B == s.B;
              for (int k = 0; k < s.order(); k++)
              {
                ok = ok && u.pairs[static_cast<size_t>(k)].left.width() == s.pairs[static_cast<size_t>(k)].left.width();
                ok = ok && u.pairs[static_cast<size_t>(k)].right.width() == s.pairs[static_cast<size_t>(k)].right.width();
                if (k != i)
                  ok = ok && u.pairs[static_cast<size_t>(k)].left.lo == s.pairs[static_cast<size_t>(k)].left.lo &&
                       u.pairs[static_cast<size_t>(k)].right.lo == s.pairs[static_cast<size_t>(k)].right.lo;
              }
              const Interval& moved = u.pairs[static_cast<size_t>(i)].get(ei);
              const Interval& target = s.pairs[static_cast<size_t>(j)].get(other(ej));
              ok = ok && moved.lo == target.lo + (mv.lo - along.lo);
              ok = ok && u.pairs[static_cast<size_t>(i)].get(other(ei)).lo == s.pairs[static_cast<size_t>(i)].get(other(ei)).lo;
              ok = ok && tr.admissible_left == (along.lo == s.A) && tr.admissible_right == (along.hi == s.B);
              rep.expect(ok, tag + ": transmit bookkeeping");
              for (const FieldElement& x : xs)
              {
                // the whole orbits agree, and every depth-k slice sits in the other's 2k slice
                rep.expect(full_orbit(s, x) == full_orbit(u, x), tag + ": transmit orbit");
                for (int k = 1; k <= depth; k++)
                {
                  auto small_new = orbit_bfs(u, x, k), big_old = orbit_bfs(s, x, 2 * k);
                  PointSet old_set(big_old.vertices.begin(), big_old.vertices.end());
                  bool inside = std::all_of(small_new.vertices.begin(), small_new.vertices.end(),
                                            [&](const FieldElement& v) { return old_set.count(v) > 0; });
                  rep.expect(inside, tag + ": depth " + std::to_string(k) + " slice");
                }
              }
            }

      for (Side side : {Side::Left, Side::Right})
      {
        IIS r;
        try
        {
          r = reduce(s, side);
        }
        catch (const Error& e)
        {
          rep.expect(e.kind() == ErrorKind::PreconditionFailed, tag + ": unexpected reduce error");
          continue;
        }
        const FieldElement cut = (s.B - s.A) - (r.B - r.A);
        int changed = 0;
        bool ok = sign_of(cut) > 0;
        for (int k = 0; k < s.order(); k++)
        {
          const auto& p = s.pairs[static_cast<size_t>(k)];
          const auto& q = r.pairs[static_cast<size_t>(k)];
          if (p.left.width() != q.left.width())
          {
            changed++;
            ok = ok && p.left.width() - q.left.width() == cut && p.right.width() - q.right.width() == cut;
          }
          for (const Interval* iv : {&q.left, &q.right}) ok = ok && r.A <= iv->lo && iv->hi <= r.B;
        }
        rep.expect(ok && changed == 1, tag + ": reduce bookkeeping");
        for (const FieldElement& x0 : xs)
        {
          if (x0 < r.A || r.B < x0) continue;
          PointSet before = full_orbit(s, x0), after = full_orbit(r, x0), clipped;
          for (const auto& v : before)
            if (r.A <= v && v <= r.B) clipped.insert(v);
          rep.expect(clipped == after, tag + ": reduce orbit");
        }
      }
    }
    return rep;
  }

  //! collapse, delete and merge bookkeeping plus the leaf-space proxy on
  //! complexes of random systems
  inline PropertyReport check_band_moves(int systems, std::uint64_t seed, int steps = 3, int points = 4)
  {
    PropertyReport rep;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < systems; t++)
    {
      BandComplex X = complex_from_iis(random_iis(rng));
      const std::string tag = "complex " + std::to_string(t);
      for (int step = 0; step < steps; step++)
      {
        auto free = find_free_subarcs(X);
        for (const auto& J : free)
        {
          if (J.dead) continue;
          BandComplex Y = collapse_free_subarc(X, J);
          const FieldElement len = J.hi - J.lo;
          const Band& B = X.bands[static_cast<size_t>(J.band)];
          bool ok = well_formed(Y);
          ok = ok && support_measure(Y) == support_measure(X) - len;
          ok = ok && total_width(Y) == total_width(X) - len;
          ok = ok && width_length_mass(Y) == width_length_mass(X) - len * B.length;
          long dn = static_cast<long>(Y.bands.size()) - static_cast<long>(X.bands.size());
          ok = ok && dn >= -1 && dn <= 1;
          rep.expect(ok, tag + ": collapse bookkeeping");
        }

        FieldElement dead = 0;
        for (const auto& seg : segments(X))
          if (seg.cover.empty()) dead += seg.hi - seg.lo;
        BandComplex D = delete_dead(X);
        rep.expect(support_measure(D) == support_measure(X) - dead && total_width(D) == total_width(X) && well_formed(D),
                   tag + ": delete bookkeeping");

        BandComplex M = merge_long_bands(X);
        long merges = static_cast<long>(X.bands.size()) - static_cast<long>(M.bands.size());
        rep.expect(merges >= 0 && width_length_mass(M) == width_length_mass(X) && well_formed(M) &&
                     static_cast<long>(X.arcs.size()) - static_cast<long>(M.arcs.size()) == merges,
                   tag + ": merge bookkeeping");

        BandComplex Z;
        try
        {
          Z = rips_step(X).complex;
        }
        catch (const Error& e)
        {
          rep.expect(e.kind() == ErrorKind::Halted, tag + ": unexpected rips error");
          break;
        }
        rep.expect(well_formed(Z), tag + ": rips step well formed");
        // every surviving point keeps its orbit, restricted to the survivors
        for (int k = 0; k < points && !Z.arcs.empty(); k++)
        {
          const auto& arc = Z.arcs[static_cast<size_t>(uniform(rng, 0, static_cast<long>(Z.arcs.size()) - 1))];
          FieldElement x = random_point(rng, arc.lo, arc.hi);
          PointSet before = full_band_orbit(X, x), after = full_band_orbit(Z, x), clipped;
          for (const auto& v : before)
            if (in_support(Z, v)) clipped.insert(v);
          rep.expect(clipped == after, tag + ": leaf-space proxy");
        }
        X = std::move(Z);
        if (X.bands.empty()) break;
      }
    }
    return rep;
  }

  //! the length matrix rebuilt by following leaves: the path across the
  //! start complex from a point of an end band's bottom to its top
  inline RatMatrix leaf_path_lengths(const CycleReport& r)
  {
    const BandComplex& S = r.start;
    const BandComplex& E = r.end;
    const auto n = static_cast<Eigen::Index>(E.bands.size());
    const auto m = static_cast<Eigen::Index>(S.bands.size());
    RatMatrix L = RatMatrix::Zero(n, m);
    for (Eigen::Index li = 0; li < n; li++)
    {
      const Band& b = E.bands[static_cast<size_t>(r.end_canonical.band_of_label[static_cast<size_t>(li)])];
      const FieldElement t = Rational(113, 355);
      const FieldElement x = b.bottom + b.width * t, y = b.top + b.width * t;
      std::map<FieldElement, std::pair<FieldElement, int>, ResidueLess> parent;
      PointSet seen{x};
      std::vector<FieldElement> level{x};
      bool found = false;
      for (int d = 0; d < 64 && !found && !level.empty(); d++)
      {
        std::vector<FieldElement> next;
        for (const auto& v : level)
          for (const auto& [w, band] : band_neighbors(S, v))
            if (seen.insert(w).second)
            {
              parent.emplace(w, std::make_pair(v, band));
              if (w == y) found = true;
              next.push_back(w);
            }
        level = std::move(next);
      }
      if (!found) throw Error(ErrorKind::Audit, "leaf path not found");
      for (FieldElement v = y; v != x;)
      {
        auto [from, band] = parent.at(v);
        L(li, r.start_canonical.label_of_band[static_cast<size_t>(band)]) += 1;
        v = from;
      }
    }
    return L;
  }
}

#endif // THINSEC_TESTS_SUPPORT_HPP
