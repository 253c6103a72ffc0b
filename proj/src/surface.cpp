#include "thinsec/surface.hpp"

#include "thinsec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <tuple>

namespace thinsec
{
  namespace
  {
    Rational q(long n, long d) { return Rational(n, d); }

    const FieldElement& param(const std::vector<NamedValue>& p, const std::string& name)
    {
      for (const auto& v : p)
        if (v.name == name) return v.value;
      throw Error(ErrorKind::PreconditionFailed, "missing parameter " + name);
    }

    Rational floor_q(const Rational& x)
    {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      return Rational(f);
    }

    Rational rational_of(const FieldElement& x)
    {
      if (!x.is_rational()) throw Error(ErrorKind::PreconditionFailed, "x1 and x3 coordinates must be rational");
      return x.rational_value();
    }

    // x2 translation of e2, the lattice vector with unit x1 component
    struct Frame
    {
      FieldElement shift_x;  // e2.y
      FieldElement shift_z;  // e3.y
      FieldElement P;
    };

    Frame frame_of(const PLSurface& S)
    {
      return {S.lattice[1][1], S.lattice[2][1], S.period};
    }

    // rectangle at height z modulo the lattice: z in [0,1), x_lo in [0,1), y_lo in [0,P)
    struct CanonRect
    {
      Rational z_lo, z_hi;
      Rational x_lo, x_hi;
      FieldElement y_lo, y_hi;
    };

    bool operator<(const CanonRect& a, const CanonRect& b)
    {
      if (a.z_lo != b.z_lo) return a.z_lo < b.z_lo;
      if (a.z_hi != b.z_hi) return a.z_hi < b.z_hi;
      if (a.x_lo != b.x_lo) return a.x_lo < b.x_lo;
      if (a.x_hi != b.x_hi) return a.x_hi < b.x_hi;
      if (a.y_lo != b.y_lo) return a.y_lo < b.y_lo;
      return a.y_hi < b.y_hi;
    }

    bool operator==(const CanonRect& a, const CanonRect& b)
    {
      return a.z_lo == b.z_lo && a.z_hi == b.z_hi && a.x_lo == b.x_lo && a.x_hi == b.x_hi && a.y_lo == b.y_lo &&
             a.y_hi == b.y_hi;
    }

    CanonRect canonical(const Frame& F, Rational z_lo, Rational z_hi, Rational x_lo, Rational x_hi, FieldElement y_lo,
                        FieldElement y_hi)
    {
      Rational k = floor_q(z_lo);
      z_lo -= k;
      z_hi -= k;
      y_lo -= k * F.shift_z;
      y_hi -= k * F.shift_z;
      Rational n = floor_q(x_lo);
      x_lo -= n;
      x_hi -= n;
      y_lo -= n * F.shift_x;
      y_hi -= n * F.shift_x;
      long m = floor_div(y_lo, F.P);
      y_lo -= Rational(m) * F.P;
      y_hi -= Rational(m) * F.P;
      return {z_lo, z_hi, x_lo, x_hi, y_lo, y_hi};
    }

    // the z values where a wall list must be cut so that pieces compare one to one
    std::vector<CanonRect> wall_cells(const PLSurface& S, const Frame& F, const std::vector<Rational>& cuts,
                                      bool reflect, const Vec3& p)
    {
      std::vector<CanonRect> out;
      Rational px = reflect ? rational_of(p[0]) : Rational(0);
      Rational pz = reflect ? rational_of(p[2]) : Rational(0);
      for (const WallPiece& w : S.walls)
      {
        const Rect& r = S.rects[static_cast<size_t>(w.rect)];
        Rational x_lo = rational_of(r.x_lo), x_hi = rational_of(r.x_hi);
        Rational z_lo = w.z_lo, z_hi = w.z_hi;
        FieldElement y_lo = r.y_lo, y_hi = r.y_hi;
        if (reflect)
        {
          std::tie(x_lo, x_hi) = std::pair<Rational, Rational>(2 * px - x_hi, 2 * px - x_lo);
          std::tie(z_lo, z_hi) = std::pair<Rational, Rational>(2 * pz - z_hi, 2 * pz - z_lo);
          std::tie(y_lo, y_hi) = std::pair(2 * p[1] - y_hi, 2 * p[1] - y_lo);
        }
        // cut points are given modulo 1
        std::vector<Rational> pts{z_lo, z_hi};
        for (Rational k = floor_q(z_lo); k <= z_hi; k += 1)
          for (const Rational& c : cuts)
            if (z_lo < k + c && k + c < z_hi) pts.push_back(k + c);
        std::sort(pts.begin(), pts.end());
        for (size_t i = 0; i + 1 < pts.size(); i++)
          out.push_back(canonical(F, pts[i], pts[i + 1], x_lo, x_hi, y_lo, y_hi));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::vector<std::vector<CanonRect>> plate_cells(const PLSurface& S, const Frame& F, bool reflect, const Vec3& p)
    {
      std::vector<std::vector<CanonRect>> out;
      Rational px = reflect ? rational_of(p[0]) : Rational(0);
      Rational pz = reflect ? rational_of(p[2]) : Rational(0);
      for (const HorizontalPiece& h : S.horizontals)
      {
        Rational z = reflect ? 2 * pz - h.z : h.z;
        std::vector<CanonRect> holes;
        for (int i : h.holes)
        {
          const Rect& r = S.rects[static_cast<size_t>(i)];
          Rational x_lo = rational_of(r.x_lo), x_hi = rational_of(r.x_hi);
          FieldElement y_lo = r.y_lo, y_hi = r.y_hi;
          if (reflect)
          {
            std::tie(x_lo, x_hi) = std::pair<Rational, Rational>(2 * px - x_hi, 2 * px - x_lo);
            std::tie(y_lo, y_hi) = std::pair(2 * p[1] - y_hi, 2 * p[1] - y_lo);
          }
          holes.push_back(canonical(F, z, z, x_lo, x_hi, y_lo, y_hi));
        }
        std::sort(holes.begin(), holes.end());
        out.push_back(std::move(holes));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    // tube index per wall: walls whose ends coincide modulo the lattice form one tube
    std::vector<int> wall_tubes(const PLSurface& S, const Frame& F)
    {
      std::vector<int> tube(S.walls.size());
      for (size_t w = 0; w < tube.size(); w++) tube[w] = static_cast<int>(w);
      std::function<int(int)> find = [&](int x) {
        auto& t = tube[static_cast<size_t>(x)];
        return t == x ? x : t = find(t);
      };
      auto end = [&](const WallPiece& w, bool top) {
        const Rect& r = S.rects[static_cast<size_t>(w.rect)];
        Rational z = top ? w.z_hi : w.z_lo;
        return canonical(F, z, z, rational_of(r.x_lo), rational_of(r.x_hi), r.y_lo, r.y_hi);
      };
      for (size_t i = 0; i < S.walls.size(); i++)
        for (size_t j = 0; j < S.walls.size(); j++)
          if (i != j && end(S.walls[i], true) == end(S.walls[j], false))
            tube[static_cast<size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
      for (size_t w = 0; w < tube.size(); w++) tube[w] = find(static_cast<int>(w));
      return tube;
    }

    std::vector<Rational> coefficients(const FieldElement& x, int degree)
    {
      std::vector<Rational> v(static_cast<size_t>(degree), Rational(0));
      const auto& c = x.poly().coeffs();
      for (size_t i = 0; i < c.size() && i < v.size(); i++) v[i] = c[i];
      return v;
    }
  }

  long floor_div(const FieldElement& y, const FieldElement& P)
  {
    if (sign_of(P) <= 0) throw Error(ErrorKind::PreconditionFailed, "period must be positive");
    auto m = static_cast<long>(std::floor(to_double(y) / to_double(P)));
    while (y - Rational(m) * P < 0) m--;
    while (y - Rational(m + 1) * P >= 0) m++;
    return m;
  }

  PLSurface build_surface(int example)
  {
    PLSurface S;
    S.example = example;
    FieldElement a, b, c, lo2, lo4;
    if (example == 1)
    {
      S.parameters = s1_parameters();
      a = param(S.parameters, "a");
      b = param(S.parameters, "b");
      c = param(S.parameters, "c");
      const FieldElement& u = param(S.parameters, "u");
      lo2 = u;
      lo4 = a + b - u;
    }
    else if (example == 2)
    {
      S.parameters = s2_parameters();
      a = param(S.parameters, "a");
      b = param(S.parameters, "b");
      c = param(S.parameters, "c");
      lo2 = param(S.parameters, "d");
      lo4 = param(S.parameters, "e");
    }
    else
      throw Error(ErrorKind::PreconditionFailed, "example must be 1 or 2");

    S.period = a + b + 2 * c;
    S.rects = {{0, 1, 0, S.period},
               {q(1, 5), q(2, 5), lo2, lo2 + c},
               {q(3, 5), q(4, 5), a, a + c},
               {q(1, 5), q(2, 5), lo4, lo4 + c}};
    S.rect_names = {"T1", "T2", "T3", "T4"};
    S.horizontals = {{q(1, 4), {1, 2}}, {q(3, 4), {2, 3}}};
    S.walls = {{1, 0, q(1, 4)}, {2, q(1, 4), q(3, 4)}, {3, q(3, 4), 1}};
    // e3 carries the top of the T4 tube onto the bottom of the T2 tube
    S.lattice = {Vec3{1, -b - c, 0}, Vec3{1, a + c, 0}, Vec3{0, lo4 - lo2, 1}};
    return S;
  }

  bool holes_in_unit_square(const PLSurface& S)
  {
    for (size_t i = 1; i < S.rects.size(); i++)
    {
      const Rect& r = S.rects[i];
      if (r.x_lo < 0 || r.x_hi > 1 || r.y_lo < 0 || r.y_hi > 1) return false;
    }
    return true;
  }

  bool in_lattice(const std::vector<FieldElement>& generators, const FieldElement& x)
  {
    int d = 1;
    for (const auto& g : generators)
      if (g.field()) d = std::max(d, g.field()->degree());
    if (x.field()) d = std::max(d, x.field()->degree());
    // clear denominators, then integer row echelon form of the generators
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : generators) rows.push_back(coefficients(g, d));
    std::vector<Rational> target = coefficients(x, d);
    Integer den = 1;
    for (const auto& r : rows)
      for (const auto& v : r) den = lcm(den, Integer(v.get_den()));
    for (const auto& v : target) den = lcm(den, Integer(v.get_den()));
    std::vector<std::vector<Integer>> M;
    for (const auto& r : rows)
    {
      std::vector<Integer> ir;
      for (const auto& v : r) ir.push_back(Integer(v * den));
      M.push_back(std::move(ir));
    }
    std::vector<Integer> t;
    for (const auto& v : target) t.push_back(Integer(v * den));

    size_t top = 0;
    for (int col = 0; col < d && top < M.size(); col++)
    {
      // Euclid on the column until one row carries the gcd
      for (;;)
      {
        size_t piv = M.size();
        for (size_t i = top; i < M.size(); i++)
          if (M[i][static_cast<size_t>(col)] != 0 &&
              (piv == M.size() || abs(M[i][static_cast<size_t>(col)]) < abs(M[piv][static_cast<size_t>(col)])))
            piv = i;
        if (piv == M.size()) break;
        std::swap(M[top], M[piv]);
        bool clean = true;
        for (size_t i = top + 1; i < M.size(); i++)
        {
          Integer f = M[i][static_cast<size_t>(col)] / M[top][static_cast<size_t>(col)];
          for (int k = 0; k < d; k++) M[i][static_cast<size_t>(k)] -= f * M[top][static_cast<size_t>(k)];
          if (M[i][static_cast<size_t>(col)] != 0) clean = false;
        }
        if (clean)
        {
          const Integer& pv = M[top][static_cast<size_t>(col)];
          if (t[static_cast<size_t>(col)] % pv != 0) return false;
          Integer f = t[static_cast<size_t>(col)] / pv;
          for (int k = 0; k < d; k++) t[static_cast<size_t>(k)] -= f * M[top][static_cast<size_t>(k)];
          top++;
          break;
        }
      }
      if (t[static_cast<size_t>(col)] != 0) return false;
    }
    return std::all_of(t.begin(), t.end(), [](const Integer& v) { return v == 0; });
  }

  FieldElement pure_x2_translation(const PLSurface& S)
  {
    // integer combination of e1, e2, e3 with vanishing x1 and x3 components
    RatMatrix A(2, 3);
    for (int k = 0; k < 3; k++)
    {
      A(0, k) = rational_of(S.lattice[static_cast<size_t>(k)][0]);
      A(1, k) = rational_of(S.lattice[static_cast<size_t>(k)][2]);
    }
    RatMatrix N = nullspace<Rational>(A);
    if (N.cols() != 1) throw Error(ErrorKind::PreconditionFailed, "lattice must have a rank one x2 sublattice");
    Integer den = 1, g = 0;
    for (int k = 0; k < 3; k++) den = lcm(den, Integer(N(k, 0).get_den()));
    for (int k = 0; k < 3; k++) g = gcd(g, Integer(N(k, 0) * den));
    FieldElement t = 0;
    for (int k = 0; k < 3; k++) t += Rational(Integer(N(k, 0) * den) / g) * S.lattice[static_cast<size_t>(k)][1];
    return sign_of(t) < 0 ? -t : t;
  }

  SaddleLevels saddle_levels(const PLSurface& S)
  {
    SaddleLevels out;
    const Frame F = frame_of(S);
    const std::vector<int> tube = wall_tubes(S, F);
    for (size_t i = 1; i < S.rects.size(); i++)
    {
      // the edge belongs to the tube of its wall; a hole without a wall is its own saddle pair
      int owner = -1 - static_cast<int>(i);
      for (size_t w = 0; w < S.walls.size(); w++)
        if (S.walls[w].rect == static_cast<int>(i)) owner = tube[w];
      for (int side : {0, 1})
      {
        out.values.push_back(side == 0 ? S.rects[i].y_lo : S.rects[i].y_hi);
        out.labels.push_back(S.rect_names[i] + (side == 0 ? ".bottom" : ".top"));
        out.saddle.push_back(2 * owner + side);
      }
    }
    std::vector<int> ids = out.saddle;
    std::sort(ids.begin(), ids.end());
    out.count = static_cast<int>(std::unique(ids.begin(), ids.end()) - ids.begin());
    const std::vector<FieldElement> gens{pure_x2_translation(S)};
    for (size_t i = 0; i < out.values.size(); i++)
      for (size_t j = i + 1; j < out.values.size(); j++)
        if (in_lattice(gens, out.values[i] - out.values[j]))
        {
          out.distinct = false;
          out.collisions.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return out;
  }

  Vec3 printed_symmetry_centre(const PLSurface& S)
  {
    const auto& p = S.parameters;
    FieldElement y = (2 * param(p, "a") + param(p, "c") + param(p, "b") - param(p, "u")) / 2;
    return {Rational(3, 10), y, Rational(1, 4)};
  }

  bool check_central_symmetry(const PLSurface& S, const Vec3& p)
  {
    const Frame F = frame_of(S);
    Rational pz = rational_of(p[2]);
    std::vector<Rational> cuts;
    for (const WallPiece& w : S.walls)
      for (const Rational& z : std::initializer_list<Rational>{w.z_lo, w.z_hi, 2 * pz - w.z_lo, 2 * pz - w.z_hi}) cuts.push_back(z - floor_q(z));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    if (plate_cells(S, F, false, p) != plate_cells(S, F, true, p)) return false;
    return wall_cells(S, F, cuts, false, p) == wall_cells(S, F, cuts, true, p);
  }

  EulerReport euler_characteristic(const PLSurface& S)
  {
    const Frame F = frame_of(S);
    EulerReport rep;
    auto mod_p = [&](FieldElement y) { return y - Rational(floor_div(y, F.P)) * F.P; };

    // circles of every plate sit at the x1 values of hole sides
    std::vector<Rational> xs{0};
    for (size_t i = 1; i < S.rects.size(); i++)
      for (const FieldElement& x : {S.rects[i].x_lo, S.rects[i].x_hi})
      {
        Rational v = rational_of(x);
        if (v < 0 || v >= 1) throw Error(ErrorKind::PreconditionFailed, "hole outside the unit strip");
        xs.push_back(v);
      }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const size_t nx = xs.size();
    auto strip_of = [&](const Rect& r) -> size_t {
      Rational lo = rational_of(r.x_lo), hi = rational_of(r.x_hi);
      for (size_t i = 0; i < nx; i++)
        if (xs[i] == lo && (i + 1 < nx ? xs[i + 1] : Rational(1)) == hi) return i;
      throw Error(ErrorKind::PreconditionFailed, "a hole must fill exactly one strip");
    };

    using YSet = std::vector<FieldElement>;
    auto insert = [](YSet& s, const FieldElement& y) {
      if (std::find(s.begin(), s.end(), y) == s.end()) s.push_back(y);
    };

    // wall ends must land on a plate hole at that height or on another wall end
    struct End
    {
      int wall;
      bool top;
      CanonRect where;
    };
    std::vector<End> ends;
    for (size_t w = 0; w < S.walls.size(); w++)
    {
      const WallPiece& wp = S.walls[w];
      const Rect& r = S.rects[static_cast<size_t>(wp.rect)];
      for (bool top : {false, true})
      {
        Rational z = top ? wp.z_hi : wp.z_lo;
        ends.push_back({static_cast<int>(w), top,
                        canonical(F, z, z, rational_of(r.x_lo), rational_of(r.x_hi), r.y_lo, r.y_hi)});
      }
    }
    // plate index or -1 for each end, and the partner end for wall-to-wall joints
    std::vector<int> plate_of(ends.size(), -1), partner(ends.size(), -1);
    std::vector<std::vector<bool>> hole_used(S.horizontals.size());
    for (size_t h = 0; h < S.horizontals.size(); h++) hole_used[h].assign(S.horizontals[h].holes.size(), false);
    for (size_t e = 0; e < ends.size(); e++)
    {
      for (size_t h = 0; h < S.horizontals.size() && plate_of[e] < 0; h++)
      {
        const auto& hp = S.horizontals[h];
        for (size_t k = 0; k < hp.holes.size(); k++)
        {
          const Rect& r = S.rects[static_cast<size_t>(hp.holes[k])];
          if (!(canonical(F, hp.z, hp.z, rational_of(r.x_lo), rational_of(r.x_hi), r.y_lo, r.y_hi) == ends[e].where))
            continue;
          if (hole_used[h][k])
          {
            rep.note = "two walls on one hole edge";
            return rep;
          }
          hole_used[h][k] = true;
          plate_of[e] = static_cast<int>(h);
          break;
        }
      }
      if (plate_of[e] >= 0) continue;
      for (size_t f = 0; f < ends.size(); f++)
        if (f != e && ends[f].top != ends[e].top && ends[f].where == ends[e].where) partner[e] = static_cast<int>(f);
      if (partner[e] < 0)
      {
        rep.note = "free wall end";
        return rep;
      }
    }
    for (const auto& used : hole_used)
      if (std::find(used.begin(), used.end(), false) != used.end())
      {
        rep.note = "hole without a wall";
        return rep;
      }
    rep.closed = true;

    // horizontal edge heights per plate and strip; at least one per strip so
    // that every face is a disk
    std::vector<std::vector<YSet>> H(S.horizontals.size(), std::vector<YSet>(nx));
    for (size_t h = 0; h < S.horizontals.size(); h++)
    {
      for (int i : S.horizontals[h].holes)
      {
        const Rect& r = S.rects[static_cast<size_t>(i)];
        size_t s = strip_of(r);
        insert(H[h][s], mod_p(r.y_lo));
        insert(H[h][s], mod_p(r.y_hi));
      }
      for (auto& hs : H[h])
        if (hs.empty()) hs.push_back(FieldElement(0));
    }
    // vertices on circle i come from the strips on both sides
    std::vector<std::vector<YSet>> V(S.horizontals.size(), std::vector<YSet>(nx));
    for (size_t h = 0; h < S.horizontals.size(); h++)
      for (size_t i = 0; i < nx; i++)
      {
        for (const auto& y : H[h][i]) insert(V[h][i], y);
        const auto& left = H[h][(i + nx - 1) % nx];
        for (const auto& y : left) insert(V[h][i], i == 0 ? mod_p(y - F.shift_x) : y);
      }

    // a tube is a chain of walls joined end to end; its side subdivisions
    // (offsets above the hole bottom) must agree along the whole tube
    const std::vector<int> tube = wall_tubes(S, F);
    auto find = [&](int w) { return tube[static_cast<size_t>(w)]; };
    std::map<int, std::array<YSet, 2>> offsets;
    auto side_vertices = [&](size_t h, const Rect& r, int side) {
      size_t s = strip_of(r);
      size_t circle = side == 0 ? s : (s + 1) % nx;
      FieldElement lo = mod_p(r.y_lo);
      // circle 0 seen from the right side of the last strip is shifted by e2
      FieldElement shift = (side == 1 && circle == 0) ? F.shift_x : FieldElement(0);
      std::vector<FieldElement> out;
      for (const auto& y : V[h][circle])
      {
        FieldElement off = mod_p(y + shift - lo);
        if (off > 0 && off < r.y_hi - r.y_lo) out.push_back(off);
      }
      return std::pair(circle, out);
    };
    for (size_t e = 0; e < ends.size(); e++)
      if (plate_of[e] >= 0)
      {
        const Rect& r = S.rects[static_cast<size_t>(S.walls[static_cast<size_t>(ends[e].wall)].rect)];
        for (int side : {0, 1})
          for (const auto& off : side_vertices(static_cast<size_t>(plate_of[e]), r, side).second)
            insert(offsets[find(ends[e].wall)][static_cast<size_t>(side)], off);
      }
    for (size_t e = 0; e < ends.size(); e++)
      if (plate_of[e] >= 0)
      {
        const Rect& r = S.rects[static_cast<size_t>(S.walls[static_cast<size_t>(ends[e].wall)].rect)];
        for (int side : {0, 1})
        {
          size_t circle = side_vertices(static_cast<size_t>(plate_of[e]), r, side).first;
          FieldElement shift = (side == 1 && circle == 0) ? F.shift_x : FieldElement(0);
          for (const auto& off : offsets[find(ends[e].wall)][static_cast<size_t>(side)])
            insert(V[static_cast<size_t>(plate_of[e])][circle], mod_p(r.y_lo + off - shift));
        }
      }

    // plates: count the open cells that survive the holes
    for (size_t h = 0; h < S.horizontals.size(); h++)
    {
      auto in_hole = [&](const Rational& x, const FieldElement& y) {
        for (int i : S.horizontals[h].holes)
        {
          const Rect& r = S.rects[static_cast<size_t>(i)];
          FieldElement yy = mod_p(y - r.y_lo) + r.y_lo;
          if (r.x_lo < x && x < r.x_hi && r.y_lo < yy && yy < r.y_hi) return true;
        }
        return false;
      };
      for (size_t i = 0; i < nx; i++)
      {
        YSet v = V[h][i];
        std::sort(v.begin(), v.end());
        for (size_t k = 0; k < v.size(); k++)
        {
          FieldElement next = k + 1 < v.size() ? v[k + 1] : v[0] + F.P;
          if (!in_hole(xs[i], v[k])) rep.vertices++;
          if (!in_hole(xs[i], (v[k] + next) / 2)) rep.edges++;
        }
        YSet hs = H[h][i];
        std::sort(hs.begin(), hs.end());
        Rational xm = (xs[i] + (i + 1 < nx ? xs[i + 1] : Rational(1))) / 2;
        for (size_t k = 0; k < hs.size(); k++)
        {
          FieldElement next = k + 1 < hs.size() ? hs[k + 1] : hs[0] + F.P;
          if (!in_hole(xm, hs[k])) rep.edges++;
          if (!in_hole(xm, (hs[k] + next) / 2)) rep.faces++;
        }
      }
    }
    // walls: open vertical edges over the vertices of the hole boundary, open
    // faces over its edges; a joint between two walls adds the boundary circle
    for (size_t w = 0; w < S.walls.size(); w++)
    {
      const auto& off = offsets[find(static_cast<int>(w))];
      long n = 4 + static_cast<long>(off[0].size() + off[1].size());
      rep.edges += n;
      rep.faces += n;
    }
    for (size_t e = 0; e < ends.size(); e++)
      if (partner[e] >= 0 && ends[e].top)
      {
        const auto& off = offsets[find(ends[e].wall)];
        long n = 4 + static_cast<long>(off[0].size() + off[1].size());
        rep.vertices += n;
        rep.edges += n;
      }
    rep.euler = rep.vertices - rep.edges + rep.faces;
    if (rep.euler % 2 == 0 && rep.euler <= 2) rep.genus = static_cast<int>((2 - rep.euler) / 2);
    return rep;
  }
}
