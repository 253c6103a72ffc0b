#include "thinsec/iis.hpp"

#include <map>
#include <set>
#include <tuple>

#include "thinsec/systems.hpp"

namespace thinsec
{
  IIS make_iis(FieldPtr field, FieldElement A, FieldElement B, std::vector<IntervalPair> pairs)
  {
    if (!(A < B)) throw Error(ErrorKind::InvalidSystem, "support must satisfy A < B");
    for (size_t i = 0; i < pairs.size(); i++)
    {
      const IntervalPair& p = pairs[i];
      const std::string tag = "pair " + std::to_string(i + 1);
      if (sign_of(p.left.width()) <= 0) throw Error(ErrorKind::InvalidSystem, tag + " has non-positive width");
      if (p.left.width() != p.right.width()) throw Error(ErrorKind::InvalidSystem, tag + " widths differ");
      for (const Interval* iv : {&p.left, &p.right})
        if (iv->lo < A || B < iv->hi) throw Error(ErrorKind::InvalidSystem, tag + " leaves the support");
    }
    return IIS{std::move(field), std::move(A), std::move(B), std::move(pairs)};
  }

  IIS build_system(SystemId id)
  {
    if (id == SystemId::S1)
    {
      auto p = s1_parameters();
      const FieldElement &a = p[0].value, &b = p[1].value, &c = p[2].value, &u = p[3].value;
      FieldElement B = a + b + c;
      return make_iis(lambda1_field(), 0, B,
                      {{{0, a}, {b + c, B}}, {{0, b}, {a + c, B}}, {{u, u + c}, {a + b - u, B - u}}});
    }
    auto p = s2_parameters();
    const FieldElement &a = p[0].value, &b = p[1].value, &c = p[2].value, &d = p[3].value, &e = p[4].value;
    FieldElement B = a + b + c;
    return make_iis(lambda2_field(), 0, B, {{{0, a}, {b + c, B}}, {{0, b}, {a + c, B}}, {{d, d + c}, {e, e + c}}});
  }

  Validation validate(const IIS& s)
  {
    Validation v;
    if (s.pairs.empty()) return v;
    // pairs are unordered, so the extremes run over both members
    FieldElement lo = s.pairs[0].left.lo, hi = s.pairs[0].left.hi, total = 0;
    for (const IntervalPair& p : s.pairs)
    {
      lo = min(lo, min(p.left.lo, p.right.lo));
      hi = max(hi, max(p.left.hi, p.right.hi));
      total += p.width();
    }
    v.balanced = lo == s.A && hi == s.B && total == s.B - s.A;
    v.symmetric = true;
    for (const IntervalPair& p : s.pairs)
    {
      bool ok = (p.left.lo - s.A == s.B - p.right.hi) || (p.right.lo - s.A == s.B - p.left.hi);
      v.symmetric = v.symmetric && ok;
    }
    return v;
  }

  const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

  TransmitResult transmit(const IIS& s, int i, Member ei, int j, Member ej)
  {
    if (i == j) throw Error(ErrorKind::SelfTransmission, "a pair cannot be transmitted along itself");
    if (i < 0 || j < 0 || i >= s.order() || j >= s.order())
      throw Error(ErrorKind::PreconditionFailed, "pair index out of range");
    const Interval& moving = s.pairs[static_cast<size_t>(i)].get(ei);
    const Interval& along = s.pairs[static_cast<size_t>(j)].get(ej);
    const Interval& target = s.pairs[static_cast<size_t>(j)].get(other(ej));
    if (moving.lo < along.lo || along.hi < moving.hi)
      throw Error(ErrorKind::NotContained, "transmitted interval is not inside the carrying interval");
    TransmitResult r{s, along.lo == s.A, along.hi == s.B};
    FieldElement shift = target.lo - along.lo;
    Interval& m = r.system.pairs[static_cast<size_t>(i)].get(ei);
    m.lo += shift;
    m.hi += shift;
    return r;
  }

  namespace
  {
    // members containing the point
    std::vector<std::pair<int, Member>> covering(const IIS& s, const FieldElement& x)
    {
      std::vector<std::pair<int, Member>> out;
      for (int i = 0; i < s.order(); i++)
        for (Member m : {Member::Left, Member::Right})
          if (s.pairs[static_cast<size_t>(i)].get(m).contains(x)) out.emplace_back(i, m);
      return out;
    }
  }

  IIS reduce(const IIS& s, Side side)
  {
    const bool right = side == Side::Right;
    const FieldElement& end = right ? s.B : s.A;
    auto cov = covering(s, end);
    if (cov.size() != 1)
      throw Error(ErrorKind::PreconditionFailed,
                  std::string("support end ") + side_name(side) + " is covered " + std::to_string(cov.size()) + " times");
    auto [pi, mem] = cov.front();
    // extreme critical point strictly inside the support
    std::optional<FieldElement> u;
    for (const IntervalPair& p : s.pairs)
      for (const Interval* iv : {&p.left, &p.right})
        for (const FieldElement* x : {&iv->lo, &iv->hi})
        {
          if (*x == end) continue;
          if (!u || (right ? *u < *x : *x < *u)) u = *x;
        }
    IIS r = s;
    IntervalPair& p = r.pairs[static_cast<size_t>(pi)];
    Interval& d = p.get(mem);
    Interval& o = p.get(other(mem));
    if (!u || !(d.lo < *u && *u < d.hi))
      throw Error(ErrorKind::PreconditionFailed, "no critical point inside the end interval");
    if (right)
    {
      FieldElement cut = s.B - *u;
      d.hi = *u;
      o.hi -= cut;
      r.B = *u;
    }
    else
    {
      FieldElement cut = *u - s.A;
      d.lo = *u;
      o.lo += cut;
      r.A = *u;
    }
    return r;
  }

  std::vector<OrbitEdge> orbit_neighbors(const IIS& s, const FieldElement& x)
  {
    std::vector<OrbitEdge> out;
    for (int i = 0; i < s.order(); i++)
    {
      const IntervalPair& p = s.pairs[static_cast<size_t>(i)];
      if (p.left.contains(x))
      {
        FieldElement y = x - p.left.lo + p.right.lo;
        if (y != x) out.push_back({x, y, i});
      }
      if (p.right.contains(x))
      {
        FieldElement y = x - p.right.lo + p.left.lo;
        if (y != x) out.push_back({x, y, i});
      }
    }
    return out;
  }

  int point_valence(const IIS& s, const FieldElement& x)
  {
    if (x < s.A || s.B < x) throw Error(ErrorKind::OutOfSupport, "point outside the support");
    return static_cast<int>(orbit_neighbors(s, x).size());
  }

  OrbitGraphSlice orbit_bfs(const IIS& s, const FieldElement& x, int depth)
  {
    if (x < s.A || s.B < x) throw Error(ErrorKind::OutOfSupport, "point outside the support");
    OrbitGraphSlice g;
    g.root = x;
    std::set<FieldElement, ResidueLess> seen{x};
    std::set<std::tuple<FieldElement, FieldElement, int>, bool (*)(const std::tuple<FieldElement, FieldElement, int>&,
                                                                 const std::tuple<FieldElement, FieldElement, int>&)>
      edge_keys([](const std::tuple<FieldElement, FieldElement, int>& a,
                   const std::tuple<FieldElement, FieldElement, int>& b) {
        ResidueLess lt;
        if (lt(std::get<0>(a), std::get<0>(b))) return true;
        if (lt(std::get<0>(b), std::get<0>(a))) return false;
        if (lt(std::get<1>(a), std::get<1>(b))) return true;
        if (lt(std::get<1>(b), std::get<1>(a))) return false;
        return std::get<2>(a) < std::get<2>(b);
      });
    g.vertices.push_back(x);
    std::vector<FieldElement> level{x};
    for (int d = 0; d < depth && !level.empty(); d++)
    {
      std::vector<FieldElement> next;
      for (const FieldElement& v : level)
        for (const OrbitEdge& e : orbit_neighbors(s, v))
        {
          ResidueLess lt;
          auto key = lt(e.x, e.y) ? std::make_tuple(e.x, e.y, e.pair) : std::make_tuple(e.y, e.x, e.pair);
          if (edge_keys.insert(key).second) g.edges.push_back(e);
          if (seen.insert(e.y).second)
          {
            g.vertices.push_back(e.y);
            next.push_back(e.y);
          }
        }
      level = std::move(next);
    }
    g.frontier = level;
    return g;
  }
}
