#include <algorithm>
#include <array>

#include "thinsec/iis.hpp"

namespace thinsec
{
  RauzyStep rauzy_step(const IIS& s, Side side)
  {
    const bool right = side == Side::Right;
    const FieldElement& end = right ? s.B : s.A;
    std::vector<std::pair<int, Member>> ends;
    for (int i = 0; i < s.order(); i++)
      for (Member m : {Member::Left, Member::Right})
      {
        const Interval& iv = s.pairs[static_cast<size_t>(i)].get(m);
        if ((right ? iv.hi : iv.lo) == end) ends.emplace_back(i, m);
      }
    if (ends.size() < 2 || (ends.size() == 2 && ends[0].first == ends[1].first))
      throw Error(ErrorKind::NoAdmissibleMove, std::string("no admissible transmission on the ") + side_name(side));
    if (ends.size() > 2)
      throw Error(ErrorKind::AmbiguousMove, std::to_string(ends.size()) + " intervals share the support end");
    auto w = [&](const std::pair<int, Member>& e) { return s.pairs[static_cast<size_t>(e.first)].width(); };
    int cmp = sign_of(w(ends[0]) - w(ends[1]));
    if (cmp == 0) throw Error(ErrorKind::AmbiguousMove, "the two intervals at the support end have equal widths");
    auto small = cmp < 0 ? ends[0] : ends[1];
    auto big = cmp < 0 ? ends[1] : ends[0];

    RauzyStep r;
    r.system = transmit(s, small.first, small.second, big.first, big.second).system;
    r.moves.push_back({Move::Transmit, side, small.first});
    try
    {
      r.system = reduce(r.system, side);
      r.moves.push_back({Move::Reduce, side, big.first});
      r.reduced = true;
    }
    catch (const Error& e)
    {
      if (e.kind() != ErrorKind::PreconditionFailed) throw;
    }
    return r;
  }

  namespace
  {
    struct Normalized
    {
      std::vector<std::array<FieldElement, 4>> pairs;
    };

    bool less4(const std::array<FieldElement, 4>& x, const std::array<FieldElement, 4>& y)
    {
      for (size_t k = 0; k < 4; k++)
      {
        int c = sign_of(x[k] - y[k]);
        if (c != 0) return c < 0;
      }
      return false;
    }

    Normalized normalize(const IIS& s)
    {
      Normalized n;
      FieldElement inv = inverse(s.B - s.A);
      for (const IntervalPair& p : s.pairs)
      {
        FieldElement l0 = (p.left.lo - s.A) * inv, l1 = (p.left.hi - s.A) * inv;
        FieldElement r0 = (p.right.lo - s.A) * inv, r1 = (p.right.hi - s.A) * inv;
        if (r0 < l0 || (r0 == l0 && r1 < l1))
        {
          std::swap(l0, r0);
          std::swap(l1, r1);
        }
        n.pairs.push_back({l0, l1, r0, r1});
      }
      std::sort(n.pairs.begin(), n.pairs.end(), less4);
      return n;
    }
  }

  bool similar(const IIS& s, const IIS& t, FieldElement* contraction, FieldElement* translation)
  {
    if (s.order() != t.order()) return false;
    Normalized a = normalize(s), b = normalize(t);
    for (size_t i = 0; i < a.pairs.size(); i++)
      for (size_t k = 0; k < 4; k++)
        if (a.pairs[i][k] != b.pairs[i][k]) return false;
    FieldElement c = (t.B - t.A) / (s.B - s.A);
    if (contraction) *contraction = c;
    if (translation) *translation = t.A - c * s.A;
    return true;
  }

  IIS apply_schedule(const IIS& s, const std::vector<Side>& schedule, std::vector<Move>* log)
  {
    IIS cur = s;
    for (Side side : schedule)
    {
      RauzyStep st = rauzy_step(cur, side);
      if (log) log->insert(log->end(), st.moves.begin(), st.moves.end());
      cur = std::move(st.system);
    }
    return cur;
  }

  namespace
  {
    struct Node
    {
      IIS system;
      std::vector<Side> schedule;
      std::vector<Move> log;
    };

    std::optional<SimilarityReport> report_if_similar(const IIS& s, const Node& n)
    {
      SimilarityReport r;
      if (!similar(s, n.system, &r.contraction, &r.translation)) return std::nullopt;
      r.period = static_cast<int>(n.schedule.size());
      r.schedule = n.schedule;
      r.move_log = n.log;
      return r;
    }

    std::optional<Node> advance(const Node& n, Side side)
    {
      try
      {
        RauzyStep st = rauzy_step(n.system, side);
        Node m{std::move(st.system), n.schedule, n.log};
        m.schedule.push_back(side);
        m.log.insert(m.log.end(), st.moves.begin(), st.moves.end());
        return m;
      }
      catch (const Error& e)
      {
        if (e.kind() == ErrorKind::NoAdmissibleMove || e.kind() == ErrorKind::AmbiguousMove) return std::nullopt;
        throw;
      }
    }
  }

  std::optional<SimilarityReport> detect_self_similarity(const IIS& s, int max_steps, Policy policy)
  {
    if (max_steps < 1) throw Error(ErrorKind::PreconditionFailed, "max_steps must be at least 1");
    if (policy != Policy::Exhaustive)
    {
      Node cur{s, {}, {}};
      for (int k = 0; k < max_steps; k++)
      {
        Side side = policy == Policy::Right ? Side::Right
                    : policy == Policy::Left ? Side::Left
                    : (k % 2 == 0 ? Side::Right : Side::Left);
        auto next = advance(cur, side);
        if (!next) return std::nullopt;
        cur = std::move(*next);
        if (auto r = report_if_similar(s, cur)) return r;
      }
      return std::nullopt;
    }
    // breadth first over side sequences, right before left at every level
    std::vector<Node> level{Node{s, {}, {}}};
    for (int k = 0; k < max_steps && !level.empty(); k++)
    {
      std::vector<Node> next;
      for (const Node& n : level)
        for (Side side : {Side::Right, Side::Left})
          if (auto m = advance(n, side)) next.push_back(std::move(*m));
      for (const Node& n : next)
        if (auto r = report_if_similar(s, n)) return r;
      level = std::move(next);
    }
    return std::nullopt;
  }
}
