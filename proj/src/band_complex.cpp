#include "thinsec/band_complex.hpp"

#include <algorithm>
#include <numeric>

namespace thinsec
{
  BandComplex complex_from_iis(const IIS& s)
  {
    BandComplex X;
    X.arcs.push_back({X.next_arc_id++, s.A, s.B});
    for (size_t i = 0; i < s.pairs.size(); i++)
    {
      const IntervalPair& p = s.pairs[i];
      Band b;
      b.id = X.next_band_id++;
      b.bottom = p.left.lo;
      b.top = p.right.lo;
      b.width = p.width();
      b.length = 1;
      b.name = std::to_string(i + 1);
      X.bands.push_back(std::move(b));
    }
    return X;
  }

  const char* policy_name(RipsPolicy p) { return p == RipsPolicy::Sweep ? "sweep" : "single"; }

  template<class S>
  std::vector<BaseRef<S>> bases(const BandComplexT<S>& X)
  {
    std::vector<BaseRef<S>> out;
    for (size_t i = 0; i < X.bands.size(); i++)
    {
      const BandT<S>& b = X.bands[i];
      out.push_back({static_cast<int>(i), 0, b.bottom, b.bottom + b.width});
      out.push_back({static_cast<int>(i), 1, b.top, b.top + b.width});
    }
    return out;
  }

  template<class S>
  int arc_containing(const BandComplexT<S>& X, const S& x)
  {
    for (size_t i = 0; i < X.arcs.size(); i++)
      if (X.arcs[i].lo <= x && x <= X.arcs[i].hi) return static_cast<int>(i);
    return -1;
  }

  namespace
  {
    template<class S>
    void sort_unique(std::vector<S>& v)
    {
      std::sort(v.begin(), v.end(), [](const S& a, const S& b) { return a < b; });
      v.erase(std::unique(v.begin(), v.end(), [](const S& a, const S& b) { return a == b; }), v.end());
    }

    template<class S>
    std::vector<S> arc_points(const SupportArcT<S>& arc, const std::vector<BaseRef<S>>& bs)
    {
      std::vector<S> pts{arc.lo, arc.hi};
      for (const BaseRef<S>& b : bs)
        for (const S* x : {&b.lo, &b.hi})
          if (arc.lo <= *x && *x <= arc.hi) pts.push_back(*x);
      sort_unique(pts);
      return pts;
    }

    //! remove the open interval (p, q) from the support
    template<class S>
    void remove_open(BandComplexT<S>& X, const S& p, const S& q)
    {
      std::vector<SupportArcT<S>> out;
      for (const SupportArcT<S>& a : X.arcs)
      {
        if (a.hi <= p || q <= a.lo)
        {
          out.push_back(a);
          continue;
        }
        if (a.lo < p) out.push_back({a.id, a.lo, p});
        if (q < a.hi) out.push_back({a.lo < p ? X.next_arc_id++ : a.id, q, a.hi});
      }
      X.arcs = std::move(out);
    }

    template<class S>
    void sort_arcs(BandComplexT<S>& X)
    {
      std::sort(X.arcs.begin(), X.arcs.end(), [](const SupportArcT<S>& a, const SupportArcT<S>& b) { return a.lo < b.lo; });
    }

    //! split band bi around [p, q] on the given base; no checks
    template<class S>
    void collapse_raw(BandComplexT<S>& X, const S& p, const S& q, int bi, int side)
    {
      BandT<S> b = X.bands[static_cast<size_t>(bi)];
      const S& base = b.base(side);
      std::vector<BandT<S>> remnants;
      if (base < p)
      {
        BandT<S> l = b;
        l.id = X.next_band_id++;
        l.width = p - base;
        remnants.push_back(std::move(l));
      }
      S base_end = base + b.width;
      if (q < base_end)
      {
        S off = q - base;
        BandT<S> r = b;
        r.id = X.next_band_id++;
        r.bottom = b.bottom + off;
        r.top = b.top + off;
        r.width = base_end - q;
        remnants.push_back(std::move(r));
      }
      X.bands.erase(X.bands.begin() + bi);
      for (auto& r : remnants) X.bands.push_back(std::move(r));
      remove_open(X, p, q);
    }

    //! band index and side of a base containing [p, q]
    template<class S>
    std::optional<std::pair<int, int>> locate(const BandComplexT<S>& X, const S& p, const S& q)
    {
      for (const BaseRef<S>& b : bases(X))
        if (b.lo <= p && q <= b.hi) return std::make_pair(b.band, b.side);
      return std::nullopt;
    }

    template<class S>
    BandComplexT<S> delete_dead_logged(const BandComplexT<S>& X, std::vector<RipsMove>* log)
    {
      BandComplexT<S> Y = X;
      for (;;)
      {
        bool changed = false;
        for (const Segment<S>& seg : segments(Y))
          if (seg.cover.empty())
          {
            if (log) log->push_back({"delete", Y.arcs[static_cast<size_t>(seg.arc)].id, -1, 0, ""});
            remove_open(Y, seg.lo, seg.hi);
            changed = true;
            break;
          }
        if (!changed) break;
      }
      return Y;
    }

    template<class S>
    BandComplexT<S> merge_logged(const BandComplexT<S>& X, std::vector<RipsMove>* log)
    {
      BandComplexT<S> Y = X;
      for (;;)
      {
        bool changed = false;
        auto bs = bases(Y);
        for (size_t ai = 0; ai < Y.arcs.size() && !changed; ai++)
        {
          const SupportArcT<S>& arc = Y.arcs[ai];
          std::vector<BaseRef<S>> in;
          for (const BaseRef<S>& b : bs)
            if (arc.lo <= b.lo && b.hi <= arc.hi) in.push_back(b);
          if (in.size() != 2 || in[0].band == in[1].band) continue;
          if (!(in[0].lo == arc.lo && in[0].hi == arc.hi && in[1].lo == arc.lo && in[1].hi == arc.hi)) continue;
          const BandT<S>& b1 = Y.bands[static_cast<size_t>(in[0].band)];
          const BandT<S>& b2 = Y.bands[static_cast<size_t>(in[1].band)];
          BandT<S> m;
          m.id = Y.next_band_id++;
          m.bottom = b1.base(1 - in[0].side);
          m.top = b2.base(1 - in[1].side);
          m.width = b1.width;
          m.length = b1.length + b2.length;
          if (!b1.length_form.empty() && b1.length_form.size() == b2.length_form.size())
          {
            m.length_form = b1.length_form;
            for (size_t k = 0; k < m.length_form.size(); k++) m.length_form[k] += b2.length_form[k];
          }
          m.name = b1.name;
          if (log) log->push_back({"merge", arc.id, m.id, 0, std::to_string(b1.id) + "+" + std::to_string(b2.id)});
          int hi_idx = std::max(in[0].band, in[1].band), lo_idx = std::min(in[0].band, in[1].band);
          Y.bands.erase(Y.bands.begin() + hi_idx);
          Y.bands.erase(Y.bands.begin() + lo_idx);
          Y.bands.push_back(std::move(m));
          Y.arcs.erase(Y.arcs.begin() + static_cast<long>(ai));
          changed = true;
        }
        if (!changed) break;
      }
      return Y;
    }
  }

  template<class S>
  std::vector<Segment<S>> segments(const BandComplexT<S>& X)
  {
    auto bs = bases(X);
    std::vector<Segment<S>> out;
    for (size_t ai = 0; ai < X.arcs.size(); ai++)
    {
      auto pts = arc_points(X.arcs[ai], bs);
      for (size_t k = 0; k + 1 < pts.size(); k++)
      {
        Segment<S> seg{static_cast<int>(ai), pts[k], pts[k + 1], {}};
        for (const BaseRef<S>& b : bs)
          if (b.lo <= seg.lo && seg.hi <= b.hi) seg.cover.emplace_back(b.band, b.side);
        out.push_back(std::move(seg));
      }
    }
    return out;
  }

  template<class S>
  std::vector<FreeSubarc<S>> find_free_subarcs(const BandComplexT<S>& X)
  {
    std::vector<FreeSubarc<S>> out;
    bool open = false;  // whether out.back() may still be extended
    for (const Segment<S>& seg : segments(X))
    {
      if (seg.cover.size() > 1)
      {
        open = false;
        continue;
      }
      FreeSubarc<S> f{seg.arc, seg.lo, seg.hi};
      if (seg.cover.empty()) f.dead = true;
      else
      {
        f.band = seg.cover[0].first;
        f.side = seg.cover[0].second;
      }
      if (open)
      {
        FreeSubarc<S>& prev = out.back();
        if (prev.arc == f.arc && prev.hi == f.lo && prev.dead == f.dead && prev.band == f.band && prev.side == f.side)
        {
          prev.hi = f.hi;
          continue;
        }
      }
      out.push_back(std::move(f));
      open = true;
    }
    return out;
  }

  template<class S>
  BandComplexT<S> collapse_free_subarc(const BandComplexT<S>& X, const FreeSubarc<S>& J)
  {
    if (J.dead || J.band < 0) throw Error(ErrorKind::NotFree, "subarc meets no base");
    bool inside = false;
    for (const FreeSubarc<S>& f : find_free_subarcs(X))
    {
      if (f.dead) continue;
      if (f.lo == J.lo && f.hi == J.hi && f.band == J.band && f.side == J.side)
      {
        BandComplexT<S> Y = X;
        collapse_raw(Y, J.lo, J.hi, J.band, J.side);
        return Y;
      }
      if (f.band == J.band && f.side == J.side && f.lo <= J.lo && J.hi <= f.hi) inside = true;
    }
    if (inside) throw Error(ErrorKind::NotMaximal, "free subarc is not maximal");
    throw Error(ErrorKind::NotFree, "subarc is not free");
  }

  template<class S>
  BandComplexT<S> delete_dead(const BandComplexT<S>& X)
  {
    return delete_dead_logged(X, nullptr);
  }

  template<class S>
  BandComplexT<S> merge_long_bands(const BandComplexT<S>& X)
  {
    return merge_logged(X, nullptr);
  }

  template<class S>
  RipsResult<S> rips_step(const BandComplexT<S>& X, RipsPolicy policy)
  {
    std::vector<FreeSubarc<S>> fs;
    for (auto& f : find_free_subarcs(X))
      if (!f.dead) fs.push_back(std::move(f));
    if (fs.empty()) throw Error(ErrorKind::Halted, "no free subarc");
    if (policy == RipsPolicy::Single) fs.resize(1);
    RipsResult<S> r;
    r.complex = X;
    for (const FreeSubarc<S>& f : fs)
    {
      auto where = locate(r.complex, f.lo, f.hi);
      if (!where) continue;  // swallowed by an earlier collapse of this sweep
      const BandT<S>& b = r.complex.bands[static_cast<size_t>(where->first)];
      r.moves.push_back({"collapse", r.complex.arcs[static_cast<size_t>(arc_containing(r.complex, f.lo))].id, b.id,
                         where->second, ""});
      collapse_raw(r.complex, f.lo, f.hi, where->first, where->second);
    }
    r.complex = delete_dead_logged(r.complex, &r.moves);
    r.complex = merge_logged(r.complex, &r.moves);
    sort_arcs(r.complex);
    return r;
  }

  namespace
  {
    template<class S>
    void canonical_for(const BandComplexT<S>& X, const std::vector<BaseRef<S>>& bs, const std::vector<int>& order,
                       Canonical<S>& c)
    {
      c.signature.clear();
      c.segment_lengths.clear();
      c.arc_order = order;
      c.label_of_band.assign(X.bands.size(), -1);
      c.band_of_label.clear();
      std::vector<int> first_side(X.bands.size(), -1);
      for (int ai : order)
      {
        const SupportArcT<S>& arc = X.arcs[static_cast<size_t>(ai)];
        c.signature.push_back(-1);
        auto pts = arc_points(arc, bs);
        for (size_t k = 0; k < pts.size(); k++)
        {
          const S& pt = pts[k];
          if (k > 0) c.segment_lengths.push_back(pt - pts[k - 1]);
          std::vector<const BaseRef<S>*> ends, starts;
          for (const BaseRef<S>& b : bs)
          {
            if (!(arc.lo <= b.lo && b.hi <= arc.hi)) continue;
            if (b.hi == pt) ends.push_back(&b);
            if (b.lo == pt) starts.push_back(&b);
          }
          c.signature.push_back(-2);
          std::vector<std::pair<long, long>> end_tokens;
          for (const BaseRef<S>* b : ends)
          {
            auto bi = static_cast<size_t>(b->band);
            end_tokens.emplace_back(c.label_of_band[bi], b->side == first_side[bi] ? 0 : 1);
          }
          std::sort(end_tokens.begin(), end_tokens.end());
          for (auto [l, s] : end_tokens)
          {
            c.signature.push_back(0);
            c.signature.push_back(l);
            c.signature.push_back(s);
          }
          std::stable_sort(starts.begin(), starts.end(), [&](const BaseRef<S>* a, const BaseRef<S>* b) {
            return X.bands[static_cast<size_t>(a->band)].width < X.bands[static_cast<size_t>(b->band)].width;
          });
          for (const BaseRef<S>* b : starts)
          {
            auto bi = static_cast<size_t>(b->band);
            if (c.label_of_band[bi] < 0)
            {
              c.label_of_band[bi] = static_cast<int>(c.band_of_label.size());
              c.band_of_label.push_back(b->band);
              first_side[bi] = b->side;
            }
            c.signature.push_back(1);
            c.signature.push_back(c.label_of_band[bi]);
            c.signature.push_back(b->side == first_side[bi] ? 0 : 1);
          }
        }
      }
    }
  }

  template<class S>
  Canonical<S> canonical_form(const BandComplexT<S>& X)
  {
    auto bs = bases(X);
    std::vector<int> order(X.arcs.size());
    std::iota(order.begin(), order.end(), 0);
    Canonical<S> best;
    canonical_for(X, bs, order, best);
    if (X.arcs.size() > 6) return best;
    Canonical<S> trial;
    while (std::next_permutation(order.begin(), order.end()))
    {
      canonical_for(X, bs, order, trial);
      if (trial.signature < best.signature) best = trial;
    }
    return best;
  }

  template<class S>
  S support_measure(const BandComplexT<S>& X)
  {
    if (X.arcs.empty()) return S{};
    S m = X.arcs[0].hi - X.arcs[0].lo;
    for (size_t i = 1; i < X.arcs.size(); i++) m += X.arcs[i].hi - X.arcs[i].lo;
    return m;
  }

  BandComplex untrack(const TrackedComplex& X)
  {
    BandComplex Y;
    Y.next_arc_id = X.next_arc_id;
    Y.next_band_id = X.next_band_id;
    for (const auto& a : X.arcs) Y.arcs.push_back({a.id, a.lo.value(), a.hi.value()});
    for (const auto& b : X.bands)
      Y.bands.push_back({b.id, b.bottom.value(), b.top.value(), b.width.value(), b.length, b.length_form, b.name});
    return Y;
  }

#define THINSEC_INSTANTIATE(S)                                                                  \
  template std::vector<BaseRef<S>> bases(const BandComplexT<S>&);                             \
  template int arc_containing(const BandComplexT<S>&, const S&);                              \
  template std::vector<Segment<S>> segments(const BandComplexT<S>&);                          \
  template std::vector<FreeSubarc<S>> find_free_subarcs(const BandComplexT<S>&);              \
  template BandComplexT<S> collapse_free_subarc(const BandComplexT<S>&, const FreeSubarc<S>&); \
  template BandComplexT<S> delete_dead(const BandComplexT<S>&);                               \
  template BandComplexT<S> merge_long_bands(const BandComplexT<S>&);                          \
  template RipsResult<S> rips_step(const BandComplexT<S>&, RipsPolicy);                        \
  template Canonical<S> canonical_form(const BandComplexT<S>&);                               \
  template S support_measure(const BandComplexT<S>&);

  THINSEC_INSTANTIATE(FieldElement)
  THINSEC_INSTANTIATE(Tracked)
#undef THINSEC_INSTANTIATE
}
