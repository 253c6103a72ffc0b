#include "thinsec/cycle.hpp"

namespace thinsec
{
  namespace
  {
    bool proportional(const std::vector<FieldElement>& old_len, const std::vector<FieldElement>& new_len,
                      FieldElement& ratio)
    {
      if (old_len.size() != new_len.size() || old_len.empty()) return false;
      ratio = new_len[0] / old_len[0];
      for (size_t i = 1; i < old_len.size(); i++)
        if (new_len[i] != ratio * old_len[i]) return false;
      return true;
    }

    struct ElementarySegment
    {
      int arc;  // index into arcs
      FieldElement lo, hi;
    };

    std::vector<ElementarySegment> elementary(const BandComplex& X, const Canonical<FieldElement>& c)
    {
      auto all = segments(X);
      std::vector<ElementarySegment> out;
      for (int ai : c.arc_order)
        for (const auto& s : all)
          if (s.arc == ai) out.push_back({ai, s.lo, s.hi});
      return out;
    }

    RatVector indicator(const std::vector<ElementarySegment>& segs, const FieldElement& lo, const FieldElement& hi)
    {
      RatVector v = RatVector::Zero(static_cast<Eigen::Index>(segs.size()));
      for (size_t j = 0; j < segs.size(); j++)
        if (lo <= segs[j].lo && segs[j].hi <= hi) v(static_cast<Eigen::Index>(j)) = 1;
      return v;
    }

    Tracked::Form row_form(const RatMatrix& m, Eigen::Index row)
    {
      Tracked::Form f;
      for (Eigen::Index k = 0; k < m.cols(); k++)
        if (sgn(m(row, k)) != 0) f[static_cast<int>(k)] = m(row, k);
      return f;
    }
  }

  std::optional<CycleReport> detect_rips_cycle(const BandComplex& X, int max_steps, RipsPolicy policy)
  {
    if (max_steps < 1) throw Error(ErrorKind::PreconditionFailed, "max_steps must be at least 1");
    std::vector<BandComplex> hist;
    std::vector<Canonical<FieldElement>> canon;
    BandComplex cur = X;
    int prefix = -1, period = 0;
    FieldElement ratio;
    for (int k = 0; k <= max_steps; k++)
    {
      Canonical<FieldElement> c = canonical_form(cur);
      for (int m = 0; m < k && prefix < 0; m++)
        if (canon[static_cast<size_t>(m)].signature == c.signature &&
            proportional(canon[static_cast<size_t>(m)].segment_lengths, c.segment_lengths, ratio))
        {
          prefix = m;
          period = k - m;
        }
      hist.push_back(cur);
      canon.push_back(std::move(c));
      if (prefix >= 0 || k == max_steps) break;
      try
      {
        cur = rips_step(cur, policy).complex;
      }
      catch (const Error& e)
      {
        if (e.kind() == ErrorKind::Halted) return std::nullopt;
        throw;
      }
    }
    if (prefix < 0) return std::nullopt;

    CycleReport r;
    r.prefix_steps = prefix;
    r.period_steps = period;
    r.policy = policy;
    r.contraction = ratio;
    r.start = hist[static_cast<size_t>(prefix)];
    r.start_canonical = canon[static_cast<size_t>(prefix)];
    const BandComplex& S0 = r.start;
    const auto& c0 = r.start_canonical;
    const size_t nb = S0.bands.size();

    // parameters: a basis of the width-consistent segment vectors, read off by
    // band widths first and elementary segments after
    auto segs = elementary(S0, c0);
    const auto E = static_cast<Eigen::Index>(segs.size());
    RatMatrix C(static_cast<Eigen::Index>(nb), E);
    for (size_t i = 0; i < nb; i++)
    {
      const Band& b = S0.bands[i];
      C.row(static_cast<Eigen::Index>(i)) =
        (indicator(segs, b.bottom, b.bottom + b.width) - indicator(segs, b.top, b.top + b.width)).transpose();
    }
    RatMatrix N = nullspace<Rational>(C);
    const Eigen::Index d = N.cols();
    std::vector<RatVector> cand;
    std::vector<std::string> cand_names;
    for (size_t l = 0; l < nb; l++)
    {
      const Band& b = S0.bands[static_cast<size_t>(c0.band_of_label[l])];
      cand.push_back(indicator(segs, b.bottom, b.bottom + b.width));
      cand_names.push_back("w" + std::to_string(l));
    }
    for (Eigen::Index j = 0; j < E; j++)
    {
      RatVector u = RatVector::Zero(E);
      u(j) = 1;
      cand.push_back(u);
      cand_names.push_back("s" + std::to_string(j));
    }
    RatMatrix F(0, E);
    std::vector<size_t> chosen;
    for (size_t k = 0; k < cand.size() && F.rows() < d; k++)
    {
      RatMatrix trial(F.rows() + 1, E);
      trial.topRows(F.rows()) = F;
      trial.row(F.rows()) = cand[k].transpose();
      RatMatrix FN = trial * N;
      if (rank<Rational>(FN) == trial.rows())
      {
        F = trial;
        chosen.push_back(k);
      }
    }
    if (F.rows() != d) throw Error(ErrorKind::Audit, "could not choose independent cycle parameters");
    RatMatrix FN = F * N;
    r.segment_basis = N * inverse<Rational>(FN);
    for (size_t k : chosen)
    {
      r.parameter_names.push_back(cand_names[k]);
      FieldElement v = 0;
      for (Eigen::Index j = 0; j < E; j++)
        if (sgn(cand[k](j)) != 0) v += cand[k](j) * (segs[static_cast<size_t>(j)].hi - segs[static_cast<size_t>(j)].lo);
      r.parameters.push_back(v);
    }

    // tracked copy of the start: arc k's left end is the free offset -1-k
    std::vector<std::vector<std::pair<FieldElement, Tracked>>> points(S0.arcs.size());
    {
      Eigen::Index row = 0;
      for (size_t pos = 0; pos < c0.arc_order.size(); pos++)
      {
        int ai = c0.arc_order[pos];
        Tracked t(S0.arcs[static_cast<size_t>(ai)].lo, Tracked::Form{{-1 - static_cast<int>(pos), Rational(1)}});
        auto& pts = points[static_cast<size_t>(ai)];
        pts.emplace_back(t.value(), t);
        for (; row < E && segs[static_cast<size_t>(row)].arc == ai; row++)
        {
          const auto& s = segs[static_cast<size_t>(row)];
          t += Tracked(s.hi - s.lo, row_form(r.segment_basis, row));
          pts.emplace_back(s.hi, t);
        }
      }
    }
    auto track = [&](const FieldElement& x) -> Tracked {
      int ai = arc_containing(S0, x);
      if (ai >= 0)
        for (const auto& [v, t] : points[static_cast<size_t>(ai)])
          if (v == x) return t;
      throw Error(ErrorKind::Audit, "coordinate is not a critical point");
    };
    TrackedComplex& T = r.tracked_start;
    T.next_arc_id = S0.next_arc_id;
    T.next_band_id = S0.next_band_id;
    for (size_t ai = 0; ai < S0.arcs.size(); ai++) T.arcs.push_back({S0.arcs[ai].id, points[ai].front().second, points[ai].back().second});
    for (size_t i = 0; i < nb; i++)
    {
      const Band& b = S0.bands[i];
      BandT<Tracked> tb;
      tb.id = b.id;
      tb.bottom = track(b.bottom);
      tb.top = track(b.top);
      tb.width = track(b.bottom + b.width) - tb.bottom;
      tb.length = b.length;
      tb.length_form.assign(nb, Rational(0));
      tb.length_form[static_cast<size_t>(c0.label_of_band[i])] = 1;
      tb.name = b.name;
      T.bands.push_back(std::move(tb));
    }

    TrackedComplex Z = T;
    for (int k = 0; k < period; k++) Z = rips_step(Z, policy).complex;
    Canonical<Tracked> cz = canonical_form(Z);
    r.end = untrack(Z);
    r.end_canonical = canonical_form(r.end);
    if (r.end_canonical.signature != c0.signature) throw Error(ErrorKind::Audit, "tracked run diverged");

    r.width_matrix = RatMatrix::Zero(d, d);
    for (size_t i = 0; i < chosen.size(); i++)
    {
      size_t k = chosen[i];
      Tracked t = k < nb ? Z.bands[static_cast<size_t>(cz.band_of_label[k])].width : cz.segment_lengths[k - nb];
      if (t.has_offsets()) throw Error(ErrorKind::Audit, "cycle parameter depends on arc positions");
      for (Eigen::Index j = 0; j < d; j++) r.width_matrix(static_cast<Eigen::Index>(i), j) = t.coeff(static_cast<int>(j));
    }
    r.length_matrix = RatMatrix::Zero(static_cast<Eigen::Index>(nb), static_cast<Eigen::Index>(nb));
    for (size_t l = 0; l < nb; l++)
    {
      const auto& f = Z.bands[static_cast<size_t>(cz.band_of_label[l])].length_form;
      for (size_t l2 = 0; l2 < nb; l2++) r.length_matrix(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(l2)) = f[l2];
    }
    for (size_t l = 0; l < nb; l++)
    {
      const Band& b = S0.bands[static_cast<size_t>(c0.band_of_label[l])];
      r.widths.push_back(b.width);
      r.lengths.push_back(b.length);
    }

    // the parameters must be an eigenvector for the contraction
    for (Eigen::Index i = 0; i < d; i++)
    {
      FieldElement lhs = 0;
      for (Eigen::Index j = 0; j < d; j++) lhs += r.width_matrix(i, j) * r.parameters[static_cast<size_t>(j)];
      if (lhs != r.contraction * r.parameters[static_cast<size_t>(i)])
        throw Error(ErrorKind::Audit, "width matrix does not reproduce the contraction");
    }
    return r;
  }

  std::vector<Segment<FieldElement>> cycle_segments(const CycleReport& r)
  {
    std::vector<Segment<FieldElement>> out;
    auto all = segments(r.start);
    for (int ai : r.start_canonical.arc_order)
      for (const auto& s : all)
        if (s.arc == ai) out.push_back(s);
    return out;
  }

  std::vector<Rational> interval_functional(const CycleReport& r, const FieldElement& lo, const FieldElement& hi)
  {
    std::vector<Rational> f;
    for (const auto& s : cycle_segments(r)) f.push_back(lo <= s.lo && s.hi <= hi ? Rational(1) : Rational(0));
    return f;
  }

  std::vector<Rational> parameter_row(const CycleReport& r, const std::vector<Rational>& on_segments)
  {
    if (static_cast<Eigen::Index>(on_segments.size()) != r.segment_basis.rows())
      throw Error(ErrorKind::PreconditionFailed, "functional has the wrong number of segments");
    std::vector<Rational> row(static_cast<size_t>(r.segment_basis.cols()), Rational(0));
    for (Eigen::Index j = 0; j < r.segment_basis.rows(); j++)
      for (Eigen::Index k = 0; k < r.segment_basis.cols(); k++)
        row[static_cast<size_t>(k)] += on_segments[static_cast<size_t>(j)] * r.segment_basis(j, k);
    return row;
  }

  EndCriterion one_end_criterion(const FieldElement& contraction, const RatMatrix& length_matrix)
  {
    static const Rational w = pow10_inv(30);
    EndCriterion e;
    e.contraction = enclose(contraction, w);
    e.mu = perron_interval(length_matrix, w);
    if (sgn(e.contraction.lo) < 0 || sgn(e.mu.lo) < 0)
      throw Error(ErrorKind::PreconditionFailed, "contraction and spectral radius must be non-negative");
    e.product = {e.contraction.lo * e.mu.lo, e.contraction.hi * e.mu.hi};
    e.holds = e.product.hi < 1;
    return e;
  }
}
