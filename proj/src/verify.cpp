#include "thinsec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "thinsec/surface.hpp"
#include "thinsec/systems.hpp"

namespace thinsec
{
  namespace
  {
    std::string num(double x, int digits = 7)
    {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.*g", digits, x);
      return buf;
    }

    std::string interval_text(const RatInterval& iv, int digits = 10)
    {
      return "[" + num(to_double(iv.lo), digits) + ", " + num(to_double(iv.hi), digits) + "]";
    }

    template<class T>
    std::string list_text(const std::vector<T>& v, const std::function<std::string(const T&)>& f)
    {
      std::string s = "(";
      for (size_t i = 0; i < v.size(); i++) s += (i ? ", " : "") + f(v[i]);
      return s + ")";
    }

    std::string matrix_text(const RatMatrix& m)
    {
      std::string s = "[";
      for (Eigen::Index i = 0; i < m.rows(); i++)
      {
        s += i ? "; " : "";
        for (Eigen::Index j = 0; j < m.cols(); j++) s += (j ? " " : "") + to_string(m(i, j));
      }
      return s + "]";
    }

    VerificationRow exact(std::string id, std::string claim, std::string printed, std::string computed, bool ok)
    {
      return {std::move(id), std::move(claim), std::move(printed), std::move(computed), "exact",
              ok ? RowStatus::ExactPass : RowStatus::Fail};
    }

    VerificationRow approx(std::string id, std::string claim, std::string printed, std::string computed,
                           std::string tol, bool ok)
    {
      return {std::move(id), std::move(claim), std::move(printed), std::move(computed), std::move(tol),
              ok ? RowStatus::ApproxPass : RowStatus::Fail};
    }

    // a failing computation still produces a row
    void guarded(std::vector<VerificationRow>& rows, const std::string& id, const std::string& claim,
                 const std::function<void()>& body)
    {
      try
      {
        body();
      }
      catch (const std::exception& e)
      {
        rows.push_back({id, claim, "", std::string("error: ") + e.what(), "", RowStatus::Fail});
      }
    }

    //! centre within half a unit of the last printed digit
    bool near_printed(const FieldElement& x, const Rational& printed, const Rational& tol)
    {
      RatInterval iv = enclose(x, tol / 1000);
      return iv.lo >= printed - tol && iv.hi <= printed + tol;
    }

    bool near_printed(const RatInterval& iv, const Rational& printed, const Rational& tol)
    {
      return iv.lo >= printed - tol && iv.hi <= printed + tol;
    }

    FieldVector residue(const RatMatrix& N, const FieldVector& v, const FieldElement& mu)
    {
      FieldVector r(v.size());
      for (Eigen::Index i = 0; i < N.rows(); i++)
      {
        FieldElement s = 0;
        for (Eigen::Index j = 0; j < N.cols(); j++) s += N(i, j) * v(j);
        r(i) = s - mu * v(i);
      }
      return r;
    }

    std::vector<FieldElement> mat_vec(const RatMatrix& M, const std::vector<FieldElement>& v)
    {
      std::vector<FieldElement> out;
      for (Eigen::Index i = 0; i < M.rows(); i++)
      {
        FieldElement s = 0;
        for (Eigen::Index j = 0; j < M.cols(); j++) s += M(i, j) * v[static_cast<size_t>(j)];
        out.push_back(s);
      }
      return out;
    }

    std::vector<FieldElement> values(const std::vector<NamedValue>& nv)
    {
      std::vector<FieldElement> v;
      for (const auto& x : nv) v.push_back(x.value);
      return v;
    }

    struct SystemData
    {
      std::string tag;
      SystemId id;
      RatMatrix N;
      IntPoly minimal;
      FieldPtr field;
      std::vector<NamedValue> params;
      std::vector<Rational> printed_eigen;
      Rational printed_lambda, lambda_tol;
      int rauzy_period;
      FieldElement rauzy_contraction, rips_contraction;
      std::string rips_contraction_text;
      std::vector<NamedValue> printed_start, printed_end;
      RatMatrix printed_R, printed_L;
      std::vector<Rational> printed_lengths;
      Rational printed_mu, mu_tol;
      Rational printed_rips_ratio, ratio_tol;
    };

    SystemData data_of(SystemId id, const VerifyOptions& opt)
    {
      SystemData d;
      d.id = id;
      if (id == SystemId::S1)
      {
        d.tag = "s1";
        d.N = opt.N1 ? *opt.N1 : matrix_N1();
        d.minimal = lambda1_quartic();
        d.field = lambda1_field();
        d.params = s1_parameters();
        d.printed_eigen = s1_printed_eigenvector();
        d.printed_lambda = Rational(254, 1000);
        d.lambda_tol = Rational(5, 10000);
        d.rauzy_period = 6;
        FieldElement l = FieldElement::generator(d.field);
        d.rauzy_contraction = l;
        d.rips_contraction = l * l;
        d.rips_contraction_text = "l^2";
        d.printed_start = printed_Y_widths();
        d.printed_end = printed_Y_widths_after();
        d.printed_R = printed_R1();
        d.printed_L = printed_L1();
        d.printed_lengths = printed_Y_lengths();
        d.printed_mu = Rational(61329, 10000);
        d.mu_tol = Rational(5, 100000);
        d.printed_rips_ratio = Rational(647, 10000);
        d.ratio_tol = Rational(5, 100000);
      }
      else
      {
        d.tag = "s2";
        d.N = opt.N2 ? *opt.N2 : matrix_N2();
        d.minimal = lambda2_cubic();
        d.field = lambda2_field();
        d.params = s2_parameters();
        d.printed_eigen = s2_printed_eigenvector();
        d.printed_lambda = Rational(798, 10000);
        d.lambda_tol = Rational(1, 10000);
        d.rauzy_period = 10;
        FieldElement l = FieldElement::generator(d.field);
        d.rauzy_contraction = l;
        d.rips_contraction = l;
        d.rips_contraction_text = "l";
        d.printed_start = printed_Z_widths();
        d.printed_end = printed_Z_widths_after();
        d.printed_R = printed_R2();
        d.printed_L = printed_L2();
        d.printed_lengths = printed_Z_lengths();
        d.printed_mu = Rational(795, 100);
        d.mu_tol = Rational(5, 1000);
        d.printed_rips_ratio = Rational(798, 10000);
        d.ratio_tol = Rational(1, 10000);
      }
      return d;
    }

    void system_rows(std::vector<VerificationRow>& rows, SystemId id, const VerifyOptions& opt)
    {
      const SystemData d = data_of(id, opt);
      const std::string& t = d.tag;
      const FieldElement lambda = FieldElement::generator(d.field);

      guarded(rows, t + ".charpoly", "lambda is a root of the characteristic polynomial", [&] {
        IntPoly cp = char_poly(d.N);
        bool ok = (cp % d.field->modulus()).is_zero();
        rows.push_back(exact(t + ".charpoly", "minimal polynomial of lambda divides det(xI - N)", d.minimal.to_string(),
                             cp.to_string(), ok));
      });

      guarded(rows, t + ".lambda", "certified value of lambda", [&] {
        RatInterval iv = enclose(lambda, pow10_inv(12));
        rows.push_back(approx(t + ".lambda", "lambda by certified root isolation", to_string(d.printed_lambda),
                              interval_text(iv, 12), "+-" + num(to_double(d.lambda_tol)),
                              near_printed(iv, d.printed_lambda, d.lambda_tol)));
      });

      if (id == SystemId::S2)
        guarded(rows, "s2.lambda.alt", "second printed value of lambda", [&] {
          RatInterval iv = enclose(lambda, pow10_inv(12));
          Rational alt(797, 10000);
          rows.push_back(approx("s2.lambda.alt", "lambda against the other printed value", to_string(alt),
                                interval_text(iv, 12), "+-0.0001", near_printed(iv, alt, Rational(1, 10000))));
        });

      FieldVector v;
      guarded(rows, t + ".eigen.residue", "N v = lambda v", [&] {
        EigenKernel k = eigen_kernel(d.N, lambda, 3);
        v = k.v;
        FieldVector r = residue(d.N, v, lambda);
        bool zero = std::all_of(r.begin(), r.end(), [](const FieldElement& x) { return x.is_zero(); });
        rows.push_back(exact(t + ".eigen.residue", "N v - lambda v has zero residue", "0",
                             zero ? "0" : "nonzero", zero && k.dimension == 1));
      });

      if (v.size() == static_cast<Eigen::Index>(d.printed_eigen.size()))
      {
        guarded(rows, t + ".eigen.normalized", "normalized eigenvector", [&] {
          bool ok = true;
          std::string comp;
          for (Eigen::Index i = 0; i < v.size(); i++)
          {
            ok = ok && near_printed(v(i), d.printed_eigen[static_cast<size_t>(i)], Rational(5, 10000));
            comp += (i ? ", " : "") + num(to_double(v(i)), 6);
          }
          rows.push_back(approx(t + ".eigen.normalized", "eigenvector with a+b+c = 1",
                                list_text<Rational>(d.printed_eigen, [](const Rational& q) { return num(to_double(q), 4); }),
                                "(" + comp + ")", "+-0.0005", ok));
        });
        for (size_t i = 0; i < d.params.size(); i++)
          rows.push_back(exact(t + ".param." + d.params[i].name, "eigenvector coordinate as a polynomial in lambda",
                               to_string(d.params[i].value), to_string(v(static_cast<Eigen::Index>(i))),
                               v(static_cast<Eigen::Index>(i)) == d.params[i].value));
      }

      guarded(rows, t + ".rauzy", "Rauzy self-similarity", [&] {
        auto rep = detect_self_similarity(build_system(id), d.rauzy_period + 6, Policy::Right);
        bool ok = rep && rep->period == d.rauzy_period && rep->contraction == d.rauzy_contraction;
        rows.push_back(exact(t + ".rauzy", "right-only Rauzy induction is self-similar",
                             "period " + std::to_string(d.rauzy_period) + ", contraction l",
                             rep ? "period " + std::to_string(rep->period) + ", contraction " + to_string(rep->contraction)
                                 : "not found",
                             ok));
      });

      guarded(rows, t + ".rips", "Rips machine cycle", [&] {
        CycleMatch m = match_cycle(id);
        const CycleReport& r = m.report;
        rows.push_back(exact(t + ".rips.contraction", "band widths scale by a fixed factor over one cycle",
                             d.rips_contraction_text,
                             to_string(r.contraction) + " (prefix " + std::to_string(r.prefix_steps) + ", period " +
                               std::to_string(r.period_steps) + ")",
                             r.contraction == d.rips_contraction));

        for (size_t i = 0; i < m.names.size(); i++)
          rows.push_back(exact(t + ".width." + m.names[i], "cycle start parameter " + m.names[i],
                               to_string(d.printed_start[i].value), to_string(m.start_values[i]),
                               m.start_values[i] == d.printed_start[i].value));
        for (size_t i = 0; i < m.names.size(); i++)
          rows.push_back(exact(t + ".width_after." + m.names[i], "cycle end parameter " + m.names[i],
                               to_string(d.printed_end[i].value), to_string(m.end_values[i]),
                               m.end_values[i] == d.printed_end[i].value));
        for (size_t i = 0; i < m.names.size(); i++)
        {
          FieldElement want = d.rips_contraction * d.printed_start[i].value;
          rows.push_back(exact(t + ".printed_scaling." + m.names[i], "printed end value = contraction x printed start value",
                               to_string(d.printed_end[i].value), to_string(want), want == d.printed_end[i].value));
        }
        {
          auto E = values(d.printed_start);
          auto RE = mat_vec(d.printed_R, E);
          bool ok = true;
          for (size_t i = 0; i < E.size(); i++) ok = ok && RE[i] == d.rips_contraction * E[i];
          rows.push_back(exact(t + ".R.eigen", "printed width matrix has the printed start widths as eigenvector",
                               matrix_text(d.printed_R), ok ? "R E = c E" : "R E != c E", ok));
        }
        rows.push_back(exact(t + ".R.conjugate",
                             "printed width matrix equals ours on the published parameters, modulo " + m.relation_name,
                             matrix_text(d.printed_R), "P R - R' P = " + matrix_text(m.D),
                             m.conjugate && m.relation_vanishes));
        rows.push_back(exact(t + ".lengths", "band lengths at the cycle start, bands labelled by width",
                             list_text<Rational>(d.printed_lengths, [](const Rational& q) { return to_string(q); }),
                             [&] {
                               std::vector<Rational> l;
                               for (int lab : m.label)
                                 if (lab >= 0) l.push_back(r.lengths[static_cast<size_t>(lab)]);
                               return list_text<Rational>(l, [](const Rational& q) { return to_string(q); });
                             }(),
                             m.lengths_equal));
        rows.push_back(exact(t + ".lengths.multiset", "band lengths at the cycle start, up to relabelling",
                             list_text<Rational>(d.printed_lengths, [](const Rational& q) { return to_string(q); }),
                             list_text<Rational>(r.lengths, [](const Rational& q) { return to_string(q); }),
                             m.lengths_multiset));
        rows.push_back(exact(t + ".L", "length matrix, bands labelled by width", matrix_text(d.printed_L),
                             matrix_text(m.L_relabelled), m.L_equal));

        EndCriterion ours = one_end_criterion(r);
        rows.push_back(approx(t + ".end_criterion", "contraction x mu < 1 (computed cycle)",
                              "< 1", interval_text(ours.product), "certified", ours.holds));
        EndCriterion theirs = one_end_criterion(d.rips_contraction, d.printed_L);
        rows.push_back(approx(t + ".end_criterion.printed_L", "contraction x mu < 1 with the printed length matrix",
                              "< 1", interval_text(theirs.product), "certified", theirs.holds));
        rows.push_back(approx(t + ".mu", "Perron root of the computed length matrix", to_string(d.printed_mu),
                              interval_text(ours.mu), "+-" + num(to_double(d.mu_tol)),
                              near_printed(ours.mu, d.printed_mu, d.mu_tol)));
        rows.push_back(approx(t + ".mu.printed_L", "Perron root of the printed length matrix", to_string(d.printed_mu),
                              interval_text(theirs.mu), "+-" + num(to_double(d.mu_tol)),
                              near_printed(theirs.mu, d.printed_mu, d.mu_tol)));
        rows.push_back(approx(t + ".contraction.value", "numerical value of the cycle contraction",
                              to_string(d.printed_rips_ratio), interval_text(ours.contraction),
                              "+-" + num(to_double(d.ratio_tol)),
                              near_printed(ours.contraction, d.printed_rips_ratio, d.ratio_tol)));
      });

      if (id == SystemId::S1)
        guarded(rows, "s1.transition.composite", "printed 4x4 and 5x4 transition matrices", [&] {
          auto abcu = values(d.params);
          auto Y = mat_vec(printed_transition_5x4(), mat_vec(printed_transition_4x4(), abcu));
          auto want = values(d.printed_start);
          bool ok = Y == want;
          rows.push_back(exact("s1.transition.composite", "printed transition matrices map (a,b,c,u) to the start widths",
                               list_text<FieldElement>(want, [](const FieldElement& x) { return num(to_double(x), 6); }),
                               list_text<FieldElement>(Y, [](const FieldElement& x) { return num(to_double(x), 6); }),
                               ok));
        });
      else
        guarded(rows, "s2.transition", "printed 5x5 transition matrix", [&] {
          auto Z = mat_vec(printed_transition_5x5(), values(d.params));
          auto want = values(d.printed_start);
          rows.push_back(exact("s2.transition", "printed transition matrix maps (a,b,c,d,e) to the start parameters",
                               list_text<FieldElement>(want, [](const FieldElement& x) { return to_string(x); }),
                               list_text<FieldElement>(Z, [](const FieldElement& x) { return to_string(x); }),
                               Z == want));
        });
    }

    void surface_rows(std::vector<VerificationRow>& rows)
    {
      for (int ex : {1, 2})
      {
        const std::string t = "surface" + std::to_string(ex);
        guarded(rows, t, "surface checks", [&] {
          PLSurface S = build_surface(ex);
          rows.push_back(exact(t + ".holes", "T2, T3, T4 inside the unit square", "true",
                               holes_in_unit_square(S) ? "true" : "false", holes_in_unit_square(S)));
          SaddleLevels sl = saddle_levels(S);
          std::string vals = list_text<FieldElement>(sl.values, [](const FieldElement& x) { return num(to_double(x), 6); });
          rows.push_back(exact(t + ".saddles", "saddle levels pairwise distinct modulo the x2 period", "distinct",
                               vals + (sl.distinct ? " distinct" : " collide"), sl.distinct && sl.values.size() == 6));
          EulerReport e = euler_characteristic(S);
          rows.push_back(exact(t + ".genus", "closed surface of genus 3", "chi = -4, genus 3",
                               "chi = " + std::to_string(e.euler) + ", genus " + std::to_string(e.genus) +
                                 (e.closed ? "" : " (" + e.note + ")"),
                               e.closed && e.euler == -4 && e.genus == 3));
          if (ex == 1)
          {
            Vec3 p = printed_symmetry_centre(S);
            bool printed_ok = check_central_symmetry(S, p);
            rows.push_back(exact(t + ".symmetry", "central symmetry about (3/10, (2a+c+b-u)/2, 1/4)", "symmetric",
                                 printed_ok ? "symmetric" : "not symmetric", printed_ok));
            Vec3 q{Rational(1, 2), p[1], Rational(3, 4)};
            bool alt_ok = check_central_symmetry(S, q);
            rows.push_back(exact(t + ".symmetry.found", "central symmetry about (1/2, (2a+c+b-u)/2, 3/4)",
                                 "a centre of symmetry exists", alt_ok ? "symmetric" : "not symmetric", alt_ok));
          }
        });
      }
    }
  }

  const char* row_status_name(RowStatus s)
  {
    switch (s)
    {
      case RowStatus::ExactPass: return "exact-pass";
      case RowStatus::ApproxPass: return "approx-pass";
      case RowStatus::Fail: return "fail";
    }
    return "?";
  }

  CycleMatch match_cycle(SystemId id)
  {
    CycleMatch m;
    auto rep = detect_rips_cycle(complex_from_iis(build_system(id)), 60);
    if (!rep) throw Error(ErrorKind::Audit, "no Rips cycle within 60 steps");
    m.report = std::move(*rep);
    const CycleReport& r = m.report;
    const BandComplex& X = r.start;
    const auto& c0 = r.start_canonical;
    const size_t nb = X.bands.size();

    const bool first = id == SystemId::S1;
    const auto printed = first ? printed_Y_widths() : printed_Z_widths();
    const auto printed_after = first ? printed_Y_widths_after() : printed_Z_widths_after();
    const RatMatrix Rp = first ? printed_R1() : printed_R2();
    const RatMatrix Lp = first ? printed_L1() : printed_L2();
    const auto lengths_p = first ? printed_Y_lengths() : printed_Z_lengths();
    // which published names are band widths, in the order of the length vector
    const std::vector<std::string> band_names =
      first ? std::vector<std::string>{"r1", "r2", "g", "n"} : std::vector<std::string>{"a'", "b'", "c'"};
    for (const auto& p : printed) m.names.push_back(p.name);

    auto label_by_width = [&](const BandComplex& Y, const Canonical<FieldElement>& c, const FieldElement& w) {
      for (size_t l = 0; l < Y.bands.size(); l++)
        if (Y.bands[static_cast<size_t>(c.band_of_label[l])].width == w) return static_cast<int>(l);
      return -1;
    };
    std::map<std::string, int> lab;
    for (const auto& p : printed)
      if (std::find(band_names.begin(), band_names.end(), p.name) != band_names.end())
        lab[p.name] = label_by_width(X, c0, p.value);
    for (const auto& n : band_names) m.label.push_back(lab[n]);

    // values and segment functionals of the published parameters on a complex
    struct Param
    {
      FieldElement value;
      FieldElement lo, hi;  // the functional is the measure of [lo, hi]
    };
    auto params_of = [&](const BandComplex& Y, const Canonical<FieldElement>& c) {
      std::vector<Param> out;
      auto band = [&](const std::string& name) -> const Band& {
        int l = lab[name];
        if (l < 0) throw Error(ErrorKind::Audit, "no band with the published width " + name);
        return Y.bands[static_cast<size_t>(c.band_of_label[static_cast<size_t>(l)])];
      };
      for (const auto& p : printed)
      {
        if (std::find(band_names.begin(), band_names.end(), p.name) != band_names.end())
        {
          const Band& b = band(p.name);
          out.push_back({b.width, b.bottom, b.bottom + b.width});
        }
        else if (p.name == "h")
        {
          // gap from the first red base to the second on the first arc carrying both
          const Band& r1 = band("r1");
          const Band& r2 = band("r2");
          bool found = false;
          for (int ai : c.arc_order)
          {
            const SupportArc& arc = Y.arcs[static_cast<size_t>(ai)];
            for (const FieldElement& x1 : {r1.bottom, r1.top})
              for (const FieldElement& x2 : {r2.bottom, r2.top})
                if (!found && arc.lo <= x1 && x1 + r1.width <= arc.hi && arc.lo <= x2 && x2 + r2.width <= arc.hi &&
                    x1 + r1.width <= x2)
                {
                  out.push_back({x2 - (x1 + r1.width), x1 + r1.width, x2});
                  found = true;
                }
          }
          if (!found) throw Error(ErrorKind::Audit, "red bases never share an arc");
        }
        else
        {
          // d', e': from the start of the arc to the far and the near base of c'
          // (the band may come back upside down after a cycle)
          const Band& cb = band("c'");
          const FieldElement& far = max(cb.bottom, cb.top);
          const FieldElement& near = min(cb.bottom, cb.top);
          const FieldElement& x = p.name == "d'" ? far : near;
          const SupportArc& arc = Y.arcs[static_cast<size_t>(arc_containing(Y, x))];
          out.push_back({x - arc.lo, arc.lo, x});
        }
      }
      return out;
    };

    auto start = params_of(X, c0);
    auto end = params_of(r.end, r.end_canonical);
    m.widths_start = m.widths_end = true;
    for (size_t i = 0; i < printed.size(); i++)
    {
      m.start_values.push_back(start[i].value);
      m.end_values.push_back(end[i].value);
      m.widths_start = m.widths_start && start[i].value == printed[i].value;
      m.widths_end = m.widths_end && end[i].value == printed_after[i].value;
    }

    const Eigen::Index d = r.width_matrix.rows();
    const auto P_rows = static_cast<Eigen::Index>(printed.size());
    m.P = RatMatrix::Zero(P_rows, d);
    for (Eigen::Index i = 0; i < P_rows; i++)
    {
      auto row = parameter_row(r, interval_functional(r, start[static_cast<size_t>(i)].lo, start[static_cast<size_t>(i)].hi));
      for (Eigen::Index k = 0; k < d; k++) m.P(i, k) = row[static_cast<size_t>(k)];
    }
    m.D = m.P * r.width_matrix - Rp * m.P;

    // the relation: difference of the two arc lengths, or arc length minus total width
    std::vector<Rational> on_segments(cycle_segments(r).size(), Rational(0));
    if (first)
    {
      m.relation_name = "len(arc 1) - len(arc 2)";
      for (size_t k = 0; k < 2 && k < c0.arc_order.size(); k++)
      {
        const SupportArc& arc = X.arcs[static_cast<size_t>(c0.arc_order[k])];
        auto f = interval_functional(r, arc.lo, arc.hi);
        for (size_t j = 0; j < f.size(); j++) on_segments[j] += (k == 0 ? 1 : -1) * f[j];
      }
    }
    else
    {
      m.relation_name = "len(arc) - sum of widths";
      const SupportArc& arc = X.arcs[static_cast<size_t>(c0.arc_order[0])];
      auto f = interval_functional(r, arc.lo, arc.hi);
      for (size_t j = 0; j < f.size(); j++) on_segments[j] += f[j];
      for (const Band& b : X.bands)
      {
        auto g = interval_functional(r, b.bottom, b.bottom + b.width);
        for (size_t j = 0; j < g.size(); j++) on_segments[j] -= g[j];
      }
    }
    m.relation = parameter_row(r, on_segments);
    FieldElement at_start = 0;
    for (Eigen::Index k = 0; k < d; k++) at_start += m.relation[static_cast<size_t>(k)] * r.parameters[static_cast<size_t>(k)];
    m.relation_vanishes = at_start.is_zero();
    RatMatrix rel(1, d);
    for (Eigen::Index k = 0; k < d; k++) rel(0, k) = m.relation[static_cast<size_t>(k)];
    m.conjugate = rank<Rational>(rel) == 1 && rank<Rational>(m.P) == P_rows;
    for (Eigen::Index i = 0; i < m.D.rows(); i++)
    {
      RatMatrix two(2, d);
      two.row(0) = rel.row(0);
      two.row(1) = m.D.row(i);
      m.conjugate = m.conjugate && rank<Rational>(two) <= 1;
    }

    const auto nl = static_cast<Eigen::Index>(band_names.size());
    m.L_relabelled = RatMatrix::Zero(nl, nl);
    bool all_labels = std::none_of(m.label.begin(), m.label.end(), [](int l) { return l < 0; });
    if (all_labels && static_cast<size_t>(nl) == nb)
    {
      for (Eigen::Index i = 0; i < nl; i++)
        for (Eigen::Index j = 0; j < nl; j++)
          m.L_relabelled(i, j) = r.length_matrix(m.label[static_cast<size_t>(i)], m.label[static_cast<size_t>(j)]);
      m.L_equal = m.L_relabelled == Lp;
      m.lengths_equal = true;
      for (size_t i = 0; i < band_names.size(); i++)
        m.lengths_equal = m.lengths_equal && r.lengths[static_cast<size_t>(m.label[i])] == lengths_p[i];
    }
    auto a = r.lengths, b = lengths_p;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    m.lengths_multiset = a == b;
    return m;
  }

  std::vector<VerificationRow> run_verification(const std::string& scope, const VerifyOptions& opt)
  {
    if (scope != "all" && scope != "s1" && scope != "s2" && scope != "surface")
      throw Error(ErrorKind::PreconditionFailed, "unknown scope " + scope);
    std::vector<VerificationRow> rows;
    if (scope == "all" || scope == "s1") system_rows(rows, SystemId::S1, opt);
    if (scope == "all" || scope == "s2") system_rows(rows, SystemId::S2, opt);
    if (scope == "all" || scope == "surface") surface_rows(rows);
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    return rows;
  }

  bool all_passed(const std::vector<VerificationRow>& rows)
  {
    return std::none_of(rows.begin(), rows.end(), [](const auto& r) { return r.status == RowStatus::Fail; });
  }

  std::string format_rows(const std::vector<VerificationRow>& rows)
  {
    size_t w_id = 2, w_st = 6;
    for (const auto& r : rows)
    {
      w_id = std::max(w_id, r.id.size());
      w_st = std::max(w_st, std::string(row_status_name(r.status)).size());
    }
    std::ostringstream os;
    auto pad = [](const std::string& s, size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
    os << pad("id", w_id) << "  " << pad("status", w_st) << "  claim\n";
    for (const auto& r : rows)
    {
      os << pad(r.id, w_id) << "  " << pad(row_status_name(r.status), w_st) << "  " << r.claim << "\n";
      os << pad("", w_id) << "  " << pad("", w_st) << "    printed:  " << r.printed << "\n";
      os << pad("", w_id) << "  " << pad("", w_st) << "    computed: " << r.computed;
      if (!r.tolerance.empty()) os << "  (" << r.tolerance << ")";
      os << "\n";
    }
    size_t fails = static_cast<size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.status == RowStatus::Fail; }));
    os << rows.size() << " rows, " << fails << " failing\n";
    return os.str();
  }
}
