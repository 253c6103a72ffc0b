// Acceptance runner: one PASS/FAIL line per criterion, with the measured
// values and the runtime against its budget.
//
//   acceptance [--criterion N]
//
// Exit status is 0 when every selected criterion passes.

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "thinsec/pruning.hpp"
#include "thinsec/section.hpp"
#include "thinsec/surface.hpp"
#include "thinsec/systems.hpp"
#include "thinsec/verify.hpp"

using namespace thinsec;

namespace
{
  struct Outcome
  {
    bool pass = false;
    std::string detail;
  };

  struct Criterion
  {
    int number;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
  };

  // certified: |x - printed| <= tol for every point of a tight enclosure
  bool within(const FieldElement& x, const Rational& printed, const Rational& tol)
  {
    RatInterval iv = enclose(x, pow10_inv(12));
    return printed - tol <= iv.lo && iv.hi <= printed + tol;
  }

  std::string fixed(double x, int digits)
  {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
  }

  FieldElement generator(SystemId id) { return FieldElement::generator(id == SystemId::S1 ? lambda1_field() : lambda2_field()); }

  Outcome eigen_residues()
  {
    Outcome o{true, ""};
    for (SystemId id : {SystemId::S1, SystemId::S2})
    {
      const bool one = id == SystemId::S1;
      RatMatrix N = one ? matrix_N1() : matrix_N2();
      FieldElement l = generator(id);
      EigenKernel k = eigen_kernel(N, l, 3);
      bool zero = k.dimension == 1;
      for (Eigen::Index i = 0; i < N.rows(); i++)
      {
        FieldElement s = -l * k.v(i);
        for (Eigen::Index j = 0; j < N.cols(); j++) s += FieldElement(N(i, j)) * k.v(j);
        zero = zero && s.is_zero();
      }
      auto printed = one ? s1_printed_eigenvector() : s2_printed_eigenvector();
      std::string worst;
      bool close = true;
      for (Eigen::Index i = 0; i < k.v.size(); i++)
        if (!within(k.v(i), printed[static_cast<size_t>(i)], Rational(5, 10000)))
        {
          close = false;
          worst += " v" + std::to_string(i + 1) + "=" + fixed(to_double(k.v(i)), 7) + " vs " +
                   fixed(to_double(printed[static_cast<size_t>(i)]), 4);
        }
      o.pass = o.pass && zero && close;
      o.detail += std::string(one ? "S1" : "S2") + ": residue " + (zero ? "0" : "nonzero") + ", normalized " +
                  (close ? "within 5e-4" : "off:" + worst) + "; ";
    }
    return o;
  }

  Outcome lambdas()
  {
    FieldElement l1 = generator(SystemId::S1), l2 = generator(SystemId::S2);
    const bool a = within(l1, Rational(254, 1000), Rational(5, 10000));
    const bool b = within(l2, Rational(798, 10000), Rational(1, 10000));
    return {a && b, "lambda1 = " + fixed(to_double(l1), 10) + (a ? " ok" : " off") + ", lambda2 = " +
                      fixed(to_double(l2), 10) + (b ? " ok" : " outside 0.0798 +- 1e-4")};
  }

  Outcome parameters()
  {
    Outcome o{true, ""};
    for (SystemId id : {SystemId::S1, SystemId::S2})
    {
      const bool one = id == SystemId::S1;
      EigenKernel k = eigen_kernel(one ? matrix_N1() : matrix_N2(), generator(id), 3);
      auto named = one ? s1_parameters() : s2_parameters();
      for (size_t i = 0; i < named.size(); i++)
      {
        const bool eq = k.v(static_cast<Eigen::Index>(i)) == named[i].value;
        o.pass = o.pass && eq;
        if (!eq) o.detail += named[i].name + " differs; ";
      }
      o.detail += std::string(one ? "S1" : "S2") + " " + std::to_string(named.size()) + " coordinates checked; ";
    }
    return o;
  }

  Outcome rauzy()
  {
    auto r1 = detect_self_similarity(build_system(SystemId::S1), 12, Policy::Right);
    auto r2 = detect_self_similarity(build_system(SystemId::S2), 16, Policy::Right);
    const bool a = r1 && r1->period == 6 && r1->contraction == generator(SystemId::S1);
    const bool b = r2 && r2->period == 10 && r2->contraction == generator(SystemId::S2);
    return {a && b, "S1 period " + (r1 ? std::to_string(r1->period) : "none") + ", S2 period " +
                      (r2 ? std::to_string(r2->period) : "none") + ", contractions " + (a && b ? "exact" : "wrong")};
  }

  bool scales(const CycleReport& r)
  {
    const auto n = static_cast<Eigen::Index>(r.parameters.size());
    for (Eigen::Index i = 0; i < n; i++)
    {
      FieldElement s = 0;
      for (Eigen::Index j = 0; j < n; j++) s += FieldElement(r.width_matrix(i, j)) * r.parameters[static_cast<size_t>(j)];
      if (s != r.contraction * r.parameters[static_cast<size_t>(i)]) return false;
    }
    return true;
  }

  std::string labels(const CycleMatch& m)
  {
    std::string s = "labels";
    for (size_t i = 0; i < m.label.size(); i++) s += " " + m.names[i] + "->" + std::to_string(m.label[i]);
    return s;
  }

  Outcome rips(SystemId id)
  {
    const bool one = id == SystemId::S1;
    CycleMatch m = match_cycle(id);
    const CycleReport& r = m.report;
    FieldElement l = generator(id);
    const bool contraction = r.contraction == (one ? l * l : l);
    const bool eigen = scales(r);
    bool ok = contraction && eigen && m.widths_start && m.widths_end && m.conjugate && m.L_equal;
    if (!one) ok = ok && m.lengths_multiset;
    std::string d = "prefix " + std::to_string(r.prefix_steps) + ", period " + std::to_string(r.period_steps) +
                    ", contraction " + (contraction ? "exact" : "wrong") + ", widths eigenvector " +
                    (eigen ? "yes" : "no") + ", start widths " + (m.widths_start ? "match" : "differ") +
                    ", end widths " + (m.widths_end ? "match" : "differ") + ", R " +
                    (m.conjugate ? "conjugate modulo " + m.relation_name : "not conjugate") + ", L " +
                    (m.L_equal ? "equal" : "differs");
    if (!one) d += std::string(", lengths ") + (m.lengths_multiset ? "(15, 14, 15) as a multiset" : "differ");
    d += "; " + labels(m);
    return {ok, d};
  }

  Outcome end_criterion()
  {
    Outcome o{true, ""};
    for (SystemId id : {SystemId::S1, SystemId::S2})
    {
      auto rep = detect_rips_cycle(complex_from_iis(build_system(id)), 60);
      if (!rep) return {false, "no cycle"};
      EndCriterion ec = one_end_criterion(*rep);
      o.pass = o.pass && ec.holds;
      o.detail += std::string(id == SystemId::S1 ? "S1" : "S2") + " product in [" + fixed(to_double(ec.product.lo), 6) +
                  ", " + fixed(to_double(ec.product.hi), 6) + "]" + (ec.holds ? " < 1" : " not certified") + "; ";
    }
    return o;
  }

  // rounds grow by a factor four until the estimate drops below 0.05; one
  // Rips period multiplies the leaf lengths, hence the round scale, by mu
  Outcome pruning()
  {
    IIS s = build_system(SystemId::S1);
    const double l2 = std::pow(to_double(generator(SystemId::S1)), 2);
    const int k = static_cast<int>(std::ceil(std::log(0.05) / std::log(l2)));
    PruningOptions opt;
    opt.samples = 1000;
    PruningResult r;
    for (opt.rounds = 64; opt.rounds <= 65536; opt.rounds *= 4)
    {
      r = pruning_decay(s, opt);
      if (!r.surviving.empty() && r.surviving.back() < 0.05) break;
    }
    opt.rounds = std::min(opt.rounds, 65536);
    bool monotone = true;
    for (size_t i = 1; i < r.surviving.size(); i++) monotone = monotone && r.surviving[i] <= r.surviving[i - 1];
    const int attempted = r.decided + r.exhausted + r.near_critical;
    const double exhausted = attempted ? static_cast<double>(r.exhausted) / attempted : 1.0;
    const double mu = 6.854101966;
    const double periods = std::log(static_cast<double>(opt.rounds)) / std::log(mu);
    const bool ok = monotone && r.surviving.back() < 0.05 && exhausted < 0.1 && periods >= k;
    return {ok, "depth cap " + std::to_string(opt.rounds) + " rounds (" + fixed(periods, 2) +
                  " periods, need " + std::to_string(k) + "), surviving " + fixed(r.surviving.back(), 3) +
                  (monotone ? ", monotone" : ", not monotone") + ", exhausted " + fixed(100 * exhausted, 1) +
                  "%, near critical " + std::to_string(r.near_critical)};
  }

  Outcome surface()
  {
    PLSurface S = build_surface(1);
    SaddleLevels sl = saddle_levels(S);
    const bool sym = check_central_symmetry(S);
    Vec3 p = printed_symmetry_centre(S);
    const bool found = check_central_symmetry(S, {Rational(1, 2), p[1], Rational(3, 4)});
    EulerReport e = euler_characteristic(S);
    const bool ok = sl.distinct && sym && e.closed && e.euler == -4;
    return {ok, std::string("saddles ") + (sl.distinct ? "distinct" : "collide") + ", symmetry about the given centre " +
                  (sym ? "holds" : "fails") + " (about (1/2, y, 3/4) " + (found ? "holds" : "fails") + "), chi " +
                  std::to_string(e.euler)};
  }

  Outcome census()
  {
    const double eps = default_eps();
    std::string d;
    bool ok = true;
    for (int ex : {1, 2})
    {
      PLSurface S = build_surface(ex);
      int one = 0, closed = 0, stable = 0;
      auto levels = random_levels(S, 20, 7, eps);
      for (double y : levels)
      {
        Census a = component_census(trace_section(S, y, 20, eps), 20);
        Census b = component_census(trace_section(S, y, 40, eps), 40);
        one += a.spanning == 1 && b.spanning == 1;
        stable += a.spanning == b.spanning;
        closed += a.closed + b.closed;
      }
      if (ex == 1) ok = one == 20 && closed == 0;
      d += "example " + std::to_string(ex) + (ex == 2 ? " (not gating)" : "") + ": " + std::to_string(one) +
           "/20 levels with one spanning component at R=20 and R=40, " + std::to_string(stable) +
           "/20 stable, closed " + std::to_string(closed) + "; ";
    }
    return {ok, d};
  }

  Outcome moves()
  {
    auto a = testing::check_iis_moves(1000, 11);
    auto b = testing::check_band_moves(1000, 12);
    const bool ok = a.failures == 0 && b.failures == 0;
    std::string d = "transmit/reduce " + std::to_string(a.checks) + " checks, " + std::to_string(a.failures) +
                    " failures; collapse/delete/merge " + std::to_string(b.checks) + " checks, " +
                    std::to_string(b.failures) + " failures";
    if (!a.first_failure.empty()) d += "; first: " + a.first_failure;
    if (!b.first_failure.empty()) d += "; first: " + b.first_failure;
    return {ok, d};
  }
}

int main(int argc, char** argv)
{
  int only = 0;
  for (int i = 1; i < argc; i++)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);

  const std::vector<Criterion> all = {
    {1, "exact eigen residues and normalized eigenvectors", 1, eigen_residues},
    {2, "certified lambda values", 1, lambdas},
    {3, "eigenvector coordinates equal the printed polynomials", 1, parameters},
    {4, "Rauzy self-similarity", 10, rauzy},
    {5, "Rips cycle of the first system", 30, [] { return rips(SystemId::S1); }},
    {6, "Rips cycle of the second system", 30, [] { return rips(SystemId::S2); }},
    {7, "one-end criterion", 1, end_criterion},
    {8, "pruning decay", 120, pruning},
    {9, "surface checks", 1, surface},
    {10, "section census", 300, census},
    {11, "move property suite", 120, moves},
  };

  bool all_pass = true;
  for (const Criterion& c : all)
  {
    if (only && c.number != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try
    {
      o = c.run();
    }
    catch (const std::exception& e)
    {
      o = {false, std::string("error: ") + e.what()};
    }
    while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';')) o.detail.pop_back();
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt < c.budget_seconds;
    const bool pass = o.pass && in_time;
    all_pass = all_pass && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name << "): " << o.detail
              << " [" << fixed(dt, 2) << " s of " << c.budget_seconds << " s" << (in_time ? "" : ", over budget")
              << "]\n";
  }
  return all_pass ? 0 : 1;
}
