// Band complexes, the Rips machine, cycles and the one-end criterion.
#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "thinsec/pruning.hpp"
#include "thinsec/systems.hpp"

using namespace thinsec;

namespace
{
  Rational q(long p, long d = 1) { return Rational(p, d); }

  BandComplex chain(int bands)
  {
    BandComplex X;
    for (int k = 0; k <= bands; k++) X.arcs.push_back({k, FieldElement(2 * k), FieldElement(2 * k + 1)});
    for (int k = 0; k < bands; k++)
    {
      Band b;
      b.id = k;
      b.bottom = FieldElement(2 * k);
      b.top = FieldElement(2 * k + 2);
      b.width = FieldElement(1);
      b.length = k + 1;
      X.bands.push_back(b);
    }
    X.next_arc_id = bands + 1;
    X.next_band_id = bands;
    return X;
  }

  std::vector<Rational> sorted(std::vector<Rational> v)
  {
    std::sort(v.begin(), v.end());
    return v;
  }

  // new parameters = contraction * old parameters, checked exactly in the field
  bool scales_parameters(const CycleReport& r)
  {
    const auto n = static_cast<Eigen::Index>(r.parameters.size());
    if (r.width_matrix.rows() != n || r.width_matrix.cols() != n) return false;
    for (Eigen::Index i = 0; i < n; i++)
    {
      FieldElement s = 0;
      for (Eigen::Index j = 0; j < n; j++) s += FieldElement(r.width_matrix(i, j)) * r.parameters[static_cast<size_t>(j)];
      if (s != r.contraction * r.parameters[static_cast<size_t>(i)]) return false;
    }
    return true;
  }
}

TEST_SUITE("rips")
{
  TEST_CASE("complex of a system")
  {
    IIS s = build_system(SystemId::S1);
    BandComplex X = complex_from_iis(s);
    REQUIRE(X.arcs.size() == 1);
    CHECK(X.arcs[0].lo == s.A);
    CHECK(X.arcs[0].hi == s.B);
    REQUIRE(X.bands.size() == 3);
    for (size_t i = 0; i < 3; i++)
    {
      CHECK(X.bands[i].bottom == s.pairs[i].left.lo);
      CHECK(X.bands[i].top == s.pairs[i].right.lo);
      CHECK(X.bands[i].width == s.pairs[i].width());
      CHECK(X.bands[i].length == 1);
    }
    CHECK(support_measure(X) == s.B - s.A);
    CHECK(testing::well_formed(X));
  }

  TEST_CASE("halting and merging")
  {
    // every point covered twice: nothing to collapse
    IIS full = make_iis(nullptr, 0, 1, {{{0, q(1, 2)}, {q(1, 2), 1}}, {{0, q(1, 2)}, {q(1, 2), 1}}});
    BandComplex X = complex_from_iis(full);
    CHECK(find_free_subarcs(X).empty());
    try
    {
      rips_step(X);
      FAIL("expected Halted");
    }
    catch (const Error& e)
    {
      CHECK(e.kind() == ErrorKind::Halted);
    }

    BandComplex C = merge_long_bands(chain(3));
    REQUIRE(C.bands.size() == 1);
    CHECK(C.arcs.size() == 2);
    CHECK(C.bands[0].length == 6);
    // the merged band may come out either way up
    const FieldElement lo = C.bands[0].bottom < C.bands[0].top ? C.bands[0].bottom : C.bands[0].top;
    const FieldElement hi = C.bands[0].bottom < C.bands[0].top ? C.bands[0].top : C.bands[0].bottom;
    CHECK(lo == FieldElement(0));
    CHECK(hi == FieldElement(6));
    CHECK(testing::well_formed(C));
  }

  TEST_CASE("first system cycle")
  {
    auto rep = detect_rips_cycle(complex_from_iis(build_system(SystemId::S1)), 60);
    REQUIRE(rep);
    FieldElement l = FieldElement::generator(lambda1_field());
    CHECK(rep->prefix_steps == 5);
    CHECK(rep->period_steps == 6);
    CHECK(rep->contraction == l * l);
    CHECK(scales_parameters(*rep));
    CHECK(sorted(rep->lengths) == std::vector<Rational>{1, 2, 5, 5});
    CHECK(rep->length_matrix == testing::leaf_path_lengths(*rep));
    EndCriterion ec = one_end_criterion(*rep);
    CHECK(ec.holds);
    CHECK(ec.product.hi < 1);
    CHECK(ec.product.lo > q(44, 100));
    CHECK(ec.product.hi < q(45, 100));
  }

  TEST_CASE("second system cycle")
  {
    auto rep = detect_rips_cycle(complex_from_iis(build_system(SystemId::S2)), 60);
    REQUIRE(rep);
    CHECK(rep->prefix_steps == 7);
    CHECK(rep->period_steps == 5);
    CHECK(rep->contraction == FieldElement::generator(lambda2_field()));
    CHECK(scales_parameters(*rep));
    CHECK(sorted(rep->lengths) == std::vector<Rational>{14, 15, 15});
    CHECK(rep->length_matrix == testing::leaf_path_lengths(*rep));
    EndCriterion ec = one_end_criterion(*rep);
    CHECK(ec.holds);
    CHECK(ec.mu.lo <= 7);
    CHECK(7 <= ec.mu.hi);
  }

  TEST_CASE("one-end criterion")
  {
    CHECK_FALSE(one_end_criterion(FieldElement(q(1, 2)), rat_matrix({{4}})).holds);
    CHECK(one_end_criterion(FieldElement(q(1, 8)), rat_matrix({{4}})).holds);
    // product exactly one is never certified below one
    CHECK_FALSE(one_end_criterion(FieldElement(q(1, 4)), rat_matrix({{4}})).holds);
  }

  TEST_CASE("pruning")
  {
    PruningOptions o;
    o.rounds = 6000;
    o.samples = 400;
    PruningResult r = pruning_decay(build_system(SystemId::S1), o);
    CHECK(r.exhausted == 0);
    for (size_t k = 1; k < r.surviving.size(); k++) CHECK(r.surviving[k] <= r.surviving[k - 1]);
    CHECK(r.surviving.back() < 0.08);

    // a rotation is balanced and every orbit is a line: nothing is ever pruned
    IIS rot = make_iis(nullptr, 0, 1, {{{0, q(1, 3)}, {q(2, 3), 1}}, {{q(1, 3), 1}, {0, q(2, 3)}}});
    o.rounds = 10;
    o.samples = 100;
    CHECK(pruning_decay(rot, o).surviving.back() == 1.0);
  }

  TEST_CASE("move properties on random complexes")
  {
    auto rep = testing::check_band_moves(200, 77);
    CHECK(rep.checks > 1000);
    CHECK_MESSAGE(rep.failures == 0, rep.first_failure);
  }
}
