// Interval identification systems: construction, moves, Rauzy induction, orbits.
#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "thinsec/systems.hpp"

using namespace thinsec;

namespace
{
  Rational q(long p, long d = 1) { return Rational(p, d); }

  struct Abcu
  {
    FieldElement a, b, c, u;
  };

  Abcu s1()
  {
    auto p = s1_parameters();
    return {p[0].value, p[1].value, p[2].value, p[3].value};
  }

  template<class F>
  ErrorKind kind_of(F&& f)
  {
    try
    {
      f();
    }
    catch (const Error& e)
    {
      return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Audit;
  }

  // pairs as a sorted list of endpoint quadruples, lower member first
  std::vector<std::array<FieldElement, 4>> sorted_pairs(const IIS& s)
  {
    std::vector<std::array<FieldElement, 4>> v;
    for (const auto& p : s.pairs)
      if (p.right.lo < p.left.lo)
        v.push_back({p.right.lo, p.right.hi, p.left.lo, p.left.hi});
      else
        v.push_back({p.left.lo, p.left.hi, p.right.lo, p.right.hi});
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
      for (int k = 0; k < 4; k++)
        if (x[k] != y[k]) return x[k] < y[k];
      return false;
    });
    return v;
  }
}

TEST_SUITE("iis")
{
  TEST_CASE("the two systems")
  {
    IIS s = build_system(SystemId::S1);
    auto [a, b, c, u] = s1();
    CHECK(s.order() == 3);
    CHECK(s.A == FieldElement(0));
    CHECK(s.B == a + b + c);
    CHECK(s.pairs[2].left.lo == u);
    CHECK(s.pairs[2].right.lo == a + b - u);
    Validation v1 = validate(s);
    CHECK(v1.balanced);
    CHECK(v1.symmetric);
    Validation v2 = validate(build_system(SystemId::S2));
    CHECK(v2.balanced);
    CHECK_FALSE(v2.symmetric);

    CHECK(kind_of([] { make_iis(nullptr, 0, 1, {{{0, q(1, 2)}, {q(1, 2), q(9, 10)}}}); }) == ErrorKind::InvalidSystem);
    CHECK(kind_of([] { make_iis(nullptr, 0, 1, {{{0, q(1, 2)}, {q(3, 4), q(5, 4)}}}); }) == ErrorKind::InvalidSystem);
    CHECK(validate(make_iis(nullptr, 0, 1, {{{0, 1}, {0, 1}}})).balanced);
    CHECK_FALSE(validate(make_iis(nullptr, 0, 1, {{{0, q(1, 2)}, {q(1, 2), 1}}})).balanced);
  }

  TEST_CASE("transmission and reduction on the first system")
  {
    IIS s = build_system(SystemId::S1);
    auto [a, b, c, u] = s1();
    // pair 2's right member [a+c, a+b+c] carried along pair 1 onto [0, a]
    TransmitResult t = transmit(s, 1, Member::Right, 0, Member::Right);
    CHECK(t.system.pairs[1].right.lo == a - b);
    CHECK(t.system.pairs[1].right.hi == a);
    CHECK(t.admissible_right);
    CHECK_FALSE(t.admissible_left);
    CHECK(abs(approximate(a - b, q(1, 100000)) - q(190, 1000)) < q(1, 1000));

    IIS r = reduce(t.system, Side::Right);
    CHECK(r.A == FieldElement(0));
    CHECK(r.B == a + b + c - u);
    CHECK(r.pairs[0].left.hi == a - u);
    CHECK(r.pairs[0].right.lo == b + c);
    CHECK(r.pairs[0].right.hi == a + b + c - u);
    // nothing else moves
    CHECK(r.pairs[1].left.lo == t.system.pairs[1].left.lo);
    CHECK(r.pairs[2].left.lo == t.system.pairs[2].left.lo);

    RauzyStep st = rauzy_step(s, Side::Right);
    CHECK(st.reduced);
    CHECK(sorted_pairs(st.system) == sorted_pairs(r));

    // an interval carried along an identical interval lands on the partner
    IIS same = make_iis(nullptr, 0, 1, {{{0, q(1, 2)}, {q(1, 2), 1}}, {{0, q(1, 2)}, {q(1, 4), q(3, 4)}}});
    CHECK(transmit(same, 1, Member::Left, 0, Member::Left).system.pairs[1].left.lo == FieldElement(q(1, 2)));

    CHECK(kind_of([&] { transmit(s, 0, Member::Left, 0, Member::Right); }) == ErrorKind::SelfTransmission);
    CHECK(kind_of([&] { transmit(s, 0, Member::Left, 2, Member::Left); }) == ErrorKind::NotContained);
    // the right end of the first system is covered twice
    CHECK(kind_of([&] { reduce(s, Side::Right); }) == ErrorKind::PreconditionFailed);
  }

  TEST_CASE("Rauzy edge cases")
  {
    IIS tie = make_iis(nullptr, 0, 1, {{{0, q(1, 4)}, {q(3, 4), 1}}, {{q(1, 4), q(1, 2)}, {q(3, 4), 1}}});
    CHECK(kind_of([&] { rauzy_step(tie, Side::Right); }) == ErrorKind::AmbiguousMove);
    IIS lone = make_iis(nullptr, 0, 1, {{{0, q(1, 4)}, {q(3, 4), 1}}});
    CHECK(kind_of([&] { rauzy_step(lone, Side::Right); }) == ErrorKind::NoAdmissibleMove);
    // a rational rotation never becomes a scaled copy of itself
    IIS rot = make_iis(nullptr, 0, 1, {{{0, q(2, 3)}, {q(1, 3), 1}}, {{q(2, 3), 1}, {0, q(1, 3)}}});
    CHECK_FALSE(detect_self_similarity(rot, 12, Policy::Right).has_value());
    CHECK_FALSE(detect_self_similarity(rot, 8, Policy::Exhaustive).has_value());
  }

  TEST_CASE("self-similarity")
  {
    IIS s = build_system(SystemId::S1);
    FieldElement l1 = FieldElement::generator(lambda1_field());
    auto rep = detect_self_similarity(s, 12, Policy::Right);
    REQUIRE(rep);
    CHECK(rep->period == 6);
    CHECK(rep->contraction == l1);
    // the image is l * S1 + t endpoint by endpoint
    IIS img = apply_schedule(s, rep->schedule);
    IIS scaled = s;
    for (auto& p : scaled.pairs)
      for (Interval* iv : {&p.left, &p.right})
      {
        iv->lo = rep->contraction * iv->lo + rep->translation;
        iv->hi = rep->contraction * iv->hi + rep->translation;
      }
    CHECK(sorted_pairs(img) == sorted_pairs(scaled));
    CHECK(img.A == rep->contraction * s.A + rep->translation);
    CHECK(img.B == rep->contraction * s.B + rep->translation);

    auto left = detect_self_similarity(s, 12, Policy::Left);
    REQUIRE(left);
    CHECK(left->period == 6);
    // searching over both sides finds a shorter mixed schedule
    auto any = detect_self_similarity(s, 8, Policy::Exhaustive);
    REQUIRE(any);
    CHECK(any->period <= 6);
    CHECK(any->contraction == l1);

    IIS s2 = build_system(SystemId::S2);
    auto rep2 = detect_self_similarity(s2, 12, Policy::Right);
    REQUIRE(rep2);
    CHECK(rep2->period == 10);
    CHECK(rep2->contraction == FieldElement::generator(lambda2_field()));
    CHECK(rep2->move_log.size() == 20);
  }

  TEST_CASE("symmetry survives the right-left composite")
  {
    // one composite breaks the per-pair mirror condition; from two on it holds
    IIS s = build_system(SystemId::S1);
    std::vector<Side> sched;
    for (int k = 1; k <= 8; k++)
    {
      sched.push_back(Side::Right);
      sched.push_back(Side::Left);
      if (k >= 2) CHECK_MESSAGE(validate(apply_schedule(s, sched)).symmetric, "composites: " << k);
    }
  }

  TEST_CASE("orbits")
  {
    IIS s = build_system(SystemId::S1);
    auto [a, b, c, u] = s1();
    auto nb = orbit_neighbors(s, FieldElement(0));
    REQUIRE(nb.size() == 2);
    std::vector<FieldElement> ys{nb[0].y, nb[1].y};
    CHECK(std::count(ys.begin(), ys.end(), b + c) == 1);
    CHECK(std::count(ys.begin(), ys.end(), a + c) == 1);
    CHECK(point_valence(s, FieldElement(0)) == 2);
    CHECK(point_valence(s, a + b + c) == 2);

    // u + c/2 sits in pair 3's left member and in whatever else covers it
    FieldElement x = u + c / 2;
    int members = 0;
    for (const auto& p : s.pairs)
      for (const Interval* iv : {&p.left, &p.right}) members += iv->contains(x);
    CHECK(point_valence(s, x) == members);

    IIS gap = make_iis(nullptr, 0, 1, {{{0, q(1, 4)}, {q(3, 4), 1}}});
    CHECK(point_valence(gap, FieldElement(q(1, 2))) == 0);
    CHECK(point_valence(gap, FieldElement(q(1, 8))) == 1);
    CHECK(kind_of([&] { point_valence(gap, FieldElement(2)); }) == ErrorKind::OutOfSupport);

    auto g0 = orbit_bfs(s, x, 0);
    CHECK(g0.vertices.size() == 1);
    CHECK(g0.edges.empty());
    size_t prev = 0;
    for (int d = 0; d <= 8; d++)
    {
      auto g = orbit_bfs(s, x, d);
      CHECK(g.vertices.size() >= prev);
      prev = g.vertices.size();
      for (const auto& e : g.edges)
      {
        const auto& p = s.pairs[static_cast<size_t>(e.pair)];
        bool ok = (p.left.contains(e.x) && e.y == e.x - p.left.lo + p.right.lo) ||
                  (p.right.contains(e.x) && e.y == e.x - p.right.lo + p.left.lo);
        CHECK(ok);
      }
    }
  }

  TEST_CASE("move properties on random systems")
  {
    auto rep = testing::check_iis_moves(200, 2024);
    CHECK(rep.checks > 5000);
    CHECK_MESSAGE(rep.failures == 0, rep.first_failure);
  }
}
