// JSON round trips, SVG output and the verification table's negative control.
#include <doctest.h>

#include "support.hpp"
#include "thinsec/json_io.hpp"
#include "thinsec/surface.hpp"
#include "thinsec/svg.hpp"
#include "thinsec/systems.hpp"

using namespace thinsec;
using thinsec::json::Json;

namespace
{
  int count(const std::string& s, const std::string& needle)
  {
    int n = 0;
    for (size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) n++;
    return n;
  }
}

TEST_SUITE("io")
{
  TEST_CASE("scalars and matrices")
  {
    Rational r(-22, 7);
    CHECK(json::rational(r) == Json("-22/7"));
    CHECK(json::rational_from(json::rational(r)) == r);
    CHECK(json::rational_from(Json(3)) == 3);
    RatMatrix N = matrix_N2();
    CHECK(json::matrix_from(json::matrix(N)) == N);
    FieldElement l = FieldElement::generator(lambda2_field());
    FieldElement x = 3 * l * l - Rational(1, 3) * l + 5;
    FieldElement y = json::element_from(json::element(x));
    CHECK(y == x);
    CHECK(y.field()->same_as(*x.field()));
    CHECK(json::element_from(json::element(FieldElement(Rational(5, 2)))) == FieldElement(Rational(5, 2)));
    CHECK_THROWS_AS(json::rational_from(Json("one half")), Error);
    CHECK_THROWS_AS(json::matrix_from(Json::parse("[[1, 2], [3]]")), Error);
  }

  TEST_CASE("systems and complexes")
  {
    for (SystemId id : {SystemId::S1, SystemId::S2})
    {
      IIS s = build_system(id);
      IIS t = json::iis_from(Json::parse(json::iis(s).dump()));
      REQUIRE(t.order() == s.order());
      CHECK(t.A == s.A);
      CHECK(t.B == s.B);
      for (int i = 0; i < s.order(); i++)
      {
        const auto& p = s.pairs[static_cast<size_t>(i)];
        const auto& q = t.pairs[static_cast<size_t>(i)];
        CHECK(p.left.lo == q.left.lo);
        CHECK(p.right.hi == q.right.hi);
      }
      BandComplex X = rips_step(complex_from_iis(s)).complex;
      BandComplex Y = json::band_complex_from(Json::parse(json::band_complex(X).dump()));
      REQUIRE(Y.bands.size() == X.bands.size());
      REQUIRE(Y.arcs.size() == X.arcs.size());
      for (size_t k = 0; k < X.bands.size(); k++)
      {
        CHECK(Y.bands[k].bottom == X.bands[k].bottom);
        CHECK(Y.bands[k].top == X.bands[k].top);
        CHECK(Y.bands[k].width == X.bands[k].width);
        CHECK(Y.bands[k].length == X.bands[k].length);
      }
    }
    // an invalid system is rejected on load
    Json bad = json::iis(build_system(SystemId::S1));
    bad["pairs"][0]["right"][1] = "100";
    CHECK_THROWS_AS(json::iis_from(bad), Error);
  }

  TEST_CASE("svg")
  {
    IIS s = build_system(SystemId::S1);
    std::string a = svg::iis(s, "S1");
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(count(a, "<line") == 2 * s.order() + 1);
    std::string b = svg::band_complex(complex_from_iis(s));
    CHECK(count(b, "<polygon") == s.order());
    PLSurface S = build_surface(1);
    auto comps = trace_section(S, random_levels(S, 1, 5, 1e-9)[0], 3, 1e-9);
    std::string c = svg::section(comps, 3, "x2 <level> & more");
    CHECK(c.find("&lt;level&gt; &amp; more") != std::string::npos);
    CHECK(count(c, "<polyline") >= static_cast<int>(comps.size()));
  }

  TEST_CASE("verification table")
  {
    auto rows = run_verification("all");
    CHECK(rows.size() > 60);
    CHECK(std::is_sorted(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.id < y.id; }));
    auto find = [&](const std::vector<VerificationRow>& rs, const std::string& id) {
      for (const auto& r : rs)
        if (r.id == id) return r.status;
      FAIL("missing row " << id);
      return RowStatus::Fail;
    };
    CHECK(find(rows, "s1.eigen.residue") == RowStatus::ExactPass);
    CHECK(find(rows, "s2.rauzy") == RowStatus::ExactPass);

    // negative control: one corrupted entry of the first transition matrix
    VerifyOptions opt;
    opt.N1 = matrix_N1();
    (*opt.N1)(0, 0) += 1;
    auto bad = run_verification("s1", opt);
    CHECK(find(bad, "s1.eigen.residue") == RowStatus::Fail);
    CHECK_FALSE(all_passed(bad));
    CHECK(json::rows(bad).size() == bad.size());
  }
}
