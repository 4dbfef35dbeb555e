#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catxi/catbounds.hpp"
#include "catxi/fixtures.hpp"

using namespace catxi;
namespace fx = catxi::fixtures;

namespace {

const std::vector<Rational> kSmallPool = {rational(2), rational(1, 2)};

CatBoundOptions small_pool_options() {
  CatBoundOptions o;
  o.pool = kSmallPool;
  return o;
}

}  // namespace

TEST_CASE("normalize_class divides periods by their gcd") {
  SimplicialComplex k = fx::circle();
  auto norm = normalize_class(k, fx::circle_uniform_cocycle());
  CHECK(norm.multiplier == 3);
  CHECK(period_gcd(k, norm.xi0) == 1);

  auto unit = normalize_class(k, fx::circle_unit_cocycle());
  CHECK(unit.multiplier == 1);
  CHECK(unit.xi0.weights() == fx::circle_unit_cocycle().weights());

  auto zero = normalize_class(k, IntegerOneCocycle());
  CHECK(zero.multiplier == 0);
  CHECK(zero.xi0.is_zero());
}

TEST_CASE("rational cup length of tori and spheres") {
  {
    TwistedWorkspace w(fx::kuhn_torus(2), IntegerOneCocycle());
    CHECK(rational_cup_length(w) == 2);
  }
  {
    TwistedWorkspace w(fx::circle(), IntegerOneCocycle());
    CHECK(rational_cup_length(w) == 1);
  }
  {
    TwistedWorkspace w(fx::full_triangle(), IntegerOneCocycle());
    CHECK(rational_cup_length(w) == 0);
  }
}

TEST_CASE("upper bounds apply the minus-one rotation improvement") {
  SimplicialComplex k = fx::circle();
  auto ub = upper_bounds(k, fx::circle_unit_cocycle(), 2L);
  REQUIRE(ub.size() == 2);
  CHECK(ub[0].value == 1);  // dim + 1 - 1
  CHECK(ub[1].value == 1);  // user cat 2 - 1
  auto ub0 = upper_bounds(k, IntegerOneCocycle(), std::nullopt);
  REQUIRE(ub0.size() == 1);
  CHECK(ub0[0].value == 2);  // no rotation drop for the zero class
}

TEST_CASE("torus with a generator class: no certificate exists") {
  TwistedWorkspace w(fx::kuhn_torus(2), fx::torus_generator_cocycle(2, 0));
  SearchOptions opts;
  opts.pool = {rational(2), rational(1, 2), rational(3)};
  auto cert = search_certificate(w, opts);
  CHECK_FALSE(cert.has_value());
}

TEST_CASE("pool validation rejects units and zero") {
  TwistedWorkspace w(fx::kuhn_torus(2), fx::torus_generator_cocycle(2, 0));
  SearchOptions opts;
  opts.pool = {rational(1)};
  CHECK_THROWS_AS(search_certificate(w, opts), std::invalid_argument);
  opts.pool = {rational(0)};
  CHECK_THROWS_AS(search_certificate(w, opts), std::invalid_argument);
}

TEST_CASE("wedge T2 v S1: certificate with r = 0, exact value 2") {
  auto wedge = fx::wedge_with_circle(fx::kuhn_torus(2));
  TwistedWorkspace w(wedge.complex, wedge.xi);
  SearchOptions opts;
  opts.pool = kSmallPool;
  auto cert = search_certificate(w, opts);
  REQUIRE(cert.has_value());
  CHECK(cert->r == 0);
  std::string why;
  CHECK_MESSAGE(verify_certificate(wedge.complex, wedge.xi, *cert, &why), why);

  CatBoundReport report =
      cat_bound_report(wedge.complex, wedge.xi, small_pool_options());
  CHECK(report.lower == 1);
  CHECK(report.upper == 2);
  CHECK(report.wedge_detected);
  REQUIRE(report.exact.has_value());
  CHECK(*report.exact == 2);  // cat(T^2) = 3 from its own cup length
}

TEST_CASE("wedge detection finds the circle summand") {
  auto wedge = fx::wedge_with_circle(fx::kuhn_torus(2));
  auto split = detect_wedge_circle(wedge.complex, wedge.xi);
  REQUIRE(split.has_value());
  CHECK(split->cut_vertex == 0);
  CHECK(split->circle_vertices == std::vector<int>{0, 9, 10});
  CHECK(split->y_vertices.size() == 9);

  // The torus alone has no wedge structure.
  CHECK_FALSE(detect_wedge_circle(fx::kuhn_torus(2),
                                  fx::torus_generator_cocycle(2, 0))
                  .has_value());
  // The bare circle is only the degenerate wedge.
  CHECK_FALSE(
      detect_wedge_circle(fx::circle(), fx::circle_unit_cocycle()).has_value());
  CHECK(detect_wedge_circle(fx::circle(), fx::circle_unit_cocycle(), true)
            .has_value());
}

TEST_CASE("wedge formula values") {
  auto wedge = fx::wedge_with_circle(fx::kuhn_torus(2));
  // With user-supplied cat(T^2) = 3.
  WedgeCat wc = wedge_formula(wedge.complex, wedge.xi, 3L);
  CHECK(wc.exact());
  CHECK(wc.lower == 2);
  // Bracketed: cup length 2 -> cat in [3, 3].
  WedgeCat br = wedge_formula(wedge.complex, wedge.xi, std::nullopt);
  CHECK(br.exact());
  CHECK(br.lower == 2);
  // Degenerate wedge: the circle itself, Y = point.
  WedgeCat circ = wedge_formula(fx::circle(), fx::circle_unit_cocycle(),
                                std::nullopt);
  CHECK(circ.exact());
  CHECK(circ.lower == 0);
  // Not a wedge at all.
  CHECK_THROWS_AS(wedge_formula(fx::kuhn_torus(2),
                                fx::torus_generator_cocycle(2, 0),
                                std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("report: circle with generator class is [0, 1] without exactness") {
  CatBoundReport report =
      cat_bound_report(fx::circle(), fx::circle_unit_cocycle(),
                       small_pool_options());
  CHECK(report.lower == 0);
  CHECK(report.upper == 1);
  CHECK_FALSE(report.certificate.has_value());
  CHECK_FALSE(report.exact.has_value());
}

TEST_CASE("report: torus with zero class is exactly 3 via cup length") {
  CatBoundReport report =
      cat_bound_report(fx::kuhn_torus(2), IntegerOneCocycle(),
                       small_pool_options());
  CHECK(report.class_is_zero);
  CHECK(report.cup_length == 2);
  CHECK(report.lower == 3);
  CHECK(report.upper == 3);
  REQUIRE(report.exact.has_value());
  CHECK(*report.exact == 3);
}

TEST_CASE("report: torus with generator class is [0, 2]") {
  CatBoundOptions o = small_pool_options();
  o.user_cat = 3;
  CatBoundReport report =
      cat_bound_report(fx::kuhn_torus(2), fx::torus_generator_cocycle(2, 0), o);
  CHECK(report.lower == 0);
  CHECK(report.upper == 2);
  CHECK_FALSE(report.exact.has_value());
}

TEST_CASE("report is invariant under scaling the class") {
  auto wedge = fx::wedge_with_circle(fx::kuhn_torus(2));
  CatBoundReport base =
      cat_bound_report(wedge.complex, wedge.xi, small_pool_options());
  for (long long lambda : {2LL, -3LL}) {
    CatBoundReport scaled = cat_bound_report(
        wedge.complex, wedge.xi.scaled(lambda), small_pool_options());
    CHECK(scaled.lower == base.lower);
    CHECK(scaled.upper == base.upper);
    CHECK(scaled.exact == base.exact);
    CHECK(scaled.upper_provenance == base.upper_provenance);
    CHECK(scaled.normalization_gcd ==
          base.normalization_gcd * (lambda < 0 ? -lambda : lambda));
  }
}

TEST_CASE("certificates are re-verified and tampering is caught") {
  auto wedge = fx::wedge_with_circle(fx::kuhn_torus(2));
  TwistedWorkspace w(wedge.complex, wedge.xi);
  SearchOptions opts;
  opts.pool = kSmallPool;
  auto cert = search_certificate(w, opts);
  REQUIRE(cert.has_value());
  CupCertificate tampered = *cert;
  tampered.u.values(0) += rational(1);  // break closedness or the product
  std::string why;
  CHECK_FALSE(verify_certificate(wedge.complex, wedge.xi, tampered, &why));
}

TEST_CASE("report json has the documented shape and canonical rationals") {
  auto wedge = fx::wedge_with_circle(fx::kuhn_torus(2));
  CatBoundReport report =
      cat_bound_report(wedge.complex, wedge.xi, small_pool_options());
  nlohmann::json j = report_json(report);
  CHECK(j.contains("lower"));
  CHECK(j.contains("lower_certificate"));
  CHECK(j.contains("upper"));
  CHECK(j.contains("upper_provenance"));
  CHECK(j.contains("normalization"));
  CHECK(j["normalization"]["gcd"] == 1);
  REQUIRE_FALSE(j["lower_certificate"].is_null());
  std::string a = j["lower_certificate"]["a"].get<std::string>();
  CHECK(a.find('/') != std::string::npos);
  // Deterministic dump.
  CatBoundReport again =
      cat_bound_report(wedge.complex, wedge.xi, small_pool_options());
  CHECK(report_json(again).dump(2) == j.dump(2));
}

TEST_CASE("monotonic guard: lower never exceeds upper") {
  // Exercised on all reports above; here a direct small sweep.
  std::vector<std::pair<SimplicialComplex, IntegerOneCocycle>> cases = {
      {fx::circle(), fx::circle_unit_cocycle()},
      {fx::circle(), IntegerOneCocycle()},
      {fx::full_triangle(), IntegerOneCocycle()},
      {fx::kuhn_torus(2), fx::torus_generator_cocycle(2, 1)},
  };
  for (const auto& [k, xi] : cases) {
    CatBoundReport r = cat_bound_report(k, xi, small_pool_options());
    CHECK(r.lower <= r.upper);
  }
}
