#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catxi/laurent.hpp"
#include "catxi/polynomial.hpp"
#include "catxi/rational.hpp"

#include <random>

using namespace catxi;

TEST_CASE("rational parsing and canonical formatting") {
  CHECK(to_string(rational(3, 6)) == "1/2");
  CHECK(to_string(rational(-4, 2)) == "-2/1");
  CHECK(parse_rational("7/21") == rational(1, 3));
  CHECK(parse_rational("-5") == rational(-5));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("pow_rational handles negative exponents") {
  CHECK(pow_rational(rational(2), 10) == rational(1024));
  CHECK(pow_rational(rational(2), -3) == rational(1, 8));
  CHECK(pow_rational(rational(-2), 3) == rational(-8));
  CHECK(pow_rational(rational(5), 0) == rational(1));
  CHECK_THROWS_AS(pow_rational(rational(0), -1), std::domain_error);
}

TEST_CASE("polynomial ring ops and trimming") {
  RatPoly t = RatPoly::variable();
  RatPoly p = t * t - RatPoly(1);  // t^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Rational(-1));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  RatPoly q = (t - RatPoly(1)) * (t + RatPoly(1));
  CHECK(p == q);
  CHECK(p.str() == "t^2 - 1/1");
  CHECK(p.evaluate<Rational>(rational(3)) == rational(8));
}

TEST_CASE("euclidean division over the rationals") {
  RatPoly t = RatPoly::variable();
  RatPoly a = t * t * t - RatPoly(2) * t + RatPoly(5);
  RatPoly b = t * t + RatPoly(1);
  auto dm = divmod(a, b);
  CHECK(dm.quotient * b + dm.remainder == a);
  CHECK(dm.remainder.degree() < b.degree());
  CHECK(divides(t - RatPoly(1), t * t - RatPoly(1)));
  CHECK_FALSE(divides(t - RatPoly(2), t * t - RatPoly(1)));
}

TEST_CASE("poly gcd and lcm are monic and divide correctly") {
  RatPoly t = RatPoly::variable();
  RatPoly a = (t - RatPoly(1)) * (t - RatPoly(2));
  RatPoly b = (t - RatPoly(1)) * (t + RatPoly(3));
  RatPoly g = poly_gcd(RatPoly(2) * a, RatPoly(7) * b);
  CHECK(g == t - RatPoly(1));
  RatPoly l = poly_lcm(a, b);
  CHECK(divides(a, l));
  CHECK(divides(b, l));
  CHECK(l.degree() == 3);
}

TEST_CASE("random gcd property: g divides both, quotients coprime") {
  std::mt19937_64 rng(12345);
  auto random_poly = [&](int deg) {
    std::vector<Rational> cs;
    for (int i = 0; i <= deg; ++i)
      cs.push_back(rational(static_cast<long>(rng() % 11) - 5));
    return RatPoly(std::move(cs));
  };
  for (int trial = 0; trial < 50; ++trial) {
    RatPoly a = random_poly(4), b = random_poly(3);
    if (a.is_zero() || b.is_zero()) continue;
    RatPoly g = poly_gcd(a, b);
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    if (!g.is_zero() && g.degree() >= 0) {
      RatPoly ca = exact_div(a, g), cb = exact_div(b, g);
      CHECK(poly_gcd(ca, cb).degree() == 0);
    }
  }
}

TEST_CASE("integer form and primitive parts") {
  RatPoly t = RatPoly::variable();
  RatPoly q = rational(3, 4) * t * t - rational(1, 2) * t;
  auto form = integer_form(q);
  CHECK(form.primitive == IntPoly(std::vector<Int>{Int(0), Int(-2), Int(3)}));
  CHECK(form.scale == rational(1, 4));
  CHECK(to_rat_poly(form.primitive) * RatPoly(form.scale) == q);
}

TEST_CASE("laurent canonical form, units, evaluation") {
  LaurentQ z;
  CHECK(z.is_zero());
  LaurentQ t = LaurentQ::monomial(rational(1), 1);
  LaurentQ u = LaurentQ::monomial(rational(-2), -3);
  CHECK(u.is_unit());
  LaurentQ p = t + u;  // t + (-2) t^-3
  CHECK(p.min_degree() == -3);
  CHECK(p.max_degree() == 1);
  CHECK_FALSE(p.is_unit());
  CHECK(p.evaluate(rational(2)) == rational(2) + rational(-2, 8));
  CHECK((p - p).is_zero());
  CHECK((p - p).shift() == 0);

  // inverted variable: t -> 1/t
  LaurentQ inv = p.inverted_variable();
  CHECK(inv.evaluate(rational(2)) == p.evaluate(rational(1, 2)));
}

TEST_CASE("laurent chain arithmetic stays canonical") {
  LaurentQ a = LaurentQ(RatPoly(std::vector<Rational>{rational(0), rational(1)}), -1);
  // t * t^-1 = 1 in canonical form
  CHECK(a.shift() == 0);
  CHECK(a.poly().degree() == 0);
  CHECK(a.is_unit());
}
