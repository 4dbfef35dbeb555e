#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catxi/factor.hpp"

#include <random>

using namespace catxi;

namespace {

IntPoly ip(std::vector<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

IntPoly rebuild(const IntFactorization& f) {
  IntPoly acc{f.content};
  for (const auto& [factor, mult] : f.factors)
    for (int i = 0; i < mult; ++i) acc = acc * factor;
  return acc;
}

}  // namespace

TEST_CASE("factor t^2 - 1") {
  auto f = factor_over_integers(ip({-1, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.content == 1);
  CHECK(f.factors[0].first == ip({-1, 1}));
  CHECK(f.factors[1].first == ip({1, 1}));
}

TEST_CASE("factor 2t^2 - 3t + 1 into (2t - 1)(t - 1)") {
  auto f = factor_over_integers(ip({1, -3, 2}));
  REQUIRE(f.factors.size() == 2);
  CHECK(rebuild(f) == ip({1, -3, 2}));
  CHECK(f.factors[0].first == ip({-1, 1}));
  CHECK(f.factors[1].first == ip({-1, 2}));
}

TEST_CASE("t^2 - t - 1 is irreducible") {
  auto f = factor_over_integers(ip({-1, -1, 1}));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == ip({-1, -1, 1}));
  CHECK(f.factors[0].second == 1);
}

TEST_CASE("zero polynomial is rejected") {
  CHECK_THROWS_AS(factor_over_integers(IntPoly()), std::invalid_argument);
}

TEST_CASE("content, powers and t-factors are tracked") {
  // 12 t^3 (t - 1)^2
  IntPoly p = IntPoly(Int(12));
  for (int i = 0; i < 3; ++i) p = p * ip({0, 1});
  for (int i = 0; i < 2; ++i) p = p * ip({-1, 1});
  auto f = factor_over_integers(p);
  CHECK(f.content == 12);
  CHECK(rebuild(f) == p);
  bool saw_t = false, saw_lin = false;
  for (const auto& [factor, mult] : f.factors) {
    if (factor == ip({0, 1})) {
      saw_t = true;
      CHECK(mult == 3);
    }
    if (factor == ip({-1, 1})) {
      saw_lin = true;
      CHECK(mult == 2);
    }
  }
  CHECK(saw_t);
  CHECK(saw_lin);
}

TEST_CASE("kronecker splits a quartic with quadratic factors") {
  // (t^2 + t + 1)(t^2 + 1), no rational roots
  IntPoly p = ip({1, 1, 1}) * ip({1, 0, 1});
  auto f = factor_over_integers(p);
  REQUIRE(f.factors.size() == 2);
  CHECK(rebuild(f) == p);
  for (const auto& [factor, mult] : f.factors) {
    CHECK(mult == 1);
    CHECK(factor.degree() == 2);
  }
}

TEST_CASE("higher-degree cyclotomic products factor exactly") {
  IntPoly p = cyclotomic(5) * cyclotomic(8) * cyclotomic(1);
  auto f = factor_over_integers(p);
  CHECK(rebuild(f) == p);
  REQUIRE(f.factors.size() == 3);
}

TEST_CASE("classify_factor flag table") {
  auto v = classify_factor(ip({-2, 1}));  // t - 2
  CHECK(v.roots_are_algebraic_integers);
  CHECK_FALSE(v.roots_are_inverse_algebraic_integers);
  CHECK_FALSE(v.roots_are_dirichlet_units);

  v = classify_factor(ip({-1, 2}));  // 2t - 1
  CHECK_FALSE(v.roots_are_algebraic_integers);
  CHECK(v.roots_are_inverse_algebraic_integers);
  CHECK_FALSE(v.roots_are_dirichlet_units);

  v = classify_factor(ip({-1, -1, 1}));  // t^2 - t - 1, golden ratio
  CHECK(v.roots_are_algebraic_integers);
  CHECK(v.roots_are_inverse_algebraic_integers);
  CHECK(v.roots_are_dirichlet_units);
}

TEST_CASE("classify_factor rejects bad inputs") {
  CHECK_THROWS_AS(classify_factor(ip({-1, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(classify_factor(ip({0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(classify_factor(ip({5})), std::invalid_argument);
}

TEST_CASE("classification brute-force oracle on cyclotomics and t - n") {
  // All cyclotomic roots are roots of unity, hence Dirichlet units.
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
    auto v = classify_factor(cyclotomic(n));
    CHECK(v.roots_are_dirichlet_units);
  }
  // t - n for |n| >= 2: algebraic integers whose inverses are not.
  for (long n : {2L, 3L, -5L, 7L}) {
    auto v = classify_factor(ip({-n, 1}));
    CHECK(v.roots_are_algebraic_integers);
    CHECK_FALSE(v.roots_are_dirichlet_units);
  }
}

TEST_CASE("dirichlet units among the rationals are exactly +-1") {
  CHECK(is_dirichlet_unit_rational(rational(1)));
  CHECK(is_dirichlet_unit_rational(rational(-1)));
  CHECK_FALSE(is_dirichlet_unit_rational(rational(2)));
  CHECK_FALSE(is_dirichlet_unit_rational(rational(3, 2)));
  CHECK_FALSE(is_dirichlet_unit_rational(rational(1, 2)));
  CHECK_THROWS_AS(is_dirichlet_unit_rational(rational(0)),
                  std::invalid_argument);
}

TEST_CASE("random products reconstruct exactly") {
  std::mt19937_64 rng(2024);
  std::vector<IntPoly> pool = {ip({-1, 1}), ip({1, 1}),  ip({-2, 1}),
                               ip({-1, 2}), ip({1, 1, 1}), ip({-1, -1, 1}),
                               ip({1, 0, 1})};
  for (int trial = 0; trial < 20; ++trial) {
    IntPoly p{Int(1 + static_cast<long>(rng() % 5))};
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) p = p * pool[rng() % pool.size()];
    auto f = factor_over_integers(p);
    CHECK(rebuild(f) == p);
    // Spot-check: no reported factor of degree >= 2 has a rational root.
    for (const auto& [factor, mult] : f.factors) {
      (void)mult;
      if (factor.degree() < 2) continue;
      bool has_root = false;
      for (long num = -3; num <= 3; ++num)
        for (long den = 1; den <= 3; ++den)
          if (is_zero(to_rat_poly(factor).evaluate(rational(num, den))))
            has_root = true;
      CHECK_FALSE(has_root);
    }
  }
}
