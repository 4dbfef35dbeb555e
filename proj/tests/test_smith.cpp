#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catxi/exact_linalg.hpp"
#include "catxi/smith.hpp"

#include <random>

using namespace catxi;

namespace {

RatPoly t() { return RatPoly::variable(); }

PolyMatrix zero_poly_matrix(int rows, int cols) {
  PolyMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = RatPoly();
  return m;
}

bool is_identity(const PolyMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i == j && !m(i, j).is_one()) return false;
      if (i != j && !m(i, j).is_zero()) return false;
    }
  return true;
}

void check_snf_contract(const PolyMatrix& a, const SmithResult& r) {
  // U A V = D
  PolyMatrix lhs = r.u * a * r.v;
  for (Eigen::Index i = 0; i < lhs.rows(); ++i)
    for (Eigen::Index j = 0; j < lhs.cols(); ++j)
      CHECK(lhs(i, j) == r.d(i, j));
  // D diagonal with monic divisibility chain
  for (Eigen::Index i = 0; i < r.d.rows(); ++i)
    for (Eigen::Index j = 0; j < r.d.cols(); ++j)
      if (i != j) CHECK(r.d(i, j).is_zero());
  Eigen::Index steps = std::min(r.d.rows(), r.d.cols());
  for (Eigen::Index i = 0; i + 1 < steps; ++i) {
    if (!r.d(i + 1, i + 1).is_zero()) {
      REQUIRE_FALSE(r.d(i, i).is_zero());
      CHECK(divides(r.d(i, i), r.d(i + 1, i + 1)));
    }
  }
  for (Eigen::Index i = 0; i < steps; ++i)
    if (!r.d(i, i).is_zero()) CHECK(r.d(i, i).leading() == Rational(1));
  // Tracked inverses really invert
  CHECK(is_identity(r.u * r.u_inv));
  CHECK(is_identity(r.v * r.v_inv));
}

}  // namespace

TEST_CASE("diag(t, t) is already in normal form") {
  PolyMatrix a = zero_poly_matrix(2, 2);
  a(0, 0) = t();
  a(1, 1) = t();
  auto r = smith_normal_form(a);
  check_snf_contract(a, r);
  CHECK(r.d(0, 0) == t());
  CHECK(r.d(1, 1) == t());
}

TEST_CASE("[[t, 1], [0, t]] has invariants 1, t^2") {
  PolyMatrix a = zero_poly_matrix(2, 2);
  a(0, 0) = t();
  a(0, 1) = RatPoly(1);
  a(1, 1) = t();
  auto r = smith_normal_form(a);
  check_snf_contract(a, r);
  CHECK(r.d(0, 0) == RatPoly(1));
  CHECK(r.d(1, 1) == t() * t());
}

TEST_CASE("zero matrix stays zero with identity transforms") {
  PolyMatrix a = zero_poly_matrix(3, 2);
  auto r = smith_normal_form(a);
  check_snf_contract(a, r);
  CHECK(r.rank == 0);
  CHECK(is_identity(r.u));
  CHECK(is_identity(r.v));
}

TEST_CASE("empty shapes are tolerated") {
  auto r1 = smith_normal_form(zero_poly_matrix(0, 4));
  CHECK(r1.rank == 0);
  CHECK(r1.v.rows() == 4);
  auto r2 = smith_normal_form(zero_poly_matrix(3, 0));
  CHECK(r2.rank == 0);
  CHECK(r2.u.rows() == 3);
}

TEST_CASE("property suite: 200 random polynomial matrices") {
  std::mt19937_64 rng(424242);
  auto random_poly = [&](int maxdeg) {
    std::vector<Rational> cs;
    int deg = static_cast<int>(rng() % (maxdeg + 1));
    for (int i = 0; i <= deg; ++i)
      cs.push_back(rational(static_cast<long>(rng() % 7) - 3));
    return RatPoly(std::move(cs));
  };
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 5);
    int cols = 1 + static_cast<int>(rng() % 5);
    PolyMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a(i, j) = random_poly(2);
    auto r = smith_normal_form(a);
    check_snf_contract(a, r);

    // Rank at random specializations matches surviving diagonal entries.
    for (int probe = 0; probe < 5; ++probe) {
      Rational x = rational(static_cast<long>(rng() % 19) - 9,
                            1 + static_cast<long>(rng() % 3));
      int expected = 0;
      Eigen::Index steps = std::min<Eigen::Index>(rows, cols);
      for (Eigen::Index i = 0; i < steps; ++i) {
        if (r.d(i, i).is_zero()) continue;
        if (!is_zero(r.d(i, i).evaluate(x))) ++expected;
      }
      CHECK(rank(evaluate(a, x)) == expected);
    }
  }
}
