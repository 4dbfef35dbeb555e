#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catxi/exact_linalg.hpp"

#include <random>

using namespace catxi;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = rational(static_cast<long>(rng() % (2 * bound + 1)) - bound);
  return m;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
  RatMatrix m = RatMatrix::Zero(3, 3);
  CHECK(rank(m) == 0);
  m(0, 0) = 1;
  m(1, 1) = 1;
  CHECK(rank(m) == 2);
  m(2, 0) = 1;
  m(2, 1) = 1;  // row2 = row0 + row1
  CHECK(rank(m) == 2);
}

TEST_CASE("kernel basis spans the kernel exactly") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    RatMatrix a = random_matrix(rng, 4, 6, 3);
    RatMatrix k = kernel_basis(a);
    CHECK(k.cols() == 6 - rank(a));
    RatMatrix prod = a * k;
    for (Eigen::Index i = 0; i < prod.rows(); ++i)
      for (Eigen::Index j = 0; j < prod.cols(); ++j)
        CHECK(is_zero(prod(i, j)));
    CHECK(rank(k) == k.cols());
  }
}

TEST_CASE("solve finds solutions iff consistent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    RatMatrix a = random_matrix(rng, 5, 4, 3);
    RatVector x0 = random_matrix(rng, 4, 1, 3).col(0);
    RatVector b = a * x0;
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    RatVector residual = a * *x - b;
    for (Eigen::Index i = 0; i < residual.size(); ++i)
      CHECK(is_zero(residual(i)));
  }
  // Inconsistent system.
  RatMatrix a = RatMatrix::Zero(2, 2);
  a(0, 0) = 1;
  a(1, 0) = 1;
  RatVector b(2);
  b(0) = 1;
  b(1) = 2;
  CHECK_FALSE(solve(a, b).has_value());
}

TEST_CASE("column space tracking") {
  RatMatrix base(3, 1);
  base << Rational(1), Rational(0), Rational(0);
  RatMatrix extra(3, 3);
  extra << Rational(2), Rational(1), Rational(3), Rational(0), Rational(1),
      Rational(1), Rational(0), Rational(0), Rational(0);
  // col0 dependent on base, col1 new, col2 = base*? + col1 -> dependent
  auto chosen = extending_columns(base, extra);
  REQUIRE(chosen.size() == 1);
  CHECK(chosen[0] == 1);

  ColumnSpace space(3);
  space.insert_all(base);
  CHECK(space.contains(extra.col(0)));
  CHECK_FALSE(space.contains(extra.col(1)));
}
