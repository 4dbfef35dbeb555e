#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catxi/fixtures.hpp"
#include "catxi/simplicial.hpp"

#include <algorithm>
#include <random>

using namespace catxi;
namespace fx = catxi::fixtures;

TEST_CASE("full triangle validates and has contractible betti") {
  SimplicialComplex k = fx::full_triangle();
  auto report = validate_complex(k);
  CHECK(report.ok);
  CHECK(k.dim() == 2);
  CHECK(betti_numbers(k) == std::vector<long>{1, 0, 0});
}

TEST_CASE("missing face is reported as a closure violation") {
  SimplicialComplex k;
  k.vertex_count = 3;
  k.by_dim = {{{0}, {1}, {2}}, {{0, 1}, {0, 2}}, {{0, 1, 2}}};
  auto report = validate_complex(k);
  CHECK_FALSE(report.ok);
  bool closure = false;
  for (const auto& msg : report.issues)
    if (msg.find("closure") != std::string::npos) closure = true;
  CHECK(closure);
}

TEST_CASE("orientation errors are reported") {
  SimplicialComplex k;
  k.vertex_count = 3;
  k.by_dim = {{{0}, {1}, {2}}, {{1, 0}, {0, 2}, {1, 2}}};
  auto report = validate_complex(k);
  CHECK_FALSE(report.ok);
}

TEST_CASE("hollow triangle is a valid 1-complex with circle betti") {
  SimplicialComplex k = fx::circle();
  CHECK(validate_complex(k).ok);
  CHECK(k.dim() == 1);
  CHECK(betti_numbers(k) == std::vector<long>{1, 1});
}

TEST_CASE("boundary matrices of the full triangle") {
  SimplicialComplex k = fx::full_triangle();
  IntMatrix d1 = boundary_matrix(k, 1);
  CHECK(d1.rows() == 3);
  CHECK(d1.cols() == 3);
  for (int j = 0; j < 3; ++j) CHECK(d1.col(j).sum() == 0);
  IntMatrix d2 = boundary_matrix(k, 2);
  REQUIRE(d2.rows() == 3);
  REQUIRE(d2.cols() == 1);
  // Edges sorted: (0,1), (0,2), (1,2); d(012) = (12) - (02) + (01).
  CHECK(d2(0, 0) == 1);
  CHECK(d2(1, 0) == -1);
  CHECK(d2(2, 0) == 1);
  CHECK((d1 * d2).isZero());
  CHECK_THROWS_AS(boundary_matrix(k, 3), std::invalid_argument);
  CHECK_THROWS_AS(boundary_matrix(k, 0), std::invalid_argument);
}

TEST_CASE("9-vertex torus triangulation has betti (1, 2, 1)") {
  SimplicialComplex k = fx::kuhn_torus(2);
  CHECK(validate_complex(k).ok);
  CHECK(k.count(0) == 9);
  CHECK(k.count(1) == 27);
  CHECK(k.count(2) == 18);
  CHECK(betti_numbers(k) == std::vector<long>{1, 2, 1});
}

TEST_CASE("27-vertex 3-torus triangulation has betti (1, 3, 3, 1)") {
  SimplicialComplex k = fx::kuhn_torus(3);
  CHECK(validate_complex(k).ok);
  CHECK(k.count(0) == 27);
  CHECK(k.count(3) == 162);
  CHECK(betti_numbers(k) == std::vector<long>{1, 3, 3, 1});
}

TEST_CASE("torus generator cocycles are cocycles with unit periods") {
  for (int axis = 0; axis < 2; ++axis) {
    SimplicialComplex k = fx::kuhn_torus(2);
    IntegerOneCocycle xi = fx::torus_generator_cocycle(2, axis);
    CHECK(is_cocycle(k, xi));
    // Loop around the chosen axis: ids step by 3^axis.
    int stride = axis == 0 ? 1 : 3;
    EdgePath loop = {0, stride, 2 * stride, 0};
    CHECK(period(k, xi, loop) == 1);
    // Loop around the other axis has period 0.
    int other = axis == 0 ? 3 : 1;
    EdgePath cross = {0, other, 2 * other, 0};
    CHECK(period(k, xi, cross) == 0);
  }
}

TEST_CASE("integration with explicit weights on the hollow triangle") {
  SimplicialComplex k = fx::circle();
  IntegerOneCocycle xi;
  xi.set(0, 1, 1);
  xi.set(1, 2, 1);
  xi.set(0, 2, 2);
  CHECK(integrate(k, xi, {0, 1, 2}) == 2);
  CHECK(period(k, xi, {0, 1, 2, 0}) == 0);  // 1 + 1 - 2
  CHECK(period(k, xi, {0, 1, 2, 0}) == -period(k, xi, {0, 2, 1, 0}));

  IntegerOneCocycle uniform = fx::circle_uniform_cocycle();
  CHECK(period(k, uniform, {0, 1, 2, 0}) == 3);
  CHECK(period(k, uniform, {0, 1, 2, 0, 1, 2, 0}) == 6);
  CHECK_THROWS_AS(period(k, uniform, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(integrate(k, uniform, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("contractible loops in the full triangle have period zero") {
  SimplicialComplex k = fx::full_triangle();
  IntegerOneCocycle xi;  // exact: w = dh for h = (0, 1, 5)
  xi.set(0, 1, 1);
  xi.set(1, 2, 4);
  xi.set(0, 2, 5);
  REQUIRE(is_cocycle(k, xi));
  CHECK(period(k, xi, {0, 1, 2, 0}) == 0);
  auto h = exactness_potential(k, xi);
  REQUIRE(h.has_value());
  for (const auto& e : k.simplices(1))
    CHECK((*h)[e[1]] - (*h)[e[0]] == xi.value(e[0], e[1]));
}

TEST_CASE("integration is additive and antisymmetric on random paths") {
  SimplicialComplex k = fx::kuhn_torus(2);
  IntegerOneCocycle xi = fx::torus_generator_cocycle(2, 0);
  std::mt19937_64 rng(5150);
  std::vector<std::vector<int>> adjacency(9);
  for (const auto& e : k.simplices(1)) {
    adjacency[e[0]].push_back(e[1]);
    adjacency[e[1]].push_back(e[0]);
  }
  for (int trial = 0; trial < 30; ++trial) {
    EdgePath path{static_cast<int>(rng() % 9)};
    for (int step = 0; step < 8; ++step) {
      const auto& nbrs = adjacency[path.back()];
      path.push_back(nbrs[rng() % nbrs.size()]);
    }
    EdgePath reversed(path.rbegin(), path.rend());
    CHECK(integrate(k, xi, path) == -integrate(k, xi, reversed));
    size_t cut = 1 + rng() % (path.size() - 2);
    EdgePath front(path.begin(), path.begin() + cut + 1);
    EdgePath back(path.begin() + cut, path.end());
    CHECK(integrate(k, xi, path) ==
          integrate(k, xi, front) + integrate(k, xi, back));
  }
}

TEST_CASE("period is invariant under backtracks and 2-simplex slides") {
  SimplicialComplex k = fx::kuhn_torus(2);
  IntegerOneCocycle xi = fx::torus_generator_cocycle(2, 1);
  EdgePath loop = {0, 3, 6, 0};
  long long base = period(k, xi, loop);

  EdgePath backtracked = {0, 1, 0, 3, 6, 0};
  CHECK(period(k, xi, backtracked) == base);

  // Slide across every 2-simplex adjacent to a loop edge: replace (u, v) by
  // (u, w, v) whenever {u, v, w} is a triangle.
  for (size_t i = 0; i + 1 < loop.size(); ++i) {
    int u = loop[i], v = loop[i + 1];
    for (const auto& tri : k.simplices(2)) {
      bool has_u = std::find(tri.begin(), tri.end(), u) != tri.end();
      bool has_v = std::find(tri.begin(), tri.end(), v) != tri.end();
      if (!has_u || !has_v) continue;
      int w = -1;
      for (int cand : tri)
        if (cand != u && cand != v) w = cand;
      EdgePath slid(loop.begin(), loop.begin() + i + 1);
      slid.push_back(w);
      slid.insert(slid.end(), loop.begin() + i + 1, loop.end());
      CHECK(period(k, xi, slid) == base);
    }
  }
}

TEST_CASE("exactness detection recovers potentials") {
  SimplicialComplex k = fx::kuhn_torus(2);
  std::mt19937_64 rng(77);
  std::vector<long long> h(9);
  for (auto& v : h) v = static_cast<long long>(rng() % 21) - 10;
  IntegerOneCocycle xi;
  for (const auto& e : k.simplices(1))
    xi.set(e[0], e[1], h[e[1]] - h[e[0]]);
  REQUIRE(is_cocycle(k, xi));
  CHECK(period_gcd(k, xi) == 0);
  auto recovered = exactness_potential(k, xi);
  REQUIRE(recovered.has_value());
  for (const auto& e : k.simplices(1))
    CHECK((*recovered)[e[1]] - (*recovered)[e[0]] == xi.value(e[0], e[1]));

  CHECK_FALSE(
      exactness_potential(k, fx::torus_generator_cocycle(2, 0)).has_value());
}

TEST_CASE("cocycle violations are detected") {
  SimplicialComplex k = fx::full_triangle();
  IntegerOneCocycle bad;
  bad.set(0, 1, 1);  // 1 + 0 - 0 != 0 on (0,1,2)
  CHECK_FALSE(is_cocycle(k, bad));
  CHECK_FALSE(cocycle_violations(k, bad).empty());
}

TEST_CASE("complex and cocycle text round-trip") {
  SimplicialComplex k = fx::kuhn_torus(2);
  SimplicialComplex k2 = parse_complex_text(format_complex(k));
  CHECK(k2.by_dim == k.by_dim);
  CHECK(k2.vertex_count == k.vertex_count);

  IntegerOneCocycle xi = fx::torus_generator_cocycle(2, 0);
  IntegerOneCocycle xi2 = parse_cocycle_text(format_cocycle(xi));
  CHECK(xi2.weights() == xi.weights());

  CHECK_THROWS_AS(parse_complex_text("s 0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_text("dim 1\nbogus 0 1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_cocycle_text("w 1 1 3\n"), std::invalid_argument);
}

TEST_CASE("subcomplexes: induced, closed, restriction flags") {
  auto wedge = fx::wedge_with_circle(fx::kuhn_torus(2));
  const auto& k = wedge.complex;
  Subcomplex torus_part = induced_subcomplex(k, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(subcomplex_is_face_closed(k, torus_part));
  CHECK(torus_part.count(2) == 18);
  CHECK(restricts_to_zero(k, wedge.xi, torus_part));
  Subcomplex circle_part = induced_subcomplex(k, {0, 9, 10});
  CHECK(subcomplex_is_face_closed(k, circle_part));
  CHECK_FALSE(restricts_to_zero(k, wedge.xi, circle_part));
}

TEST_CASE("barycentric subdivision of the torus preserves betti") {
  SimplicialComplex k = fx::kuhn_torus(2);
  auto sd = barycentric_subdivision(k);
  CHECK(validate_complex(sd.complex).ok);
  CHECK(sd.complex.count(0) == 9 + 27 + 18);
  CHECK(sd.complex.count(2) == 18 * 6);
  CHECK(betti_numbers(sd.complex) == std::vector<long>{1, 2, 1});

  IntegerOneCocycle xi = fx::torus_generator_cocycle(2, 0);
  IntegerOneCocycle sxi = subdivide_cocycle(sd, xi);
  CHECK(is_cocycle(sd.complex, sxi));
  CHECK(period_gcd(sd.complex, sxi) == period_gcd(k, xi));
}

TEST_CASE("subdivision of the circle is the hexagon") {
  auto sd = barycentric_subdivision(fx::circle());
  CHECK(sd.complex.count(0) == 6);
  CHECK(sd.complex.count(1) == 6);
  CHECK(betti_numbers(sd.complex) == std::vector<long>{1, 1});
  IntegerOneCocycle sxi = subdivide_cocycle(sd, fx::circle_unit_cocycle());
  CHECK(period_gcd(sd.complex, sxi) == 1);
}

TEST_CASE("period gcd and scaling") {
  SimplicialComplex k = fx::circle();
  CHECK(period_gcd(k, fx::circle_uniform_cocycle()) == 3);
  CHECK(period_gcd(k, fx::circle_unit_cocycle()) == 1);
  CHECK(period_gcd(k, fx::circle_unit_cocycle().scaled(-6)) == 6);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(fx::kuhn_torus(2)));
  SimplicialComplex two = complex_from_maximal({{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two));
}

TEST_CASE("mapping torus fixture is a valid complex with expected counts") {
  SimplicialComplex k = fx::mapping_torus_deg2();
  CHECK(validate_complex(k).ok);
  CHECK(k.count(0) == 15);
  CHECK(k.count(1) == 48);
  CHECK(k.count(2) == 33);
  IntegerOneCocycle xi = fx::mapping_torus_cocycle();
  CHECK(is_cocycle(k, xi));
  // Base loop t0 -> m0 -> b0 -> t0 has period +1.
  CHECK(period(k, xi, {0, 6, 12, 0}) == 1);
  // Fiber loop has period 0.
  CHECK(period(k, xi, {12, 13, 14, 12}) == 0);
  CHECK(period_gcd(k, xi) == 1);
  // Wang sequence for the doubling map: betti (1, 1, 0).
  CHECK(betti_numbers(k) == std::vector<long>{1, 1, 0});
}
