#include "catxi/fixtures.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace catxi::fixtures {

SimplicialComplex circle() {
  return complex_from_maximal({{0, 1}, {1, 2}, {0, 2}});
}

IntegerOneCocycle circle_unit_cocycle() {
  IntegerOneCocycle xi;
  xi.set(0, 1, 1);
  return xi;
}

IntegerOneCocycle circle_uniform_cocycle() {
  IntegerOneCocycle xi;
  xi.set(0, 1, 1);
  xi.set(1, 2, 1);
  xi.set(2, 0, 1);
  return xi;
}

SimplicialComplex full_triangle() {
  return complex_from_maximal({{0, 1, 2}});
}

namespace {

int grid_id(const std::vector<int>& x) {
  int id = 0, stride = 1;
  for (int c : x) {
    id += c * stride;
    stride *= 3;
  }
  return id;
}

std::vector<int> grid_coords(int id, int n) {
  std::vector<int> x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    x[static_cast<size_t>(i)] = id % 3;
    id /= 3;
  }
  return x;
}

}  // namespace

SimplicialComplex kuhn_torus(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("kuhn_torus: n in {1,2,3}");
  std::vector<int> axes(static_cast<size_t>(n));
  std::iota(axes.begin(), axes.end(), 0);
  std::vector<Simplex> maximal;
  int cells = 1;
  for (int i = 0; i < n; ++i) cells *= 3;
  std::vector<int> perm = axes;
  do {
    for (int base = 0; base < cells; ++base) {
      std::vector<int> x = grid_coords(base, n);
      Simplex s{grid_id(x)};
      for (int axis : perm) {
        x[static_cast<size_t>(axis)] = (x[static_cast<size_t>(axis)] + 1) % 3;
        s.push_back(grid_id(x));
      }
      maximal.push_back(std::move(s));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return complex_from_maximal(maximal);
}

IntegerOneCocycle torus_generator_cocycle(int n, int axis) {
  if (axis < 0 || axis >= n)
    throw std::invalid_argument("torus_generator_cocycle: bad axis");
  SimplicialComplex k = kuhn_torus(n);
  IntegerOneCocycle xi;
  for (const auto& e : k.simplices(1)) {
    std::vector<int> a = grid_coords(e[0], n), b = grid_coords(e[1], n);
    // Each edge is {x, x + d} with d in {0,1}^n; find which endpoint is the
    // tail.
    auto is_step = [&](const std::vector<int>& tail,
                       const std::vector<int>& head) {
      for (int i = 0; i < n; ++i) {
        int diff = (head[static_cast<size_t>(i)] -
                    tail[static_cast<size_t>(i)] + 3) % 3;
        if (diff > 1) return false;
      }
      return true;
    };
    std::vector<int> tail = a, head = b;
    if (!is_step(tail, head)) std::swap(tail, head);
    // Carry in the chosen axis: the step wraps 2 -> 0.
    int carry = (tail[static_cast<size_t>(axis)] == 2 &&
                 head[static_cast<size_t>(axis)] == 0)
                    ? 1
                    : 0;
    if (carry) xi.set(grid_id(tail), grid_id(head), 1);
  }
  return xi;
}

SimplicialComplex mapping_torus_deg2() {
  // Vertices: hexagon t0..t5 = 0..5, hexagon m0..m5 = 6..11, triangle
  // b0..b2 = 12..14.  Three strips: a prism t->m, a degree-1 collapse
  // m->b, and the degree-2 mapping cylinder t->b closing the torus.
  auto t = [](int i) { return i % 6; };
  auto m = [](int i) { return 6 + (i % 6); };
  auto b = [](int i) { return 12 + (i % 3); };
  std::vector<Simplex> tris;
  for (int i = 0; i < 6; ++i) {
    tris.push_back({t(i), t(i + 1), m(i + 1)});
    tris.push_back({t(i), m(i), m(i + 1)});
  }
  // Collapse map m_i -> b_{i/2}.
  auto s_img = [&](int i) { return b((i % 6) / 2); };
  for (int i = 0; i < 6; ++i) {
    int x = s_img(i), y = s_img(i + 1);
    if (x == y) {
      tris.push_back({m(i), m(i + 1), x});
    } else {
      tris.push_back({m(i), m(i + 1), y});
      tris.push_back({m(i), x, y});
    }
  }
  // Doubling map t_i -> b_{i mod 3}.
  for (int i = 0; i < 6; ++i) {
    int x = b(i), y = b(i + 1);
    tris.push_back({t(i), t(i + 1), y});
    tris.push_back({t(i), x, y});
  }
  return complex_from_maximal(tris);
}

IntegerOneCocycle mapping_torus_cocycle() {
  // Weight -1 on every edge of the doubling strip, so the base loop
  // t -> m -> b -> t has period +1.
  IntegerOneCocycle xi;
  for (int i = 0; i < 6; ++i) {
    xi.set(i, 12 + (i % 3), -1);
    xi.set(i, 12 + ((i + 1) % 3), -1);
  }
  return xi;
}

RatVector mapping_torus_fiber_cycle(const SimplicialComplex& k) {
  RatVector z = RatVector::Zero(k.count(1));
  auto edge_index = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    int idx = k.index_of({u, v});
    if (idx < 0) throw std::logic_error("fiber edge missing");
    return idx;
  };
  z(edge_index(12, 13)) = 1;
  z(edge_index(13, 14)) = 1;
  z(edge_index(12, 14)) = -1;
  return z;
}

WedgeFixture wedge_with_circle(const SimplicialComplex& k) {
  WedgeFixture w;
  int n = k.vertex_count;
  std::vector<Simplex> maximal;
  for (int q = k.dim(); q >= 0; --q) {
    for (const auto& s : k.simplices(q)) {
      bool is_maximal = true;
      if (q < k.dim()) {
        for (const auto& bigger : k.simplices(q + 1))
          if (std::includes(bigger.begin(), bigger.end(), s.begin(),
                            s.end())) {
            is_maximal = false;
            break;
          }
      }
      if (is_maximal) maximal.push_back(s);
    }
  }
  maximal.push_back({0, n});
  maximal.push_back({n, n + 1});
  maximal.push_back({0, n + 1});
  w.complex = complex_from_maximal(maximal);
  w.xi.set(0, n, 1);
  w.circle_vertices = {0, n, n + 1};
  return w;
}

namespace {
constexpr const char* kTwoPi = "6.283185307179586";
}

std::string constant_flow_spec() {
  std::string s;
  s += "torus 2\n";
  s += "field 1\n";
  s += "field 0.6180339887498949\n";
  s += "form_const 1 0\n";
  s += "form_exact 0\n";
  s += "delta 0.05\n";
  s += "time 1\n";
  s += "samples 2\n";
  return s;
}

std::string morse_gradient_spec() {
  std::string tp = kTwoPi;
  std::string s;
  s += "torus 2\n";
  s += "field " + tp + "*sin(" + tp + "*x1)\n";
  s += "field " + tp + "*sin(" + tp + "*x2)\n";
  s += "form_const 0 0\n";
  s += "form_exact 0 - cos(" + tp + "*x1) - cos(" + tp + "*x2)\n";
  s += "zero 0 0\n";
  s += "zero 0 0.5\n";
  s += "zero 0.5 0\n";
  s += "zero 0.5 0.5\n";
  s += "delta 0.05\n";
  s += "time 2\n";
  s += "samples 3\n";
  return s;
}

std::string saddle_loop_spec() {
  std::string tp = kTwoPi;
  std::string s;
  s += "torus 2\n";
  s += "field 0.5*(1 - cos(" + tp + "*x1)) + 0.5*(1 - cos(" + tp + "*x2))\n";
  s += "field 0 - 0.3*(1 - cos(" + tp + "*x2))\n";
  s += "form_const 0 0\n";
  s += "form_exact 0\n";
  s += "zero 0 0\n";
  s += "delta 0.05\n";
  s += "time 2\n";
  s += "samples 3\n";
  return s;
}

std::string two_zero_spec() {
  std::string tp = kTwoPi;
  std::string s;
  s += "torus 2\n";
  s += "field 0.25*(1 - cos(" + tp + "*x1))*(1 - cos(" + tp +
       "*(x1 - 0.5))) + 0.5*(1 - cos(" + tp + "*x2))\n";
  s += "field 0 - 0.3*(1 - cos(" + tp + "*x2))\n";
  s += "form_const 0 0\n";
  // Claimed Lyapunov differential; the claim is untrue and the audit is
  // expected to name the failures.
  s += "form_exact 0 - 0.1*cos(" + tp + "*x1)\n";
  s += "zero 0 0\n";
  s += "zero 0.5 0\n";
  s += "delta 0.05\n";
  s += "time 2\n";
  s += "samples 3\n";
  return s;
}

}  // namespace catxi::fixtures
