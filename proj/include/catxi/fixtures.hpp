#pragma once

// Standard desk-scale fixtures shared by tests and the CLI fixture writer:
// hollow/full triangles, Kuhn-triangulated tori T^2 and T^3 on a 3^n vertex
// grid, the degree-2 mapping torus, wedges with a circle, and the flow
// specification texts for the dynamics side.

#include "catxi/simplicial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace catxi::fixtures {

// Hollow triangle: minimal circle.
SimplicialComplex circle();
// Cocycle of period 1 on the circle (weight on edge (0,1)).
IntegerOneCocycle circle_unit_cocycle();
// Weights (1, 1, 1) around the circle: period 3.
IntegerOneCocycle circle_uniform_cocycle();

SimplicialComplex full_triangle();

// Kuhn (Freudenthal) triangulation of the n-torus on the grid Z_3^n;
// n = 2: 9 vertices / 18 triangles, n = 3: 27 vertices / 162 tetrahedra.
SimplicialComplex kuhn_torus(int n);
// Generator of H^1 dual to the given axis (carry cocycle, period 1).
IntegerOneCocycle torus_generator_cocycle(int n, int axis);

// Mapping torus of the degree-2 self-map of the circle: 15 vertices,
// 33 triangles; xi has period +1 on the base loop and the fiber class
// generates H_1 of the infinite cyclic cover with annihilator (t - 2).
SimplicialComplex mapping_torus_deg2();
IntegerOneCocycle mapping_torus_cocycle();
// The fiber circle as a 1-cycle coefficient vector.
RatVector mapping_torus_fiber_cycle(const SimplicialComplex& k);

// Wedge K v S^1 glued at vertex 0 of K; the circle gets fresh vertices
// {0, n, n+1}.  Returned cocycle is supported on the circle, period 1.
struct WedgeFixture {
  SimplicialComplex complex;
  IntegerOneCocycle xi;
  std::vector<int> circle_vertices;
};
WedgeFixture wedge_with_circle(const SimplicialComplex& k);

// --- Flow specifications (text format of the dynamics module) ---------------

// Constant irrational-slope flow on T^2, no zeros, xi = dtheta_1.
std::string constant_flow_spec();
// Negative gradient flow of cos(2 pi x1) + cos(2 pi x2): four zeros, xi = 0.
std::string morse_gradient_spec();
// Single degenerate zero with a homoclinic loop along the circle x2 = 0.
std::string saddle_loop_spec();
// Two zeros joined by a saddle connection both ways along x2 = 0; claims a
// Lyapunov function it cannot have.
std::string two_zero_spec();

}  // namespace catxi::fixtures
