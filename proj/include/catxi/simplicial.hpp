#pragma once

// Finite ordered simplicial complexes, integer 1-cocycles (the cellular
// closed 1-forms), edge-path integration and periods, boundary matrices,
// Betti numbers, subcomplexes and barycentric subdivision.
//
// Conventions: vertices are contiguous ids 0..n-1; a simplex is a strictly
// increasing vertex tuple; the edge (i, j) with i < j is positively
// oriented and a cocycle value on (j, i) is the negation.

#include "catxi/rational.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace catxi {

using Simplex = std::vector<int>;
using EdgePath = std::vector<int>;

struct SimplicialComplex {
  int vertex_count = 0;
  // by_dim[q] holds the q-simplices, sorted lexicographically; by_dim[0] is
  // the full vertex list.
  std::vector<std::vector<Simplex>> by_dim;

  int dim() const { return static_cast<int>(by_dim.size()) - 1; }
  int count(int q) const {
    if (q < 0 || q > dim()) return 0;
    return static_cast<int>(by_dim[static_cast<size_t>(q)].size());
  }
  const std::vector<Simplex>& simplices(int q) const;
  // Index within by_dim[q], or -1.
  int index_of(const Simplex& s) const;
  bool has(const Simplex& s) const { return index_of(s) >= 0; }
  bool has_edge(int u, int v) const;
};

// Builds the face closure of the given maximal simplices.  Input tuples are
// sorted; repeated vertices inside a tuple are an error.
SimplicialComplex complex_from_maximal(const std::vector<Simplex>& maximal);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;
};

// Diagnostic invariant check: strict ordering, closure under faces, and
// boundary-of-boundary vanishing.  Never throws.
ValidationReport validate_complex(const SimplicialComplex& k);

// Standard alternating-sign boundary; rows are (q-1)-simplices, columns are
// q-simplices.  Requires 1 <= q <= dim.
IntMatrix boundary_matrix(const SimplicialComplex& k, int q);

// Rational Betti numbers b_0..b_dim.
std::vector<long> betti_numbers(const SimplicialComplex& k);

bool is_connected(const SimplicialComplex& k);

class IntegerOneCocycle {
 public:
  IntegerOneCocycle() = default;

  void set(int u, int v, long long w);
  long long value(int u, int v) const;
  const std::map<std::pair<int, int>, long long>& weights() const {
    return weights_;
  }
  bool is_zero() const;

  IntegerOneCocycle scaled(long long factor) const;
  IntegerOneCocycle negated() const { return scaled(-1); }

 private:
  std::map<std::pair<int, int>, long long> weights_;  // keyed by (i < j)
};

// Per-2-simplex cocycle condition w(i,j) + w(j,k) - w(i,k) = 0; also flags
// weights sitting on pairs that are not edges of k.
std::vector<std::string> cocycle_violations(const SimplicialComplex& k,
                                            const IntegerOneCocycle& xi);
bool is_cocycle(const SimplicialComplex& k, const IntegerOneCocycle& xi);

// Sum of signed edge weights along the path; throws if a step is not an
// edge of the complex.
long long integrate(const SimplicialComplex& k, const IntegerOneCocycle& xi,
                    const EdgePath& path);

// integrate() for a closed path; throws if the path is not closed.
long long period(const SimplicialComplex& k, const IntegerOneCocycle& xi,
                 const EdgePath& loop);

// Vertex potential h with w(i,j) = h(j) - h(i) when the cocycle is exact
// (trivial periods); nullopt otherwise.  Complex must be connected per
// component; potentials are rooted at the least vertex of each component.
std::optional<std::vector<long long>> exactness_potential(
    const SimplicialComplex& k, const IntegerOneCocycle& xi);

// Heights h(v) obtained by integrating xi along a BFS spanning tree from
// vertex 0.  Throws on a disconnected complex.
std::vector<long long> spanning_tree_heights(const SimplicialComplex& k,
                                             const IntegerOneCocycle& xi);

// Gauge twist of an edge relative to heights: h(u) + w(u,v) - h(v).  Zero on
// tree edges; sums to the period around any loop.
inline long long twist_exponent(const IntegerOneCocycle& xi,
                                const std::vector<long long>& h, int u,
                                int v) {
  return h[static_cast<size_t>(u)] + xi.value(u, v) -
         h[static_cast<size_t>(v)];
}

// gcd of the periods over a generating system of loops (non-tree edges);
// 0 for an exact cocycle.
long long period_gcd(const SimplicialComplex& k, const IntegerOneCocycle& xi);

// --- Subcomplexes ------------------------------------------------------------

struct Subcomplex {
  // indices[q] = sorted indices into k.by_dim[q].
  std::vector<std::vector<int>> indices;

  int dim() const { return static_cast<int>(indices.size()) - 1; }
  int count(int q) const {
    if (q < 0 || q > dim()) return 0;
    return static_cast<int>(indices[static_cast<size_t>(q)].size());
  }
};

Subcomplex induced_subcomplex(const SimplicialComplex& k,
                              const std::vector<int>& vertices);
bool subcomplex_is_face_closed(const SimplicialComplex& k,
                               const Subcomplex& f);
// True iff xi restricted to f has trivial periods (checked by solving for
// potentials on each component of f's 1-skeleton).
bool restricts_to_zero(const SimplicialComplex& k, const IntegerOneCocycle& xi,
                       const Subcomplex& f);

// --- Barycentric subdivision --------------------------------------------------

struct BarycentricSubdivision {
  SimplicialComplex complex;
  // Sd-vertex id -> the original simplex whose barycenter it is.
  std::vector<Simplex> vertex_simplex;
};

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& k);

// Pullback of xi along the min-vertex simplicial approximation Sd(K) -> K;
// represents the same class after subdivision.
IntegerOneCocycle subdivide_cocycle(const BarycentricSubdivision& sd,
                                    const IntegerOneCocycle& xi);

// --- Text formats -------------------------------------------------------------

// Complex file: header "dim D", then one line "s v0 v1 ... vq" per maximal
// simplex; '#' starts a comment.
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex_text(const std::string& text);
std::string format_complex(const SimplicialComplex& k);

// Cocycle file: lines "w i j value".
IntegerOneCocycle parse_cocycle(std::istream& in);
IntegerOneCocycle parse_cocycle_text(const std::string& text);
std::string format_cocycle(const IntegerOneCocycle& xi);

}  // namespace catxi
