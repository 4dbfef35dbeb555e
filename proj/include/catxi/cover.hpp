#pragma once

// The infinite cyclic cover of (K, xi) as a finite free chain complex over
// the Laurent ring Q[t, 1/t], its homology modules (free rank + primary
// torsion factors), movability of classes toward the two ends, and the
// constructive moving witnesses.
//
// Direction convention: t is the deck transformation along which a loop of
// period +1 translates; the end "-inf" is the one exhausted by t^{-r} K as
// r grows.  Negating xi swaps the ends, which the tests use as a guard.

#include "catxi/factor.hpp"
#include "catxi/laurent.hpp"
#include "catxi/simplicial.hpp"
#include "catxi/smith.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace catxi {

struct LaurentChainComplex {
  SimplicialComplex complex;
  IntegerOneCocycle xi;
  std::vector<long long> heights;  // spanning-tree lift, root height 0
  // boundary[q]: C_q -> C_{q-1} for q = 1..dim; entries are unit monomials.
  std::vector<LaurentMatrix> boundary;

  int dim() const { return complex.dim(); }
  const LaurentMatrix& d(int q) const;
};

// Requires K connected and xi a valid cocycle.
LaurentChainComplex build_laurent_complex(const SimplicialComplex& k,
                                          const IntegerOneCocycle& xi);

// t -> a specialization of the boundary matrix (a != 0).
RatMatrix specialize_boundary(const LaurentChainComplex& l, int q,
                              const Rational& a);

// --- Chains over the Laurent ring --------------------------------------------

// A q-chain with Laurent coefficients, stored as one rational coefficient
// vector per t-degree; zero slices are dropped.
struct LaurentChain {
  int q = 0;
  std::map<long, RatVector> slices;

  bool is_zero() const { return slices.empty(); }
  long min_degree() const;
  long max_degree() const;
  void add(long degree, const RatVector& v);
  LaurentChain shifted(long k) const;
  LaurentChain scaled(const Rational& c) const;
  friend LaurentChain operator+(const LaurentChain& a, const LaurentChain& b);
  friend LaurentChain operator-(const LaurentChain& a, const LaurentChain& b);
  friend bool operator==(const LaurentChain& a, const LaurentChain& b);
};

// Chain at t-degree 0 from plain simplicial coefficients.
LaurentChain chain_from_coeffs(int q, const RatVector& coeffs);

LaurentChain apply_boundary(const LaurentChainComplex& l,
                            const LaurentChain& chain);

bool is_cycle(const LaurentChainComplex& l, const LaurentChain& chain);

// --- Homology modules ---------------------------------------------------------

// One primary torsion component R/(prime^power).
struct TorsionFactor {
  IntPoly prime;  // irreducible, primitive, positive lead, nonzero const term
  int power = 1;
  FactorVerdict verdict;  // classification of `prime`
};

struct TorsionDecomposition {
  int q = 0;
  long free_rank = 0;
  std::vector<TorsionFactor> factors;
};

// Full decomposition data for one dimension: the public torsion summary
// plus the SNF coordinates needed to locate individual cycles.
struct CoverHomology {
  TorsionDecomposition decomposition;

  // Internals (in the polynomialized basis; see cover.cpp).
  PolyMatrix cycle_rows;    // rows of V1^{-1} that vanish exactly on cycles
  PolyMatrix kernel_rows;   // remaining rows: coordinates in the kernel basis
  PolyMatrix kernel_basis;  // columns: kernel basis as chains
  PolyMatrix u2;            // basis change aligning kernel coords with
                            // invariant factors
  PolyMatrix u2_inv;
  std::vector<RatPoly> invariant_factors;  // monic, t-power stripped; one per
                                           // torsion coordinate
  long torsion_count = 0;  // leading coordinates with nonunit factor
  long unit_count = 0;     // coordinates with unit invariant factor
  // free coordinates: indices >= torsion_count + unit_count
};

// Torsion/free decomposition of H_q over Q[t,1/t] via Smith normal form.
CoverHomology homology_module(const LaurentChainComplex& l, int q);

// Generator cycle of the i-th torsion coordinate (order = invariant factor).
LaurentChain torsion_generator(const CoverHomology& h, int q, long i);

enum class CoverEnd { Minus, Plus };

enum class EndMovability {
  No,
  Movable,              // witness with multiplier k = +-1 exists
  MovableAfterMultiple  // criterion holds; realized witness needed |k| > 1
};

struct MovabilityVerdict {
  EndMovability minus_end = EndMovability::No;
  EndMovability plus_end = EndMovability::No;
  EndMovability both_ends = EndMovability::No;
  bool is_cycle = false;
  bool has_free_component = false;
  bool is_trivial_class = false;
  RatPoly annihilator;  // monic annihilator of the torsion part of [z]
};

// Thm-5.2-style criterion per end, read off the prime factors of the
// annihilator of [z]; when `attempt_witness` is set, a small moving witness
// distinguishes plain movability (k = 1) from movability after a multiple.
MovabilityVerdict movability_verdict(const LaurentChainComplex& l,
                                     const CoverHomology& h,
                                     const LaurentChain& z,
                                     bool attempt_witness = true);

struct MoveWitness {
  LaurentChain cycle;              // z as given
  long long multiplier = 1;        // k
  IntPoly annihilator;             // monic integral p with p * [k z] = 0
  long expansion_power = 0;        // the rewritten power M
  std::vector<Int> expansion;      // b_j with t^{+-M} = sum b_j t^{+-j} mod p
  long threshold = 0;              // requested N
  CoverEnd end = CoverEnd::Minus;
  LaurentChain moved;              // k z rewritten beyond the threshold
  LaurentChain bounding;           // c with  boundary(c) = k z - moved
  std::pair<long, long> window;    // t-degree window of the solve
};

// Constructive relocation of (a multiple of) z beyond t-degree -N / +N.
// Throws if the verdict does not grant the requested end, or if the solve
// fails within the widened degree window (window is reported).
MoveWitness move_cycle_witness(const LaurentChainComplex& l,
                               const CoverHomology& h, const LaurentChain& z,
                               CoverEnd end, long n);

// Exact recheck: boundary(c) = k z - moved and the support bound.
bool verify_witness(const LaurentChainComplex& l, const MoveWitness& w,
                    std::string* why = nullptr);

// --- Cached per-(complex, xi) handle -----------------------------------------

class CoverAnalysis {
 public:
  explicit CoverAnalysis(const SimplicialComplex& k,
                         const IntegerOneCocycle& xi)
      : l_(build_laurent_complex(k, xi)) {}

  const LaurentChainComplex& laurent_complex() const { return l_; }

  const CoverHomology& homology(int q) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(q);
    if (it == cache_.end())
      it = cache_.emplace(q, std::make_shared<CoverHomology>(
                                 homology_module(l_, q)))
               .first;
    return *it->second;
  }

 private:
  LaurentChainComplex l_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<CoverHomology>> cache_;
};

// --- Sparse unit-pivot reduction ----------------------------------------------

// Chain-equivalent reduction of the cover complex by cancelling unit
// incidences (algebraic Morse reduction).  Preserves homology modules; used
// to keep subdivided fixtures tractable before Smith normal form.
struct SparseLaurentComplex {
  int dim = 0;
  std::vector<std::vector<char>> alive;  // per dimension, per original cell
  // boundary[q]: row (q-1 cell) -> col (q cell) -> value
  std::vector<std::map<int, std::map<int, LaurentQ>>> rows;
  std::vector<std::map<int, std::map<int, LaurentQ>>> cols;

  long alive_count(int q) const;
};

SparseLaurentComplex to_sparse(const LaurentChainComplex& l);
void reduce_by_unit_pivots(SparseLaurentComplex& s);

// Free rank + primary factors per dimension, computed after reduction.
std::vector<TorsionDecomposition> reduced_homology_summary(
    const LaurentChainComplex& l);

}  // namespace catxi
