#pragma once

// Rank-1 local systems a^xi over a complex, their cohomology (twisted Betti
// numbers, bases, coboundary tests), the Alexander-Whitney cup product with
// parallel-transport correction, and the relative lifting/vanishing check.
//
// Trivialization: the same spanning-tree heights as the cyclic cover, so
// every transport factor is an integer power of the monodromy.  The twisted
// coboundary is the t -> a specialization of the transposed Laurent boundary.

#include "catxi/cover.hpp"
#include "catxi/exact_linalg.hpp"
#include "catxi/simplicial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace catxi {

struct LocalSystem {
  Rational monodromy;  // nonzero
  const IntegerOneCocycle* xi = nullptr;
  const std::vector<long long>* heights = nullptr;
};

struct TwistedCochain {
  int q = 0;
  RatVector values;
};

// Coboundary matrices and cohomology data of one local system, computed
// eagerly; immutable afterwards.
class TwistedComplex {
 public:
  TwistedComplex(const LaurentChainComplex& cover, const Rational& a);

  const Rational& monodromy() const { return a_; }
  int dim() const { return dim_; }

  // delta_q : C^q -> C^{q+1}, for q = 0..dim (the top one has zero rows).
  const RatMatrix& delta(int q) const;
  int betti(int q) const;
  // Columns are representative cocycles spanning H^q.
  const RatMatrix& cohomology_basis(int q) const;

  bool is_closed(const TwistedCochain& u) const;
  // Solves delta_{q-1} x = u; empty for q = 0 unless u = 0.
  std::optional<RatVector> coboundary_preimage(const TwistedCochain& u) const;
  bool is_coboundary(const TwistedCochain& u) const;

 private:
  Rational a_;
  int dim_;
  std::vector<RatMatrix> delta_;
  std::vector<RatMatrix> basis_;
  std::vector<int> betti_;
};

// Shared handle for one (K, xi): the Laurent cover plus one TwistedComplex
// per monodromy value, built on demand and cached.  Thread-safe.
class TwistedWorkspace {
 public:
  TwistedWorkspace(const SimplicialComplex& k, const IntegerOneCocycle& xi);

  const SimplicialComplex& complex() const { return cover_.complex; }
  const IntegerOneCocycle& xi() const { return cover_.xi; }
  const std::vector<long long>& heights() const { return cover_.heights; }
  const LaurentChainComplex& cover() const { return cover_; }

  const TwistedComplex& at(const Rational& a) const;

  // Alexander-Whitney product with front-vertex transport: u in a^xi of
  // degree p, v in b^xi of degree p'; the result lives in (ab)^xi.
  TwistedCochain cup(const Rational& a, const Rational& b,
                     const TwistedCochain& u, const TwistedCochain& v,
                     bool check_closed = true) const;

 private:
  LaurentChainComplex cover_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Int, Int>, std::shared_ptr<TwistedComplex>>
      cache_;
};

RatMatrix twisted_coboundary(const TwistedWorkspace& w, const Rational& a,
                             int q);
int twisted_betti(const TwistedWorkspace& w, const Rational& a, int q);

// Restriction of a cochain to the subcomplex (values reindexed to F).
RatVector restrict_cochain(const SimplicialComplex& k, const Subcomplex& f,
                           const TwistedCochain& u);

// Twisted coboundary of the subcomplex in the inherited trivialization.
RatMatrix subcomplex_delta(const TwistedWorkspace& w, const Rational& a,
                           const Subcomplex& f, int q);

// Betti of the pair (X, F): cochains vanishing on F.
int relative_twisted_betti(const TwistedWorkspace& w, const Rational& a,
                           const Subcomplex& f, int q);

struct LiftingCheck {
  bool pass = false;
  // A cohomology class of X whose restriction to F is not a coboundary.
  std::optional<TwistedCochain> witness;
};

// PASS iff the restriction H^i(X; a^xi) -> H^i(F; a^xi) is the zero map
// (equivalently, H^i(X, F; a^xi) -> H^i(X; a^xi) is onto).  Preconditions:
// xi|_F = 0 and a is not a Dirichlet unit; violations throw.
LiftingCheck lifting_vanishing_check(const TwistedWorkspace& w,
                                     const Rational& a, const Subcomplex& f,
                                     int i);

}  // namespace catxi
