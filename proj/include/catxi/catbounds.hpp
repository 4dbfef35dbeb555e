#pragma once

// Certified bounds for Cat(X, xi): the twisted cup-product certificate
// search for the lower bound, structural upper bounds (dimension / supplied
// classical category, minus one for a nonzero class on a connected complex),
// the wedge formula for exact values, and scaling normalization.

#include "catxi/twisted.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace catxi {

struct NormalizedClass {
  IntegerOneCocycle xi0;
  long long multiplier = 0;  // gcd of periods; 0 for the zero class
};

// Divides the class by the gcd of its periods (gauge-fixed representative);
// the zero class is returned unchanged with multiplier 0.
NormalizedClass normalize_class(const SimplicialComplex& k,
                                const IntegerOneCocycle& xi);

struct CupCertificate {
  Rational a, b;
  TwistedCochain u;                   // closed in a^xi
  TwistedCochain v;                   // closed in b^xi
  std::vector<TwistedCochain> w_list;  // ordinary classes, positive degree
  TwistedCochain product;              // nonzero class in (ab)^xi
  int r = 0;                           // = w_list.size(); Cat > r
};

// Re-derives every certificate invariant from scratch on a fresh workspace.
bool verify_certificate(const SimplicialComplex& k,
                        const IntegerOneCocycle& xi,
                        const CupCertificate& cert, std::string* why = nullptr);

struct SearchOptions {
  std::vector<Rational> pool;  // monodromies; must exclude 0 and +-1
  int max_r = -1;              // cap on extensions; default dim - 2
  int alternatives = 2;        // extra branches explored per level
};

// Greedy cup-product certificate search over basis classes, pairs of pool
// monodromies in ascending lexicographic order, first maximal r wins.
std::optional<CupCertificate> search_certificate(const TwistedWorkspace& w,
                                                 const SearchOptions& options);

// Longest nonvanishing product of positive-degree rational classes.
long rational_cup_length(const TwistedWorkspace& w);

struct UpperBound {
  long value = 0;
  std::string provenance;
};

// Dimension and user-supplied category bounds, lowered by one when the
// complex is connected and the class is nonzero.
std::vector<UpperBound> upper_bounds(const SimplicialComplex& k,
                                     const IntegerOneCocycle& xi,
                                     std::optional<long> user_cat);

struct WedgeSplit {
  int cut_vertex = -1;
  std::vector<int> circle_vertices;  // includes the cut vertex
  std::vector<int> y_vertices;       // includes the cut vertex
};

// Combinatorial detection: a cut vertex separating a cycle-graph summand
// that carries every nonzero weight of xi.  The degenerate case (the whole
// complex is that circle) is reported only when `allow_degenerate`.
std::optional<WedgeSplit> detect_wedge_circle(const SimplicialComplex& k,
                                              const IntegerOneCocycle& xi,
                                              bool allow_degenerate = false);

struct WedgeCat {
  long lower = 0;
  long upper = 0;
  bool exact() const { return lower == upper; }
};

// Cat(Y v S^1, xi) = cat(Y) - 1 with cat(Y) supplied, or bracketed by
// rational cup length + 1 and dim + 1.  Throws when no wedge structure is
// detected or xi is nonzero on the Y side.
WedgeCat wedge_formula(const SimplicialComplex& k, const IntegerOneCocycle& xi,
                       std::optional<long> cat_y);

struct CatBoundOptions {
  std::vector<Rational> pool = {Rational(2), Rational(1, 2), Rational(3),
                                Rational(-2)};
  std::optional<long> user_cat;  // classical cat(X); cat(Y) for a wedge
  int max_r = -1;
};

struct CatBoundReport {
  long lower = 0;
  std::optional<CupCertificate> certificate;
  long upper = 0;
  std::string upper_provenance;
  std::optional<long> exact;
  long long normalization_gcd = 0;
  bool class_is_zero = false;
  long cup_length = -1;  // set on the zero-class path
  bool wedge_detected = false;
};

CatBoundReport cat_bound_report(const SimplicialComplex& k,
                                const IntegerOneCocycle& xi,
                                const CatBoundOptions& options = {});

nlohmann::json report_json(const CatBoundReport& report);

}  // namespace catxi
