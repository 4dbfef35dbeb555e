#pragma once

// Exact factorization of integer polynomials at desk scale: squarefree
// splitting (Yun), rational-root stripping, and Kronecker interpolation for
// what remains.  No floating point anywhere; root properties are read off
// the leading/constant coefficients of irreducible primitive factors.

#include "catxi/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace catxi {

// Root-type classification of an irreducible primitive factor.  The roots of
// an irreducible primitive integer polynomial are all algebraic integers iff
// the leading coefficient is +-1, and all their inverses are algebraic
// integers iff the constant term is +-1; both together characterize
// Dirichlet units.
struct FactorVerdict {
  IntPoly factor;
  int multiplicity = 1;
  bool roots_are_algebraic_integers = false;
  bool roots_are_inverse_algebraic_integers = false;
  bool roots_are_dirichlet_units = false;
};

struct IntFactorization {
  Int content{1};  // signed; product of content and factor powers rebuilds p
  std::vector<std::pair<IntPoly, int>> factors;  // primitive, positive lead
};

inline bool is_dirichlet_unit_rational(const Rational& a) {
  if (is_zero(a)) throw std::invalid_argument("dirichlet test: a must be nonzero");
  return a == Rational(1) || a == Rational(-1);
}

namespace factor_detail {

inline std::vector<Int> divisors_with_sign(const Int& value) {
  Int v = abs(value);
  std::vector<Int> divs;
  for (Int d(1); d * d <= v; ++d) {
    if (v % d == 0) {
      divs.push_back(d);
      Int q = v / d;
      if (q != d) divs.push_back(q);
    }
  }
  std::sort(divs.begin(), divs.end());
  std::vector<Int> out;
  out.reserve(divs.size() * 2);
  for (const auto& d : divs) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

// Squarefree decomposition of a primitive integer polynomial (Yun), returned
// as primitive parts with multiplicities; constants are dropped.
inline std::vector<std::pair<IntPoly, int>> squarefree_split(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> parts;
  RatPoly f = monic(to_rat_poly(p));
  RatPoly g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) {
    parts.emplace_back(integer_form(f).primitive, 1);
    return parts;
  }
  RatPoly c = exact_div(f, g);
  RatPoly d = exact_div(f.derivative(), g) - c.derivative();
  int mult = 1;
  while (c.degree() > 0) {
    RatPoly a = poly_gcd(c, d);
    if (a.degree() > 0)
      parts.emplace_back(integer_form(a).primitive, mult);
    c = exact_div(c, a);
    d = exact_div(d, a) - c.derivative();
    ++mult;
  }
  return parts;
}

// Strips all rational roots r/s (as primitive linear factors s*t - r) from a
// primitive squarefree polynomial.  Returns the linear factors found.
inline std::vector<IntPoly> strip_rational_roots(IntPoly& p) {
  std::vector<IntPoly> linear;
  if (p.degree() < 1) return linear;
  for (;;) {
    if (p.degree() < 1) break;
    bool found = false;
    auto nums = divisors_with_sign(p.constant_term());
    auto dens = divisors_with_sign(p.leading());
    for (const auto& r : nums) {
      for (const auto& s : dens) {
        if (sgn(s) < 0) continue;
        Rational root(r, s);
        root.canonicalize();
        if (!catxi::is_zero(to_rat_poly(p).evaluate(root))) continue;
        IntPoly lin(
            std::vector<Int>{-root.get_num(), root.get_den()});
        linear.push_back(lin);
        p = integer_form(exact_div(to_rat_poly(p), to_rat_poly(lin))).primitive;
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  return linear;
}

// Kronecker: search for a factor of degree d of a primitive squarefree
// polynomial with no rational roots; nullopt means no factor of degree <= d
// for any d in [2, deg/2], i.e. p is irreducible.
inline bool kronecker_split(const IntPoly& p, IntPoly& out_factor) {
  const int n = p.degree();
  for (int d = 2; d <= n / 2; ++d) {
    // Sample points 0, 1, -1, 2, -2, ...
    std::vector<Int> xs;
    for (int i = 0; static_cast<int>(xs.size()) <= d; ++i) {
      if (i == 0)
        xs.push_back(Int(0));
      else {
        xs.push_back(Int(i));
        if (static_cast<int>(xs.size()) <= d) xs.push_back(Int(-i));
      }
    }
    std::vector<std::vector<Int>> choices;
    for (const auto& x : xs) {
      Int value = to_rat_poly(p).evaluate(Rational(x)).get_num();
      choices.push_back(divisors_with_sign(value));
    }
    std::vector<size_t> idx(xs.size(), 0);
    for (;;) {
      // Lagrange interpolation through (xs[i], choices[i][idx[i]]).
      RatPoly cand;
      for (size_t i = 0; i < xs.size(); ++i) {
        RatPoly term(Rational(choices[i][idx[i]]));
        for (size_t j = 0; j < xs.size(); ++j) {
          if (i == j) continue;
          RatPoly lin(std::vector<Rational>{Rational(-xs[j]), Rational(1)});
          term = term * lin;
          term = RatPoly(Rational(1) / Rational(xs[i] - xs[j])) * term;
        }
        cand += term;
      }
      if (cand.degree() == d) {
        auto form = integer_form(cand);
        if (form.scale.get_den() == 1 && divides(to_rat_poly(form.primitive),
                                                 to_rat_poly(p))) {
          out_factor = form.primitive;
          return true;
        }
      }
      // Next divisor tuple.
      size_t pos = 0;
      while (pos < idx.size()) {
        if (++idx[pos] < choices[pos].size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == idx.size()) break;
    }
  }
  return false;
}

inline void factor_squarefree(const IntPoly& input, int mult,
                              std::map<std::vector<Int>, int>& acc) {
  IntPoly p = input;
  int val = p.valuation();
  if (val > 0) {
    acc[IntPoly::variable().coeffs()] += mult * val;
    p = primitive_part(p.dropped_valuation()).primitive;
  }
  auto linear = strip_rational_roots(p);
  for (const auto& lin : linear) acc[lin.coeffs()] += mult;
  if (p.degree() < 1) return;
  IntPoly factor;
  if (p.degree() <= 3 || !kronecker_split(p, factor)) {
    acc[p.coeffs()] += mult;  // irreducible
    return;
  }
  factor_squarefree(factor, mult, acc);
  factor_squarefree(
      integer_form(exact_div(to_rat_poly(p), to_rat_poly(factor))).primitive,
      mult, acc);
}

}  // namespace factor_detail

inline IntFactorization factor_over_integers(const IntPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("factor_over_integers: zero polynomial");
  IntFactorization out;
  auto split = primitive_part(p);
  out.content = split.scale;
  if (split.primitive.degree() < 1) return out;

  std::map<std::vector<Int>, int> acc;
  for (const auto& [part, mult] :
       factor_detail::squarefree_split(split.primitive))
    factor_detail::factor_squarefree(part, mult, acc);
  for (const auto& [coeffs, mult] : acc)
    out.factors.emplace_back(IntPoly(std::vector<Int>(coeffs)), mult);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              return a.first.coeffs() < b.first.coeffs();
            });
  return out;
}

inline FactorVerdict classify_factor(const IntPoly& p, int multiplicity = 1) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("classify_factor: need a nonconstant polynomial");
  if (sgn(p.constant_term()) == 0)
    throw std::invalid_argument("classify_factor: roots at zero are excluded");
  auto fact = factor_over_integers(p);
  if (fact.factors.size() != 1 || fact.factors[0].second != 1 ||
      fact.content != 1)
    throw std::invalid_argument("classify_factor: polynomial is not irreducible primitive");
  FactorVerdict v;
  v.factor = p;
  v.multiplicity = multiplicity;
  v.roots_are_algebraic_integers = abs(p.leading()) == 1;
  v.roots_are_inverse_algebraic_integers = abs(p.constant_term()) == 1;
  v.roots_are_dirichlet_units =
      v.roots_are_algebraic_integers && v.roots_are_inverse_algebraic_integers;
  return v;
}

// n-th cyclotomic polynomial (test oracle material, but generally handy).
inline IntPoly cyclotomic(int n) {
  std::vector<Int> tn(static_cast<size_t>(n) + 1, Int(0));
  tn[0] = -1;
  tn.back() = 1;
  RatPoly q = to_rat_poly(IntPoly(std::move(tn)));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) q = exact_div(q, to_rat_poly(cyclotomic(d)));
  return integer_form(q).primitive;
}

}  // namespace catxi
