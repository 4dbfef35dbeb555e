#pragma once

// Dense univariate polynomials over an exact scalar (Int or Rational),
// coefficients stored lowest degree first, no trailing zeros.  The zero
// polynomial is the empty vector.  RatPoly additionally supports Euclidean
// division and monic gcds; IntPoly supports content/primitive-part splits.

#include "catxi/rational.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace catxi {

template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const T& c) {  // NOLINT: implicit constant embedding is intended
    if (!is_zero_scalar(c)) coeffs_.push_back(c);
  }
  Polynomial(int c) : Polynomial(T(c)) {}  // NOLINT
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial monomial(const T& c, int degree) {
    if (is_zero_scalar(c)) return Polynomial();
    std::vector<T> v(static_cast<size_t>(degree) + 1, T(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }
  static Polynomial variable() { return monomial(T(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  const T& leading() const {
    assert(!coeffs_.empty());
    return coeffs_.back();
  }
  T coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return T(0);
    return coeffs_[static_cast<size_t>(d)];
  }
  T constant_term() const { return coeff(0); }

  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == T(1); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> out(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> out(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return Polynomial(std::move(out));
  }
  Polynomial operator-() const {
    std::vector<T> out = coeffs_;
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero_scalar(a.coeffs_[i])) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const T& s, const Polynomial& p) {
    return Polynomial(s) * p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  // Multiply by t^k (k >= 0).
  Polynomial shifted(int k) const {
    if (is_zero()) return Polynomial();
    std::vector<T> out(coeffs_.size() + static_cast<size_t>(k), T(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return Polynomial(std::move(out));
  }

  // Coefficients reversed: t^deg * p(1/t).
  Polynomial reversed() const {
    std::vector<T> out(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(out));
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<T> out(coeffs_.size() - 1, T(0));
    for (size_t i = 1; i < coeffs_.size(); ++i)
      out[i - 1] = coeffs_[i] * T(static_cast<int>(i));
    return Polynomial(std::move(out));
  }

  template <typename S>
  S evaluate(const S& x) const {
    S acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + S(*it);
    return acc;
  }

  // Number of trailing zero coefficients, i.e. multiplicity of the root 0.
  int valuation() const {
    int v = 0;
    while (v < static_cast<int>(coeffs_.size()) &&
           is_zero_scalar(coeffs_[static_cast<size_t>(v)]))
      ++v;
    return v;
  }
  Polynomial dropped_valuation() const {
    int v = valuation();
    if (v == 0) return *this;
    std::vector<T> out(coeffs_.begin() + v, coeffs_.end());
    return Polynomial(std::move(out));
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
      const T& c = coeffs_[static_cast<size_t>(d)];
      if (is_zero_scalar(c)) continue;
      T a = c;
      if (first) {
        if (sgn_scalar(a) < 0) {
          os << "-";
          a = -a;
        }
        first = false;
      } else {
        os << (sgn_scalar(a) < 0 ? " - " : " + ");
        if (sgn_scalar(a) < 0) a = -a;
      }
      bool unit_coeff = (a == T(1));
      if (d == 0) {
        os << scalar_str(a);
      } else {
        if (!unit_coeff) os << scalar_str(a) << "*";
        os << var;
        if (d > 1) os << "^" << d;
      }
    }
    return os.str();
  }

 private:
  static bool is_zero_scalar(const T& c) { return sgn(c) == 0; }
  static int sgn_scalar(const T& c) { return sgn(c); }
  static std::string scalar_str(const T& c) { return catxi::to_string(c); }

  void trim() {
    while (!coeffs_.empty() && is_zero_scalar(coeffs_.back()))
      coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rational>;

// --- Rational-coefficient Euclidean structure -------------------------------

struct RatPolyDivMod {
  RatPoly quotient;
  RatPoly remainder;
};

inline RatPolyDivMod divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero poly");
  std::vector<Rational> rem(a.coeffs());
  int db = b.degree();
  int da = static_cast<int>(rem.size()) - 1;
  if (da < db) return {RatPoly(), a};
  std::vector<Rational> quo(static_cast<size_t>(da - db) + 1, Rational(0));
  const Rational& lead = b.leading();
  for (int d = da; d >= db; --d) {
    Rational c = rem[static_cast<size_t>(d)];
    if (catxi::is_zero(c)) continue;
    Rational q = c / lead;
    quo[static_cast<size_t>(d - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(d - db + j)] -= q * b.coeff(j);
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

inline bool divides(const RatPoly& b, const RatPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).remainder.is_zero();
}

inline RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  auto dm = divmod(a, b);
  if (!dm.remainder.is_zero())
    throw std::domain_error("exact_div: not divisible");
  return dm.quotient;
}

inline RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return Rational(1) / p.leading() * p;
}

// Monic gcd; gcd(0, 0) = 0.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).remainder;
    a = b;
    b = r;
  }
  return monic(a);
}

inline RatPoly poly_lcm(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  return monic(exact_div(a * b, poly_gcd(a, b)));
}

// --- Integer-coefficient utilities ------------------------------------------

inline Int content(const IntPoly& p) {
  Int g(0);
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

// Primitive part with positive leading coefficient; (pp, unit_content) with
// p = unit_content * pp and unit_content = +-content(p).
struct PrimitiveSplit {
  IntPoly primitive;
  Int scale;
};

inline PrimitiveSplit primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {IntPoly(), Int(0)};
  Int c = content(p);
  if (sgn(p.leading()) < 0) c = -c;
  std::vector<Int> out;
  out.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) out.push_back(a / c);
  return {IntPoly(std::move(out)), c};
}

inline RatPoly to_rat_poly(const IntPoly& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return RatPoly(std::move(out));
}

// Clears denominators and strips content: q = (scale) * primitive with
// primitive an integer polynomial of positive leading coefficient.
struct IntegerForm {
  IntPoly primitive;
  Rational scale;
};

inline IntegerForm integer_form(const RatPoly& q) {
  if (q.is_zero()) return {IntPoly(), Rational(0)};
  std::vector<Rational> cs = q.coeffs();
  Int den = common_denominator(cs);
  std::vector<Int> ints;
  ints.reserve(cs.size());
  for (const auto& c : cs) {
    Rational scaled = c * Rational(den);
    ints.push_back(scaled.get_num());
  }
  auto split = primitive_part(IntPoly(std::move(ints)));
  return {split.primitive, Rational(split.scale, den)};
}

inline IntPoly int_poly_mul_mod(const IntPoly& a, const IntPoly& b,
                                const IntPoly& modulus) {
  // modulus must be monic; plain schoolbook multiply-then-reduce.
  assert(!modulus.is_zero() && modulus.leading() == Int(1));
  IntPoly prod = a * b;
  std::vector<Int> rem(prod.coeffs());
  int dm = modulus.degree();
  for (int d = static_cast<int>(rem.size()) - 1; d >= dm; --d) {
    Int c = rem[static_cast<size_t>(d)];
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= dm; ++j)
      rem[static_cast<size_t>(d - dm + j)] -= c * modulus.coeff(j);
  }
  return IntPoly(std::move(rem));
}

}  // namespace catxi

namespace Eigen {

template <>
struct NumTraits<catxi::RatPoly> : GenericNumTraits<catxi::RatPoly> {
  typedef catxi::RatPoly Real;
  typedef catxi::RatPoly NonInteger;
  typedef catxi::RatPoly Nested;
  typedef catxi::RatPoly Literal;
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 300,
    MulCost = 300
  };
};

}  // namespace Eigen

namespace catxi {

using PolyMatrix = Eigen::Matrix<RatPoly, Eigen::Dynamic, Eigen::Dynamic>;
using PolyVector = Eigen::Matrix<RatPoly, Eigen::Dynamic, 1>;

inline RatMatrix evaluate(const PolyMatrix& m, const Rational& x) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j).evaluate(x);
  return out;
}

}  // namespace catxi
