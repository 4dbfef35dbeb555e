#pragma once

// Laurent polynomials p(t) * t^shift over an exact scalar.  Canonical form:
// the polynomial part has a nonzero constant term unless the value is zero
// (then shift = 0).  Units of the Laurent ring over a field are exactly the
// nonzero monomials c * t^k.

#include "catxi/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace catxi {

template <typename T>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const T& c) : poly_(c) {}  // NOLINT
  LaurentPoly(int c) : poly_(T(c)) {}    // NOLINT
  LaurentPoly(Polynomial<T> p, long shift = 0)  // NOLINT
      : poly_(std::move(p)), shift_(shift) {
    normalize();
  }

  static LaurentPoly monomial(const T& c, long degree) {
    return LaurentPoly(Polynomial<T>(c), degree);
  }

  bool is_zero() const { return poly_.is_zero(); }
  const Polynomial<T>& poly() const { return poly_; }
  long shift() const { return shift_; }
  long min_degree() const { return shift_; }
  long max_degree() const { return shift_ + poly_.degree(); }

  bool is_unit() const {
    return !poly_.is_zero() && poly_.degree() == 0;
  }
  bool is_monomial() const { return is_unit(); }

  T coeff(long d) const {
    return poly_.coeff(static_cast<int>(d - shift_));
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.shift_, b.shift_);
    return LaurentPoly(a.poly_.shifted(static_cast<int>(a.shift_ - lo)) +
                           b.poly_.shifted(static_cast<int>(b.shift_ - lo)),
                       lo);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
  }
  LaurentPoly operator-() const { return LaurentPoly(-poly_, shift_); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly(a.poly_ * b.poly_, a.shift_ + b.shift_);
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.shift_ == b.shift_ && a.poly_ == b.poly_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  LaurentPoly shifted(long k) const { return LaurentPoly(poly_, shift_ + k); }

  // Substitute t -> x, x a nonzero rational (negative powers allowed).
  Rational evaluate(const Rational& x) const {
    Rational value = poly_.template evaluate<Rational>(Rational(x));
    return value * pow_rational(x, shift_);
  }

  // t -> 1/t.
  LaurentPoly inverted_variable() const {
    return LaurentPoly(poly_.reversed(), -shift_ - poly_.degree());
  }

  std::string str(const std::string& var = "t") const {
    if (poly_.is_zero()) return "0";
    if (shift_ == 0) return poly_.str(var);
    std::ostringstream os;
    if (poly_.degree() == 0)
      os << to_string(poly_.constant_term());
    else
      os << "(" << poly_.str(var) << ")";
    os << "*" << var << "^" << shift_;
    return os.str();
  }

 private:
  void normalize() {
    if (poly_.is_zero()) {
      shift_ = 0;
      return;
    }
    int v = poly_.valuation();
    if (v > 0) {
      poly_ = poly_.dropped_valuation();
      shift_ += v;
    }
  }

  Polynomial<T> poly_;
  long shift_ = 0;
};

using LaurentQ = LaurentPoly<Rational>;

}  // namespace catxi

namespace Eigen {

template <>
struct NumTraits<catxi::LaurentQ> : GenericNumTraits<catxi::LaurentQ> {
  typedef catxi::LaurentQ Real;
  typedef catxi::LaurentQ NonInteger;
  typedef catxi::LaurentQ Nested;
  typedef catxi::LaurentQ Literal;
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

using LaurentMatrix = Eigen::Matrix<LaurentQ, Eigen::Dynamic, Eigen::Dynamic>;
using LaurentVector = Eigen::Matrix<LaurentQ, Eigen::Dynamic, 1>;

inline RatMatrix evaluate(const LaurentMatrix& m, const Rational& x) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(x);
  return out;
}

}  // namespace catxi
