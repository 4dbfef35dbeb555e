#pragma once

// Exact scalar types shared by the whole toolkit: arbitrary-precision
// integers and canonical-form rationals (GMP-backed), plus the Eigen
// NumTraits glue so dense matrices can be instantiated over them.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace catxi {

using Int = mpz_class;
using Rational = mpq_class;

inline Int int_from(long v) { return Int(static_cast<signed long>(v)); }

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(const Int& a) { return sgn(a) == 0; }

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Canonical "p/q" rendering, denominator always explicit.
inline std::string to_string(const Rational& a) {
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline std::string to_string(const Int& a) { return a.get_str(); }

// Accepts "p", "p/q", optional leading sign.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Int num(text);
      return Rational(num);
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
  }
}

// a^e for possibly negative e; requires a != 0 when e < 0.
inline Rational pow_rational(const Rational& a, long e) {
  if (e == 0) return Rational(1);
  if (is_zero(a)) {
    if (e < 0) throw std::domain_error("pow_rational: 0 to negative power");
    return Rational(0);
  }
  Rational base = a;
  bool invert = e < 0;
  unsigned long n = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                           : static_cast<unsigned long>(e);
  Rational acc(1);
  while (n > 0) {
    if (n & 1ul) acc *= base;
    base *= base;
    n >>= 1;
  }
  if (invert) acc = Rational(1) / acc;
  return acc;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int g = gcd(a, b);
  if (sgn(g) == 0) return Int(0);
  return abs(a / g * b);
}

// Smallest positive integer m with m*v integral for all v.
inline Int common_denominator(const std::vector<Rational>& values) {
  Int l(1);
  for (const auto& v : values) l = lcm_int(l, v.get_den());
  return l;
}

}  // namespace catxi

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 80,
    MulCost = 80
  };
};

}  // namespace Eigen

namespace catxi {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace catxi
