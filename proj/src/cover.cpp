#include "catxi/cover.hpp"

#include "catxi/exact_linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace catxi {

namespace {

LaurentQ laurent_monomial(int sign, long long exponent) {
  return LaurentQ::monomial(Rational(sign), static_cast<long>(exponent));
}

// PolyMatrix * LaurentVector, mixing scalars by hand.
LaurentVector poly_times_laurent(const PolyMatrix& m, const LaurentVector& v) {
  LaurentVector out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    LaurentQ acc;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero() || v(j).is_zero()) continue;
      acc += LaurentQ(m(i, j)) * v(j);
    }
    out(i) = acc;
  }
  return out;
}

LaurentVector chain_to_vector(const LaurentChain& chain, Eigen::Index n) {
  LaurentVector v(n);
  for (Eigen::Index j = 0; j < n; ++j) v(j) = LaurentQ();
  for (const auto& [degree, slice] : chain.slices) {
    if (slice.size() != n)
      throw std::invalid_argument("laurent chain has wrong coefficient count");
    for (Eigen::Index j = 0; j < n; ++j)
      if (!is_zero(slice(j)))
        v(j) += LaurentQ::monomial(slice(j), degree);
  }
  return v;
}

// Global unit twist making every entry polynomial (kernel/image unchanged).
PolyMatrix polynomialize(const LaurentMatrix& m, long* shift_out = nullptr) {
  long shift = 0;
  bool any = false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        long lo = m(i, j).min_degree();
        shift = any ? std::min(shift, lo) : lo;
        any = true;
      }
  if (shift > 0) shift = 0;
  PolyMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      LaurentQ shifted = m(i, j).shifted(-shift);
      if (shifted.min_degree() < 0 && !shifted.is_zero())
        throw std::logic_error("polynomialize: negative degree left over");
      out(i, j) = shifted.is_zero()
                      ? RatPoly()
                      : shifted.poly().shifted(
                            static_cast<int>(shifted.shift()));
    }
  if (shift_out) *shift_out = shift;
  return out;
}

RatPoly strip_t_power_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return monic(p.dropped_valuation());
}

}  // namespace

const LaurentMatrix& LaurentChainComplex::d(int q) const {
  if (q < 0 || q >= static_cast<int>(boundary.size()))
    throw std::invalid_argument("boundary index out of range");
  return boundary[static_cast<size_t>(q)];
}

LaurentChainComplex build_laurent_complex(const SimplicialComplex& k,
                                          const IntegerOneCocycle& xi) {
  if (!is_connected(k))
    throw std::invalid_argument("build_laurent_complex: complex is disconnected");
  if (!is_cocycle(k, xi))
    throw std::invalid_argument("build_laurent_complex: xi is not a cocycle");
  LaurentChainComplex l;
  l.complex = k;
  l.xi = xi;
  l.heights = spanning_tree_heights(k, xi);

  l.boundary.resize(static_cast<size_t>(k.dim()) + 2);
  l.boundary[0] = LaurentMatrix(0, k.count(0));
  l.boundary[static_cast<size_t>(k.dim()) + 1] =
      LaurentMatrix(k.count(k.dim()), 0);
  for (int q = 1; q <= k.dim(); ++q) {
    const auto& rows = k.simplices(q - 1);
    const auto& cols = k.simplices(q);
    LaurentMatrix m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(cols.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = LaurentQ();
    for (size_t j = 0; j < cols.size(); ++j) {
      const Simplex& s = cols[j];
      int sign = 1;
      for (size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (size_t idx = 0; idx < s.size(); ++idx)
          if (idx != drop) face.push_back(s[idx]);
        int r = k.index_of(face);
        // Dropping the least vertex lands the face's base lift a twist away.
        long long twist =
            drop == 0 ? twist_exponent(xi, l.heights, s[0], s[1]) : 0;
        m(r, static_cast<Eigen::Index>(j)) += laurent_monomial(sign, twist);
        sign = -sign;
      }
    }
    l.boundary[static_cast<size_t>(q)] = std::move(m);
  }
  return l;
}

RatMatrix specialize_boundary(const LaurentChainComplex& l, int q,
                              const Rational& a) {
  if (is_zero(a))
    throw std::invalid_argument("specialize_boundary: a must be nonzero");
  return evaluate(l.d(q), a);
}

// --- LaurentChain --------------------------------------------------------------

long LaurentChain::min_degree() const {
  if (slices.empty()) throw std::logic_error("min_degree of zero chain");
  return slices.begin()->first;
}

long LaurentChain::max_degree() const {
  if (slices.empty()) throw std::logic_error("max_degree of zero chain");
  return slices.rbegin()->first;
}

void LaurentChain::add(long degree, const RatVector& v) {
  auto it = slices.find(degree);
  if (it == slices.end()) {
    bool nonzero = false;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!catxi::is_zero(v(i))) {
        nonzero = true;
        break;
      }
    if (nonzero) slices.emplace(degree, v);
    return;
  }
  it->second += v;
  bool nonzero = false;
  for (Eigen::Index i = 0; i < it->second.size(); ++i)
    if (!catxi::is_zero(it->second(i))) {
      nonzero = true;
      break;
    }
  if (!nonzero) slices.erase(it);
}

LaurentChain LaurentChain::shifted(long k) const {
  LaurentChain out;
  out.q = q;
  for (const auto& [d, v] : slices) out.slices.emplace(d + k, v);
  return out;
}

LaurentChain LaurentChain::scaled(const Rational& c) const {
  LaurentChain out;
  out.q = q;
  if (catxi::is_zero(c)) return out;
  for (const auto& [d, v] : slices) {
    RatVector scaled = v;
    for (Eigen::Index i = 0; i < scaled.size(); ++i) scaled(i) *= c;
    out.slices.emplace(d, std::move(scaled));
  }
  return out;
}

LaurentChain operator+(const LaurentChain& a, const LaurentChain& b) {
  LaurentChain out = a;
  out.q = a.slices.empty() ? b.q : a.q;
  for (const auto& [d, v] : b.slices) out.add(d, v);
  return out;
}

LaurentChain operator-(const LaurentChain& a, const LaurentChain& b) {
  return a + b.scaled(Rational(-1));
}

bool operator==(const LaurentChain& a, const LaurentChain& b) {
  return (a - b).slices.empty();
}

LaurentChain chain_from_coeffs(int q, const RatVector& coeffs) {
  LaurentChain c;
  c.q = q;
  c.add(0, coeffs);
  return c;
}

LaurentChain apply_boundary(const LaurentChainComplex& l,
                            const LaurentChain& chain) {
  const LaurentMatrix& m = l.d(chain.q);
  LaurentChain out;
  out.q = chain.q - 1;
  if (m.rows() == 0) return out;
  for (const auto& [degree, slice] : chain.slices) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (is_zero(slice(j))) continue;
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const LaurentQ& entry = m(i, j);
        if (entry.is_zero()) continue;
        const auto& coeffs = entry.poly().coeffs();
        for (size_t d = 0; d < coeffs.size(); ++d) {
          if (is_zero(coeffs[d])) continue;
          RatVector unit = RatVector::Zero(m.rows());
          unit(i) = coeffs[d] * slice(j);
          out.add(degree + entry.shift() + static_cast<long>(d), unit);
        }
      }
    }
  }
  return out;
}

bool is_cycle(const LaurentChainComplex& l, const LaurentChain& chain) {
  if (chain.q == 0) return true;
  return apply_boundary(l, chain).is_zero();
}

// --- Homology modules -----------------------------------------------------------

namespace {

CoverHomology homology_from_boundaries(const LaurentMatrix& d_q,
                                       const LaurentMatrix& d_q1, int q) {
  CoverHomology h;
  const Eigen::Index n = d_q.cols();

  SmithResult snf1 = smith_normal_form(polynomialize(d_q));
  const int r = snf1.rank;
  h.cycle_rows = snf1.v_inv.topRows(r);
  h.kernel_rows = snf1.v_inv.bottomRows(n - r);
  h.kernel_basis = snf1.v.rightCols(n - r);

  PolyMatrix presentation(n - r, d_q1.cols());
  {
    PolyMatrix b = polynomialize(d_q1);
    // Image lives in the kernel; its coordinates there present H_q.
    presentation = h.kernel_rows * b;
  }
  SmithResult snf2 = smith_normal_form(presentation);
  h.u2 = snf2.u;
  h.u2_inv = snf2.u_inv;
  for (int i = 0; i < snf2.rank; ++i)
    h.invariant_factors.push_back(strip_t_power_monic(snf2.d(i, i)));
  h.torsion_count = 0;
  h.unit_count = 0;
  for (const auto& e : h.invariant_factors) {
    if (e.degree() >= 1)
      ++h.torsion_count;
    else
      ++h.unit_count;
  }

  h.decomposition.q = q;
  h.decomposition.free_rank = (n - r) - snf2.rank;
  for (const auto& e : h.invariant_factors) {
    if (e.degree() < 1) continue;
    IntPoly ip = integer_form(e).primitive;
    auto factorization = factor_over_integers(ip);
    for (const auto& [prime, mult] : factorization.factors) {
      TorsionFactor tf;
      tf.prime = prime;
      tf.power = mult;
      tf.verdict = classify_factor(prime, mult);
      h.decomposition.factors.push_back(std::move(tf));
    }
  }
  return h;
}

}  // namespace

CoverHomology homology_module(const LaurentChainComplex& l, int q) {
  if (q < 0 || q > l.dim())
    throw std::invalid_argument("homology_module: dimension out of range");
  return homology_from_boundaries(l.d(q), l.d(q + 1), q);
}

LaurentChain torsion_generator(const CoverHomology& h, int q, long i) {
  const Eigen::Index rank2 =
      static_cast<Eigen::Index>(h.invariant_factors.size());
  if (i < 0 || i >= rank2)
    throw std::invalid_argument("torsion_generator: index out of range");
  PolyVector kcoords = h.u2_inv.col(i);
  PolyVector chain = h.kernel_basis * kcoords;
  LaurentChain out;
  out.q = q;
  for (Eigen::Index j = 0; j < chain.size(); ++j) {
    const auto& coeffs = chain(j).coeffs();
    for (size_t d = 0; d < coeffs.size(); ++d) {
      if (is_zero(coeffs[d])) continue;
      RatVector unit = RatVector::Zero(chain.size());
      unit(j) = coeffs[d];
      out.add(static_cast<long>(d), unit);
    }
  }
  return out;
}

namespace {

struct ClassLocation {
  bool cycle = true;
  bool has_free = false;
  RatPoly annihilator{Rational(1)};
};

ClassLocation locate_class(const CoverHomology& h, const LaurentVector& zvec) {
  ClassLocation loc;
  // Rows of V1^{-1} above the kernel block vanish exactly on cycles.
  LaurentVector top = poly_times_laurent(h.cycle_rows, zvec);
  for (Eigen::Index i = 0; i < top.size(); ++i)
    if (!top(i).is_zero()) {
      loc.cycle = false;
      return loc;
    }
  LaurentVector kcoords = poly_times_laurent(h.kernel_rows, zvec);
  LaurentVector w = poly_times_laurent(h.u2, kcoords);
  const Eigen::Index rank2 =
      static_cast<Eigen::Index>(h.invariant_factors.size());
  RatPoly ann(Rational(1));
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i >= rank2) {
      if (!w(i).is_zero()) loc.has_free = true;
      continue;
    }
    const RatPoly& e = h.invariant_factors[static_cast<size_t>(i)];
    if (e.degree() < 1) continue;  // unit factor: summand is trivial
    if (w(i).is_zero()) continue;
    RatPoly order = exact_div(e, poly_gcd(e, w(i).poly()));
    ann = poly_lcm(ann, order);
  }
  loc.annihilator = ann;
  return loc;
}

struct CriterionFlags {
  bool minus_ok = true;
  bool plus_ok = true;
};

CriterionFlags annihilator_flags(const RatPoly& ann) {
  CriterionFlags flags;
  if (ann.degree() < 1) return flags;  // trivial torsion part
  IntPoly ip = integer_form(ann).primitive;
  auto factorization = factor_over_integers(ip);
  for (const auto& [prime, mult] : factorization.factors) {
    (void)mult;
    FactorVerdict v = classify_factor(prime);
    flags.minus_ok = flags.minus_ok && v.roots_are_algebraic_integers;
    flags.plus_ok = flags.plus_ok && v.roots_are_inverse_algebraic_integers;
  }
  return flags;
}

}  // namespace

MovabilityVerdict movability_verdict(const LaurentChainComplex& l,
                                     const CoverHomology& h,
                                     const LaurentChain& z,
                                     bool attempt_witness) {
  const int q = z.q;
  const Eigen::Index n = l.d(q).cols();
  LaurentVector zvec = chain_to_vector(z, n);
  ClassLocation loc = locate_class(h, zvec);
  if (!loc.cycle)
    throw std::invalid_argument("movability_verdict: z is not a cycle");

  MovabilityVerdict verdict;
  verdict.is_cycle = true;
  verdict.has_free_component = loc.has_free;
  verdict.annihilator = loc.annihilator;
  verdict.is_trivial_class = !loc.has_free && loc.annihilator.degree() < 1;

  CriterionFlags flags = annihilator_flags(loc.annihilator);
  bool minus = !loc.has_free && flags.minus_ok;
  bool plus = !loc.has_free && flags.plus_ok;

  auto grade = [&](bool granted, CoverEnd end) {
    if (!granted) return EndMovability::No;
    if (!attempt_witness) return EndMovability::MovableAfterMultiple;
    MoveWitness w = move_cycle_witness(l, h, z, end, 1);
    return (w.multiplier == 1 || w.multiplier == -1)
               ? EndMovability::Movable
               : EndMovability::MovableAfterMultiple;
  };
  verdict.minus_end = grade(minus, CoverEnd::Minus);
  verdict.plus_end = grade(plus, CoverEnd::Plus);
  verdict.both_ends = std::min(verdict.minus_end, verdict.plus_end);
  if (verdict.minus_end == EndMovability::No ||
      verdict.plus_end == EndMovability::No)
    verdict.both_ends = EndMovability::No;
  return verdict;
}

namespace {

// Solve boundary(c) = rhs with c supported in a t-degree window; widens the
// window a few times before giving up.
std::optional<LaurentChain> solve_bounding_chain(
    const LaurentChainComplex& l, const LaurentChain& rhs, int q, long lo,
    long hi, std::pair<long, long>* window_used) {
  const LaurentMatrix& m = l.d(q + 1);
  const Eigen::Index n_cols = m.cols();
  const Eigen::Index n_rows = m.rows();
  if (n_cols == 0) {
    if (rhs.is_zero()) {
      if (window_used) *window_used = {0, 0};
      LaurentChain c;
      c.q = q + 1;
      return c;
    }
    return std::nullopt;
  }

  long min_shift = 0, max_shift = 0;
  bool any = false;
  for (Eigen::Index i = 0; i < n_rows; ++i)
    for (Eigen::Index j = 0; j < n_cols; ++j)
      if (!m(i, j).is_zero()) {
        long a = m(i, j).min_degree(), b = m(i, j).max_degree();
        min_shift = any ? std::min(min_shift, a) : a;
        max_shift = any ? std::max(max_shift, b) : b;
        any = true;
      }

  long row_lo = lo + min_shift, row_hi = hi + max_shift;
  if (!rhs.is_zero()) {
    if (rhs.min_degree() < row_lo || rhs.max_degree() > row_hi)
      return std::nullopt;  // rhs sticks out of the reachable degrees
  }

  const long width = hi - lo + 1;
  const long rows_width = row_hi - row_lo + 1;
  RatMatrix system =
      RatMatrix::Zero(n_rows * rows_width, n_cols * width);
  RatVector target = RatVector::Zero(n_rows * rows_width);
  for (const auto& [degree, slice] : rhs.slices)
    for (Eigen::Index i = 0; i < n_rows; ++i)
      target((degree - row_lo) * n_rows + i) = slice(i);
  for (Eigen::Index j = 0; j < n_cols; ++j) {
    for (Eigen::Index i = 0; i < n_rows; ++i) {
      const LaurentQ& entry = m(i, j);
      if (entry.is_zero()) continue;
      const auto& coeffs = entry.poly().coeffs();
      for (size_t d = 0; d < coeffs.size(); ++d) {
        if (is_zero(coeffs[d])) continue;
        long shift = entry.shift() + static_cast<long>(d);
        for (long cdeg = lo; cdeg <= hi; ++cdeg) {
          long out_deg = cdeg + shift;
          system((out_deg - row_lo) * n_rows + i,
                 (cdeg - lo) * n_cols + j) += coeffs[d];
        }
      }
    }
  }
  auto solution = solve(system, target);
  if (!solution) return std::nullopt;
  LaurentChain c;
  c.q = q + 1;
  for (long cdeg = lo; cdeg <= hi; ++cdeg) {
    RatVector slice = RatVector::Zero(n_cols);
    for (Eigen::Index j = 0; j < n_cols; ++j)
      slice(j) = (*solution)((cdeg - lo) * n_cols + j);
    c.add(cdeg, slice);
  }
  if (window_used) *window_used = {lo, hi};
  return c;
}

Int chain_denominator(const LaurentChain& c) {
  Int den(1);
  for (const auto& [d, slice] : c.slices) {
    (void)d;
    for (Eigen::Index i = 0; i < slice.size(); ++i)
      den = lcm_int(den, slice(i).get_den());
  }
  return den;
}

}  // namespace

MoveWitness move_cycle_witness(const LaurentChainComplex& l,
                               const CoverHomology& h, const LaurentChain& z,
                               CoverEnd end, long n) {
  if (n < 1) throw std::invalid_argument("move_cycle_witness: N must be >= 1");
  MovabilityVerdict verdict = movability_verdict(l, h, z, false);
  bool granted = end == CoverEnd::Minus
                     ? verdict.minus_end != EndMovability::No
                     : verdict.plus_end != EndMovability::No;
  if (!granted)
    throw std::invalid_argument(
        "move_cycle_witness: class is not movable to the requested end");

  MoveWitness w;
  w.cycle = z;
  w.threshold = n;
  w.end = end;

  // Monic integral annihilator in the variable pointing toward the end.
  RatPoly ann = verdict.annihilator;
  IntPoly p = ann.degree() < 1 ? IntPoly(1) : integer_form(ann).primitive;
  if (end == CoverEnd::Plus && p.degree() >= 1) {
    p = primitive_part(p.reversed()).primitive;
  }
  if (p.degree() >= 1 && p.leading() != 1)
    throw std::logic_error("move_cycle_witness: annihilator is not monic");
  w.annihilator = p;

  const int deg = std::max(p.degree(), 0);
  LaurentChain moved_raw;
  moved_raw.q = z.q;
  long m_power = 0;
  std::vector<Int> expansion;
  if (p.degree() < 1) {
    // Trivial class: relocate to the empty chain.
    m_power = 0;
  } else {
    long zhi = z.max_degree(), zlo = z.min_degree();
    if (end == CoverEnd::Minus) {
      m_power = n + zhi + deg - 1;
      if (m_power <= 0) {
        // Already beyond the threshold.
        m_power = 0;
        expansion = {Int(1)};
        moved_raw = z;
      }
    } else {
      m_power = n - zlo + deg - 1;
      if (m_power <= 0) {
        m_power = 0;
        expansion = {Int(1)};
        moved_raw = z;
      }
    }
    if (m_power > 0) {
      IntPoly tpow(1);
      const IntPoly t = IntPoly::variable();
      for (long i = 0; i < m_power; ++i) tpow = int_poly_mul_mod(tpow, t, p);
      for (int j = 0; j <= tpow.degree(); ++j) expansion.push_back(tpow.coeff(j));
      for (size_t j = 0; j < expansion.size(); ++j) {
        if (sgn(expansion[j]) == 0) continue;
        Rational bj(expansion[j]);
        long shift = end == CoverEnd::Minus
                         ? static_cast<long>(j) - m_power
                         : m_power - static_cast<long>(j);
        moved_raw = moved_raw + z.shifted(shift).scaled(bj);
      }
    }
  }
  w.expansion_power = m_power;
  w.expansion = expansion;

  LaurentChain rhs = z - moved_raw;
  long lo, hi;
  if (rhs.is_zero()) {
    lo = hi = 0;
  } else {
    lo = rhs.min_degree() - deg - 2;
    hi = rhs.max_degree() + 2;
  }
  std::optional<LaurentChain> c;
  std::pair<long, long> window{lo, hi};
  for (int attempt = 0; attempt < 5; ++attempt) {
    c = solve_bounding_chain(l, rhs, z.q, lo, hi, &window);
    if (c) break;
    lo -= 4;
    hi += 4;
  }
  if (!c) {
    std::ostringstream os;
    os << "move_cycle_witness: bounding-chain solve failed in window ["
       << lo << ", " << hi << "]";
    throw std::runtime_error(os.str());
  }

  Int den = lcm_int(chain_denominator(*c), chain_denominator(moved_raw));
  den = lcm_int(den, chain_denominator(z));
  if (den.fits_slong_p() == 0)
    throw std::runtime_error("move_cycle_witness: multiplier overflow");
  w.multiplier = den.get_si();
  Rational k(den);
  w.moved = moved_raw.scaled(k);
  w.bounding = c->scaled(k);
  w.window = window;
  return w;
}

bool verify_witness(const LaurentChainComplex& l, const MoveWitness& w,
                    std::string* why) {
  auto report = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (w.multiplier == 0) return report("multiplier is zero");
  LaurentChain expected =
      w.cycle.scaled(Rational(static_cast<long>(w.multiplier))) - w.moved;
  if (!(apply_boundary(l, w.bounding) == expected))
    return report("boundary(c) != k z - z_moved");
  if (!w.moved.is_zero()) {
    if (w.end == CoverEnd::Minus && w.moved.max_degree() > -w.threshold)
      return report("moved chain not supported at degrees <= -N");
    if (w.end == CoverEnd::Plus && w.moved.min_degree() < w.threshold)
      return report("moved chain not supported at degrees >= N");
  }
  return true;
}

// --- Sparse unit-pivot reduction -------------------------------------------------

long SparseLaurentComplex::alive_count(int q) const {
  if (q < 0 || q > dim) return 0;
  long n = 0;
  for (char a : alive[static_cast<size_t>(q)]) n += a ? 1 : 0;
  return n;
}

SparseLaurentComplex to_sparse(const LaurentChainComplex& l) {
  SparseLaurentComplex s;
  s.dim = l.dim();
  s.alive.resize(static_cast<size_t>(s.dim) + 1);
  for (int q = 0; q <= s.dim; ++q)
    s.alive[static_cast<size_t>(q)].assign(
        static_cast<size_t>(l.complex.count(q)), 1);
  s.rows.resize(static_cast<size_t>(s.dim) + 1);
  s.cols.resize(static_cast<size_t>(s.dim) + 1);
  for (int q = 1; q <= s.dim; ++q) {
    const LaurentMatrix& m = l.d(q);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) {
          s.rows[static_cast<size_t>(q)][static_cast<int>(i)]
                [static_cast<int>(j)] = m(i, j);
          s.cols[static_cast<size_t>(q)][static_cast<int>(j)]
                [static_cast<int>(i)] = m(i, j);
        }
  }
  return s;
}

namespace {

void sparse_set(SparseLaurentComplex& s, int q, int i, int j,
                const LaurentQ& value) {
  if (value.is_zero()) {
    auto& row = s.rows[static_cast<size_t>(q)][i];
    row.erase(j);
    if (row.empty()) s.rows[static_cast<size_t>(q)].erase(i);
    auto& col = s.cols[static_cast<size_t>(q)][j];
    col.erase(i);
    if (col.empty()) s.cols[static_cast<size_t>(q)].erase(j);
  } else {
    s.rows[static_cast<size_t>(q)][i][j] = value;
    s.cols[static_cast<size_t>(q)][j][i] = value;
  }
}

LaurentQ sparse_get(const SparseLaurentComplex& s, int q, int i, int j) {
  auto rit = s.rows[static_cast<size_t>(q)].find(i);
  if (rit == s.rows[static_cast<size_t>(q)].end()) return LaurentQ();
  auto cit = rit->second.find(j);
  if (cit == rit->second.end()) return LaurentQ();
  return cit->second;
}

// Cancel the unit incidence (i, j) of the q-th boundary.
void cancel_pair(SparseLaurentComplex& s, int q, int i, int j) {
  LaurentQ u = sparse_get(s, q, i, j);
  LaurentQ u_inv = LaurentQ::monomial(
      Rational(1) / u.poly().constant_term(), -u.shift());
  auto row_i = s.rows[static_cast<size_t>(q)][i];
  auto col_j = s.cols[static_cast<size_t>(q)][j];

  // Schur update on the q-th boundary.
  for (const auto& [k, a_kj] : col_j) {
    if (k == i) continue;
    for (const auto& [l2, a_il] : row_i) {
      if (l2 == j) continue;
      LaurentQ updated =
          sparse_get(s, q, k, l2) - a_kj * u_inv * a_il;
      sparse_set(s, q, k, l2, updated);
    }
  }
  // Remove row i and column j entirely.
  for (const auto& [l2, v] : row_i) {
    (void)v;
    sparse_set(s, q, i, l2, LaurentQ());
  }
  for (const auto& [k, v] : col_j) {
    (void)v;
    sparse_set(s, q, k, j, LaurentQ());
  }
  // Cell j disappears from dimension q: drop row j of the (q+1)-boundary
  // and cell i from dimension q-1: drop column i of the (q-1)-boundary.
  if (q + 1 <= s.dim) {
    auto rit = s.rows[static_cast<size_t>(q) + 1].find(j);
    if (rit != s.rows[static_cast<size_t>(q) + 1].end()) {
      auto entries = rit->second;
      for (const auto& [l2, v] : entries) {
        (void)v;
        sparse_set(s, q + 1, j, l2, LaurentQ());
      }
    }
  }
  if (q - 1 >= 1) {
    auto cit = s.cols[static_cast<size_t>(q) - 1].find(i);
    if (cit != s.cols[static_cast<size_t>(q) - 1].end()) {
      auto entries = cit->second;
      for (const auto& [k, v] : entries) {
        (void)v;
        sparse_set(s, q - 1, k, i, LaurentQ());
      }
    }
  }
  s.alive[static_cast<size_t>(q)][static_cast<size_t>(j)] = 0;
  s.alive[static_cast<size_t>(q) - 1][static_cast<size_t>(i)] = 0;
}

}  // namespace

void reduce_by_unit_pivots(SparseLaurentComplex& s) {
  for (;;) {
    int best_q = -1, best_i = -1, best_j = -1;
    long best_cost = -1;
    for (int q = 1; q <= s.dim && best_cost != 0; ++q) {
      for (const auto& [i, row] : s.rows[static_cast<size_t>(q)]) {
        for (const auto& [j, value] : row) {
          if (!value.is_unit()) continue;
          long cost =
              (static_cast<long>(row.size()) - 1) *
              (static_cast<long>(s.cols[static_cast<size_t>(q)].at(j).size()) -
               1);
          if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best_q = q;
            best_i = i;
            best_j = j;
            if (cost == 0) break;
          }
        }
        if (best_cost == 0) break;
      }
    }
    if (best_q < 0) return;
    cancel_pair(s, best_q, best_i, best_j);
  }
}

std::vector<TorsionDecomposition> reduced_homology_summary(
    const LaurentChainComplex& l) {
  SparseLaurentComplex s = to_sparse(l);
  reduce_by_unit_pivots(s);

  // Dense boundaries of the reduced complex.
  const auto& alive = s.alive;
  std::vector<std::vector<int>> new_index(static_cast<size_t>(s.dim) + 1);
  std::vector<long> counts(static_cast<size_t>(s.dim) + 1, 0);
  for (int q = 0; q <= s.dim; ++q) {
    new_index[static_cast<size_t>(q)].assign(alive[static_cast<size_t>(q)].size(), -1);
    for (size_t i = 0; i < alive[static_cast<size_t>(q)].size(); ++i)
      if (alive[static_cast<size_t>(q)][i])
        new_index[static_cast<size_t>(q)][i] =
            static_cast<int>(counts[static_cast<size_t>(q)]++);
  }
  std::vector<LaurentMatrix> boundaries(static_cast<size_t>(s.dim) + 2);
  boundaries[0] = LaurentMatrix(0, counts[0]);
  boundaries[static_cast<size_t>(s.dim) + 1] =
      LaurentMatrix(counts[static_cast<size_t>(s.dim)], 0);
  for (int q = 1; q <= s.dim; ++q) {
    LaurentMatrix m(counts[static_cast<size_t>(q) - 1],
                    counts[static_cast<size_t>(q)]);
    for (Eigen::Index a = 0; a < m.rows(); ++a)
      for (Eigen::Index b = 0; b < m.cols(); ++b) m(a, b) = LaurentQ();
    for (const auto& [i, row] : s.rows[static_cast<size_t>(q)])
      for (const auto& [j, value] : row)
        m(new_index[static_cast<size_t>(q) - 1][static_cast<size_t>(i)],
          new_index[static_cast<size_t>(q)][static_cast<size_t>(j)]) = value;
    boundaries[static_cast<size_t>(q)] = std::move(m);
  }

  std::vector<TorsionDecomposition> out;
  for (int q = 0; q <= s.dim; ++q) {
    CoverHomology h = homology_from_boundaries(
        boundaries[static_cast<size_t>(q)],
        boundaries[static_cast<size_t>(q) + 1], q);
    out.push_back(std::move(h.decomposition));
  }
  return out;
}

}  // namespace catxi
