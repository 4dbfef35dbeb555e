#include "catxi/twisted.hpp"

#include "catxi/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace catxi {

TwistedComplex::TwistedComplex(const LaurentChainComplex& cover,
                               const Rational& a)
    : a_(a), dim_(cover.dim()) {
  if (is_zero(a)) throw std::invalid_argument("local system: a must be nonzero");
  delta_.resize(static_cast<size_t>(dim_) + 1);
  for (int q = 0; q <= dim_; ++q)
    delta_[static_cast<size_t>(q)] =
        specialize_boundary(cover, q + 1, a).transpose();

  basis_.resize(static_cast<size_t>(dim_) + 1);
  betti_.resize(static_cast<size_t>(dim_) + 1, 0);
  for (int q = 0; q <= dim_; ++q) {
    const RatMatrix& dq = delta_[static_cast<size_t>(q)];
    RatMatrix kernel = kernel_basis(dq);
    ColumnSpace image(dq.cols());
    if (q > 0) {
      const RatMatrix& prev = delta_[static_cast<size_t>(q) - 1];
      for (Eigen::Index j = 0; j < prev.cols(); ++j) image.insert(prev.col(j));
    }
    std::vector<Eigen::Index> chosen;
    for (Eigen::Index j = 0; j < kernel.cols(); ++j)
      if (image.insert(kernel.col(j))) chosen.push_back(j);
    RatMatrix reps(dq.cols(), static_cast<Eigen::Index>(chosen.size()));
    for (size_t i = 0; i < chosen.size(); ++i)
      reps.col(static_cast<Eigen::Index>(i)) = kernel.col(chosen[i]);
    basis_[static_cast<size_t>(q)] = std::move(reps);
    betti_[static_cast<size_t>(q)] =
        static_cast<int>(basis_[static_cast<size_t>(q)].cols());
  }
}

const RatMatrix& TwistedComplex::delta(int q) const {
  if (q < 0 || q > dim_)
    throw std::invalid_argument("twisted delta: dimension out of range");
  return delta_[static_cast<size_t>(q)];
}

int TwistedComplex::betti(int q) const {
  if (q < 0 || q > dim_) return 0;
  return betti_[static_cast<size_t>(q)];
}

const RatMatrix& TwistedComplex::cohomology_basis(int q) const {
  if (q < 0 || q > dim_)
    throw std::invalid_argument("cohomology_basis: dimension out of range");
  return basis_[static_cast<size_t>(q)];
}

bool TwistedComplex::is_closed(const TwistedCochain& u) const {
  if (u.q < 0 || u.q > dim_) return false;
  RatVector image = delta(u.q) * u.values;
  for (Eigen::Index i = 0; i < image.size(); ++i)
    if (!is_zero(image(i))) return false;
  return true;
}

std::optional<RatVector> TwistedComplex::coboundary_preimage(
    const TwistedCochain& u) const {
  if (u.q == 0) {
    for (Eigen::Index i = 0; i < u.values.size(); ++i)
      if (!is_zero(u.values(i))) return std::nullopt;
    return RatVector::Zero(0);
  }
  return solve(delta(u.q - 1), u.values);
}

bool TwistedComplex::is_coboundary(const TwistedCochain& u) const {
  return coboundary_preimage(u).has_value();
}

TwistedWorkspace::TwistedWorkspace(const SimplicialComplex& k,
                                   const IntegerOneCocycle& xi)
    : cover_(build_laurent_complex(k, xi)) {}

const TwistedComplex& TwistedWorkspace::at(const Rational& a) const {
  std::pair<Int, Int> key{a.get_num(), a.get_den()};
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(key, std::make_shared<TwistedComplex>(cover_, a))
             .first;
  return *it->second;
}

TwistedCochain TwistedWorkspace::cup(const Rational& a, const Rational& b,
                                     const TwistedCochain& u,
                                     const TwistedCochain& v,
                                     bool check_closed) const {
  const SimplicialComplex& k = cover_.complex;
  const int p = u.q, pp = v.q;
  if (p < 0 || pp < 0 || p + pp > k.dim())
    throw std::invalid_argument("cup: degrees out of range");
  if (check_closed) {
    if (!at(a).is_closed(u) || !at(b).is_closed(v))
      throw std::invalid_argument("cup: inputs must be closed cocycles");
  }
  const auto& heights = cover_.heights;
  TwistedCochain out;
  out.q = p + pp;
  const auto& top = k.simplices(out.q);
  out.values = RatVector::Zero(static_cast<Eigen::Index>(top.size()));
  for (size_t s = 0; s < top.size(); ++s) {
    const Simplex& sigma = top[s];
    Simplex front(sigma.begin(), sigma.begin() + p + 1);
    Simplex back(sigma.begin() + p, sigma.end());
    int fi = k.index_of(front);
    int bi = k.index_of(back);
    if (fi < 0 || bi < 0) throw std::logic_error("cup: face lookup failed");
    const Rational& uf = u.values(fi);
    const Rational& vb = v.values(bi);
    if (is_zero(uf) || is_zero(vb)) continue;
    // Transport the back face to the front vertex of sigma.
    long long twist = twist_exponent(cover_.xi, heights, sigma[0],
                                     sigma[static_cast<size_t>(p)]);
    out.values(static_cast<Eigen::Index>(s)) =
        uf * pow_rational(b, static_cast<long>(twist)) * vb;
  }
  return out;
}

RatMatrix twisted_coboundary(const TwistedWorkspace& w, const Rational& a,
                             int q) {
  return w.at(a).delta(q);
}

int twisted_betti(const TwistedWorkspace& w, const Rational& a, int q) {
  return w.at(a).betti(q);
}

RatVector restrict_cochain(const SimplicialComplex& k, const Subcomplex& f,
                           const TwistedCochain& u) {
  (void)k;
  static const std::vector<int> empty;
  const auto& idx =
      u.q <= f.dim() ? f.indices[static_cast<size_t>(u.q)] : empty;
  RatVector out = RatVector::Zero(static_cast<Eigen::Index>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = u.values(idx[i]);
  return out;
}

RatMatrix subcomplex_delta(const TwistedWorkspace& w, const Rational& a,
                           const Subcomplex& f, int q) {
  static const std::vector<int> empty;
  const RatMatrix& full = w.at(a).delta(q);
  const auto& rows =
      q + 1 <= f.dim() ? f.indices[static_cast<size_t>(q) + 1] : empty;
  const auto& cols = q <= f.dim() ? f.indices[static_cast<size_t>(q)] : empty;
  RatMatrix out(static_cast<Eigen::Index>(rows.size()),
                static_cast<Eigen::Index>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          full(rows[i], cols[j]);
  return out;
}

namespace {

// Simplices of K not in F, per dimension q.
std::vector<int> complement_indices(const SimplicialComplex& k,
                                    const Subcomplex& f, int q) {
  std::vector<char> in_f(static_cast<size_t>(k.count(q)), 0);
  if (q <= f.dim())
    for (int idx : f.indices[static_cast<size_t>(q)])
      in_f[static_cast<size_t>(idx)] = 1;
  std::vector<int> out;
  for (int i = 0; i < k.count(q); ++i)
    if (!in_f[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

}  // namespace

int relative_twisted_betti(const TwistedWorkspace& w, const Rational& a,
                           const Subcomplex& f, int q) {
  const SimplicialComplex& k = w.complex();
  auto sub_delta = [&](int deg) {
    const RatMatrix& full = w.at(a).delta(deg);
    auto rows = complement_indices(k, f, deg + 1);
    auto cols = complement_indices(k, f, deg);
    RatMatrix out(static_cast<Eigen::Index>(rows.size()),
                  static_cast<Eigen::Index>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j)
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            full(rows[i], cols[j]);
    return out;
  };
  if (q < 0 || q > k.dim()) return 0;
  RatMatrix dq = sub_delta(q);
  int r_prev = 0;
  if (q > 0) r_prev = rank(sub_delta(q - 1));
  return static_cast<int>(dq.cols()) - rank(dq) - r_prev;
}

LiftingCheck lifting_vanishing_check(const TwistedWorkspace& w,
                                     const Rational& a, const Subcomplex& f,
                                     int i) {
  if (is_dirichlet_unit_rational(a))
    throw std::invalid_argument(
        "lifting_vanishing_check: monodromy must not be a Dirichlet unit");
  if (!restricts_to_zero(w.complex(), w.xi(), f))
    throw std::invalid_argument(
        "lifting_vanishing_check: xi does not restrict to zero on F");

  const TwistedComplex& tx = w.at(a);
  const RatMatrix& reps = tx.cohomology_basis(i);

  // The restriction of a class vanishes in H^i(F) iff it lies in the image
  // of F's own twisted coboundary one degree down.
  RatMatrix f_delta_prev;
  if (i > 0) {
    f_delta_prev = subcomplex_delta(w, a, f, i - 1);
  }
  LiftingCheck out;
  out.pass = true;
  for (Eigen::Index j = 0; j < reps.cols(); ++j) {
    TwistedCochain u{i, reps.col(j)};
    RatVector restricted = restrict_cochain(w.complex(), f, u);
    bool vanishes;
    if (restricted.size() == 0) {
      vanishes = true;
    } else if (i == 0) {
      vanishes = true;
      for (Eigen::Index r = 0; r < restricted.size(); ++r)
        if (!is_zero(restricted(r))) vanishes = false;
    } else {
      vanishes = solve(f_delta_prev, restricted).has_value();
    }
    if (!vanishes) {
      out.pass = false;
      out.witness = u;
      break;
    }
  }
  return out;
}

}  // namespace catxi
