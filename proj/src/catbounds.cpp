#include "catxi/catbounds.hpp"

#include "catxi/factor.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace catxi {

NormalizedClass normalize_class(const SimplicialComplex& k,
                                const IntegerOneCocycle& xi) {
  NormalizedClass out;
  long long g = period_gcd(k, xi);
  out.multiplier = g;
  if (g == 0 || g == 1) {
    out.xi0 = xi;
    return out;
  }
  // Gauge-fixed representative: the twist cochain divided by the gcd.
  std::vector<long long> h = spanning_tree_heights(k, xi);
  for (const auto& e : k.simplices(1)) {
    long long twist = twist_exponent(xi, h, e[0], e[1]);
    if (twist != 0) out.xi0.set(e[0], e[1], twist / g);
  }
  return out;
}

// --- Certificate search --------------------------------------------------------

namespace {

struct OrdinaryClass {
  int degree = 0;
  RatVector values;
};

std::vector<OrdinaryClass> ordinary_positive_classes(
    const TwistedWorkspace& w) {
  std::vector<OrdinaryClass> out;
  const TwistedComplex& t1 = w.at(Rational(1));
  for (int d = 1; d <= w.complex().dim(); ++d) {
    const RatMatrix& basis = t1.cohomology_basis(d);
    for (Eigen::Index j = 0; j < basis.cols(); ++j)
      out.push_back({d, basis.col(j)});
  }
  return out;
}

struct ExtensionResult {
  int r = 0;
  std::vector<TwistedCochain> ws;
  TwistedCochain product;
};

// Greedy extension of `current` by ordinary classes, trying candidates in
// order with a bounded number of explored branches per level.
ExtensionResult extend_product(const TwistedWorkspace& w, const Rational& ab,
                               const TwistedCochain& current,
                               const std::vector<OrdinaryClass>& classes,
                               size_t start, int max_more, int alternatives) {
  ExtensionResult best;
  best.product = current;
  if (max_more <= 0) return best;
  const TwistedComplex& tab = w.at(ab);
  int branches = 1 + alternatives;
  for (size_t i = start; i < classes.size() && branches > 0; ++i) {
    const auto& cand = classes[i];
    if (current.q + cand.degree > w.complex().dim()) continue;
    TwistedCochain next =
        w.cup(ab, Rational(1), current, {cand.degree, cand.values}, false);
    if (tab.is_coboundary(next)) continue;
    --branches;
    ExtensionResult deeper = extend_product(w, ab, next, classes, i,
                                            max_more - 1, alternatives);
    if (1 + deeper.r > best.r) {
      best.r = 1 + deeper.r;
      best.ws.clear();
      best.ws.push_back({cand.degree, cand.values});
      for (auto& x : deeper.ws) best.ws.push_back(std::move(x));
      best.product = deeper.product;
      if (best.r == max_more) break;  // cannot do better from here
    }
  }
  return best;
}

}  // namespace

std::optional<CupCertificate> search_certificate(const TwistedWorkspace& w,
                                                 const SearchOptions& options) {
  const int dim = w.complex().dim();
  if (dim < 2) return std::nullopt;  // u and v already need two positive degrees
  std::vector<Rational> pool = options.pool;
  for (const auto& a : pool) {
    if (is_zero(a)) throw std::invalid_argument("search: pool contains 0");
    if (is_dirichlet_unit_rational(a))
      throw std::invalid_argument("search: pool must exclude 1 and -1");
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  int cap = dim - 2;
  if (options.max_r >= 0) cap = std::min(cap, options.max_r);

  std::vector<OrdinaryClass> ordinary = ordinary_positive_classes(w);
  std::optional<CupCertificate> best;

  for (const auto& a : pool) {
    for (const auto& b : pool) {
      Rational ab = a * b;
      const TwistedComplex& ta = w.at(a);
      const TwistedComplex& tb = w.at(b);
      const TwistedComplex& tab = w.at(ab);
      for (int q = 1; q < dim; ++q) {
        const RatMatrix& ba = ta.cohomology_basis(q);
        if (ba.cols() == 0) continue;
        for (int qq = 1; q + qq <= dim; ++qq) {
          const RatMatrix& bb = tb.cohomology_basis(qq);
          if (bb.cols() == 0) continue;
          for (Eigen::Index ui = 0; ui < ba.cols(); ++ui) {
            for (Eigen::Index vi = 0; vi < bb.cols(); ++vi) {
              TwistedCochain u{q, ba.col(ui)};
              TwistedCochain v{qq, bb.col(vi)};
              TwistedCochain prod = w.cup(a, b, u, v, false);
              if (tab.is_coboundary(prod)) continue;
              int room = std::min(cap, dim - q - qq);
              ExtensionResult ext = extend_product(
                  w, ab, prod, ordinary, 0, room, options.alternatives);
              if (!best || ext.r > best->r) {
                CupCertificate cert;
                cert.a = a;
                cert.b = b;
                cert.u = u;
                cert.v = v;
                cert.w_list = ext.ws;
                cert.product = ext.r > 0 ? ext.product : prod;
                cert.r = ext.r;
                best = std::move(cert);
                if (best->r >= cap) return best;
              }
            }
          }
        }
      }
    }
  }
  return best;
}

bool verify_certificate(const SimplicialComplex& k,
                        const IntegerOneCocycle& xi,
                        const CupCertificate& cert, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (is_dirichlet_unit_rational(cert.a) ||
      is_dirichlet_unit_rational(cert.b))
    return fail("monodromy is a Dirichlet unit");
  TwistedWorkspace fresh(k, xi);
  if (!fresh.at(cert.a).is_closed(cert.u)) return fail("u is not closed");
  if (!fresh.at(cert.b).is_closed(cert.v)) return fail("v is not closed");
  TwistedCochain prod = fresh.cup(cert.a, cert.b, cert.u, cert.v);
  Rational ab = cert.a * cert.b;
  for (const auto& wj : cert.w_list) {
    if (wj.q < 1) return fail("w class of nonpositive degree");
    if (!fresh.at(Rational(1)).is_closed(wj)) return fail("w not closed");
    prod = fresh.cup(ab, Rational(1), prod, wj, false);
  }
  if (static_cast<int>(cert.w_list.size()) != cert.r)
    return fail("r does not match the w list");
  if (fresh.at(ab).is_coboundary(prod))
    return fail("final cup product is exact");
  RatVector diff = prod.values - cert.product.values;
  for (Eigen::Index i = 0; i < diff.size(); ++i)
    if (!is_zero(diff(i))) return fail("stored product does not match");
  return true;
}

long rational_cup_length(const TwistedWorkspace& w) {
  std::vector<OrdinaryClass> ordinary = ordinary_positive_classes(w);
  const int dim = w.complex().dim();
  long best = 0;
  for (size_t i = 0; i < ordinary.size(); ++i) {
    TwistedCochain current{ordinary[i].degree, ordinary[i].values};
    ExtensionResult ext = extend_product(w, Rational(1), current, ordinary, i,
                                         dim - ordinary[i].degree, 2);
    best = std::max(best, 1L + ext.r);
  }
  return best;
}

std::vector<UpperBound> upper_bounds(const SimplicialComplex& k,
                                     const IntegerOneCocycle& xi,
                                     std::optional<long> user_cat) {
  NormalizedClass norm = normalize_class(k, xi);
  long drop = (is_connected(k) && norm.multiplier != 0) ? 1 : 0;
  std::vector<UpperBound> out;
  out.push_back({k.dim() + 1 - drop, "dimension_bound"});
  if (user_cat) out.push_back({*user_cat - drop, "user_cat"});
  return out;
}

// --- Wedge handling -------------------------------------------------------------

namespace {

std::vector<std::vector<int>> vertex_adjacency(const SimplicialComplex& k) {
  std::vector<std::vector<int>> adjacency(
      static_cast<size_t>(k.vertex_count));
  for (const auto& e : k.simplices(1)) {
    adjacency[static_cast<size_t>(e[0])].push_back(e[1]);
    adjacency[static_cast<size_t>(e[1])].push_back(e[0]);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());
  return adjacency;
}

// Is the induced subcomplex on `verts` a simple cycle graph (dimension 1)?
bool induced_is_circle(const SimplicialComplex& k,
                       const std::set<int>& verts) {
  if (verts.size() < 3) return false;
  size_t edge_count = 0;
  std::map<int, int> degree;
  for (const auto& e : k.simplices(1)) {
    if (verts.count(e[0]) && verts.count(e[1])) {
      ++edge_count;
      degree[e[0]]++;
      degree[e[1]]++;
    }
  }
  if (edge_count != verts.size()) return false;
  for (int v : verts) {
    auto it = degree.find(v);
    if (it == degree.end() || it->second != 2) return false;
  }
  // No higher simplex fully inside.
  for (int q = 2; q <= k.dim(); ++q)
    for (const auto& s : k.simplices(q)) {
      bool inside = true;
      for (int v : s)
        if (!verts.count(v)) inside = false;
      if (inside) return false;
    }
  // Degree-2 everywhere plus edge count |V| means a disjoint union of
  // cycles; a single cycle iff connected.
  std::set<int> seen;
  std::queue<int> queue;
  queue.push(*verts.begin());
  seen.insert(*verts.begin());
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (const auto& e : k.simplices(1)) {
      int other = -1;
      if (e[0] == v && verts.count(e[1])) other = e[1];
      if (e[1] == v && verts.count(e[0])) other = e[0];
      if (other >= 0 && !seen.count(other)) {
        seen.insert(other);
        queue.push(other);
      }
    }
  }
  return seen.size() == verts.size();
}

// Every nonzero weight of xi sits on an edge inside `verts`.
bool xi_supported_inside(const IntegerOneCocycle& xi,
                         const std::set<int>& verts) {
  for (const auto& [edge, weight] : xi.weights()) {
    if (weight == 0) continue;
    if (!verts.count(edge.first) || !verts.count(edge.second)) return false;
  }
  return true;
}

long circle_period(const SimplicialComplex& k, const IntegerOneCocycle& xi,
                   const std::set<int>& verts) {
  std::vector<int> order;
  int start = *verts.begin();
  int prev = -1, cur = start;
  do {
    order.push_back(cur);
    int next = -1;
    for (const auto& e : k.simplices(1)) {
      int other = -1;
      if (e[0] == cur && verts.count(e[1])) other = e[1];
      if (e[1] == cur && verts.count(e[0])) other = e[0];
      if (other >= 0 && other != prev) {
        next = other;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start && cur >= 0);
  order.push_back(start);
  long long total = 0;
  for (size_t i = 0; i + 1 < order.size(); ++i)
    total += xi.value(order[i], order[i + 1]);
  return static_cast<long>(total);
}

SimplicialComplex reindexed_induced(const SimplicialComplex& k,
                                    const std::vector<int>& verts) {
  std::map<int, int> remap;
  for (int v : verts) remap[v] = static_cast<int>(remap.size());
  std::set<int> allow(verts.begin(), verts.end());
  std::vector<Simplex> maximal;
  for (int q = k.dim(); q >= 0; --q) {
    for (const auto& s : k.simplices(q)) {
      bool inside = true;
      for (int v : s)
        if (!allow.count(v)) inside = false;
      if (!inside) continue;
      Simplex mapped;
      for (int v : s) mapped.push_back(remap[v]);
      maximal.push_back(mapped);
    }
  }
  if (maximal.empty()) {
    SimplicialComplex point;
    point.vertex_count = 1;
    point.by_dim = {{{0}}};
    return point;
  }
  return complex_from_maximal(maximal);
}

}  // namespace

std::optional<WedgeSplit> detect_wedge_circle(const SimplicialComplex& k,
                                              const IntegerOneCocycle& xi,
                                              bool allow_degenerate) {
  if (xi.is_zero()) return std::nullopt;
  auto adjacency = vertex_adjacency(k);
  for (int cut = 0; cut < k.vertex_count; ++cut) {
    // Components of the 1-skeleton with `cut` removed.
    std::vector<int> component(static_cast<size_t>(k.vertex_count), -1);
    int n_comp = 0;
    for (int root = 0; root < k.vertex_count; ++root) {
      if (root == cut || component[static_cast<size_t>(root)] >= 0) continue;
      std::queue<int> queue;
      queue.push(root);
      component[static_cast<size_t>(root)] = n_comp;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int nb : adjacency[static_cast<size_t>(v)]) {
          if (nb == cut || component[static_cast<size_t>(nb)] >= 0) continue;
          component[static_cast<size_t>(nb)] = n_comp;
          queue.push(nb);
        }
      }
      ++n_comp;
    }
    if (n_comp < 2 && !allow_degenerate) continue;
    for (int c = 0; c < n_comp; ++c) {
      std::set<int> circle{cut};
      for (int v = 0; v < k.vertex_count; ++v)
        if (component[static_cast<size_t>(v)] == c) circle.insert(v);
      if (!induced_is_circle(k, circle)) continue;
      if (!xi_supported_inside(xi, circle)) continue;
      if (circle_period(k, xi, circle) == 0) continue;
      WedgeSplit split;
      split.cut_vertex = cut;
      split.circle_vertices.assign(circle.begin(), circle.end());
      for (int v = 0; v < k.vertex_count; ++v)
        if (v == cut || component[static_cast<size_t>(v)] != c)
          split.y_vertices.push_back(v);
      return split;
    }
  }
  return std::nullopt;
}

WedgeCat wedge_formula(const SimplicialComplex& k, const IntegerOneCocycle& xi,
                       std::optional<long> cat_y) {
  auto split = detect_wedge_circle(k, xi, /*allow_degenerate=*/true);
  if (!split)
    throw std::invalid_argument(
        "wedge_formula: no circle summand carrying xi was detected");
  WedgeCat out;
  if (cat_y) {
    out.lower = out.upper = *cat_y - 1;
    return out;
  }
  SimplicialComplex y = reindexed_induced(k, split->y_vertices);
  if (y.vertex_count <= 1 || y.dim() == 0) {
    out.lower = out.upper = 0;  // cat(point) - 1
    return out;
  }
  TwistedWorkspace wy(y, IntegerOneCocycle());
  long cup = rational_cup_length(wy);
  out.lower = cup;           // (cup + 1) - 1
  out.upper = y.dim() + 1 - 1;
  return out;
}

// --- Reports -------------------------------------------------------------------

CatBoundReport cat_bound_report(const SimplicialComplex& k,
                                const IntegerOneCocycle& xi,
                                const CatBoundOptions& options) {
  CatBoundReport report;
  NormalizedClass norm = normalize_class(k, xi);
  report.normalization_gcd = norm.multiplier;
  report.class_is_zero = norm.multiplier == 0;

  auto fold_upper = [&report](const std::vector<UpperBound>& uppers) {
    report.upper = uppers.front().value;
    report.upper_provenance = uppers.front().provenance;
    for (const auto& ub : uppers) {
      if (ub.value < report.upper) {
        report.upper = ub.value;
        report.upper_provenance = ub.provenance;
      }
    }
  };

  if (report.class_is_zero) {
    // Cat = cat: rational cup-length below, dimension/user bounds above.
    TwistedWorkspace w(k, IntegerOneCocycle());
    report.cup_length = rational_cup_length(w);
    report.lower = report.cup_length + 1;
    fold_upper(upper_bounds(k, IntegerOneCocycle(), options.user_cat));
    if (report.lower == report.upper) report.exact = report.lower;
  } else {
    TwistedWorkspace w(k, norm.xi0);
    SearchOptions search;
    search.pool = options.pool;
    search.max_r = options.max_r;
    report.certificate = search_certificate(w, search);
    report.lower = report.certificate ? report.certificate->r + 1 : 0;
    fold_upper(upper_bounds(k, norm.xi0, options.user_cat));

    if (detect_wedge_circle(k, norm.xi0, false)) {
      report.wedge_detected = true;
      WedgeCat wc = wedge_formula(k, norm.xi0, options.user_cat);
      if (wc.upper < report.upper) {
        report.upper = wc.upper;
        report.upper_provenance = "wedge_formula";
      }
      if (wc.exact()) {
        report.exact = wc.lower;
        report.upper_provenance = "wedge_formula";
      }
    }
    if (!report.exact && report.lower == report.upper)
      report.exact = report.lower;
  }

  if (report.lower > report.upper)
    throw std::logic_error("cat_bound_report: lower bound exceeds upper bound");
  if (report.exact &&
      (*report.exact < report.lower || *report.exact > report.upper))
    throw std::logic_error("cat_bound_report: exact value outside bounds");
  return report;
}

namespace {

nlohmann::json cochain_json(const TwistedCochain& u) {
  nlohmann::json values = nlohmann::json::array();
  for (Eigen::Index i = 0; i < u.values.size(); ++i)
    values.push_back(to_string(u.values(i)));
  return {{"degree", u.q}, {"values", values}};
}

}  // namespace

nlohmann::json report_json(const CatBoundReport& report) {
  nlohmann::json j;
  j["lower"] = report.lower;
  if (report.certificate) {
    const auto& c = *report.certificate;
    nlohmann::json wl = nlohmann::json::array();
    for (const auto& wj : c.w_list) wl.push_back(cochain_json(wj));
    j["lower_certificate"] = {
        {"a", to_string(c.a)},    {"b", to_string(c.b)},
        {"u", cochain_json(c.u)}, {"v", cochain_json(c.v)},
        {"w_list", wl},           {"r", c.r},
        {"product", cochain_json(c.product)}};
  } else {
    j["lower_certificate"] = nullptr;
  }
  j["upper"] = report.upper;
  j["upper_provenance"] = report.upper_provenance;
  if (report.exact) j["exact"] = *report.exact;
  j["normalization"] = {{"gcd", report.normalization_gcd}};
  j["class_is_zero"] = report.class_is_zero;
  if (report.cup_length >= 0) j["cup_length"] = report.cup_length;
  j["wedge_detected"] = report.wedge_detected;
  return j;
}

}  // namespace catxi
