#include "catxi/simplicial.hpp"

#include "catxi/exact_linalg.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace catxi {

namespace {

std::string simplex_str(const Simplex& s) {
  std::string out = "(";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

bool strictly_increasing(const Simplex& s) {
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

}  // namespace

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
  static const std::vector<Simplex> empty;
  if (q < 0 || q > dim()) return empty;
  return by_dim[static_cast<size_t>(q)];
}

int SimplicialComplex::index_of(const Simplex& s) const {
  int q = static_cast<int>(s.size()) - 1;
  if (q < 0 || q > dim()) return -1;
  const auto& list = by_dim[static_cast<size_t>(q)];
  auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) return -1;
  return static_cast<int>(it - list.begin());
}

bool SimplicialComplex::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return index_of({u, v}) >= 0;
}

SimplicialComplex complex_from_maximal(const std::vector<Simplex>& maximal) {
  std::set<Simplex> closure;
  int max_vertex = -1;
  for (const auto& raw : maximal) {
    Simplex s = raw;
    std::sort(s.begin(), s.end());
    if (s.empty()) throw std::invalid_argument("empty simplex");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("repeated vertex in simplex " +
                                  simplex_str(raw));
    if (s.front() < 0) throw std::invalid_argument("negative vertex id");
    max_vertex = std::max(max_vertex, s.back());
    // All nonempty subsets, via bitmask over the (small) vertex tuple.
    const size_t n = s.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Simplex face;
      for (size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      closure.insert(std::move(face));
    }
  }
  SimplicialComplex k;
  k.vertex_count = max_vertex + 1;
  for (const auto& s : closure) {
    size_t q = s.size() - 1;
    if (k.by_dim.size() <= q) k.by_dim.resize(q + 1);
    k.by_dim[q].push_back(s);
  }
  for (auto& list : k.by_dim) std::sort(list.begin(), list.end());
  // Isolated vertices below max id are allowed only if listed; fill the
  // vertex list from what we saw.
  return k;
}

ValidationReport validate_complex(const SimplicialComplex& k) {
  ValidationReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.issues.push_back(std::move(msg));
  };

  for (int q = 0; q <= k.dim(); ++q) {
    const auto& list = k.simplices(q);
    for (const auto& s : list) {
      if (static_cast<int>(s.size()) != q + 1)
        fail("simplex " + simplex_str(s) + " filed under dimension " +
             std::to_string(q));
      if (!strictly_increasing(s))
        fail("orientation error: vertices of " + simplex_str(s) +
             " are not strictly increasing");
      if (!s.empty() && (s.front() < 0 || s.back() >= k.vertex_count))
        fail("vertex id out of range in " + simplex_str(s));
    }
    for (size_t i = 1; i < list.size(); ++i) {
      if (list[i - 1] == list[i])
        fail("duplicate simplex " + simplex_str(list[i]));
      else if (!(list[i - 1] < list[i]))
        fail("simplex list not sorted at dimension " + std::to_string(q));
    }
  }

  // Closure under faces.
  for (int q = 1; q <= k.dim(); ++q) {
    for (const auto& s : k.simplices(q)) {
      for (size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        if (!k.has(face))
          fail("closure violation: face " + simplex_str(face) + " of " +
               simplex_str(s) + " is missing");
      }
    }
  }

  if (!report.ok) return report;  // boundary matrices need the above

  for (int q = 2; q <= k.dim(); ++q) {
    IntMatrix dd = boundary_matrix(k, q - 1) * boundary_matrix(k, q);
    if (!dd.isZero())
      fail("boundary-of-boundary nonzero at q = " + std::to_string(q));
  }
  return report;
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int q) {
  if (q < 1 || q > k.dim())
    throw std::invalid_argument("boundary_matrix: q out of range");
  const auto& rows = k.simplices(q - 1);
  const auto& cols = k.simplices(q);
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    const Simplex& s = cols[j];
    int sign = 1;
    for (size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      int r = k.index_of(face);
      if (r < 0) throw std::logic_error("boundary_matrix: complex not closed");
      m(r, static_cast<Eigen::Index>(j)) += sign;
      sign = -sign;
    }
  }
  return m;
}

std::vector<long> betti_numbers(const SimplicialComplex& k) {
  std::vector<long> betti;
  std::vector<int> ranks(static_cast<size_t>(k.dim()) + 2, 0);
  for (int q = 1; q <= k.dim(); ++q)
    ranks[static_cast<size_t>(q)] = rank(boundary_matrix(k, q).cast<Rational>());
  for (int q = 0; q <= k.dim(); ++q) {
    long n_q = k.count(q);
    betti.push_back(n_q - ranks[static_cast<size_t>(q)] -
                    ranks[static_cast<size_t>(q) + 1]);
  }
  return betti;
}

bool is_connected(const SimplicialComplex& k) {
  if (k.vertex_count == 0) return true;
  std::vector<char> seen(static_cast<size_t>(k.vertex_count), 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  std::vector<std::vector<int>> adjacency(
      static_cast<size_t>(k.vertex_count));
  for (const auto& e : k.simplices(1)) {
    adjacency[static_cast<size_t>(e[0])].push_back(e[1]);
    adjacency[static_cast<size_t>(e[1])].push_back(e[0]);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : adjacency[static_cast<size_t>(v)]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == k.vertex_count;
}

void IntegerOneCocycle::set(int u, int v, long long w) {
  if (u == v) throw std::invalid_argument("cocycle: degenerate edge");
  if (u > v) {
    std::swap(u, v);
    w = -w;
  }
  if (w == 0)
    weights_.erase({u, v});
  else
    weights_[{u, v}] = w;
}

long long IntegerOneCocycle::value(int u, int v) const {
  bool flip = u > v;
  if (flip) std::swap(u, v);
  auto it = weights_.find({u, v});
  if (it == weights_.end()) return 0;
  return flip ? -it->second : it->second;
}

bool IntegerOneCocycle::is_zero() const { return weights_.empty(); }

IntegerOneCocycle IntegerOneCocycle::scaled(long long factor) const {
  IntegerOneCocycle out;
  if (factor == 0) return out;
  for (const auto& [edge, w] : weights_)
    out.weights_[edge] = w * factor;
  return out;
}

std::vector<std::string> cocycle_violations(const SimplicialComplex& k,
                                            const IntegerOneCocycle& xi) {
  std::vector<std::string> issues;
  for (const auto& [edge, w] : xi.weights()) {
    (void)w;
    if (!k.has_edge(edge.first, edge.second))
      issues.push_back("weight on non-edge (" + std::to_string(edge.first) +
                       " " + std::to_string(edge.second) + ")");
  }
  for (const auto& t : k.simplices(2)) {
    long long defect =
        xi.value(t[0], t[1]) + xi.value(t[1], t[2]) - xi.value(t[0], t[2]);
    if (defect != 0)
      issues.push_back("cocycle condition fails on " + simplex_str(t) +
                       " (defect " + std::to_string(defect) + ")");
  }
  return issues;
}

bool is_cocycle(const SimplicialComplex& k, const IntegerOneCocycle& xi) {
  return cocycle_violations(k, xi).empty();
}

long long integrate(const SimplicialComplex& k, const IntegerOneCocycle& xi,
                    const EdgePath& path) {
  long long total = 0;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    int u = path[i], v = path[i + 1];
    if (u == v || !k.has_edge(u, v))
      throw std::invalid_argument("integrate: step (" + std::to_string(u) +
                                  " " + std::to_string(v) +
                                  ") is not an edge of the complex");
    total += xi.value(u, v);
  }
  return total;
}

long long period(const SimplicialComplex& k, const IntegerOneCocycle& xi,
                 const EdgePath& loop) {
  if (loop.size() < 2 || loop.front() != loop.back())
    throw std::invalid_argument("period: path is not closed");
  return integrate(k, xi, loop);
}

namespace {

// BFS potentials from the least vertex of each component; h(root) = 0,
// h(w) = h(v) + w(v, w) along tree edges.
std::vector<long long> bfs_potentials(const SimplicialComplex& k,
                                      const IntegerOneCocycle& xi,
                                      bool* connected) {
  std::vector<long long> h(static_cast<size_t>(k.vertex_count), 0);
  std::vector<char> seen(static_cast<size_t>(k.vertex_count), 0);
  std::vector<std::vector<int>> adjacency(
      static_cast<size_t>(k.vertex_count));
  for (const auto& e : k.simplices(1)) {
    adjacency[static_cast<size_t>(e[0])].push_back(e[1]);
    adjacency[static_cast<size_t>(e[1])].push_back(e[0]);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());
  int components = 0;
  for (int root = 0; root < k.vertex_count; ++root) {
    if (seen[static_cast<size_t>(root)]) continue;
    ++components;
    seen[static_cast<size_t>(root)] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : adjacency[static_cast<size_t>(v)]) {
        if (seen[static_cast<size_t>(w)]) continue;
        seen[static_cast<size_t>(w)] = 1;
        h[static_cast<size_t>(w)] = h[static_cast<size_t>(v)] + xi.value(v, w);
        queue.push(w);
      }
    }
  }
  if (connected) *connected = components <= 1;
  return h;
}

}  // namespace

std::optional<std::vector<long long>> exactness_potential(
    const SimplicialComplex& k, const IntegerOneCocycle& xi) {
  bool connected = false;
  std::vector<long long> h = bfs_potentials(k, xi, &connected);
  for (const auto& e : k.simplices(1)) {
    if (h[static_cast<size_t>(e[1])] - h[static_cast<size_t>(e[0])] !=
        xi.value(e[0], e[1]))
      return std::nullopt;
  }
  return h;
}

std::vector<long long> spanning_tree_heights(const SimplicialComplex& k,
                                             const IntegerOneCocycle& xi) {
  bool connected = false;
  std::vector<long long> h = bfs_potentials(k, xi, &connected);
  if (!connected)
    throw std::invalid_argument("spanning_tree_heights: complex is disconnected");
  return h;
}

long long period_gcd(const SimplicialComplex& k,
                     const IntegerOneCocycle& xi) {
  std::vector<long long> h = spanning_tree_heights(k, xi);
  long long g = 0;
  for (const auto& e : k.simplices(1)) {
    long long twist = twist_exponent(xi, h, e[0], e[1]);
    g = std::gcd(g, twist);
  }
  return g;
}

Subcomplex induced_subcomplex(const SimplicialComplex& k,
                              const std::vector<int>& vertices) {
  std::set<int> allow(vertices.begin(), vertices.end());
  Subcomplex f;
  f.indices.resize(static_cast<size_t>(k.dim()) + 1);
  for (int q = 0; q <= k.dim(); ++q) {
    const auto& list = k.simplices(q);
    for (size_t i = 0; i < list.size(); ++i) {
      bool inside = true;
      for (int v : list[i])
        if (!allow.count(v)) {
          inside = false;
          break;
        }
      if (inside) f.indices[static_cast<size_t>(q)].push_back(
          static_cast<int>(i));
    }
  }
  while (!f.indices.empty() && f.indices.back().empty()) f.indices.pop_back();
  return f;
}

bool subcomplex_is_face_closed(const SimplicialComplex& k,
                               const Subcomplex& f) {
  std::set<Simplex> members;
  for (int q = 0; q <= f.dim(); ++q)
    for (int idx : f.indices[static_cast<size_t>(q)])
      members.insert(k.simplices(q)[static_cast<size_t>(idx)]);
  for (const auto& s : members) {
    if (s.size() == 1) continue;
    for (size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      if (!members.count(face)) return false;
    }
  }
  return true;
}

bool restricts_to_zero(const SimplicialComplex& k,
                       const IntegerOneCocycle& xi, const Subcomplex& f) {
  // Potentials per component of the subcomplex's 1-skeleton.
  std::map<int, long long> h;
  std::map<int, std::vector<int>> adjacency;
  for (int idx : f.count(0) ? f.indices[0] : std::vector<int>{})
    adjacency[k.simplices(0)[static_cast<size_t>(idx)][0]];
  std::vector<std::pair<int, int>> edges;
  if (f.dim() >= 1) {
    for (int idx : f.indices[1]) {
      const Simplex& e = k.simplices(1)[static_cast<size_t>(idx)];
      adjacency[e[0]].push_back(e[1]);
      adjacency[e[1]].push_back(e[0]);
      edges.emplace_back(e[0], e[1]);
    }
  }
  for (auto& [v, list] : adjacency) std::sort(list.begin(), list.end());
  for (const auto& [root, list] : adjacency) {
    (void)list;
    if (h.count(root)) continue;
    h[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : adjacency[v]) {
        if (h.count(w)) continue;
        h[w] = h[v] + xi.value(v, w);
        queue.push(w);
      }
    }
  }
  for (const auto& [u, v] : edges)
    if (h[v] - h[u] != xi.value(u, v)) return false;
  return true;
}

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& k) {
  BarycentricSubdivision sd;
  std::map<Simplex, int> barycenter_id;
  for (int q = 0; q <= k.dim(); ++q) {
    for (const auto& s : k.simplices(q)) {
      barycenter_id[s] = static_cast<int>(sd.vertex_simplex.size());
      sd.vertex_simplex.push_back(s);
    }
  }
  // Maximal simplices of Sd(K) are full flags through the maximal simplices
  // of K; taking flags through every simplex and letting the closure builder
  // dedupe is simpler and desk-scale cheap.
  std::vector<Simplex> flags;
  // Enumerate chains sigma_0 < sigma_1 < ... recursively.
  struct Walker {
    const SimplicialComplex& k;
    std::map<Simplex, int>& id;
    std::vector<Simplex>& flags;
    std::vector<int> chain;

    void descend(const Simplex& s) {
      chain.push_back(id.at(s));
      if (s.size() == 1) {
        Simplex flag = chain;
        std::sort(flag.begin(), flag.end());
        flags.push_back(std::move(flag));
      } else {
        for (size_t drop = 0; drop < s.size(); ++drop) {
          Simplex face;
          for (size_t i = 0; i < s.size(); ++i)
            if (i != drop) face.push_back(s[i]);
          descend(face);
        }
      }
      chain.pop_back();
    }
  };
  Walker walker{k, barycenter_id, flags, {}};
  for (const auto& s : k.simplices(k.dim())) walker.descend(s);
  // Lower-dimensional maximal simplices (a complex need not be pure).
  for (int q = 0; q < k.dim(); ++q) {
    for (const auto& s : k.simplices(q)) {
      bool maximal = true;
      for (const auto& t : k.simplices(q + 1)) {
        if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
          maximal = false;
          break;
        }
      }
      if (maximal) walker.descend(s);
    }
  }
  sd.complex = complex_from_maximal(flags);
  sd.complex.vertex_count = static_cast<int>(sd.vertex_simplex.size());
  return sd;
}

IntegerOneCocycle subdivide_cocycle(const BarycentricSubdivision& sd,
                                    const IntegerOneCocycle& xi) {
  // Pullback along the simplicial approximation sending a barycenter to the
  // least vertex of its simplex.
  IntegerOneCocycle out;
  for (const auto& e : sd.complex.simplices(1)) {
    int a = sd.vertex_simplex[static_cast<size_t>(e[0])].front();
    int b = sd.vertex_simplex[static_cast<size_t>(e[1])].front();
    if (a == b) continue;
    long long w = xi.value(a, b);
    if (w != 0) out.set(e[0], e[1], w);
  }
  return out;
}

SimplicialComplex parse_complex(std::istream& in) {
  std::string line;
  int declared_dim = -1;
  std::vector<Simplex> maximal;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "dim") {
      if (!(ls >> declared_dim) || declared_dim < 0)
        throw std::invalid_argument("complex file: bad dim header at line " +
                                    std::to_string(line_no));
    } else if (tag == "s") {
      Simplex s;
      int v;
      while (ls >> v) s.push_back(v);
      if (s.empty())
        throw std::invalid_argument("complex file: empty simplex at line " +
                                    std::to_string(line_no));
      maximal.push_back(std::move(s));
    } else {
      throw std::invalid_argument("complex file: unknown tag '" + tag +
                                  "' at line " + std::to_string(line_no));
    }
  }
  if (declared_dim < 0)
    throw std::invalid_argument("complex file: missing 'dim D' header");
  SimplicialComplex k = complex_from_maximal(maximal);
  if (k.dim() != declared_dim)
    throw std::invalid_argument(
        "complex file: declared dim " + std::to_string(declared_dim) +
        " but maximal simplices give dim " + std::to_string(k.dim()));
  return k;
}

SimplicialComplex parse_complex_text(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

std::string format_complex(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "dim " << k.dim() << "\n";
  // Emit maximal simplices only.
  for (int q = k.dim(); q >= 0; --q) {
    for (const auto& s : k.simplices(q)) {
      bool maximal = true;
      if (q < k.dim()) {
        for (const auto& t : k.simplices(q + 1)) {
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
            maximal = false;
            break;
          }
        }
      }
      if (!maximal) continue;
      os << "s";
      for (int v : s) os << " " << v;
      os << "\n";
    }
  }
  return os.str();
}

IntegerOneCocycle parse_cocycle(std::istream& in) {
  IntegerOneCocycle xi;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag != "w")
      throw std::invalid_argument("cocycle file: unknown tag '" + tag +
                                  "' at line " + std::to_string(line_no));
    int i, j;
    long long value;
    if (!(ls >> i >> j >> value))
      throw std::invalid_argument("cocycle file: bad entry at line " +
                                  std::to_string(line_no));
    if (i == j)
      throw std::invalid_argument("cocycle file: degenerate edge at line " +
                                  std::to_string(line_no));
    xi.set(i, j, xi.value(i, j) + value);
  }
  return xi;
}

IntegerOneCocycle parse_cocycle_text(const std::string& text) {
  std::istringstream in(text);
  return parse_cocycle(in);
}

std::string format_cocycle(const IntegerOneCocycle& xi) {
  std::ostringstream os;
  for (const auto& [edge, w] : xi.weights())
    os << "w " << edge.first << " " << edge.second << " " << w << "\n";
  return os.str();
}

}  // namespace catxi
