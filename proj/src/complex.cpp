#include "wucalc/complex.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <cstdlib>
#include <set>
#include <thread>

namespace wucalc {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

unsigned thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WUCALC_THREADS")) {
    try {
      long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
    }
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w)
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error("simplex must have at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw Error("simplex has a repeated vertex");
}

bool Simplex::intersects(const Simplex& other) const {
  auto a = vertices_.begin(), b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

bool Simplex::contains_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

Complex Complex::from_simplices(std::vector<Simplex> simplices) {
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  Complex c;
  c.simplices_ = std::move(simplices);
  for (std::size_t i = 0; i < c.simplices_.size(); ++i) {
    while (static_cast<int>(c.offsets_.size()) <= c.simplices_[i].dim()) c.offsets_.push_back(i);
  }
  if (!c.simplices_.empty()) c.offsets_.push_back(c.simplices_.size());
  // closure: every codimension-one face must be present
  for (const Simplex& s : c.simplices_) {
    if (s.dim() == 0) continue;
    for (std::size_t m = 0; m < s.size(); ++m) {
      std::vector<Vertex> face(s.vertices().begin(), s.vertices().end());
      face.erase(face.begin() + static_cast<long>(m));
      if (!c.contains(Simplex(std::move(face)))) throw Error("simplex family is not downward closed");
    }
  }
  return c;
}

std::span<const Simplex> Complex::of_dim(int p) const {
  if (p < 0 || p > dim()) return {};
  return std::span<const Simplex>(simplices_).subspan(offsets_[p], offsets_[p + 1] - offsets_[p]);
}

std::size_t Complex::offset_of_dim(int p) const {
  if (p < 0) return 0;
  if (p > dim()) return simplices_.size();
  return offsets_[p];
}

std::optional<std::size_t> Complex::index_of(const Simplex& s) const {
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
  if (it == simplices_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - simplices_.begin());
}

std::vector<Vertex> Complex::vertices() const {
  std::vector<Vertex> out;
  for (const Simplex& s : of_dim(0)) out.push_back(s[0]);
  return out;
}

Graph::Graph(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  for (Vertex v : vertices) add_vertex(v);
  for (auto [a, b] : edges) {
    if (!has_vertex(a) || !has_vertex(b)) throw Error("edge references an unknown vertex");
    add_edge(a, b);
  }
}

void Graph::add_vertex(Vertex v) { adj_.try_emplace(v); }

void Graph::add_edge(Vertex a, Vertex b) {
  if (a == b) throw Error("self-loop at vertex " + std::to_string(a));
  auto insert = [](std::vector<Vertex>& list, Vertex v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
  };
  insert(adj_[a], b);
  insert(adj_[b], a);
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& [v, nb] : adj_)
    for (Vertex w : nb)
      if (v < w) out.emplace_back(v, w);
  return out;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw Error("unknown vertex " + std::to_string(v));
  return it->second;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [_, nb] : adj_) twice += nb.size();
  return twice / 2;
}

Graph Graph::induced(const std::vector<Vertex>& subset) const {
  std::set<Vertex> keep(subset.begin(), subset.end());
  Graph out;
  for (Vertex v : keep) {
    if (!has_vertex(v)) throw Error("unknown vertex " + std::to_string(v));
    out.add_vertex(v);
  }
  for (Vertex v : keep)
    for (Vertex w : neighbors(v))
      if (v < w && keep.count(w)) out.add_edge(v, w);
  return out;
}

Complex generate_complex(const std::vector<std::vector<Vertex>>& facets) {
  std::set<std::vector<Vertex>> all;
  for (const auto& facet : facets) {
    if (facet.empty()) throw Error("empty facet");
    Simplex s(facet);
    std::vector<Vertex> v(s.vertices().begin(), s.vertices().end());
    const std::size_t n = v.size();
    if (n > 24) throw Error("facet too large to close");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(v[i]);
      all.insert(std::move(sub));
    }
  }
  std::vector<Simplex> simplices;
  simplices.reserve(all.size());
  for (const auto& v : all) simplices.emplace_back(v);
  return Complex::from_simplices(std::move(simplices));
}

namespace {

// Enumerates all cliques by extending with larger neighbors only.
void extend_cliques(const Graph& g, std::vector<Vertex>& clique, const std::vector<Vertex>& candidates,
                    std::vector<Simplex>& out) {
  out.emplace_back(clique);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Vertex w = candidates[i];
    std::vector<Vertex> next;
    const auto& nb = g.neighbors(w);
    std::set_intersection(candidates.begin() + static_cast<long>(i) + 1, candidates.end(), nb.begin(), nb.end(),
                          std::back_inserter(next));
    clique.push_back(w);
    extend_cliques(g, clique, next, out);
    clique.pop_back();
  }
}

}  // namespace

Complex whitney_complex(const Graph& g) {
  std::vector<Simplex> out;
  for (Vertex v : g.vertices()) {
    std::vector<Vertex> larger;
    for (Vertex w : g.neighbors(v))
      if (w > v) larger.push_back(w);
    std::vector<Vertex> clique{v};
    extend_cliques(g, clique, larger, out);
  }
  return Complex::from_simplices(std::move(out));
}

Graph one_skeleton(const Complex& c) {
  Graph g;
  for (const Simplex& s : c.of_dim(0)) g.add_vertex(s[0]);
  for (const Simplex& s : c.of_dim(1)) g.add_edge(s[0], s[1]);
  return g;
}

std::vector<long long> f_vector(const Complex& c) {
  std::vector<long long> f(static_cast<std::size_t>(c.dim() + 1), 0);
  for (int p = 0; p <= c.dim(); ++p) f[p] = static_cast<long long>(c.of_dim(p).size());
  return f;
}

long long euler_characteristic(const Complex& c) {
  long long chi = 0;
  for (const Simplex& s : c.simplices()) chi += s.weight();
  return chi;
}

Complex barycentric_refinement(const Complex& c) {
  Graph g;
  const auto& simplices = c.simplices();
  for (std::size_t i = 0; i < simplices.size(); ++i) g.add_vertex(static_cast<Vertex>(i));
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const Simplex& s = simplices[i];
    const std::size_t n = s.size();
    if (n > 24) throw Error("simplex too large to refine");
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<Vertex> sub;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (1u << j)) sub.push_back(s[j]);
      g.add_edge(static_cast<Vertex>(*c.index_of(Simplex(std::move(sub)))), static_cast<Vertex>(i));
    }
  }
  return whitney_complex(g);
}

Graph unit_sphere(const Graph& g, Vertex v) { return g.induced(g.neighbors(v)); }

namespace {

Rational inductive_dimension_memo(const Graph& g, std::map<std::vector<Vertex>, Rational>& memo) {
  std::vector<Vertex> key = g.vertices();
  if (key.empty()) return Rational(-1);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Rational sum = 0;
  for (Vertex v : key) {
    Graph sphere = unit_sphere(g, v);
    // spheres are induced subgraphs of the top graph, so the vertex set is a sufficient key
    sum += inductive_dimension_memo(sphere, memo);
  }
  Rational d = 1 + sum / Rational(static_cast<long>(key.size()));
  d.canonicalize();
  memo.emplace(std::move(key), d);
  return d;
}

}  // namespace

Rational inductive_dimension(const Graph& g) {
  std::map<std::vector<Vertex>, Rational> memo;
  return inductive_dimension_memo(g, memo);
}

Rational euler_curvature(const Graph& g, Vertex v) {
  std::vector<long long> f = f_vector(whitney_complex(unit_sphere(g, v)));
  Rational kappa = 1;
  for (std::size_t j = 0; j < f.size(); ++j) {
    // term k = j+1 has sign (-1)^k and denominator k+1
    Rational term(static_cast<long>(f[j]), static_cast<long>(j + 2));
    if ((j + 1) % 2) kappa -= term; else kappa += term;
  }
  kappa.canonicalize();
  return kappa;
}

int poincare_hopf_index(const Graph& g, const std::map<Vertex, double>& f, Vertex v) {
  std::set<double> values;
  for (Vertex w : g.vertices()) {
    auto it = f.find(w);
    if (it == f.end()) throw Error("valuation misses vertex " + std::to_string(w));
    if (!values.insert(it->second).second) throw Error("valuation is not injective");
  }
  const double fv = f.at(v);
  std::vector<Vertex> lower;
  for (Vertex w : g.neighbors(v))
    if (f.at(w) < fv) lower.push_back(w);
  return 1 - static_cast<int>(euler_characteristic(whitney_complex(g.induced(lower))));
}

long long zagreb_index(const Graph& g) {
  long long m = 0;
  for (Vertex v : g.vertices()) {
    long long d = static_cast<long long>(g.degree(v));
    m += d * d;
  }
  return m;
}

}  // namespace wucalc
