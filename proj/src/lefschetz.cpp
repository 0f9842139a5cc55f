#include "wucalc/lefschetz.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace wucalc {

Automorphism::Automorphism(std::map<Vertex, Vertex> mapping) : map_(std::move(mapping)) {
  std::set<Vertex> seen;
  for (const auto& [v, w] : map_) {
    if (!map_.count(w)) throw Error("permutation maps " + std::to_string(v) + " outside its domain");
    if (!seen.insert(w).second) throw Error("permutation is not injective");
  }
}

Automorphism Automorphism::identity(const std::vector<Vertex>& vertices) {
  std::map<Vertex, Vertex> m;
  for (Vertex v : vertices) m[v] = v;
  return Automorphism(std::move(m));
}

Automorphism Automorphism::from_cycles(const std::string& text, const std::vector<Vertex>& vertices) {
  std::map<Vertex, Vertex> m;
  for (Vertex v : vertices) m[v] = v;
  std::set<Vertex> used;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw Error("expected '(' in cycle notation");
    ++i;
    std::vector<Vertex> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw Error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw Error("expected a vertex number in cycle notation");
      Vertex v = static_cast<Vertex>(std::stoul(text.substr(i, j - i)));
      if (!m.count(v)) throw Error("cycle mentions unknown vertex " + std::to_string(v));
      if (!used.insert(v).second) throw Error("vertex " + std::to_string(v) + " repeated in cycles");
      cycle.push_back(v);
      i = j;
    }
    for (std::size_t c = 0; c < cycle.size(); ++c) m[cycle[c]] = cycle[(c + 1) % cycle.size()];
    skip_space();
  }
  return Automorphism(std::move(m));
}

Vertex Automorphism::operator()(Vertex v) const {
  auto it = map_.find(v);
  if (it == map_.end()) throw Error("vertex " + std::to_string(v) + " outside the permutation domain");
  return it->second;
}

std::vector<Vertex> Automorphism::images() const {
  std::vector<Vertex> out;
  for (const auto& [v, w] : map_) out.push_back(w);
  return out;
}

std::string Automorphism::cycle_notation() const {
  std::set<Vertex> seen;
  std::string out;
  for (const auto& [v, w] : map_) {
    if (seen.count(v) || v == w) continue;
    out += "(";
    Vertex x = v;
    bool first = true;
    while (!seen.count(x)) {
      seen.insert(x);
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = map_.at(x);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool Automorphism::is_identity() const {
  return std::all_of(map_.begin(), map_.end(), [](const auto& kv) { return kv.first == kv.second; });
}

int Automorphism::sign() const {
  std::set<Vertex> seen;
  int s = 1;
  for (const auto& [v, w] : map_) {
    if (seen.count(v)) continue;
    std::size_t len = 0;
    for (Vertex x = v; !seen.count(x); x = map_.at(x)) {
      seen.insert(x);
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Automorphism Automorphism::compose(const Automorphism& inner) const {
  std::map<Vertex, Vertex> m;
  for (const auto& [v, w] : inner.map_) m[v] = (*this)(w);
  return Automorphism(std::move(m));
}

Automorphism Automorphism::inverse() const {
  std::map<Vertex, Vertex> m;
  for (const auto& [v, w] : map_) m[w] = v;
  return Automorphism(std::move(m));
}

bool is_automorphism(const Graph& g, const Automorphism& t) {
  if (t.mapping().size() != g.vertex_count()) return false;
  for (Vertex v : g.vertices())
    if (!t.mapping().count(v)) return false;
  for (auto [a, b] : g.edges())
    if (!g.adjacent(t(a), t(b))) return false;
  return true;
}

bool is_automorphism(const Complex& c, const Automorphism& t) {
  std::vector<Vertex> verts = c.vertices();
  if (t.mapping().size() != verts.size()) return false;
  for (Vertex v : verts)
    if (!t.mapping().count(v)) return false;
  for (const Simplex& s : c.simplices()) {
    std::vector<Vertex> img;
    for (Vertex v : s.vertices()) img.push_back(t(v));
    if (!c.contains(Simplex(std::move(img)))) return false;
  }
  return true;
}

std::vector<Automorphism> automorphism_group(const Graph& g, std::size_t bound) {
  const std::vector<Vertex> verts = g.vertices();
  const std::size_t n = verts.size();
  if (n > bound)
    throw Error("graph has " + std::to_string(n) + " vertices, above the automorphism search bound " +
                std::to_string(bound) + "; pass automorphisms explicitly");

  // fingerprint: degree and sorted neighbor degrees
  std::map<Vertex, std::vector<std::size_t>> print;
  for (Vertex v : verts) {
    std::vector<std::size_t> fp;
    for (Vertex w : g.neighbors(v)) fp.push_back(g.degree(w));
    std::sort(fp.begin(), fp.end());
    fp.insert(fp.begin(), g.degree(v));
    print[v] = std::move(fp);
  }

  // breadth-first order so each new vertex has assigned neighbors
  std::vector<Vertex> order;
  std::set<Vertex> placed;
  std::vector<Vertex> by_degree = verts;
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  for (Vertex root : by_degree) {
    if (placed.count(root)) continue;
    std::vector<Vertex> queue{root};
    placed.insert(root);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      order.push_back(queue[q]);
      for (Vertex w : g.neighbors(queue[q]))
        if (placed.insert(w).second) queue.push_back(w);
    }
  }

  std::vector<Automorphism> group;
  std::map<Vertex, Vertex> assign;
  std::set<Vertex> taken;
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (i == n) {
      group.emplace_back(assign);
      return;
    }
    Vertex v = order[i];
    for (Vertex w : verts) {
      if (taken.count(w) || print[w] != print[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        Vertex u = order[j];
        if (g.adjacent(u, v) != g.adjacent(assign[u], w)) ok = false;
      }
      if (!ok) continue;
      assign[v] = w;
      taken.insert(w);
      search(i + 1);
      taken.erase(w);
      assign.erase(v);
    }
  };
  search(0);
  std::sort(group.begin(), group.end());

  // post-hoc group check: inverses, and products with a sample of elements
  std::set<std::vector<Vertex>> members;
  for (const auto& a : group) members.insert(a.images());
  const std::size_t sample = std::min<std::size_t>(group.size(), 32);
  for (const auto& a : group) {
    if (!members.count(a.inverse().images())) throw Error("automorphism set is not closed under inverse");
    for (std::size_t j = 0; j < sample; ++j)
      if (!members.count(a.compose(group[j]).images())) throw Error("automorphism set is not closed under composition");
  }
  return group;
}

std::vector<Automorphism> automorphism_group(const Complex& c, std::size_t bound) {
  std::vector<Automorphism> out;
  for (auto& t : automorphism_group(one_skeleton(c), bound))
    if (is_automorphism(c, t)) out.push_back(std::move(t));
  return out;
}

namespace {

// Parity of the permutation sorting the image list.
int sorting_sign(std::vector<Vertex>& v) {
  int s = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      s = -s;
    }
  return s;
}

}  // namespace

CellAction induced_action(const Complex& c, const Automorphism& t) {
  CellAction a;
  a.image.reserve(c.size());
  a.sign.reserve(c.size());
  std::vector<Vertex> img;
  for (const Simplex& s : c.simplices()) {
    img.clear();
    for (Vertex v : s.vertices()) img.push_back(t(v));
    int sg = sorting_sign(img);
    auto idx = c.index_of(Simplex(img));
    if (!idx) throw Error("permutation is not an automorphism of the complex");
    a.image.push_back(static_cast<std::uint32_t>(*idx));
    a.sign.push_back(sg);
  }
  return a;
}

namespace {

std::vector<CellAction> source_actions(const InteractionBasis& b, const std::vector<Automorphism>& t) {
  if (t.empty() || (t.size() != 1 && t.size() != b.order()))
    throw Error("need one automorphism, or one per source complex");
  std::vector<CellAction> actions;
  for (std::size_t j = 0; j < b.order(); ++j) {
    if (b.source(j).factor_count() != 1) throw Error("automorphisms act on simplicial sources only");
    actions.push_back(induced_action(b.source(j).factors()[0], t.size() == 1 ? t[0] : t[j]));
  }
  return actions;
}

std::vector<FixedTupleIndex> fixed_from_actions(const InteractionBasis& b, const std::vector<CellAction>& actions) {
  std::vector<FixedTupleIndex> out;
  for (std::size_t p = 0; p < b.grade_count(); ++p)
    for (std::size_t i = 0; i < b.grade_size(p); ++i) {
      auto tup = b.tuple(p, i);
      bool fixed = true;
      int sign = 1;
      for (std::size_t j = 0; j < tup.size() && fixed; ++j) {
        if (actions[j].image[tup[j]] != tup[j]) fixed = false;
        sign *= actions[j].sign[tup[j]];
      }
      if (fixed) out.push_back({p, i, sign * parity_sign(static_cast<long long>(p))});
    }
  return out;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error("singular Gram matrix of harmonic vectors");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rational s = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= s;
      inv[c][j] /= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

struct LefschetzEngine::EigenCache {
  std::vector<Eigen::VectorXd> values;
  std::vector<Eigen::MatrixXd> vectors;
};

LefschetzEngine::LefschetzEngine(std::vector<CellComplexPtr> sources) : basis_(std::move(sources)) {
  for (std::size_t j = 0; j < basis_.order(); ++j)
    if (basis_.source(j).factor_count() != 1) throw Error("automorphisms act on simplicial sources only");
  d_ = interaction_derivative(basis_);
  betti_ = betti_vector(d_);
  DiracLaplacian dl = dirac_and_laplacian(d_);
  const std::size_t grades = basis_.grade_count();
  harmonic_.resize(grades);
  gram_inverse_.resize(grades);
  parallel_for(grades, [&](std::size_t p) {
    if (betti_.values[p] == 0) return;
    std::vector<SparseBigVector> kernel = kernel_basis(dl.laplacian_blocks[p]);
    if (static_cast<long long>(kernel.size()) != betti_.values[p])
      throw Error("harmonic dimension differs from the Betti number");
    const std::size_t n = basis_.grade_size(p), b = kernel.size();
    auto& dense = harmonic_[p];
    dense.assign(b, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < b; ++i)
      for (const auto& [idx, val] : kernel[i]) dense[i][idx] = val;
    std::vector<std::vector<Rational>> gram(b, std::vector<Rational>(b, 0));
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = i; j < b; ++j) {
        BigInt s = 0;
        for (std::size_t t = 0; t < n; ++t) s += dense[i][t] * dense[j][t];
        gram[i][j] = gram[j][i] = Rational(s);
      }
    auto inv = invert(std::move(gram));
    gram_inverse_[p].clear();
    for (const auto& row : inv) gram_inverse_[p].insert(gram_inverse_[p].end(), row.begin(), row.end());
  });
}

LefschetzEngine::LefschetzEngine(const Complex& c, int k) : LefschetzEngine(repeat_source(c, k)) {}

std::vector<LefschetzEngine::SignedImage> LefschetzEngine::tuple_action(const std::vector<Automorphism>& t) const {
  std::vector<CellAction> actions = source_actions(basis_, t);
  std::vector<SignedImage> out(basis_.grade_count());
  const std::size_t k = basis_.order();
  std::vector<std::uint32_t> img(k);
  for (std::size_t p = 0; p < basis_.grade_count(); ++p) {
    const std::size_t n = basis_.grade_size(p);
    out[p].position.resize(n);
    out[p].sign.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto tup = basis_.tuple(p, i);
      int sign = 1;
      for (std::size_t j = 0; j < k; ++j) {
        img[j] = actions[j].image[tup[j]];
        sign *= actions[j].sign[tup[j]];
      }
      auto pos = basis_.position(img);
      if (!pos) throw Error("automorphism does not preserve the interaction basis");
      out[p].position[i] = *pos;
      out[p].sign[i] = sign;
    }
  }
  return out;
}

std::vector<FixedTupleIndex> LefschetzEngine::fixed_tuples(const std::vector<Automorphism>& t) const {
  return fixed_from_actions(basis_, source_actions(basis_, t));
}

Rational LefschetzEngine::lefschetz_number(const std::vector<Automorphism>& t) const {
  std::vector<SignedImage> action = tuple_action(t);
  Rational total = 0;
  for (std::size_t p = 0; p < harmonic_.size(); ++p) {
    const auto& k = harmonic_[p];
    const std::size_t b = k.size();
    if (b == 0) continue;
    const std::size_t n = basis_.grade_size(p);
    // X = K^T U K with (U K_j)[T(s)] = sign_s K_j[s]
    std::vector<BigInt> x(b * b, 0);
    for (std::size_t s = 0; s < n; ++s) {
      const std::uint32_t ts = action[p].position[s];
      const int sg = action[p].sign[s];
      for (std::size_t j = 0; j < b; ++j) {
        if (k[j][s] == 0) continue;
        for (std::size_t i = 0; i < b; ++i) {
          if (k[i][ts] == 0) continue;
          if (sg > 0) x[i * b + j] += k[i][ts] * k[j][s];
          else x[i * b + j] -= k[i][ts] * k[j][s];
        }
      }
    }
    Rational tr = 0;
    const auto& ginv = gram_inverse_[p];
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) tr += ginv[j * b + i] * Rational(x[i * b + j]);
    total += parity_sign(static_cast<long long>(p)) * tr;
  }
  total.canonicalize();
  if (total.get_den() != 1) throw Error("Lefschetz number is not an integer: " + to_string(total));
  return total;
}

LefschetzReport LefschetzEngine::check(const std::vector<Automorphism>& t) const {
  LefschetzReport r;
  r.lefschetz_number = lefschetz_number(t);
  auto fixed = fixed_tuples(t);
  r.fixed_count = fixed.size();
  for (const auto& f : fixed) r.index_sum += f.index;
  r.ok = r.lefschetz_number == Rational(static_cast<long>(r.index_sum));
  return r;
}

void LefschetzEngine::ensure_eigen() const {
  if (eigen_) return;
  auto cache = std::make_shared<EigenCache>();
  DiracLaplacian dl = dirac_and_laplacian(d_);
  for (const auto& block : dl.laplacian_blocks) {
    const std::size_t n = block.rows();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<long>(n), static_cast<long>(n));
    for (const Triplet& t : block.triplets()) m(t.row, t.col) = static_cast<double>(t.value);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    cache->values.push_back(solver.eigenvalues());
    cache->vectors.push_back(solver.eigenvectors());
  }
  eigen_ = cache;
}

double LefschetzEngine::heat_trace(const std::vector<Automorphism>& t, double time) const {
  if (time < 0) throw Error("heat time must be non-negative");
  ensure_eigen();
  std::vector<SignedImage> action = tuple_action(t);
  double total = 0;
  for (std::size_t p = 0; p < action.size(); ++p) {
    const Eigen::MatrixXd& q = eigen_->vectors[p];
    Eigen::VectorXd decay = (-time * eigen_->values[p].array()).exp();
    double tr = 0;
    for (std::size_t s = 0; s < action[p].position.size(); ++s) {
      const long a = static_cast<long>(s), b = static_cast<long>(action[p].position[s]);
      tr += action[p].sign[s] * (q.row(a).array() * decay.transpose().array() * q.row(b).array()).sum();
    }
    total += parity_sign(static_cast<long long>(p)) * tr;
  }
  return total;
}

Rational lefschetz_number(const Automorphism& t, const Complex& c, int k) {
  return LefschetzEngine(c, k).lefschetz_number({t});
}

LefschetzReport lefschetz_fixed_point_check(const Automorphism& t, const Complex& c, int k) {
  return LefschetzEngine(c, k).check({t});
}

std::vector<FixedTupleIndex> fixed_tuples(const Automorphism& t, const InteractionBasis& b) {
  return fixed_from_actions(b, source_actions(b, {t}));
}

double heat_trace(const Automorphism& t, const Complex& c, int k, double time) {
  return LefschetzEngine(c, k).heat_trace({t}, time);
}

}  // namespace wucalc
