#include "wucalc/interaction_basis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wucalc {

CellComplex::CellComplex(const Complex& c) {
  factors_.push_back(c);
  const auto& simplices = c.simplices();
  parts_.resize(simplices.size());
  std::iota(parts_.begin(), parts_.end(), 0u);
  dims_.reserve(simplices.size());
  boundary_offsets_.push_back(0);
  for (const Simplex& s : simplices) {
    dims_.push_back(s.dim());
    if (s.dim() > 0) {
      for (std::size_t m = 0; m < s.size(); ++m) {
        std::vector<Vertex> face(s.vertices().begin(), s.vertices().end());
        face.erase(face.begin() + static_cast<long>(m));
        boundary_.push_back({static_cast<std::uint32_t>(*c.index_of(Simplex(std::move(face)))), parity_sign(m)});
      }
    }
    boundary_offsets_.push_back(boundary_.size());
  }
  cell_of_code_ = parts_;
  finish();
}

CellComplex CellComplex::product(const std::vector<Complex>& factors) {
  if (factors.empty()) throw Error("a product needs at least one factor");
  if (factors.size() == 1) return CellComplex(factors[0]);
  std::vector<CellComplex> single;
  for (const Complex& f : factors) single.emplace_back(f);

  CellComplex out;
  out.factors_ = factors;
  const std::size_t m = factors.size();
  std::size_t total = 1;
  for (const Complex& f : factors) total *= f.size();

  // enumerate part tuples in mixed radix, then order by (dim, parts)
  std::vector<std::uint32_t> order(total);
  std::iota(order.begin(), order.end(), 0u);
  auto decode = [&](std::uint32_t code, std::vector<std::uint32_t>& parts) {
    parts.resize(m);
    for (std::size_t f = m; f-- > 0;) {
      parts[f] = code % factors[f].size();
      code /= static_cast<std::uint32_t>(factors[f].size());
    }
  };
  std::vector<int> code_dim(total);
  std::vector<std::uint32_t> parts;
  for (std::uint32_t code = 0; code < total; ++code) {
    decode(code, parts);
    int d = 0;
    for (std::size_t f = 0; f < m; ++f) d += single[f].dim(parts[f]);
    code_dim[code] = d;
  }
  // mixed radix order already equals lexicographic part order
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return code_dim[a] < code_dim[b]; });

  out.cell_of_code_.assign(total, 0);
  out.parts_.reserve(total * m);
  for (std::uint32_t cell = 0; cell < total; ++cell) {
    decode(order[cell], parts);
    out.parts_.insert(out.parts_.end(), parts.begin(), parts.end());
    out.dims_.push_back(code_dim[order[cell]]);
    out.cell_of_code_[order[cell]] = cell;
  }

  out.boundary_offsets_.push_back(0);
  std::vector<std::uint32_t> face_parts(m);
  for (std::uint32_t cell = 0; cell < total; ++cell) {
    auto p = out.parts(cell);
    int preceding = 0;
    for (std::size_t f = 0; f < m; ++f) {
      for (const SignedCell& face : single[f].boundary(p[f])) {
        std::copy(p.begin(), p.end(), face_parts.begin());
        face_parts[f] = face.cell;
        out.boundary_.push_back({*out.find(face_parts), face.sign * parity_sign(preceding)});
      }
      preceding += single[f].dim(p[f]);
    }
    out.boundary_offsets_.push_back(out.boundary_.size());
  }
  out.finish();
  return out;
}

void CellComplex::finish() {
  incidence_.assign(factors_.size(), {});
  for (std::uint32_t c = 0; c < size(); ++c)
    for (std::size_t f = 0; f < factors_.size(); ++f)
      for (Vertex v : part(c, f).vertices()) incidence_[f][v].push_back(c);
}

int CellComplex::max_dim() const {
  int d = -1;
  for (int x : dims_) d = std::max(d, x);
  return d;
}

std::optional<std::uint32_t> CellComplex::find(std::span<const std::uint32_t> p) const {
  if (p.size() != factors_.size()) return std::nullopt;
  std::size_t code = 0;
  for (std::size_t f = 0; f < p.size(); ++f) {
    if (p[f] >= factors_[f].size()) return std::nullopt;
    code = code * factors_[f].size() + p[f];
  }
  return cell_of_code_[code];
}

std::vector<long long> CellComplex::f_vector() const {
  std::vector<long long> f(static_cast<std::size_t>(max_dim() + 1), 0);
  for (int d : dims_) ++f[d];
  return f;
}

std::vector<std::uint32_t> CellComplex::meeting(std::uint32_t c, const CellComplex& other) const {
  if (other.factor_count() != factor_count()) throw Error("cell complexes have different factor counts");
  std::vector<std::uint32_t> out;
  for (Vertex v : part(c, 0).vertices()) {
    auto it = other.incidence_[0].find(v);
    if (it != other.incidence_[0].end()) out.insert(out.end(), it->second.begin(), it->second.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (factor_count() > 1) {
    std::erase_if(out, [&](std::uint32_t x) {
      for (std::size_t f = 1; f < factor_count(); ++f)
        if (!part(c, f).intersects(other.part(x, f))) return true;
      return false;
    });
  }
  return out;
}

void CellComplex::append_key(std::uint32_t c, std::vector<Vertex>& key) const {
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    auto v = part(c, f).vertices();
    key.insert(key.end(), v.begin(), v.end());
  }
}

namespace {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

Adjacency meeting_table(const CellComplex& a, const CellComplex& b) {
  Adjacency adj(a.size());
  for (std::uint32_t c = 0; c < a.size(); ++c) adj[c] = a.meeting(c, b);
  return adj;
}

}  // namespace

void for_each_interaction_tuple(const std::vector<CellComplexPtr>& sources,
                                const std::function<void(std::span<const std::uint32_t>)>& visit,
                                IntersectionRule rule) {
  const std::size_t k = sources.size();
  if (k == 0) throw Error("interaction order must be at least 1");
  // adjacency[i][j] for i < j, shared between identical source pairs
  std::map<std::pair<const CellComplex*, const CellComplex*>, std::shared_ptr<Adjacency>> cache;
  std::vector<std::vector<std::shared_ptr<Adjacency>>> adjacency(k, std::vector<std::shared_ptr<Adjacency>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      auto key = std::make_pair(sources[i].get(), sources[j].get());
      auto& slot = cache[key];
      if (!slot) slot = std::make_shared<Adjacency>(meeting_table(*sources[i], *sources[j]));
      adjacency[i][j] = slot;
    }

  const bool common = rule == IntersectionRule::common && k > 2;
  const std::size_t factors = sources[0]->factor_count();
  if (common)
    for (const auto& s : sources)
      if (s->factor_count() != factors) throw Error("sources have different factor counts");
  // common[j][f]: vertices shared by the parts of factor f among the first j cells
  std::vector<std::vector<std::vector<Vertex>>> shared(k + 1, std::vector<std::vector<Vertex>>(factors));
  auto admit = [&](std::size_t j, std::uint32_t c) {
    for (std::size_t f = 0; f < factors; ++f) {
      auto verts = sources[j]->part(c, f).vertices();
      auto& out = shared[j + 1][f];
      out.clear();
      if (j == 0) out.assign(verts.begin(), verts.end());
      else std::set_intersection(shared[j][f].begin(), shared[j][f].end(), verts.begin(), verts.end(), std::back_inserter(out));
      if (out.empty()) return false;
    }
    return true;
  };

  std::vector<std::uint32_t> tuple(k);
  std::vector<std::vector<std::uint32_t>> candidates(k);
  std::vector<std::uint32_t> scratch;
  std::function<void(std::size_t)> extend = [&](std::size_t j) {
    if (j == k) {
      visit(tuple);
      return;
    }
    auto& cand = candidates[j];
    if (j == 0) {
      cand.resize(sources[0]->size());
      std::iota(cand.begin(), cand.end(), 0u);
    } else {
      cand = (*adjacency[0][j])[tuple[0]];
      for (std::size_t i = 1; i < j && !cand.empty(); ++i) {
        const auto& other = (*adjacency[i][j])[tuple[i]];
        scratch.clear();
        std::set_intersection(cand.begin(), cand.end(), other.begin(), other.end(), std::back_inserter(scratch));
        cand.swap(scratch);
      }
    }
    for (std::uint32_t c : cand) {
      if (common && !admit(j, c)) continue;
      tuple[j] = c;
      extend(j + 1);
    }
  };
  extend(0);
}

InteractionBasis::InteractionBasis(std::vector<CellComplexPtr> sources, IntersectionRule rule)
    : sources_(std::move(sources)), rule_(rule) {
  const std::size_t k = sources_.size();
  if (k == 0) throw Error("interaction order must be at least 1");
  bits_ = std::min(32u, static_cast<unsigned>(64 / k));
  for (const auto& s : sources_)
    if (bits_ < 32 && s->size() >= (std::size_t{1} << bits_))
      throw Error("too many cells for the tuple index at this interaction order");

  for_each_interaction_tuple(sources_, [&](std::span<const std::uint32_t> t) {
    std::size_t p = static_cast<std::size_t>(total_dim(t));
    if (grades_.size() <= p) grades_.resize(p + 1);
    grades_[p].insert(grades_[p].end(), t.begin(), t.end());
  }, rule_);

  std::vector<Vertex> key;
  for (auto& grade : grades_) {
    const std::size_t n = grade.size() / k;
    std::vector<std::vector<Vertex>> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
      key.clear();
      for (std::size_t j = 0; j < k; ++j) sources_[j]->append_key(grade[i * k + j], key);
      keys[i] = key;
    }
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
    std::vector<std::uint32_t> sorted;
    sorted.reserve(grade.size());
    for (std::uint32_t i : order) sorted.insert(sorted.end(), grade.begin() + i * k, grade.begin() + (i + 1) * k);
    grade.swap(sorted);
    for (std::size_t i = 0; i < n; ++i) index_.emplace(pack(tuple(&grade - grades_.data(), i)), static_cast<std::uint32_t>(i));
  }
}

std::uint64_t InteractionBasis::pack(std::span<const std::uint32_t> parts) const {
  std::uint64_t key = 0;
  for (std::uint32_t c : parts) key = (key << bits_) | c;
  return key;
}

std::vector<std::size_t> InteractionBasis::grade_sizes() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < grades_.size(); ++p) out.push_back(grade_size(p));
  return out;
}

std::size_t InteractionBasis::size() const {
  std::size_t n = 0;
  for (const auto& g : grades_) n += g.size() / order();
  return n;
}

std::optional<std::uint32_t> InteractionBasis::position(std::span<const std::uint32_t> parts) const {
  auto it = index_.find(pack(parts));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int InteractionBasis::total_dim(std::span<const std::uint32_t> parts) const {
  int d = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) d += sources_[j]->dim(parts[j]);
  return d;
}

std::vector<CellComplexPtr> repeat_source(const Complex& c, int k) {
  if (k < 1) throw Error("interaction order must be at least 1");
  auto shared = std::make_shared<const CellComplex>(c);
  return std::vector<CellComplexPtr>(static_cast<std::size_t>(k), shared);
}

std::vector<CellComplexPtr> make_sources(const std::vector<Complex>& complexes) {
  if (complexes.empty()) throw Error("interaction order must be at least 1");
  std::vector<CellComplexPtr> sources;
  for (std::size_t j = 0; j < complexes.size(); ++j) {
    // identical inputs share one cell complex, so adjacency is computed once
    CellComplexPtr found;
    for (std::size_t i = 0; i < j && !found; ++i)
      if (complexes[i] == complexes[j]) found = sources[i];
    sources.push_back(found ? found : std::make_shared<const CellComplex>(complexes[j]));
  }
  return sources;
}

InteractionBasis build_basis(const std::vector<Complex>& complexes) { return InteractionBasis(make_sources(complexes)); }

InteractionBasis build_basis(const Complex& c, int k) { return InteractionBasis(repeat_source(c, k)); }

long long FTensor::at(const std::vector<int>& index) const {
  std::size_t pos = 0;
  for (std::size_t a = 0; a < extents.size(); ++a) {
    if (index[a] < 0 || static_cast<std::size_t>(index[a]) >= extents[a]) return 0;
    pos = pos * extents[a] + static_cast<std::size_t>(index[a]);
  }
  return data[pos];
}

long long FTensor::signed_contraction() const {
  long long sum = 0;
  for (std::size_t pos = 0; pos < data.size(); ++pos) {
    std::size_t rest = pos, total = 0;
    for (std::size_t a = extents.size(); a-- > 0;) {
      total += rest % extents[a];
      rest /= extents[a];
    }
    sum += parity_sign(static_cast<long long>(total)) * data[pos];
  }
  return sum;
}

FTensor f_tensor(const std::vector<CellComplexPtr>& sources, IntersectionRule rule) {
  FTensor t;
  std::size_t total = 1;
  for (const auto& s : sources) {
    t.extents.push_back(static_cast<std::size_t>(std::max(0, s->max_dim() + 1)));
    total *= t.extents.back();
  }
  t.data.assign(total, 0);
  for_each_interaction_tuple(sources, [&](std::span<const std::uint32_t> tuple) {
    std::size_t pos = 0;
    for (std::size_t j = 0; j < tuple.size(); ++j) pos = pos * t.extents[j] + static_cast<std::size_t>(sources[j]->dim(tuple[j]));
    ++t.data[pos];
  }, rule);
  return t;
}

FTensor f_tensor(const Complex& c, int k) { return f_tensor(repeat_source(c, k)); }

std::vector<std::vector<long long>> f_matrix(const Complex& c) {
  FTensor t = f_tensor(c, 2);
  const std::size_t n = t.extents[0];
  std::vector<std::vector<long long>> v(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i][j] = t.data[i * n + j];
  return v;
}

long long wu_characteristic(const std::vector<CellComplexPtr>& sources, IntersectionRule rule) {
  long long sum = 0;
  for_each_interaction_tuple(sources, [&](std::span<const std::uint32_t> tuple) {
    int d = 0;
    for (std::size_t j = 0; j < tuple.size(); ++j) d += sources[j]->dim(tuple[j]);
    sum += parity_sign(d);
  }, rule);
  return sum;
}

long long wu_characteristic(const std::vector<Complex>& complexes) {
  return wu_characteristic(make_sources(complexes));
}

long long wu_characteristic(const Complex& c, int k, IntersectionRule rule) {
  return wu_characteristic(repeat_source(c, k), rule);
}

Polynomial euler_polynomial(const Complex& c) { return Polynomial(f_vector(c)); }

Polynomial euler_polynomial(const CellComplex& c) { return Polynomial(c.f_vector()); }

MultiPolynomial multivariate_euler_polynomial(const std::vector<CellComplexPtr>& sources, IntersectionRule rule) {
  FTensor t = f_tensor(sources, rule);
  MultiPolynomial poly(sources.size());
  std::vector<int> e(sources.size());
  for (std::size_t pos = 0; pos < t.data.size(); ++pos) {
    std::size_t rest = pos;
    for (std::size_t a = t.extents.size(); a-- > 0;) {
      e[a] = static_cast<int>(rest % t.extents[a]);
      rest /= t.extents[a];
    }
    poly.add_term(e, t.data[pos]);
  }
  return poly;
}

MultiPolynomial multivariate_euler_polynomial(const Complex& c, int k) {
  return multivariate_euler_polynomial(repeat_source(c, k));
}

std::string to_string(IntersectionRule rule) { return rule == IntersectionRule::common ? "common" : "pairwise"; }

IntersectionRule parse_intersection_rule(const std::string& text) {
  if (text == "pairwise") return IntersectionRule::pairwise;
  if (text == "common") return IntersectionRule::common;
  throw Error("unknown intersection rule: " + text);
}

}  // namespace wucalc
