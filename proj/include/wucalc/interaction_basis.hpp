#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <span>
#include <unordered_map>
#include <vector>

#include "wucalc/complex.hpp"
#include "wucalc/polynomial.hpp"

namespace wucalc {

struct SignedCell {
  std::uint32_t cell;
  int sign;
};

// Graded cell complex whose cells are tuples of simplices, one per factor.
// A simplicial complex is the one-factor case; products use the Leibniz boundary.
class CellComplex {
 public:
  CellComplex() = default;
  explicit CellComplex(const Complex& c);
  static CellComplex product(const std::vector<Complex>& factors);

  std::size_t size() const { return dims_.size(); }
  std::size_t factor_count() const { return factors_.size(); }
  const std::vector<Complex>& factors() const { return factors_; }
  int dim(std::uint32_t c) const { return dims_[c]; }
  int weight(std::uint32_t c) const { return parity_sign(dims_[c]); }
  int max_dim() const;

  // simplex indices into each factor
  std::span<const std::uint32_t> parts(std::uint32_t c) const {
    return {parts_.data() + static_cast<std::size_t>(c) * factors_.size(), factors_.size()};
  }
  const Simplex& part(std::uint32_t c, std::size_t f) const {
    return factors_[f].simplices()[parts(c)[f]];
  }
  std::span<const SignedCell> boundary(std::uint32_t c) const {
    return {boundary_.data() + boundary_offsets_[c], boundary_offsets_[c + 1] - boundary_offsets_[c]};
  }
  std::optional<std::uint32_t> find(std::span<const std::uint32_t> parts) const;

  std::vector<long long> f_vector() const;

  // Cells of `other` meeting cell c in every factor, ascending.
  std::vector<std::uint32_t> meeting(std::uint32_t c, const CellComplex& other) const;

  // Concatenated vertex tuples of all parts; used for deterministic ordering.
  void append_key(std::uint32_t c, std::vector<Vertex>& key) const;

 private:
  void finish();

  std::vector<Complex> factors_;
  std::vector<std::uint32_t> parts_;
  std::vector<int> dims_;
  std::vector<std::size_t> boundary_offsets_;
  std::vector<SignedCell> boundary_;
  std::vector<std::uint32_t> cell_of_code_;  // mixed-radix part code -> cell
  // per factor: vertex -> cells whose part in that factor contains it
  std::vector<std::unordered_map<Vertex, std::vector<std::uint32_t>>> incidence_;
};

using CellComplexPtr = std::shared_ptr<const CellComplex>;

// Which k-tuples interact: every two parts meet, or all parts share a vertex
// (in every factor). The rules agree for k <= 2.
enum class IntersectionRule { pairwise, common };

// Visits every ordered tuple of interacting cells, one cell per source.
void for_each_interaction_tuple(const std::vector<CellComplexPtr>& sources,
                                const std::function<void(std::span<const std::uint32_t>)>& visit,
                                IntersectionRule rule = IntersectionRule::pairwise);

// Graded basis of pairwise meeting tuples. Within a grade, tuples are ordered
// lexicographically by their concatenated vertex lists.
class InteractionBasis {
 public:
  InteractionBasis() = default;
  explicit InteractionBasis(std::vector<CellComplexPtr> sources, IntersectionRule rule = IntersectionRule::pairwise);

  std::size_t order() const { return sources_.size(); }
  const CellComplex& source(std::size_t j) const { return *sources_[j]; }
  const std::vector<CellComplexPtr>& sources() const { return sources_; }
  IntersectionRule rule() const { return rule_; }

  std::size_t grade_count() const { return grades_.size(); }
  std::size_t grade_size(std::size_t p) const { return p < grades_.size() ? grades_[p].size() / order() : 0; }
  std::vector<std::size_t> grade_sizes() const;
  std::size_t size() const;

  std::span<const std::uint32_t> tuple(std::size_t p, std::size_t i) const {
    return {grades_[p].data() + i * order(), order()};
  }
  // Position of the tuple within its grade, if it is in the basis.
  std::optional<std::uint32_t> position(std::span<const std::uint32_t> parts) const;
  int total_dim(std::span<const std::uint32_t> parts) const;

 private:
  std::uint64_t pack(std::span<const std::uint32_t> parts) const;

  std::vector<CellComplexPtr> sources_;
  IntersectionRule rule_ = IntersectionRule::pairwise;
  std::vector<std::vector<std::uint32_t>> grades_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  unsigned bits_ = 0;
};

InteractionBasis build_basis(const std::vector<Complex>& complexes);
InteractionBasis build_basis(const Complex& c, int k);

// Dense tensor of tuple counts indexed by the dimension profile.
struct FTensor {
  std::vector<std::size_t> extents;
  std::vector<long long> data;

  long long at(const std::vector<int>& index) const;
  long long signed_contraction() const;  // sum of (-1)^(sum of indices) * entry
};

std::vector<std::vector<long long>> f_matrix(const Complex& c);
FTensor f_tensor(const Complex& c, int k);
FTensor f_tensor(const std::vector<CellComplexPtr>& sources, IntersectionRule rule = IntersectionRule::pairwise);

long long wu_characteristic(const std::vector<Complex>& complexes);
long long wu_characteristic(const Complex& c, int k, IntersectionRule rule = IntersectionRule::pairwise);
long long wu_characteristic(const std::vector<CellComplexPtr>& sources, IntersectionRule rule = IntersectionRule::pairwise);

Polynomial euler_polynomial(const Complex& c);
Polynomial euler_polynomial(const CellComplex& c);
MultiPolynomial multivariate_euler_polynomial(const Complex& c, int k);
MultiPolynomial multivariate_euler_polynomial(const std::vector<CellComplexPtr>& sources,
                                             IntersectionRule rule = IntersectionRule::pairwise);

std::vector<CellComplexPtr> repeat_source(const Complex& c, int k);
std::vector<CellComplexPtr> make_sources(const std::vector<Complex>& complexes);

std::string to_string(IntersectionRule rule);
IntersectionRule parse_intersection_rule(const std::string& text);

}  // namespace wucalc
