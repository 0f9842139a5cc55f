#include "wucalc/cohomology.hpp"

namespace wucalc {

long long BettiVector::alternating_sum() const {
  long long s = 0;
  for (std::size_t p = 0; p < values.size(); ++p) s += parity_sign(static_cast<long long>(p)) * values[p];
  return s;
}

std::vector<std::size_t> graded_ranks(const GradedIntMatrix& d) {
  std::vector<std::size_t> ranks;
  std::vector<std::uint32_t> cleared;
  for (const SparseIntMatrix& block : d.blocks) {
    std::vector<char> skip(block.cols(), 0);
    for (std::uint32_t c : cleared) skip[c] = 1;
    ColumnReduction r = reduce_columns(block, skip);
    ranks.push_back(r.rank);
    cleared = std::move(r.pivot_rows);
  }
  return ranks;
}

BettiVector betti_vector(const GradedIntMatrix& d) {
  std::vector<std::size_t> ranks = graded_ranks(d);
  BettiVector b;
  for (std::size_t p = 0; p < d.grade_sizes.size(); ++p) {
    long long value = static_cast<long long>(d.grade_sizes[p]);
    if (p < ranks.size()) value -= static_cast<long long>(ranks[p]);
    if (p >= 1) value -= static_cast<long long>(ranks[p - 1]);
    if (value < 0) throw Error("negative Betti number; the derivative is inconsistent");
    b.values.push_back(value);
  }
  return b;
}

std::vector<long long> HarmonicBasis::dimensions() const {
  std::vector<long long> out;
  for (const auto& g : grades) out.push_back(static_cast<long long>(g.size()));
  return out;
}

HarmonicBasis harmonic_basis(const DiracLaplacian& dl) {
  HarmonicBasis h;
  h.grades.resize(dl.laplacian_blocks.size());
  parallel_for(dl.laplacian_blocks.size(), [&](std::size_t p) { h.grades[p] = kernel_basis(dl.laplacian_blocks[p]); });
  return h;
}

std::vector<long long> laplacian_nullities(const DiracLaplacian& dl) {
  std::vector<long long> out(dl.laplacian_blocks.size());
  parallel_for(dl.laplacian_blocks.size(), [&](std::size_t p) {
    const SparseIntMatrix& l = dl.laplacian_blocks[p];
    out[p] = static_cast<long long>(l.cols()) - static_cast<long long>(reduce_columns(l).rank);
  });
  return out;
}

BettiVector betti_vector(const std::vector<CellComplexPtr>& sources, IntersectionRule rule) {
  return betti_vector(interaction_derivative(InteractionBasis(sources, rule)));
}

BettiVector betti_vector(const Complex& c, int k, IntersectionRule rule) {
  return betti_vector(repeat_source(c, k), rule);
}

CohomologyReport euler_poincare_check(const std::vector<CellComplexPtr>& sources, IntersectionRule rule) {
  InteractionBasis basis(sources, rule);
  CohomologyReport r;
  r.k = sources.size();
  r.grade_sizes = basis.grade_sizes();
  r.betti = betti_vector(interaction_derivative(basis));
  r.wu = wu_characteristic(sources, rule);
  r.alternating_sum = r.betti.alternating_sum();
  r.euler_poincare_ok = r.alternating_sum == r.wu;
  return r;
}

CohomologyReport euler_poincare_check(const std::vector<Complex>& complexes) {
  return euler_poincare_check(make_sources(complexes));
}

CohomologyReport euler_poincare_check(const Complex& c, int k, IntersectionRule rule) {
  return euler_poincare_check(repeat_source(c, k), rule);
}

Polynomial poincare_polynomial(const BettiVector& b) { return Polynomial(b.values); }

Polynomial poincare_polynomial(const std::vector<CellComplexPtr>& sources, IntersectionRule rule) {
  return poincare_polynomial(betti_vector(sources, rule));
}

Polynomial poincare_polynomial(const Complex& c, int k) { return poincare_polynomial(betti_vector(c, k)); }

}  // namespace wucalc
