#pragma once

#include <vector>

#include "wucalc/differential.hpp"
#include "wucalc/exact_linalg.hpp"

namespace wucalc {

struct BettiVector {
  std::vector<long long> values;

  long long alternating_sum() const;
  friend bool operator==(const BettiVector& a, const BettiVector& b) = default;
};

// Exact ranks of every d_p. Columns of d_p that are pivots of the reduced d_{p-1}
// lie in the span of earlier columns and are skipped.
std::vector<std::size_t> graded_ranks(const GradedIntMatrix& d);

BettiVector betti_vector(const GradedIntMatrix& d);

struct HarmonicBasis {
  std::vector<std::vector<SparseBigVector>> grades;  // primitive integer vectors spanning ker L_p

  std::vector<long long> dimensions() const;
};

HarmonicBasis harmonic_basis(const DiracLaplacian& dl);

// n_p - rank(L_p), exact.
std::vector<long long> laplacian_nullities(const DiracLaplacian& dl);

struct CohomologyReport {
  std::size_t k = 0;
  std::vector<std::size_t> grade_sizes;
  BettiVector betti;
  long long wu = 0;
  long long alternating_sum = 0;
  bool euler_poincare_ok = false;
};

CohomologyReport euler_poincare_check(const std::vector<CellComplexPtr>& sources,
                                      IntersectionRule rule = IntersectionRule::pairwise);
CohomologyReport euler_poincare_check(const std::vector<Complex>& complexes);
CohomologyReport euler_poincare_check(const Complex& c, int k, IntersectionRule rule = IntersectionRule::pairwise);

Polynomial poincare_polynomial(const BettiVector& b);
Polynomial poincare_polynomial(const std::vector<CellComplexPtr>& sources, IntersectionRule rule = IntersectionRule::pairwise);
Polynomial poincare_polynomial(const Complex& c, int k);

// Convenience: basis, derivative and Betti vector in one pass.
BettiVector betti_vector(const std::vector<CellComplexPtr>& sources, IntersectionRule rule = IntersectionRule::pairwise);
BettiVector betti_vector(const Complex& c, int k, IntersectionRule rule = IntersectionRule::pairwise);

}  // namespace wucalc
