#pragma once

#include <vector>

#include "wucalc/cohomology.hpp"

namespace wucalc {

CellComplex product_cell_complex(const std::vector<Complex>& factors);

// Formal sum of products of complexes; disjoint union is addition.
class RingElement {
 public:
  struct Term {
    long long coefficient;
    std::vector<Complex> factors;
  };

  RingElement() = default;  // zero
  explicit RingElement(const Complex& c) { terms_.push_back({1, {c}}); }
  static RingElement one();  // the single point

  const std::vector<Term>& terms() const { return terms_; }
  void add_term(long long coefficient, std::vector<Complex> factors);

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(long long c, const RingElement& a);

 private:
  std::vector<Term> terms_;
};

// Linear over terms; each product term is enumerated on its own cell complex.
long long ring_wu(const RingElement& e, int k, IntersectionRule rule = IntersectionRule::pairwise);
BettiVector ring_betti(const RingElement& e, int k, IntersectionRule rule = IntersectionRule::pairwise);
std::vector<long long> ring_f_vector(const RingElement& e);
Polynomial ring_euler_polynomial(const RingElement& e);
MultiPolynomial ring_multivariate_euler_polynomial(const RingElement& e, int k);

struct KuennethReport {
  Polynomial product_side;   // computed on the product cells
  Polynomial factor_side;    // product of factor polynomials
  bool ok = false;
};

KuennethReport kuenneth_check(const Complex& g, const Complex& h, int k);

}  // namespace wucalc
