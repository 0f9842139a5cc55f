#include "wucalc/strong_ring.hpp"

#include <algorithm>

namespace wucalc {

CellComplex product_cell_complex(const std::vector<Complex>& factors) { return CellComplex::product(factors); }

RingElement RingElement::one() { return RingElement(generate_complex({{0}})); }

void RingElement::add_term(long long coefficient, std::vector<Complex> factors) {
  if (factors.empty()) throw Error("a ring term needs at least one factor");
  if (coefficient != 0) terms_.push_back({coefficient, std::move(factors)});
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  RingElement c = a;
  for (const auto& t : b.terms_) c.terms_.push_back(t);
  return c;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  RingElement c;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      std::vector<Complex> f = s.factors;
      f.insert(f.end(), t.factors.begin(), t.factors.end());
      c.add_term(s.coefficient * t.coefficient, std::move(f));
    }
  return c;
}

RingElement operator*(long long s, const RingElement& a) {
  RingElement c;
  for (const auto& t : a.terms_) c.add_term(s * t.coefficient, t.factors);
  return c;
}

namespace {

std::vector<CellComplexPtr> product_sources(const RingElement::Term& t, int k) {
  if (k < 1) throw Error("interaction order must be at least 1");
  auto cells = std::make_shared<const CellComplex>(CellComplex::product(t.factors));
  return std::vector<CellComplexPtr>(static_cast<std::size_t>(k), cells);
}

}  // namespace

long long ring_wu(const RingElement& e, int k, IntersectionRule rule) {
  long long sum = 0;
  for (const auto& t : e.terms()) sum += t.coefficient * wu_characteristic(product_sources(t, k), rule);
  return sum;
}

BettiVector ring_betti(const RingElement& e, int k, IntersectionRule rule) {
  BettiVector total;
  for (const auto& t : e.terms()) {
    if (t.coefficient < 0) throw Error("cohomology is undefined for negative ring coefficients");
    BettiVector b = betti_vector(product_sources(t, k), rule);
    if (b.values.size() > total.values.size()) total.values.resize(b.values.size(), 0);
    for (std::size_t p = 0; p < b.values.size(); ++p) total.values[p] += t.coefficient * b.values[p];
  }
  return total;
}

std::vector<long long> ring_f_vector(const RingElement& e) {
  std::vector<long long> f;
  for (const auto& t : e.terms()) {
    std::vector<long long> g = CellComplex::product(t.factors).f_vector();
    if (g.size() > f.size()) f.resize(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) f[i] += t.coefficient * g[i];
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Polynomial ring_euler_polynomial(const RingElement& e) { return Polynomial(ring_f_vector(e)); }

MultiPolynomial ring_multivariate_euler_polynomial(const RingElement& e, int k) {
  MultiPolynomial sum(static_cast<std::size_t>(k));
  for (const auto& t : e.terms()) sum = sum + t.coefficient * multivariate_euler_polynomial(product_sources(t, k));
  return sum;
}

KuennethReport kuenneth_check(const Complex& g, const Complex& h, int k) {
  KuennethReport r;
  RingElement prod;
  prod.add_term(1, {g, h});
  r.product_side = poincare_polynomial(ring_betti(prod, k));
  r.factor_side = poincare_polynomial(g, k) * poincare_polynomial(h, k);
  r.ok = r.product_side == r.factor_side;
  return r;
}

}  // namespace wucalc
