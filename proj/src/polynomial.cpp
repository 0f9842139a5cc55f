#include "wucalc/polynomial.hpp"

#include <algorithm>

#include "wucalc/common.hpp"

namespace wucalc {

Polynomial::Polynomial(std::vector<long long> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long long Polynomial::evaluate(long long x) const {
  long long value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
  return value;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    long long c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    long long a = c < 0 ? -c : c;
    if (i == 0 || a != 1) out += std::to_string(a);
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<long long> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<long long> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(long long s, const Polynomial& a) {
  std::vector<long long> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

void MultiPolynomial::add_term(const std::vector<int>& exponents, long long coefficient) {
  if (exponents.size() != vars_) throw Error("exponent vector has wrong length");
  if (coefficient == 0) return;
  long long& slot = terms_[exponents];
  slot += coefficient;
  if (slot == 0) terms_.erase(exponents);
}

long long MultiPolynomial::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? 0 : it->second;
}

long long MultiPolynomial::evaluate(const std::vector<long long>& point) const {
  if (point.size() != vars_) throw Error("evaluation point has wrong length");
  long long sum = 0;
  for (const auto& [e, c] : terms_) {
    long long term = c;
    for (std::size_t i = 0; i < vars_; ++i)
      for (int j = 0; j < e[i]; ++j) term *= point[i];
    sum += term;
  }
  return sum;
}

std::string MultiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    long long a = c < 0 ? -c : c;
    std::string mono;
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      mono += "t" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty() || a != 1) out += std::to_string(a);
    out += mono;
  }
  return out;
}

MultiPolynomial operator+(const MultiPolynomial& a, const MultiPolynomial& b) {
  if (a.vars_ != b.vars_) throw Error("variable count mismatch");
  MultiPolynomial c = a;
  for (const auto& [e, v] : b.terms_) c.add_term(e, v);
  return c;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
  if (a.vars_ != b.vars_) throw Error("variable count mismatch");
  MultiPolynomial c(a.vars_);
  for (const auto& [ea, va] : a.terms_)
    for (const auto& [eb, vb] : b.terms_) {
      std::vector<int> e(a.vars_);
      for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
      c.add_term(e, va * vb);
    }
  return c;
}

MultiPolynomial operator*(long long s, const MultiPolynomial& a) {
  MultiPolynomial c(a.vars_);
  for (const auto& [e, v] : a.terms_) c.add_term(e, s * v);
  return c;
}

}  // namespace wucalc
