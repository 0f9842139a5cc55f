#pragma once

#include <map>
#include <string>
#include <vector>

namespace wucalc {

// Integer polynomial in one variable, coefficients by ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<long long> coefficients);

  const std::vector<long long>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  long long coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  long long evaluate(long long x) const;
  std::string to_string(const std::string& var = "t") const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(long long c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<long long> coeffs_;
};

// Integer polynomial in a fixed number of variables; keys are exponent vectors.
class MultiPolynomial {
 public:
  explicit MultiPolynomial(std::size_t variables = 1) : vars_(variables) {}

  std::size_t variables() const { return vars_; }
  const std::map<std::vector<int>, long long>& terms() const { return terms_; }
  void add_term(const std::vector<int>& exponents, long long coefficient);
  long long coefficient(const std::vector<int>& exponents) const;
  long long evaluate(const std::vector<long long>& point) const;
  std::string to_string() const;

  friend MultiPolynomial operator+(const MultiPolynomial& a, const MultiPolynomial& b);
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
  friend MultiPolynomial operator*(long long c, const MultiPolynomial& a);
  friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) = default;

 private:
  std::size_t vars_;
  std::map<std::vector<int>, long long> terms_;  // no zero coefficients stored
};

}  // namespace wucalc
