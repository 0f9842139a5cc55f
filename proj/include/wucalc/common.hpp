#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace wucalc {

using Vertex = std::uint32_t;
using BigInt = mpz_class;
using Rational = mpq_class;

// Raised for invalid input and for violated internal identities.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

inline int parity_sign(long long n) { return (n % 2 == 0) ? 1 : -1; }

// Caps internal parallelism; reads WUCALC_THREADS, defaults to hardware concurrency.
unsigned thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads; rethrows the first error.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace wucalc
