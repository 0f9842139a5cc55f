#include "wucalc/exact_linalg.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace wucalc {

namespace {

struct Checked64 {
  using T = long long;
  static T mul(T a, T b) { return checked_mul(a, b); }
  static T add(T a, T b) { return checked_add(a, b); }
  static bool divides(T b, T a) {
    if (b == -1 && a == LLONG_MIN) throw IntegerOverflow();
    return a % b == 0;
  }
  static T div(T a, T b) { return a / b; }
  static T gcd(T a, T b) {
    if (a == LLONG_MIN || b == LLONG_MIN) throw IntegerOverflow();
    return std::gcd(a, b);
  }
  static T neg(T a) {
    if (a == LLONG_MIN) throw IntegerOverflow();
    return -a;
  }
  static bool is_unit(T a) { return a == 1 || a == -1; }
  static BigInt big(T a) { return BigInt(static_cast<long>(a)); }
  static T from(long long a) { return a; }
};

struct Exact {
  using T = BigInt;
  static T mul(const T& a, const T& b) { return a * b; }
  static T add(const T& a, const T& b) { return a + b; }
  static bool divides(const T& b, const T& a) { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0; }
  static T div(const T& a, const T& b) {
    T q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static T gcd(const T& a, const T& b) {
    T g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static T neg(const T& a) { return -a; }
  static bool is_unit(const T& a) { return a == 1 || a == -1; }
  static const BigInt& big(const T& a) { return a; }
  static T from(long long a) { return BigInt(static_cast<long>(a)); }
};

template <class A>
struct Entry {
  std::uint32_t idx;
  typename A::T val;
};

template <class A>
using Column = std::vector<Entry<A>>;

// alpha * x + beta * y
template <class A>
void combine(const typename A::T& alpha, const Column<A>& x, const typename A::T& beta, const Column<A>& y,
             Column<A>& out) {
  out.clear();
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].idx < y[j].idx)) {
      out.push_back({x[i].idx, A::mul(alpha, x[i].val)});
      ++i;
    } else if (i == x.size() || y[j].idx < x[i].idx) {
      out.push_back({y[j].idx, A::mul(beta, y[j].val)});
      ++j;
    } else {
      auto v = A::add(A::mul(alpha, x[i].val), A::mul(beta, y[j].val));
      if (v != 0) out.push_back({x[i].idx, v});
      ++i;
      ++j;
    }
  }
}

template <class A>
void divide_content(Column<A>& col, Column<A>* companion) {
  typename A::T g = 0;
  for (const auto& e : col) g = A::gcd(g, e.val);
  if (companion)
    for (const auto& e : *companion) g = A::gcd(g, e.val);
  if (g == 0 || A::is_unit(g)) return;
  for (auto& e : col) e.val = A::div(e.val, g);
  if (companion)
    for (auto& e : *companion) e.val = A::div(e.val, g);
}

template <class A>
ColumnReduction reduce(const SparseIntMatrix& m, std::span<const char> skip, bool want_kernel) {
  using T = typename A::T;
  ColumnReduction result;
  std::vector<std::int64_t> pivot_of_row(m.rows(), -1);
  std::vector<Column<A>> reduced(m.cols());
  std::vector<Column<A>> tracked(want_kernel ? m.cols() : 0);
  Column<A> col, v, scratch;
  const T one = A::from(1);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!skip.empty() && skip[j]) continue;
    col.clear();
    auto rows = m.col_rows(j);
    auto vals = m.col_values(j);
    for (std::size_t i = 0; i < rows.size(); ++i) col.push_back({rows[i], A::from(vals[i])});
    v.clear();
    if (want_kernel) v.push_back({static_cast<std::uint32_t>(j), one});
    while (!col.empty()) {
      const std::uint32_t low = col.back().idx;
      const std::int64_t i = pivot_of_row[low];
      if (i < 0) {
        pivot_of_row[low] = static_cast<std::int64_t>(j);
        reduced[j] = col;
        if (want_kernel) tracked[j] = v;
        break;
      }
      const Column<A>& piv = reduced[static_cast<std::size_t>(i)];
      const T a = col.back().val;
      const T b = piv.back().val;
      if (A::divides(b, a)) {
        const T q = A::neg(A::div(a, b));
        combine<A>(one, col, q, piv, scratch);
        col.swap(scratch);
        if (want_kernel) {
          combine<A>(one, v, q, tracked[static_cast<std::size_t>(i)], scratch);
          v.swap(scratch);
        }
      } else {
        const T g = A::gcd(a, b);
        const T beta = A::div(b, g);
        const T alpha = A::neg(A::div(a, g));
        combine<A>(beta, col, alpha, piv, scratch);
        col.swap(scratch);
        if (want_kernel) {
          combine<A>(beta, v, alpha, tracked[static_cast<std::size_t>(i)], scratch);
          v.swap(scratch);
        }
        divide_content<A>(col, want_kernel ? &v : nullptr);
      }
    }
    if (col.empty() && want_kernel) {
      divide_content<A>(v, nullptr);
      SparseBigVector kv;
      for (const auto& e : v) kv.emplace_back(e.idx, A::big(e.val));
      result.kernel.push_back(std::move(kv));
    }
  }
  for (std::uint32_t r = 0; r < m.rows(); ++r)
    if (pivot_of_row[r] >= 0) result.pivot_rows.push_back(r);
  result.rank = result.pivot_rows.size();
  return result;
}

}  // namespace

ColumnReduction reduce_columns(const SparseIntMatrix& m, std::span<const char> skip, bool want_kernel) {
  if (!skip.empty() && skip.size() != m.cols()) throw Error("skip mask has wrong length");
  try {
    return reduce<Checked64>(m, skip, want_kernel);
  } catch (const IntegerOverflow&) {
    return reduce<Exact>(m, skip, want_kernel);
  }
}

namespace {

// Shared Bareiss sweep; returns rank and the sign of the row permutation.
std::pair<std::size_t, int> bareiss_sweep(BigIntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t k = 0;
  int sign = 1;
  BigInt prev = 1, t;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t r = k; r < rows; ++r) {
      if (a(r, c) == 0) continue;
      if (best == rows || mpz_cmpabs(a(r, c).get_mpz_t(), a(best, c).get_mpz_t()) < 0) best = r;
    }
    if (best == rows) continue;
    if (best != k) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(best, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = a(k, c) * a(r, j) - a(r, c) * a(k, j);
        mpz_divexact(a(r, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(r, c) = 0;
    }
    prev = a(k, c);
    ++k;
  }
  return {k, sign};
}

}  // namespace

std::size_t bareiss_rank(BigIntMatrix m) { return bareiss_sweep(m).first; }

BigInt bareiss_determinant(BigIntMatrix m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  auto [rank, sign] = bareiss_sweep(m);
  if (rank < m.rows()) return 0;
  return sign * m(m.rows() - 1, m.cols() - 1);
}

std::size_t integer_rank(const SparseIntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.rows() * m.cols() <= 40000) return bareiss_rank(BigIntMatrix::from_sparse(m));
  return reduce_columns(m).rank;
}

std::vector<SparseBigVector> kernel_basis(const SparseIntMatrix& m) { return reduce_columns(m, {}, true).kernel; }

std::vector<BigInt> characteristic_polynomial(const BigIntMatrix& a) {
  if (a.rows() != a.cols()) throw Error("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier; every division is exact over the integers
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  BigIntMatrix mk(n, n), am(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    // mk = A * mk_prev + c[n-k+1] I
    BigIntMatrix next(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a(i, l) * mk(l, j);
        next(i, j) = s;
      }
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a(i, l) * mk(l, i);
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), k);
    c[n - k] = -q;
  }
  return c;
}

}  // namespace wucalc
