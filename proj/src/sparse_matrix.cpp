#include "wucalc/sparse_matrix.hpp"

#include <algorithm>

namespace wucalc {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw IntegerOverflow();
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow();
  return r;
}

SparseIntMatrix SparseIntMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  for (const Triplet& t : triplets)
    if (t.row >= rows || t.col >= cols) throw Error("matrix entry out of range");
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  SparseIntMatrix m(rows, cols);
  std::vector<std::size_t> counts(cols, 0);
  for (std::size_t i = 0; i < triplets.size();) {
    std::size_t j = i;
    long long sum = 0;
    while (j < triplets.size() && triplets[j].col == triplets[i].col && triplets[j].row == triplets[i].row)
      sum = checked_add(sum, triplets[j++].value);
    if (sum != 0) {
      m.row_idx_.push_back(triplets[i].row);
      m.values_.push_back(sum);
      ++counts[triplets[i].col];
    }
    i = j;
  }
  for (std::size_t c = 0; c < cols; ++c) m.col_ptr_[c + 1] = m.col_ptr_[c] + counts[c];
  return m;
}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), 1});
  return from_triplets(n, n, std::move(t));
}

long long SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  auto rs = col_rows(c);
  auto it = std::lower_bound(rs.begin(), rs.end(), static_cast<std::uint32_t>(r));
  if (it == rs.end() || *it != r) return 0;
  return col_values(c)[static_cast<std::size_t>(it - rs.begin())];
}

std::vector<Triplet> SparseIntMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t i = col_ptr_[c]; i < col_ptr_[c + 1]; ++i)
      out.push_back({row_idx_[i], static_cast<std::uint32_t>(c), values_[i]});
  return out;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  std::vector<Triplet> t = triplets();
  for (Triplet& x : t) std::swap(x.row, x.col);
  return from_triplets(cols_, rows_, std::move(t));
}

std::vector<std::vector<long long>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<long long>> d(rows_, std::vector<long long>(cols_, 0));
  for (const Triplet& t : triplets()) d[t.row][t.col] = t.value;
  return d;
}

bool SparseIntMatrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

long long SparseIntMatrix::trace() const {
  long long s = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s = checked_add(s, at(i, i));
  return s;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
  SparseIntMatrix m(a.rows_, b.cols_);
  std::vector<long long> acc(a.rows_, 0);
  std::vector<char> used(a.rows_, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t c = 0; c < b.cols_; ++c) {
    touched.clear();
    auto brows = b.col_rows(c);
    auto bvals = b.col_values(c);
    for (std::size_t i = 0; i < brows.size(); ++i) {
      auto arows = a.col_rows(brows[i]);
      auto avals = a.col_values(brows[i]);
      for (std::size_t j = 0; j < arows.size(); ++j) {
        std::uint32_t r = arows[j];
        if (!used[r]) {
          used[r] = 1;
          touched.push_back(r);
        }
        acc[r] = checked_add(acc[r], checked_mul(avals[j], bvals[i]));
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t r : touched) {
      if (acc[r] != 0) {
        m.row_idx_.push_back(r);
        m.values_.push_back(acc[r]);
      }
      acc[r] = 0;
      used[r] = 0;
    }
    m.col_ptr_[c + 1] = m.row_idx_.size();
  }
  return m;
}

SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum dimension mismatch");
  std::vector<Triplet> t = a.triplets();
  std::vector<Triplet> u = b.triplets();
  t.insert(t.end(), u.begin(), u.end());
  return SparseIntMatrix::from_triplets(a.rows_, a.cols_, std::move(t));
}

BigIntMatrix BigIntMatrix::from_sparse(const SparseIntMatrix& m) {
  BigIntMatrix out(m.rows(), m.cols());
  for (const Triplet& t : m.triplets()) out(t.row, t.col) = static_cast<long>(t.value);
  return out;
}

BigIntMatrix BigIntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  BigIntMatrix out(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != out.cols()) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = static_cast<long>(rows[r][c]);
  }
  return out;
}

}  // namespace wucalc
