#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wucalc/common.hpp"

namespace wucalc {

struct Triplet {
  std::uint32_t row;
  std::uint32_t col;
  long long value;
};

// Exact integer matrix in compressed column form.
class SparseIntMatrix {
 public:
  SparseIntMatrix() : col_ptr_(1, 0) {}
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), col_ptr_(cols + 1, 0) {}

  // Duplicate positions are summed; zeros are dropped.
  static SparseIntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static SparseIntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return row_idx_.size(); }

  std::span<const std::uint32_t> col_rows(std::size_t c) const {
    return {row_idx_.data() + col_ptr_[c], col_ptr_[c + 1] - col_ptr_[c]};
  }
  std::span<const long long> col_values(std::size_t c) const {
    return {values_.data() + col_ptr_[c], col_ptr_[c + 1] - col_ptr_[c]};
  }
  long long at(std::size_t r, std::size_t c) const;

  std::vector<Triplet> triplets() const;
  SparseIntMatrix transpose() const;
  std::vector<std::vector<long long>> to_dense() const;
  bool is_zero() const { return row_idx_.empty(); }
  bool is_symmetric() const;
  long long trace() const;

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::size_t> col_ptr_;
  std::vector<std::uint32_t> row_idx_;
  std::vector<long long> values_;
};

// Dense matrix of arbitrary-precision integers, row major.
class BigIntMatrix {
 public:
  BigIntMatrix(std::size_t rows = 0, std::size_t cols = 0) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static BigIntMatrix from_sparse(const SparseIntMatrix& m);
  static BigIntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> data_;
};

// Raised when a checked 64-bit operation would overflow.
struct IntegerOverflow : Error {
  IntegerOverflow() : Error("64-bit integer overflow") {}
};

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace wucalc
