#pragma once

#include <span>
#include <utility>
#include <vector>

#include "wucalc/sparse_matrix.hpp"

namespace wucalc {

using SparseBigVector = std::vector<std::pair<std::uint32_t, BigInt>>;

struct ColumnReduction {
  std::size_t rank = 0;
  std::vector<std::uint32_t> pivot_rows;  // lowest row of each surviving column, ascending
  std::vector<SparseBigVector> kernel;    // primitive integer kernel vectors, if requested
};

// Fraction-free column reduction over the integers: a column is combined with the
// earlier column sharing its lowest row, scaled so no division is needed, and then
// divided by its content. The rank over the rationals is the count of surviving
// columns. Columns flagged in `skip` are ignored.
ColumnReduction reduce_columns(const SparseIntMatrix& m, std::span<const char> skip = {}, bool want_kernel = false);

// Bareiss elimination with smallest-magnitude pivots (ties by row index).
std::size_t bareiss_rank(BigIntMatrix m);
BigInt bareiss_determinant(BigIntMatrix m);

// Exact rank over the rationals: dense Bareiss for small matrices, column reduction otherwise.
std::size_t integer_rank(const SparseIntMatrix& m);

// Primitive integer basis of the right kernel.
std::vector<SparseBigVector> kernel_basis(const SparseIntMatrix& m);

// Coefficients of det(x I - A), ascending by degree.
std::vector<BigInt> characteristic_polynomial(const BigIntMatrix& a);

}  // namespace wucalc
