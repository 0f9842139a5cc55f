#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "wucalc/interaction_basis.hpp"
#include "wucalc/sparse_matrix.hpp"

namespace wucalc {

struct BoundaryChain {
  std::vector<std::pair<Simplex, int>> terms;
};

// Term m drops the m-th smallest vertex and carries sign (-1)^m.
BoundaryChain boundary_chain(const Simplex& s);

// blocks[p] maps grade p coordinates to grade p+1 coordinates
// (rows: grade p+1 tuples, columns: grade p tuples).
struct GradedIntMatrix {
  std::vector<std::size_t> grade_sizes;
  std::vector<SparseIntMatrix> blocks;

  std::size_t total_size() const;
  // d_p, or an empty map of the right shape when p is out of range
  SparseIntMatrix block(long p) const;
  bool squares_to_zero() const;
};

// (dF)(t) sums F over face tuples of t: a face in part j carries the face sign
// times (-1)^(sum of dims of parts before j); faces that leave the basis are dropped.
GradedIntMatrix interaction_derivative(const InteractionBasis& b);

struct DiracLaplacian {
  std::vector<std::size_t> offsets;  // first coordinate of each grade; last entry = total
  SparseIntMatrix dirac;
  std::vector<SparseIntMatrix> laplacian_blocks;
};

// Requires d^2 = 0; L_p = d_{p-1} d_{p-1}^T + d_p^T d_p.
DiracLaplacian dirac_and_laplacian(const GradedIntMatrix& d);

// The full D^2 assembled from D; used to confirm block structure.
SparseIntMatrix full_laplacian(const DiracLaplacian& dl);

// Sparse text format: one "p row col value" line per non-zero of d_p.
void write_sparse_text(std::ostream& out, const GradedIntMatrix& d);
GradedIntMatrix read_sparse_text(std::istream& in, const std::vector<std::size_t>& grade_sizes);
void write_dense_csv(std::ostream& out, const SparseIntMatrix& m);

}  // namespace wucalc
