#include "wucalc/differential.hpp"

#include <istream>
#include <sstream>
#include <string>

namespace wucalc {

BoundaryChain boundary_chain(const Simplex& s) {
  BoundaryChain chain;
  if (s.dim() == 0) return chain;
  for (std::size_t m = 0; m < s.size(); ++m) {
    std::vector<Vertex> face(s.vertices().begin(), s.vertices().end());
    face.erase(face.begin() + static_cast<long>(m));
    chain.terms.emplace_back(Simplex(std::move(face)), parity_sign(static_cast<long long>(m)));
  }
  return chain;
}

std::size_t GradedIntMatrix::total_size() const {
  std::size_t n = 0;
  for (std::size_t s : grade_sizes) n += s;
  return n;
}

SparseIntMatrix GradedIntMatrix::block(long p) const {
  auto size = [&](long q) -> std::size_t {
    return (q >= 0 && static_cast<std::size_t>(q) < grade_sizes.size()) ? grade_sizes[q] : 0;
  };
  if (p >= 0 && static_cast<std::size_t>(p) < blocks.size()) return blocks[p];
  return SparseIntMatrix(size(p + 1), size(p));
}

bool GradedIntMatrix::squares_to_zero() const {
  for (std::size_t p = 0; p + 1 < blocks.size(); ++p)
    if (!(blocks[p + 1] * blocks[p]).is_zero()) return false;
  return true;
}

GradedIntMatrix interaction_derivative(const InteractionBasis& b) {
  GradedIntMatrix d;
  d.grade_sizes = b.grade_sizes();
  const std::size_t k = b.order();
  const std::size_t grades = b.grade_count();
  for (std::size_t p = 0; p + 1 < grades; ++p) {
    std::vector<Triplet> entries;
    std::vector<std::uint32_t> face(k);
    for (std::size_t row = 0; row < b.grade_size(p + 1); ++row) {
      auto t = b.tuple(p + 1, row);
      int preceding = 0;
      for (std::size_t j = 0; j < k; ++j) {
        const CellComplex& src = b.source(j);
        for (const SignedCell& f : src.boundary(t[j])) {
          std::copy(t.begin(), t.end(), face.begin());
          face[j] = f.cell;
          if (auto col = b.position(face))
            entries.push_back({static_cast<std::uint32_t>(row), *col, f.sign * parity_sign(preceding)});
        }
        preceding += src.dim(t[j]);
      }
    }
    d.blocks.push_back(SparseIntMatrix::from_triplets(b.grade_size(p + 1), b.grade_size(p), std::move(entries)));
  }
  return d;
}

DiracLaplacian dirac_and_laplacian(const GradedIntMatrix& d) {
  if (!d.squares_to_zero()) throw Error("exterior derivative does not square to zero");
  DiracLaplacian out;
  out.offsets.push_back(0);
  for (std::size_t s : d.grade_sizes) out.offsets.push_back(out.offsets.back() + s);
  const std::size_t n = out.offsets.back();
  std::vector<Triplet> entries;
  for (std::size_t p = 0; p < d.blocks.size(); ++p) {
    for (const Triplet& t : d.blocks[p].triplets()) {
      auto r = static_cast<std::uint32_t>(out.offsets[p + 1] + t.row);
      auto c = static_cast<std::uint32_t>(out.offsets[p] + t.col);
      entries.push_back({r, c, t.value});
      entries.push_back({c, r, t.value});
    }
  }
  out.dirac = SparseIntMatrix::from_triplets(n, n, std::move(entries));
  for (std::size_t p = 0; p < d.grade_sizes.size(); ++p) {
    SparseIntMatrix up = d.block(static_cast<long>(p));
    SparseIntMatrix down = d.block(static_cast<long>(p) - 1);
    out.laplacian_blocks.push_back(down * down.transpose() + up.transpose() * up);
  }
  return out;
}

SparseIntMatrix full_laplacian(const DiracLaplacian& dl) { return dl.dirac * dl.dirac; }

void write_sparse_text(std::ostream& out, const GradedIntMatrix& d) {
  for (std::size_t p = 0; p < d.blocks.size(); ++p)
    for (const Triplet& t : d.blocks[p].triplets())
      out << p << ' ' << t.row << ' ' << t.col << ' ' << t.value << '\n';
}

GradedIntMatrix read_sparse_text(std::istream& in, const std::vector<std::size_t>& grade_sizes) {
  const std::size_t nblocks = grade_sizes.empty() ? 0 : grade_sizes.size() - 1;
  std::vector<std::vector<Triplet>> entries(nblocks);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long p, r, c, v;
    if (!(ls >> p >> r >> c >> v) || p < 0 || r < 0 || c < 0 || static_cast<std::size_t>(p) >= nblocks)
      throw Error("malformed matrix line " + std::to_string(lineno));
    entries[p].push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), v});
  }
  GradedIntMatrix d;
  d.grade_sizes = grade_sizes;
  for (std::size_t p = 0; p < nblocks; ++p)
    d.blocks.push_back(SparseIntMatrix::from_triplets(grade_sizes[p + 1], grade_sizes[p], std::move(entries[p])));
  return d;
}

void write_dense_csv(std::ostream& out, const SparseIntMatrix& m) {
  for (const auto& row : m.to_dense()) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << '\n';
  }
}

}  // namespace wucalc
