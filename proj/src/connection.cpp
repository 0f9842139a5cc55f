#include "wucalc/connection.hpp"

#include "wucalc/exact_linalg.hpp"
#include "wucalc/interaction_basis.hpp"

namespace wucalc {

namespace {

template <class F>
void for_each_meeting_pair(const Complex& c, F&& f) {
  CellComplex cells(c);
  for (std::uint32_t x = 0; x < cells.size(); ++x)
    for (std::uint32_t y : cells.meeting(x, cells)) f(x, y);
}

}  // namespace

Graph connection_graph(const Complex& c) {
  Graph g;
  for (std::size_t i = 0; i < c.size(); ++i) g.add_vertex(static_cast<Vertex>(i));
  for_each_meeting_pair(c, [&](std::uint32_t x, std::uint32_t y) {
    if (x < y) g.add_edge(x, y);
  });
  // the inclusion graph of the refinement is a subgraph
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c.simplices()[i].is_face_of(c.simplices()[j]) && !g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)))
        throw Error("connection graph misses an inclusion edge");
  return g;
}

SparseIntMatrix connection_matrix(const Complex& c) {
  std::vector<Triplet> t;
  for_each_meeting_pair(c, [&](std::uint32_t x, std::uint32_t y) { t.push_back({x, y, 1}); });
  return SparseIntMatrix::from_triplets(c.size(), c.size(), std::move(t));
}

BigInt fredholm_characteristic(const Complex& c) {
  BigInt det = bareiss_determinant(BigIntMatrix::from_sparse(connection_matrix(c)));
  if (det != 1 && det != -1) throw Error("connection matrix is not unimodular: det = " + det.get_str());
  return det;
}

long long fermi_characteristic(const Complex& c) {
  long long phi = 1;
  for (const Simplex& s : c.simplices()) phi *= s.weight();
  return phi;
}

long long wu_via_connection_trace(const Complex& c) {
  long long sum = 0;
  for_each_meeting_pair(c, [&](std::uint32_t x, std::uint32_t y) {
    sum += c.simplices()[x].weight() * c.simplices()[y].weight();
  });
  return sum;
}

}  // namespace wucalc
