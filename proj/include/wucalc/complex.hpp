#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wucalc/common.hpp"

namespace wucalc {

// Non-empty, strictly increasing vertex tuple. Orientation is the sorted order.
class Simplex {
 public:
  // Sorts and validates; duplicates or an empty list are rejected.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  int weight() const { return parity_sign(dim()); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  bool intersects(const Simplex& other) const;
  bool contains_vertex(Vertex v) const;
  bool is_face_of(const Simplex& other) const;  // subset, possibly equal

  // Ordering by dimension, then lexicographic.
  friend bool operator<(const Simplex& a, const Simplex& b) {
    if (a.vertices_.size() != b.vertices_.size()) return a.vertices_.size() < b.vertices_.size();
    return a.vertices_ < b.vertices_;
  }
  friend bool operator==(const Simplex& a, const Simplex& b) = default;

 private:
  std::vector<Vertex> vertices_;
};

class Complex {
 public:
  Complex() = default;

  // Requires a downward closed family; duplicates are merged.
  static Complex from_simplices(std::vector<Simplex> simplices);

  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  int dim() const { return offsets_.empty() ? -1 : static_cast<int>(offsets_.size()) - 2; }

  // Simplices of dimension p, in global order.
  std::span<const Simplex> of_dim(int p) const;
  std::size_t offset_of_dim(int p) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  std::vector<Vertex> vertices() const;

  friend bool operator==(const Complex& a, const Complex& b) { return a.simplices_ == b.simplices_; }

 private:
  std::vector<Simplex> simplices_;   // sorted by (dim, lex)
  std::vector<std::size_t> offsets_; // offsets_[p] = first index of dimension p
};

class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);

  void add_vertex(Vertex v);
  void add_edge(Vertex a, Vertex b);  // self-loops rejected, repeats ignored

  std::vector<Vertex> vertices() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
  bool adjacent(Vertex a, Vertex b) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;

  Graph induced(const std::vector<Vertex>& subset) const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::map<Vertex, std::vector<Vertex>> adj_;  // sorted neighbor lists
};

Complex generate_complex(const std::vector<std::vector<Vertex>>& facets);
Complex whitney_complex(const Graph& g);
Graph one_skeleton(const Complex& c);

std::vector<long long> f_vector(const Complex& c);
long long euler_characteristic(const Complex& c);

// Vertices of the result are indices into c.simplices().
Complex barycentric_refinement(const Complex& c);

Graph unit_sphere(const Graph& g, Vertex v);
Rational inductive_dimension(const Graph& g);
Rational euler_curvature(const Graph& g, Vertex v);
int poincare_hopf_index(const Graph& g, const std::map<Vertex, double>& f, Vertex v);
long long zagreb_index(const Graph& g);

}  // namespace wucalc
