#include <random>

#include "../support/bridge.hpp"
#include "doctest.h"
#include "wucalc/catalog.hpp"
#include "wucalc/complex.hpp"

using namespace wucalc;

namespace {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return bridge::to_graph(n, e);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.push_back({i, i % n + 1});
  return bridge::to_graph(n, e);
}

}  // namespace

TEST_CASE("simplex normalizes and rejects bad input") {
  Simplex s{3, 1, 2};
  CHECK(s.dim() == 2);
  CHECK(s[0] == 1);
  CHECK(s.weight() == 1);
  CHECK_THROWS_AS(Simplex({1, 1}), Error);
  CHECK_THROWS_AS(Simplex(std::vector<Vertex>{}), Error);
  CHECK(Simplex{1, 2}.is_face_of(Simplex{1, 2, 3}));
  CHECK_FALSE(Simplex{1, 4}.intersects(Simplex{2, 3}));
}

TEST_CASE("generate_complex closes facets downward") {
  Complex k3 = generate_complex({{1, 2, 3}});
  CHECK(f_vector(k3) == std::vector<long long>{3, 3, 1});
  CHECK(generate_complex({}).empty());
  CHECK(f_vector(generate_complex({})).empty());
  CHECK_THROWS_AS(Complex::from_simplices({Simplex{1, 2}}), Error);
}

TEST_CASE("f-vectors and Euler characteristics of named complexes") {
  CHECK(f_vector(path_complex(3)) == std::vector<long long>{3, 2});
  CHECK(f_vector(rabbit()) == std::vector<long long>{5, 5, 1});
  CHECK(euler_characteristic(path_complex(3)) == 1);
  CHECK(euler_characteristic(octahedron()) == 2);
  CHECK(euler_characteristic(catalog_complex("cube")) == -4);
}

TEST_CASE("whitney complex and one-skeleton") {
  Complex c = whitney_complex(cycle_graph(4));
  CHECK(f_vector(c) == std::vector<long long>{4, 4});
  Graph k4 = one_skeleton(simplex_complex(4));
  CHECK(k4.edge_count() == 6);
  CHECK(f_vector(whitney_complex(k4)) == std::vector<long long>{4, 6, 4, 1});
}

TEST_CASE("barycentric refinement") {
  CHECK(f_vector(barycentric_refinement(simplex_complex(2))) == std::vector<long long>{3, 2});
  Complex bd = generate_complex({{1, 2}, {2, 3}, {1, 3}});
  CHECK(f_vector(barycentric_refinement(bd)) == std::vector<long long>{6, 6});
  // new vertex ids are the simplex indices in (dim, lex) order
  Complex r = barycentric_refinement(simplex_complex(2));
  CHECK(r.contains(Simplex{0, 2}));
  CHECK(r.contains(Simplex{1, 2}));
}

TEST_CASE("unit spheres") {
  Graph oct = one_skeleton(octahedron());
  for (Vertex v : oct.vertices()) {
    Graph s = unit_sphere(oct, v);
    CHECK(s.vertex_count() == 4);
    CHECK(s.edge_count() == 4);
  }
  Graph mid = unit_sphere(path_graph(3), 2);
  CHECK(mid.vertex_count() == 2);
  CHECK(mid.edge_count() == 0);
  Graph eight = unit_sphere(one_skeleton(figure_eight()), 2);
  CHECK(eight.vertex_count() == 4);
  CHECK(eight.edge_count() == 0);
  CHECK_THROWS_AS(unit_sphere(path_graph(3), 9), Error);
}

namespace {

// Recursive definition on adjacency sets, independent of Graph.
mpq_class dimension_oracle(const std::map<int, std::set<int>>& adj) {
  if (adj.empty()) return -1;
  mpq_class sum = 0;
  for (const auto& [v, nb] : adj) {
    std::map<int, std::set<int>> sphere;
    for (int a : nb) {
      sphere[a];
      for (int b : adj.at(a))
        if (nb.count(b)) sphere[a].insert(b);
    }
    sum += dimension_oracle(sphere);
  }
  return 1 + sum / static_cast<long>(adj.size());
}

}  // namespace

TEST_CASE("inductive dimension") {
  // triangle with two pendant edges at one corner: spheres 1, 1, 1/2, 0, 0
  CHECK(inductive_dimension(one_skeleton(rabbit())) == Rational(3, 2));
  for (int n = 1; n <= 5; ++n)
    CHECK(inductive_dimension(one_skeleton(simplex_complex(n))) == Rational(n - 1));
  CHECK(inductive_dimension(Graph{}) == Rational(-1));
}

TEST_CASE("property: inductive dimension matches the recursive oracle") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> nd(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    int n = nd(rng);
    auto edges = oracle::erdos_renyi(rng, n, 0.5);
    std::map<int, std::set<int>> adj;
    for (int v = 1; v <= n; ++v) adj[v];
    for (auto [a, b] : edges) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
    CHECK(inductive_dimension(bridge::to_graph(n, edges)) == dimension_oracle(adj));
  }
}

TEST_CASE("euler curvature") {
  Graph c4 = cycle_graph(4);
  CHECK(euler_curvature(c4, 1) == Rational(0));
  Graph k3 = one_skeleton(simplex_complex(3));
  CHECK(euler_curvature(k3, 2) == Rational(1, 3));
  Graph iso;
  iso.add_vertex(7);
  CHECK(euler_curvature(iso, 7) == Rational(1));
}

TEST_CASE("poincare-hopf indices") {
  Graph p3 = path_graph(3);
  std::map<Vertex, double> f{{1, 1}, {2, 2}, {3, 3}};
  CHECK(poincare_hopf_index(p3, f, 1) == 1);
  CHECK(poincare_hopf_index(p3, f, 2) == 0);
  CHECK(poincare_hopf_index(p3, f, 3) == 0);
  Graph c4 = cycle_graph(4);
  std::map<Vertex, double> g{{1, 1}, {2, 2}, {3, 3}, {4, 4}};
  int sum = 0;
  for (Vertex v : c4.vertices()) sum += poincare_hopf_index(c4, g, v);
  CHECK(sum == 0);
  std::map<Vertex, double> bad{{1, 1}, {2, 1}, {3, 3}};
  CHECK_THROWS_AS(poincare_hopf_index(p3, bad, 1), Error);
}

TEST_CASE("zagreb index") {
  CHECK(zagreb_index(one_skeleton(star_complex(5))) == 30);
  CHECK(zagreb_index(path_graph(3)) == 6);
  CHECK(zagreb_index(Graph{}) == 0);
}

TEST_CASE("property: closure, refinement parity and euler characteristic") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto facets = oracle::random_facets(rng, 7, 4, 4);
    Complex c = bridge::to_complex(facets);
    CHECK(bridge::to_cells(c) == oracle::closure(facets));
    for (const Simplex& s : c.simplices()) {
      if (s.size() < 2) continue;
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<Vertex> face(s.vertices().begin(), s.vertices().end());
        face.erase(face.begin() + static_cast<long>(i));
        CHECK(c.contains(Simplex(face)));
      }
    }
    CHECK(euler_characteristic(c) == oracle::euler(oracle::closure(facets)));
    Complex r = barycentric_refinement(c);
    CHECK(euler_characteristic(r) == euler_characteristic(c));
    long long odd = 0;
    auto fv = f_vector(r);
    for (std::size_t p = 1; p < fv.size(); p += 2) odd += fv[p];
    CHECK(odd % 2 == 0);
  }
}

TEST_CASE("property: gauss-bonnet and poincare-hopf on random graphs") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> nd(1, 10);
  std::uniform_real_distribution<double> pd(0.1, 0.9);
  for (int trial = 0; trial < 200; ++trial) {
    int n = nd(rng);
    auto edges = oracle::erdos_renyi(rng, n, pd(rng));
    Graph g = bridge::to_graph(n, edges);
    long long chi = oracle::euler(oracle::whitney(n, edges));
    CHECK(euler_characteristic(whitney_complex(g)) == chi);
    Rational total = 0;
    for (Vertex v : g.vertices()) total += euler_curvature(g, v);
    CHECK(total == Rational(static_cast<long>(chi)));
    auto perm = oracle::random_permutation(rng, n);
    std::map<Vertex, double> f;
    for (int v = 1; v <= n; ++v) f[static_cast<Vertex>(v)] = perm[v - 1];
    long long idx = 0;
    for (Vertex v : g.vertices()) idx += poincare_hopf_index(g, f, v);
    CHECK(idx == chi);
  }
}
