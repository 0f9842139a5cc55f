#include <random>

#include "../support/bridge.hpp"
#include "doctest.h"
#include "wucalc/catalog.hpp"
#include "wucalc/connection.hpp"
#include "wucalc/interaction_basis.hpp"

using namespace wucalc;

TEST_CASE("connection graphs") {
  Graph k2 = connection_graph(simplex_complex(2));
  CHECK(k2.vertex_count() == 3);
  // the two endpoints do not meet, so only the edge is joined to them
  CHECK(k2.edge_count() == 2);
  CHECK(connection_graph(simplex_complex(3)).edge_count() == 15);
  Graph two = connection_graph(generate_complex({{1}, {2}}));
  CHECK(two.vertex_count() == 2);
  CHECK(two.edge_count() == 0);
}

TEST_CASE("fredholm and fermi characteristics") {
  CHECK(fredholm_characteristic(simplex_complex(2)) == -1);
  CHECK(fredholm_characteristic(path_complex(3)) == 1);
  CHECK(fermi_characteristic(simplex_complex(2)) == -1);
  CHECK(fermi_characteristic(octahedron()) == 1);
  CHECK(fermi_characteristic(Complex{}) == 1);
}

TEST_CASE("wu via the connection trace") {
  CHECK(wu_via_connection_trace(path_complex(3)) == -1);
  CHECK(wu_via_connection_trace(rabbit()) == 3);
  CHECK(wu_via_connection_trace(simplex_complex(3)) == 1);
}

TEST_CASE("property: unimodularity and trace identity on random complexes") {
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> nd(2, 6);
  int done = 0;
  while (done < 300) {
    int n = nd(rng);
    auto edges = oracle::erdos_renyi(rng, n, 0.5);
    Complex c = whitney_complex(bridge::to_graph(n, edges));
    if (c.size() > 14) continue;
    ++done;
    BigInt psi = fredholm_characteristic(c);
    CHECK(psi == static_cast<long>(fermi_characteristic(c)));
    CHECK(psi == oracle::det(oracle::connection(bridge::to_cells(c))));
    CHECK(wu_via_connection_trace(c) == wu_characteristic(c, 2));
    SparseIntMatrix l = connection_matrix(c);
    CHECK(l.is_symmetric());
    CHECK(l.trace() == static_cast<long long>(c.size()));
  }
}

TEST_CASE("property: refinements have fredholm characteristic one") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    Complex c = bridge::to_complex(oracle::random_small_facets(rng, 9, 5));
    Complex r = barycentric_refinement(c);
    CHECK(fredholm_characteristic(r) == 1);
    // the refinement graph sits inside the connection graph
    Graph cg = connection_graph(c);
    for (auto [a, b] : one_skeleton(r).edges()) CHECK(cg.adjacent(a, b));
  }
}
