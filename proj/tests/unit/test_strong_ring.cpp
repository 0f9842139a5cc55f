#include <random>

#include "../support/bridge.hpp"
#include "doctest.h"
#include "wucalc/catalog.hpp"
#include "wucalc/strong_ring.hpp"

using namespace wucalc;

namespace {

Complex point(Vertex v) { return generate_complex({{v}}); }

// Product cell f-vector and Betti numbers by brute force on pairs of cells,
// each factor enumerated independently.
std::vector<long long> product_f_oracle(const Complex& g, const Complex& h) {
  std::vector<long long> f;
  for (const auto& x : g.simplices())
    for (const auto& y : h.simplices()) {
      std::size_t d = static_cast<std::size_t>(x.dim() + y.dim());
      if (f.size() <= d) f.resize(d + 1, 0);
      ++f[d];
    }
  return f;
}

}  // namespace

TEST_CASE("product cell complexes") {
  CellComplex k2k2 = product_cell_complex({simplex_complex(2), simplex_complex(2)});
  CHECK(k2k2.size() == 9);
  CHECK(k2k2.f_vector() == std::vector<long long>{4, 4, 1});
  CellComplex single = product_cell_complex({house()});
  CHECK(single.f_vector() == f_vector(house()));
}

TEST_CASE("ring wu characteristics") {
  Complex s3 = star_complex(3);
  RingElement ss = RingElement(s3) * RingElement(s3);
  CHECK(ring_wu(ss, 2) == 1);
  CHECK(ring_wu(RingElement(simplex_complex(3)) + RingElement(cycle_complex(4)), 2) == 1);
  for (int k = 1; k <= 3; ++k) CHECK(ring_wu(RingElement::one(), k) == 1);
}

TEST_CASE("ring betti vectors") {
  Complex s3 = star_complex(3);
  CHECK(ring_betti(RingElement(s3) * RingElement(s3), 2).values == std::vector<long long>{0, 0, 0, 0, 1});
  Complex c4 = cycle_complex(4);
  CHECK(ring_betti(RingElement(c4) * RingElement(c4), 1).values == std::vector<long long>{1, 2, 1});
  CHECK(ring_betti(RingElement(house()) * RingElement::one(), 1).values == betti_vector(house(), 1).values);
  CHECK_THROWS_AS(ring_betti(-1 * RingElement(c4), 1), Error);
}

TEST_CASE("kuenneth checks") {
  KuennethReport a = kuenneth_check(simplex_complex(2), simplex_complex(2), 1);
  CHECK(a.ok);
  CHECK(a.product_side == Polynomial({1}));
  KuennethReport b = kuenneth_check(cycle_complex(4), cycle_complex(4), 1);
  CHECK(b.ok);
  CHECK(b.product_side == Polynomial({1, 2, 1}));
  KuennethReport c = kuenneth_check(star_complex(3), star_complex(3), 2);
  CHECK(c.ok);
  CHECK(c.product_side == Polynomial({0, 0, 0, 0, 1}));
}

TEST_CASE("property: euler polynomial homomorphism") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    Complex g = bridge::to_complex(oracle::random_small_facets(rng, 12));
    Complex h = bridge::to_complex(oracle::random_small_facets(rng, 12));
    RingElement eg(g), eh(h);
    CHECK(ring_euler_polynomial(eg * eh) == euler_polynomial(g) * euler_polynomial(h));
    CHECK(ring_euler_polynomial(eg + eh) == euler_polynomial(g) + euler_polynomial(h));
    CHECK(ring_f_vector(eg * eh) == product_f_oracle(g, h));
    for (int k = 1; k <= 2; ++k)
      CHECK(ring_multivariate_euler_polynomial(eg * eh, k) ==
            multivariate_euler_polynomial(g, k) * multivariate_euler_polynomial(h, k));
  }
}

TEST_CASE("property: multiplicativity, euler-poincare and boundary on products") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    Complex g = bridge::to_complex(oracle::random_small_facets(rng, 8, 5));
    Complex h = bridge::to_complex(oracle::random_small_facets(rng, 8, 5));
    CellComplex p = product_cell_complex({g, h});
    // boundary of boundary vanishes cell by cell
    for (std::uint32_t c = 0; c < p.size(); ++c) {
      std::map<std::uint32_t, int> sum;
      for (auto [f, s] : p.boundary(c))
        for (auto [e, r] : p.boundary(f)) sum[e] += s * r;
      for (auto [e, v] : sum) CHECK(v == 0);
    }
    RingElement prod = RingElement(g) * RingElement(h);
    for (int k = 1; k <= 2; ++k) {
      long long w = ring_wu(prod, k);
      CHECK(w == wu_characteristic(g, k) * wu_characteristic(h, k));
      BettiVector b = ring_betti(prod, k);
      CHECK(b.alternating_sum() == w);
      CHECK(kuenneth_check(g, h, k).ok);
    }
  }
}
