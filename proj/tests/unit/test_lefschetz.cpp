#include <algorithm>
#include <cmath>
#include <random>

#include "../support/bridge.hpp"
#include "doctest.h"
#include "wucalc/catalog.hpp"
#include "wucalc/lefschetz.hpp"

using namespace wucalc;

namespace {

long long as_int(const Rational& q) {
  REQUIRE(q.get_den() == 1);
  return q.get_num().get_si();
}

}  // namespace

TEST_CASE("automorphisms from cycle notation") {
  std::vector<Vertex> vs{1, 2, 3, 4, 5};
  Automorphism t = Automorphism::from_cycles("(1 2)(3 4 5)", vs);
  CHECK(t(1) == 2);
  CHECK(t(5) == 3);
  CHECK(t.sign() == -1);
  CHECK(t.compose(t.inverse()).is_identity());
  CHECK(Automorphism::from_cycles("(1,2)", vs).cycle_notation() == "(1 2)");
  CHECK_THROWS_AS(Automorphism::from_cycles("(1 9)", vs), Error);
}

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group(simplex_complex(3)).size() == 6);
  CHECK(automorphism_group(cylinder()).size() == 16);
  CHECK(automorphism_group(moebius_strip()).size() == 14);
  CHECK(automorphism_group(rabbit()).size() == 4);
  CHECK(automorphism_group(octahedron()).size() == 48);
  CHECK_THROWS_AS(automorphism_group(catalog_complex("bouquet4")), Error);
}

TEST_CASE("fixed tuples on the square") {
  Complex c4 = cycle_complex(4);
  InteractionBasis b = build_basis(c4, 1);
  auto vs = c4.vertices();
  CHECK(fixed_tuples(Automorphism::from_cycles("(1 2 3 4)", vs), b).empty());
  auto refl = fixed_tuples(Automorphism::from_cycles("(2 4)", vs), b);
  REQUIRE(refl.size() == 2);
  CHECK(refl[0].index == 1);
  CHECK(refl[1].index == 1);
  auto id = fixed_tuples(Automorphism::identity(vs), b);
  CHECK(id.size() == b.size());
}

TEST_CASE("lefschetz numbers") {
  Complex oct = octahedron();
  CHECK(lefschetz_number(Automorphism::identity(oct.vertices()), oct, 2) == 2);
  Complex c4 = cycle_complex(4);
  LefschetzReport rot = lefschetz_fixed_point_check(Automorphism::from_cycles("(1 2 3 4)", c4.vertices()), c4, 2);
  CHECK(rot.lefschetz_number == 0);
  CHECK(rot.index_sum == 0);
  CHECK(rot.ok);
  CHECK_THROWS_AS(lefschetz_number(Automorphism::from_cycles("(1 2)", c4.vertices()), c4, 1), Error);
}

TEST_CASE("cylinder and moebius lists") {
  Complex cyl = cylinder();
  LefschetzEngine ec(cyl, 1);
  std::vector<long long> lc;
  for (const auto& t : automorphism_group(cyl)) lc.push_back(as_int(ec.lefschetz_number({t})));
  CHECK(lc == std::vector<long long>{0, 2, 2, 0, 2, 0, 0, 2, 0, 2, 2, 0, 2, 0, 0, 2});

  Complex m = moebius_strip();
  LefschetzEngine em(m, 1);
  std::vector<long long> lm;
  for (const auto& t : automorphism_group(m)) lm.push_back(as_int(em.lefschetz_number({t})));
  CHECK(lm == std::vector<long long>{0, 2, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 0, 2});
}

TEST_CASE("rabbit automorphisms satisfy the fixed point identity") {
  Complex r = rabbit();
  for (int k = 1; k <= 2; ++k) {
    LefschetzEngine e(r, k);
    for (const auto& t : automorphism_group(r)) CHECK(e.check({t}).ok);
  }
}

TEST_CASE("heat trace on the path") {
  Complex p3 = path_complex(3);
  Automorphism id = Automorphism::identity(p3.vertices());
  CHECK(heat_trace(id, p3, 2, 0.0) == doctest::Approx(-1).epsilon(1e-12));
  CHECK(std::abs(heat_trace(id, p3, 2, 10.0) + 1) < 1e-6);
}

TEST_CASE("property: identity gives the wu characteristic") {
  std::vector<std::string> names{"K3", "C4", "P3", "octahedron", "rabbit", "house", "star3", "figure8", "moebius"};
  for (const auto& n : names) {
    Complex c = catalog_complex(n);
    for (int k = 1; k <= 2; ++k)
      CHECK(lefschetz_number(Automorphism::identity(c.vertices()), c, k) == static_cast<long>(wu_characteristic(c, k)));
  }
}

TEST_CASE("property: random automorphisms, conjugation and heat traces") {
  std::mt19937 rng(59);
  int done = 0;
  while (done < 20) {
    std::uniform_int_distribution<int> nd(3, 7);
    int n = nd(rng);
    Graph g = bridge::to_graph(n, oracle::erdos_renyi(rng, n, 0.5));
    Complex c = whitney_complex(g);
    auto group = automorphism_group(c);
    if (group.size() < 2) continue;
    ++done;
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    std::uniform_int_distribution<int> kd(1, 2);
    int k = kd(rng);
    LefschetzEngine e(c, k);
    Automorphism t = group[pick(rng)], s = group[pick(rng)];
    LefschetzReport r = e.check({t});
    CHECK(r.ok);
    CHECK(r.lefschetz_number.get_den() == 1);
    CHECK(e.lefschetz_number({s.compose(t).compose(s.inverse())}) == r.lefschetz_number);
    double h0 = e.heat_trace({t}, 0.0);
    CHECK(std::abs(h0 - static_cast<double>(r.index_sum)) < 1e-8);
    for (double time : {0.1, 1.0, 10.0}) CHECK(std::abs(e.heat_trace({t}, time) - h0) < 1e-8);
    // closure of the group
    for (const auto& a : group) {
      CHECK(std::binary_search(group.begin(), group.end(), a.inverse()));
      CHECK(std::binary_search(group.begin(), group.end(), a.compose(t)));
    }
  }
}
