#include <random>
#include <sstream>

#include "../support/bridge.hpp"
#include "doctest.h"
#include "wucalc/catalog.hpp"
#include "wucalc/differential.hpp"
#include "wucalc/exact_linalg.hpp"

using namespace wucalc;

namespace {

GradedIntMatrix derivative(const std::vector<Complex>& cs) { return interaction_derivative(build_basis(cs)); }

// Kirchhoff matrix B - A of the 1-skeleton, in vertex order.
std::vector<std::vector<long long>> kirchhoff(const Complex& c) {
  Graph g = one_skeleton(c);
  auto vs = g.vertices();
  std::vector<std::vector<long long>> m(vs.size(), std::vector<long long>(vs.size(), 0));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      m[i][j] = i == j ? static_cast<long long>(g.degree(vs[i])) : (g.adjacent(vs[i], vs[j]) ? -1 : 0);
  return m;
}

}  // namespace

TEST_CASE("boundary chains") {
  auto e = boundary_chain(Simplex{1, 2}).terms;
  REQUIRE(e.size() == 2);
  CHECK(e[0].first == Simplex{2});
  CHECK(e[0].second == 1);
  CHECK(e[1].first == Simplex{1});
  CHECK(e[1].second == -1);
  auto t = boundary_chain(Simplex{1, 2, 3}).terms;
  REQUIRE(t.size() == 3);
  CHECK(t[0] == std::pair<Simplex, int>{Simplex{2, 3}, 1});
  CHECK(t[1] == std::pair<Simplex, int>{Simplex{1, 3}, -1});
  CHECK(t[2] == std::pair<Simplex, int>{Simplex{1, 2}, 1});
  CHECK(boundary_chain(Simplex{4}).terms.empty());
  // boundary of the boundary cancels
  std::map<Simplex, int> sum;
  for (auto [f, s] : t)
    for (auto [g, r] : boundary_chain(f).terms) sum[g] += s * r;
  for (auto [g, v] : sum) CHECK(v == 0);
}

TEST_CASE("k = 1 on the path is the signed incidence matrix") {
  GradedIntMatrix d = interaction_derivative(build_basis(path_complex(3), 1));
  SparseIntMatrix d0 = d.block(0);
  CHECK(d0.rows() == 2);
  CHECK(d0.cols() == 3);
  CHECK(d0.to_dense() == std::vector<std::vector<long long>>{{-1, 1, 0}, {0, -1, 1}});
  CHECK(integer_rank(d0) == 2);
}

TEST_CASE("laplacian block sizes") {
  Complex p3 = path_complex(3);
  DiracLaplacian dl = dirac_and_laplacian(derivative({p3, p3}));
  REQUIRE(dl.laplacian_blocks.size() == 3);
  CHECK(dl.laplacian_blocks[0].rows() == 3);
  CHECK(dl.laplacian_blocks[1].rows() == 8);
  CHECK(dl.laplacian_blocks[2].rows() == 4);
  Complex m = moebius_strip();
  CHECK(build_basis({m, m}).grade_sizes() == std::vector<std::size_t>{7, 56, 140, 126, 35});
}

TEST_CASE("rabbit scalar laplacian is the kirchhoff matrix") {
  Complex r = rabbit();
  DiracLaplacian dl = dirac_and_laplacian(interaction_derivative(build_basis(r, 1)));
  CHECK(dl.laplacian_blocks[0].to_dense() ==
        std::vector<std::vector<long long>>{{2, -1, -1, 0, 0}, {-1, 2, -1, 0, 0}, {-1, -1, 4, -1, -1},
                                            {0, 0, -1, 1, 0}, {0, 0, -1, 0, 1}});
}

TEST_CASE("disjoint supports give an empty basis") {
  Complex a = generate_complex({{1, 2}});
  Complex b = generate_complex({{3, 4}});
  InteractionBasis bs = build_basis({a, b});
  CHECK(bs.size() == 0);
  DiracLaplacian dl = dirac_and_laplacian(interaction_derivative(bs));
  CHECK(dl.dirac.rows() == 0);
}

TEST_CASE("sparse text round trip") {
  Complex p3 = path_complex(3);
  GradedIntMatrix d = derivative({p3, p3});
  std::stringstream s;
  write_sparse_text(s, d);
  GradedIntMatrix back = read_sparse_text(s, d.grade_sizes);
  REQUIRE(back.blocks.size() == d.blocks.size());
  for (std::size_t p = 0; p < d.blocks.size(); ++p) CHECK(back.blocks[p] == d.blocks[p]);
  std::stringstream csv;
  write_dense_csv(csv, d.block(0));
  CHECK(csv.str().find(',') != std::string::npos);
}

TEST_CASE("property: d squares to zero and matches the oracle coboundary") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto facets = oracle::random_small_facets(rng, trial < 25 ? 25 : 12);
    Complex c = bridge::to_complex(facets);
    int kmax = c.size() <= 12 ? 3 : 2;
    for (int k = 1; k <= kmax; ++k) {
      for (IntersectionRule rule : {IntersectionRule::pairwise, IntersectionRule::common}) {
        InteractionBasis b(repeat_source(c, k), rule);
        GradedIntMatrix d = interaction_derivative(b);
        CHECK(d.squares_to_zero());
        if (k > 2) continue;
        oracle::Graded g = oracle::coboundary(std::vector<oracle::Cells>(k, oracle::closure(facets)),
                                              rule == IntersectionRule::common);
        for (std::size_t p = 0; p < g.d.size(); ++p) {
          auto dense = d.block(static_cast<long>(p)).to_dense();
          REQUIRE(dense.size() == g.d[p].size());
          for (std::size_t r = 0; r < dense.size(); ++r)
            for (std::size_t col = 0; col < dense[r].size(); ++col) CHECK(mpq_class(static_cast<long>(dense[r][col])) == g.d[p][r][col]);
        }
      }
    }
  }
}

TEST_CASE("property: laplacian structure") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    Complex c = bridge::to_complex(oracle::random_small_facets(rng, 20));
    for (int k = 1; k <= 2; ++k) {
      DiracLaplacian dl = dirac_and_laplacian(interaction_derivative(build_basis(c, k)));
      CHECK(dl.dirac.is_symmetric());
      SparseIntMatrix full = full_laplacian(dl);
      // block diagonal: every non-zero of D^2 lies inside one grade block
      for (const Triplet& t : full.triplets()) {
        auto grade = [&](std::uint32_t i) {
          std::size_t p = 0;
          while (dl.offsets[p + 1] <= i) ++p;
          return p;
        };
        CHECK(grade(t.row) == grade(t.col));
        std::size_t p = grade(t.row);
        CHECK(dl.laplacian_blocks[p].at(t.row - dl.offsets[p], t.col - dl.offsets[p]) == t.value);
      }
      for (const auto& l : dl.laplacian_blocks) {
        CHECK(l.is_symmetric());
        for (std::size_t i = 0; i < l.rows(); ++i) CHECK(l.at(i, i) >= 0);
      }
      if (k == 1 && c.size() > 0) CHECK(dl.laplacian_blocks[0].to_dense() == kirchhoff(c));
    }
  }
}

TEST_CASE("property: flipping orientations conjugates L by a sign matrix") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Complex c = bridge::to_complex(oracle::random_small_facets(rng, 16));
    GradedIntMatrix d = interaction_derivative(build_basis(c, 2));
    std::vector<std::vector<int>> sign(d.grade_sizes.size());
    std::bernoulli_distribution coin(0.5);
    for (std::size_t p = 0; p < sign.size(); ++p)
      for (std::size_t i = 0; i < d.grade_sizes[p]; ++i) sign[p].push_back(coin(rng) ? -1 : 1);
    GradedIntMatrix e = d;
    for (std::size_t p = 0; p < d.blocks.size(); ++p) {
      std::vector<Triplet> ts = d.blocks[p].triplets();
      for (auto& t : ts) t.value *= sign[p + 1][t.row] * sign[p][t.col];
      e.blocks[p] = SparseIntMatrix::from_triplets(d.blocks[p].rows(), d.blocks[p].cols(), ts);
    }
    DiracLaplacian a = dirac_and_laplacian(d), b = dirac_and_laplacian(e);
    for (std::size_t p = 0; p < a.laplacian_blocks.size(); ++p)
      for (const Triplet& t : a.laplacian_blocks[p].triplets())
        CHECK(b.laplacian_blocks[p].at(t.row, t.col) == t.value * sign[p][t.row] * sign[p][t.col]);
  }
}
