#include <cmath>
#include <random>

#include "../support/bridge.hpp"
#include "doctest.h"
#include "wucalc/catalog.hpp"
#include "wucalc/cohomology.hpp"
#include "wucalc/spectral.hpp"

using namespace wucalc;

namespace {

DiracLaplacian operators(const Complex& c, int k) {
  return dirac_and_laplacian(interaction_derivative(build_basis(c, k)));
}

void check_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < tol);
}

}  // namespace

TEST_CASE("rabbit spectra") {
  SpectrumReport s = spectrum(operators(rabbit(), 1).laplacian_blocks);
  check_close(s.eigenvalues[0], {0, 1, 1, 3, 5}, 1e-9);
  check_close(s.eigenvalues[1], {1, 1, 3, 3, 5}, 1e-9);
  check_close(s.eigenvalues[2], {3}, 1e-9);
  CHECK(s.zero_counts == std::vector<long long>{1, 0, 0});
  SupersymmetryReport susy = supersymmetry_check(s);
  CHECK(susy.ok);
  check_close(susy.even, susy.odd, 1e-8);
}

TEST_CASE("zero blocks and exact overrides") {
  SpectrumReport z = spectrum({SparseIntMatrix(3, 3)});
  CHECK(z.zero_counts == std::vector<long long>{3});
  std::vector<long long> wrong{2};
  SpectrumReport w = spectrum({SparseIntMatrix(3, 3)}, 1e-9, &wrong);
  CHECK(w.zero_counts == wrong);
  CHECK_FALSE(w.warnings.empty());
}

TEST_CASE("mckean-singer supertraces") {
  SpectrumReport p3 = spectrum(operators(path_complex(3), 2).laplacian_blocks);
  for (double t : {0.0, 0.5, 5.0}) CHECK(std::abs(mckean_singer_supertrace(p3, t) + 1) < 1e-8);
  SpectrumReport oct = spectrum(operators(octahedron(), 1).laplacian_blocks);
  for (double t : {0.0, 1.0}) CHECK(std::abs(mckean_singer_supertrace(oct, t) - 2) < 1e-8);
  SpectrumReport m = spectrum(operators(moebius_strip(), 2).laplacian_blocks);
  CHECK(std::abs(mckean_singer_supertrace(m, 50.0)) < 1e-8);
}

TEST_CASE("wave evolution") {
  DiracLaplacian dl = operators(path_complex(3), 2);
  std::size_t n = dl.dirac.rows();
  std::mt19937 rng(79);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd u0(n), v0(n);
  for (std::size_t i = 0; i < n; ++i) {
    u0[i] = gauss(rng);
    v0[i] = gauss(rng);
  }
  WaveState s0 = wave_evolve(dl.dirac, u0, v0, 0.0);
  CHECK((s0.position - u0).norm() < 1e-12);
  WaveState s1 = wave_evolve(dl.dirac, u0, v0, 1.7);
  // back in time from the evolved state
  WaveState back = wave_evolve(dl.dirac, s1.position, -s1.velocity, 1.7);
  CHECK((back.position - u0).norm() < 1e-8);
  double e0 = wave_energy(dl.dirac, s0);
  for (double t : {0.3, 2.0, 9.0}) CHECK(std::abs(wave_energy(dl.dirac, wave_evolve(dl.dirac, u0, v0, t)) - e0) < 1e-8);
  HarmonicBasis h = harmonic_basis(dl);
  Eigen::VectorXd harm = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (const auto& [i, x] : h.grades[1][0]) harm[dl.offsets[1] + i] = x.get_d();
  WaveState still = wave_evolve(dl.dirac, harm, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n)), 4.0);
  CHECK((still.position - harm).norm() < 1e-10);
  CHECK_THROWS_AS(wave_evolve(dl.dirac, Eigen::VectorXd::Zero(2), v0, 1.0), Error);
}

TEST_CASE("lax deformation of the edge") {
  DiracLaplacian dl = operators(simplex_complex(2), 1);
  DeformationTrajectory tr = lax_deform(dl.dirac, grading_of(dl), LaxMode::real, 1.0, 1e-3);
  check_close(tr.spectra.back(), {-std::sqrt(2.0), 0.0, std::sqrt(2.0)}, 1e-6);
  CHECK(tr.max_d_squared < 1e-8);
  CHECK(tr.max_asymmetry < 1e-12);
  CHECK(tr.states.front().time == 0.0);
  auto d0 = dl.dirac.to_dense();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(tr.states.front().matrix(i, j) == std::complex<double>(static_cast<double>(d0[i][j]), 0.0));
}

TEST_CASE("lax deformation in both modes keeps the spectrum") {
  for (const char* name : {"P3", "K3", "C4"}) {
    DiracLaplacian dl = operators(catalog_complex(name), 2);
    if (dl.dirac.rows() > 60) continue;
    for (LaxMode mode : {LaxMode::real, LaxMode::complex}) {
      DeformationTrajectory tr = lax_deform(dl.dirac, grading_of(dl), mode, 1.0, 5e-3);
      CHECK(tr.max_drift <= 1e-6 * std::max(1.0, tr.norm));
      CHECK(tr.max_d_squared < 1e-8);
      CHECK(tr.max_asymmetry < 1e-8);
    }
  }
}

TEST_CASE("lax deformation rejects a step that is far too large") {
  DiracLaplacian dl = operators(path_complex(3), 2);
  CHECK_THROWS_AS(lax_deform(dl.dirac, grading_of(dl), LaxMode::real, 20.0, 2.0), Error);
}

TEST_CASE("property: supersymmetry and supertraces") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    Complex c = bridge::to_complex(oracle::random_small_facets(rng, 16));
    for (int k = 1; k <= 2; ++k) {
      DiracLaplacian dl = operators(c, k);
      auto nullities = laplacian_nullities(dl);
      SpectrumReport s = spectrum(dl.laplacian_blocks, 1e-9, &nullities);
      CHECK(s.warnings.empty());
      CHECK(supersymmetry_check(s).ok);
      long long w = wu_characteristic(c, k);
      for (double t : {0.0, 0.1, 1.0, 10.0}) CHECK(std::abs(mckean_singer_supertrace(s, t) - w) < 1e-8);
      for (const BigInt& x : supertrace_powers(dl.laplacian_blocks, 4)) CHECK(x == 0);
    }
  }
}
