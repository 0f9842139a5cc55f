#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wucalc/differential.hpp"

namespace wucalc {

struct SpectrumReport {
  std::vector<std::vector<double>> eigenvalues;  // ascending, per grade
  std::vector<long long> zero_counts;            // by the relative threshold
  std::vector<std::string> warnings;
};

// Zero threshold per block is tol * (1 + spectral norm). When exact nullities are
// given they override disagreeing counts and a warning is recorded.
SpectrumReport spectrum(const std::vector<SparseIntMatrix>& blocks, double tol = 1e-9,
                        const std::vector<long long>* exact_nullities = nullptr);

struct SupersymmetryReport {
  std::vector<double> even;  // nonzero eigenvalues on even grades, sorted
  std::vector<double> odd;
  double max_deviation = 0;
  bool ok = false;
};

SupersymmetryReport supersymmetry_check(const SpectrumReport& s, double tol = 1e-8);

// sum_p (-1)^p tr exp(-t L_p)
double mckean_singer_supertrace(const SpectrumReport& s, double t);

// Exact str(L^n) for n = 1..max_power.
std::vector<BigInt> supertrace_powers(const std::vector<SparseIntMatrix>& blocks, int max_power);

struct WaveState {
  double time = 0;
  Eigen::VectorXd position;
  Eigen::VectorXd velocity;
};

// u(t) = cos(Dt) u0 + sin(Dt) D^+ v0 with D^+ the pseudo-inverse.
WaveState wave_evolve(const SparseIntMatrix& dirac, const Eigen::VectorXd& u0, const Eigen::VectorXd& v0, double t);
double wave_energy(const SparseIntMatrix& dirac, const WaveState& s);

enum class LaxMode { real, complex };

struct DeformationState {
  double time = 0;
  Eigen::MatrixXcd matrix;
};

struct DeformationTrajectory {
  std::vector<int> grading;
  std::vector<DeformationState> states;        // sampled along the flow
  std::vector<std::vector<double>> spectra;    // eigenvalues of each sampled state
  double norm = 0;                             // spectral norm of D(0)
  double max_drift = 0;                        // largest eigenvalue deviation seen
  double max_d_squared = 0;                    // largest |d(t)^2| entry seen
  double max_asymmetry = 0;                    // largest |D - D*| entry seen
};

// RK4 integration of D' = [B, D]. The grade-raising part d of D gives
// B = d - d^T (real) or B = d - d^* - i b (complex, b the grade-preserving part).
// Throws when the spectrum drifts beyond 10 * tol * |D0|.
DeformationTrajectory lax_deform(const SparseIntMatrix& dirac, const std::vector<int>& grading, LaxMode mode,
                                 double t_max, double dt, double tol = 1e-6, std::size_t samples = 10);

std::vector<int> grading_of(const DiracLaplacian& dl);
void write_trajectory_csv(std::ostream& out, const DeformationTrajectory& traj);

}  // namespace wucalc
