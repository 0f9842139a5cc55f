#include "wucalc/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "wucalc/exact_linalg.hpp"

namespace wucalc {

namespace {

Eigen::MatrixXd dense(const SparseIntMatrix& m) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<long>(m.rows()), static_cast<long>(m.cols()));
  for (const Triplet& t : m.triplets()) d(t.row, t.col) = static_cast<double>(t.value);
  return d;
}

}  // namespace

SpectrumReport spectrum(const std::vector<SparseIntMatrix>& blocks, double tol,
                        const std::vector<long long>* exact_nullities) {
  SpectrumReport r;
  r.eigenvalues.resize(blocks.size());
  r.zero_counts.resize(blocks.size());
  parallel_for(blocks.size(), [&](std::size_t p) {
    if (!blocks[p].is_symmetric()) throw Error("spectrum needs symmetric blocks");
    if (blocks[p].rows() == 0) return;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense(blocks[p]), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    r.eigenvalues[p].assign(ev.data(), ev.data() + ev.size());
    double norm = 0;
    for (double x : r.eigenvalues[p]) norm = std::max(norm, std::abs(x));
    const double threshold = tol * (1 + norm);
    r.zero_counts[p] = std::count_if(r.eigenvalues[p].begin(), r.eigenvalues[p].end(),
                                     [&](double x) { return std::abs(x) <= threshold; });
  });
  if (exact_nullities) {
    for (std::size_t p = 0; p < blocks.size() && p < exact_nullities->size(); ++p) {
      if (r.zero_counts[p] != (*exact_nullities)[p]) {
        r.warnings.push_back("grade " + std::to_string(p) + ": numeric zero count " + std::to_string(r.zero_counts[p]) +
                             " replaced by exact nullity " + std::to_string((*exact_nullities)[p]));
        r.zero_counts[p] = (*exact_nullities)[p];
      }
    }
  }
  return r;
}

SupersymmetryReport supersymmetry_check(const SpectrumReport& s, double tol) {
  SupersymmetryReport r;
  for (std::size_t p = 0; p < s.eigenvalues.size(); ++p) {
    // drop the zero_counts[p] smallest values, which are the kernel
    std::vector<double> ev = s.eigenvalues[p];
    std::sort(ev.begin(), ev.end());
    auto& target = (p % 2 == 0) ? r.even : r.odd;
    target.insert(target.end(), ev.begin() + std::min<long long>(s.zero_counts[p], static_cast<long long>(ev.size())), ev.end());
  }
  std::sort(r.even.begin(), r.even.end());
  std::sort(r.odd.begin(), r.odd.end());
  if (r.even.size() != r.odd.size()) {
    r.max_deviation = INFINITY;
    return r;
  }
  for (std::size_t i = 0; i < r.even.size(); ++i) r.max_deviation = std::max(r.max_deviation, std::abs(r.even[i] - r.odd[i]));
  r.ok = r.max_deviation <= tol * (1 + (r.even.empty() ? 0 : r.even.back()));
  return r;
}

double mckean_singer_supertrace(const SpectrumReport& s, double t) {
  double total = 0;
  for (std::size_t p = 0; p < s.eigenvalues.size(); ++p) {
    double tr = 0;
    for (double x : s.eigenvalues[p]) tr += std::exp(-t * x);
    total += parity_sign(static_cast<long long>(p)) * tr;
  }
  return total;
}

std::vector<BigInt> supertrace_powers(const std::vector<SparseIntMatrix>& blocks, int max_power) {
  std::vector<BigInt> out(static_cast<std::size_t>(std::max(0, max_power)), 0);
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    BigIntMatrix l = BigIntMatrix::from_sparse(blocks[p]);
    const std::size_t n = l.rows();
    // sparse rows of L for repeated products
    std::vector<std::vector<std::pair<std::size_t, BigInt>>> cols(n);
    for (const Triplet& t : blocks[p].triplets()) cols[t.col].emplace_back(t.row, BigInt(static_cast<long>(t.value)));
    BigIntMatrix power = l;
    for (int k = 1; k <= max_power; ++k) {
      BigInt tr = 0;
      for (std::size_t i = 0; i < n; ++i) tr += power(i, i);
      if (p % 2) out[k - 1] -= tr; else out[k - 1] += tr;
      if (k == max_power) break;
      BigIntMatrix next(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          BigInt s = 0;
          for (const auto& [r, v] : cols[j]) s += power(i, r) * v;
          next(i, j) = s;
        }
      power = std::move(next);
    }
  }
  return out;
}

WaveState wave_evolve(const SparseIntMatrix& dirac, const Eigen::VectorXd& u0, const Eigen::VectorXd& v0, double t) {
  const long n = static_cast<long>(dirac.rows());
  if (u0.size() != n || v0.size() != n) throw Error("wave state has the wrong dimension");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense(dirac));
  const Eigen::VectorXd& lam = solver.eigenvalues();
  const Eigen::MatrixXd& q = solver.eigenvectors();
  double norm = lam.cwiseAbs().maxCoeff();
  const double zero = 1e-9 * (1 + norm);
  Eigen::VectorXd a = q.transpose() * u0, b = q.transpose() * v0;
  Eigen::VectorXd pos(n), vel(n);
  for (long i = 0; i < n; ++i) {
    double l = lam(i);
    if (std::abs(l) <= zero) {
      pos(i) = a(i);  // pseudo-inverse drops the kernel part of v0
      vel(i) = 0;
    } else {
      pos(i) = std::cos(l * t) * a(i) + std::sin(l * t) / l * b(i);
      vel(i) = -l * std::sin(l * t) * a(i) + std::cos(l * t) * b(i);
    }
  }
  WaveState s;
  s.time = t;
  s.position = q * pos;
  s.velocity = q * vel;
  return s;
}

double wave_energy(const SparseIntMatrix& dirac, const WaveState& s) {
  Eigen::VectorXd du = dense(dirac) * s.position;
  return s.velocity.squaredNorm() + du.squaredNorm();
}

std::vector<int> grading_of(const DiracLaplacian& dl) {
  std::vector<int> g;
  for (std::size_t p = 0; p + 1 < dl.offsets.size(); ++p)
    for (std::size_t i = dl.offsets[p]; i < dl.offsets[p + 1]; ++i) g.push_back(static_cast<int>(p));
  return g;
}

namespace {

struct Split {
  Eigen::MatrixXcd raising, diagonal;
};

Split split(const Eigen::MatrixXcd& d, const std::vector<int>& grading) {
  const long n = d.rows();
  Split s{Eigen::MatrixXcd::Zero(n, n), Eigen::MatrixXcd::Zero(n, n)};
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) {
      if (grading[r] == grading[c] + 1) s.raising(r, c) = d(r, c);
      else if (grading[r] == grading[c]) s.diagonal(r, c) = d(r, c);
    }
  return s;
}

Eigen::MatrixXcd lax_field(const Eigen::MatrixXcd& d, const std::vector<int>& grading, LaxMode mode) {
  Split s = split(d, grading);
  Eigen::MatrixXcd b = s.raising - s.raising.adjoint();
  if (mode == LaxMode::complex) b -= std::complex<double>(0, 1) * s.diagonal;
  return b * d - d * b;
}

std::vector<double> hermitian_spectrum(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

DeformationTrajectory lax_deform(const SparseIntMatrix& dirac, const std::vector<int>& grading, LaxMode mode,
                                 double t_max, double dt, double tol, std::size_t samples) {
  if (dt <= 0) throw Error("time step must be positive");
  if (t_max < 0) throw Error("final time must be non-negative");
  if (grading.size() != dirac.rows()) throw Error("grading has the wrong length");
  DeformationTrajectory traj;
  traj.grading = grading;
  Eigen::MatrixXcd d = dense(dirac).cast<std::complex<double>>();
  const std::vector<double> initial = hermitian_spectrum(d);
  for (double x : initial) traj.norm = std::max(traj.norm, std::abs(x));
  const double allowed = tol * std::max(1.0, traj.norm);

  const std::size_t steps = static_cast<std::size_t>(std::ceil(t_max / dt - 1e-12));
  const std::size_t every = std::max<std::size_t>(1, steps / std::max<std::size_t>(1, samples));
  double time = 0;
  auto record = [&] {
    std::vector<double> ev = hermitian_spectrum(d);
    for (std::size_t i = 0; i < ev.size(); ++i) traj.max_drift = std::max(traj.max_drift, std::abs(ev[i] - initial[i]));
    Split s = split(d, grading);
    traj.max_d_squared = std::max(traj.max_d_squared, (s.raising * s.raising).cwiseAbs().maxCoeff());
    traj.max_asymmetry = std::max(traj.max_asymmetry, (d - d.adjoint()).cwiseAbs().maxCoeff());
    traj.states.push_back({time, d});
    traj.spectra.push_back(std::move(ev));
    if (traj.max_drift > 10 * allowed)
      throw Error("integration failure: spectral drift " + std::to_string(traj.max_drift) + " at t=" +
                  std::to_string(time) + "; use a smaller time step");
  };
  if (d.rows() == 0) {
    traj.states.push_back({0, d});
    traj.spectra.emplace_back();
    return traj;
  }
  record();
  for (std::size_t step = 1; step <= steps; ++step) {
    const double h = std::min(dt, t_max - time);
    Eigen::MatrixXcd k1 = lax_field(d, grading, mode);
    Eigen::MatrixXcd k2 = lax_field(d + 0.5 * h * k1, grading, mode);
    Eigen::MatrixXcd k3 = lax_field(d + 0.5 * h * k2, grading, mode);
    Eigen::MatrixXcd k4 = lax_field(d + h * k3, grading, mode);
    d += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    time += h;
    if (step % every == 0 || step == steps) record();
  }
  return traj;
}

void write_trajectory_csv(std::ostream& out, const DeformationTrajectory& traj) {
  out << "time";
  const std::size_t n = traj.spectra.empty() ? 0 : traj.spectra[0].size();
  for (std::size_t i = 0; i < n; ++i) out << ",lambda" << i;
  out << '\n';
  out.precision(12);
  for (std::size_t s = 0; s < traj.states.size(); ++s) {
    out << traj.states[s].time;
    for (double x : traj.spectra[s]) out << ',' << x;
    out << '\n';
  }
}

}  // namespace wucalc
