#include "cosmosim/density_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cosmosim {

namespace {

constexpr double kPsdTolerance = 1e-9;

void check_density(const DensityMatrix& rho) {
  if (rho.entries.rows() != rho.entries.cols()) {
    throw std::invalid_argument("fidelity: density matrix must be square");
  }
  const double herm_dev =
      (rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > 1e-8) {
    throw std::invalid_argument("fidelity: input is not Hermitian");
  }
  if (std::abs(rho.entries.trace().real() - 1.0) > 1e-6) {
    throw std::invalid_argument("fidelity: input trace is not 1");
  }
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  Eigen::VectorXd ev = es.eigenvalues();
  // Eigenvalues of rank-deficient states carry O(eps) rounding noise whose
  // square root would dominate the result; snap them to zero.
  const double cutoff = 1e-12 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < -kPsdTolerance) {
      throw std::invalid_argument("fidelity: input is not positive semidefinite");
    }
    ev[i] = ev[i] < cutoff ? 0.0 : std::sqrt(ev[i]);
  }
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

DensityMatrix density_from_state(const StateVector& state) {
  DensityMatrix rho;
  rho.entries = state.amplitudes * state.amplitudes.adjoint();
  return rho;
}

namespace {

DensityMatrix reduce(const Eigen::MatrixXcd& full, ModeSelection keep) {
  if (full.rows() != 16) {
    throw std::invalid_argument("partial_trace_mode: expects a 4-qubit state");
  }
  DensityMatrix out;
  out.entries = Eigen::MatrixXcd::Zero(4, 4);
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      std::complex<double> sum = 0.0;
      for (Eigen::Index a = 0; a < 4; ++a) {
        // Qubits (0,1) are the two most significant index bits.
        if (keep == ModeSelection::Second) {
          sum += full(a * 4 + i, a * 4 + j);
        } else {
          sum += full(i * 4 + a, j * 4 + a);
        }
      }
      out.entries(i, j) = sum;
    }
  }
  return out;
}

}  // namespace

DensityMatrix partial_trace_mode(const StateVector& state, ModeSelection keep) {
  return reduce(state.amplitudes * state.amplitudes.adjoint(), keep);
}

DensityMatrix partial_trace_mode(const DensityMatrix& rho, ModeSelection keep) {
  return reduce(rho.entries, keep);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  check_density(rho);
  check_density(sigma);
  // Tr sqrt(sqrt(rho) sigma sqrt(rho)) equals the trace norm of
  // sqrt(sigma) sqrt(rho); summing singular values sidesteps the
  // sqrt-of-rounding-noise that the eigenvalue route picks up on
  // rank-deficient states.
  const Eigen::MatrixXcd product = psd_sqrt(sigma.entries) * psd_sqrt(rho.entries);
  const double trace_norm = product.jacobiSvd().singularValues().sum();
  return trace_norm * trace_norm;
}

double expectation(const DensityMatrix& rho, const ObservableString& obs) {
  const int n_qubits = static_cast<int>(obs.word.size());
  if ((Eigen::Index{1} << n_qubits) != rho.dim()) {
    throw std::invalid_argument("expectation: observable length mismatch");
  }
  Eigen::Index mask = 0;
  for (int q = 0; q < n_qubits; ++q) {
    if (obs.word[static_cast<std::size_t>(q)] == 'Z') {
      mask |= Eigen::Index{1} << (n_qubits - 1 - q);
    }
  }
  double value = 0.0;
  for (Eigen::Index b = 0; b < rho.dim(); ++b) {
    const double sign =
        (std::popcount(static_cast<std::uint64_t>(b & mask)) % 2 == 0) ? 1.0 : -1.0;
    value += sign * rho.entries(b, b).real();
  }
  return value;
}

double particle_number(const DensityMatrix& rho) {
  if (rho.dim() != 16) {
    throw std::invalid_argument("particle_number: expects a 4-qubit state");
  }
  return particle_number_from_expectations(
      [&](const ObservableString& obs) { return expectation(rho, obs); });
}

double expectation_sampled(const DensityMatrix& rho, const ObservableString& obs,
                           int shots, std::uint64_t seed) {
  if (shots <= 0) {
    throw std::invalid_argument("expectation_sampled: shots must be positive");
  }
  const int n_qubits = static_cast<int>(obs.word.size());
  Eigen::Index mask = 0;
  for (int q = 0; q < n_qubits; ++q) {
    if (obs.word[static_cast<std::size_t>(q)] == 'Z') {
      mask |= Eigen::Index{1} << (n_qubits - 1 - q);
    }
  }
  std::vector<double> cdf(static_cast<std::size_t>(rho.dim()));
  double acc = 0.0;
  for (Eigen::Index b = 0; b < rho.dim(); ++b) {
    acc += std::max(rho.entries(b, b).real(), 0.0);
    cdf[static_cast<std::size_t>(b)] = acc;
  }
  std::mt19937_64 rng(seed);
  double total = 0.0;
  for (int s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const Eigen::Index b = it == cdf.end()
                               ? rho.dim() - 1
                               : static_cast<Eigen::Index>(it - cdf.begin());
    const double sign =
        (std::popcount(static_cast<std::uint64_t>(b & mask)) % 2 == 0) ? 1.0 : -1.0;
    total += sign;
  }
  return total / shots;
}

}  // namespace cosmosim
