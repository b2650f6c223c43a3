#include "cosmosim/exact_evolution.hpp"

#include <cmath>
#include <stdexcept>

#include "cosmosim/pauli.hpp"

namespace cosmosim {

namespace {

using Complex = std::complex<double>;

// Ladder matrices on one qubit; |1> marks an excited mode qubit.
Eigen::Matrix2cd qubit_raise() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(1, 0) = 1.0;
  return m;
}

Eigen::Matrix2cd qubit_lower() { return qubit_raise().adjoint(); }

double lookup(const std::map<std::string, double>& expvals,
              const std::string& four, const std::string& two) {
  if (auto it = expvals.find(four); it != expvals.end()) return it->second;
  if (auto it = expvals.find(two); it != expvals.end()) return it->second;
  throw std::invalid_argument("fidelity_first_order: missing expectation value " + four);
}

}  // namespace

Eigen::MatrixXcd interaction_hamiltonian(const CosmologyParams& params) {
  validate(params);
  const BogoliubovPair bog = bogoliubov(params);
  const ModeFrequencies freqs = frequencies(params);
  const Complex coupling = 2.0 * freqs.omega_out * bog.alpha * std::conj(bog.beta);

  // Mode creation: raise the mode's first qubit, lower its second.
  // a+^dag a-^dag acts as |1010><0101| on the register.
  const Eigen::Matrix2cd r = qubit_raise();
  const Eigen::Matrix2cd l = qubit_lower();
  const Eigen::MatrixXcd pair_create = kron_qubit_factors({r, l, r, l});

  Eigen::MatrixXcd h = coupling * pair_create;
  h += h.adjoint().eval();
  return h;
}

StateVector exact_oracle_state(const CosmologyParams& params) {
  const Eigen::MatrixXcd h = interaction_hamiltonian(params);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases[i] = std::exp(Complex(0.0, -es.eigenvalues()[i] * params.t));
  }
  const Eigen::MatrixXcd u =
      es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

  StateVector state = init_state(4, "0101");
  state.amplitudes = u * state.amplitudes;
  return state;
}

DensityMatrix theoretical_reduced_state(const CosmologyParams& params) {
  const Eigen::MatrixXcd h = interaction_hamiltonian(params);
  StateVector vacuum = init_state(4, "0101");
  const Eigen::VectorXcd h_psi = h * vacuum.amplitudes;
  Eigen::VectorXcd psi = vacuum.amplitudes -
                         Complex(0.0, params.t) * h_psi -
                         0.5 * params.t * params.t * (h * h_psi);
  psi /= psi.norm();

  StateVector expanded;
  expanded.n_qubits = 4;
  expanded.amplitudes = psi;
  return partial_trace_mode(expanded, ModeSelection::Second);
}

double fidelity_first_order(const std::map<std::string, double>& expvals,
                            const CosmologyParams& params) {
  const double iz = lookup(expvals, "IIIZ", "IZ");
  const double zi = lookup(expvals, "IIZI", "ZI");
  const double zz = lookup(expvals, "IIZZ", "ZZ");

  const BogoliubovPair bog = bogoliubov(params);
  const ModeFrequencies freqs = frequencies(params);
  const double coupling =
      std::abs(bog.alpha) * std::abs(bog.beta) * freqs.omega_out * params.t;

  const double radicand =
      std::max((1.0 - zz) * (1.0 - zz) - (iz - zi) * (iz - zi), 0.0);
  return 0.25 * (1.0 - iz + zi - zz) + std::sqrt(radicand) * coupling;
}

}  // namespace cosmosim
