#pragma once

#include <Eigen/Dense>

#include "cosmosim/statevector.hpp"

namespace cosmosim {

/// Mixed state over 2^n basis states. Valid instances are Hermitian with
/// unit trace and eigenvalues >= -1e-9.
struct DensityMatrix {
  Eigen::MatrixXcd entries;

  Eigen::Index dim() const { return entries.rows(); }
};

/// |psi><psi| of a pure state.
DensityMatrix density_from_state(const StateVector& state);

/// Which qubit pair of the 4-qubit register to keep when reducing to a
/// single mode: first = qubits (0, 1), second = qubits (2, 3).
enum class ModeSelection { First, Second };

/// 4x4 reduced state of the kept mode.
DensityMatrix partial_trace_mode(const StateVector& state, ModeSelection keep);
DensityMatrix partial_trace_mode(const DensityMatrix& rho, ModeSelection keep);

/// Uhlmann fidelity F(rho, sigma) = Tr^2 sqrt(sqrt(rho) sigma sqrt(rho)),
/// computed by Hermitian eigendecomposition with eigenvalues clamped at zero.
/// Throws std::invalid_argument when an input is non-positive beyond the
/// 1e-9 tolerance or the dimensions differ.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// <word> = Tr(P rho) for a word over {I, Z}.
double expectation(const DensityMatrix& rho, const ObservableString& obs);

/// Second-mode particle number from the seven-observable reconstruction.
double particle_number(const DensityMatrix& rho);

/// Multinomial shot estimate of <word> from the diagonal of rho.
double expectation_sampled(const DensityMatrix& rho, const ObservableString& obs,
                           int shots, std::uint64_t seed);

}  // namespace cosmosim
