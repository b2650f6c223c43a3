#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>

#include "cosmosim/cosmology.hpp"
#include "cosmosim/density_matrix.hpp"
#include "cosmosim/statevector.hpp"

namespace cosmosim {

/// 16x16 interaction Hamiltonian in the qubit encoding: the pair-creation
/// ladder operator (sigma ladders on each mode's qubit pair) weighted by
/// 2 omega_out alpha beta*, plus its adjoint. Couples only |0101> <-> |1010>.
Eigen::MatrixXcd interaction_hamiltonian(const CosmologyParams& params);

/// Exact interaction-picture evolution of the vacuum |0101>, via Hermitian
/// eigendecomposition of the Hamiltonian. Reference for the compiled circuit.
StateVector exact_oracle_state(const CosmologyParams& params);

/// Reduced second-mode state of the second-order Taylor expansion of the
/// evolution applied to the vacuum (normalized). This is the fidelity target
/// the measured reduced states are compared against.
DensityMatrix theoretical_reduced_state(const CosmologyParams& params);

/// First-order fidelity estimate from the three second-mode observables,
///
///   F ~ 1/4 (1 - <IZ> + <ZI> - <ZZ>)
///       + sqrt((1 - <ZZ>)^2 - (<IZ> - <ZI>)^2) |alpha| |beta| omega_out t,
///
/// where <IZ>, <ZI>, <ZZ> are looked up under the 4-qubit keys
/// "IIIZ", "IIZI", "IIZZ" (or the bare two-qubit keys). A numerically
/// negative radicand is clamped to zero.
double fidelity_first_order(const std::map<std::string, double>& expvals,
                            const CosmologyParams& params);

}  // namespace cosmosim
