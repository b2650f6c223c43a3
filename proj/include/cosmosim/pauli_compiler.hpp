#pragma once

#include <utility>
#include <vector>

#include "cosmosim/circuit.hpp"
#include "cosmosim/cosmology.hpp"
#include "cosmosim/pauli.hpp"

namespace cosmosim {

/// The eight even-Y words (real quadrature) and eight odd-Y words (imaginary
/// quadrature) of the pair-creation Hamiltonian, with their signs. Together
/// with the weights below they satisfy
///   sum_A s_j P_j + i sum_B s_j P_j == 16 |1010><0101|.
const std::vector<PauliString>& real_quadrature_terms();
const std::vector<PauliString>& imag_quadrature_terms();

/// Rotation angles of the sixteen Pauli exponentials exp(-i angle P) whose
/// ordered product realizes the interaction evolution
/// exp(-i t H) with H = (omega_out/4) (Re(ab*) A - Im(ab*) B).
/// Real-quadrature terms come first, each angle carrying its word's sign.
std::vector<std::pair<PauliString, double>> hamiltonian_terms(
    const BogoliubovPair& bog, const ModeFrequencies& freqs, double t);

/// Compiles exp(-i angle P) for a weight-4 word over {X, Y} into
/// {S, Sdg, RX, Cnot} gates: S-layer basis changes for the Y positions, a
/// Cnot ladder anchored on qubit 0 with interleaved S gates, and one central
/// RX on qubit 0 carrying +-2*angle. Exactly six Cnots, unitary exact up to
/// global phase. Throws std::invalid_argument for words containing I or Z.
Circuit compile_pauli_exponential(const PauliString& p, double angle);

/// Full evolution circuit: X gates on qubits 1 and 3 preparing the vacuum
/// |0101> from |0000>, then the sixteen compiled exponentials in term order.
/// 96 two-qubit and 146 one-qubit gates.
Circuit build_evolution_circuit(const CosmologyParams& params);

}  // namespace cosmosim
