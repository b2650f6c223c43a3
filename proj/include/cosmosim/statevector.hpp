#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "cosmosim/circuit.hpp"

namespace cosmosim {

/// Pure state of n qubits. Basis index bit layout follows the ket notation
/// |q0 q1 ... q_{n-1}>: qubit 0 is the most significant bit, so |0101> on
/// four qubits sits at index 5.
struct StateVector {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;
};

/// Diagonal read-out observable: a word over {I, Z}, qubit 0 leftmost.
struct ObservableString {
  std::string word;
  explicit ObservableString(std::string w);
};

/// Computational basis state for a bitstring like "0101".
/// Throws std::invalid_argument on malformed input.
StateVector init_state(int n_qubits, std::string_view bitstring);

/// In-place application of one gate.
void apply_gate(StateVector& state, const Gate& g);

/// Applies the circuit's gates in order.
StateVector run_circuit(const Circuit& c, StateVector initial);

/// <word> = sum_b (+-1)^(parity of Z positions set in b) |amp_b|^2.
double expectation(const StateVector& state, const ObservableString& obs);

/// Basis-state probabilities |amp_b|^2.
std::vector<double> probabilities(const StateVector& state);

/// Particle number of the second mode, reconstructed from the seven Z-string
/// expectation values
///   (1/8) (1 + <IIIZ> - <IIZI> - <IIZZ> - <ZZII> - <ZZIZ> + <ZZZI> + <ZZZZ>)
/// which is the Pauli expansion of the projector sum P_1010 + P_0110.
double particle_number(const StateVector& state);

/// Same combination evaluated from a map of already-estimated expectation
/// values keyed by the seven 4-qubit words.
double particle_number_from_expectations(
    const std::function<double(const ObservableString&)>& expval);

/// Multinomial shot estimate of <word>, deterministic for a fixed seed.
double expectation_sampled(const StateVector& state, const ObservableString& obs,
                           int shots, std::uint64_t seed);

/// Dense unitary of a circuit, built by running it on every basis state.
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

}  // namespace cosmosim
