#pragma once

#include <string_view>

#include "cosmosim/circuit.hpp"
#include "cosmosim/density_matrix.hpp"

namespace cosmosim {

/// Per-gate depolarizing probabilities: eps1 after every one-qubit gate,
/// eps2 after every Cnot, each acting on the gate's support.
struct NoiseModel {
  double eps1 = 0.0;
  double eps2 = 0.0;
};

/// Throws std::invalid_argument unless both probabilities lie in [0, 1).
void validate(const NoiseModel& noise);

/// Density-matrix evolution of the circuit from a computational basis state.
/// Every ideal gate unitary is followed by a depolarizing channel on its
/// support:
///   one qubit:  rho -> (1 - e1) rho + (e1/3) (X rho X + Y rho Y + Z rho Z)
///   two qubits: rho -> (1 - e2) rho + (e2/15) sum_{P != II} P rho P
DensityMatrix run_noisy(const Circuit& c, std::string_view initial_bitstring,
                        const NoiseModel& noise);

}  // namespace cosmosim
