#pragma once

#include <vector>

namespace cosmosim {

enum class GateKind { X, S, Sdg, RX, RZ, Cnot };

/// One elementary gate. q0 is the acted-on qubit (the control for Cnot,
/// where q1 is the target). angle is used by RX/RZ only.
struct Gate {
  GateKind kind;
  int q0 = 0;
  int q1 = -1;
  double angle = 0.0;

  static Gate x(int q) { return {GateKind::X, q}; }
  static Gate s(int q) { return {GateKind::S, q}; }
  static Gate sdg(int q) { return {GateKind::Sdg, q}; }
  static Gate rx(int q, double a) { return {GateKind::RX, q, -1, a}; }
  static Gate rz(int q, double a) { return {GateKind::RZ, q, -1, a}; }
  static Gate cnot(int control, int target) {
    return {GateKind::Cnot, control, target};
  }
};

/// Gates apply to a state in list order (gates.front() first).
struct Circuit {
  int n_qubits = 4;
  std::vector<Gate> gates;

  explicit Circuit(int n = 4) : n_qubits(n) {}

  /// Appends after validating qubit indices and angle finiteness.
  void push(const Gate& g);

  int one_qubit_count() const;
  int two_qubit_count() const;
};

/// Inverse of a single gate (S <-> Sdg, rotations negate, X/Cnot self-inverse).
Gate inverse(const Gate& g);

/// Gate-by-gate inverse in reverse order.
Circuit inverse(const Circuit& c);

/// Peephole cleanup removing adjacent mutually-inverse gate pairs
/// (S Sdg, Cnot Cnot, X X, RX(a) RX(-a), ...) until a fixpoint. Off by
/// default everywhere; collapsing those pairs changes the gate counts.
Circuit cancel_adjacent_inverses(const Circuit& c);

}  // namespace cosmosim
