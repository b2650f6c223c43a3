#include "cosmosim/noise.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "cosmosim/pauli.hpp"

namespace cosmosim {

void validate(const NoiseModel& noise) {
  if (!(noise.eps1 >= 0.0 && noise.eps1 < 1.0) ||
      !(noise.eps2 >= 0.0 && noise.eps2 < 1.0)) {
    throw std::invalid_argument("NoiseModel: probabilities must lie in [0, 1)");
  }
}

namespace {

// rho -> U rho U^dag using the one/two-qubit state kernel on columns, then
// on rows via the adjoint trick.
void conjugate_gate(Eigen::MatrixXcd& rho, const Gate& g, int n_qubits) {
  StateVector column;
  column.n_qubits = n_qubits;
  for (Eigen::Index j = 0; j < rho.cols(); ++j) {
    column.amplitudes = rho.col(j);
    apply_gate(column, g);
    rho.col(j) = column.amplitudes;
  }
  rho.adjointInPlace();
  for (Eigen::Index j = 0; j < rho.cols(); ++j) {
    column.amplitudes = rho.col(j);
    apply_gate(column, g);
    rho.col(j) = column.amplitudes;
  }
  rho.adjointInPlace();
}

// out(perm[a], perm[b]) += w phase[a] conj(phase[b]) rho(a, b), i.e. the
// weighted Pauli sandwich P rho P accumulated in O(dim^2).
void accumulate_sandwich(Eigen::MatrixXcd& out, const Eigen::MatrixXcd& rho,
                         const PauliAction& act, double w) {
  const Eigen::Index dim = rho.rows();
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (Eigen::Index a = 0; a < dim; ++a) {
      out(act.perm[a], act.perm[b]) +=
          w * act.phase[a] * std::conj(act.phase[b]) * rho(a, b);
    }
  }
}

std::string support_word(int n_qubits, std::initializer_list<std::pair<int, char>> ps) {
  std::string word(static_cast<std::size_t>(n_qubits), 'I');
  for (auto [q, p] : ps) word[static_cast<std::size_t>(q)] = p;
  return word;
}

}  // namespace

DensityMatrix run_noisy(const Circuit& c, std::string_view initial_bitstring,
                        const NoiseModel& noise) {
  validate(noise);
  const StateVector init = init_state(c.n_qubits, initial_bitstring);
  DensityMatrix rho = density_from_state(init);

  // Pauli actions per support, built once per call.
  std::map<int, std::vector<PauliAction>> one_qubit_paulis;
  std::map<std::pair<int, int>, std::vector<PauliAction>> two_qubit_paulis;
  const char paulis[3] = {'X', 'Y', 'Z'};

  for (const Gate& g : c.gates) {
    conjugate_gate(rho.entries, g, c.n_qubits);
    if (g.kind == GateKind::Cnot) {
      if (noise.eps2 == 0.0) continue;
      auto& actions = two_qubit_paulis[{g.q0, g.q1}];
      if (actions.empty()) {
        for (char p : paulis)
          actions.push_back(pauli_action(support_word(c.n_qubits, {{g.q0, p}})));
        for (char p : paulis)
          actions.push_back(pauli_action(support_word(c.n_qubits, {{g.q1, p}})));
        for (char p : paulis)
          for (char q : paulis)
            actions.push_back(
                pauli_action(support_word(c.n_qubits, {{g.q0, p}, {g.q1, q}})));
      }
      Eigen::MatrixXcd mixed = (1.0 - noise.eps2) * rho.entries;
      for (const PauliAction& act : actions) {
        accumulate_sandwich(mixed, rho.entries, act, noise.eps2 / 15.0);
      }
      rho.entries = std::move(mixed);
    } else {
      if (noise.eps1 == 0.0) continue;
      auto& actions = one_qubit_paulis[g.q0];
      if (actions.empty()) {
        for (char p : paulis)
          actions.push_back(pauli_action(support_word(c.n_qubits, {{g.q0, p}})));
      }
      Eigen::MatrixXcd mixed = (1.0 - noise.eps1) * rho.entries;
      for (const PauliAction& act : actions) {
        accumulate_sandwich(mixed, rho.entries, act, noise.eps1 / 3.0);
      }
      rho.entries = std::move(mixed);
    }
  }
  return rho;
}

}  // namespace cosmosim
