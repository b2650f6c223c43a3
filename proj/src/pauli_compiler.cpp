#include "cosmosim/pauli_compiler.hpp"

#include <stdexcept>

namespace cosmosim {

const std::vector<PauliString>& real_quadrature_terms() {
  static const std::vector<PauliString> terms = {
      {"XXXX", +1.0}, {"YYYY", +1.0}, {"XXYY", +1.0}, {"XYXY", -1.0},
      {"YXXY", +1.0}, {"XYYX", +1.0}, {"YXYX", -1.0}, {"YYXX", +1.0},
  };
  return terms;
}

const std::vector<PauliString>& imag_quadrature_terms() {
  static const std::vector<PauliString> terms = {
      {"XXXY", +1.0}, {"XXYX", -1.0}, {"XYXX", +1.0}, {"YXXX", -1.0},
      {"XYYY", +1.0}, {"YXYY", -1.0}, {"YYXY", +1.0}, {"YYYX", -1.0},
  };
  return terms;
}

std::vector<std::pair<PauliString, double>> hamiltonian_terms(
    const BogoliubovPair& bog, const ModeFrequencies& freqs, double t) {
  const std::complex<double> ab = bog.alpha * std::conj(bog.beta);
  const double base = 0.25 * freqs.omega_out * t;
  std::vector<std::pair<PauliString, double>> terms;
  terms.reserve(16);
  for (const PauliString& p : real_quadrature_terms()) {
    terms.emplace_back(p, p.coeff * base * ab.real());
  }
  for (const PauliString& p : imag_quadrature_terms()) {
    terms.emplace_back(p, -p.coeff * base * ab.imag());
  }
  return terms;
}

Circuit compile_pauli_exponential(const PauliString& p, double angle) {
  if (p.word.size() != 4) {
    throw std::invalid_argument("compile_pauli_exponential: word must have length 4");
  }
  std::vector<int> y_positions;
  for (int q = 0; q < 4; ++q) {
    if (p.word[static_cast<std::size_t>(q)] == 'Y') {
      y_positions.push_back(q);
    } else if (p.word[static_cast<std::size_t>(q)] != 'X') {
      throw std::invalid_argument(
          "compile_pauli_exponential: word must contain only X and Y");
    }
  }

  // Conjugating the central X0 through the ladder below yields
  // -X0 X1 X2 X3, and every S-layer swap of an X for a Y flips the sign
  // once more. The central angle absorbs the net sign.
  const double sign = (y_positions.size() % 2 == 0) ? -1.0 : 1.0;

  Circuit c(4);
  for (auto it = y_positions.rbegin(); it != y_positions.rend(); ++it) {
    c.push(Gate::s(*it));
  }
  c.push(Gate::cnot(0, 3));
  c.push(Gate::s(0));
  c.push(Gate::cnot(0, 2));
  c.push(Gate::s(0));
  c.push(Gate::cnot(0, 1));
  c.push(Gate::rx(0, 2.0 * angle * sign));
  c.push(Gate::cnot(0, 1));
  c.push(Gate::sdg(0));
  c.push(Gate::cnot(0, 2));
  c.push(Gate::sdg(0));
  c.push(Gate::cnot(0, 3));
  for (int q : y_positions) {
    c.push(Gate::sdg(q));
  }
  return c;
}

Circuit build_evolution_circuit(const CosmologyParams& params) {
  const BogoliubovPair bog = bogoliubov(params);
  const ModeFrequencies freqs = frequencies(params);

  Circuit c(4);
  c.push(Gate::x(1));
  c.push(Gate::x(3));
  for (const auto& [term, angle] : hamiltonian_terms(bog, freqs, params.t)) {
    const Circuit part = compile_pauli_exponential(term, angle);
    c.gates.insert(c.gates.end(), part.gates.begin(), part.gates.end());
  }
  return c;
}

}  // namespace cosmosim
