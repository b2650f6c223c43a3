#include "cosmosim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cosmosim {

namespace {

using Complex = std::complex<double>;

Eigen::Matrix2cd single_qubit_matrix(const Gate& g) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (g.kind) {
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::S: m << 1, 0, 0, i; break;
    case GateKind::Sdg: m << 1, 0, 0, -i; break;
    case GateKind::RX: {
      const double h = 0.5 * g.angle;
      m << std::cos(h), -i * std::sin(h), -i * std::sin(h), std::cos(h);
      break;
    }
    case GateKind::RZ: {
      const double h = 0.5 * g.angle;
      m << std::exp(-i * h), 0, 0, std::exp(i * h);
      break;
    }
    default:
      throw std::logic_error("single_qubit_matrix: not a one-qubit gate");
  }
  return m;
}

Eigen::Index bit_of(int qubit, int n_qubits) {
  return Eigen::Index{1} << (n_qubits - 1 - qubit);
}

}  // namespace

ObservableString::ObservableString(std::string w) : word(std::move(w)) {
  for (char ch : word) {
    if (ch != 'I' && ch != 'Z') {
      throw std::invalid_argument("ObservableString: word must be over {I, Z}");
    }
  }
}

StateVector init_state(int n_qubits, std::string_view bitstring) {
  if (n_qubits <= 0 || bitstring.size() != static_cast<std::size_t>(n_qubits)) {
    throw std::invalid_argument("init_state: bitstring length must equal n_qubits");
  }
  Eigen::Index index = 0;
  for (char ch : bitstring) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("init_state: bitstring must be over {0, 1}");
    }
    index = (index << 1) | (ch == '1' ? 1 : 0);
  }
  StateVector state;
  state.n_qubits = n_qubits;
  state.amplitudes = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  state.amplitudes[index] = 1.0;
  return state;
}

void apply_gate(StateVector& state, const Gate& g) {
  Eigen::VectorXcd& amp = state.amplitudes;
  const Eigen::Index dim = amp.size();
  if (g.kind == GateKind::Cnot) {
    const Eigen::Index cbit = bit_of(g.q0, state.n_qubits);
    const Eigen::Index tbit = bit_of(g.q1, state.n_qubits);
    for (Eigen::Index b = 0; b < dim; ++b) {
      if ((b & cbit) && !(b & tbit)) {
        std::swap(amp[b], amp[b | tbit]);
      }
    }
    return;
  }
  const Eigen::Matrix2cd u = single_qubit_matrix(g);
  const Eigen::Index qbit = bit_of(g.q0, state.n_qubits);
  for (Eigen::Index b = 0; b < dim; ++b) {
    if (b & qbit) continue;
    const Complex a0 = amp[b];
    const Complex a1 = amp[b | qbit];
    amp[b] = u(0, 0) * a0 + u(0, 1) * a1;
    amp[b | qbit] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

StateVector run_circuit(const Circuit& c, StateVector initial) {
  if (c.n_qubits != initial.n_qubits) {
    throw std::invalid_argument("run_circuit: qubit count mismatch");
  }
  for (const Gate& g : c.gates) {
    apply_gate(initial, g);
  }
  return initial;
}

namespace {

Eigen::Index z_mask(const ObservableString& obs, int n_qubits) {
  if (obs.word.size() != static_cast<std::size_t>(n_qubits)) {
    throw std::invalid_argument("expectation: observable length mismatch");
  }
  Eigen::Index mask = 0;
  for (int q = 0; q < n_qubits; ++q) {
    if (obs.word[static_cast<std::size_t>(q)] == 'Z') {
      mask |= bit_of(q, n_qubits);
    }
  }
  return mask;
}

double parity_sign(Eigen::Index b, Eigen::Index mask) {
  return (std::popcount(static_cast<std::uint64_t>(b & mask)) % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

double expectation(const StateVector& state, const ObservableString& obs) {
  const Eigen::Index mask = z_mask(obs, state.n_qubits);
  double value = 0.0;
  for (Eigen::Index b = 0; b < state.amplitudes.size(); ++b) {
    value += parity_sign(b, mask) * std::norm(state.amplitudes[b]);
  }
  return value;
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> p(static_cast<std::size_t>(state.amplitudes.size()));
  for (Eigen::Index b = 0; b < state.amplitudes.size(); ++b) {
    p[static_cast<std::size_t>(b)] = std::norm(state.amplitudes[b]);
  }
  return p;
}

double particle_number_from_expectations(
    const std::function<double(const ObservableString&)>& expval) {
  return 0.125 * (1.0 + expval(ObservableString("IIIZ")) -
                  expval(ObservableString("IIZI")) -
                  expval(ObservableString("IIZZ")) -
                  expval(ObservableString("ZZII")) -
                  expval(ObservableString("ZZIZ")) +
                  expval(ObservableString("ZZZI")) +
                  expval(ObservableString("ZZZZ")));
}

double particle_number(const StateVector& state) {
  if (state.n_qubits != 4) {
    throw std::invalid_argument("particle_number: expects a 4-qubit state");
  }
  return particle_number_from_expectations(
      [&](const ObservableString& obs) { return expectation(state, obs); });
}

double expectation_sampled(const StateVector& state, const ObservableString& obs,
                           int shots, std::uint64_t seed) {
  if (shots <= 0) {
    throw std::invalid_argument("expectation_sampled: shots must be positive");
  }
  const Eigen::Index mask = z_mask(obs, state.n_qubits);
  const std::vector<double> probs = probabilities(state);
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t b = 0; b < probs.size(); ++b) {
    acc += probs[b];
    cdf[b] = acc;
  }
  // Inverse-CDF draws from mt19937_64 keep sampled sweeps reproducible
  // across standard libraries.
  std::mt19937_64 rng(seed);
  double total = 0.0;
  for (int s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const Eigen::Index b = it == cdf.end()
                               ? static_cast<Eigen::Index>(probs.size()) - 1
                               : static_cast<Eigen::Index>(it - cdf.begin());
    total += parity_sign(b, mask);
  }
  return total / shots;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits;
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    StateVector basis;
    basis.n_qubits = c.n_qubits;
    basis.amplitudes = Eigen::VectorXcd::Zero(dim);
    basis.amplitudes[col] = 1.0;
    u.col(col) = run_circuit(c, std::move(basis)).amplitudes;
  }
  return u;
}

}  // namespace cosmosim
