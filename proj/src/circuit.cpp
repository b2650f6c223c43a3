#include "cosmosim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cosmosim {

namespace {

bool touches(const Gate& g, int q) {
  return g.q0 == q || (g.kind == GateKind::Cnot && g.q1 == q);
}

bool overlap(const Gate& a, const Gate& b) {
  if (touches(b, a.q0)) return true;
  return a.kind == GateKind::Cnot && touches(b, a.q1);
}

bool are_inverse(const Gate& a, const Gate& b) {
  if (a.q0 != b.q0) return false;
  switch (a.kind) {
    case GateKind::X: return b.kind == GateKind::X;
    case GateKind::S: return b.kind == GateKind::Sdg;
    case GateKind::Sdg: return b.kind == GateKind::S;
    case GateKind::RX: return b.kind == GateKind::RX && b.angle == -a.angle;
    case GateKind::RZ: return b.kind == GateKind::RZ && b.angle == -a.angle;
    case GateKind::Cnot: return b.kind == GateKind::Cnot && b.q1 == a.q1;
  }
  return false;
}

}  // namespace

void Circuit::push(const Gate& g) {
  auto check_index = [this](int q) {
    if (q < 0 || q >= n_qubits) {
      throw std::invalid_argument("Circuit: qubit index out of range");
    }
  };
  check_index(g.q0);
  if (g.kind == GateKind::Cnot) {
    check_index(g.q1);
    if (g.q0 == g.q1) {
      throw std::invalid_argument("Circuit: Cnot control equals target");
    }
  }
  if ((g.kind == GateKind::RX || g.kind == GateKind::RZ) && !std::isfinite(g.angle)) {
    throw std::invalid_argument("Circuit: rotation angle must be finite");
  }
  gates.push_back(g);
}

int Circuit::one_qubit_count() const {
  return static_cast<int>(std::count_if(gates.begin(), gates.end(), [](const Gate& g) {
    return g.kind != GateKind::Cnot;
  }));
}

int Circuit::two_qubit_count() const {
  return static_cast<int>(gates.size()) - one_qubit_count();
}

Gate inverse(const Gate& g) {
  switch (g.kind) {
    case GateKind::S: return Gate::sdg(g.q0);
    case GateKind::Sdg: return Gate::s(g.q0);
    case GateKind::RX: return Gate::rx(g.q0, -g.angle);
    case GateKind::RZ: return Gate::rz(g.q0, -g.angle);
    case GateKind::X:
    case GateKind::Cnot: return g;
  }
  throw std::logic_error("inverse: unknown gate kind");
}

Circuit inverse(const Circuit& c) {
  Circuit inv(c.n_qubits);
  inv.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    inv.gates.push_back(inverse(*it));
  }
  return inv;
}

Circuit cancel_adjacent_inverses(const Circuit& c) {
  std::vector<Gate> gates = c.gates;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < gates.size() && !changed; ++i) {
      // The cancellation partner is the next gate whose support overlaps;
      // gates on disjoint qubits commute past each other.
      for (std::size_t j = i + 1; j < gates.size(); ++j) {
        if (!overlap(gates[i], gates[j])) continue;
        if (are_inverse(gates[i], gates[j])) {
          gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j));
          gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        }
        break;
      }
    }
  }
  Circuit out(c.n_qubits);
  out.gates = std::move(gates);
  return out;
}

}  // namespace cosmosim
