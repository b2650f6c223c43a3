#include "cosmosim/qasm.hpp"

#include <cstdio>
#include <stdexcept>

namespace cosmosim {

namespace {

std::string format_angle(double a) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.16e", a);
  return buf;
}

}  // namespace

std::string export_qasm(const Circuit& c) {
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.n_qubits) + "];\n";
  for (const Gate& g : c.gates) {
    const std::string q0 = "q[" + std::to_string(g.q0) + "]";
    switch (g.kind) {
      case GateKind::X: out += "x " + q0 + ";\n"; break;
      case GateKind::S: out += "s " + q0 + ";\n"; break;
      case GateKind::Sdg: out += "sdg " + q0 + ";\n"; break;
      case GateKind::RX: out += "rx(" + format_angle(g.angle) + ") " + q0 + ";\n"; break;
      case GateKind::RZ: out += "rz(" + format_angle(g.angle) + ") " + q0 + ";\n"; break;
      case GateKind::Cnot:
        out += "cx " + q0 + ",q[" + std::to_string(g.q1) + "];\n";
        break;
      default:
        throw std::logic_error("export_qasm: unknown gate kind");
    }
  }
  return out;
}

}  // namespace cosmosim
