#include <doctest.h>

#include <random>

#include "cosmosim/circuit.hpp"
#include "cosmosim/qasm.hpp"
#include "cosmosim/statevector.hpp"
#include "test_helpers.hpp"

using namespace cosmosim;

namespace {

Circuit random_circuit(int n_gates, std::mt19937_64& rng) {
  Circuit c(4);
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<int> qubit(0, 3);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  while (static_cast<int>(c.gates.size()) < n_gates) {
    const int q = qubit(rng);
    switch (kind(rng)) {
      case 0: c.push(Gate::x(q)); break;
      case 1: c.push(Gate::s(q)); break;
      case 2: c.push(Gate::sdg(q)); break;
      case 3: c.push(Gate::rx(q, angle(rng))); break;
      case 4: c.push(Gate::rz(q, angle(rng))); break;
      default: {
        const int t = (q + 1 + qubit(rng) % 3) % 4;
        c.push(Gate::cnot(q, t));
        break;
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("push rejects malformed gates") {
  Circuit c(4);
  CHECK_THROWS_AS(c.push(Gate::x(4)), std::invalid_argument);
  CHECK_THROWS_AS(c.push(Gate::x(-1)), std::invalid_argument);
  CHECK_THROWS_AS(c.push(Gate::cnot(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(c.push(Gate::rx(0, std::nan(""))), std::invalid_argument);
  CHECK(c.gates.empty());
}

TEST_CASE("gate counts split by arity") {
  Circuit c(4);
  c.push(Gate::x(0));
  c.push(Gate::cnot(0, 1));
  c.push(Gate::rx(2, 0.5));
  CHECK(c.one_qubit_count() == 2);
  CHECK(c.two_qubit_count() == 1);
}

TEST_CASE("a circuit composed with its inverse is the identity") {
  std::mt19937_64 rng(11);
  Circuit c = random_circuit(24, rng);
  Circuit roundtrip = c;
  const Circuit inv = inverse(c);
  roundtrip.gates.insert(roundtrip.gates.end(), inv.gates.begin(), inv.gates.end());
  const Eigen::MatrixXcd u = circuit_unitary(roundtrip);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(16, 16);
  CHECK(testutil::phase_aligned_distance(u, id) <= 1e-12);
}

TEST_CASE("peephole pass removes inverse pairs without changing the unitary") {
  Circuit c(4);
  c.push(Gate::s(0));
  c.push(Gate::sdg(0));
  c.push(Gate::cnot(0, 1));
  c.push(Gate::cnot(0, 1));
  c.push(Gate::x(2));
  const Circuit reduced = cancel_adjacent_inverses(c);
  CHECK(reduced.gates.size() == 1);
  CHECK(reduced.gates[0].kind == GateKind::X);

  std::mt19937_64 rng(12);
  const Circuit r = random_circuit(30, rng);
  CHECK(testutil::phase_aligned_distance(circuit_unitary(cancel_adjacent_inverses(r)),
                                         circuit_unitary(r)) <= 1e-12);
}

TEST_CASE("qasm export") {
  Circuit empty(4);
  const std::string header = export_qasm(empty);
  CHECK(header == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[4];\n");

  Circuit one(4);
  one.push(Gate::x(1));
  const std::string text = export_qasm(one);
  CHECK(text.find("x q[1];\n") != std::string::npos);
  CHECK(text.find("cx") == std::string::npos);

  Circuit mixed(4);
  mixed.push(Gate::rx(0, 0.25));
  mixed.push(Gate::rz(3, -1.0));
  mixed.push(Gate::cnot(0, 3));
  mixed.push(Gate::sdg(2));
  const std::string body = export_qasm(mixed);
  CHECK(body.find("rx(2.5000000000000000e-01) q[0];\n") != std::string::npos);
  CHECK(body.find("rz(-1.0000000000000000e+00) q[3];\n") != std::string::npos);
  CHECK(body.find("cx q[0],q[3];\n") != std::string::npos);
  CHECK(body.find("sdg q[2];\n") != std::string::npos);

  CHECK(export_qasm(mixed) == body);  // deterministic
}
