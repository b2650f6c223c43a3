#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>

namespace cosmosim {

/// A tensor product of single-qubit Pauli operators with a real weight.
/// Character 0 of the word acts on qubit 0, which is the leftmost ket symbol
/// and the most significant bit of a basis index.
struct PauliString {
  std::string word;    // over {I, X, Y, Z}
  double coeff = 1.0;  // weight of the string in a Hamiltonian sum
};

/// 2x2 matrix of a single Pauli label.
Eigen::Matrix2cd pauli_matrix(char p);

/// factors[0] x factors[1] x ... as a dense matrix; factors[0] acts on
/// qubit 0, the most significant index bit.
Eigen::MatrixXcd kron_qubit_factors(const std::vector<Eigen::Matrix2cd>& factors);

/// Dense 2^n x 2^n matrix of a Pauli word (qubit 0 most significant).
Eigen::MatrixXcd pauli_string_matrix(std::string_view word);

/// Action of a Pauli word on computational basis states: basis index b maps
/// to |perm[b]> with amplitude phase[b]. Lets channels apply P rho P in
/// O(4^n) instead of dense multiplication.
struct PauliAction {
  std::vector<Eigen::Index> perm;
  std::vector<std::complex<double>> phase;
};
PauliAction pauli_action(std::string_view word);

}  // namespace cosmosim
