#include "cosmosim/pauli.hpp"

#include <stdexcept>

namespace cosmosim {

Eigen::Matrix2cd pauli_matrix(char p) {
  const std::complex<double> i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (p) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default:
      throw std::invalid_argument("pauli_matrix: label must be one of I,X,Y,Z");
  }
  return m;
}

Eigen::MatrixXcd kron_qubit_factors(const std::vector<Eigen::Matrix2cd>& factors) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (const Eigen::Matrix2cd& q : factors) {
    // m x q: the earlier factors stay in the more significant index bits.
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        next.block<2, 2>(2 * i, 2 * j) = m(i, j) * q;
      }
    }
    m = std::move(next);
  }
  return m;
}

Eigen::MatrixXcd pauli_string_matrix(std::string_view word) {
  std::vector<Eigen::Matrix2cd> factors;
  factors.reserve(word.size());
  for (char p : word) factors.push_back(pauli_matrix(p));
  return kron_qubit_factors(factors);
}

PauliAction pauli_action(std::string_view word) {
  const int n = static_cast<int>(word.size());
  const Eigen::Index dim = Eigen::Index{1} << n;
  PauliAction act;
  act.perm.resize(dim);
  act.phase.resize(dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    Eigen::Index target = b;
    std::complex<double> phase(1.0, 0.0);
    for (int q = 0; q < n; ++q) {
      const Eigen::Index bitmask = Eigen::Index{1} << (n - 1 - q);
      const bool one = (b & bitmask) != 0;
      switch (word[q]) {
        case 'I': break;
        case 'X': target ^= bitmask; break;
        case 'Y':
          target ^= bitmask;
          phase *= one ? std::complex<double>(0, -1) : std::complex<double>(0, 1);
          break;
        case 'Z':
          if (one) phase = -phase;
          break;
        default:
          throw std::invalid_argument("pauli_action: label must be one of I,X,Y,Z");
      }
    }
    act.perm[b] = target;
    act.phase[b] = phase;
  }
  return act;
}

}  // namespace cosmosim
