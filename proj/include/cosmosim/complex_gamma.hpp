#pragma once

#include <complex>

namespace cosmosim {

/// Gamma function for complex argument.
///
/// Relative error stays below 1e-12 for Re(z) in [-10, 10] and
/// |Im(z)| <= 100, and conjugate symmetry Gamma(conj(z)) == conj(Gamma(z))
/// holds to the last bit. For very large |Im(z)| the magnitude decays
/// super-exponentially; the result then underflows to a subnormal or zero
/// magnitude instead of raising an error.
///
/// Throws std::domain_error on the poles z = 0, -1, -2, ...
std::complex<double> complex_gamma(std::complex<double> z);

}  // namespace cosmosim
