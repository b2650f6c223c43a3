#include "cosmosim/complex_gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cosmosim {

namespace {

// Lanczos approximation, g = 607/128 with 15 coefficients. This choice keeps
// the relative error below ~1e-13 across the right half-plane, which is what
// the Bogoliubov formulas need at expansion rates down to 0.01.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

std::complex<double> lanczos_right_half(std::complex<double> z) {
  // Valid for Re(z) >= 0.5.
  const std::complex<double> zz = z - 1.0;
  std::complex<double> series = kLanczosCoeff[0];
  for (int k = 1; k < 15; ++k) {
    series += kLanczosCoeff[k] / (zz + static_cast<double>(k));
  }
  const std::complex<double> t = zz + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, zz + 0.5) *
         std::exp(-t) * series;
}

}  // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw std::domain_error("complex_gamma: pole at non-positive integer");
  }
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
    const std::complex<double> s =
        std::sin(std::numbers::pi * z) * lanczos_right_half(1.0 - z);
    return std::numbers::pi / s;
  }
  return lanczos_right_half(z);
}

}  // namespace cosmosim
