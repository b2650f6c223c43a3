#include "cosmosim/cosmology.hpp"

#include <cmath>
#include <stdexcept>

#include "cosmosim/complex_gamma.hpp"

namespace cosmosim {

void validate(const CosmologyParams& params) {
  if (!(params.A > std::abs(params.B))) {
    throw std::invalid_argument("cosmology: need A > |B| so C(eta) stays positive");
  }
  if (!(params.rho > 0.0)) {
    throw std::invalid_argument("cosmology: expansion rate rho must be positive");
  }
  if (!(params.m >= 0.0)) {
    throw std::invalid_argument("cosmology: mass must be non-negative");
  }
  if (!(params.t >= 0.0)) {
    throw std::invalid_argument("cosmology: time must be non-negative");
  }
}

double scale_factor(const CosmologyParams& params, double eta) {
  return params.A + params.B * std::tanh(params.rho * eta);
}

ModeFrequencies frequencies(const CosmologyParams& params) {
  const double in2 = params.k * params.k + params.m * params.m * (params.A - params.B);
  const double out2 = params.k * params.k + params.m * params.m * (params.A + params.B);
  if (!(in2 > 0.0) || !(out2 > 0.0)) {
    throw std::domain_error("frequencies: k^2 + m^2 (A -+ B) must be positive");
  }
  ModeFrequencies f;
  f.omega_in = std::sqrt(in2);
  f.omega_out = std::sqrt(out2);
  f.omega_plus = 0.5 * (f.omega_out + f.omega_in);
  f.omega_minus = 0.5 * (f.omega_out - f.omega_in);
  return f;
}

BogoliubovPair bogoliubov(const CosmologyParams& params) {
  validate(params);
  const ModeFrequencies f = frequencies(params);
  const double r = params.rho;
  const std::complex<double> i(0.0, 1.0);
  const double prefactor = std::sqrt(f.omega_out / f.omega_in);

  BogoliubovPair out;
  out.alpha = prefactor * complex_gamma(1.0 - i * (f.omega_in / r)) *
              complex_gamma(-i * (f.omega_out / r)) /
              (complex_gamma(-i * (f.omega_plus / r)) *
               complex_gamma(1.0 - i * (f.omega_plus / r)));

  if (std::abs(f.omega_minus) < 1e-14 * f.omega_plus) {
    // Degenerate in/out frequencies: no mode mixing. The reciprocal of
    // Gamma(i w_-/r) goes to zero, so beta vanishes in the limit.
    out.beta = 0.0;
    return out;
  }
  out.beta = prefactor * complex_gamma(1.0 - i * (f.omega_in / r)) *
             complex_gamma(i * (f.omega_out / r)) /
             (complex_gamma(i * (f.omega_minus / r)) *
              complex_gamma(1.0 + i * (f.omega_minus / r)));
  return out;
}

double squeezing_parameter(const CosmologyParams& params) {
  const BogoliubovPair bog = bogoliubov(params);
  const ModeFrequencies f = frequencies(params);
  return 2.0 * std::abs(bog.alpha) * std::abs(bog.beta) * f.omega_out * params.t;
}

double n_expected_full(const CosmologyParams& params) {
  const double s = std::sinh(squeezing_parameter(params));
  return s * s;
}

double n_expected_truncated(const CosmologyParams& params) {
  const double th = std::tanh(squeezing_parameter(params));
  return th * th / (1.0 + th * th);
}

std::vector<double> thermal_distribution(const CosmologyParams& params, int n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("thermal_distribution: n_max must be >= 0");
  }
  const double r = squeezing_parameter(params);
  const double ratio = std::tanh(r) * std::tanh(r);
  const double c = std::cosh(r);
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = 1.0 / (c * c);
  for (std::size_t n = 1; n < p.size(); ++n) {
    p[n] = p[n - 1] * ratio;
  }
  return p;
}

}  // namespace cosmosim
