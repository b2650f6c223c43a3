#pragma once

#include <complex>
#include <vector>

namespace cosmosim {

/// Physical knobs of the expanding-universe toy model. The conformal scale
/// factor interpolates between A - B (far past) and A + B (far future) with a
/// tanh transition of steepness rho.
struct CosmologyParams {
  double A = 1.5;    // metric offset, must exceed |B|
  double B = 0.5;    // metric amplitude; B > 0 expands, B < 0 contracts
  double rho = 1.0;  // expansion rate (inverse conformal time), > 0
  double m = 1.0;    // field mass, >= 0
  double k = 1.0;    // mode momentum
  double t = 1.0;    // evolution time, >= 0
};

/// Throws std::invalid_argument if the parameters violate A > |B|, rho > 0,
/// m >= 0 or t >= 0.
void validate(const CosmologyParams& params);

/// Asymptotic mode frequencies before/after the expansion and their
/// half-sum / half-difference.
struct ModeFrequencies {
  double omega_in;
  double omega_out;
  double omega_plus;
  double omega_minus;
};

/// Mode-mixing coefficients between the in and out mode bases. Bosonic
/// normalization |alpha|^2 - |beta|^2 = 1; |beta|^2 is the pair-creation
/// strength.
struct BogoliubovPair {
  std::complex<double> alpha;
  std::complex<double> beta;
};

/// C(eta) = A + B tanh(rho eta).
double scale_factor(const CosmologyParams& params, double eta);

/// omega_in = sqrt(k^2 + m^2 (A - B)), omega_out = sqrt(k^2 + m^2 (A + B)).
/// Throws std::domain_error when a radicand is not positive.
ModeFrequencies frequencies(const CosmologyParams& params);

/// Bogoliubov coefficients from the gamma-function expressions
///
///   alpha = sqrt(w_out/w_in) G(1 - i w_in/r) G(-i w_out/r)
///           / (G(-i w_+/r) G(1 - i w_+/r))
///   beta  = sqrt(w_out/w_in) G(1 - i w_in/r) G(i w_out/r)
///           / (G(i w_-/r) G(1 + i w_-/r))
///
/// with r the expansion rate. The degenerate case omega_minus ~ 0 (B = 0 or
/// m = 0) returns beta = 0 exactly; the 1/G(i w_-/r) factor vanishes in that
/// limit.
BogoliubovPair bogoliubov(const CosmologyParams& params);

/// Squeezing parameter r = 2 |alpha| |beta| omega_out t that controls every
/// particle-number prediction below.
double squeezing_parameter(const CosmologyParams& params);

/// Expected particle number per mode without an excitation cap:
/// <n> = sinh^2(r).
double n_expected_full(const CosmologyParams& params);

/// Expected particle number when each mode holds at most one excitation:
/// <n> = tanh^2(r) / (1 + tanh^2(r)), always in [0, 1/2).
double n_expected_truncated(const CosmologyParams& params);

/// Occupation probabilities p_n = tanh^{2n}(r) / cosh^2(r) of the reduced
/// single-mode thermal state, for n = 0..n_max.
std::vector<double> thermal_distribution(const CosmologyParams& params,
                                         int n_max);

}  // namespace cosmosim
