#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosmosim/cosmology.hpp"
#include "cosmosim/noise.hpp"
#include "cosmosim/zne.hpp"

namespace cosmosim {

/// Configuration of a particle-number / fidelity sweep over the expansion
/// rate rho = 10^x. Noise rates default to the device-average depolarizing
/// probabilities used throughout; shots = 0 means exact expectation values.
struct SweepConfig {
  CosmologyParams params;  // rho is overwritten per grid point
  double x_min = -2.0;
  double x_max = 2.0;
  int points = 41;
  NoiseModel noise{4.238e-4, 6.741e-3};
  ZneConfig zne;
  int shots = 0;
  std::uint64_t seed = 0;
};

/// One grid point of the sweep. n_* columns: closed-form prediction without
/// and with the one-excitation cap, ideal circuit, noisy circuit, and the
/// ZNE-mitigated estimate. f_* columns: Uhlmann fidelity of the ideal and
/// noisy reduced states against the second-order reference state, the
/// first-order fidelity formula on mitigated observables, and the same
/// formula on ideal observables. Emitted fidelities are clamped to [0, 1].
struct SweepRow {
  double x, rho;
  double n_full, n_trunc, n_ideal, n_noisy, n_zne;
  double f_ideal, f_noisy, f_zne, f_first_order;
};

std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// CSV with a header line naming the SweepRow fields; values in scientific
/// notation with 12 significant digits, '\n' line endings.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Scale-factor table C(eta) for several expansion rates; columns eta then
/// one per rho.
std::string scale_factor_csv(double A, double B, const std::vector<double>& rhos,
                             double eta_min, double eta_max, int points);

/// Gate-count/error report: survival factor exp(-(n2 e2 + n1 e1)) and the
/// implied error for this project's circuit, next to the reference estimate
/// at counts (96, 226).
std::string error_estimate_report(const CosmologyParams& params,
                                  const NoiseModel& noise);

}  // namespace cosmosim
