#pragma once

#include <utility>
#include <vector>

#include "cosmosim/circuit.hpp"
#include "cosmosim/density_matrix.hpp"
#include "cosmosim/noise.hpp"

namespace cosmosim {

enum class Extrapolator { Linear, RichardsonQuadratic, Exponential };

/// Zero-noise extrapolation settings: odd noise-amplification factors
/// starting at 1, strictly increasing, and the extrapolation model.
struct ZneConfig {
  std::vector<int> scale_factors = {1, 3, 5};
  Extrapolator extrapolator = Extrapolator::RichardsonQuadratic;
};

void validate(const ZneConfig& cfg);

/// Global unitary folding C (C^dag C)^((scale-1)/2). The ideal unitary is
/// unchanged while the gate count scales by exactly `scale` (odd, >= 1).
Circuit fold_circuit(const Circuit& c, int scale);

/// Extrapolated value plus a flag marking the exponential fit's linear
/// fallback.
struct ZneEstimate {
  double value = 0.0;
  bool used_linear_fallback = false;
};

/// Extrapolates (scale, value) samples to scale 0.
///   Linear:              least-squares line.
///   RichardsonQuadratic: quadratic through/least-squares over the points.
///   Exponential:         v(s) = a + b exp(-c s), returning a + b; a fit
///                        that does not converge falls back to the linear
///                        estimate with used_linear_fallback set.
/// Requires >= 2 points (linear) or >= 3 (the others) with distinct scales.
ZneEstimate zne_extrapolate(const std::vector<std::pair<double, double>>& points,
                            Extrapolator method);

/// Runs the folded circuit under the noise model at every configured scale,
/// measures <obs> on each, and extrapolates to zero noise.
double mitigated_observable(const Circuit& c, const ObservableString& obs,
                            const NoiseModel& noise, const ZneConfig& cfg);

}  // namespace cosmosim
