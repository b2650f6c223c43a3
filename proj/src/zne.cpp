#include "cosmosim/zne.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cosmosim {

void validate(const ZneConfig& cfg) {
  if (cfg.scale_factors.empty() || cfg.scale_factors.front() != 1) {
    throw std::invalid_argument("ZneConfig: scale factors must start at 1");
  }
  int prev = 0;
  for (int s : cfg.scale_factors) {
    if (s <= prev) {
      throw std::invalid_argument("ZneConfig: scale factors must be strictly increasing");
    }
    if (s % 2 == 0) {
      throw std::invalid_argument("ZneConfig: scale factors must be odd");
    }
    prev = s;
  }
}

Circuit fold_circuit(const Circuit& c, int scale) {
  if (scale < 1 || scale % 2 == 0) {
    throw std::invalid_argument("fold_circuit: scale must be an odd positive integer");
  }
  Circuit folded = c;
  const Circuit inv = inverse(c);
  folded.gates.reserve(c.gates.size() * static_cast<std::size_t>(scale));
  for (int rep = 0; rep < (scale - 1) / 2; ++rep) {
    folded.gates.insert(folded.gates.end(), inv.gates.begin(), inv.gates.end());
    folded.gates.insert(folded.gates.end(), c.gates.begin(), c.gates.end());
  }
  return folded;
}

namespace {

double linear_at_zero(const std::vector<std::pair<double, double>>& pts) {
  const double n = static_cast<double>(pts.size());
  double sum_s = 0, sum_v = 0, sum_ss = 0, sum_sv = 0;
  for (auto [s, v] : pts) {
    sum_s += s;
    sum_v += v;
    sum_ss += s * s;
    sum_sv += s * v;
  }
  const double det = n * sum_ss - sum_s * sum_s;
  if (det == 0.0) {
    throw std::invalid_argument("zne_extrapolate: scales must be distinct");
  }
  const double slope = (n * sum_sv - sum_s * sum_v) / det;
  return (sum_v - slope * sum_s) / n;
}

double quadratic_at_zero(const std::vector<std::pair<double, double>>& pts) {
  // Least-squares parabola; with three points this is the interpolating one.
  Eigen::MatrixXd vand(static_cast<Eigen::Index>(pts.size()), 3);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(pts.size()));
  for (Eigen::Index i = 0; i < rhs.size(); ++i) {
    const auto [s, v] = pts[static_cast<std::size_t>(i)];
    vand(i, 0) = 1.0;
    vand(i, 1) = s;
    vand(i, 2) = s * s;
    rhs[i] = v;
  }
  const Eigen::Vector3d coeff = vand.colPivHouseholderQr().solve(rhs);
  return coeff[0];
}

struct ExpFit {
  double a = 0, b = 0, c = 0;
  bool ok = false;
};

// Closed-form a + b e^{-c s} through three equally spaced samples.
ExpFit exp_fit_three(double s0, double v0, double v1, double v2, double h) {
  ExpFit fit;
  const double den = v0 + v2 - 2.0 * v1;
  const double scale = std::max({1.0, std::abs(v0), std::abs(v2)});
  if (std::abs(den) < 1e-13 * scale) return fit;
  fit.a = (v0 * v2 - v1 * v1) / den;
  const double lambda = (v1 - fit.a) / (v0 - fit.a);
  if (!(lambda > 0.0) || !(lambda < 1.0)) return fit;
  fit.c = -std::log(lambda) / h;
  fit.b = (v0 - fit.a) * std::exp(fit.c * s0);
  fit.ok = std::isfinite(fit.a) && std::isfinite(fit.b) && std::isfinite(fit.c);
  return fit;
}

ExpFit gauss_newton(const std::vector<std::pair<double, double>>& pts, ExpFit init) {
  ExpFit fit = init;
  const Eigen::Index n = static_cast<Eigen::Index>(pts.size());
  for (int iter = 0; iter < 100; ++iter) {
    Eigen::MatrixXd jac(n, 3);
    Eigen::VectorXd res(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto [s, v] = pts[static_cast<std::size_t>(i)];
      const double e = std::exp(-fit.c * s);
      res[i] = v - fit.a - fit.b * e;
      jac(i, 0) = 1.0;
      jac(i, 1) = e;
      jac(i, 2) = -fit.b * s * e;
    }
    const Eigen::Vector3d step = jac.colPivHouseholderQr().solve(res);
    fit.a += step[0];
    fit.b += step[1];
    fit.c += step[2];
    if (!std::isfinite(fit.a) || !std::isfinite(fit.b) || !std::isfinite(fit.c)) {
      fit.ok = false;
      return fit;
    }
    if (step.cwiseAbs().maxCoeff() < 1e-13) break;
  }
  fit.ok = fit.c > 0.0;
  return fit;
}

}  // namespace

ZneEstimate zne_extrapolate(const std::vector<std::pair<double, double>>& points,
                            Extrapolator method) {
  const std::size_t n = points.size();
  const std::size_t min_points = method == Extrapolator::Linear ? 2 : 3;
  if (n < min_points) {
    throw std::invalid_argument("zne_extrapolate: not enough points");
  }
  std::vector<std::pair<double, double>> pts = points;
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 1; i < n; ++i) {
    if (pts[i].first == pts[i - 1].first) {
      throw std::invalid_argument("zne_extrapolate: scales must be distinct");
    }
  }

  switch (method) {
    case Extrapolator::Linear:
      return {linear_at_zero(pts), false};
    case Extrapolator::RichardsonQuadratic:
      return {quadratic_at_zero(pts), false};
    case Extrapolator::Exponential: {
      double vmin = pts[0].second, vmax = pts[0].second;
      for (const auto& [s, v] : pts) {
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
      }
      if (vmax - vmin <= 1e-13 * std::max(1.0, std::abs(vmax))) {
        double mean = 0.0;
        for (const auto& [s, v] : pts) mean += v;
        return {mean / static_cast<double>(n), false};
      }
      const auto& [s0, v0] = pts[0];
      const auto& [s1, v1] = pts[n / 2];
      const auto& [s2, v2] = pts[n - 1];
      ExpFit fit;
      if (std::abs((s1 - s0) - (s2 - s1)) < 1e-12) {
        fit = exp_fit_three(s0, v0, v1, v2, s1 - s0);
      } else {
        fit.a = v2;
        fit.b = v0 - v2;
        const double ratio = (v0 - fit.a) / (v1 - fit.a);
        if (ratio > 0.0) {
          fit.c = std::log(ratio) / (s1 - s0);
          fit.ok = fit.c > 0.0;
        }
      }
      if (fit.ok && n > 3) {
        fit = gauss_newton(pts, fit);
      }
      if (!fit.ok) {
        return {linear_at_zero(pts), true};
      }
      return {fit.a + fit.b, false};
    }
  }
  throw std::logic_error("zne_extrapolate: unknown extrapolator");
}

double mitigated_observable(const Circuit& c, const ObservableString& obs,
                            const NoiseModel& noise, const ZneConfig& cfg) {
  validate(cfg);
  validate(noise);
  const std::string zeros(static_cast<std::size_t>(c.n_qubits), '0');
  std::vector<std::pair<double, double>> points;
  points.reserve(cfg.scale_factors.size());
  for (int scale : cfg.scale_factors) {
    const DensityMatrix rho = run_noisy(fold_circuit(c, scale), zeros, noise);
    points.emplace_back(static_cast<double>(scale), expectation(rho, obs));
  }
  return zne_extrapolate(points, cfg.extrapolator).value;
}

}  // namespace cosmosim
