#include "cosmosim/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "cosmosim/exact_evolution.hpp"
#include "cosmosim/pauli_compiler.hpp"

namespace cosmosim {

namespace {

const std::array<std::string, 7> kTomographyWords = {
    "IIIZ", "IIZI", "IIZZ", "ZZII", "ZZIZ", "ZZZI", "ZZZZ"};

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

double clamp_unit(double f) { return std::clamp(f, 0.0, 1.0); }

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  validate(config.params);
  validate(config.noise);
  validate(config.zne);
  if (config.points < 1) {
    throw std::invalid_argument("run_sweep: need at least one grid point");
  }
  const std::size_t min_scales =
      config.zne.extrapolator == Extrapolator::Linear ? 2 : 3;
  if (config.zne.scale_factors.size() < min_scales) {
    throw std::invalid_argument(
        "run_sweep: not enough scale factors for the chosen extrapolator");
  }

  std::uint64_t draw = 0;  // sampling streams get distinct seeds in grid order
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(config.points));

  for (int i = 0; i < config.points; ++i) {
    SweepRow row{};
    row.x = config.points == 1
                ? config.x_min
                : config.x_min + (config.x_max - config.x_min) * i / (config.points - 1);
    row.rho = std::pow(10.0, row.x);

    CosmologyParams params = config.params;
    params.rho = row.rho;

    row.n_full = n_expected_full(params);
    row.n_trunc = n_expected_truncated(params);

    const Circuit circuit = build_evolution_circuit(params);
    const StateVector ideal = run_circuit(circuit, init_state(4, "0000"));

    auto ideal_expectation = [&](const ObservableString& obs) {
      if (config.shots > 0) {
        return expectation_sampled(ideal, obs, config.shots, config.seed + draw++);
      }
      return expectation(ideal, obs);
    };
    std::map<std::string, double> ideal_vals;
    for (const std::string& w : kTomographyWords) {
      ideal_vals[w] = ideal_expectation(ObservableString(w));
    }
    row.n_ideal = particle_number_from_expectations(
        [&](const ObservableString& obs) { return ideal_vals.at(obs.word); });

    // One noisy density-matrix run per scale factor serves every observable.
    std::map<std::string, std::vector<std::pair<double, double>>> zne_points;
    std::map<std::string, double> noisy_vals;
    DensityMatrix unfolded;
    for (int scale : config.zne.scale_factors) {
      const DensityMatrix rho =
          run_noisy(fold_circuit(circuit, scale), "0000", config.noise);
      for (const std::string& w : kTomographyWords) {
        const ObservableString obs(w);
        const double v = config.shots > 0
                             ? expectation_sampled(rho, obs, config.shots,
                                                   config.seed + draw++)
                             : expectation(rho, obs);
        zne_points[w].emplace_back(static_cast<double>(scale), v);
        if (scale == 1) noisy_vals[w] = v;
      }
      if (scale == 1) unfolded = rho;
    }
    row.n_noisy = particle_number_from_expectations(
        [&](const ObservableString& obs) { return noisy_vals.at(obs.word); });

    std::map<std::string, double> mitigated_vals;
    for (const std::string& w : kTomographyWords) {
      mitigated_vals[w] =
          zne_extrapolate(zne_points[w], config.zne.extrapolator).value;
    }
    row.n_zne = particle_number_from_expectations(
        [&](const ObservableString& obs) { return mitigated_vals.at(obs.word); });

    const DensityMatrix reference = theoretical_reduced_state(params);
    row.f_ideal = clamp_unit(
        fidelity(reference, partial_trace_mode(ideal, ModeSelection::Second)));
    row.f_noisy = clamp_unit(
        fidelity(reference, partial_trace_mode(unfolded, ModeSelection::Second)));
    row.f_zne = clamp_unit(fidelity_first_order(mitigated_vals, params));
    row.f_first_order = clamp_unit(fidelity_first_order(ideal_vals, params));

    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "x,rho,n_full,n_trunc,n_ideal,n_noisy,n_zne,f_ideal,f_noisy,f_zne,"
      "f_first_order\n";
  for (const SweepRow& r : rows) {
    out += format_value(r.x) + "," + format_value(r.rho) + "," +
           format_value(r.n_full) + "," + format_value(r.n_trunc) + "," +
           format_value(r.n_ideal) + "," + format_value(r.n_noisy) + "," +
           format_value(r.n_zne) + "," + format_value(r.f_ideal) + "," +
           format_value(r.f_noisy) + "," + format_value(r.f_zne) + "," +
           format_value(r.f_first_order) + "\n";
  }
  return out;
}

std::string scale_factor_csv(double A, double B, const std::vector<double>& rhos,
                             double eta_min, double eta_max, int points) {
  if (!(A > std::abs(B))) {
    throw std::invalid_argument("scale_factor_csv: need A > |B|");
  }
  if (rhos.empty() || points < 2) {
    throw std::invalid_argument("scale_factor_csv: need rho values and >= 2 points");
  }
  std::string out = "eta";
  for (double rho : rhos) {
    if (!(rho > 0.0)) {
      throw std::invalid_argument("scale_factor_csv: rho values must be positive");
    }
    out += ",C[rho=" + format_value(rho) + "]";
  }
  out += "\n";
  for (int i = 0; i < points; ++i) {
    const double eta = eta_min + (eta_max - eta_min) * i / (points - 1);
    out += format_value(eta);
    for (double rho : rhos) {
      CosmologyParams p;
      p.A = A;
      p.B = B;
      p.rho = rho;
      out += "," + format_value(scale_factor(p, eta));
    }
    out += "\n";
  }
  return out;
}

std::string error_estimate_report(const CosmologyParams& params,
                                  const NoiseModel& noise) {
  validate(params);
  validate(noise);
  const Circuit circuit = build_evolution_circuit(params);
  const double n1 = circuit.one_qubit_count();
  const double n2 = circuit.two_qubit_count();

  auto line = [&](const char* label, double c2, double c1) {
    const double exponent = c2 * noise.eps2 + c1 * noise.eps1;
    const double survival = std::exp(-exponent);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%s: gates (2q=%d, 1q=%d), survival exp(-%.6f) = %.6f, "
                  "error = %.4f (%.1f%%)\n",
                  label, static_cast<int>(c2), static_cast<int>(c1), exponent,
                  survival, 1.0 - survival, 100.0 * (1.0 - survival));
    return std::string(buf);
  };

  std::string out;
  out += line("this circuit", n2, n1);
  out += line("reference estimate", 96, 226);
  return out;
}

}  // namespace cosmosim
