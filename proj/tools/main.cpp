// Command-line front end: parameter sweeps, scale-factor tables, OpenQASM
// export and gate-error estimates for the expanding-universe pair-creation
// circuit.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cosmosim/pauli_compiler.hpp"
#include "cosmosim/qasm.hpp"
#include "cosmosim/sweep.hpp"

namespace {

struct CommonOptions {
  cosmosim::SweepConfig config;
  std::string out_path;  // empty = stdout
  std::string config_path;
  std::string zne_method = "richardson-quadratic";
  std::vector<int> zne_scales = {1, 3, 5};
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
  // Config-file values are injected as leading tokens; explicit flags come
  // later and win under the take-last policy.
  cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  cmd->add_option("--config", opt.config_path,
                  "Config file with key = value lines (flags override it)");
  cmd->add_option("--A", opt.config.params.A, "Metric offset A (default 1.5)");
  cmd->add_option("--B", opt.config.params.B, "Metric amplitude B (default 0.5)");
  cmd->add_option("--mass", opt.config.params.m, "Field mass (default 1)");
  cmd->add_option("--momentum", opt.config.params.k, "Mode momentum (default 1)");
  cmd->add_option("--time", opt.config.params.t, "Evolution time (default 1)");
  cmd->add_option("--x-min", opt.config.x_min, "Lower log10(rho) bound (default -2)");
  cmd->add_option("--x-max", opt.config.x_max, "Upper log10(rho) bound (default 2)");
  cmd->add_option("--points", opt.config.points, "Grid points (default 41)");
  cmd->add_option("--eps1", opt.config.noise.eps1,
                  "One-qubit depolarizing probability (default 4.238e-4)");
  cmd->add_option("--eps2", opt.config.noise.eps2,
                  "Two-qubit depolarizing probability (default 6.741e-3)");
  cmd->add_option("--zne-scales", opt.zne_scales,
                  "Noise amplification factors (default 1,3,5)")
      ->delimiter(',');
  cmd->add_option("--zne-method", opt.zne_method,
                  "Extrapolator: linear | richardson-quadratic | exponential")
      ->check(CLI::IsMember({"linear", "richardson-quadratic", "exponential"}));
  cmd->add_option("--shots", opt.config.shots,
                  "Shots per expectation value (0 = exact, the default)");
  cmd->add_option("--seed", opt.config.seed, "Sampling seed (default 0)");
  cmd->add_option("--out", opt.out_path, "Output path (default: standard output)");
}

// Turns "key = value" lines into --key=value tokens. '#' starts a comment.
std::vector<std::string> config_file_tokens(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::runtime_error("cannot read config file: " + path);
  }
  auto trim = [](std::string s) {
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
  };
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(file, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config file: expected 'key = value', got: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::runtime_error("config file: empty key in line: " + line);
    }
    tokens.push_back("--" + key + "=" + value);
  }
  return tokens;
}

// Command line with config-file tokens spliced in right after the
// subcommand name, so explicit flags take precedence.
std::vector<std::string> assemble_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    }
  }
  if (!config_path.empty() && !args.empty()) {
    const std::vector<std::string> extra = config_file_tokens(config_path);
    args.insert(args.begin() + 1, extra.begin(), extra.end());
  }
  return args;
}

cosmosim::Extrapolator parse_method(const std::string& name) {
  if (name == "linear") return cosmosim::Extrapolator::Linear;
  if (name == "exponential") return cosmosim::Extrapolator::Exponential;
  return cosmosim::Extrapolator::RichardsonQuadratic;
}

void finalize_config(CommonOptions& opt) {
  opt.config.zne.scale_factors = opt.zne_scales;
  opt.config.zne.extrapolator = parse_method(opt.zne_method);
  cosmosim::validate(opt.config.params);
  cosmosim::validate(opt.config.noise);
  cosmosim::validate(opt.config.zne);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  file << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-circuit study of particle creation in an expanding universe"};
  app.require_subcommand(1);

  CommonOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Particle-number and fidelity curves over the expansion rate");
  add_common_flags(sweep, sweep_opt);

  CommonOptions scale_opt;
  std::vector<double> rhos = {0.5, 1.0, 2.0};
  double eta_min = -10.0, eta_max = 10.0;
  int eta_points = 201;
  CLI::App* scale = app.add_subcommand(
      "scale-factor", "Conformal scale factor C(eta) for several expansion rates");
  add_common_flags(scale, scale_opt);
  scale->add_option("--rhos", rhos, "Expansion rates (default 0.5,1,2)")->delimiter(',');
  scale->add_option("--eta-min", eta_min, "Lower eta bound (default -10)");
  scale->add_option("--eta-max", eta_max, "Upper eta bound (default 10)");
  scale->add_option("--eta-points", eta_points, "Eta grid points (default 201)");

  CommonOptions qasm_opt;
  bool peephole = false;
  CLI::App* qasm = app.add_subcommand(
      "export-qasm", "Emit the evolution circuit as OpenQASM 2.0");
  add_common_flags(qasm, qasm_opt);
  qasm->add_option("--rho", qasm_opt.config.params.rho,
                   "Expansion rate of the exported circuit (default 1)");
  qasm->add_flag("--peephole", peephole,
                 "Cancel adjacent inverse gate pairs (changes gate counts)");

  CommonOptions err_opt;
  CLI::App* err = app.add_subcommand(
      "error-estimate", "Survival factor and error from gate counts and rates");
  add_common_flags(err, err_opt);

  try {
    std::vector<std::string> args = assemble_args(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*sweep) {
      finalize_config(sweep_opt);
      write_output(sweep_opt.out_path,
                   cosmosim::sweep_csv(cosmosim::run_sweep(sweep_opt.config)));
    } else if (*scale) {
      finalize_config(scale_opt);
      write_output(scale_opt.out_path,
                   cosmosim::scale_factor_csv(scale_opt.config.params.A,
                                              scale_opt.config.params.B, rhos,
                                              eta_min, eta_max, eta_points));
    } else if (*qasm) {
      finalize_config(qasm_opt);
      cosmosim::Circuit circuit =
          cosmosim::build_evolution_circuit(qasm_opt.config.params);
      if (peephole) {
        circuit = cosmosim::cancel_adjacent_inverses(circuit);
      }
      write_output(qasm_opt.out_path, cosmosim::export_qasm(circuit));
      std::cout << "one-qubit gates: " << circuit.one_qubit_count()
                << "\ntwo-qubit gates: " << circuit.two_qubit_count() << "\n";
    } else if (*err) {
      finalize_config(err_opt);
      write_output(err_opt.out_path,
                   cosmosim::error_estimate_report(err_opt.config.params,
                                                   err_opt.config.noise));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
