#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "cosmosim/density_matrix.hpp"
#include "cosmosim/exact_evolution.hpp"
#include "cosmosim/pauli_compiler.hpp"
#include "test_helpers.hpp"

using namespace cosmosim;

namespace {

DensityMatrix as_density(const Eigen::MatrixXcd& m) {
  DensityMatrix rho;
  rho.entries = m;
  return rho;
}

}  // namespace

TEST_CASE("partial trace of product and entangled states") {
  const StateVector vac = init_state(4, "0101");
  const DensityMatrix second = partial_trace_mode(vac, ModeSelection::Second);
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
  expected(1, 1) = 1.0;  // |01><01|
  CHECK((second.entries - expected).cwiseAbs().maxCoeff() <= 1e-14);

  const DensityMatrix first = partial_trace_mode(vac, ModeSelection::First);
  CHECK((first.entries - expected).cwiseAbs().maxCoeff() <= 1e-14);

  StateVector bell;
  bell.n_qubits = 4;
  bell.amplitudes = Eigen::VectorXcd::Zero(16);
  bell.amplitudes[0b0101] = 1.0 / std::sqrt(2.0);
  bell.amplitudes[0b1010] = 1.0 / std::sqrt(2.0);
  for (ModeSelection keep : {ModeSelection::First, ModeSelection::Second}) {
    const DensityMatrix red = partial_trace_mode(bell, keep);
    Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(4, 4);
    mixed(1, 1) = 0.5;
    mixed(2, 2) = 0.5;
    CHECK((red.entries - mixed).cwiseAbs().maxCoeff() <= 1e-14);
  }

  // Density-matrix input agrees with the pure-state overload.
  const DensityMatrix red_dm =
      partial_trace_mode(density_from_state(bell), ModeSelection::Second);
  const DensityMatrix red_sv = partial_trace_mode(bell, ModeSelection::Second);
  CHECK((red_dm.entries - red_sv.entries).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("oracle reduction matches the two-level thermal distribution") {
  CosmologyParams p;
  p.rho = 1.0;
  const DensityMatrix red =
      partial_trace_mode(exact_oracle_state(p), ModeSelection::Second);
  const std::vector<double> therm = thermal_distribution(p, 1);
  const double norm = therm[0] + therm[1];
  CHECK(std::abs(red.entries(1, 1).real() - therm[0] / norm) <= 1e-6);
  CHECK(std::abs(red.entries(2, 2).real() - therm[1] / norm) <= 1e-6);
  CHECK(std::abs(red.entries(0, 0)) <= 1e-14);
  CHECK(std::abs(red.entries(3, 3)) <= 1e-14);
}

TEST_CASE("fidelity basics") {
  std::mt19937_64 rng(31);

  SUBCASE("identical states give 1") {
    for (int rep = 0; rep < 10; ++rep) {
      const DensityMatrix rho = as_density(testutil::random_density_matrix(4, rng));
      CHECK(std::abs(fidelity(rho, rho) - 1.0) <= 1e-10);
    }
  }

  SUBCASE("orthogonal pure states give 0") {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4, 4);
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(4, 4);
    a(1, 1) = 1.0;  // |01><01|
    b(2, 2) = 1.0;  // |10><10|
    CHECK(fidelity(as_density(a), as_density(b)) <= 1e-12);
  }

  SUBCASE("pure-state reduction F = <psi|sigma|psi>") {
    for (int rep = 0; rep < 10; ++rep) {
      const Eigen::VectorXcd psi = testutil::random_state(4, rng);
      const DensityMatrix pure = as_density(psi * psi.adjoint());
      const DensityMatrix sigma = as_density(testutil::random_density_matrix(4, rng));
      const double direct = (psi.adjoint() * sigma.entries * psi)(0, 0).real();
      CHECK(std::abs(fidelity(pure, sigma) - direct) <= 1e-10);
    }
  }

  SUBCASE("symmetry and bounds") {
    for (int rep = 0; rep < 10; ++rep) {
      const DensityMatrix rho = as_density(testutil::random_density_matrix(4, rng));
      const DensityMatrix sig = as_density(testutil::random_density_matrix(4, rng));
      const double f = fidelity(rho, sig);
      CHECK(f >= 0.0);
      CHECK(f <= 1.0 + 1e-9);
      CHECK(std::abs(f - fidelity(sig, rho)) <= 1e-9);
    }
  }

  SUBCASE("invalid inputs are rejected") {
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(4, 4) * 0.5;
    bad(0, 0) = -0.5;  // eigenvalue far below zero
    bad(1, 1) = 1.0;
    const DensityMatrix ok = as_density(testutil::random_density_matrix(4, rng));
    CHECK_THROWS_AS(fidelity(as_density(bad), ok), std::invalid_argument);

    const DensityMatrix small = as_density(testutil::random_density_matrix(2, rng));
    CHECK_THROWS_AS(fidelity(small, ok), std::invalid_argument);
  }
}

TEST_CASE("density-matrix expectations and particle number") {
  const DensityMatrix vac = density_from_state(init_state(4, "0101"));
  CHECK(expectation(vac, ObservableString("ZZZZ")) == 1.0);
  CHECK(expectation(vac, ObservableString("IIIZ")) == -1.0);
  CHECK(particle_number(vac) == 0.0);

  std::mt19937_64 rng(8);
  StateVector state;
  state.n_qubits = 4;
  state.amplitudes = testutil::random_state(16, rng);
  const DensityMatrix rho = density_from_state(state);
  CHECK(std::abs(particle_number(rho) - particle_number(state)) <= 1e-12);
  CHECK(std::abs(expectation(rho, ObservableString("ZIZI")) -
                 expectation(state, ObservableString("ZIZI"))) <= 1e-12);
}

TEST_CASE("second-order reference state") {
  CosmologyParams p;
  p.rho = 1.0;

  SUBCASE("no coupling collapses to |01><01|") {
    CosmologyParams flat = p;
    flat.B = 0.0;
    flat.A = 1.0;
    const DensityMatrix red = theoretical_reduced_state(flat);
    CHECK(std::abs(red.entries(1, 1).real() - 1.0) <= 1e-14);
  }

  SUBCASE("unit trace and near-exact populations at weak coupling") {
    CosmologyParams weak = p;
    weak.rho = 0.6;  // squeezing parameter ~ 1.7e-3
    const DensityMatrix red = theoretical_reduced_state(weak);
    CHECK(std::abs(red.entries.trace().real() - 1.0) <= 1e-14);

    const DensityMatrix exact =
        partial_trace_mode(exact_oracle_state(weak), ModeSelection::Second);
    CHECK((red.entries - exact.entries).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("first-order fidelity formula") {
  CosmologyParams p;
  p.rho = 1.0;

  SUBCASE("vacuum expectations give exactly 1 at zero coupling") {
    CosmologyParams flat = p;
    flat.B = 0.0;
    flat.A = 1.0;
    const std::map<std::string, double> vac = {
        {"IIIZ", -1.0}, {"IIZI", 1.0}, {"IIZZ", -1.0}};
    CHECK(fidelity_first_order(vac, flat) == 1.0);
  }

  SUBCASE("two-qubit keys are accepted") {
    const std::map<std::string, double> vac = {
        {"IZ", -1.0}, {"ZI", 1.0}, {"ZZ", -1.0}};
    CHECK(std::abs(fidelity_first_order(vac, p) - 1.0) <= 1e-12);
  }

  SUBCASE("degenerate radicand leaves only the first term") {
    const std::map<std::string, double> vals = {
        {"IIIZ", 0.3}, {"IIZI", 0.3}, {"IIZZ", 1.0}};
    CHECK(fidelity_first_order(vals, p) == 0.0);
  }

  SUBCASE("missing keys are an error") {
    const std::map<std::string, double> incomplete = {{"IIIZ", 0.0}};
    CHECK_THROWS_AS(fidelity_first_order(incomplete, p), std::invalid_argument);
  }

  SUBCASE("matches the exact Uhlmann fidelity at small coupling") {
    for (double rho_rate : {0.01, 0.05, 0.1}) {
      CosmologyParams q = p;
      q.rho = rho_rate;
      const StateVector ideal =
          run_circuit(build_evolution_circuit(q), init_state(4, "0000"));
      std::map<std::string, double> vals;
      for (const char* w : {"IIIZ", "IIZI", "IIZZ"}) {
        vals[w] = expectation(ideal, ObservableString(w));
      }
      const double approx = fidelity_first_order(vals, q);
      const double exact = fidelity(theoretical_reduced_state(q),
                                    partial_trace_mode(ideal, ModeSelection::Second));
      CHECK(std::abs(approx - exact) <= 5e-3);
    }
  }
}
