// Contract tests against the installed command-line binary.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kCli = COSMOSIM_CLI_PATH;

int run(const std::string& args, const fs::path& stdout_path = {}) {
  std::string cmd = kCli + " " + args;
  cmd += stdout_path.empty() ? " > /dev/null" : " > " + stdout_path.string();
  cmd += " 2> /dev/null";
  return std::system(cmd.c_str());
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "cosmosim_cli_tests";
  fs::create_directories(dir);
  return dir;
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("invalid physics exits nonzero and writes no file") {
  const fs::path out = temp_dir() / "should_not_exist.csv";
  fs::remove(out);
  const int status = run("sweep --A 0.4 --B 0.5 --points 3 --out " + out.string());
  CHECK(status != 0);
  CHECK(!fs::exists(out));
}

TEST_CASE("sweep writes the documented header") {
  const fs::path out = temp_dir() / "small_sweep.csv";
  CHECK(run("sweep --points 3 --zne-scales 1,3 --zne-method linear --out " +
            out.string()) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("x,rho,n_full,n_trunc,n_ideal,n_noisy,n_zne,f_ideal,f_noisy,"
                  "f_zne,f_first_order\n", 0) == 0);
  CHECK(count_occurrences(csv, "\n") == 4);  // header + 3 rows
}

TEST_CASE("export-qasm emits 96 entangling gates and a summary") {
  const fs::path dir = temp_dir();
  const fs::path out = dir / "circuit.qasm";
  const fs::path console = dir / "qasm_stdout.txt";
  CHECK(run("export-qasm --out " + out.string(), console) == 0);
  const std::string qasm = slurp(out);
  CHECK(qasm.rfind("OPENQASM 2.0;\n", 0) == 0);
  CHECK(qasm.find("qreg q[4];\n") != std::string::npos);
  CHECK(count_occurrences(qasm, "\ncx ") + (qasm.rfind("cx ", 0) == 0 ? 1 : 0) == 96);
  const std::string summary = slurp(console);
  CHECK(summary.find("one-qubit gates: 146") != std::string::npos);
  CHECK(summary.find("two-qubit gates: 96") != std::string::npos);
}

TEST_CASE("no expansion freezes every rotation at zero") {
  const fs::path out = temp_dir() / "flat.qasm";
  CHECK(run("export-qasm --A 1.0 --B 0.0 --out " + out.string()) == 0);
  const std::string qasm = slurp(out);
  CHECK(count_occurrences(qasm, "rx(") == 16);
  CHECK(count_occurrences(qasm, "rx(0.0000000000000000e+00)") +
            count_occurrences(qasm, "rx(-0.0000000000000000e+00)") ==
        16);
}

TEST_CASE("config file values apply and flags override them") {
  const fs::path dir = temp_dir();
  const fs::path cfg = dir / "run.cfg";
  {
    std::ofstream out(cfg);
    out << "points = 2\n"
        << "x-min = 0\n"
        << "x-max = 1\n"
        << "zne-scales = 1,3\n"
        << "zne-method = linear\n";
  }
  const fs::path a = dir / "from_config.csv";
  CHECK(run("sweep --config " + cfg.string() + " --out " + a.string()) == 0);
  CHECK(count_occurrences(slurp(a), "\n") == 3);  // header + 2 rows

  const fs::path b = dir / "flag_override.csv";
  CHECK(run("sweep --config " + cfg.string() + " --points 4 --out " + b.string()) == 0);
  CHECK(count_occurrences(slurp(b), "\n") == 5);  // header + 4 rows
}

TEST_CASE("error-estimate reports both gate budgets") {
  const fs::path console = temp_dir() / "error_estimate.txt";
  CHECK(run("error-estimate", console) == 0);
  const std::string report = slurp(console);
  CHECK(report.find("(2q=96, 1q=146)") != std::string::npos);
  CHECK(report.find("(2q=96, 1q=226)") != std::string::npos);
  CHECK(report.find("52.4%") != std::string::npos);
}

TEST_CASE("scale-factor table covers the requested rates") {
  const fs::path out = temp_dir() / "scale.csv";
  CHECK(run("scale-factor --rhos 0.5,1,2 --eta-points 11 --out " + out.string()) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("eta,", 0) == 0);
  CHECK(count_occurrences(csv, "\n") == 12);
}
