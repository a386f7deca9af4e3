#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "verify.hpp"

namespace {

constexpr int kUsageError = 2;

bool open_output(const std::string& path, std::ofstream& file) {
  file.open(path);
  if (!file) std::cerr << "error: cannot write " << path << "\n";
  return static_cast<bool>(file);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace octograss::cli;

  Config config;
  std::string json_path;
  std::string csv_path;
  std::string export_kind;
  std::string export_path;

  CLI::App app{"Numerical verification of harmonic sections of Grassmannian sphere bundles"};
  app.set_version_flag("--version", "octograss 0.1.0");

  app.add_option("--suite", config.suites, "Suites to run")
      ->check(CLI::IsMember(suite_names()))
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", config.samples, "Monte Carlo samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--fd-step", config.fd_step, "Finite-difference step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol", config.tol, "Tolerance for closed-form paths")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--fd-tol", config.fd_tol, "Tolerance for finite-difference and Monte Carlo paths")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--json", json_path, "Write the JSON report to this path");
  app.add_option("--csv", csv_path, "Write the checks as CSV to this path");
  app.add_flag("--timing", config.timing, "Record wall time in reports");

  auto* exporter = app.add_subcommand("export", "Dump a table as CSV");
  exporter->add_option("kind", export_kind, "Table to export")
      ->required()
      ->check(CLI::IsMember(export_kinds()));
  exporter->add_option("-o,--output", export_path, "Output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*exporter) {
      if (export_path.empty()) {
        export_table(export_kind, std::cout, config);
      } else {
        std::ofstream file;
        if (!open_output(export_path, file)) return kUsageError;
        export_table(export_kind, file, config);
      }
      return 0;
    }

    const SuiteResult result = run_suites(config);
    write_table(std::cout, result);
    if (!json_path.empty()) {
      std::ofstream file;
      if (!open_output(json_path, file)) return kUsageError;
      file << to_json(config, result).dump(2) << "\n";
    }
    if (!csv_path.empty()) {
      std::ofstream file;
      if (!open_output(csv_path, file)) return kUsageError;
      write_csv(file, result);
    }
    return result.exit_code();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
