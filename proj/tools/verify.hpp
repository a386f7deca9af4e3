#pragma once

/**
 * @file verify.hpp
 * @brief Batch verification suites and report serialisation for the octograss CLI.
 */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "octograss/report.hpp"

namespace octograss::cli {

struct Config {
  double fd_step = 1e-3;
  double richardson_tol = 1e-7;
  double fiber_tol = 1e-10;
  int samples = 200;
  std::uint64_t seed = 42;
  double tol = 1e-6;     ///< closed-form paths
  double fd_tol = 1e-4;  ///< finite-difference and Monte Carlo paths
  int laplacian_points = 100;
  int random_points = 25;
  int variations = 20;
  std::vector<std::string> suites{"all"};
  /// Record wall time in reports. Off by default so reports are byte-stable.
  bool timing = false;
};

struct SuiteResult {
  std::vector<VerificationReport> checks;
  double seconds = 0.0;

  int passed() const;
  int failed() const;
  int exit_code() const { return failed() == 0 ? 0 : 1; }
};

/// Known suite ids, "all" last.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite id.
SuiteResult run_suite(const std::string& suite, const Config& config);

/// Runs every suite listed in config.suites in order.
SuiteResult run_suites(const Config& config);

nlohmann::ordered_json to_json(const Config& config);
nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const Config& config, const SuiteResult& result);

void write_table(std::ostream& out, const SuiteResult& result);
void write_csv(std::ostream& out, const SuiteResult& result);

/// Known export kinds: epsilon-table, tangent-basis, lemma-values.
const std::vector<std::string>& export_kinds();

/// CSV dump; throws std::invalid_argument for an unknown kind.
void export_table(const std::string& kind, std::ostream& out, const Config& config = {});

}  // namespace octograss::cli
