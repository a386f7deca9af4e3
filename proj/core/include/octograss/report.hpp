#pragma once

#include <string>

namespace octograss {

/// Outcome of one numerical check.
struct VerificationReport {
  std::string id;          ///< e.g. "sigma3.first"
  std::string anchor;      ///< the statement being checked
  std::string expected;    ///< expected value descriptor
  std::string provenance;  ///< closed-form | oracle | identity | measured
  std::string computed;    ///< computed value descriptor
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double seconds = 0.0;
};

}  // namespace octograss
