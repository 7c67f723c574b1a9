#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mzeta {

// Outcome of one identity check. Detail keys starting with "term_" form a
// signed decomposition of rhs; other keys are informational.
struct VerificationReport {
  std::string identity;
  std::vector<double> args;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::vector<std::pair<std::string, double>> detail;

  // Fills the error fields and applies the pass rule: relative error against
  // tolerance, or absolute error when |rhs| < 1.
  static VerificationReport make(std::string identity, std::vector<double> args,
                                 double lhs, double rhs, double tolerance,
                                 std::vector<std::pair<std::string, double>> detail = {});
};

// Stable field names: identity, args, lhs, rhs, abs_err, rel_err, tol,
// passed, detail.
std::string to_json(const VerificationReport& report);

std::string report_csv_header();
std::string to_csv_row(const VerificationReport& report);

}  // namespace mzeta
