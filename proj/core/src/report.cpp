#include "mzeta/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

namespace mzeta {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

VerificationReport VerificationReport::make(
    std::string identity, std::vector<double> args, double lhs, double rhs,
    double tolerance, std::vector<std::pair<std::string, double>> detail) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.args = std::move(args);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  r.detail = std::move(detail);
  r.abs_err = std::fabs(lhs - rhs);
  if (rhs != 0.0)
    r.rel_err = r.abs_err / std::fabs(rhs);
  else
    r.rel_err = r.abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  const double measure = std::fabs(rhs) < 1.0 ? r.abs_err : r.rel_err;
  r.passed = measure <= tolerance;
  return r;
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["identity"] = report.identity;
  j["args"] = report.args;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["abs_err"] = report.abs_err;
  j["rel_err"] = report.rel_err;
  j["tol"] = report.tolerance;
  j["passed"] = report.passed;
  nlohmann::ordered_json d = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.detail) d[key] = value;
  j["detail"] = d;
  return j.dump();
}

std::string report_csv_header() {
  return "identity,args,lhs,rhs,abs_err,rel_err,tol,passed";
}

std::string to_csv_row(const VerificationReport& report) {
  std::string args;
  for (std::size_t i = 0; i < report.args.size(); ++i) {
    if (i) args += ';';
    args += fmt17(report.args[i]);
  }
  std::string row = report.identity;
  row += ',';
  row += args;
  row += ',';
  row += fmt17(report.lhs);
  row += ',';
  row += fmt17(report.rhs);
  row += ',';
  row += fmt17(report.abs_err);
  row += ',';
  row += fmt17(report.rel_err);
  row += ',';
  row += fmt17(report.tolerance);
  row += ',';
  row += report.passed ? "true" : "false";
  return row;
}

}  // namespace mzeta
