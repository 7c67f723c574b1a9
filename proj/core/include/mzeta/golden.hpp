#pragma once

#include <string>
#include <vector>

namespace mzeta {

// One row of the golden-value table, a versioned CSV with columns
// function,args,value,truncation,tail_bound (args joined with ';').
struct GoldenRow {
  std::string function;
  std::vector<double> args;
  double value = 0.0;
  std::string truncation;
  double tail_bound = 0.0;
};

std::vector<GoldenRow> read_golden(const std::string& path);
void write_golden(const std::string& path, const std::vector<GoldenRow>& rows);

}  // namespace mzeta
