#pragma once

#include <string>
#include <vector>

namespace mzeta {

/// Parses an axis range "start:stop:step" (inclusive endpoints within
/// floating tolerance) or a single value. Throws std::invalid_argument.
std::vector<double> parse_axis(const std::string& spec);

/// Parses semicolon-separated explicit tuples, e.g. "2,2,2;2,3,2".
std::vector<std::vector<double>> parse_tuples(const std::string& spec);

}  // namespace mzeta
