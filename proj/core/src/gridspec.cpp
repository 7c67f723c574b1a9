#include "mzeta/gridspec.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace mzeta {

namespace {

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (used != text.size())
    throw std::invalid_argument("trailing characters in number: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t next = text.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(text.substr(pos));
      return out;
    }
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
}

}  // namespace

std::vector<double> parse_axis(const std::string& spec) {
  const std::vector<std::string> parts = split(spec, ':');
  if (parts.size() == 1) return {parse_number(parts[0])};
  if (parts.size() != 3)
    throw std::invalid_argument("axis spec must be 'value' or 'start:stop:step'");
  const double start = parse_number(parts[0]);
  const double stop = parse_number(parts[1]);
  const double step = parse_number(parts[2]);
  if (!(step > 0.0)) throw std::invalid_argument("axis step must be positive");
  if (stop < start - 1e-9 * std::fabs(step))
    throw std::invalid_argument("axis stop must not precede start");
  const long long count =
      static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 1000000) throw std::invalid_argument("axis spec yields too many points");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) values.push_back(start + step * i);
  return values;
}

std::vector<std::vector<double>> parse_tuples(const std::string& spec) {
  std::vector<std::vector<double>> tuples;
  for (const std::string& chunk : split(spec, ';')) {
    if (chunk.empty()) throw std::invalid_argument("empty tuple in grid spec");
    std::vector<double> tuple;
    for (const std::string& field : split(chunk, ','))
      tuple.push_back(parse_number(field));
    tuples.push_back(std::move(tuple));
  }
  if (tuples.empty()) throw std::invalid_argument("empty grid spec");
  return tuples;
}

}  // namespace mzeta
