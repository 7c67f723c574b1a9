#include "mzeta/golden.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mzeta {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::vector<GoldenRow> read_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden table: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "function,args,value,truncation,tail_bound")
    throw std::runtime_error("unexpected golden table header in " + path);
  std::vector<GoldenRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = split(line, ',');
    if (fields.size() != 5)
      throw std::runtime_error("malformed golden row: " + line);
    GoldenRow row;
    row.function = fields[0];
    for (const std::string& a : split(fields[1], ';'))
      row.args.push_back(std::stod(a));
    row.value = std::stod(fields[2]);
    row.truncation = fields[3];
    row.tail_bound = std::stod(fields[4]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_golden(const std::string& path, const std::vector<GoldenRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write golden table: " + path);
  out << "function,args,value,truncation,tail_bound\n";
  for (const GoldenRow& row : rows) {
    out << row.function << ',';
    for (std::size_t i = 0; i < row.args.size(); ++i) {
      if (i) out << ';';
      out << fmt17(row.args[i]);
    }
    out << ',' << fmt17(row.value) << ',' << row.truncation << ','
        << fmt17(row.tail_bound) << '\n';
  }
  if (!out) throw std::runtime_error("write failed for golden table: " + path);
}

}  // namespace mzeta
