#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "mzeta/gridspec.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(MZETA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

// minimal CSV split; the formats emitted here never quote fields
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

TEST_CASE("axis range parsing") {
  using mzeta::parse_axis;
  CHECK(parse_axis("2") == std::vector<double>{2.0});
  const auto axis = parse_axis("1:3:0.5");
  REQUIRE(axis.size() == 5);
  CHECK(axis.front() == 1.0);
  CHECK(axis.back() == doctest::Approx(3.0));
  // inclusive endpoint within floating tolerance
  CHECK(parse_axis("1:2:0.1").size() == 11);
  CHECK_THROWS_AS(parse_axis("1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axis("1:2:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axis("a:2:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axis("3:1:1"), std::invalid_argument);
}

TEST_CASE("tuple grid parsing") {
  using mzeta::parse_tuples;
  const auto tuples = parse_tuples("2,2,2;2,3,2");
  REQUIRE(tuples.size() == 2);
  CHECK(tuples[0] == std::vector<double>{2.0, 2.0, 2.0});
  CHECK(tuples[1] == std::vector<double>{2.0, 3.0, 2.0});
  CHECK_THROWS_AS(parse_tuples(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_tuples("1,x"), std::invalid_argument);
}

TEST_CASE("eval prints value with error and provenance") {
  const RunResult integral = run_cli("eval zeta2 --args 2,2 --method integral");
  CHECK(integral.exit_code == 0);
  CHECK(integral.out.find("0.8117424252833") != std::string::npos);
  CHECK(integral.out.find("zeta2/integral") != std::string::npos);

  const RunResult series = run_cli("eval zeta2 --args 2,2 --method series");
  CHECK(series.exit_code == 0);
  const double vi = std::stod(integral.out);
  const double vs = std::stod(series.out);
  CHECK(std::fabs(vi - vs) <= 1e-8 * std::fabs(vs));

  const RunResult hz = run_cli("eval hurwitz --args 2,1");
  CHECK(hz.exit_code == 0);
  CHECK(hz.out.find("1.6449340668") != std::string::npos);

  // approx reports the certified gap bound as its error
  const RunResult ap = run_cli("eval zeta2 --args 2,4 --method approx");
  CHECK(ap.exit_code == 0);
  CHECK(ap.out.find("0.4816469328") != std::string::npos);
  CHECK(ap.out.find("zeta2/approx") != std::string::npos);

  const RunResult ti = run_cli("table zeta2 --s1 2 --s2 2:3:1 --method integral");
  CHECK(ti.exit_code == 0);
  CHECK(split_lines(ti.out).size() == 3);
}

TEST_CASE("exit codes: domain, accuracy, usage") {
  CHECK(run_cli("eval zeta --args 0.5").exit_code == 2);
  CHECK(run_cli("eval hurwitz --args 2,-1").exit_code == 2);
  CHECK(run_cli("eval zeta --args 2 --tol 1e-300").exit_code == 3);
  CHECK(run_cli("eval zeta --args 2 --badflag").exit_code == 64);
  CHECK(run_cli("eval nosuch --args 2").exit_code == 64);
  CHECK(run_cli("eval zeta2 --args 2,2 --method nosuch").exit_code == 64);
  CHECK(run_cli("eval zeta --args \"2;3\"").exit_code == 64);
  CHECK(run_cli("eval zeta2 --args 2").exit_code == 64);  // wrong arity
  CHECK(run_cli("verify all --grid \"2,2\"").exit_code == 64);
  CHECK(run_cli("table zeta2 --s1 1:2:1 --s2 2 --format csv --out /nonexistent-dir/x.csv")
            .exit_code == 74);
  CHECK(run_cli("table zeta2 --s1 1:2:1 --format csv").exit_code == 64);  // no --s2
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify reports stream as json and aggregate the exit code") {
  const RunResult r = run_cli("verify closed-forms");
  CHECK(r.exit_code == 0);
  const auto lines = split_lines(r.out);
  CHECK(lines.size() == 9);  // 4 pair + 2 triple + 3 even-gap
  for (const auto& line : lines) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["passed"].get<bool>());
    CHECK(j.contains("identity"));
    CHECK(j.contains("detail"));
  }

  const RunResult t1 = run_cli("verify theorem1 --grid default");
  CHECK(t1.exit_code == 0);
  CHECK(split_lines(t1.out).size() == 16);

  const RunResult custom = run_cli("verify theorem1 --grid \"2,2;3,2\"");
  CHECK(custom.exit_code == 0);
  CHECK(split_lines(custom.out).size() == 2);
}

TEST_CASE("verify emits parsable csv with a stable column order") {
  const RunResult r = run_cli("verify tornheim-reduction --format csv");
  CHECK(r.exit_code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 7);  // header + 6 grid points
  CHECK(lines[0] == "identity,args,lhs,rhs,abs_err,rel_err,tol,passed");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    REQUIRE(fields.size() == 8);
    CHECK(fields[0] == "tornheim-reduction");
    CHECK(std::stod(fields[5]) <= 1e-8);  // rel_err column
    CHECK(fields[7] == "true");
  }
}

TEST_CASE("verify all runs every suite") {
  const RunResult r = run_cli("verify all --threads 2");
  CHECK(r.exit_code == 0);
  CHECK(split_lines(r.out).size() == 51);  // 16 + 4 + 16 + 9 + 6
}

TEST_CASE("table output is deterministic and parsable") {
  const std::string spec = "table zeta2 --s1 1:3:0.5 --s2 1.5:6:1.5 --format csv";
  const RunResult a = run_cli(spec);
  const RunResult b = run_cli(spec);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const auto lines = split_lines(a.out);
  REQUIRE(lines.size() == 1 + 5 * 4);
  CHECK(lines[0] == "s1,s2,value,error");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    REQUIRE(fields.size() == 4);
    CHECK(std::stod(fields[2]) > 0.0);
  }

  const RunResult j = run_cli("table zeta3 --grid \"2,2,2;2,3,2\" --format json");
  CHECK(j.exit_code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0]["s1"] == 2.0);
  CHECK(parsed[1]["s2"] == 3.0);
  CHECK(parsed[0]["value"].get<double>() ==
        doctest::Approx(0.19075182412208421).epsilon(1e-9));
}

TEST_CASE("table writes files and respects --out") {
  const std::string path = "cli_table_tmp.csv";
  const RunResult r =
      run_cli("table zeta --s1 2:4:1 --format csv --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "s,value,error");
  int rows = 0;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 3);
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("environment variables mirror the global flags") {
  const std::string cmd = std::string("MZETA_TOL=1e-300 ") + MZETA_CLI_PATH +
                          " eval zeta --args 2 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[256];
  while (fread(buf, 1, sizeof buf, pipe) > 0) {
  }
  CHECK(WEXITSTATUS(pclose(pipe)) == 3);
}
