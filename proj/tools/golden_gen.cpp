// Regenerates the golden-value table. The recorded values are minted by the
// series engines at tight tolerance; regression tests compare against them.

#include <cstdio>
#include <string>

#include "mzeta/golden.hpp"
#include "mzeta/series.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <output.csv>\n", argv[0]);
    return 64;
  }

  mzeta::EvaluationConfig cfg;
  cfg.rel_tol = 1e-12;
  const std::string trunc = "adaptive;rel_tol=1e-12";

  std::vector<mzeta::GoldenRow> rows;
  auto add = [&](const char* fn, std::vector<double> args, mzeta::Estimate e) {
    rows.push_back({fn, std::move(args), e.value, trunc, e.error});
  };

  add("zeta2", {3, 2}, mzeta::zeta2_series_ex(3, 2, cfg));
  add("zeta2", {2, 3}, mzeta::zeta2_series_ex(2, 3, cfg));
  add("zeta3", {2, 2, 2}, mzeta::zeta3_series_ex(2, 2, 2, cfg));
  add("zeta3", {2, 3, 2}, mzeta::zeta3_series_ex(2, 3, 2, cfg));
  add("zeta3", {3, 2, 4}, mzeta::zeta3_series_ex(3, 2, 4, cfg));
  add("tornheim", {2, 2, 2}, mzeta::tornheim_series_ex(2, 2, 2, cfg));

  mzeta::write_golden(argv[1], rows);
  std::printf("wrote %zu golden rows to %s\n", rows.size(), argv[1]);
  return 0;
}
