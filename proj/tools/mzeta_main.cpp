// Command-line front end: point evaluation, identity verification and table
// generation for the zeta family evaluators.

#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzeta/errors.hpp"
#include "mzeta/gridspec.hpp"
#include "mzeta/hurwitz.hpp"
#include "mzeta/identities.hpp"
#include "mzeta/quadrature.hpp"
#include "mzeta/report.hpp"
#include "mzeta/series.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitAccuracy = 3;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct Options {
  mzeta::EvaluationConfig cfg;
  int threads = 0;
};

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt3(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Runs fn(i) for i in [0, n) on up to `threads` workers, capturing the first
// exception by index. Output consumers read results in index order.
template <typename F>
void parallel_for(int n, int threads, F&& fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, n));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) {
        try {
          fn(i);
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

int arity_of(const std::string& function) {
  if (function == "zeta") return 1;
  if (function == "hurwitz" || function == "zeta2") return 2;
  if (function == "zeta3" || function == "tornheim") return 3;
  throw usage_error("unknown function '" + function + "'");
}

mzeta::Estimate evaluate(const std::string& function, const std::string& method,
                         const std::vector<double>& args, const Options& opt) {
  const mzeta::EvaluationConfig& cfg = opt.cfg;
  if (static_cast<int>(args.size()) != arity_of(function))
    throw usage_error("function '" + function + "' takes " +
                      std::to_string(arity_of(function)) + " arguments");

  if (function == "zeta") {
    if (method != "series") throw usage_error("zeta supports only --method series");
    return mzeta::hurwitz_zeta_ex(mzeta::ZetaArgument(args[0], 1.0), cfg);
  }
  if (function == "hurwitz") {
    if (method != "series") throw usage_error("hurwitz supports only --method series");
    return mzeta::hurwitz_zeta_ex(mzeta::ZetaArgument(args[0], args[1]), cfg);
  }
  if (function == "zeta2") {
    if (method == "series") return mzeta::zeta2_series_ex(args[0], args[1], cfg);
    if (method == "integral") return mzeta::zeta2_integral_ex(args[0], args[1], cfg);
    if (method == "approx") {
      const mzeta::SmoothApprox sa = mzeta::zeta2_smooth_approx(args[0], args[1], cfg);
      return {sa.approx, sa.a_bound};
    }
    throw usage_error("zeta2 supports --method series|integral|approx");
  }
  if (function == "zeta3") {
    if (method == "series") return mzeta::zeta3_series_ex(args[0], args[1], args[2], cfg);
    if (method == "integral")
      return mzeta::zeta3_integral_ex(args[0], args[1], args[2], cfg);
    throw usage_error("zeta3 supports --method series|integral");
  }
  if (function == "tornheim") {
    if (method != "series") throw usage_error("tornheim supports only --method series");
    return mzeta::tornheim_series_ex(args[0], args[1], args[2], cfg);
  }
  throw usage_error("unknown function '" + function + "'");
}

std::vector<mzeta::VerificationReport> run_suite(const std::string& suite,
                                                 const std::string& grid,
                                                 const Options& opt) {
  const mzeta::EvaluationConfig& cfg = opt.cfg;
  using Report = mzeta::VerificationReport;
  if (suite == "all" && grid != "default")
    throw usage_error("suite 'all' runs the default grids");

  auto pairs_from = [&](std::vector<std::pair<double, double>> defaults) {
    if (grid == "default") return defaults;
    std::vector<std::pair<double, double>> out;
    for (const auto& t : mzeta::parse_tuples(grid)) {
      if (t.size() != 2) throw usage_error("suite '" + suite + "' needs 2-tuples");
      out.emplace_back(t[0], t[1]);
    }
    return out;
  };

  std::vector<std::function<Report()>> jobs;
  if (suite == "theorem1" || suite == "all") {
    for (const auto& [s1, s2] :
         suite == "all" ? mzeta::theorem1_default_grid()
                        : pairs_from(mzeta::theorem1_default_grid()))
      jobs.push_back([=, &cfg] { return mzeta::verify_theorem1(s1, s2, cfg); });
  }
  if (suite == "theorem2" || suite == "all") {
    std::vector<std::array<double, 3>> pts = mzeta::theorem2_default_points();
    if (suite == "theorem2" && grid != "default") {
      pts.clear();
      for (const auto& t : mzeta::parse_tuples(grid)) {
        if (t.size() != 3) throw usage_error("suite 'theorem2' needs 3-tuples");
        pts.push_back({t[0], t[1], t[2]});
      }
    }
    for (const auto& p : pts)
      jobs.push_back([=, &cfg] { return mzeta::verify_theorem2(p[0], p[1], p[2], cfg); });
  }
  if (suite == "reflection" || suite == "all") {
    for (const auto& [s1, s2] :
         suite == "all" ? mzeta::reflection_default_grid()
                        : pairs_from(mzeta::reflection_default_grid()))
      jobs.push_back([=, &cfg] { return mzeta::reflection_check(s1, s2, cfg); });
  }
  if (suite == "closed-forms" || suite == "all") {
    if (suite == "closed-forms" && grid != "default")
      throw usage_error("suite 'closed-forms' has a fixed grid");
    for (double s : mzeta::pair_closed_form_default_grid())
      jobs.push_back([=, &cfg] { return mzeta::verify_pair_closed_form(s, cfg); });
    for (double s : mzeta::triple_closed_form_default_grid())
      jobs.push_back([=, &cfg] { return mzeta::verify_triple_closed_form(s, cfg); });
    for (const auto& [s1, s2] : mzeta::even_gap_default_points())
      jobs.push_back([=, &cfg] { return mzeta::verify_even_gap(s1, s2, cfg); });
  }
  if (suite == "tornheim-reduction" || suite == "all") {
    for (const auto& [s1, s3] :
         suite == "all" ? mzeta::tornheim_reduction_default_grid()
                        : pairs_from(mzeta::tornheim_reduction_default_grid()))
      jobs.push_back(
          [=, &cfg] { return mzeta::verify_tornheim_reduction(s1, s3, cfg); });
  }
  if (jobs.empty())
    throw usage_error("unknown suite '" + suite +
                      "' (expected theorem1, theorem2, reflection, closed-forms, "
                      "tornheim-reduction or all)");

  std::vector<Report> reports(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), opt.threads,
               [&](int i) { reports[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)](); });
  return reports;
}

int cmd_verify(const std::string& suite, const std::string& grid,
               const std::string& format, const Options& opt) {
  const std::vector<mzeta::VerificationReport> reports = run_suite(suite, grid, opt);
  if (format == "csv") {
    std::cout << mzeta::report_csv_header() << '\n';
    for (const auto& r : reports) std::cout << mzeta::to_csv_row(r) << '\n';
  } else {
    for (const auto& r : reports) std::cout << mzeta::to_json(r) << '\n';
  }
  for (const auto& r : reports)
    if (!r.passed) return kExitVerifyFailed;
  return 0;
}

std::vector<std::string> table_columns(const std::string& function) {
  if (function == "zeta") return {"s"};
  if (function == "hurwitz") return {"s", "alpha"};
  if (function == "zeta2") return {"s1", "s2"};
  return {"s1", "s2", "s3"};
}

int cmd_table(const std::string& function, const std::string& method,
              const std::vector<std::string>& axes, const std::string& grid,
              const std::string& format, const std::string& out_path,
              const Options& opt) {
  const int arity = arity_of(function);
  std::vector<std::vector<double>> rows;
  if (!grid.empty()) {
    rows = mzeta::parse_tuples(grid);
    for (const auto& r : rows)
      if (static_cast<int>(r.size()) != arity)
        throw usage_error("grid tuples must have " + std::to_string(arity) +
                          " fields for " + function);
  } else {
    std::vector<std::vector<double>> axis_values;
    for (int a = 0; a < arity; ++a) {
      if (axes[static_cast<std::size_t>(a)].empty())
        throw usage_error("table " + function + " needs --s" + std::to_string(a + 1) +
                          " (or --grid)");
      axis_values.push_back(mzeta::parse_axis(axes[static_cast<std::size_t>(a)]));
    }
    rows.push_back({});
    std::vector<std::vector<double>> expanded;
    for (const auto& axis : axis_values) {
      expanded.clear();
      for (const auto& prefix : rows)
        for (double v : axis) {
          std::vector<double> row = prefix;
          row.push_back(v);
          expanded.push_back(std::move(row));
        }
      rows = expanded;
    }
  }

  std::vector<mzeta::Estimate> values(rows.size());
  parallel_for(static_cast<int>(rows.size()), opt.threads, [&](int i) {
    values[static_cast<std::size_t>(i)] =
        evaluate(function, method, rows[static_cast<std::size_t>(i)], opt);
  });

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw io_error("cannot open output file: " + out_path);
    out = &file;
  }

  const std::vector<std::string> cols = table_columns(function);
  if (format == "csv") {
    for (const auto& c : cols) *out << c << ',';
    *out << "value,error\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (double v : rows[i]) *out << fmt17(v) << ',';
      *out << fmt17(values[i].value) << ',' << fmt17(values[i].error) << '\n';
    }
  } else {
    *out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      nlohmann::ordered_json j;
      for (std::size_t c = 0; c < cols.size(); ++c) j[cols[c]] = rows[i][c];
      j["value"] = values[i].value;
      j["error"] = values[i].error;
      *out << "  " << j.dump() << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    *out << "]\n";
  }
  out->flush();
  if (!*out) throw io_error("write failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta-family evaluator: Hurwitz and Riemann zeta, double and "
               "triple zeta sums, Tornheim sums, and their integral "
               "representations"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tol", opt.cfg.rel_tol, "target relative tolerance")
      ->envname("MZETA_TOL");
  app.add_option("--quad-order", opt.cfg.quad_order,
                 "Gauss-Legendre nodes per unit segment")
      ->envname("MZETA_QUAD_ORDER");
  app.add_option("--max-segments", opt.cfg.max_segments,
                 "cap on the [1, inf) segmentation")
      ->envname("MZETA_MAX_SEGMENTS");
  app.add_option("--threads", opt.threads, "worker threads for grids (0 = auto)")
      ->envname("MZETA_THREADS");

  std::string function, method = "series", args_spec;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one point");
  eval->fallthrough();
  eval->add_option("function", function, "zeta|hurwitz|zeta2|zeta3|tornheim")
      ->required();
  eval->add_option("--args", args_spec, "comma-separated arguments")->required();
  eval->add_option("--method", method, "series|integral|approx");

  std::string suite, grid = "default", verify_format = "json";
  CLI::App* verify = app.add_subcommand("verify", "run an identity suite");
  verify->fallthrough();
  verify->add_option("suite", suite,
                     "theorem1|theorem2|reflection|closed-forms|tornheim-reduction|all")
      ->required();
  verify->add_option("--grid", grid, "default or explicit tuples 'a,b;c,d'");
  verify->add_option("--format", verify_format, "json|csv");

  std::string tfunction, tmethod = "series", ts1, ts2, ts3, tgrid,
              tformat = "csv", tout;
  CLI::App* table = app.add_subcommand("table", "tabulate values over a grid");
  table->fallthrough();
  table->add_option("function", tfunction, "zeta|hurwitz|zeta2|zeta3|tornheim")
      ->required();
  table->add_option("--method", tmethod, "series|integral|approx");
  table->add_option("--s1", ts1, "axis spec 'value' or 'start:stop:step'");
  table->add_option("--s2", ts2, "axis spec");
  table->add_option("--s3", ts3, "axis spec");
  table->add_option("--grid", tgrid, "explicit tuples 'a,b;c,d'");
  table->add_option("--format", tformat, "csv|json");
  table->add_option("--out", tout, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    opt.cfg.validate();
    if (eval->parsed()) {
      const auto tuples = mzeta::parse_tuples(args_spec);
      if (tuples.size() != 1)
        throw usage_error("eval takes a single argument tuple");
      const mzeta::Estimate e = evaluate(function, method, tuples[0], opt);
      std::cout << fmt17(e.value) << " ± " << fmt3(e.error) << "  (" << function
                << "/" << method << ")\n";
      return 0;
    }
    if (verify->parsed()) {
      if (verify_format != "json" && verify_format != "csv")
        throw usage_error("--format must be json or csv");
      return cmd_verify(suite, grid, verify_format, opt);
    }
    if (table->parsed()) {
      if (tformat != "json" && tformat != "csv")
        throw usage_error("--format must be json or csv");
      return cmd_table(tfunction, tmethod, {ts1, ts2, ts3}, tgrid, tformat, tout, opt);
    }
    return kExitUsage;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const io_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const mzeta::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const mzeta::accuracy_error& e) {
    std::cerr << "accuracy error: " << e.what() << '\n';
    return kExitAccuracy;
  }
}
