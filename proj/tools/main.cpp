// sobocon: two-sided brackets for sharp Sobolev imbedding constants.
// Subcommands: bound (single triple), table (worked cases A-D or custom
// r grids), sweep (log-spaced r series for fixed n, d).
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sobocon/bounds_lower.hpp"
#include "sobocon/bounds_upper.hpp"
#include "sobocon/errors.hpp"
#include "sobocon/tables.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitConvergence = 4;

double parse_r(const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  size_t pos = 0;
  double value;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--r", "not a number or 'inf': " + text);
  }
  if (pos != text.size())
    throw CLI::ValidationError("--r", "not a number or 'inf': " + text);
  return value;
}

std::vector<double> parse_r_list(const std::string& text) {
  std::vector<double> rs;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string tok = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!tok.empty()) rs.push_back(parse_r(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (rs.empty()) throw CLI::ValidationError("--r", "empty r list");
  return rs;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void emit_rows(const std::vector<sobocon::tables::TableRow>& rows,
               const std::string& format) {
  if (format == "csv")
    std::cout << sobocon::tables::render_csv(rows);
  else if (format == "json")
    std::cout << sobocon::tables::render_json(rows);
  else
    std::cout << sobocon::tables::render_table(rows);
}

void run_bound(double r, double n, int d, const std::string& format,
               bool verbose, const sobocon::numerics::QuadratureOptions& opts) {
  const auto rows = sobocon::tables::build_rows(n, d, {r}, opts);
  const sobocon::tables::TableRow& row = rows.front();

  if (format == "csv" || format == "json") {
    emit_rows(rows, format);
  } else {
    const auto cls = sobocon::bounds::classify(r, n, d);
    std::cout << "(r, n, d) = (" << (std::isinf(r) ? "inf" : fmt("%g", r))
              << ", " << fmt("%g", n) << ", " << d
              << ")   class: " << sobocon::bounds::to_string(cls)
              << "   status: " << (row.sharp ? "sharp" : (row.s_minus ? "estimated" : "upper-only"))
              << '\n';
    if (row.s_minus)
      std::cout << "S- = " << row.s_minus_rounded << "  (= "
                << fmt("%.12g", *row.s_minus) << ")\n";
    std::cout << "S+ = " << row.s_plus_rounded << "  (= "
              << fmt("%.12g", row.s_plus) << ")\n";
    if (row.rel_uncertainty)
      std::cout << "relative uncertainty = " << fmt("%.6g", *row.rel_uncertainty)
                << '\n';
  }

  if (verbose) {
    const auto ub =
        sobocon::bounds::upper_bound_breakdown({r, n, d});
    std::cout << "C_{r,d}  = " << fmt("%.12g", ub.hy_constant) << '\n'
              << "s        = " << fmt("%.12g", ub.s_conjugate) << '\n';
    if (row.s_minus && !row.sharp) {
      const auto lb = sobocon::bounds::lower_bound(r, n, d, opts);
      std::cout << "I        = " << fmt("%.12g", lb.i_value) << '\n'
                << "lambda*  = " << fmt("%.12g", lb.phi_min.arg_min) << '\n'
                << "Phi      = " << fmt("%.12g", lb.phi_min.min_value) << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-sided brackets for sharp Sobolev imbedding constants"};
  app.require_subcommand(1);

  sobocon::numerics::QuadratureOptions opts;
  std::string format = "table";
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--abs-tol", opts.abs_tol, "quadrature absolute tolerance");
    cmd->add_option("--rel-tol", opts.rel_tol, "quadrature relative tolerance");
  };

  // bound
  auto* bound = app.add_subcommand("bound", "bracket for a single (r, n, d)");
  std::string r_text;
  double n = 0.0;
  int d = 1;
  bool verbose = false;
  bound->add_option("--r", r_text, "Lebesgue exponent in [2, inf]; accepts 'inf'")
      ->required();
  bound->add_option("--n", n, "Sobolev order (>= 0, fractional allowed)")
      ->required();
  bound->add_option("--d", d, "space dimension (positive integer)")->required();
  bound->add_flag("--verbose", verbose, "print intermediate quantities");
  add_common(bound);

  // table
  auto* table = app.add_subcommand("table", "worked-case or custom tables");
  std::string case_label;
  std::string custom_r;
  double tn = 0.0;
  int td = 1;
  table->add_option("case", case_label, "A, B, C, D or custom")->required();
  table->add_option("--n", tn, "Sobolev order (custom case)");
  table->add_option("--d", td, "space dimension (custom case)");
  table->add_option("--r", custom_r, "comma-separated r list (custom case)");
  add_common(table);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "log-spaced r sweep at fixed (n, d)");
  double sn = 0.0, r_min = 0.0, r_max = 0.0;
  int sd = 1, steps = 0;
  sweep->add_option("--n", sn, "Sobolev order")->required();
  sweep->add_option("--d", sd, "space dimension")->required();
  sweep->add_option("--r-min", r_min, "lower end of the r range (> 2)")
      ->required();
  sweep->add_option("--r-max", r_max, "upper end of the r range")->required();
  sweep->add_option("--steps", steps, "number of grid points (>= 2)")
      ->required();
  add_common(sweep);

  try {
    app.parse(argc, argv);

    if (bound->parsed()) {
      run_bound(parse_r(r_text), n, d, format, verbose, opts);
    } else if (table->parsed()) {
      if (case_label == "custom") {
        if (custom_r.empty())
          throw CLI::ValidationError("--r", "custom tables need an r list");
        emit_rows(sobocon::tables::build_rows(tn, td, parse_r_list(custom_r),
                                              opts),
                  format);
      } else if (case_label.size() == 1 && case_label[0] >= 'A' &&
                 case_label[0] <= 'D') {
        const auto spec = sobocon::tables::worked_case(case_label[0]);
        emit_rows(sobocon::tables::build_rows(spec.n, spec.d, spec.r_values,
                                              opts),
                  format);
      } else {
        throw CLI::ValidationError("case", "unknown case '" + case_label +
                                               "' (expected A, B, C, D or "
                                               "custom)");
      }
    } else if (sweep->parsed()) {
      if (!(r_min > 2.0) || !(r_max > r_min) || steps < 2)
        throw CLI::ValidationError(
            "sweep", "need 2 < r-min < r-max and steps >= 2");
      emit_rows(sobocon::tables::build_rows(
                    sn, sd, sobocon::tables::log_spaced(r_min, r_max, steps),
                    opts),
                format);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const sobocon::convergence_error& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const sobocon::bracketing_error& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const sobocon::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const sobocon::range_error& e) {
    std::cerr << "range error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
