#ifndef SOBOCON_TABLES_HPP
#define SOBOCON_TABLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "sobocon/numerics.hpp"

namespace sobocon::tables {

/// One output row of a bound table. Rounded strings follow the bracket-safe
/// convention: the upper bound is rounded toward +infinity at the fourth
/// decimal, the lower bound toward zero, so the printed bracket still
/// contains the true one.
struct TableRow {
  double r;  // +infinity allowed
  std::optional<double> s_minus;
  double s_plus;
  std::optional<double> rel_uncertainty;
  std::optional<double> lambda_star;
  bool sharp;
  std::string s_plus_rounded;
  std::string s_minus_rounded;  // empty when no lower bound exists
};

std::string round_up_4(double v);
std::string round_down_4(double v);

struct CaseSpec {
  double n;
  int d;
  std::vector<double> r_values;
};

/// The four worked cases and their r grids:
/// A: (1,1), B: (3,1), C: (2,2), D: (2,3).
CaseSpec worked_case(char label);

std::vector<TableRow> build_rows(double n, int d,
                                 const std::vector<double>& r_values,
                                 const numerics::QuadratureOptions& opts = {});

/// Log-spaced r grid in [r_min, r_max], endpoints included.
std::vector<double> log_spaced(double r_min, double r_max, int steps);

std::string render_table(const std::vector<TableRow>& rows);
std::string render_csv(const std::vector<TableRow>& rows);
std::string render_json(const std::vector<TableRow>& rows);

}  // namespace sobocon::tables

#endif  // SOBOCON_TABLES_HPP
