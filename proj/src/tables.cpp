#include "sobocon/tables.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "sobocon/bounds_lower.hpp"
#include "sobocon/errors.hpp"

namespace sobocon::tables {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string fmt_r(double r) {
  return std::isinf(r) ? "inf" : fmt("%g", r);
}

nlohmann::ordered_json row_json(const TableRow& row) {
  nlohmann::ordered_json j;
  if (std::isinf(row.r))
    j["r"] = "inf";
  else
    j["r"] = row.r;
  if (row.s_minus)
    j["s_minus"] = *row.s_minus;
  else
    j["s_minus"] = nullptr;
  j["s_plus"] = row.s_plus;
  if (row.rel_uncertainty)
    j["rel_uncertainty"] = *row.rel_uncertainty;
  else
    j["rel_uncertainty"] = nullptr;
  if (row.lambda_star)
    j["lambda_star"] = *row.lambda_star;
  else
    j["lambda_star"] = nullptr;
  j["sharp"] = row.sharp;
  j["s_minus_rounded"] = row.s_minus_rounded;
  j["s_plus_rounded"] = row.s_plus_rounded;
  return j;
}

}  // namespace

std::string round_up_4(double v) {
  return fmt("%.4f", std::ceil(v * 1e4) / 1e4);
}

std::string round_down_4(double v) {
  return fmt("%.4f", std::floor(v * 1e4) / 1e4);
}

CaseSpec worked_case(char label) {
  switch (label) {
    case 'A': return {1.0, 1, {2.2, 3, 4, 6, 50, 1000}};
    case 'B': return {3.0, 1, {2.2, 3, 6, 10, 20}};
    case 'C': return {2.0, 2, {2.1, 3, 6, 18, 50, 100}};
    case 'D': return {2.0, 3, {2.1, 3, 4, 7, 11, 20, 100, 1000}};
    default:
      throw domain_error(std::string("unknown table case '") + label +
                         "' (expected A, B, C or D)");
  }
}

std::vector<TableRow> build_rows(double n, int d,
                                 const std::vector<double>& r_values,
                                 const numerics::QuadratureOptions& opts) {
  std::vector<TableRow> rows;
  rows.reserve(r_values.size());
  for (double r : r_values) {
    const bounds::BoundBracket b = bounds::bracket(r, n, d, opts);
    TableRow row;
    row.r = r;
    row.s_minus = b.lower;
    row.s_plus = b.upper;
    row.rel_uncertainty = b.rel_uncertainty;
    row.lambda_star = b.lambda_star;
    row.sharp = b.kind == bounds::BracketKind::Sharp;
    row.s_plus_rounded = round_up_4(b.upper);
    row.s_minus_rounded = b.lower ? round_down_4(*b.lower) : "";
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> log_spaced(double r_min, double r_max, int steps) {
  if (!(r_min > 2.0) || !(r_max > r_min) || steps < 2)
    throw domain_error("log_spaced: need 2 < r_min < r_max and steps >= 2");
  std::vector<double> rs(static_cast<size_t>(steps));
  const double lr = std::log(r_max / r_min);
  for (int i = 0; i < steps; ++i)
    rs[static_cast<size_t>(i)] = r_min * std::exp(lr * i / (steps - 1.0));
  rs.back() = r_max;
  return rs;
}

std::string render_table(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "      r       S-       S+   rel_uncertainty\n";
  for (const TableRow& row : rows) {
    char line[128];
    std::snprintf(line, sizeof line, "%7s  %7s  %7s   %s\n",
                  fmt_r(row.r).c_str(),
                  row.s_minus ? row.s_minus_rounded.c_str() : "-",
                  row.s_plus_rounded.c_str(),
                  row.rel_uncertainty ? fmt("%.6f", *row.rel_uncertainty).c_str()
                                      : "-");
    out << line;
  }
  return out.str();
}

std::string render_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "r,s_minus,s_plus,rel_uncertainty,lambda_star\n";
  for (const TableRow& row : rows) {
    out << fmt_r(row.r) << ',';
    if (row.s_minus) out << fmt("%.12g", *row.s_minus);
    out << ',' << fmt("%.12g", row.s_plus) << ',';
    if (row.rel_uncertainty) out << fmt("%.12g", *row.rel_uncertainty);
    out << ',';
    if (row.lambda_star) out << fmt("%.12g", *row.lambda_star);
    out << '\n';
  }
  return out.str();
}

std::string render_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TableRow& row : rows) arr.push_back(row_json(row));
  return arr.dump(2) + "\n";
}

}  // namespace sobocon::tables
