#pragma once

// Comparison tables and figure data for the mean-ratio bounds, emitted as
// CSV with locale-independent number formatting.

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

#include "rieszweyl/bounds.hpp"
#include "rieszweyl/error.hpp"

namespace rieszweyl::report {

inline constexpr int kTablePrecision = 6;
inline constexpr int kFullPrecision = 17;

struct Table {
  std::string id;
  std::string title;
  std::string k_rule;
  std::vector<std::string> columns;  // first column is the x variable
  std::vector<std::vector<double>> rows;
};

/// Shortest round-trip-safe text at the given significant digits, '.'
/// decimal point regardless of locale.
inline std::string format_number(double value, int significant) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, significant);
  if (res.ec != std::errc()) throw RangeError("format_number: value does not fit");
  return std::string(buf, res.ptr);
}

inline double round_significant(double value, int significant) {
  return std::stod(format_number(value, significant));
}

inline void write_csv(std::ostream& out, const Table& table, bool full_precision) {
  const int digits = full_precision ? kFullPrecision : kTablePrecision;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const double v = row[i];
      // The x column holds integers (d or k).
      out << (i ? "," : "") << (i == 0 ? format_number(v, kFullPrecision) : format_number(v, digits));
    }
    out << '\n';
  }
}

struct Range {
  long lo;
  long hi;
};

inline void check_range(const Range& r, long min_lo, const char* what) {
  if (r.lo < min_lo || r.hi < r.lo) {
    throw ConfigError(std::string(what) + " range must satisfy " + std::to_string(min_lo) +
                      " <= lo <= hi");
  }
}

inline constexpr Range kTableDimensions{2, 7};
inline constexpr long kTableIndex = 127;

/// k = floor((d+1)(1+d/2)/(1+d/4)) + 1.
inline long abhh_table_index(int d) {
  return (2 * (d + 1) * (d + 2)) / (d + 4) + 1;
}

/// Bounds on mean_127 / lambda_1 by dimension.
inline Table table1(Range dims = kTableDimensions) {
  check_range(dims, 1, "dimension");
  Table t{"table1", "bounds on mean_k / lambda_1 at k = 127", "k = 127",
          {"d", "simple_p9", "cy_av", "her2", "ab94_avg", "fk_weyl_avg"}, {}};
  for (long d = dims.lo; d <= dims.hi; ++d) {
    const bounds::Dimension dim(static_cast<int>(d));
    t.rows.push_back({static_cast<double>(d), bounds::simple_p9(dim, kTableIndex),
                      bounds::cy_av(dim, kTableIndex), bounds::her2(dim, kTableIndex),
                      bounds::ab94_avg(dim, kTableIndex), bounds::fk_weyl_avg(dim, kTableIndex)});
  }
  return t;
}

/// abhh and averaged refined Cheng-Yang, each divided by fk_weyl_avg.
inline Table table2(Range dims = kTableDimensions) {
  check_range(dims, 1, "dimension");
  Table t{"table2", "abhh and cheng_yang2_avg relative to fk_weyl_avg",
          "k = floor((d+1)(1+d/2)/(1+d/4)) + 1",
          {"d", "k", "abhh_over_fk_weyl_avg", "cheng_yang2_avg_over_fk_weyl_avg"}, {}};
  for (long d = dims.lo; d <= dims.hi; ++d) {
    const bounds::Dimension dim(static_cast<int>(d));
    const long k = abhh_table_index(static_cast<int>(d));
    const double weyl = bounds::fk_weyl_avg(dim, k);
    t.rows.push_back({static_cast<double>(d), static_cast<double>(k),
                      bounds::abhh(dim, k) / weyl, bounds::cheng_yang2_avg(dim, k) / weyl});
  }
  return t;
}

/// Coefficients of simple_p9 and cy_av relative to fk_weyl_avg.
inline Table table3(Range dims = kTableDimensions) {
  check_range(dims, 1, "dimension");
  Table t{"table3", "coefficient ratios relative to fk_weyl_avg", "k-independent",
          {"d", "simple_p9_over_fk_weyl_avg", "cy_av_over_fk_weyl_avg"}, {}};
  for (long d = dims.lo; d <= dims.hi; ++d) {
    const bounds::Dimension dim(static_cast<int>(d));
    const double weyl = bounds::faber_krahn_coefficient(dim) / (1.0 + 2.0 / static_cast<double>(d));
    t.rows.push_back({static_cast<double>(d), bounds::simple_p9_coefficient(dim) / weyl,
                      bounds::cy_av_coefficient(dim) / weyl});
  }
  return t;
}

/// Coefficients of k^{2/d} in simple_p9 and cy_av against d.
inline Table fig1(Range dims = kTableDimensions) {
  check_range(dims, 1, "dimension");
  Table t{"fig1", "coefficients of simple_p9 and cy_av", "k-independent",
          {"d", "simple_p9_coefficient", "cy_av_coefficient"}, {}};
  for (long d = dims.lo; d <= dims.hi; ++d) {
    const bounds::Dimension dim(static_cast<int>(d));
    t.rows.push_back({static_cast<double>(d), bounds::simple_p9_coefficient(dim),
                      bounds::cy_av_coefficient(dim)});
  }
  return t;
}

inline constexpr Range kFig2Indices{2, 200};

/// Bounds on mean_k / lambda_1 against k for d = 4.
inline Table fig2(Range ks = kFig2Indices) {
  check_range(ks, 2, "k");
  const bounds::Dimension dim(4);
  Table t{"fig2", "bounds on mean_k / lambda_1, d = 4", "k range",
          {"k", "simple_p9", "cy_av", "her2", "ab94_avg", "fk_weyl_avg"}, {}};
  for (long k = ks.lo; k <= ks.hi; ++k) {
    t.rows.push_back({static_cast<double>(k), bounds::simple_p9(dim, k), bounds::cy_av(dim, k),
                      bounds::her2(dim, k), bounds::ab94_avg(dim, k), bounds::fk_weyl_avg(dim, k)});
  }
  return t;
}

inline constexpr Range kFig3Exponents{1, 10};

/// lambda_k / lambda_1 at k = 2^m for d = 3: ab94 against Cheng-Yang
/// applied to lambda_k = lambda_{(k-1)+1}.
inline Table fig3(Range exponents = kFig3Exponents) {
  check_range(exponents, 1, "m");
  if (exponents.hi > 40) throw ConfigError("m range must not exceed 40");
  const bounds::Dimension dim(3);
  Table t{"fig3", "bounds on lambda_k / lambda_1 at k = 2^m, d = 3", "k = 2^m",
          {"k", "ab94", "cheng_yang"}, {}};
  for (long m = exponents.lo; m <= exponents.hi; ++m) {
    const long k = 1L << m;
    t.rows.push_back({static_cast<double>(k), bounds::ab94(dim, static_cast<int>(m)),
                      bounds::cheng_yang(dim, k - 1)});
  }
  return t;
}

inline const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = {"table1", "table2", "table3"};
  return ids;
}

inline const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig1", "fig2", "fig3"};
  return ids;
}

inline Table make_table(const std::string& id) {
  if (id == "table1") return table1();
  if (id == "table2") return table2();
  if (id == "table3") return table3();
  throw ConfigError("unknown table '" + id + "'");
}

}  // namespace rieszweyl::report
