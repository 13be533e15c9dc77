#pragma once

// JSON and aligned-text renderings of catalogs, reports and tables.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "rieszweyl/bounds.hpp"
#include "rieszweyl/report.hpp"
#include "rieszweyl/verify.hpp"

namespace rieszweyl::serialize {

using nlohmann::json;

inline json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline json to_json(const bounds::Bound& b) {
  return {{"id", b.id},
          {"kind", bounds::to_string(b.kind)},
          {"cite", b.cite},
          {"validity", b.validity},
          {"parameters", b.parameters}};
}

inline json dimension_constants(int d) {
  const bounds::Dimension dim(d);
  return {{"d", d},
          {"j_ground", bounds::ground_zero(dim)},
          {"j_second", bounds::second_zero(dim)},
          {"hermi_constant", bounds::hermi_constant(dim)},
          {"faber_krahn_coefficient", bounds::faber_krahn_coefficient(dim)},
          {"ashbaugh_benguria_ratio", bounds::ashbaugh_benguria_ratio(dim)},
          {"simple_p9_coefficient", bounds::simple_p9_coefficient(dim)},
          {"cy_av_coefficient", bounds::cy_av_coefficient(dim)},
          {"abhh_coefficient", bounds::abhh_coefficient(dim)},
          {"abhh_next_coefficient", bounds::abhh_next_coefficient(dim)},
          {"classical_constant",
           {{"sigma_0", bounds::classical_constant(0.0, dim)},
            {"sigma_1", bounds::classical_constant(1.0, dim)},
            {"sigma_2", bounds::classical_constant(2.0, dim)}}}};
}

inline json catalog_json() {
  json entries = json::array();
  for (const auto& b : bounds::catalog()) entries.push_back(to_json(b));
  json constants = json::array();
  for (int d = 1; d <= bounds::kMaxTestedDimension; ++d) constants.push_back(dimension_constants(d));
  return {{"bounds", entries}, {"constants", constants}};
}

inline json to_json(const verify::Witness& w) {
  json out = json::object();
  if (w.variant != 0) out["variant"] = w.variant;
  auto put = [&out](const char* key, double v) {
    if (!std::isnan(v)) out[key] = v;
  };
  put("sigma_lo", w.sigma_lo);
  put("sigma", w.sigma);
  put("sigma_hi", w.sigma_hi);
  put("z", w.z);
  put("z_next", w.z_next);
  if (w.j != 0) out["j"] = w.j;
  if (w.k != 0) out["k"] = w.k;
  return out;
}

inline json to_json(const verify::CheckResult& c) {
  return {{"id", verify::to_string(c.id)},
          {"grid", c.grid},
          {"evaluations", c.evaluations},
          {"result", c.passed ? "pass" : "fail"},
          {"worst_margin", finite_or_null(c.worst_margin)},
          {"witness", c.evaluations ? to_json(c.witness) : json(nullptr)}};
}

inline json to_json(const verify::SpectrumReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"name", r.name},
          {"domain", r.domain},
          {"eigenvalues", r.eigenvalues},
          {"complete_below", r.complete_below},
          {"z_points", r.z_points},
          {"corrupted", r.corrupted},
          {"result", r.passed() ? "pass" : "fail"},
          {"evaluations", r.evaluations()},
          {"checks", checks}};
}

inline json to_json(const verify::VerificationReport& report) {
  json spectra = json::array();
  for (const auto& r : report.spectra) spectra.push_back(to_json(r));
  json controls = json::array();
  for (const auto& r : report.negative_controls) controls.push_back(to_json(r));
  return {{"slack", verify::kSlack},
          {"result", report.passed() ? "pass" : "fail"},
          {"evaluations", report.evaluations()},
          {"spectra", spectra},
          {"negative_controls", {{"detected", report.negative_controls_detected()},
                                 {"spectra", controls}}}};
}

inline std::string witness_text(const verify::Witness& w) {
  std::string out;
  char buf[64];
  auto put = [&](const char* key, double v) {
    if (std::isnan(v)) return;
    std::snprintf(buf, sizeof buf, "%s%s=%.10g", out.empty() ? "" : " ", key, v);
    out += buf;
  };
  if (w.variant != 0) put("variant", w.variant);
  put("sigma_lo", w.sigma_lo);
  put("sigma", w.sigma);
  put("sigma_hi", w.sigma_hi);
  put("z", w.z);
  put("z_next", w.z_next);
  if (w.j != 0) put("j", static_cast<double>(w.j));
  if (w.k != 0) put("k", static_cast<double>(w.k));
  return out;
}

inline void write_text(std::ostream& out, const verify::SpectrumReport& r) {
  char line[512];
  out << r.name << (r.corrupted ? " [corrupted]" : "") << ": " << r.domain << ", "
      << r.eigenvalues << " eigenvalues below " << r.complete_below << ", " << r.z_points
      << " z points\n";
  for (const auto& c : r.checks) {
    std::snprintf(line, sizeof line, "  %-26s %9zu  %-4s  %+.3e  %s\n", verify::to_string(c.id),
                  c.evaluations, c.passed ? "pass" : "FAIL", c.worst_margin,
                  c.evaluations ? witness_text(c.witness).c_str() : "-");
    out << line;
  }
}

inline void write_text(std::ostream& out, const verify::VerificationReport& report) {
  char line[128];
  std::snprintf(line, sizeof line, "  %-26s %9s  %-4s  %-10s  %s\n", "check", "evals", "", "worst",
                "witness");
  out << line;
  for (const auto& r : report.spectra) write_text(out, r);
  if (!report.negative_controls.empty()) {
    out << "negative controls (lambda_1 scaled by 0.1): "
        << (report.negative_controls_detected() ? "detected" : "NOT DETECTED") << '\n';
    for (const auto& r : report.negative_controls) {
      std::size_t failed = 0;
      for (const auto& c : r.checks) failed += c.passed ? 0 : 1;
      out << "  " << r.name << ": " << failed << " failing checks\n";
    }
  }
  out << "total evaluations " << report.evaluations() << ", result "
      << (report.passed() ? "pass" : "FAIL") << '\n';
}

inline json to_json(const report::Table& t, bool full_precision) {
  const int digits = full_precision ? report::kFullPrecision : report::kTablePrecision;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (std::size_t i = 0; i < row.size(); ++i) {
      r.push_back(i == 0 ? row[i] : report::round_significant(row[i], digits));
    }
    rows.push_back(r);
  }
  return {{"id", t.id}, {"title", t.title}, {"k_rule", t.k_rule}, {"columns", t.columns},
          {"rows", rows}};
}

}  // namespace rieszweyl::serialize
