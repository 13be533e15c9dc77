#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rieszweyl/bounds.hpp"
#include "rieszweyl/report.hpp"
#include "rieszweyl/riesz.hpp"
#include "rieszweyl/serialize.hpp"
#include "rieszweyl/spectra.hpp"
#include "rieszweyl/verify.hpp"

namespace rw = rieszweyl;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Globals {
  std::string output;
  std::string format;
  bool full_precision = false;
  bool banner = false;
};

// Writes to a sibling temporary and renames, so readers never see a
// partial file.
void emit(const Globals& g, const std::string& text) {
  if (g.output.empty() || g.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(g.output);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw rw::ResourceError("cannot open '" + tmp.string() + "' for writing");
    out << text;
    out.flush();
    if (!out) throw rw::ResourceError("write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, target);
}

std::string banner_line(const Globals& g) {
  return g.banner ? std::string("# rieszweyl ") + kVersion + "\n" : std::string();
}

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
  if (g.format.empty()) return;
  for (const char* a : allowed) {
    if (g.format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw rw::ConfigError("--format " + g.format + " not supported here (use " + list + ")");
}

struct DomainFlags {
  std::vector<double> box;
  bool ball = false;
  int dim = 0;
  double radius = 1.0;
  std::string file;
  double lambda_max = 0.0;
  std::size_t cap = rw::kDefaultEigenvalueCap;

  void add_to(CLI::App* app) {
    app->add_option("--box", box, "box side lengths");
    app->add_flag("--ball", ball, "ball domain");
    app->add_option("--dim", dim, "ball dimension");
    app->add_option("--radius", radius, "ball radius");
    app->add_option("--spectrum", file, "spectrum file");
    app->add_option("--lambda-max", lambda_max, "completeness threshold for generated spectra");
    app->add_option("--cap", cap, "maximum number of eigenvalues");
  }

  rw::Spectrum build() const {
    const int sources = (!box.empty() ? 1 : 0) + (ball ? 1 : 0) + (!file.empty() ? 1 : 0);
    if (sources != 1) throw rw::ConfigError("give exactly one of --box, --ball, --spectrum");
    if (!file.empty()) return rw::load_spectrum(file);
    if (!(lambda_max > 0.0)) throw rw::ConfigError("--lambda-max must be positive");
    if (!box.empty()) return rw::box_spectrum(box, lambda_max, cap);
    if (dim < 2) throw rw::ConfigError("--ball needs --dim >= 2");
    return rw::ball_spectrum(dim, radius, lambda_max, cap);
  }
};

std::string fmt(double v) { return rw::report::format_number(v, rw::report::kFullPrecision); }

std::string table_text(const rw::report::Table& t, const Globals& g) {
  require_format(g, {"csv", "json"});
  if (g.format == "json") return rw::serialize::to_json(t, g.full_precision).dump(2) + "\n";
  std::ostringstream out;
  out << banner_line(g);
  rw::report::write_csv(out, t, g.full_precision);
  return out.str();
}

rw::bounds::BoundArgs parse_bound_args(const std::vector<std::string>& tokens) {
  rw::bounds::BoundArgs args;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw rw::ConfigError("bound argument '" + tok + "' is not key=value");
    }
    args.values[tok.substr(0, eq)] = rw::detail::parse_number(tok.substr(eq + 1), 0);
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riesz means, Dirichlet spectra and universal eigenvalue bounds"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Globals g;
  app.add_option("--output,-o", g.output, "output path (default standard output)");
  app.add_option("--format", g.format, "csv, json or text, depending on the command");
  app.add_flag("--full-precision", g.full_precision, "17 significant digits instead of 6");
  app.add_flag("--banner", g.banner, "prefix CSV output with a version comment line");
  app.set_version_flag("--version", kVersion);

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "generate or normalize a spectrum");
  DomainFlags spectrum_domain;
  spectrum_domain.add_to(spectrum_cmd);

  // riesz
  auto* riesz_cmd = app.add_subcommand("riesz", "evaluate Riesz means, means and the Legendre transform");
  DomainFlags riesz_domain;
  riesz_domain.add_to(riesz_cmd);
  std::vector<double> sigmas;
  std::vector<double> zs;
  std::vector<std::size_t> mean_ks;
  std::vector<double> legendre_ws;
  riesz_cmd->add_option("--sigma", sigmas, "Riesz orders");
  riesz_cmd->add_option("--z", zs, "evaluation points");
  riesz_cmd->add_option("--means", mean_ks, "report means of the first k eigenvalues");
  riesz_cmd->add_option("--legendre", legendre_ws, "evaluate sup_z (w z - R_1(z))");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "list or evaluate catalog bounds");
  bool list = false;
  std::vector<std::string> eval_tokens;
  std::vector<double> zero_request;
  bounds_cmd->add_flag("--list", list, "dump the catalog and per-dimension constants");
  bounds_cmd->add_option("--eval", eval_tokens, "bound id followed by key=value arguments")
      ->expected(1, -1);
  bounds_cmd->add_option("--bessel-zeros", zero_request, "order nu and count n")->expected(2);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "sweep every inequality over spectra");
  rw::verify::SuiteConfig config;
  std::vector<std::string> spectrum_files;
  double z_max = 0.0;
  bool no_control = false;
  bool serial = false;
  verify_cmd->add_option("--spectrum", spectrum_files, "spectrum files (default: built-in set)");
  verify_cmd->add_option("--z-points", config.z_points, "z grid size");
  verify_cmd->add_option("--z-fraction", config.z_fraction, "grid top as a fraction of complete_below");
  verify_cmd->add_option("--z-max", z_max, "absolute grid top");
  verify_cmd->add_option("--sigma", config.sigmas, "sigma grid");
  verify_cmd->add_option("--j", config.j_list, "j values for the mean-based lower bounds");
  verify_cmd->add_option("--max-k", config.max_k, "largest k in (j, k) pair sweeps");
  verify_cmd->add_flag("--inject-corruption", config.inject_corruption,
                       "scale lambda_1 of every spectrum by 0.1 before checking");
  verify_cmd->add_flag("--no-negative-control", no_control, "skip corrupted-copy controls");
  verify_cmd->add_flag("--serial", serial, "process spectra one at a time");

  // table / figure
  auto* table_cmd = app.add_subcommand("table", "emit a comparison table");
  std::string table_id;
  table_cmd->add_option("id", table_id, "table1, table2 or table3")->required();
  long d_min = rw::report::kTableDimensions.lo;
  long d_max = rw::report::kTableDimensions.hi;
  table_cmd->add_option("--d-min", d_min);
  table_cmd->add_option("--d-max", d_max);

  auto* figure_cmd = app.add_subcommand("figure", "emit figure data");
  std::string figure_id;
  figure_cmd->add_option("id", figure_id, "fig1, fig2 or fig3")->required();
  long lo = -1;
  long hi = -1;
  figure_cmd->add_option("--from", lo, "first x value (d for fig1, k for fig2, m for fig3)");
  figure_cmd->add_option("--to", hi, "last x value");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*spectrum_cmd) {
      require_format(g, {"csv", "json", "text"});
      const auto spec = spectrum_domain.build();
      std::ostringstream out;
      if (g.format == "csv") {
        out << banner_line(g);
        rw::write_spectrum_csv(out, spec);
      } else if (g.format == "json") {
        json j = {{"domain", spec.domain().describe()},
                  {"dim", spec.dimension()},
                  {"complete_below", spec.complete_below()},
                  {"eigenvalues", std::vector<double>(spec.eigenvalues().begin(), spec.eigenvalues().end())}};
        if (spec.volume()) j["volume"] = *spec.volume();
        out << j.dump(2) << '\n';
      } else {
        rw::write_spectrum(out, spec);
      }
      emit(g, out.str());
      return 0;
    }

    if (*riesz_cmd) {
      require_format(g, {"csv", "json"});
      const auto spec = riesz_domain.build();
      const rw::PrefixSums prefix(spec);
      json j = json::object();
      std::ostringstream out;
      out << banner_line(g);
      if (!zs.empty()) {
        if (sigmas.empty()) sigmas = {0.0, 1.0, 2.0};
        out << "sigma,z,riesz_mean,count\n";
        json rows = json::array();
        for (double s : sigmas) {
          for (double z : zs) {
            const auto r = rw::riesz_mean(spec, s, z);
            out << fmt(s) << ',' << fmt(z) << ',' << fmt(r.value) << ',' << r.contributing << '\n';
            rows.push_back({{"sigma", s}, {"z", z}, {"value", r.value}, {"count", r.contributing}});
          }
        }
        j["riesz"] = rows;
      }
      if (!mean_ks.empty()) {
        out << "k,mean,mean_sq,geometric,harmonic\n";
        json rows = json::array();
        for (std::size_t k : mean_ks) {
          const auto m = rw::means(spec, k);
          out << k << ',' << fmt(m.mean) << ',' << fmt(m.mean_sq) << ',' << fmt(m.geometric)
              << ',' << fmt(m.harmonic) << '\n';
          rows.push_back({{"k", k}, {"mean", m.mean}, {"mean_sq", m.mean_sq},
                          {"geometric", m.geometric}, {"harmonic", m.harmonic}});
        }
        j["means"] = rows;
      }
      if (!legendre_ws.empty()) {
        out << "w,legendre_r1,legendre_numeric,maximizer\n";
        json rows = json::array();
        for (double w : legendre_ws) {
          const double closed = rw::legendre_R1(prefix, w);
          const auto numeric = rw::legendre_numeric(prefix, w);
          out << fmt(w) << ',' << fmt(closed) << ',' << fmt(numeric.value) << ','
              << fmt(numeric.maximizer) << '\n';
          rows.push_back({{"w", w}, {"closed_form", closed}, {"numeric", numeric.value},
                          {"maximizer", numeric.maximizer}});
        }
        j["legendre"] = rows;
      }
      if (zs.empty() && mean_ks.empty() && legendre_ws.empty()) {
        throw rw::ConfigError("riesz: give --z, --means or --legendre");
      }
      emit(g, g.format == "json" ? j.dump(2) + "\n" : out.str());
      return 0;
    }

    if (*bounds_cmd) {
      require_format(g, {"json"});
      const int modes = (list ? 1 : 0) + (eval_tokens.empty() ? 0 : 1) + (zero_request.empty() ? 0 : 1);
      if (modes != 1) throw rw::ConfigError("bounds: give exactly one of --list, --eval, --bessel-zeros");
      json j;
      if (list) {
        j = rw::serialize::catalog_json();
      } else if (!eval_tokens.empty()) {
        const auto& bound = rw::bounds::find_bound(eval_tokens.front());
        const auto args = parse_bound_args({eval_tokens.begin() + 1, eval_tokens.end()});
        j = {{"id", bound.id}, {"arguments", args.values}, {"value", bound.evaluate(args)}};
      } else {
        const double nu = zero_request[0];
        const double count = zero_request[1];
        if (!(count >= 1.0) || count != static_cast<double>(static_cast<int>(count))) {
          throw rw::ConfigError("--bessel-zeros count must be a positive integer");
        }
        json zeros = json::array();
        for (int p = 1; p <= static_cast<int>(count); ++p) zeros.push_back(rw::bessel_zero(nu, p).value);
        j = {{"order", nu}, {"zeros", zeros}};
      }
      emit(g, j.dump(2) + "\n");
      return 0;
    }

    if (*verify_cmd) {
      require_format(g, {"json", "text"});
      if (verify_cmd->count("--z-max")) config.z_max = z_max;
      config.negative_control = !no_control;
      config.parallel = !serial;
      std::vector<rw::verify::NamedSpectrum> spectra;
      if (spectrum_files.empty()) {
        spectra = rw::verify::default_spectra();
      } else {
        for (const auto& f : spectrum_files) spectra.push_back({f, rw::load_spectrum(f)});
      }
      const auto report = rw::verify::run_suite(spectra, config);
      std::ostringstream out;
      if (g.format == "json") {
        out << rw::serialize::to_json(report).dump(2) << '\n';
      } else {
        rw::serialize::write_text(out, report);
      }
      emit(g, out.str());
      return rw::verify::exit_code(report);
    }

    if (*table_cmd) {
      const rw::report::Range dims{d_min, d_max};
      rw::report::Table t;
      if (table_id == "table1") t = rw::report::table1(dims);
      else if (table_id == "table2") t = rw::report::table2(dims);
      else if (table_id == "table3") t = rw::report::table3(dims);
      else throw rw::ConfigError("unknown table '" + table_id + "'");
      emit(g, table_text(t, g));
      return 0;
    }

    if (*figure_cmd) {
      rw::report::Table t;
      auto range = [&](rw::report::Range def) {
        return rw::report::Range{lo < 0 ? def.lo : lo, hi < 0 ? def.hi : hi};
      };
      if (figure_id == "fig1") t = rw::report::fig1(range(rw::report::kTableDimensions));
      else if (figure_id == "fig2") t = rw::report::fig2(range(rw::report::kFig2Indices));
      else if (figure_id == "fig3") t = rw::report::fig3(range(rw::report::kFig3Exponents));
      else throw rw::ConfigError("unknown figure '" + figure_id + "'");
      emit(g, table_text(t, g));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
