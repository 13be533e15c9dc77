#pragma once

// Dirichlet spectra of boxes and balls, and text-file spectra.
//
// A Spectrum carries a completeness threshold: every eigenvalue of the
// domain strictly below complete_below() is present. Evaluations above it
// are refused downstream.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rieszweyl/error.hpp"
#include "rieszweyl/specfun.hpp"

namespace rieszweyl {

enum class DomainKind { box, ball, file };

inline const char* to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::box: return "box";
    case DomainKind::ball: return "ball";
    case DomainKind::file: return "file";
  }
  return "?";
}

struct DomainSpec {
  DomainKind kind = DomainKind::box;
  int dimension = 1;
  std::vector<double> side_lengths;  // box only
  double radius = 0.0;               // ball only
  std::string source_path;           // file only

  static DomainSpec box(std::vector<double> sides) {
    DomainSpec spec;
    spec.kind = DomainKind::box;
    spec.dimension = static_cast<int>(sides.size());
    spec.side_lengths = std::move(sides);
    spec.validate();
    return spec;
  }

  static DomainSpec ball(int dimension, double radius) {
    DomainSpec spec;
    spec.kind = DomainKind::ball;
    spec.dimension = dimension;
    spec.radius = radius;
    spec.validate();
    return spec;
  }

  static DomainSpec file(int dimension, std::string path) {
    DomainSpec spec;
    spec.kind = DomainKind::file;
    spec.dimension = dimension;
    spec.source_path = std::move(path);
    spec.validate();
    return spec;
  }

  void validate() const {
    if (dimension < 1) throw ValidationError("domain: dimension must be >= 1");
    switch (kind) {
      case DomainKind::box:
        if (static_cast<int>(side_lengths.size()) != dimension) {
          throw ValidationError("domain: box needs exactly d side lengths");
        }
        for (double side : side_lengths) {
          if (!(side > 0.0) || !std::isfinite(side)) {
            throw ValidationError("domain: box side lengths must be positive");
          }
        }
        break;
      case DomainKind::ball:
        if (!(radius > 0.0) || !std::isfinite(radius)) {
          throw ValidationError("domain: ball radius must be positive");
        }
        break;
      case DomainKind::file:
        break;
    }
  }

  std::string describe() const {
    std::ostringstream out;
    out.precision(17);
    switch (kind) {
      case DomainKind::box:
        out << "box[";
        for (std::size_t i = 0; i < side_lengths.size(); ++i) {
          out << (i ? "," : "") << side_lengths[i];
        }
        out << "]";
        break;
      case DomainKind::ball:
        out << "ball(d=" << dimension << ",r=" << radius << ")";
        break;
      case DomainKind::file:
        out << "file(" << source_path << ")";
        break;
    }
    return out.str();
  }
};

/// Immutable, validated list of Dirichlet eigenvalues.
class Spectrum {
 public:
  /// Validates every invariant; throws ValidationError naming the first one
  /// violated.
  Spectrum(DomainSpec domain, std::vector<double> eigenvalues,
           double complete_below, std::optional<double> volume)
      : domain_(std::move(domain)),
        eigenvalues_(std::move(eigenvalues)),
        complete_below_(complete_below),
        volume_(volume) {
    domain_.validate();
    if (!(complete_below_ > 0.0) || !std::isfinite(complete_below_)) {
      throw ValidationError("spectrum: complete_below must be positive");
    }
    if (volume_ && !(*volume_ > 0.0)) {
      throw ValidationError("spectrum: volume must be positive");
    }
    for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
      const double v = eigenvalues_[i];
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw ValidationError("spectrum: eigenvalue " + std::to_string(i + 1) +
                              " is not a positive number");
      }
      if (i > 0 && v < eigenvalues_[i - 1]) {
        throw ValidationError("spectrum: eigenvalues not nondecreasing at index " +
                              std::to_string(i + 1));
      }
      if (!(v < complete_below_)) {
        throw ValidationError("spectrum: eigenvalue " + std::to_string(i + 1) +
                              " is not below complete_below");
      }
    }
  }

  int dimension() const noexcept { return domain_.dimension; }
  const DomainSpec& domain() const noexcept { return domain_; }
  std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }
  std::size_t size() const noexcept { return eigenvalues_.size(); }
  bool empty() const noexcept { return eigenvalues_.empty(); }
  double complete_below() const noexcept { return complete_below_; }
  std::optional<double> volume() const noexcept { return volume_; }

  /// 1-based access, matching the usual lambda_k labelling.
  double lambda(std::size_t k) const {
    if (k < 1 || k > eigenvalues_.size()) {
      throw RangeError("spectrum: index " + std::to_string(k) + " out of range");
    }
    return eigenvalues_[k - 1];
  }

  double first() const { return lambda(1); }

 private:
  DomainSpec domain_;
  std::vector<double> eigenvalues_;
  double complete_below_;
  std::optional<double> volume_;
};

inline constexpr std::size_t kDefaultEigenvalueCap = 10'000'000;

/// Volume of the d-ball of radius r.
inline double ball_volume(int d, double radius) {
  return std::pow(std::numbers::pi, 0.5 * d) * std::pow(radius, d) /
         rieszweyl::gamma(1.0 + 0.5 * d);
}

namespace detail {

// Leading Weyl count C_d |Omega| Lambda^{d/2} with C_d = omega_d / (2 pi)^d.
inline double weyl_count(int d, double volume, double lambda_max) {
  const double omega = ball_volume(d, 1.0);
  return omega * volume * std::pow(lambda_max, 0.5 * d) /
         std::pow(2.0 * std::numbers::pi, d);
}

}  // namespace detail

/// All box eigenvalues pi^2 sum n_i^2 / L_i^2 below lambda_max.
inline Spectrum box_spectrum(std::vector<double> sides, double lambda_max,
                             std::size_t cap = kDefaultEigenvalueCap) {
  auto domain = DomainSpec::box(std::move(sides));
  const int d = domain.dimension;
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    throw ValidationError("box_spectrum: lambda_max must be positive");
  }
  std::vector<double> freq(d);  // pi / L_i
  double volume = 1.0;
  double ground = 0.0;
  for (int i = 0; i < d; ++i) {
    freq[i] = std::numbers::pi / domain.side_lengths[i];
    volume *= domain.side_lengths[i];
    ground += freq[i] * freq[i];
  }
  if (!(ground < lambda_max)) {
    throw EmptySpectrumError("box_spectrum: no eigenvalue below lambda_max");
  }
  if (detail::weyl_count(d, volume, lambda_max) > static_cast<double>(cap)) {
    throw ResourceError("box_spectrum: predicted eigenvalue count exceeds cap");
  }

  // Axes of equal length share one coefficient (pi / L)^2 times an exact
  // integer sum of n^2; degenerate eigenvalues come out bitwise equal.
  std::vector<double> group_sides(domain.side_lengths);
  std::sort(group_sides.begin(), group_sides.end());
  group_sides.erase(std::unique(group_sides.begin(), group_sides.end()), group_sides.end());
  std::vector<double> coeff;
  for (double L : group_sides) coeff.push_back((std::numbers::pi / L) * (std::numbers::pi / L));
  std::vector<std::size_t> group(d);
  for (int i = 0; i < d; ++i) {
    group[i] = static_cast<std::size_t>(
        std::lower_bound(group_sides.begin(), group_sides.end(), domain.side_lengths[i]) -
        group_sides.begin());
  }

  std::vector<double> values;
  std::vector<long long> squares(d);
  std::vector<long long> sums(coeff.size());
  // Per-axis loops; the remaining budget bounds each inner index.
  std::function<void(int, double)> recurse = [&](int axis, double partial) {
    if (axis == d) {
      std::fill(sums.begin(), sums.end(), 0);
      for (int i = 0; i < d; ++i) sums[group[i]] += squares[i];
      double value = 0.0;
      for (std::size_t g = 0; g < coeff.size(); ++g) value += coeff[g] * static_cast<double>(sums[g]);
      if (value < lambda_max) {
        if (values.size() >= cap) {
          throw ResourceError("box_spectrum: eigenvalue count exceeds cap");
        }
        values.push_back(value);
      }
      return;
    }
    // Remaining axes contribute at least their ground term.
    double rest = 0.0;
    for (int i = axis + 1; i < d; ++i) rest += freq[i] * freq[i];
    for (long long n = 1;; ++n) {
      const double t = (static_cast<double>(n) * freq[axis]) * (static_cast<double>(n) * freq[axis]);
      // slack: pruning must not reject a value the exact sum accepts
      if (!(partial + t + rest < lambda_max * (1.0 + 1e-12))) break;
      squares[axis] = n * n;
      recurse(axis + 1, partial + t);
    }
  };
  recurse(0, 0.0);
  std::sort(values.begin(), values.end());
  return Spectrum(std::move(domain), std::move(values), lambda_max, volume);
}

/// Dimension of the space of degree-l spherical harmonics in d variables.
inline std::size_t spherical_harmonic_multiplicity(int l, int d) {
  if (l == 0) return 1;
  if (d == 2) return 2;
  // (2l + d - 2) (l + d - 3)! / (l! (d - 2)!)
  // = (2l + d - 2) / (l + d - 2) * C(l + d - 2, l)
  double binom = 1.0;
  for (int i = 1; i <= d - 2; ++i) binom = binom * (l + i) / i;
  return static_cast<std::size_t>(
      std::llround((2.0 * l + d - 2) / (l + d - 2) * binom));
}

/// Ball eigenvalues j_{d/2-1+l,p}^2 / r^2 below lambda_max with
/// spherical-harmonic multiplicities.
inline Spectrum ball_spectrum(int d, double radius, double lambda_max,
                              std::size_t cap = kDefaultEigenvalueCap) {
  if (d < 2) throw ValidationError("ball_spectrum: dimension must be >= 2");
  auto domain = DomainSpec::ball(d, radius);
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    throw ValidationError("ball_spectrum: lambda_max must be positive");
  }
  const double volume = ball_volume(d, radius);
  if (detail::weyl_count(d, volume, lambda_max) > 0.5 * static_cast<double>(cap)) {
    throw ResourceError("ball_spectrum: predicted eigenvalue count exceeds cap");
  }
  const double x_max = std::sqrt(lambda_max) * radius;
  std::vector<double> values;
  for (int l = 0;; ++l) {
    const double nu = 0.5 * d - 1.0 + l;
    // j_{nu,1} > nu, so no zero lies below x_max once nu >= x_max.
    if (nu >= x_max) break;
    const auto zeros = bessel_zeros_below(nu, x_max);
    if (zeros.empty()) break;  // j_{nu,1} increases with nu
    const std::size_t mult = spherical_harmonic_multiplicity(l, d);
    for (double j : zeros) {
      const double value = (j / radius) * (j / radius);
      if (!(value < lambda_max)) continue;
      if (values.size() + mult > cap) {
        throw ResourceError("ball_spectrum: eigenvalue count exceeds cap");
      }
      values.insert(values.end(), mult, value);
    }
  }
  if (values.empty()) {
    throw EmptySpectrumError("ball_spectrum: no eigenvalue below lambda_max");
  }
  std::sort(values.begin(), values.end());
  return Spectrum(std::move(domain), std::move(values), lambda_max, volume);
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_number(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double value = 0.0;
  in >> value;
  if (in.fail()) throw ParseError(line, "expected a number, got '" + text + "'");
  in >> std::ws;
  if (!in.eof()) throw ParseError(line, "trailing characters after '" + text + "'");
  return value;
}

}  // namespace detail

/// Parses the spectrum text format:
///   dim: <d>
///   complete_below: <Lambda>
///   volume: <v>          (optional)
///   <eigenvalue>         one per line
/// '#' starts a comment anywhere on a line.
inline Spectrum parse_spectrum(std::istream& in, const std::string& source = "<stream>") {
  std::optional<int> dim;
  std::optional<double> lambda_max;
  std::optional<double> volume;
  std::vector<double> values;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = detail::trim(raw);
    if (line.empty()) continue;
    if (const auto colon = line.find(':'); colon != std::string::npos) {
      if (!values.empty()) throw ParseError(line_no, "header after eigenvalues");
      const std::string key = detail::trim(line.substr(0, colon));
      const std::string val = detail::trim(line.substr(colon + 1));
      if (key == "dim") {
        const double d = detail::parse_number(val, line_no);
        if (d != std::floor(d) || d < 1 || d > 1000) {
          throw ParseError(line_no, "dim must be a positive integer");
        }
        dim = static_cast<int>(d);
      } else if (key == "complete_below") {
        lambda_max = detail::parse_number(val, line_no);
      } else if (key == "volume") {
        volume = detail::parse_number(val, line_no);
      } else {
        throw ParseError(line_no, "unknown header '" + key + "'");
      }
      continue;
    }
    values.push_back(detail::parse_number(line, line_no));
  }
  if (!dim) throw ParseError(line_no, "missing 'dim:' header");
  if (!lambda_max) throw ParseError(line_no, "missing 'complete_below:' header");
  return Spectrum(DomainSpec::file(*dim, source), std::move(values), *lambda_max, volume);
}

inline Spectrum load_spectrum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_spectrum(in, path);
}

/// Writes the text format with round-trip (17 digit) precision.
inline void write_spectrum(std::ostream& out, const Spectrum& spec) {
  std::ostringstream body;
  body.imbue(std::locale::classic());
  body.precision(17);
  body << "# " << spec.domain().describe() << "\n";
  body << "dim: " << spec.dimension() << "\n";
  body << "complete_below: " << spec.complete_below() << "\n";
  if (spec.volume()) body << "volume: " << *spec.volume() << "\n";
  for (double v : spec.eigenvalues()) body << v << "\n";
  out << body.str();
}

/// CSV export with columns k, lambda_k.
inline void write_spectrum_csv(std::ostream& out, const Spectrum& spec) {
  std::ostringstream body;
  body.imbue(std::locale::classic());
  body.precision(17);
  body << "k,lambda_k\n";
  const auto ev = spec.eigenvalues();
  for (std::size_t i = 0; i < ev.size(); ++i) body << (i + 1) << "," << ev[i] << "\n";
  out << body.str();
}

/// Leading Weyl term 4 pi Gamma(1+d/2)^{2/d} k^{2/d} / |Omega|^{2/d}.
inline double weyl_asymptote(const Spectrum& spec, std::size_t k) {
  if (!spec.volume()) throw MissingVolumeError("weyl_asymptote: spectrum has no volume");
  if (k < 1) throw RangeError("weyl_asymptote: k must be >= 1");
  const double d = spec.dimension();
  return 4.0 * std::numbers::pi * std::pow(rieszweyl::gamma(1.0 + 0.5 * d), 2.0 / d) *
         std::pow(static_cast<double>(k), 2.0 / d) / std::pow(*spec.volume(), 2.0 / d);
}

}  // namespace rieszweyl
