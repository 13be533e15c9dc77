#pragma once

// Sweeps the Riesz-mean and eigenvalue-mean inequalities over spectra and
// parameter grids and records the worst normalized margin of each.
//
// margin = (bound side - bounded side) / max(1, |bound side|), signed so
// that a satisfied inequality has margin >= 0. A check passes when its
// worst margin is >= -kSlack.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <future>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rieszweyl/bounds.hpp"
#include "rieszweyl/error.hpp"
#include "rieszweyl/riesz.hpp"
#include "rieszweyl/spectra.hpp"

namespace rieszweyl::verify {

inline constexpr double kSlack = 1e-9;
inline constexpr double kBelowOffset = 1e-12;

enum class CheckId {
  riesz_difference_low,
  riesz_difference_high,
  riesz_derivative_low,
  riesz_derivative_high,
  riesz_scaling_low,
  riesz_scaling_high,
  riesz_sandwich,
  aizenman_lieb_ratio,
  riesz_lower_subquadratic,
  riesz_lower_hermi,
  mean_lower_r2,
  mean_lower_r1,
  mean_lower_counting,
  next_over_mean,
  yang_simplified,
  hoelder_chain,
  mean_ratio,
  abhh,
  abhh_next,
  mean_square_envelope,
  moment_ordering,
  moment_interpolation,
};

inline constexpr std::array<CheckId, 22> kAllChecks = {
    CheckId::riesz_difference_low,  CheckId::riesz_difference_high,
    CheckId::riesz_derivative_low,  CheckId::riesz_derivative_high,
    CheckId::riesz_scaling_low,     CheckId::riesz_scaling_high,
    CheckId::riesz_sandwich,        CheckId::aizenman_lieb_ratio,
    CheckId::riesz_lower_subquadratic, CheckId::riesz_lower_hermi,
    CheckId::mean_lower_r2,         CheckId::mean_lower_r1,
    CheckId::mean_lower_counting,   CheckId::next_over_mean,
    CheckId::yang_simplified,       CheckId::hoelder_chain,
    CheckId::mean_ratio,            CheckId::abhh,
    CheckId::abhh_next,             CheckId::mean_square_envelope,
    CheckId::moment_ordering,       CheckId::moment_interpolation,
};

inline const char* to_string(CheckId id) {
  switch (id) {
    case CheckId::riesz_difference_low: return "riesz_difference_low";
    case CheckId::riesz_difference_high: return "riesz_difference_high";
    case CheckId::riesz_derivative_low: return "riesz_derivative_low";
    case CheckId::riesz_derivative_high: return "riesz_derivative_high";
    case CheckId::riesz_scaling_low: return "riesz_scaling_low";
    case CheckId::riesz_scaling_high: return "riesz_scaling_high";
    case CheckId::riesz_sandwich: return "riesz_sandwich";
    case CheckId::aizenman_lieb_ratio: return "aizenman_lieb_ratio";
    case CheckId::riesz_lower_subquadratic: return "riesz_lower_subquadratic";
    case CheckId::riesz_lower_hermi: return "riesz_lower_hermi";
    case CheckId::mean_lower_r2: return "mean_lower_r2";
    case CheckId::mean_lower_r1: return "mean_lower_r1";
    case CheckId::mean_lower_counting: return "mean_lower_counting";
    case CheckId::next_over_mean: return "next_over_mean";
    case CheckId::yang_simplified: return "yang_simplified";
    case CheckId::hoelder_chain: return "hoelder_chain";
    case CheckId::mean_ratio: return "mean_ratio";
    case CheckId::abhh: return "abhh";
    case CheckId::abhh_next: return "abhh_next";
    case CheckId::mean_square_envelope: return "mean_square_envelope";
    case CheckId::moment_ordering: return "moment_ordering";
    case CheckId::moment_interpolation: return "moment_interpolation";
  }
  return "?";
}

inline std::optional<CheckId> check_from_string(const std::string& name) {
  for (CheckId id : kAllChecks) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

/// Parameter tuple identifying one evaluation point. Unused fields stay NaN
/// or zero. `variant` selects among the inequalities grouped under one id.
struct Witness {
  int variant = 0;
  double sigma = std::numeric_limits<double>::quiet_NaN();
  double sigma_lo = std::numeric_limits<double>::quiet_NaN();
  double sigma_hi = std::numeric_limits<double>::quiet_NaN();
  double z = std::numeric_limits<double>::quiet_NaN();
  double z_next = std::numeric_limits<double>::quiet_NaN();
  long j = 0;
  long k = 0;
};

/// bounded <= bound
inline double upper_margin(double bound, double bounded) {
  return (bound - bounded) / std::max(1.0, std::abs(bound));
}

/// bounded >= bound
inline double lower_margin(double bound, double bounded) {
  return (bounded - bound) / std::max(1.0, std::abs(bound));
}

/// Read-only view of one spectrum with memoized Riesz sums and power sums.
/// Not thread-safe; use one context per thread.
class CheckContext {
 public:
  explicit CheckContext(const Spectrum& spec)
      : spec_(&spec),
        prefix_(spec),
        dim_(bounds::Dimension::untested(spec.dimension())) {
    if (spec.empty()) throw EmptySpectrumError("verify: spectrum has no eigenvalues");
  }

  CheckContext(const CheckContext&) = delete;
  CheckContext& operator=(const CheckContext&) = delete;

  const Spectrum& spectrum() const noexcept { return *spec_; }
  const PrefixSums& prefix() const noexcept { return prefix_; }
  bounds::Dimension dimension() const noexcept { return dim_; }
  double d() const noexcept { return dim_.real(); }
  double lambda1() const { return spec_->first(); }
  double lambda(std::size_t k) const { return spec_->lambda(k); }
  double mean(std::size_t k) const { return prefix_.mean(k); }
  double mean_sq(std::size_t k) const { return prefix_.mean_sq(k); }

  double riesz(double order, double z) const {
    const auto key = std::make_pair(order, z);
    const auto it = riesz_cache_.find(key);
    if (it != riesz_cache_.end()) return it->second;
    const double value = riesz_sum(*spec_, order, z);
    riesz_cache_.emplace(key, value);
    return value;
  }

  double power_mean(std::size_t k, double sigma) const {
    const auto key = std::make_pair(static_cast<double>(k), sigma);
    const auto it = mean_cache_.find(key);
    if (it != mean_cache_.end()) return it->second;
    const double value = rieszweyl::power_mean(*spec_, k, sigma);
    mean_cache_.emplace(key, value);
    return value;
  }

 private:
  const Spectrum* spec_;
  PrefixSums prefix_;
  bounds::Dimension dim_;
  mutable std::map<std::pair<double, double>, double> riesz_cache_;
  mutable std::map<std::pair<double, double>, double> mean_cache_;
};

namespace detail {

inline std::size_t idx(long k) { return static_cast<std::size_t>(k); }

inline double scaling_exponent(CheckId id, double sigma, double d) {
  return id == CheckId::riesz_scaling_low ? sigma + d * sigma / 4.0 : sigma + d / 2.0;
}

inline double log_convex_bound(double lo, double hi, double t) {
  if (lo == 0.0 || hi == 0.0) return 0.0;
  return std::exp(t * std::log(lo) + (1.0 - t) * std::log(hi));
}

}  // namespace detail

/// Margin of one inequality at one witness. The sweeps call this for every
/// grid point, so re-evaluating a reported witness reproduces its margin.
inline double point_margin(const CheckContext& ctx, CheckId id, const Witness& w) {
  const double d = ctx.d();
  const auto dim = ctx.dimension();
  const double s = w.sigma;
  const double z = w.z;
  switch (id) {
    case CheckId::riesz_difference_low:
    case CheckId::riesz_difference_high: {
      const double factor =
          id == CheckId::riesz_difference_low ? 1.0 + d / 4.0 : 1.0 + d / (2.0 * s);
      return lower_margin(factor * ctx.riesz(s, z) / z, ctx.riesz(s - 1.0, z));
    }
    case CheckId::riesz_derivative_low:
    case CheckId::riesz_derivative_high: {
      const double factor =
          id == CheckId::riesz_derivative_low ? s * (1.0 + d / 4.0) : s + d / 2.0;
      return lower_margin(factor * ctx.riesz(s, z) / z, s * ctx.riesz(s - 1.0, z));
    }
    case CheckId::riesz_scaling_low:
    case CheckId::riesz_scaling_high: {
      const double p = detail::scaling_exponent(id, s, d);
      const double before = ctx.riesz(s, z) / std::pow(z, p);
      const double after = ctx.riesz(s, w.z_next) / std::pow(w.z_next, p);
      return lower_margin(before, after);
    }
    case CheckId::riesz_sandwich: {
      if (w.variant == 1) {
        const double volume = ctx.spectrum().volume().value();
        return lower_margin(bounds::berezin_li_yau(dim, volume, w.k),
                            ctx.mean(detail::idx(w.k)));
      }
      const double r = ctx.riesz(s, z);
      double m = lower_margin(bounds::riesz_lower_main(s, dim, ctx.lambda1(), z), r);
      if (const auto volume = ctx.spectrum().volume()) {
        m = std::min(m, upper_margin(bounds::riesz_upper(s, dim, *volume, z), r));
      }
      return m;
    }
    case CheckId::aizenman_lieb_ratio: {
      const double lower = ctx.riesz(s, z) /
                           (bounds::classical_constant(s, dim) * std::pow(z, s + d / 2.0));
      const double upper = ctx.riesz(s - 1.0, z) /
                           (bounds::classical_constant(s - 1.0, dim) * std::pow(z, s - 1.0 + d / 2.0));
      return lower_margin(lower, upper);
    }
    case CheckId::riesz_lower_subquadratic: {
      if (w.variant == 0) {
        return lower_margin(bounds::riesz_lower_sub2(s, dim, ctx.lambda1(), z), ctx.riesz(s, z));
      }
      // Chains through R_2: variant 1 for R_1, variant 2 for N.
      const double q = 1.0 + d / 4.0;
      const double r2 = ctx.riesz(2.0, z);
      const double middle = w.variant == 1 ? q * r2 / z : q * q * r2 / (z * z);
      const double left = ctx.riesz(w.variant == 1 ? 1.0 : 0.0, z);
      const double right = w.variant == 1 ? bounds::riesz_lower_sub2(1.0, dim, ctx.lambda1(), z)
                                          : bounds::counting_lower(dim, ctx.lambda1(), z);
      return std::min(lower_margin(middle, left), lower_margin(right, middle));
    }
    case CheckId::riesz_lower_hermi: {
      return lower_margin(bounds::riesz_lower_hermi(s, dim, ctx.lambda1(), z), ctx.riesz(s, z));
    }
    case CheckId::mean_lower_r2:
      return lower_margin(bounds::riesz2_lower_mean(dim, w.j, ctx.mean(detail::idx(w.j)), z),
                          ctx.riesz(2.0, z));
    case CheckId::mean_lower_r1:
      return lower_margin(bounds::riesz1_lower_mean(dim, w.j, ctx.mean(detail::idx(w.j)), z),
                          ctx.riesz(1.0, z));
    case CheckId::mean_lower_counting:
      return lower_margin(bounds::counting_lower_j(dim, w.j, ctx.mean(detail::idx(w.j)), z),
                          ctx.riesz(0.0, z));
    case CheckId::next_over_mean:
      return upper_margin(bounds::lambda_next_over_mean(dim, w.j, w.k),
                          ctx.lambda(detail::idx(w.k) + 1) / ctx.mean(detail::idx(w.j)));
    case CheckId::yang_simplified:
      return upper_margin((1.0 + 4.0 / d) * ctx.mean(detail::idx(w.k)),
                          ctx.lambda(detail::idx(w.k) + 1));
    case CheckId::hoelder_chain: {
      const double n = ctx.riesz(0.0, z);
      if (w.variant == 0) {
        const double t = (w.sigma_hi - s) / (w.sigma_hi - w.sigma_lo);
        const double bound = detail::log_convex_bound(ctx.riesz(w.sigma_lo, z),
                                                      ctx.riesz(w.sigma_hi, z), t);
        return upper_margin(bound, ctx.riesz(s, z));
      }
      if (w.variant == 1) {
        const double bound =
            std::exp(s * std::log(ctx.riesz(s - 1.0, z)) - (s - 1.0) * std::log(ctx.riesz(s, z)));
        return lower_margin(bound, n);
      }
      const double bound = std::pow((d + 2.0 * s) / (2.0 * s), s) * std::pow(z, -s) * ctx.riesz(s, z);
      return lower_margin(bound, n);
    }
    case CheckId::mean_ratio:
      return upper_margin(bounds::mean_ratio(dim, w.j, w.k),
                          ctx.mean(detail::idx(w.k)) / ctx.mean(detail::idx(w.j)));
    case CheckId::abhh:
      return upper_margin(bounds::abhh(dim, w.k), ctx.mean(detail::idx(w.k)) / ctx.lambda1());
    case CheckId::abhh_next:
      return upper_margin(bounds::abhh_next(dim, w.k),
                          ctx.lambda(detail::idx(w.k) + 1) / ctx.lambda1());
    case CheckId::mean_square_envelope: {
      const auto [lower, upper] = bounds::mean_sq_envelope(dim, ctx.mean(detail::idx(w.k)));
      const double msq = ctx.mean_sq(detail::idx(w.k));
      return std::min(lower_margin(lower, msq), upper_margin(upper, msq));
    }
    case CheckId::moment_ordering: {
      const auto k = detail::idx(w.k);
      return upper_margin(ctx.power_mean(k, w.sigma_hi), ctx.power_mean(k, s));
    }
    case CheckId::moment_interpolation: {
      const auto k = detail::idx(w.k);
      if (w.variant == 1) {
        // sigma in (1, 2]: interpolate between M_1 and M_2, then bound M_2.
        const double a = 1.0 + 2.0 / d;
        const double c = a * a / (1.0 + 4.0 / d);
        const double bound = std::pow(c, (s - 1.0) / s) * ctx.mean(k);
        return upper_margin(bound, ctx.power_mean(k, s));
      }
      const double mu = w.sigma_lo;
      const double tau = w.sigma_hi;
      const double lhs = std::pow(ctx.power_mean(k, s), s);
      const double bound = std::pow(std::pow(ctx.power_mean(k, mu), mu), (tau - s) / (tau - mu)) *
                           std::pow(std::pow(ctx.power_mean(k, tau), tau), (s - mu) / (tau - mu));
      return upper_margin(bound, lhs);
    }
  }
  throw ValidityError("point_margin: unknown check");
}

// ---------------------------------------------------------------------------
// Results

struct CheckResult {
  CheckId id;
  std::string grid;
  std::size_t evaluations = 0;
  bool passed = true;
  double worst_margin = std::numeric_limits<double>::infinity();
  Witness witness;
};

namespace detail {

class Sweep {
 public:
  Sweep(const CheckContext& ctx, CheckId id, std::string grid) : ctx_(ctx) {
    result_.id = id;
    result_.grid = std::move(grid);
  }

  void visit(const Witness& w) {
    double m = point_margin(ctx_, result_.id, w);
    if (std::isnan(m)) m = -std::numeric_limits<double>::infinity();
    ++result_.evaluations;
    if (m < result_.worst_margin || result_.evaluations == 1) {
      result_.worst_margin = m;
      result_.witness = w;
    }
  }

  CheckResult finish() {
    result_.passed = result_.evaluations == 0 || result_.worst_margin >= -kSlack;
    return result_;
  }

 private:
  const CheckContext& ctx_;
  CheckResult result_{};
};

inline std::string describe_sigmas(const std::vector<double>& sigmas) {
  std::string out = "sigma {";
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", sigmas[i]);
    out += (i ? "," : "") + std::string(buf);
  }
  return out + "}";
}

inline std::string grid_text(const std::vector<double>& sigmas, std::size_t nz) {
  return describe_sigmas(sigmas) + " x " + std::to_string(nz) + " z";
}

}  // namespace detail

/// Difference, derivative and scaling-monotonicity inequalities for R_sigma.
/// Grid z values must lie in (lambda_1, complete_below].
inline std::vector<CheckResult> check_difference_inequalities(
    const CheckContext& ctx, const std::vector<double>& sigmas, const std::vector<double>& zs) {
  for (double z : zs) {
    if (!(z > ctx.lambda1())) throw ConfigError("z grid must lie above lambda_1");
    rieszweyl::detail::require_complete(ctx.spectrum(), z, "check_difference_inequalities");
  }
  std::vector<double> low;
  std::vector<double> high;
  for (double s : sigmas) {
    if (!(s > 0.0)) throw ConfigError("sigma grid must be positive");
    if (s <= 2.0) low.push_back(s);
    if (s >= 2.0) high.push_back(s);
  }
  std::vector<CheckResult> out;
  const std::array<std::pair<CheckId, const std::vector<double>*>, 4> pointwise = {{
      {CheckId::riesz_difference_low, &low},
      {CheckId::riesz_difference_high, &high},
      {CheckId::riesz_derivative_low, &low},
      {CheckId::riesz_derivative_high, &high},
  }};
  for (const auto& [id, grid] : pointwise) {
    detail::Sweep sweep(ctx, id, detail::grid_text(*grid, zs.size()));
    for (double s : *grid) {
      for (double z : zs) {
        Witness w;
        w.sigma = s;
        w.z = z;
        sweep.visit(w);
      }
    }
    out.push_back(sweep.finish());
  }
  const std::array<std::pair<CheckId, const std::vector<double>*>, 2> scaling = {{
      {CheckId::riesz_scaling_low, &low},
      {CheckId::riesz_scaling_high, &high},
  }};
  for (const auto& [id, grid] : scaling) {
    const std::size_t pairs = zs.empty() ? 0 : zs.size() - 1;
    detail::Sweep sweep(ctx, id, detail::grid_text(*grid, pairs) + " consecutive pairs");
    for (double s : *grid) {
      for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
        Witness w;
        w.sigma = s;
        w.z = zs[i];
        w.z_next = zs[i + 1];
        sweep.visit(w);
      }
    }
    out.push_back(sweep.finish());
  }
  return out;
}

/// Two-sided Riesz-mean sandwich for sigma >= 2 plus the mean form of
/// Berezin-Li-Yau, and the ratio form comparing R_{sigma-1} with R_sigma.
inline std::vector<CheckResult> check_riesz_sandwich(const CheckContext& ctx,
                                                     const std::vector<double>& sigmas,
                                                     const std::vector<double>& zs) {
  std::vector<double> high;
  for (double s : sigmas) {
    if (s >= 2.0) high.push_back(s);
  }
  const double d = ctx.d();
  const auto volume = ctx.spectrum().volume();

  std::string grid = detail::grid_text(high, zs.size()) + " above (1+2 sigma/d) lambda_1";
  grid += volume ? "; mean form k = 1..N" : "; upper side skipped (no volume)";
  detail::Sweep sandwich(ctx, CheckId::riesz_sandwich, grid);
  for (double s : high) {
    for (double z : zs) {
      if (z < (1.0 + 2.0 * s / d) * ctx.lambda1()) continue;
      Witness w;
      w.sigma = s;
      w.z = z;
      sandwich.visit(w);
    }
  }
  if (volume) {
    for (std::size_t k = 1; k <= ctx.spectrum().size(); ++k) {
      Witness w;
      w.variant = 1;
      w.k = static_cast<long>(k);
      sandwich.visit(w);
    }
  }

  detail::Sweep ratio(ctx, CheckId::aizenman_lieb_ratio, detail::grid_text(high, zs.size()));
  for (double s : high) {
    for (double z : zs) {
      Witness w;
      w.sigma = s;
      w.z = z;
      ratio.visit(w);
    }
  }
  return {sandwich.finish(), ratio.finish()};
}

/// Evaluation points approaching lambda_{k+1} from below, k = 1..max_k.
inline std::vector<double> limit_points(const Spectrum& spec, std::size_t max_k) {
  std::vector<double> out;
  const std::size_t top = std::min(max_k, spec.size() == 0 ? 0 : spec.size() - 1);
  for (std::size_t k = 1; k <= top; ++k) {
    out.push_back(spec.lambda(k + 1) * (1.0 - kBelowOffset));
  }
  return out;
}

/// Lower bounds on R_sigma for sigma < 2 and in terms of lambda_1 or of the
/// mean of the first j eigenvalues, then the eigenvalue upper bounds they
/// imply as z approaches lambda_{k+1}.
inline std::vector<CheckResult> check_lower_bounds(const CheckContext& ctx,
                                                   const std::vector<double>& sigmas,
                                                   const std::vector<std::size_t>& j_list,
                                                   const std::vector<double>& zs,
                                                   std::size_t max_k) {
  const auto dim = ctx.dimension();
  const double d = ctx.d();
  const double l1 = ctx.lambda1();
  const Spectrum& spec = ctx.spectrum();
  std::vector<CheckResult> out;

  std::vector<double> sub;
  for (double s : sigmas) {
    if (s >= 0.0 && s < 2.0) sub.push_back(s);
  }
  if (std::find(sub.begin(), sub.end(), 0.0) == sub.end()) sub.insert(sub.begin(), 0.0);
  {
    detail::Sweep sweep(ctx, CheckId::riesz_lower_subquadratic,
                        detail::grid_text(sub, zs.size()) + " above threshold; chains at sigma 0, 1");
    for (double s : sub) {
      const double threshold = bounds::riesz_lower_sub2_threshold(s, dim) * l1;
      for (double z : zs) {
        if (z < threshold) continue;
        Witness w;
        w.sigma = s;
        w.z = z;
        sweep.visit(w);
      }
    }
    for (int variant : {1, 2}) {
      for (double z : zs) {
        if (z < (1.0 + 4.0 / d) * l1) continue;
        Witness w;
        w.variant = variant;
        w.sigma = variant == 1 ? 1.0 : 0.0;
        w.z = z;
        sweep.visit(w);
      }
    }
    out.push_back(sweep.finish());
  }
  {
    std::vector<double> hs;
    for (double s : sigmas) {
      if (s >= 1.0) hs.push_back(s);
    }
    detail::Sweep sweep(ctx, CheckId::riesz_lower_hermi, detail::grid_text(hs, zs.size()));
    for (double s : hs) {
      for (double z : zs) {
        Witness w;
        w.sigma = s;
        w.z = z;
        sweep.visit(w);
      }
    }
    out.push_back(sweep.finish());
  }

  std::vector<long> js;
  for (std::size_t j : j_list) {
    if (j >= 1 && j <= spec.size()) js.push_back(static_cast<long>(j));
  }
  std::string jtext = "j {";
  for (std::size_t i = 0; i < js.size(); ++i) jtext += (i ? "," : "") + std::to_string(js[i]);
  jtext += "}";

  const auto limits = limit_points(spec, max_k);
  for (CheckId id : {CheckId::mean_lower_r2, CheckId::mean_lower_r1, CheckId::mean_lower_counting}) {
    std::string grid = jtext + " x " + std::to_string(zs.size()) + " z";
    if (id == CheckId::mean_lower_counting) {
      grid += " + " + std::to_string(limits.size()) + " limits z -> lambda_{k+1}";
    }
    detail::Sweep sweep(ctx, id, grid + " above (1+4/d) mean_j");
    for (long j : js) {
      const double threshold = (1.0 + 4.0 / d) * ctx.mean(detail::idx(j));
      auto visit_all = [&](const std::vector<double>& points) {
        for (double z : points) {
          if (z < threshold) continue;
          Witness w;
          w.j = j;
          w.z = z;
          sweep.visit(w);
        }
      };
      visit_all(zs);
      if (id == CheckId::mean_lower_counting) visit_all(limits);
    }
    out.push_back(sweep.finish());
  }

  const long top = static_cast<long>(std::min(max_k, spec.size() - 1));
  {
    detail::Sweep sweep(ctx, CheckId::next_over_mean,
                        "1 <= j <= k <= " + std::to_string(top));
    for (long k = 1; k <= top; ++k) {
      for (long j = 1; j <= k; ++j) {
        Witness w;
        w.j = j;
        w.k = k;
        sweep.visit(w);
      }
    }
    out.push_back(sweep.finish());
  }
  {
    const long all = static_cast<long>(spec.size()) - 1;
    detail::Sweep sweep(ctx, CheckId::yang_simplified, "k = 1.." + std::to_string(all));
    for (long k = 1; k <= all; ++k) {
      Witness w;
      w.k = k;
      sweep.visit(w);
    }
    out.push_back(sweep.finish());
  }
  return out;
}

using SigmaTriple = std::array<double, 3>;

inline std::vector<SigmaTriple> default_sigma_triples() {
  return {{0.0, 1.0, 2.0}, {0.0, 0.5, 1.0}, {0.5, 1.0, 1.5},
          {1.0, 2.0, 3.0}, {0.0, 2.5, 5.0}, {2.0, 3.0, 5.0}};
}

/// Log-convexity of sigma -> R_sigma(z) and the counting-function lower
/// bounds derived from it.
inline CheckResult check_hoelder(const CheckContext& ctx, const std::vector<double>& zs,
                                 const std::vector<SigmaTriple>& triples,
                                 const std::vector<double>& sigmas) {
  for (const auto& t : triples) {
    if (!(t[0] >= 0.0 && t[0] <= t[1] && t[1] <= t[2] && t[0] < t[2])) {
      throw ConfigError("sigma triples must satisfy 0 <= s0 <= s1 <= s2, s0 < s2");
    }
  }
  const std::string grid = std::to_string(triples.size()) + " triples, " +
                           detail::describe_sigmas(sigmas) + " x " + std::to_string(zs.size()) + " z";
  detail::Sweep sweep(ctx, CheckId::hoelder_chain, grid);
  for (const auto& t : triples) {
    for (double z : zs) {
      Witness w;
      w.sigma_lo = t[0];
      w.sigma = t[1];
      w.sigma_hi = t[2];
      w.z = z;
      sweep.visit(w);
    }
  }
  for (double s : sigmas) {
    for (int variant : {1, 2}) {
      if (variant == 1 && s < 1.0) continue;
      if (variant == 2 && s < 2.0) continue;
      for (double z : zs) {
        Witness w;
        w.variant = variant;
        w.sigma = s;
        w.z = z;
        sweep.visit(w);
      }
    }
  }
  return sweep.finish();
}

inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t dense = 32,
                                               std::size_t sparse = 40) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= std::min(n, dense); ++k) out.push_back(k);
  if (n > dense) {
    const double ratio = static_cast<double>(n) / static_cast<double>(dense);
    for (std::size_t i = 1; i <= sparse; ++i) {
      const auto k = static_cast<std::size_t>(
          std::llround(static_cast<double>(dense) * std::pow(ratio, static_cast<double>(i) / sparse)));
      if (k > out.back() && k <= n) out.push_back(k);
    }
  }
  return out;
}

/// Mean-ratio bounds, their lambda_1 and lambda_{k+1} consequences, the
/// mean-square envelope and power-mean orderings.
inline std::vector<CheckResult> check_mean_bounds(const CheckContext& ctx, std::size_t max_k) {
  const auto dim = ctx.dimension();
  const Spectrum& spec = ctx.spectrum();
  const long n = static_cast<long>(spec.size());
  const long top = std::min(static_cast<long>(max_k), n);
  std::vector<CheckResult> out;
  {
    detail::Sweep sweep(ctx, CheckId::mean_ratio,
                        "admissible 1 <= j < k <= " + std::to_string(top));
    for (long k = 1; k <= top; ++k) {
      for (long j = 1; j <= k; ++j) {
        if (!bounds::detail::mean_ratio_admissible(dim, j, k)) break;
        Witness w;
        w.j = j;
        w.k = k;
        sweep.visit(w);
      }
    }
    out.push_back(sweep.finish());
  }
  {
    detail::Sweep sweep(ctx, CheckId::abhh, "admissible k <= " + std::to_string(n));
    for (long k = 1; k <= n; ++k) {
      if (!bounds::abhh_admissible(dim, k)) continue;
      Witness w;
      w.k = k;
      sweep.visit(w);
    }
    out.push_back(sweep.finish());
  }
  {
    detail::Sweep sweep(ctx, CheckId::abhh_next, "admissible k <= " + std::to_string(n - 1));
    for (long k = 1; k < n; ++k) {
      if (!bounds::abhh_admissible(dim, k)) continue;
      Witness w;
      w.k = k;
      sweep.visit(w);
    }
    out.push_back(sweep.finish());
  }
  {
    detail::Sweep sweep(ctx, CheckId::mean_square_envelope, "k = 1.." + std::to_string(n));
    for (long k = 1; k <= n; ++k) {
      Witness w;
      w.k = k;
      sweep.visit(w);
    }
    out.push_back(sweep.finish());
  }

  const auto ks = sample_indices(spec.size());
  const std::vector<double> orders = {-1.0, 0.0, 0.25, 0.5, 1.0, 1.5, 2.0};
  {
    detail::Sweep sweep(ctx, CheckId::moment_ordering,
                        std::to_string(ks.size()) + " k x harmonic, geometric, " +
                            detail::describe_sigmas({0.25, 0.5, 1.0, 1.5, 2.0}));
    for (std::size_t k : ks) {
      for (std::size_t a = 0; a < orders.size(); ++a) {
        for (std::size_t b = a + 1; b < orders.size(); ++b) {
          Witness w;
          w.k = static_cast<long>(k);
          w.sigma = orders[a];
          w.sigma_hi = orders[b];
          sweep.visit(w);
        }
      }
    }
    out.push_back(sweep.finish());
  }
  {
    const std::vector<double> positive = {0.25, 0.5, 1.0, 1.5, 2.0};
    detail::Sweep sweep(ctx, CheckId::moment_interpolation,
                        std::to_string(ks.size()) + " k x ordered triples of " +
                            detail::describe_sigmas(positive) + "; Weyl-type form for sigma in (1,2]");
    for (std::size_t k : ks) {
      for (std::size_t a = 0; a < positive.size(); ++a) {
        for (std::size_t b = a + 1; b < positive.size(); ++b) {
          for (std::size_t c = b + 1; c < positive.size(); ++c) {
            Witness w;
            w.k = static_cast<long>(k);
            w.sigma_lo = positive[a];
            w.sigma = positive[b];
            w.sigma_hi = positive[c];
            sweep.visit(w);
          }
        }
      }
      for (double s : {1.5, 2.0}) {
        Witness w;
        w.variant = 1;
        w.k = static_cast<long>(k);
        w.sigma = s;
        sweep.visit(w);
      }
    }
    out.push_back(sweep.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suite

struct SuiteConfig {
  std::size_t z_points = 200;
  double z_fraction = 0.95;
  std::optional<double> z_max;
  std::vector<double> sigmas = {0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 5.0};
  std::vector<SigmaTriple> sigma_triples = default_sigma_triples();
  std::vector<std::size_t> j_list = {1, 2, 3, 4, 5, 8, 10, 16, 25, 50, 100, 200};
  std::size_t max_k = 10000;
  bool negative_control = true;
  bool inject_corruption = false;
  bool parallel = true;
};

struct NamedSpectrum {
  std::string name;
  Spectrum spectrum;
};

struct SpectrumReport {
  std::string name;
  std::string domain;
  std::size_t eigenvalues = 0;
  double complete_below = 0.0;
  std::size_t z_points = 0;
  bool corrupted = false;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  std::size_t evaluations() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.evaluations;
    return n;
  }
};

struct VerificationReport {
  std::vector<SpectrumReport> spectra;
  // Corrupted copies that are expected to fail at least one check.
  std::vector<SpectrumReport> negative_controls;

  bool negative_controls_detected() const {
    return std::all_of(negative_controls.begin(), negative_controls.end(),
                       [](const SpectrumReport& r) { return !r.passed(); });
  }

  bool passed() const {
    return negative_controls_detected() &&
           std::all_of(spectra.begin(), spectra.end(),
                       [](const SpectrumReport& r) { return r.passed(); });
  }

  std::size_t evaluations() const {
    std::size_t n = 0;
    for (const auto& r : spectra) n += r.evaluations();
    return n;
  }
};

/// 0 iff the report passed.
inline int exit_code(const VerificationReport& report) { return report.passed() ? 0 : 1; }

/// Logarithmic grid of n points in (lambda_1, top], nudged below any
/// eigenvalue it would land on.
inline std::vector<double> z_grid(const Spectrum& spec, const SuiteConfig& config) {
  if (spec.empty()) return {};
  const double cap = spec.complete_below();
  double top = config.z_fraction * cap;
  if (config.z_max) {
    if (!(*config.z_max <= cap)) {
      throw ConfigError("z_max exceeds complete_below of spectrum '" + spec.domain().describe() + "'");
    }
    top = *config.z_max;
  }
  if (!(config.z_fraction > 0.0 && config.z_fraction <= 1.0)) {
    throw ConfigError("z_fraction must lie in (0, 1]");
  }
  const double l1 = spec.first();
  if (!(top > l1) || config.z_points == 0) return {};
  const auto ev = spec.eigenvalues();
  std::vector<double> out;
  out.reserve(config.z_points);
  const double span = std::log(top / l1);
  for (std::size_t i = 1; i <= config.z_points; ++i) {
    double z = i == config.z_points
                   ? top
                   : l1 * std::exp(span * static_cast<double>(i) / static_cast<double>(config.z_points));
    const auto it = std::lower_bound(ev.begin(), ev.end(), z * (1.0 - kBelowOffset));
    if (it != ev.end() && std::abs(*it - z) <= kBelowOffset * z) z = *it * (1.0 - kBelowOffset);
    if (!out.empty() && !(z > out.back())) continue;
    out.push_back(z);
  }
  return out;
}

/// Copy with lambda_1 scaled down tenfold; still a valid spectrum.
inline Spectrum corrupt(const Spectrum& spec) {
  if (spec.empty()) throw EmptySpectrumError("corrupt: spectrum has no eigenvalues");
  std::vector<double> ev(spec.eigenvalues().begin(), spec.eigenvalues().end());
  ev.front() *= 0.1;
  return Spectrum(spec.domain(), std::move(ev), spec.complete_below(), spec.volume());
}

inline SpectrumReport run_spectrum(const std::string& name, const Spectrum& spec,
                                   const SuiteConfig& config, bool corrupted) {
  SpectrumReport report;
  report.name = name;
  report.domain = spec.domain().describe();
  report.eigenvalues = spec.size();
  report.complete_below = spec.complete_below();
  report.corrupted = corrupted;
  if (spec.empty()) return report;
  const auto zs = z_grid(spec, config);
  report.z_points = zs.size();
  const CheckContext ctx(spec);
  auto append = [&report](std::vector<CheckResult> part) {
    for (auto& c : part) report.checks.push_back(std::move(c));
  };
  append(check_difference_inequalities(ctx, config.sigmas, zs));
  append(check_riesz_sandwich(ctx, config.sigmas, zs));
  append(check_lower_bounds(ctx, config.sigmas, config.j_list, zs, config.max_k));
  report.checks.push_back(check_hoelder(ctx, zs, config.sigma_triples, config.sigmas));
  append(check_mean_bounds(ctx, config.max_k));
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return report;
}

/// Runs every check on every spectrum; spectra are processed concurrently
/// when config.parallel is set.
inline VerificationReport run_suite(const std::vector<NamedSpectrum>& spectra,
                                    const SuiteConfig& config) {
  // Validate grids up front so configuration errors surface before any work.
  for (const auto& s : spectra) z_grid(s.spectrum, config);

  struct Job {
    std::string name;
    Spectrum spectrum;
    bool corrupted;
    bool control;
  };
  std::vector<Job> jobs;
  for (const auto& s : spectra) {
    if (config.inject_corruption && !s.spectrum.empty()) {
      jobs.push_back({s.name, corrupt(s.spectrum), true, false});
    } else {
      jobs.push_back({s.name, s.spectrum, false, false});
    }
  }
  if (config.negative_control && !config.inject_corruption) {
    for (const auto& s : spectra) {
      if (!s.spectrum.empty()) jobs.push_back({s.name, corrupt(s.spectrum), true, true});
    }
  }

  std::vector<SpectrumReport> results(jobs.size());
  if (config.parallel && jobs.size() > 1) {
    std::vector<std::future<SpectrumReport>> futures;
    for (const auto& job : jobs) {
      futures.push_back(std::async(std::launch::async, [&job, &config] {
        return run_spectrum(job.name, job.spectrum, config, job.corrupted);
      }));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      results[i] = run_spectrum(jobs[i].name, jobs[i].spectrum, config, jobs[i].corrupted);
    }
  }

  VerificationReport report;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    (jobs[i].control ? report.negative_controls : report.spectra).push_back(std::move(results[i]));
  }
  return report;
}

/// Unit square and box [pi, pi/2] at 5000, disk and 3-ball of radius 1 at 2000.
inline std::vector<NamedSpectrum> default_spectra() {
  std::vector<NamedSpectrum> out;
  out.push_back({"unit_square", box_spectrum({1.0, 1.0}, 5000.0)});
  out.push_back({"box_pi_half_pi", box_spectrum({std::numbers::pi, std::numbers::pi / 2.0}, 5000.0)});
  out.push_back({"disk", ball_spectrum(2, 1.0, 2000.0)});
  out.push_back({"ball3", ball_spectrum(3, 1.0, 2000.0)});
  return out;
}

}  // namespace rieszweyl::verify
