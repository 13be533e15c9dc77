#pragma once

// Riesz means R_sigma(z) = sum_k (z - lambda_k)_+^sigma, the counting
// function, eigenvalue means and the Legendre transform of R_1.
//
// Sums run in ascending eigenvalue order with compensated accumulation.
// Every evaluation point must satisfy z <= complete_below.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rieszweyl/error.hpp"
#include "rieszweyl/kahan.hpp"
#include "rieszweyl/spectra.hpp"

namespace rieszweyl {

struct RieszEvaluation {
  double sigma;
  double z;
  double value;
  std::size_t contributing;  // N(z)
};

namespace detail {

inline void require_complete(const Spectrum& spec, double z, const char* who) {
  if (!(z <= spec.complete_below())) {
    throw TruncationError(std::string(who) + ": z exceeds complete_below");
  }
}

// Number of stored eigenvalues strictly below z.
inline std::size_t count_below(const Spectrum& spec, double z) {
  const auto ev = spec.eigenvalues();
  return static_cast<std::size_t>(std::lower_bound(ev.begin(), ev.end(), z) - ev.begin());
}

}  // namespace detail

/// sum over lambda_k < z of (z - lambda_k)^order, for any order > -1.
/// Orders in (-1, 0) appear as R_{sigma-1} in the difference inequality for
/// sigma < 1; order 0 gives the counting function.
inline double riesz_sum(const Spectrum& spec, double order, double z) {
  if (!(order > -1.0)) throw DomainError("riesz_sum: order must be > -1");
  detail::require_complete(spec, z, "riesz_sum");
  const auto ev = spec.eigenvalues();
  const std::size_t n = detail::count_below(spec, z);
  if (order == 0.0) return static_cast<double>(n);
  CompensatedSum<double> acc;
  if (order == 1.0) {
    for (std::size_t i = 0; i < n; ++i) acc += z - ev[i];
  } else if (order == 2.0) {
    for (std::size_t i = 0; i < n; ++i) acc += (z - ev[i]) * (z - ev[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) acc += std::pow(z - ev[i], order);
  }
  return acc.value();
}

inline RieszEvaluation riesz_mean(const Spectrum& spec, double sigma, double z) {
  if (!(sigma >= 0.0)) throw DomainError("riesz_mean: sigma must be >= 0");
  if (!(z > 0.0)) throw DomainError("riesz_mean: z must be positive");
  const double value = riesz_sum(spec, sigma, z);
  return {sigma, z, value, detail::count_below(spec, z)};
}

/// N(z) = #{k : lambda_k < z}.
inline std::size_t counting(const Spectrum& spec, double z) {
  if (!(z > 0.0)) throw DomainError("counting: z must be positive");
  detail::require_complete(spec, z, "counting");
  return detail::count_below(spec, z);
}

/// Prefix sums of lambda and lambda^2, built in one ascending compensated
/// pass. Entry k equals a fresh compensated sum of the first k terms.
class PrefixSums {
 public:
  explicit PrefixSums(const Spectrum& spec) : spec_(&spec) {
    const auto ev = spec.eigenvalues();
    sum_.reserve(ev.size() + 1);
    sum_sq_.reserve(ev.size() + 1);
    sum_.push_back(0.0);
    sum_sq_.push_back(0.0);
    CompensatedSum<double> s;
    CompensatedSum<double> s2;
    for (double v : ev) {
      s += v;
      s2 += v * v;
      sum_.push_back(s.value());
      sum_sq_.push_back(s2.value());
    }
  }

  const Spectrum& spectrum() const noexcept { return *spec_; }
  std::size_t size() const noexcept { return sum_.size() - 1; }

  double sum(std::size_t k) const { return sum_.at(k); }
  double sum_sq(std::size_t k) const { return sum_sq_.at(k); }

  /// Arithmetic mean of the first k eigenvalues.
  double mean(std::size_t k) const {
    check(k);
    return sum_[k] / static_cast<double>(k);
  }

  /// Mean of the squares of the first k eigenvalues.
  double mean_sq(std::size_t k) const {
    check(k);
    return sum_sq_[k] / static_cast<double>(k);
  }

 private:
  void check(std::size_t k) const {
    if (k < 1 || k >= sum_.size()) {
      throw RangeError("means: k = " + std::to_string(k) + " out of range");
    }
  }

  const Spectrum* spec_;
  std::vector<double> sum_;
  std::vector<double> sum_sq_;
};

struct MeanSet {
  std::size_t k = 0;
  double mean = 0.0;     // M_1
  double mean_sq = 0.0;  // M_2^2
  std::vector<std::pair<double, double>> power_means;  // (sigma, M_sigma)
  double geometric = 0.0;
  double harmonic = 0.0;
};

/// Power mean M_sigma of the first k eigenvalues; sigma = 0 is the
/// geometric mean (log-sum), sigma = -1 the harmonic mean.
inline double power_mean(const Spectrum& spec, std::size_t k, double sigma) {
  if (k < 1 || k > spec.size()) {
    throw RangeError("power_mean: k = " + std::to_string(k) + " out of range");
  }
  const auto ev = spec.eigenvalues();
  CompensatedSum<double> acc;
  if (sigma == 0.0) {
    for (std::size_t i = 0; i < k; ++i) acc += std::log(ev[i]);
    return std::exp(acc.value() / static_cast<double>(k));
  }
  if (sigma == -1.0) {
    for (std::size_t i = 0; i < k; ++i) acc += 1.0 / ev[i];
    return static_cast<double>(k) / acc.value();
  }
  if (sigma == 1.0) {
    for (std::size_t i = 0; i < k; ++i) acc += ev[i];
    return acc.value() / static_cast<double>(k);
  }
  for (std::size_t i = 0; i < k; ++i) acc += std::pow(ev[i], sigma);
  return std::pow(acc.value() / static_cast<double>(k), 1.0 / sigma);
}

inline MeanSet means(const Spectrum& spec, std::size_t k,
                     const std::vector<double>& sigmas = {}) {
  if (k < 1 || k > spec.size()) {
    throw RangeError("means: k = " + std::to_string(k) + " out of range");
  }
  MeanSet out;
  out.k = k;
  const auto ev = spec.eigenvalues();
  CompensatedSum<double> s;
  CompensatedSum<double> s2;
  for (std::size_t i = 0; i < k; ++i) {
    s += ev[i];
    s2 += ev[i] * ev[i];
  }
  out.mean = s.value() / static_cast<double>(k);
  out.mean_sq = s2.value() / static_cast<double>(k);
  for (double sigma : sigmas) {
    if (!(sigma > 0.0 && sigma <= 2.0)) {
      throw DomainError("means: power-mean orders must lie in (0, 2]");
    }
    out.power_means.emplace_back(sigma, power_mean(spec, k, sigma));
  }
  out.geometric = power_mean(spec, k, 0.0);
  out.harmonic = power_mean(spec, k, -1.0);
  return out;
}

struct DerivativeCheck {
  double finite_difference;  // (R(z+h) - R(z-h)) / 2h
  double analytic;           // sigma R_{sigma-1}(z)
};

/// Central difference of R_sigma against sigma R_{sigma-1}.
inline DerivativeCheck riesz_derivative_check(const Spectrum& spec, double sigma,
                                              double z, double h) {
  if (!(sigma >= 1.0)) throw DomainError("riesz_derivative_check: sigma must be >= 1");
  if (!(h > 0.0) || !(z - h > 0.0)) {
    throw DomainError("riesz_derivative_check: need h > 0 and z - h > 0");
  }
  detail::require_complete(spec, z + h, "riesz_derivative_check");
  const double fd = (riesz_sum(spec, sigma, z + h) - riesz_sum(spec, sigma, z - h)) / (2.0 * h);
  return {fd, sigma * riesz_sum(spec, sigma - 1.0, z)};
}

namespace detail {

// w z - R_1(z) at z = lambda, where c eigenvalues lie strictly below
// lambda: R_1(lambda) = c lambda - S_c.
inline double legendre_objective(const PrefixSums& prefix, double w, double lambda,
                                 std::size_t below) {
  return (w - static_cast<double>(below)) * lambda + prefix.sum(below);
}

inline void check_legendre_argument(const Spectrum& spec, double w) {
  if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("legendre: w must be positive");
  if (std::floor(w) + 1.0 > static_cast<double>(spec.size())) {
    throw RangeError("legendre: floor(w) + 1 exceeds the stored eigenvalue count");
  }
}

}  // namespace detail

/// Closed form of sup_z { w z - R_1(z) }:
///   (w - [w]) lambda_{[w]+1} + [w] mean_{[w]}.
/// At integer w = k this is the sum of the first k eigenvalues.
inline double legendre_R1(const PrefixSums& prefix, double w) {
  const Spectrum& spec = prefix.spectrum();
  detail::check_legendre_argument(spec, w);
  const auto k = static_cast<std::size_t>(std::floor(w));
  const double z = spec.lambda(k + 1);
  // Eigenvalues tied with lambda_{k+1} contribute nothing to R_1(z), so the
  // formula is evaluated with the strict count below z.
  return detail::legendre_objective(prefix, w, z, detail::count_below(spec, z));
}

inline double legendre_R1(const Spectrum& spec, double w) {
  return legendre_R1(PrefixSums(spec), w);
}

struct LegendreMaximum {
  double value;
  double maximizer;  // z attaining the supremum
};

/// Direct maximization of w z - R_1(z) over z in [0, complete_below]. The
/// objective is concave and piecewise linear, so only z = 0 and the
/// eigenvalues need to be visited. Later breakpoints win ties.
inline LegendreMaximum legendre_numeric(const PrefixSums& prefix, double w) {
  const Spectrum& spec = prefix.spectrum();
  detail::check_legendre_argument(spec, w);
  const auto ev = spec.eigenvalues();
  LegendreMaximum best{0.0, 0.0};
  std::size_t i = 0;
  while (i < ev.size()) {
    const double z = ev[i];
    const double value = detail::legendre_objective(prefix, w, z, i);
    if (value >= best.value) best = {value, z};
    while (i < ev.size() && ev[i] == z) ++i;
  }
  return best;
}

inline LegendreMaximum legendre_numeric(const Spectrum& spec, double w) {
  return legendre_numeric(PrefixSums(spec), w);
}

/// C_sigma of the elementary lemma bounding (y^s - x^s)/(y - x).
inline double c_sigma(double sigma) {
  if (!(sigma >= 0.0)) throw DomainError("c_sigma: sigma must be >= 0");
  if (sigma >= 1.0 && sigma <= 2.0) return 1.0;
  return 0.5 * sigma;
}

}  // namespace rieszweyl
