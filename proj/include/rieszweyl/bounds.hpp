#pragma once

// Universal Weyl-type eigenvalue bounds and the constants they use.
//
// Every bound checks its validity region and throws ValidityError outside it.

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rieszweyl/error.hpp"
#include "rieszweyl/specfun.hpp"

namespace rieszweyl::bounds {

inline constexpr int kMaxTestedDimension = 10;

/// Spatial dimension. Implicit construction accepts 1..10; higher dimensions
/// need the explicit Dimension::untested opt-in.
class Dimension {
 public:
  Dimension(int d) : value_(d) {  // NOLINT(google-explicit-constructor)
    if (d < 1 || d > kMaxTestedDimension) {
      throw ValidityError("dimension " + std::to_string(d) +
                          " outside the tested range 1..10");
    }
  }

  static Dimension untested(int d) {
    if (d < 1) throw ValidityError("dimension must be >= 1");
    Dimension out(1);
    out.value_ = d;
    return out;
  }

  int value() const noexcept { return value_; }
  double real() const noexcept { return static_cast<double>(value_); }

 private:
  int value_;
};

// ---------------------------------------------------------------------------
// Constants

/// j_{d/2-1,1}, the first zero governing the ball's fundamental eigenvalue.
inline double ground_zero(Dimension d) { return bessel_zero(0.5 * d.real() - 1.0, 1).value; }

/// j_{d/2,1}.
inline double second_zero(Dimension d) { return bessel_zero(0.5 * d.real(), 1).value; }

/// H_d = 2d / (j_{d/2-1,1}^2 J_{d/2}^2(j_{d/2-1,1})).
inline double hermi_constant(Dimension d) {
  const double j0 = ground_zero(d);
  const double jd = bessel_j(0.5 * d.real(), j0);
  return 2.0 * d.real() / (j0 * j0 * jd * jd);
}

/// L^cl_{sigma,d} = Gamma(sigma+1) / ((4 pi)^{d/2} Gamma(sigma+1+d/2)).
inline double classical_constant(double sigma, Dimension d) {
  if (!(sigma > -1.0)) throw ValidityError("classical_constant: sigma must be > -1");
  const double half_d = 0.5 * d.real();
  return std::exp(log_gamma(sigma + 1.0) - log_gamma(sigma + 1.0 + half_d)) /
         std::pow(4.0 * std::numbers::pi, half_d);
}

/// Weyl coefficient 4 pi Gamma(1+d/2)^{2/d} / |Omega|^{2/d}.
inline double weyl_coefficient(Dimension d, double volume) {
  if (!(volume > 0.0)) throw ValidityError("weyl_coefficient: volume must be positive");
  const double dd = d.real();
  return 4.0 * std::numbers::pi * std::pow(rieszweyl::gamma(1.0 + 0.5 * dd), 2.0 / dd) /
         std::pow(volume, 2.0 / dd);
}

/// Weyl law combined with Faber-Krahn: 4 Gamma(1+d/2)^{4/d} / j_{d/2-1,1}^2.
inline double faber_krahn_coefficient(Dimension d) {
  const double dd = d.real();
  const double j0 = ground_zero(d);
  return 4.0 * std::pow(rieszweyl::gamma(1.0 + 0.5 * dd), 4.0 / dd) / (j0 * j0);
}

/// j_{d/2,1}^2 / j_{d/2-1,1}^2, the ball's lambda_2 / lambda_1.
inline double ashbaugh_benguria_ratio(Dimension d) {
  const double j0 = ground_zero(d);
  const double j1 = second_zero(d);
  return (j1 * j1) / (j0 * j0);
}

// ---------------------------------------------------------------------------
// Bounds

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ValidityError(what);
}

inline double k_power(Dimension d, double k) { return std::pow(k, 2.0 / d.real()); }

inline double averaging_factor(Dimension d) { return 1.0 + 2.0 / d.real(); }

// k >= j (1 + d/2) / (1 + d/4), in exact integer form.
inline bool mean_ratio_admissible(Dimension d, long j, long k) {
  const long dd = d.value();
  return k * (dd + 4) >= 2 * j * (dd + 2);
}

}  // namespace detail

/// lambda_{2^m} / lambda_1 <= (j_{d/2,1}^2 / j_{d/2-1,1}^2)^m.
inline double ab94(Dimension d, int m) {
  detail::require(m >= 0, "ab94: m must be >= 0");
  return std::pow(ashbaugh_benguria_ratio(d), m);
}

/// Smallest m with 2^m >= k; lambda_k <= lambda_{2^m} extends ab94 to all k.
inline int ceil_log2(long k) {
  int m = 0;
  while ((1L << m) < k) ++m;
  return m;
}

/// Averaged ab94 at general k, using m = ceil(log2 k).
inline double ab94_avg(Dimension d, long k) {
  detail::require(k >= 1, "ab94_avg: k must be >= 1");
  return ab94(d, ceil_log2(k)) / detail::averaging_factor(d);
}

/// lambda_{k+1} / lambda_1 <= 1 + (1+d/2)^{2/d} H_d^{2/d} k^{2/d}.
inline double her1(Dimension d, long k) {
  detail::require(k >= 1, "her1: k must be >= 1");
  const double e = 2.0 / d.real();
  return 1.0 + std::pow(1.0 + 0.5 * d.real(), e) * std::pow(hermi_constant(d), e) *
                   detail::k_power(d, k);
}

/// mean_k / lambda_1 <= 1 + H_d^{2/d} k^{2/d} / (1 + 2/d).
inline double her2(Dimension d, long k) {
  detail::require(k >= 1, "her2: k must be >= 1");
  return 1.0 + std::pow(hermi_constant(d), 2.0 / d.real()) * detail::k_power(d, k) /
                   detail::averaging_factor(d);
}

/// lambda_{k+1} / lambda_1 <= (1 + 4/d) k^{2/d}.
inline double cheng_yang(Dimension d, long k) {
  detail::require(k >= 1, "cheng_yang: k must be >= 1");
  return (1.0 + 4.0 / d.real()) * detail::k_power(d, k);
}

/// Refined Cheng-Yang bound on lambda_{k+1} / lambda_1, k >= d + 1.
inline double cheng_yang2(Dimension d, long k) {
  detail::require(k >= d.value() + 1, "cheng_yang2: requires k >= d + 1");
  const double dd = d.real();
  const double dp1 = dd + 1.0;
  return (1.0 + 4.0 / dd) * std::sqrt(1.0 + 8.0 / dp1 + 8.0 / (dp1 * dp1)) *
         std::pow(dp1, -2.0 / dd) * detail::k_power(d, k);
}

inline double cheng_yang2_avg(Dimension d, long k) {
  return cheng_yang2(d, k) / detail::averaging_factor(d);
}

/// Asymptotic lambda_k / lambda_1 expression from Weyl and Faber-Krahn.
inline double fk_weyl(Dimension d, long k) {
  detail::require(k >= 1, "fk_weyl: k must be >= 1");
  return faber_krahn_coefficient(d) * detail::k_power(d, k);
}

inline double fk_weyl_avg(Dimension d, long k) {
  return fk_weyl(d, k) / detail::averaging_factor(d);
}

/// Lower bound on mean_k: Weyl coefficient times k^{2/d} / (1 + 2/d).
inline double berezin_li_yau(Dimension d, double volume, long k) {
  detail::require(k >= 1, "berezin_li_yau: k must be >= 1");
  return weyl_coefficient(d, volume) * detail::k_power(d, k) / detail::averaging_factor(d);
}

/// R_sigma(z) <= L^cl_{sigma,d} |Omega| z^{sigma + d/2}, sigma >= 2.
inline double riesz_upper(double sigma, Dimension d, double volume, double z) {
  detail::require(sigma >= 2.0, "riesz_upper: requires sigma >= 2");
  detail::require(volume > 0.0, "riesz_upper: volume must be positive");
  detail::require(z >= 0.0, "riesz_upper: z must be >= 0");
  return classical_constant(sigma, d) * volume * std::pow(z, sigma + 0.5 * d.real());
}

/// Lower side of the Riesz sandwich, sigma >= 2, z >= (1 + 2 sigma/d) lambda_1.
inline double riesz_lower_main(double sigma, Dimension d, double lambda1, double z) {
  const double dd = d.real();
  const double a = 2.0 * sigma / dd;
  detail::require(sigma >= 2.0, "riesz_lower_main: requires sigma >= 2");
  detail::require(lambda1 > 0.0, "riesz_lower_main: lambda_1 must be positive");
  detail::require(z >= (1.0 + a) * lambda1, "riesz_lower_main: requires z >= (1 + 2 sigma/d) lambda_1");
  return std::pow(a, sigma) * std::pow(lambda1, -0.5 * dd) *
         std::pow(z / (1.0 + a), sigma + 0.5 * dd);
}

/// Threshold on z / lambda_1 for riesz_lower_sub2.
inline double riesz_lower_sub2_threshold(double sigma, Dimension d) {
  if (sigma >= 1.0) return 1.0 + (2.0 * sigma + 2.0) / d.real();
  return 1.0 + (2.0 * sigma + 4.0) / d.real();
}

/// Weyl-type lower bound on R_sigma for 0 <= sigma < 2.
inline double riesz_lower_sub2(double sigma, Dimension d, double lambda1, double z) {
  detail::require(sigma >= 0.0 && sigma < 2.0, "riesz_lower_sub2: requires 0 <= sigma < 2");
  detail::require(lambda1 > 0.0, "riesz_lower_sub2: lambda_1 must be positive");
  detail::require(z >= riesz_lower_sub2_threshold(sigma, d) * lambda1,
                  "riesz_lower_sub2: z below threshold");
  const double dd = d.real();
  const double tail = std::pow(dd, 0.5 * dd) * std::pow(lambda1, -0.5 * dd) *
                      std::pow(z, sigma + 0.5 * dd);
  if (sigma >= 1.0) {
    const double s = 2.0 * sigma + 2.0;
    return std::pow(s, sigma) / std::pow(dd + s, sigma + 0.5 * dd) * tail;
  }
  const double s = 2.0 * sigma + 4.0;
  return (1.0 + 0.25 * dd) * std::pow(s, sigma + 1.0) /
         std::pow(dd + s, sigma + 1.0 + 0.5 * dd) * tail;
}

/// R_sigma(z) >= H_d^{-1} lambda_1^{-d/2} B(sigma, d) (z - lambda_1)_+^{sigma + d/2},
/// sigma >= 1.
inline double riesz_lower_hermi(double sigma, Dimension d, double lambda1, double z) {
  detail::require(sigma >= 1.0, "riesz_lower_hermi: requires sigma >= 1");
  detail::require(lambda1 > 0.0, "riesz_lower_hermi: lambda_1 must be positive");
  const double dd = d.real();
  const double gap = std::max(0.0, z - lambda1);
  if (gap == 0.0) return 0.0;
  const double beta = std::exp(log_gamma(1.0 + sigma) + log_gamma(1.0 + 0.5 * dd) -
                               log_gamma(1.0 + sigma + 0.5 * dd));
  return beta / hermi_constant(d) * std::pow(lambda1, -0.5 * dd) *
         std::pow(gap, sigma + 0.5 * dd);
}

/// N(z) >= (z / ((1 + 4/d) lambda_1))^{d/2}, z >= (1 + 4/d) lambda_1.
inline double counting_lower(Dimension d, double lambda1, double z) {
  const double zt = (1.0 + 4.0 / d.real()) * lambda1;
  detail::require(lambda1 > 0.0, "counting_lower: lambda_1 must be positive");
  detail::require(z >= zt, "counting_lower: requires z >= (1 + 4/d) lambda_1");
  return std::pow(z / zt, 0.5 * d.real());
}

namespace detail {

inline double mean_threshold(Dimension d, long j, double mean_j, const char* who) {
  require(j >= 1, std::string(who) + ": j must be >= 1");
  require(mean_j > 0.0, std::string(who) + ": mean_j must be positive");
  return (1.0 + 4.0 / d.real()) * mean_j;
}

}  // namespace detail

/// R_2(z) >= j z^{2+d/2} / ((1+d/4)^2 ((1+4/d) mean_j)^{d/2}).
inline double riesz2_lower_mean(Dimension d, long j, double mean_j, double z) {
  const double zt = detail::mean_threshold(d, j, mean_j, "riesz2_lower_mean");
  detail::require(z >= zt, "riesz2_lower_mean: requires z >= (1 + 4/d) mean_j");
  const double dd = d.real();
  const double q = 1.0 + 0.25 * dd;
  return static_cast<double>(j) * std::pow(z, 2.0 + 0.5 * dd) / (q * q * std::pow(zt, 0.5 * dd));
}

/// R_1(z) >= j z^{1+d/2} / ((1+d/4) ((1+4/d) mean_j)^{d/2}).
inline double riesz1_lower_mean(Dimension d, long j, double mean_j, double z) {
  const double zt = detail::mean_threshold(d, j, mean_j, "riesz1_lower_mean");
  detail::require(z >= zt, "riesz1_lower_mean: requires z >= (1 + 4/d) mean_j");
  const double dd = d.real();
  return static_cast<double>(j) * std::pow(z, 1.0 + 0.5 * dd) /
         ((1.0 + 0.25 * dd) * std::pow(zt, 0.5 * dd));
}

/// N(z) >= j (z / ((1 + 4/d) mean_j))^{d/2}.
inline double counting_lower_j(Dimension d, long j, double mean_j, double z) {
  const double zt = detail::mean_threshold(d, j, mean_j, "counting_lower_j");
  detail::require(z >= zt, "counting_lower_j: requires z >= (1 + 4/d) mean_j");
  return static_cast<double>(j) * std::pow(z / zt, 0.5 * d.real());
}

/// lambda_{k+1} / mean_j <= (1 + 4/d) (k/j)^{2/d}, k >= j >= 1.
inline double lambda_next_over_mean(Dimension d, long j, long k) {
  detail::require(j >= 1 && k >= j, "lambda_next_over_mean: requires k >= j >= 1");
  return (1.0 + 4.0 / d.real()) *
         detail::k_power(d, static_cast<double>(k) / static_cast<double>(j));
}

/// Coefficient 2((1+d/4)/(1+d/2))^{1+2/d} of the mean-ratio bound.
inline double simple_p9_coefficient(Dimension d) {
  const double dd = d.real();
  return 2.0 * std::pow((1.0 + 0.25 * dd) / (1.0 + 0.5 * dd), 1.0 + 2.0 / dd);
}

/// mean_k / mean_j <= 2((1+d/4)/(1+d/2))^{1+2/d} (k/j)^{2/d},
/// k >= j (1+d/2)/(1+d/4).
inline double mean_ratio(Dimension d, long j, long k) {
  detail::require(j >= 1, "mean_ratio: j must be >= 1");
  detail::require(detail::mean_ratio_admissible(d, j, k),
                  "mean_ratio: requires k >= j (1 + d/2) / (1 + d/4)");
  return simple_p9_coefficient(d) *
         detail::k_power(d, static_cast<double>(k) / static_cast<double>(j));
}

/// mean_k / lambda_1, i.e. mean_ratio with j = 1.
inline double simple_p9(Dimension d, long k) { return mean_ratio(d, 1, k); }

inline double cy_av_coefficient(Dimension d) { return (d.real() + 4.0) / (d.real() + 2.0); }

/// Averaged Cheng-Yang: mean_k / lambda_1 <= (d+4)/(d+2) k^{2/d}.
inline double cy_av(Dimension d, long k) {
  detail::require(k >= 1, "cy_av: k must be >= 1");
  return cy_av_coefficient(d) * detail::k_power(d, k);
}

/// Smallest k for which abhh and abhh_next apply.
inline bool abhh_admissible(Dimension d, long k) {
  return detail::mean_ratio_admissible(d, d.value() + 1, k);
}

inline double abhh_coefficient(Dimension d) {
  const double dd = d.real();
  const double e = 1.0 + 2.0 / dd;
  return (dd + 5.0) / std::pow(2.0, 2.0 / dd) *
         std::pow((dd + 4.0) / ((dd + 1.0) * (dd + 2.0)), e);
}

/// mean_k / lambda_1 bound from chaining the d+1 mean estimate with mean_ratio.
inline double abhh(Dimension d, long k) {
  detail::require(abhh_admissible(d, k),
                  "abhh: requires k >= (d+1)(1+d/2)/(1+d/4)");
  return abhh_coefficient(d) * detail::k_power(d, k);
}

inline double abhh_next_coefficient(Dimension d) {
  const double dd = d.real();
  const double e = 1.0 + 2.0 / dd;
  return std::pow(dd + 4.0, 1.0 + e) * (dd + 5.0) /
         (std::pow(2.0, 2.0 / dd) * dd * std::pow(dd + 1.0, e) * std::pow(dd + 2.0, e));
}

/// lambda_{k+1} / lambda_1 bound, same validity as abhh.
inline double abhh_next(Dimension d, long k) {
  detail::require(abhh_admissible(d, k),
                  "abhh_next: requires k >= (d+1)(1+d/2)/(1+d/4)");
  return abhh_next_coefficient(d) * detail::k_power(d, k);
}

/// (lower, upper) envelope of the mean of squares given the mean.
inline std::pair<double, double> mean_sq_envelope(Dimension d, double mean_k) {
  detail::require(mean_k > 0.0, "mean_sq_envelope: mean must be positive");
  const double dd = d.real();
  const double a = 1.0 + 2.0 / dd;
  const double lower = mean_k * mean_k;
  return {lower, a * a / (1.0 + 4.0 / dd) * lower};
}

// ---------------------------------------------------------------------------
// Catalog

enum class BoundKind {
  upper_on_lambda_ratio,
  upper_on_mean_ratio,
  lower_on_riesz,
  upper_on_riesz,
  lower_on_counting,
  lower_on_mean,
  upper_on_mean_square,
};

inline const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::upper_on_lambda_ratio: return "upper_on_lambda_ratio";
    case BoundKind::upper_on_mean_ratio: return "upper_on_mean_ratio";
    case BoundKind::lower_on_riesz: return "lower_on_riesz";
    case BoundKind::upper_on_riesz: return "upper_on_riesz";
    case BoundKind::lower_on_counting: return "lower_on_counting";
    case BoundKind::lower_on_mean: return "lower_on_mean";
    case BoundKind::upper_on_mean_square: return "upper_on_mean_square";
  }
  return "?";
}

/// Named arguments for catalog evaluation; each bound reads what it needs.
struct BoundArgs {
  std::map<std::string, double> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }

  double real(const std::string& key) const {
    const auto it = values.find(key);
    if (it == values.end()) throw ValidityError("missing argument '" + key + "'");
    return it->second;
  }

  long integer(const std::string& key) const {
    const double v = real(key);
    if (v != std::floor(v)) throw ValidityError("argument '" + key + "' must be an integer");
    return static_cast<long>(v);
  }

  Dimension dimension() const { return Dimension(static_cast<int>(integer("d"))); }
};

struct Bound {
  std::string id;
  BoundKind kind;
  std::string cite;
  std::string validity;
  std::vector<std::string> parameters;
  std::function<double(const BoundArgs&)> evaluate;
};

inline const std::vector<Bound>& catalog() {
  using K = BoundKind;
  static const std::vector<Bound> entries = [] {
    std::vector<Bound> b;
    b.push_back({"ab94", K::upper_on_lambda_ratio,
                 "Ashbaugh-Benguria ratio bound on lambda_{2^m}/lambda_1", "m >= 0", {"d", "m"},
                 [](const BoundArgs& a) { return ab94(a.dimension(), static_cast<int>(a.integer("m"))); }});
    b.push_back({"ab94_avg", K::upper_on_mean_ratio,
                 "Ashbaugh-Benguria bound averaged over k, m = ceil(log2 k)", "k >= 1", {"d", "k"},
                 [](const BoundArgs& a) { return ab94_avg(a.dimension(), a.integer("k")); }});
    b.push_back({"her1", K::upper_on_lambda_ratio,
                 "Hermi Weyl-type bound on lambda_{k+1}/lambda_1", "k >= 1", {"d", "k"},
                 [](const BoundArgs& a) { return her1(a.dimension(), a.integer("k")); }});
    b.push_back({"her2", K::upper_on_mean_ratio,
                 "Hermi Weyl-type bound on mean_k/lambda_1", "k >= 1", {"d", "k"},
                 [](const BoundArgs& a) { return her2(a.dimension(), a.integer("k")); }});
    b.push_back({"cheng_yang", K::upper_on_lambda_ratio,
                 "Cheng-Yang bound on lambda_{k+1}/lambda_1", "k >= 1", {"d", "k"},
                 [](const BoundArgs& a) { return cheng_yang(a.dimension(), a.integer("k")); }});
    b.push_back({"cheng_yang2", K::upper_on_lambda_ratio,
                 "Cheng-Yang refined bound on lambda_{k+1}/lambda_1", "k >= d + 1", {"d", "k"},
                 [](const BoundArgs& a) { return cheng_yang2(a.dimension(), a.integer("k")); }});
    b.push_back({"cheng_yang2_avg", K::upper_on_mean_ratio,
                 "Cheng-Yang refined bound divided by 1 + 2/d", "k >= d + 1", {"d", "k"},
                 [](const BoundArgs& a) { return cheng_yang2_avg(a.dimension(), a.integer("k")); }});
    b.push_back({"fk_weyl", K::upper_on_lambda_ratio,
                 "Weyl asymptotics with the Faber-Krahn ground state (asymptotic only)", "k >= 1", {"d", "k"},
                 [](const BoundArgs& a) { return fk_weyl(a.dimension(), a.integer("k")); }});
    b.push_back({"fk_weyl_avg", K::upper_on_mean_ratio,
                 "Weyl/Faber-Krahn expression divided by 1 + 2/d", "k >= 1", {"d", "k"},
                 [](const BoundArgs& a) { return fk_weyl_avg(a.dimension(), a.integer("k")); }});
    b.push_back({"berezin_li_yau", K::lower_on_mean,
                 "Berezin-Li-Yau inequality", "k >= 1, volume > 0", {"d", "volume", "k"},
                 [](const BoundArgs& a) { return berezin_li_yau(a.dimension(), a.real("volume"), a.integer("k")); }});
    b.push_back({"riesz_upper", K::upper_on_riesz,
                 "Laptev-Weidl / Berezin semiclassical Riesz-mean bound", "sigma >= 2", {"sigma", "d", "volume", "z"},
                 [](const BoundArgs& a) { return riesz_upper(a.real("sigma"), a.dimension(), a.real("volume"), a.real("z")); }});
    b.push_back({"riesz_lower_main", K::lower_on_riesz,
                 "Riesz-mean lower bound from z-monotonicity, sigma >= 2",
                 "sigma >= 2, z >= (1 + 2 sigma/d) lambda1", {"sigma", "d", "lambda1", "z"},
                 [](const BoundArgs& a) { return riesz_lower_main(a.real("sigma"), a.dimension(), a.real("lambda1"), a.real("z")); }});
    b.push_back({"riesz_lower_sub2", K::lower_on_riesz,
                 "Riesz-mean lower bound for 0 <= sigma < 2 via the difference inequality",
                 "1 <= sigma < 2: z >= (1 + (2 sigma + 2)/d) lambda1; 0 <= sigma < 1: z >= (1 + (2 sigma + 4)/d) lambda1",
                 {"sigma", "d", "lambda1", "z"},
                 [](const BoundArgs& a) { return riesz_lower_sub2(a.real("sigma"), a.dimension(), a.real("lambda1"), a.real("z")); }});
    b.push_back({"riesz_lower_hermi", K::lower_on_riesz,
                 "Hermi-type Riesz-mean lower bound with H_d", "sigma >= 1", {"sigma", "d", "lambda1", "z"},
                 [](const BoundArgs& a) { return riesz_lower_hermi(a.real("sigma"), a.dimension(), a.real("lambda1"), a.real("z")); }});
    b.push_back({"counting_lower", K::lower_on_counting,
                 "counting-function lower bound from R_2", "z >= (1 + 4/d) lambda1", {"d", "lambda1", "z"},
                 [](const BoundArgs& a) { return counting_lower(a.dimension(), a.real("lambda1"), a.real("z")); }});
    b.push_back({"riesz2_lower_mean", K::lower_on_riesz,
                 "R_2 lower bound in terms of mean_j", "z >= (1 + 4/d) mean_j", {"d", "j", "mean_j", "z"},
                 [](const BoundArgs& a) { return riesz2_lower_mean(a.dimension(), a.integer("j"), a.real("mean_j"), a.real("z")); }});
    b.push_back({"riesz1_lower_mean", K::lower_on_riesz,
                 "R_1 lower bound in terms of mean_j", "z >= (1 + 4/d) mean_j", {"d", "j", "mean_j", "z"},
                 [](const BoundArgs& a) { return riesz1_lower_mean(a.dimension(), a.integer("j"), a.real("mean_j"), a.real("z")); }});
    b.push_back({"counting_lower_j", K::lower_on_counting,
                 "counting-function lower bound in terms of mean_j", "z >= (1 + 4/d) mean_j", {"d", "j", "mean_j", "z"},
                 [](const BoundArgs& a) { return counting_lower_j(a.dimension(), a.integer("j"), a.real("mean_j"), a.real("z")); }});
    b.push_back({"lambda_next_over_mean", K::upper_on_lambda_ratio,
                 "lambda_{k+1}/mean_j bound; j = k is Yang's simplified inequality, j = 1 is Cheng-Yang",
                 "k >= j >= 1", {"d", "j", "k"},
                 [](const BoundArgs& a) { return lambda_next_over_mean(a.dimension(), a.integer("j"), a.integer("k")); }});
    b.push_back({"mean_ratio", K::upper_on_mean_ratio,
                 "Legendre-transform bound on mean_k/mean_j", "k >= j (1 + d/2)/(1 + d/4)", {"d", "j", "k"},
                 [](const BoundArgs& a) { return mean_ratio(a.dimension(), a.integer("j"), a.integer("k")); }});
    b.push_back({"simple_p9", K::upper_on_mean_ratio,
                 "mean_ratio with j = 1", "k >= (1 + d/2)/(1 + d/4)", {"d", "k"},
                 [](const BoundArgs& a) { return simple_p9(a.dimension(), a.integer("k")); }});
    b.push_back({"cy_av", K::upper_on_mean_ratio,
                 "Cheng-Yang bound summed as a left Riemann sum", "k >= 1", {"d", "k"},
                 [](const BoundArgs& a) { return cy_av(a.dimension(), a.integer("k")); }});
    b.push_back({"abhh", K::upper_on_mean_ratio,
                 "Ashbaugh-Benguria mean estimate at k = d + 1 chained with mean_ratio",
                 "k >= (d + 1)(1 + d/2)/(1 + d/4)", {"d", "k"},
                 [](const BoundArgs& a) { return abhh(a.dimension(), a.integer("k")); }});
    b.push_back({"abhh_next", K::upper_on_lambda_ratio,
                 "abhh combined with Yang's simplified inequality",
                 "k >= (d + 1)(1 + d/2)/(1 + d/4)", {"d", "k"},
                 [](const BoundArgs& a) { return abhh_next(a.dimension(), a.integer("k")); }});
    b.push_back({"mean_sq_envelope", K::upper_on_mean_square,
                 "Cauchy-Schwarz and Harrell-Stubbe envelope of the mean of squares (upper side)",
                 "mean_k > 0", {"d", "mean_k"},
                 [](const BoundArgs& a) { return mean_sq_envelope(a.dimension(), a.real("mean_k")).second; }});
    return b;
  }();
  return entries;
}

inline const Bound& find_bound(const std::string& id) {
  for (const auto& b : catalog()) {
    if (b.id == id) return b;
  }
  throw ValidityError("unknown bound '" + id + "'");
}

}  // namespace rieszweyl::bounds
