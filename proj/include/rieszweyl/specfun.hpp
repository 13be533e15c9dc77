#pragma once

// Gamma function, Bessel functions of the first kind and their positive zeros.
//
// J_nu is evaluated by its power series for x < 2 and by Steed's method
// (continued fractions CF1 for J'/J and CF2 for p + iq, with downward
// recurrence to a low order) for x >= 2. Negative orders in [-1/2, 0) go
// through J_{-mu} = cos(mu pi) J_mu - sin(mu pi) Y_mu.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "rieszweyl/error.hpp"

namespace rieszweyl {

namespace detail {

// Lanczos approximation, g = 7, n = 9.
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczosCoeff[] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline double lanczos_sum(double zm1) {
  double s = kLanczosCoeff[0];
  for (int i = 1; i < 9; ++i) s += kLanczosCoeff[i] / (zm1 + i);
  return s;
}

// Gamma without the positivity check; reflection handles x < 1/2.
inline double gamma_unchecked(double x) {
  using std::numbers::pi;
  if (x < 0.5) return pi / (std::sin(pi * x) * gamma_unchecked(1.0 - x));
  const double zm1 = x - 1.0;
  const double t = zm1 + kLanczosG + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, zm1 + 0.5) * std::exp(-t) *
         lanczos_sum(zm1);
}

}  // namespace detail

/// Γ(x) for x > 0. Relative error is a few ulp on [0.5, 50].
inline double gamma(double x) {
  if (!(x > 0.0)) throw DomainError("gamma: argument must be positive");
  return detail::gamma_unchecked(x);
}

/// log Γ(x) for x > 0; stays finite where Γ itself overflows.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  if (x < 0.5) return std::log(detail::gamma_unchecked(x));
  const double zm1 = x - 1.0;
  const double t = zm1 + detail::kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (zm1 + 0.5) * std::log(t) -
         t + std::log(detail::lanczos_sum(zm1));
}

namespace detail {

struct BesselPair {
  double value;       // J_nu(x)
  double derivative;  // J_nu'(x)
};

// Power series; accurate for x < 2 with any nu > -1.
inline double bessel_j_series(double nu, double x) {
  if (x == 0.0) return nu == 0.0 ? 1.0 : (nu > 0.0 ? 0.0 : HUGE_VAL);
  const double half = 0.5 * x;
  double term = std::exp(nu * std::log(half) - log_gamma(nu + 1.0));
  double sum = term;
  const double q = half * half;
  for (int k = 1; k < 500; ++k) {
    term *= -q / (k * (k + nu));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

struct SteedResult {
  double j, jp, y, yp;
};

// Steed's method for nu >= 0, x >= 2.
inline SteedResult bessel_jy_steed(double nu, double x) {
  constexpr double kEps = 1e-16;
  constexpr double kFpMin = 1e-300;
  constexpr int kMaxIt = 1000000;
  using std::numbers::pi;

  const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
  const double mu = nu - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / pi;

  // CF1: f = J'_nu / J_nu, sign of J_nu tracked through isign.
  int isign = 1;
  double h = nu * xi;
  if (h < kFpMin) h = kFpMin;
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int it = 1;
  for (; it <= kMaxIt; ++it) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b - 1.0 / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) < kEps) break;
  }
  if (it > kMaxIt) throw ConvergenceError("bessel_j: CF1 did not converge");

  // Downward recurrence from nu to mu on unnormalized values.
  double rjl = isign * kFpMin;
  double rjpl = h * rjl;
  const double rjl1 = rjl;
  const double rjp1 = rjpl;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
  }
  if (rjl == 0.0) rjl = kEps;
  const double f = rjpl / rjl;

  // CF2: p + iq, evaluated by the modified Lentz method.
  double a = 0.25 - mu2;
  double p = -0.5 * xi;
  double q = 1.0;
  const double br = 2.0 * x;
  double bi = 2.0;
  fact = a * xi / (p * p + q * q);
  double cr = br + q * fact;
  double ci = bi + p * fact;
  double den = br * br + bi * bi;
  double dr = br / den;
  double di = -bi / den;
  double dlr = cr * dr - ci * di;
  double dli = cr * di + ci * dr;
  double temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  for (it = 2; it <= kMaxIt; ++it) {
    a += 2 * (it - 1);
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < kFpMin) dr = kFpMin;
    fact = a / (cr * cr + ci * ci);
    cr = br + cr * fact;
    ci = bi - ci * fact;
    if (std::abs(cr) + std::abs(ci) < kFpMin) cr = kFpMin;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::abs(dlr - 1.0) + std::abs(dli) < kEps) break;
  }
  if (it > kMaxIt) throw ConvergenceError("bessel_j: CF2 did not converge");

  const double gam = (p - f) / q;
  double rjmu = std::sqrt(w / ((p - f) * gam + q));
  rjmu = std::copysign(rjmu, rjl);
  double rymu = rjmu * gam;
  const double rymup = rymu * (p + q / gam);
  double ry1 = mu * xi * rymu - rymup;
  const double scale = rjmu / rjl;

  SteedResult out{};
  out.j = rjl1 * scale;
  out.jp = rjp1 * scale;
  for (int i = 1; i <= nl; ++i) {
    const double rytemp = (mu + i) * xi2 * ry1 - rymu;
    rymu = ry1;
    ry1 = rytemp;
  }
  out.y = rymu;
  out.yp = nu * xi * rymu - ry1;
  return out;
}

inline void check_order(double nu) {
  if (!(nu >= -0.5)) throw DomainError("bessel_j: order must be >= -1/2");
}

inline BesselPair bessel_j_with_derivative(double nu, double x) {
  check_order(nu);
  if (!(x >= 0.0)) throw DomainError("bessel_j: argument must be >= 0");
  if (x < 2.0) {
    const double j = bessel_j_series(nu, x);
    const double jp = x == 0.0 ? (nu == 1.0 ? 0.5 : (nu == 0.0 || nu > 1.0 ? 0.0 : HUGE_VAL))
                               : (nu / x) * j - bessel_j_series(nu + 1.0, x);
    return {j, jp};
  }
  if (nu >= 0.0) {
    const auto r = bessel_jy_steed(nu, x);
    return {r.j, r.jp};
  }
  const double mu = -nu;
  const auto r = bessel_jy_steed(mu, x);
  const double c = std::cos(mu * std::numbers::pi);
  const double s = std::sin(mu * std::numbers::pi);
  return {c * r.j - s * r.y, c * r.jp - s * r.yp};
}

}  // namespace detail

/// J_nu(x) for nu >= -1/2, x >= 0.
inline double bessel_j(double nu, double x) {
  return detail::bessel_j_with_derivative(nu, x).value;
}

/// J_nu'(x).
inline double bessel_j_derivative(double nu, double x) {
  return detail::bessel_j_with_derivative(nu, x).derivative;
}

/// Spherical-Bessel closed form for half-integer orders nu = n + 1/2,
/// n >= -1: J_{n+1/2}(x) = sqrt(2x/pi) j_n(x), with j_n from the upward
/// recurrence seeded by sin and cos. Reliable only for x well above n.
inline double bessel_j_half_integer(int n, double x) {
  using std::numbers::pi;
  if (n < -1) throw DomainError("bessel_j_half_integer: n must be >= -1");
  if (!(x > 0.0)) throw DomainError("bessel_j_half_integer: x must be > 0");
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double pref = std::sqrt(2.0 / (pi * x));
  if (n == -1) return pref * c;
  double prev = s;            // x j_0
  double cur = s / x - c;     // x j_1
  if (n == 0) return pref * prev;
  for (int l = 1; l < n; ++l) {
    const double next = (2 * l + 1) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return pref * cur;
}

struct BesselZero {
  double order;
  int index;
  double value;
};

namespace detail {

// Lower starting point strictly below the first positive zero.
inline double zero_scan_start(double nu) {
  return nu > 0.0 ? std::sqrt(nu * (nu + 2.0)) : 0.1;
}

// Consecutive zeros of J_nu, nu >= -1/2, are more than 2.5 apart.
inline constexpr double kZeroScanStep = 0.5;

// Refines the unique zero in [lo, hi] by Newton steps, falling back to
// bisection whenever a step leaves the bracket.
inline double refine_zero(double nu, double lo, double hi) {
  double flo = bessel_j(nu, lo);
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const auto [f, fp] = bessel_j_with_derivative(nu, x);
    if (f == 0.0) return x;
    if ((f > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = f;
    } else {
      hi = x;
    }
    double next = x - f / fp;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= 1e-13 * std::max(1.0, x) || hi - lo <= 1e-14 * std::max(1.0, x)) break;
  }
  const auto [f, fp] = bessel_j_with_derivative(nu, x);
  if (std::abs(f) > 1e-10 * std::max(1.0, std::abs(fp))) {
    throw ConvergenceError("bessel_zero: residual check failed for nu = " +
                           std::to_string(nu));
  }
  return x;
}

}  // namespace detail

/// All positive zeros of J_nu strictly below x_max, in increasing order.
inline std::vector<double> bessel_zeros_below(double nu, double x_max) {
  detail::check_order(nu);
  std::vector<double> zeros;
  double a = detail::zero_scan_start(nu);
  double fa = bessel_j(nu, a);
  while (a < x_max) {
    const double b = a + detail::kZeroScanStep;
    const double fb = bessel_j(nu, b);
    if (fa == 0.0) {
      zeros.push_back(a);
    } else if ((fa > 0.0) != (fb > 0.0) && fb != 0.0) {
      zeros.push_back(detail::refine_zero(nu, a, b));
    }
    a = b;
    fa = fb;
  }
  while (!zeros.empty() && zeros.back() >= x_max) zeros.pop_back();
  return zeros;
}

/// The p-th positive zero j_{nu,p}.
inline BesselZero bessel_zero(double nu, int p) {
  detail::check_order(nu);
  if (p < 1) throw DomainError("bessel_zero: index must be >= 1");
  double a = detail::zero_scan_start(nu);
  double fa = bessel_j(nu, a);
  int found = 0;
  // j_{nu,p} < (p + nu/2 + 1) pi + nu for every nu >= -1/2.
  const double limit = (p + 0.5 * nu + 2.0) * std::numbers::pi + nu + 10.0;
  while (a < limit) {
    const double b = a + detail::kZeroScanStep;
    const double fb = bessel_j(nu, b);
    double root = -1.0;
    if (fa == 0.0) {
      root = a;
    } else if ((fa > 0.0) != (fb > 0.0) && fb != 0.0) {
      root = detail::refine_zero(nu, a, b);
    }
    if (root > 0.0 && ++found == p) return {nu, p, root};
    a = b;
    fa = fb;
  }
  throw ConvergenceError("bessel_zero: failed to bracket zero " +
                         std::to_string(p) + " of order " + std::to_string(nu));
}

}  // namespace rieszweyl
