#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "rieszweyl/specfun.hpp"

using namespace rieszweyl;
using std::numbers::pi;

namespace {

// Ascending series in long double, summed until terms vanish. Independent
// of the library's series and continued-fraction code paths.
long double series_oracle(long double nu, long double x) {
  const long double h = x / 2.0L;
  long double term = std::pow(h, nu) / std::tgamma(nu + 1.0L);
  long double sum = term;
  for (int m = 1; m < 500; ++m) {
    term *= -h * h / (static_cast<long double>(m) * (nu + m));
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum) && m > h) break;
  }
  return sum;
}

double oracle_zero(long double nu, long double lo, long double hi) {
  long double flo = series_oracle(nu, lo);
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    const long double fm = series_oracle(nu, mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return static_cast<double>(0.5L * (lo + hi));
}

// Root of tan x = x in (p pi, (p + 1/2) pi): the zeros of J_{3/2}.
double tan_root(int p) {
  double lo = p * pi + 1e-9;
  double hi = (p + 0.5) * pi - 1e-9;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (std::tan(mid) - mid < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST(Gamma, MatchesLibm) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.05, 60.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng);
    EXPECT_NEAR(rieszweyl::gamma(x) / std::tgamma(x), 1.0, 1e-13) << x;
    EXPECT_NEAR(log_gamma(x), std::lgamma(x), 1e-12 * std::max(1.0, std::abs(std::lgamma(x)))) << x;
  }
}

TEST(Gamma, RecurrenceAndSpecialValues) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 30.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    EXPECT_NEAR(rieszweyl::gamma(x + 1.0) / (x * rieszweyl::gamma(x)), 1.0, 1e-12);
  }
  EXPECT_NEAR(rieszweyl::gamma(0.5), std::sqrt(pi), 1e-14);
  double fact = 1.0;
  for (int n = 1; n <= 20; ++n) {
    EXPECT_NEAR(rieszweyl::gamma(n) / fact, 1.0, 1e-13);
    fact *= n;
  }
  EXPECT_NEAR(log_gamma(500.0), std::lgamma(500.0), 1e-10);
}

TEST(Gamma, RejectsNonPositive) {
  EXPECT_THROW(rieszweyl::gamma(0.0), DomainError);
  EXPECT_THROW(rieszweyl::gamma(-1.5), DomainError);
  EXPECT_THROW(log_gamma(0.0), DomainError);
}

TEST(BesselJ, AgreesWithLongDoubleSeries) {
  for (double nu : {-0.5, -0.25, 0.0, 0.5, 1.0, 1.5, 2.5, 5.0, 10.0, 17.5}) {
    for (double x = 0.05; x <= 18.0; x += 0.37) {
      const double want = static_cast<double>(series_oracle(nu, x));
      EXPECT_NEAR(bessel_j(nu, x), want, 1e-11) << "nu=" << nu << " x=" << x;
    }
  }
}

TEST(BesselJ, HalfIntegerClosedForms) {
  for (double x = 0.5; x < 120.0; x += 0.731) {
    const double pref = std::sqrt(2.0 / (pi * x));
    EXPECT_NEAR(bessel_j(0.5, x), pref * std::sin(x), 1e-13);
    EXPECT_NEAR(bessel_j(-0.5, x), pref * std::cos(x), 1e-13);
    EXPECT_NEAR(bessel_j(1.5, x), pref * (std::sin(x) / x - std::cos(x)), 1e-13);
  }
  for (int n = 2; n <= 6; ++n) {
    for (double x = 30.0; x < 100.0; x += 3.3) {
      EXPECT_NEAR(bessel_j(n + 0.5, x), bessel_j_half_integer(n, x), 1e-12);
    }
  }
}

TEST(BesselJ, DerivativeIdentity) {
  // J_nu' = (J_{nu-1} - J_{nu+1}) / 2
  for (double nu : {0.5, 1.0, 2.0, 3.5, 8.0}) {
    for (double x = 0.3; x < 40.0; x += 0.9) {
      EXPECT_NEAR(bessel_j_derivative(nu, x),
                  0.5 * (bessel_j(nu - 1.0, x) - bessel_j(nu + 1.0, x)), 1e-12);
    }
  }
}

TEST(BesselJ, Domain) {
  EXPECT_THROW(bessel_j(-0.75, 1.0), DomainError);
  EXPECT_THROW(bessel_j(0.0, -1.0), DomainError);
  EXPECT_EQ(bessel_j(0.0, 0.0), 1.0);
  EXPECT_EQ(bessel_j(2.0, 0.0), 0.0);
}

TEST(BesselZero, FirstZerosAgainstBisection) {
  EXPECT_NEAR(bessel_zero(0.0, 1).value, oracle_zero(0.0L, 2.0L, 3.0L), 1e-12);
  EXPECT_NEAR(bessel_zero(1.0, 1).value, oracle_zero(1.0L, 3.5L, 4.0L), 1e-12);
  EXPECT_NEAR(bessel_zero(0.0, 1).value, 2.4048255577, 1e-9);
  EXPECT_NEAR(bessel_zero(1.0, 1).value, 3.8317059702, 1e-9);
}

TEST(BesselZero, HalfIntegerOrders) {
  for (int p = 1; p <= 30; ++p) {
    EXPECT_NEAR(bessel_zero(0.5, p).value, p * pi, 1e-11);
    EXPECT_NEAR(bessel_zero(-0.5, p).value, (p - 0.5) * pi, 1e-11);
    EXPECT_NEAR(bessel_zero(1.5, p).value, tan_root(p), 1e-10);
  }
}

TEST(BesselZero, McMahonAsymptotics) {
  for (double nu : {0.0, 0.5, 1.0, 2.0, 3.5, 5.0}) {
    double previous_gap = std::numeric_limits<double>::infinity();
    for (int p = 10; p <= 40; ++p) {
      const double beta = (p + 0.5 * nu - 0.25) * pi;
      const double corrected = beta - (4.0 * nu * nu - 1.0) / (8.0 * beta);
      const double z = bessel_zero(nu, p).value;
      EXPECT_LT(std::abs(z - corrected), 0.01) << "nu=" << nu << " p=" << p;
      // The leading-term gap shrinks like 1/p.
      const double gap = std::abs(z - beta);
      EXPECT_LE(gap, previous_gap + 1e-12);
      previous_gap = gap;
    }
  }
}

TEST(BesselZero, ZerosAreInterlacedAndConsistent) {
  for (double nu : {0.0, 1.0, 2.5, 7.0}) {
    const auto zs = bessel_zeros_below(nu, 60.0);
    ASSERT_FALSE(zs.empty());
    for (std::size_t i = 0; i < zs.size(); ++i) {
      EXPECT_NEAR(zs[i], bessel_zero(nu, static_cast<int>(i) + 1).value, 1e-12);
      EXPECT_LT(std::abs(bessel_j(nu, zs[i])), 1e-12);
      // J_nu and J_{nu+1} zeros interlace.
      EXPECT_LT(zs[i], bessel_zero(nu + 1.0, static_cast<int>(i) + 1).value);
    }
    EXPECT_LT(zs.back(), 60.0);
  }
  EXPECT_THROW(bessel_zero(0.0, 0), DomainError);
}
