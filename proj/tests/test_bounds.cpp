#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "rieszweyl/bounds.hpp"
#include "rieszweyl/riesz.hpp"

using namespace rieszweyl;
using namespace rieszweyl::bounds;
using std::numbers::pi;

namespace {

constexpr double kJ01 = 2.404825557695773;
constexpr double kJ11 = 3.831705970207512;
constexpr double kJ1AtJ01 = 0.5191474972894669;  // J_1(j_{0,1})

}  // namespace

TEST(Constants, BesselZerosOfTheBall) {
  EXPECT_NEAR(ground_zero(2), kJ01, 1e-12);
  EXPECT_NEAR(second_zero(2), kJ11, 1e-12);
  EXPECT_NEAR(ground_zero(3), pi, 1e-12);
  EXPECT_NEAR(ground_zero(1), pi / 2, 1e-12);
  EXPECT_NEAR(ashbaugh_benguria_ratio(2), kJ11 * kJ11 / (kJ01 * kJ01), 1e-11);
}

TEST(Constants, HermiConstant) {
  const double h2 = 4.0 / (kJ01 * kJ01 * kJ1AtJ01 * kJ1AtJ01);
  EXPECT_NEAR(hermi_constant(2), h2, 1e-11);
  EXPECT_GE(hermi_constant(2), 2.565);
  EXPECT_LE(hermi_constant(2), 2.567);
  // J_{3/2}(pi) = sqrt(2) / pi, so H_3 = 6 / (pi^2 * 2 / pi^2) = 3.
  EXPECT_NEAR(hermi_constant(3), 3.0, 1e-12);
}

TEST(Constants, ClassicalConstant) {
  EXPECT_NEAR(classical_constant(0.0, 2), 1.0 / (4.0 * pi), 1e-15);
  EXPECT_NEAR(classical_constant(1.0, 2), 1.0 / (8.0 * pi), 1e-15);
  EXPECT_NEAR(classical_constant(0.0, 1), 1.0 / pi, 1e-15);
  for (int d = 1; d <= 10; ++d) {
    for (double s : {0.5, 1.0, 2.0, 3.7}) {
      const double ratio = classical_constant(s - 1.0, d) / classical_constant(s, d);
      EXPECT_NEAR(ratio, 1.0 + d / (2.0 * s), 1e-12 * ratio) << d << " " << s;
    }
  }
  EXPECT_THROW(classical_constant(-1.0, 2), ValidityError);
}

TEST(Constants, WeylAndFaberKrahn) {
  EXPECT_NEAR(weyl_coefficient(2, pi), 4.0, 1e-14);
  EXPECT_NEAR(weyl_coefficient(1, 1.0), pi * pi, 1e-13);
  EXPECT_NEAR(faber_krahn_coefficient(2), 4.0 / (kJ01 * kJ01), 1e-13);
  EXPECT_NEAR(faber_krahn_coefficient(3), 4.0 * std::pow(3.0 * std::sqrt(pi) / 4.0, 4.0 / 3.0) / (pi * pi),
              1e-13);
  EXPECT_THROW(weyl_coefficient(2, 0.0), ValidityError);
}

TEST(Bounds, HandValues) {
  EXPECT_DOUBLE_EQ(cheng_yang(2, 127), 381.0);
  EXPECT_DOUBLE_EQ(cy_av(2, 127), 190.5);
  EXPECT_DOUBLE_EQ(simple_p9(2, 127), 142.875);
  EXPECT_NEAR(abhh(2, 5), 4.375, 1e-14);
  EXPECT_NEAR(fk_weyl_avg(2, 127), 2.0 / (kJ01 * kJ01) * 127.0, 1e-11);
  EXPECT_NEAR(lambda_next_over_mean(2, 1, 7), cheng_yang(2, 7), 1e-14);
  EXPECT_NEAR(lambda_next_over_mean(3, 4, 32), (1.0 + 4.0 / 3.0) * 4.0, 1e-13);
  EXPECT_NEAR(mean_ratio(4, 2, 6), 2.0 * std::pow(2.0 / 3.0, 1.5) * std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(abhh_next(2, 5), 3.0 * abhh(2, 5), 1e-13);
}

TEST(Bounds, HermiBoundsFromTheConstant) {
  const double h2 = hermi_constant(2);
  EXPECT_NEAR(her1(2, 10), 1.0 + 2.0 * h2 * 10.0, 1e-12);
  EXPECT_NEAR(her2(2, 10), 1.0 + h2 * 10.0 / 2.0, 1e-12);
  EXPECT_NEAR(her2(2, 127), 163.962, 5e-4);
}

TEST(Bounds, AshbaughBenguria) {
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(2), 1);
  EXPECT_EQ(ceil_log2(3), 2);
  EXPECT_EQ(ceil_log2(127), 7);
  EXPECT_EQ(ceil_log2(128), 7);
  EXPECT_EQ(ceil_log2(129), 8);
  EXPECT_DOUBLE_EQ(ab94(2, 0), 1.0);
  EXPECT_NEAR(ab94(2, 3), std::pow(kJ11 * kJ11 / (kJ01 * kJ01), 3), 1e-10);
  EXPECT_NEAR(ab94_avg(2, 127), ab94(2, 7) / 2.0, 1e-12);
}

TEST(Bounds, AshbaughBenguriaIsAttainedByTheDisk) {
  const auto disk = ball_spectrum(2, 1.0, 30.0);
  EXPECT_NEAR(disk.lambda(2) / disk.lambda(1), ab94(2, 1), 1e-10);
}

TEST(Bounds, CheckedAgainstTheUnitSquare) {
  const auto s = box_spectrum({1.0, 1.0}, 3000.0);
  const PrefixSums p(s);
  for (long k = 1; k < 200; ++k) {
    EXPECT_LE(s.lambda(k + 1) / s.lambda(1), cheng_yang(2, k));
    EXPECT_LE(p.mean(k) / s.lambda(1), cy_av(2, k));
    EXPECT_GE(p.mean(k), berezin_li_yau(2, 1.0, k));
  }
  for (double z : {100.0, 500.0, 2500.0}) {
    EXPECT_LE(riesz_mean(s, 2.0, z).value, riesz_upper(2.0, 2, 1.0, z));
  }
}

TEST(Bounds, LowerMainAtThreshold) {
  for (int d : {1, 2, 3, 5}) {
    for (double s : {2.0, 2.5, 4.0}) {
      const double l1 = 7.3;
      const double a = 2.0 * s / d;
      EXPECT_NEAR(riesz_lower_main(s, d, l1, (1.0 + a) * l1), std::pow(a * l1, s),
                  1e-12 * std::pow(a * l1, s));
    }
  }
}

TEST(Bounds, LowerSub2BranchesAtThreshold) {
  // at z = (1 + s/d) lambda_1, s = 2 sigma + 2, everything but (s lambda_1 / d)^sigma cancels
  const double l1 = 3.0;
  for (int d : {2, 3}) {
    const double sigma = 1.5;
    const double s = 2.0 * sigma + 2.0;
    const double z = (1.0 + s / d) * l1;
    EXPECT_NEAR(riesz_lower_sub2(sigma, d, l1, z), std::pow(s * l1 / d, sigma), 1e-11);
  }
  EXPECT_NEAR(riesz_lower_sub2_threshold(0.5, 2), 1.0 + 5.0 / 2.0, 1e-15);
  EXPECT_NEAR(riesz_lower_sub2_threshold(1.0, 2), 1.0 + 4.0 / 2.0, 1e-15);
}

TEST(Bounds, HermiLowerVanishesBelowGround) {
  EXPECT_EQ(riesz_lower_hermi(1.0, 2, 5.0, 5.0), 0.0);
  EXPECT_EQ(riesz_lower_hermi(1.0, 2, 5.0, 4.0), 0.0);
  EXPECT_GT(riesz_lower_hermi(1.0, 2, 5.0, 6.0), 0.0);
}

TEST(Bounds, CountingLowerAndMeanVariants) {
  EXPECT_NEAR(counting_lower(2, 1.0, 3.0), 1.0, 1e-15);
  EXPECT_NEAR(counting_lower_j(2, 4, 2.0, 12.0), 8.0, 1e-14);
  EXPECT_NEAR(riesz1_lower_mean(2, 1, 1.0, 3.0), 9.0 / (1.5 * 3.0), 1e-14);
  EXPECT_NEAR(riesz2_lower_mean(2, 1, 1.0, 3.0), 27.0 / (2.25 * 3.0), 1e-14);
}

TEST(Bounds, MeanSquareEnvelope) {
  const auto [lo, hi] = mean_sq_envelope(2, 3.0);
  EXPECT_DOUBLE_EQ(lo, 9.0);
  EXPECT_NEAR(hi, 12.0, 1e-14);
}

TEST(Bounds, ValidityErrors) {
  EXPECT_THROW(cheng_yang2(2, 2), ValidityError);
  EXPECT_NO_THROW(cheng_yang2(2, 3));
  EXPECT_THROW(mean_ratio(2, 5, 3), ValidityError);
  EXPECT_THROW(mean_ratio(2, 2, 2), ValidityError);  // needs k >= 8/3
  EXPECT_NO_THROW(mean_ratio(2, 2, 3));
  EXPECT_THROW(abhh(2, 3), ValidityError);
  EXPECT_NO_THROW(abhh(2, 4));
  EXPECT_THROW(riesz_upper(1.5, 2, 1.0, 10.0), ValidityError);
  EXPECT_THROW(riesz_lower_main(2.0, 2, 1.0, 2.9), ValidityError);
  EXPECT_THROW(riesz_lower_sub2(2.0, 2, 1.0, 10.0), ValidityError);
  EXPECT_THROW(riesz_lower_sub2(0.5, 2, 1.0, 3.4), ValidityError);
  EXPECT_THROW(riesz_lower_hermi(0.5, 2, 1.0, 3.0), ValidityError);
  EXPECT_THROW(counting_lower(2, 1.0, 2.9), ValidityError);
  EXPECT_THROW(counting_lower_j(2, 0, 1.0, 10.0), ValidityError);
  EXPECT_THROW(lambda_next_over_mean(2, 3, 2), ValidityError);
  EXPECT_THROW(cy_av(2, 0), ValidityError);
  EXPECT_THROW(ab94(2, -1), ValidityError);
  EXPECT_THROW(mean_sq_envelope(2, 0.0), ValidityError);
}

TEST(Dimension, TestedRangeGate) {
  EXPECT_THROW(Dimension(0), ValidityError);
  EXPECT_THROW(Dimension(11), ValidityError);
  EXPECT_THROW(cheng_yang(11, 5), ValidityError);
  EXPECT_EQ(Dimension::untested(12).value(), 12);
  EXPECT_THROW(Dimension::untested(0), ValidityError);
  EXPECT_NO_THROW(cheng_yang(Dimension::untested(12), 5));
}

TEST(Catalog, EntriesAreUniqueAndEvaluable) {
  const auto& cat = catalog();
  EXPECT_GE(cat.size(), 18u);
  std::set<std::string> ids;
  for (const auto& b : cat) {
    EXPECT_TRUE(ids.insert(b.id).second) << b.id;
    EXPECT_FALSE(b.cite.empty());
    EXPECT_FALSE(b.validity.empty());
    BoundArgs args;
    for (const auto& p : b.parameters) {
      double v = 1.0;
      if (p == "d") v = 3;
      if (p == "k") v = 64;
      if (p == "j") v = 2;
      if (p == "m") v = 3;
      if (p == "sigma") v = b.id == "riesz_lower_sub2" ? 1.5 : 2.5;
      if (p == "lambda1") v = 1.0;
      if (p == "mean_j" || p == "mean_k") v = 2.0;
      if (p == "volume") v = 4.0;
      if (p == "z") v = 50.0;
      args.values[p] = v;
    }
    const double value = b.evaluate(args);
    EXPECT_TRUE(std::isfinite(value)) << b.id;
    EXPECT_GT(value, 0.0) << b.id;
  }
  EXPECT_EQ(find_bound("cheng_yang").evaluate({{{"d", 2}, {"k", 127}}}), 381.0);
  EXPECT_THROW(find_bound("nope"), ValidityError);
  EXPECT_THROW(find_bound("abhh").evaluate({{{"d", 2}, {"k", 3}}}), ValidityError);
  EXPECT_THROW(find_bound("cy_av").evaluate({{{"d", 2}, {"k", 3.5}}}), ValidityError);
  EXPECT_THROW(find_bound("cy_av").evaluate({{{"d", 2}}}), ValidityError);
}

TEST(Catalog, AveragedVariantsDivideByOnePlusTwoOverD) {
  for (int d = 1; d <= 10; ++d) {
    const double a = 1.0 + 2.0 / d;
    EXPECT_NEAR(fk_weyl_avg(d, 50) * a, fk_weyl(d, 50), 1e-12 * fk_weyl(d, 50));
    EXPECT_NEAR(cheng_yang2_avg(d, d + 1) * a, cheng_yang2(d, d + 1), 1e-12 * cheng_yang2(d, d + 1));
  }
}
