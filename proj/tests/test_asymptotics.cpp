// Copyright 2026 The symstat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/tools/minima.hpp>
#include <gtest/gtest.h>

#include "symstat/asymptotics.hpp"
#include "symstat/entanglement.hpp"

namespace symstat {
namespace {

TEST(PredictedLaw, Examples) {
  const auto en = predicted_law(Family::SUN, 2, Quantity::EN);
  EXPECT_EQ(en.form, ScalingForm::log);
  EXPECT_DOUBLE_EQ(*en.coefficient, 0.5);
  EXPECT_NEAR(*en.offset, std::log(std::sqrt(2 / std::numbers::pi)), 1e-15);

  const auto sop = predicted_law(Family::TL, 3, Quantity::SOP);
  EXPECT_EQ(sop.form, ScalingForm::sqrt);
  EXPECT_NEAR(*sop.coefficient, 1.5358, 5e-5);

  const auto u1 = predicted_law(Family::U1, 2, Quantity::EN);
  EXPECT_EQ(u1.form, ScalingForm::constant);
  EXPECT_EQ(*u1.coefficient, 0.0);
  EXPECT_EQ(*u1.offset, 0.0);
}

TEST(PredictedLaw, BracketsAndBounds) {
  for (int N = 3; N <= 5; ++N) {
    const auto r3 = predicted_law(Family::SUN, N, Quantity::R3);
    EXPECT_EQ(r3.kind, LawKind::bracket);
    EXPECT_DOUBLE_EQ(r3.bracket->first, N * (N - 1) / 2.0);
    EXPECT_DOUBLE_EQ(r3.bracket->second, (N * N - 1) / 2.0);
    EXPECT_FALSE(r3.offset.has_value());
  }
  EXPECT_NEAR(*predicted_law(Family::TL, 3, Quantity::Rtilde, 4).coefficient, 0.75, 1e-15);
  EXPECT_EQ(predicted_law(Family::TL, 3, Quantity::Rtilde, 0.5).form, ScalingForm::linear);
  EXPECT_NEAR(*predicted_law(Family::U1, 2, Quantity::SOP).offset,
              0.5 + std::log(std::sqrt(2 * std::numbers::pi) / 4), 1e-15);
  EXPECT_FALSE(predicted_law(Family::PF, 3, Quantity::SOP).coefficient.has_value());
  EXPECT_EQ(*predicted_law(Family::TL, 2, Quantity::R3).coefficient, 1.0);
  try {
    predicted_law(Family::SUN, 2, Quantity::Rtilde, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unsupported);
  }
}

TEST(TlLinearCoefficient, Examples) {
  EXPECT_NEAR(tl_linear_coefficient(3, 1.0), 0.1116, 5e-4);
  EXPECT_LT(tl_linear_coefficient(3, 1.9999), 1e-3);
  EXPECT_GT(tl_linear_coefficient(3, 1.5), tl_linear_coefficient(3, 1.9));
  EXPECT_THROW(tl_linear_coefficient(3, 2.0), Error);
  EXPECT_THROW(tl_linear_coefficient(2, 1.0), Error);
}

TEST(TlLinearCoefficient, StationaryPointIsNumericalMaximum) {
  for (int N : {3, 4, 5, 8})
    for (long double n : {0.25L, 0.5L, 1.0L, 1.5L, 1.9L}) {
      const auto neg = [&](long double a) { return -tl_linear_objective(N, n, a); };
      const auto [a, v] = boost::math::tools::brent_find_minima(neg, 1e-12L, 0.25L - 1e-12L, 60);
      EXPECT_NEAR(static_cast<double>(a), static_cast<double>(tl_optimal_a(N, n)), 1e-8) << N << " " << static_cast<double>(n);
      EXPECT_NEAR(static_cast<double>(-v), tl_linear_coefficient(N, static_cast<double>(n)), 1e-12);
    }
}

TEST(BinomialAsymptote, Examples) {
  const auto a = binomial_asymptote(512, 0);
  const long double exact = log_of(binomial(1024, 512));
  EXPECT_LE(std::fabs(static_cast<double>((a.value.log_value() - exact) / exact)), 1e-2);
  EXPECT_TRUE(a.in_regime);
  for (int k = -22; k <= 22; ++k) {
    const long double e = log_of(binomial(1024, 512 + k));
    EXPECT_LE(std::fabs(static_cast<double>((binomial_asymptote(512, k).value.log_value() - e) / e)), 1e-2);
  }
  EXPECT_NEAR(static_cast<double>(binomial_asymptote(512, 0).value.log_value() -
                                  binomial_asymptote(512, 16).value.log_value()),
              0.5, 1e-15);
  const auto small = binomial_asymptote(8, 0);
  EXPECT_FALSE(small.in_regime);
  EXPECT_GT(small.value.value(), 0);
}

std::vector<std::pair<double, double>> scan(Family f, int N, Quantity q, std::int64_t lo, std::int64_t hi) {
  std::vector<std::pair<double, double>> pts;
  for (std::int64_t L = lo; L <= hi; L *= 2) {
    const auto rep = evaluate(CommutantSpec::half_chain(f, N, L), Mode::log_domain,
                              {q == Quantity::EN, {3}, {}, q == Quantity::SOP});
    pts.emplace_back(static_cast<double>(L), q == Quantity::EN ? *rep.E_N : q == Quantity::R3 ? rep.R.at(3) : *rep.S_OP);
  }
  return pts;
}

TEST(FitScaling, Su2NegativitySlope) {
  const auto fit = fit_scaling(scan(Family::SUN, 2, Quantity::EN, 64, 4096), ScalingForm::log);
  EXPECT_NEAR(fit.slope, 0.5, 0.02);
  EXPECT_EQ(fit.points, 7u);
  EXPECT_EQ(fit.window.first, 64);
  EXPECT_GE(fit.residual, 0);
}

TEST(FitScaling, ConstantSeries) {
  std::vector<std::pair<double, double>> pts;
  for (int k = 6; k <= 12; ++k) pts.emplace_back(std::ldexp(1.0, k), 0.7);
  const auto fit = fit_scaling(pts, ScalingForm::log);
  EXPECT_NEAR(fit.slope, 0.0, 1e-12);
  EXPECT_NEAR(fit.intercept, 0.7, 1e-12);
  EXPECT_NEAR(fit_scaling(pts, ScalingForm::constant).intercept, 0.7, 1e-12);
}

TEST(FitScaling, TlVolumeLaw) {
  const auto fit = fit_scaling(scan(Family::TL, 3, Quantity::EN, 64, 4096), ScalingForm::linear);
  EXPECT_GE(fit.slope, 0.1116 - 0.005);
}

TEST(FitScaling, RecoversSyntheticForms) {
  std::vector<std::pair<double, double>> pts;
  for (int k = 4; k <= 14; ++k) {
    const double L = std::ldexp(1.0, k);
    pts.emplace_back(L, 1.25 * std::sqrt(L) - 0.3 * std::log(L) + 2.0);
  }
  const auto fit = fit_scaling(pts, ScalingForm::sqrt_log, {0});
  EXPECT_NEAR(fit.slope, 1.25, 1e-10);
  EXPECT_NEAR(*fit.log_coefficient, -0.3, 1e-9);
  EXPECT_NEAR(fit.intercept, 2.0, 1e-8);
}

TEST(FitScaling, Errors) {
  std::vector<std::pair<double, double>> pts{{64, 1}, {128, 2}, {256, 3}};
  try {
    fit_scaling(pts, ScalingForm::log);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_few_points);
  }
  pts.emplace_back(32, 0);
  EXPECT_THROW(fit_scaling(pts, ScalingForm::log), Error);
  std::vector<std::pair<double, double>> early{{8, 1}, {16, 2}, {32, 3}, {64, 4}, {128, 5}};
  EXPECT_THROW(fit_scaling(early, ScalingForm::log), Error);
  EXPECT_NO_THROW(fit_scaling(early, ScalingForm::log, {8}));
  EXPECT_EQ(parse_form("sqrt_log"), ScalingForm::sqrt_log);
}

}  // namespace
}  // namespace symstat
