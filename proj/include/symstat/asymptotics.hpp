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

#pragma once

// Predicted large-L laws and least-squares slope fits against them.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "symstat/commutants.hpp"
#include "symstat/error.hpp"
#include "symstat/exactnum.hpp"

namespace symstat {

enum class ScalingForm { constant, log, sqrt, linear, sqrt_log };
enum class LawKind { equality, lower_bound, upper_bound, bracket, growth_only };
enum class Quantity { EN, R3, SOP, Rtilde };

inline std::string form_name(ScalingForm f) {
  switch (f) {
    case ScalingForm::constant: return "const";
    case ScalingForm::log: return "log";
    case ScalingForm::sqrt: return "sqrt";
    case ScalingForm::linear: return "linear";
    case ScalingForm::sqrt_log: return "sqrt_log";
  }
  return "?";
}

inline ScalingForm parse_form(const std::string& s) {
  if (s == "const") return ScalingForm::constant;
  if (s == "log") return ScalingForm::log;
  if (s == "sqrt") return ScalingForm::sqrt;
  if (s == "linear") return ScalingForm::linear;
  if (s == "sqrt_log") return ScalingForm::sqrt_log;
  throw Error(Errc::config_error, "unknown fit form '" + s + "'");
}

inline std::string kind_name(LawKind k) {
  switch (k) {
    case LawKind::equality: return "equality";
    case LawKind::lower_bound: return "lower_bound";
    case LawKind::upper_bound: return "upper_bound";
    case LawKind::bracket: return "bracket";
    case LawKind::growth_only: return "growth_only";
  }
  return "?";
}

struct ScalingLaw {
  ScalingForm form = ScalingForm::constant;
  LawKind kind = LawKind::equality;
  /// Leading coefficient; for brackets the lower end. Absent only for
  /// growth_only laws.
  std::optional<double> coefficient;
  std::optional<double> offset;
  std::optional<std::pair<double, double>> bracket;
  std::string validity;
};

// ---------------------------------------------------------------------------
// TL volume-law coefficient

/// Objective c(a) whose maximum over a in (0, 1/4) is the linear coefficient
/// of the generalized Renyi negativity of order n < 2 for TL(N).
inline long double tl_linear_objective(int N, long double n, long double a) {
  const long double lq = std::log(q_from_dimension(N));
  return (-(0.5L + 2 * a) * std::log(0.25L + a) - (0.5L - 2 * a) * std::log(0.25L - a) +
          2 * (2 - n) * a * lq - 2 * kLn2) /
         (2 - n);
}

inline long double tl_optimal_a(int N, long double n) {
  const long double x = std::pow(q_from_dimension(N), 2 - n);
  return 0.25L * (x - 1) / (x + 1);
}

inline double tl_linear_coefficient(int N, double n) {
  if (N < 3) throw Error(Errc::domain_error, "needs N >= 3 (q > 1)");
  if (!(n > 0) || n >= 2) throw Error(Errc::domain_error, "needs 0 < n < 2");
  return static_cast<double>(tl_linear_objective(N, n, tl_optimal_a(N, n)));
}

// ---------------------------------------------------------------------------
// Predicted laws

inline void check_n_for_law(double n) {
  if (!(n > 0) || std::fabs(n - 2) < 1e-6) throw Error(Errc::domain_error, "order n must be positive and not 2");
}

inline ScalingLaw predicted_law(Family family, int N, Quantity q, double n = 0) {
  const auto unsupported = [&]() -> ScalingLaw {
    throw Error(Errc::unsupported, "no law for this family and quantity");
  };
  const double pi = std::numbers::pi;
  if (q == Quantity::Rtilde) check_n_for_law(n);
  const bool su2 = (family == Family::SUN || family == Family::TL) && N == 2;
  if (family == Family::U1 || family == Family::PF) {
    if (q != Quantity::SOP) return {ScalingForm::constant, LawKind::equality, 0.0, 0.0, {}, "all L"};
    if (family == Family::U1)
      return {ScalingForm::log, LawKind::equality, 0.5, 0.5 + std::log(std::sqrt(2 * pi) / 4), {},
              "L -> infinity"};
    return {ScalingForm::sqrt, LawKind::growth_only, std::nullopt, std::nullopt, {},
            "coefficient not known in closed form"};
  }
  if (su2) {
    switch (q) {
      case Quantity::EN:
        return {ScalingForm::log, LawKind::equality, 0.5, std::log(std::sqrt(2 / pi)), {}, "L -> infinity"};
      case Quantity::R3:
        return {ScalingForm::log, LawKind::equality, 1.0, -2 * std::log(2.0), {}, "L -> infinity"};
      case Quantity::SOP:
        return {ScalingForm::log, LawKind::equality, 1.5, std::nullopt, {}, "L -> infinity"};
      case Quantity::Rtilde: return unsupported();
    }
  }
  if (family == Family::SUN) {
    const double a = N * (N - 1) / 2.0, b = (N * N - 1) / 2.0;
    switch (q) {
      case Quantity::EN:
        return {ScalingForm::log, LawKind::upper_bound, N * (N - 1.0), std::nullopt, {}, "upper bound"};
      case Quantity::R3:
        return {ScalingForm::log, LawKind::bracket, a, std::nullopt, std::make_pair(a, b),
                "approaches the lower end"};
      case Quantity::SOP:
        return {ScalingForm::log, LawKind::bracket, b, std::nullopt, std::make_pair(b, 2 * b), "bracket"};
      case Quantity::Rtilde: return unsupported();
    }
  }
  // TL(N), N >= 3
  switch (q) {
    case Quantity::EN:
      return {ScalingForm::linear, LawKind::lower_bound, tl_linear_coefficient(N, 1.0), std::nullopt, {},
              "lower bound"};
    case Quantity::R3:
      return {ScalingForm::log, LawKind::upper_bound, 1.5, std::nullopt, {}, "upper bound"};
    case Quantity::SOP:
      return {ScalingForm::sqrt, LawKind::equality,
              static_cast<double>(std::sqrt(8 / std::numbers::pi_v<long double>) *
                                  std::log(q_from_dimension(N))),
              std::nullopt, {}, "plus O(log L)"};
    case Quantity::Rtilde:
      if (n < 2)
        return {ScalingForm::linear, LawKind::lower_bound, tl_linear_coefficient(N, n), std::nullopt, {},
                "lower bound"};
      return {ScalingForm::log, LawKind::upper_bound, 3.0 / (2.0 * (n - 2)), std::nullopt, {}, "upper bound"};
  }
  return unsupported();
}

// ---------------------------------------------------------------------------
// Binomial asymptote

struct BinomialAsymptote {
  LogReal value;
  bool in_regime = true;
};

/// log of 4^n / sqrt(pi n) * exp(-k^2 / n), the Gaussian form of C(2n, n+k).
inline BinomialAsymptote binomial_asymptote(std::int64_t n, std::int64_t k_offset) {
  if (n < 1) throw Error(Errc::domain_error, "needs n >= 1");
  const long double nn = static_cast<long double>(n), k = static_cast<long double>(k_offset);
  const long double l = 2 * nn * kLn2 - 0.5L * std::log(std::numbers::pi_v<long double> * nn) - k * k / nn;
  return {LogReal::from_log(l), n >= 64};
}

// ---------------------------------------------------------------------------
// Fits

struct FitResult {
  double slope = 0;
  double intercept = 0;
  /// Coefficient of log L in the sqrt_log form.
  std::optional<double> log_coefficient;
  double residual = 0;
  std::pair<double, double> window{0, 0};
  std::size_t points = 0;
};

struct FitOptions {
  double min_L = 64;
  double max_L = std::numeric_limits<double>::infinity();
};

/// Least squares of value against {1, f(L)} (or {1, log L, sqrt L}).
inline FitResult fit_scaling(const std::vector<std::pair<double, double>>& points, ScalingForm form,
                             const FitOptions& opt = {}) {
  std::vector<std::pair<double, double>> used;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i && !(points[i].first > points[i - 1].first))
      throw Error(Errc::domain_error, "L must be strictly increasing");
    if (points[i].first >= opt.min_L && points[i].first <= opt.max_L) used.push_back(points[i]);
  }
  if (used.size() < 4) throw Error(Errc::too_few_points, "need at least 4 points in the window");
  const int cols = form == ScalingForm::constant ? 1 : form == ScalingForm::sqrt_log ? 3 : 2;
  Eigen::MatrixXd X(used.size(), cols);
  Eigen::VectorXd y(used.size());
  for (std::size_t i = 0; i < used.size(); ++i) {
    const double L = used[i].first;
    X(i, 0) = 1.0;
    switch (form) {
      case ScalingForm::constant: break;
      case ScalingForm::log: X(i, 1) = std::log(L); break;
      case ScalingForm::sqrt: X(i, 1) = std::sqrt(L); break;
      case ScalingForm::linear: X(i, 1) = L; break;
      case ScalingForm::sqrt_log:
        X(i, 1) = std::sqrt(L);
        X(i, 2) = std::log(L);
        break;
    }
    y(i) = used[i].second;
  }
  const Eigen::VectorXd beta = X.colPivHouseholderQr().solve(y);
  FitResult r;
  r.intercept = beta(0);
  r.slope = cols > 1 ? beta(1) : 0.0;
  if (cols == 3) r.log_coefficient = beta(2);
  r.residual = std::sqrt((X * beta - y).squaredNorm() / static_cast<double>(used.size()));
  r.window = {used.front().first, used.back().first};
  r.points = used.size();
  return r;
}

}  // namespace symstat
