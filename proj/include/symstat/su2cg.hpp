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

// Exact SU(2) Clebsch-Gordan coefficients and the negativity of SU(2)
// stationary states that mix several total-spin sectors at m_tot = 0.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <thread>
#include <vector>

#include "symstat/commutants.hpp"
#include "symstat/error.hpp"
#include "symstat/exactnum.hpp"

namespace symstat {

/// coefficient * sqrt(radicand), radicand square-free.
struct Surd {
  BigRational coefficient = 0;
  BigInt radicand = 1;

  long double value() const {
    return to_long_double(coefficient) * std::sqrt(radicand.convert_to<long double>());
  }
  bool is_zero() const { return coefficient == 0; }
  friend bool operator==(const Surd& a, const Surd& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.coefficient == b.coefficient && a.radicand == b.radicand;
  }
  friend Surd operator*(const Surd& a, const Surd& b) {
    const BigInt g = boost::multiprecision::gcd(a.radicand, b.radicand);
    return {a.coefficient * b.coefficient * BigRational(g), (a.radicand / g) * (b.radicand / g)};
  }
};

/// Exact sum of surds, grouped by radicand.
class SurdSum {
 public:
  void add(const Surd& s) {
    if (s.is_zero()) return;
    auto& c = terms_[s.radicand];
    c += s.coefficient;
    if (c == 0) terms_.erase(s.radicand);
  }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational(const BigRational& r) const {
    if (r == 0) return terms_.empty();
    return terms_.size() == 1 && terms_.begin()->first == 1 && terms_.begin()->second == r;
  }

 private:
  std::map<BigInt, BigRational> terms_;
};

namespace detail {

// Prime exponents of a rational built from factorials; index = prime.
class PrimeExponents {
 public:
  explicit PrimeExponents(std::int64_t max_arg) : exp_(std::max<std::int64_t>(max_arg, 2) + 1, 0) {}

  void factorial(std::int64_t n, int sign) {
    for (std::int64_t p = 2; p <= n; ++p) {
      if (!is_prime(p)) continue;
      for (std::int64_t pk = p; pk <= n; pk *= p) exp_[p] += sign * (n / pk);
    }
  }
  void integer(std::int64_t n, int sign) {
    for (std::int64_t p = 2; p * p <= n; ++p)
      while (n % p == 0) {
        exp_[p] += sign;
        n /= p;
      }
    if (n > 1) exp_[n] += sign;
  }
  /// sqrt of the represented rational as an exact surd.
  Surd sqrt() const {
    BigInt num = 1, den = 1, rad = 1;
    for (std::size_t p = 2; p < exp_.size(); ++p) {
      long e = exp_[p];
      if (e == 0) continue;
      if (e % 2) {
        rad *= p;
        e -= 1;  // e odd: p^e = p^(e-1) * p, e-1 even (also for e < 0)
      }
      const auto half = static_cast<unsigned>(std::labs(e) / 2);
      if (e > 0) num *= boost::multiprecision::pow(BigInt(p), half);
      else den *= boost::multiprecision::pow(BigInt(p), half);
    }
    return {BigRational(num, den), rad};
  }

 private:
  static bool is_prime(std::int64_t n) {
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
  std::vector<long> exp_;
};

}  // namespace detail

/// Spin given as twice its value.
inline std::int64_t twice_spin(double s) {
  const double t = 2 * s;
  if (!(t >= 0) || std::fabs(t - std::round(t)) > 1e-12)
    throw Error(Errc::invalid_spin, "spin must be a non-negative half-integer");
  return static_cast<std::int64_t>(std::llround(t));
}

inline std::int64_t twice_projection(double m) {
  const double t = 2 * m;
  if (!std::isfinite(t) || std::fabs(t - std::round(t)) > 1e-12)
    throw Error(Errc::invalid_spin, "projection must be a half-integer");
  return static_cast<std::int64_t>(std::llround(t));
}

/// <j1 m1; j2 m2 | J M> with all arguments doubled; Condon-Shortley phase,
/// Racah's single-sum formula. Zero when selection rules fail.
inline Surd clebsch_gordan(std::int64_t tj1, std::int64_t tm1, std::int64_t tj2, std::int64_t tm2,
                           std::int64_t tJ, std::int64_t tM) {
  if (tj1 < 0 || tj2 < 0 || tJ < 0) throw Error(Errc::invalid_spin, "negative spin");
  if (tm1 + tm2 != tM) return {};
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tM) > tJ) return {};
  if ((tj1 + tm1) % 2 || (tj2 + tm2) % 2 || (tJ + tM) % 2) return {};
  if ((tj1 + tj2 + tJ) % 2) return {};
  if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2) return {};

  const std::int64_t a = (tj1 + tj2 - tJ) / 2, b = (tj1 - tj2 + tJ) / 2, c = (-tj1 + tj2 + tJ) / 2;
  const std::int64_t top = (tj1 + tj2 + tJ) / 2 + 1;
  const std::int64_t j1p = (tj1 + tm1) / 2, j1m = (tj1 - tm1) / 2;
  const std::int64_t j2p = (tj2 + tm2) / 2, j2m = (tj2 - tm2) / 2;
  const std::int64_t Jp = (tJ + tM) / 2, Jm = (tJ - tM) / 2;

  detail::PrimeExponents r(std::max<std::int64_t>(top, tJ + 1));
  r.integer(tJ + 1, +1);
  for (auto n : {a, b, c, j1p, j1m, j2p, j2m, Jp, Jm}) r.factorial(n, +1);
  r.factorial(top, -1);

  // k ranges where every factorial argument is non-negative.
  const std::int64_t x = (tJ - tj2 + tm1) / 2;  // J - j2 + m1
  const std::int64_t y = (tJ - tj1 - tm2) / 2;  // J - j1 - m2
  const std::int64_t kmin = std::max<std::int64_t>({0, -x, -y});
  const std::int64_t kmax = std::min({a, j1m, j2p});
  BigRational sum = 0;
  for (std::int64_t k = kmin; k <= kmax; ++k) {
    const BigInt den = factorial(k) * factorial(a - k) * factorial(j1m - k) * factorial(j2p - k) *
                       factorial(x + k) * factorial(y + k);
    sum += BigRational(k % 2 ? -1 : 1, den);
  }
  Surd s = r.sqrt();
  s.coefficient *= sum;
  if (s.coefficient == 0) s.radicand = 1;
  return s;
}

/// c_m(lambda_tot; lambda_A, lambda_B) = <lambda_A m; lambda_B -m | lambda_tot 0>.
struct CGQuery {
  double lambda_tot = 0;
  double lambda_A = 0;
  double lambda_B = 0;
  double m = 0;
};

inline Surd cg_coefficient(const CGQuery& q) {
  const auto tJ = twice_spin(q.lambda_tot), ta = twice_spin(q.lambda_A), tb = twice_spin(q.lambda_B);
  const auto tm = twice_projection(q.m);
  return clebsch_gordan(ta, tm, tb, -tm, tJ, 0);
}

// ---------------------------------------------------------------------------
// Negativity with several total-spin sectors

/// Weights keyed by integer lambda_tot.
using SpinWeights = std::map<std::int64_t, double>;

namespace detail {

// c_m for fixed (lambda_A, lambda_B), rows lambda_tot, columns m index.
struct CGTable {
  std::int64_t tmax = 0;  // 2 min(lambda_A, lambda_B)
  std::map<std::int64_t, std::vector<double>> rows;
};

inline const CGTable& cg_table(std::int64_t ta, std::int64_t tb) {
  thread_local std::map<std::pair<std::int64_t, std::int64_t>, CGTable> cache;
  auto it = cache.find({ta, tb});
  if (it != cache.end()) return it->second;
  CGTable t;
  t.tmax = std::min(ta, tb);
  for (std::int64_t tJ = std::abs(ta - tb); tJ <= ta + tb; tJ += 2) {
    std::vector<double> row;
    for (std::int64_t tm = -t.tmax; tm <= t.tmax; tm += 2)
      row.push_back(static_cast<double>(clebsch_gordan(ta, tm, tb, -tm, tJ, 0).value()));
    t.rows[tJ / 2] = std::move(row);
  }
  return cache.emplace(std::make_pair(ta, tb), std::move(t)).first->second;
}

}  // namespace detail

inline void check_weights(std::int64_t L, const SpinWeights& p) {
  double total = 0;
  for (const auto& [lam, w] : p) {
    if (lam < 0 || 2 * lam > L) throw Error(Errc::weight_error, "lambda_tot outside [0, L/2]");
    if (!(w >= 0)) throw Error(Errc::weight_error, "negative weight");
    total += w;
  }
  if (std::fabs(total - 1.0) > 1e-12) throw Error(Errc::weight_error, "weights must sum to 1");
}

/// E_N of rho = sum_J p_J Pi^{J, m_tot=0} / D_J^{(L)}.
///
/// Within a (lambda_A, lambda_B) block the partial transpose has eigenvalues
/// +-|sum_J (p_J / D_J) c_m(J) c_m'(J)|, each D_{lambda_A} D_{lambda_B} times.
inline double negativity_fixed_lambda(std::int64_t L, std::int64_t L_A, const SpinWeights& p) {
  if (L % 2) throw Error(Errc::domain_error, "m_tot = 0 needs even L");
  if (L_A < 1 || L_A >= L) throw Error(Errc::bad_cut, "0 < L_A < L");
  check_weights(L, p);
  const std::int64_t L_B = L - L_A;
  std::map<std::int64_t, double> scaled;
  for (const auto& [lam, w] : p)
    if (w > 0)
      scaled[lam] = w / static_cast<double>(spin_sector_dimension(L, 2 * lam, Mode::log_domain).approx.value());
  long double total = 0;
  for (std::int64_t ta = L_A % 2; ta <= L_A; ta += 2) {
    for (std::int64_t tb = L_B % 2; tb <= L_B; tb += 2) {
      const auto& t = detail::cg_table(ta, tb);
      const std::size_t nm = static_cast<std::size_t>(t.tmax + 1);
      std::vector<std::pair<double, const std::vector<double>*>> active;
      for (const auto& [J, row] : t.rows) {
        const auto it = scaled.find(J);
        if (it != scaled.end()) active.emplace_back(it->second, &row);
      }
      if (active.empty()) continue;
      long double block = 0;
      for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t k = 0; k < nm; ++k) {
          long double v = 0;
          for (const auto& [w, row] : active) v += w * (*row)[i] * (*row)[k];
          block += std::fabs(v);
        }
      const long double dims = spin_sector_dimension(L_A, ta, Mode::log_domain).approx.value() *
                               spin_sector_dimension(L_B, tb, Mode::log_domain).approx.value();
      total += dims * block;
    }
  }
  return static_cast<double>(std::log(total));
}

// ---------------------------------------------------------------------------
// Haar ensemble

struct HaarEnsembleSpec {
  std::int64_t L = 0;
  std::int64_t L_A = 0;  // 0 means L/2
  std::int64_t lambda_max = 0;
  int samples = 100;
  std::uint64_t seed = 0;
};

struct HaarResult {
  double mean = 0;
  double stderr_ = 0;
  int samples = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Sector weights of one Haar draw: p_J = G_J / sum G, G_J ~ Gamma(D_J).
inline SpinWeights haar_weights(const HaarEnsembleSpec& spec, std::uint64_t draw) {
  std::mt19937_64 rng(splitmix64(spec.seed ^ splitmix64(draw + 1)));
  SpinWeights p;
  double total = 0;
  for (std::int64_t J = 0; J <= spec.lambda_max; ++J) {
    const double D = static_cast<double>(spin_sector_dimension(spec.L, 2 * J, Mode::log_domain).approx.value());
    std::gamma_distribution<double> g(D, 1.0);
    p[J] = g(rng);
    total += p[J];
  }
  double acc = 0;
  for (auto& [J, w] : p) {
    w /= total;
    acc += w;
  }
  // Absorb rounding so the weights sum to one within the check tolerance.
  p.rbegin()->second += 1.0 - acc;
  return p;
}

/// Mean and standard error of E_N over Haar draws. Draws run on up to `jobs`
/// threads; each draw has its own stream so the result is independent of jobs.
inline HaarResult haar_average_negativity(const HaarEnsembleSpec& spec, int jobs = 1) {
  if (spec.samples < 1) throw Error(Errc::domain_error, "samples must be >= 1");
  if (spec.L % 2) throw Error(Errc::domain_error, "m_tot = 0 needs even L");
  if (spec.lambda_max < 0 || 2 * spec.lambda_max > spec.L)
    throw Error(Errc::domain_error, "lambda_max must lie in [0, L/2]");
  const std::int64_t LA = spec.L_A ? spec.L_A : spec.L / 2;
  std::vector<double> values(spec.samples);
  if (spec.lambda_max == 0) {
    std::fill(values.begin(), values.end(), negativity_fixed_lambda(spec.L, LA, {{0, 1.0}}));
  } else {
    const int workers = std::max(1, std::min(jobs, spec.samples));
    auto run = [&](int w) {
      for (int i = w; i < spec.samples; i += workers)
        values[i] = negativity_fixed_lambda(spec.L, LA, haar_weights(spec, static_cast<std::uint64_t>(i)));
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
      for (auto& t : pool) t.join();
    }
  }
  long double sum = 0;
  for (double v : values) sum += v;
  const long double mean = sum / spec.samples;
  long double var = 0;
  for (double v : values) var += (v - mean) * (v - mean);
  HaarResult r;
  r.mean = static_cast<double>(mean);
  r.samples = spec.samples;
  r.stderr_ = spec.samples > 1 ? static_cast<double>(std::sqrt(var / (spec.samples - 1) / spec.samples)) : 0.0;
  if (spec.lambda_max == 0) r.stderr_ = 0.0;
  return r;
}

// ---------------------------------------------------------------------------
// Crossings

/// Abscissa where curve_a - curve_b changes sign, by linear interpolation.
inline double crossing_point(const std::vector<double>& grid, const std::vector<double>& curve_a,
                             const std::vector<double>& curve_b) {
  if (grid.size() != curve_a.size() || grid.size() != curve_b.size() || grid.size() < 2)
    throw Error(Errc::domain_error, "curves must share a grid of at least two points");
  std::vector<double> found;
  std::ptrdiff_t last = -1;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = curve_a[i] - curve_b[i];
    if (d == 0) continue;
    if (last >= 0) {
      const double dl = curve_a[last] - curve_b[last];
      if ((dl < 0) != (d < 0)) {
        if (static_cast<std::size_t>(last) + 1 == i)
          found.push_back(grid[last] + (grid[i] - grid[last]) * dl / (dl - d));
        else
          found.push_back(0.5 * (grid[last + 1] + grid[i - 1]));
      }
    }
    last = static_cast<std::ptrdiff_t>(i);
  }
  if (found.empty()) throw Error(Errc::no_crossing, "curves do not cross");
  if (found.size() > 1) throw Error(Errc::multiple_crossings, std::to_string(found.size()) + " crossings");
  return found.front();
}

/// Piecewise-linear resampling of (x, y) onto `grid` (inside the x range).
inline std::vector<double> resample(const std::vector<double>& x, const std::vector<double>& y,
                                    const std::vector<double>& grid) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double g : grid) {
    if (g < x.front() || g > x.back()) throw Error(Errc::domain_error, "grid point outside the curve");
    const auto it = std::upper_bound(x.begin(), x.end(), g);
    if (it == x.end()) {
      out.push_back(y.back());
      continue;
    }
    const std::size_t i = static_cast<std::size_t>(it - x.begin());
    const double t = (g - x[i - 1]) / (x[i] - x[i - 1]);
    out.push_back(y[i - 1] + t * (y[i] - y[i - 1]));
  }
  return out;
}

}  // namespace symstat
