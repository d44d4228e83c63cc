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

// Closed-form entanglement of the singlet-sector stationary state
// rho = Pi^0 / D_0, evaluated from the sector list in a single pass.

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "symstat/commutants.hpp"
#include "symstat/error.hpp"
#include "symstat/exactnum.hpp"

namespace symstat {

inline constexpr double kNAtTwoTolerance = 1e-6;

inline void check_tilde_order(double n) {
  if (!(n > 0)) throw Error(Errc::domain_error, "generalized Renyi order must be positive");
  if (std::fabs(n - 2.0) < kNAtTwoTolerance) throw Error(Errc::n_at_two, "order n = 2 is excluded");
}

/// Which quantities one pass should accumulate.
struct EntanglementRequest {
  bool log_negativity = true;
  std::set<int> renyi{3};
  std::set<double> renyi_tilde{};
  bool ose = true;
};

/// Streaming accumulator over IrrepRecords. Integer-order sums are exact
/// rationals in exact mode; real-order sums are always log-domain.
class SectorAccumulator {
 public:
  SectorAccumulator(Mode mode, EntanglementRequest request)
      : mode_(mode), req_(std::move(request)) {
    for (int n : req_.renyi) {
      if (n < 1) throw Error(Errc::domain_error, "Renyi order must be >= 1");
      odd_orders_.insert(n % 2 ? n : n - 1);
    }
    for (double n : req_.renyi_tilde) check_tilde_order(n);
  }

  void add(const IrrepRecord& r) {
    ++count_;
    if (r.d.log() != 0.0L) unit_degeneracy_ = false;
    if (mode_ == Mode::exact) add_exact(r);
    else add_log(r);
    const long double lw = r.pattern_count.log() + r.D_A.log() + r.D_B.log();
    const long double ld = r.d.log();
    for (double n : req_.renyi_tilde)
      tilde_[n].add_log(lw - static_cast<long double>(n - 2.0) * ld);
  }

  std::size_t count() const noexcept { return count_; }

  /// Nats. Requires the singlet dimension of the same spec.
  long double log_negativity(const SectorCount& D0) const {
    require_nonempty();
    if (unit_degeneracy_) return 0.0L;
    if (mode_ == Mode::exact) return log_of(BigRational(en_exact_, *D0.exact));
    return en_log_.log() - D0.log();
  }

  long double renyi_negativity(int n, const SectorCount& D0) const {
    require_nonempty();
    if (n < 1) throw Error(Errc::domain_error, "Renyi order must be >= 1");
    const int odd = n % 2 ? n : n - 1;
    if (odd == 1 || unit_degeneracy_) return 0.0L;
    const auto it = odd_exact_.find(odd);
    if (mode_ == Mode::exact && it != odd_exact_.end())
      return -log_of(BigRational(it->second / *D0.exact));
    const auto jt = odd_log_.find(odd);
    if (jt == odd_log_.end()) throw Error(Errc::domain_error, "order was not requested");
    return -(jt->second.log() - D0.log());
  }

  long double generalized_renyi(double n, const SectorCount& D0) const {
    require_nonempty();
    check_tilde_order(n);
    const auto it = tilde_.find(n);
    if (it == tilde_.end()) throw Error(Errc::domain_error, "order was not requested");
    if (unit_degeneracy_) return 0.0L;
    return (it->second.log() - D0.log()) / static_cast<long double>(2.0 - n);
  }

  long double operator_space_entanglement(const SectorCount& D0) const {
    require_nonempty();
    if (mode_ == Mode::exact) {
      // Every term -p log(w / (D0 d^2)) is non-negative: no cancellation.
      long double s = 0.0L;
      for (const auto& t : ose_exact_) s += t;
      return s;
    }
    long double s = 0.0L;
    for (const auto& [lp, lr] : ose_log_) s -= std::exp(lp - D0.log()) * (lr - D0.log());
    return s;
  }

  void set_singlet(const SectorCount& D0) { D0_ = D0; }

 private:
  void require_nonempty() const {
    if (count_ == 0) throw Error(Errc::empty_sector_list, "no sectors");
  }

  void add_exact(const IrrepRecord& r) {
    const BigInt& c = *r.pattern_count.exact;
    const BigInt& d = *r.d.exact;
    const BigInt w = *r.D_A.exact * *r.D_B.exact;
    const BigInt cw = c * w;
    if (req_.log_negativity) en_exact_ += cw * d;
    BigInt dpow = 1;
    int have = 0;
    for (int odd : odd_orders_) {
      if (odd == 1) continue;
      while (have < odd - 1) {
        dpow *= d;
        ++have;
      }
      odd_exact_[odd] += BigRational(cw, dpow);
    }
    if (req_.ose) {
      if (!D0_ || !D0_->exact) throw Error(Errc::domain_error, "singlet dimension not set");
      const BigRational p(cw, *D0_->exact);
      const BigRational ratio(w, *D0_->exact * d * d);
      ose_exact_.push_back(-to_long_double(p) * log_of(ratio));
    }
  }

  void add_log(const IrrepRecord& r) {
    const long double lc = r.pattern_count.log();
    const long double lw = r.D_A.log() + r.D_B.log();
    const long double ld = r.d.log();
    if (req_.log_negativity) en_log_.add_log(lc + lw + ld);
    for (int odd : odd_orders_)
      if (odd > 1) odd_log_[odd].add_log(lc + lw - static_cast<long double>(odd - 1) * ld);
    if (req_.ose) ose_log_.emplace_back(lc + lw, lw - 2.0L * ld);
  }

  Mode mode_;
  EntanglementRequest req_;
  std::set<int> odd_orders_;
  std::size_t count_ = 0;
  bool unit_degeneracy_ = true;
  std::optional<SectorCount> D0_;

  BigInt en_exact_ = 0;
  std::map<int, BigRational> odd_exact_;
  std::vector<long double> ose_exact_;

  LogSumAccumulator en_log_;
  std::map<int, LogSumAccumulator> odd_log_;
  std::vector<std::pair<long double, long double>> ose_log_;
  std::map<double, LogSumAccumulator> tilde_;
};

// ---------------------------------------------------------------------------
// Free-function forms over a materialized list

namespace detail {

inline Mode list_mode(const std::vector<IrrepRecord>& s, const SectorCount& D0) {
  if (s.empty()) throw Error(Errc::empty_sector_list, "no sectors");
  return D0.exact && s.front().d.exact && s.front().D_A.exact ? Mode::exact : Mode::log_domain;
}

inline SectorAccumulator accumulate(const std::vector<IrrepRecord>& s, const SectorCount& D0,
                                    EntanglementRequest req) {
  SectorAccumulator acc(list_mode(s, D0), std::move(req));
  acc.set_singlet(D0);
  for (const auto& r : s) acc.add(r);
  return acc;
}

}  // namespace detail

inline double log_negativity(const std::vector<IrrepRecord>& sectors, const SectorCount& D0) {
  return static_cast<double>(
      detail::accumulate(sectors, D0, {true, {}, {}, false}).log_negativity(D0));
}

inline double renyi_negativity(const std::vector<IrrepRecord>& sectors, const SectorCount& D0,
                               int n) {
  return static_cast<double>(
      detail::accumulate(sectors, D0, {false, {n}, {}, false}).renyi_negativity(n, D0));
}

inline double generalized_renyi(const std::vector<IrrepRecord>& sectors, const SectorCount& D0,
                                double n) {
  check_tilde_order(n);
  return static_cast<double>(
      detail::accumulate(sectors, D0, {false, {}, {n}, false}).generalized_renyi(n, D0));
}

inline double operator_space_entanglement(const std::vector<IrrepRecord>& sectors,
                                          const SectorCount& D0) {
  return static_cast<double>(
      detail::accumulate(sectors, D0, {false, {}, {}, true}).operator_space_entanglement(D0));
}

// ---------------------------------------------------------------------------
// Bounds

struct RTildeBound {
  double value = 0;           // the bound used
  double commutant_form = 0;  // from log dim C_min
  double max_d_form = 0;      // from log max d (n > 2 only)
  bool max_d_tighter = false;
};

struct Bounds {
  double E_N = 0;
  double S_OP = 0;
  std::map<double, RTildeBound> R_tilde;
};

inline Bounds upper_bounds(const CommutantSpec& spec, const std::set<double>& tilde_orders = {}) {
  const double log_dim = static_cast<double>(commutant_dimension(spec, Side::min_side).log_value());
  Bounds b{log_dim, log_dim, {}};
  bool have_max_d = false;
  double log_max_d = 0;
  for (double n : tilde_orders) {
    check_tilde_order(n);
    RTildeBound r;
    if (n < 2) {
      r.commutant_form = r.value = log_dim / (2.0 - n);
    } else {
      if (!have_max_d) {
        log_max_d = static_cast<double>(log_max_degeneracy(spec, Side::min_side));
        have_max_d = true;
      }
      r.commutant_form = 0.5 * log_dim;
      r.max_d_form = log_max_d;
      r.max_d_tighter = log_max_d < r.commutant_form;
      r.value = std::min(r.commutant_form, r.max_d_form);
    }
    b.R_tilde[n] = r;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Report

struct EntanglementReport {
  CommutantSpec spec;
  Mode mode = Mode::exact;
  std::size_t sector_count = 0;
  double log_D0 = 0;
  std::optional<double> E_N;
  std::map<int, double> R;
  std::map<double, double> R_tilde;
  std::optional<double> S_OP;
  LogReal dim_C_min;
  Bounds bounds;
};

/// One streaming pass over the sectors of `spec`.
inline EntanglementReport evaluate(const CommutantSpec& spec, Mode mode,
                                   const EntanglementRequest& req = {}) {
  check_admissible(spec);
  EntanglementReport rep;
  rep.spec = spec;
  rep.mode = mode;
  const SectorCount D0 = mode == Mode::exact ? SectorCount::of(singlet_dimension(spec))
                                             : SectorCount::of_log(log_singlet_dimension(spec));
  SectorAccumulator acc(mode, req);
  acc.set_singlet(D0);
  for_each_sector(spec, mode, [&](const IrrepRecord& r) { acc.add(r); });
  rep.sector_count = acc.count();
  rep.log_D0 = static_cast<double>(D0.log());
  if (req.log_negativity) rep.E_N = static_cast<double>(acc.log_negativity(D0));
  for (int n : req.renyi) rep.R[n] = static_cast<double>(acc.renyi_negativity(n, D0));
  for (double n : req.renyi_tilde)
    rep.R_tilde[n] = static_cast<double>(acc.generalized_renyi(n, D0));
  if (req.ose) rep.S_OP = static_cast<double>(acc.operator_space_entanglement(D0));
  rep.dim_C_min = commutant_dimension(spec, Side::min_side);
  rep.bounds = upper_bounds(spec, req.renyi_tilde);
  return rep;
}

// ---------------------------------------------------------------------------
// SU(N) half-chain R_3 at large L

/// R_3 for SU(N) with L_A = L_B = L/2 without enumerating partitions.
///
/// With shifted rows l_i of the A partition, the dual rows are a - l_i for
/// a = L/N + N - 1, and D_A D_B / d^2 = (ell!)^2 (prod k!)^2 prod C(a, l_i) / (a!)^N.
/// The sum over distinct l_i in [0, a] with fixed total is a knapsack over
/// values v = a..0 weighted by C(a, v) / 2^a.
inline double sun_half_chain_r3(int N, std::int64_t L) {
  const auto spec = CommutantSpec::half_chain(Family::SUN, N, L);
  check_admissible(spec);
  const std::int64_t a = L / N + N - 1;
  const std::int64_t target = (L + static_cast<std::int64_t>(N) * (N - 1)) / 2;
  const long double log_half_a = static_cast<long double>(a) * kLn2;
  // F[k][s]: weight of k chosen values summing to s.
  std::vector<std::vector<long double>> F(N + 1, std::vector<long double>(target + 1, 0.0L));
  F[0][0] = 1.0L;
  for (std::int64_t v = a; v >= 0; --v) {
    const long double p = std::exp(log_binomial(a, v) - log_half_a);
    for (int k = N; k >= 1; --k) {
      auto& row = F[k];
      const auto& prev = F[k - 1];
      for (std::int64_t s = target; s >= v; --s) row[s] += p * prev[s - v];
    }
  }
  const long double S = F[N][target];
  long double log_sum = std::log(S) + 2.0L * log_factorial(L / 2) -
                        static_cast<long double>(N) * log_factorial(a) +
                        static_cast<long double>(N) * log_half_a;
  for (int k = 1; k < N; ++k) log_sum += 2.0L * log_factorial(k);
  return static_cast<double>(-(log_sum - log_singlet_dimension(spec)));
}

}  // namespace symstat
