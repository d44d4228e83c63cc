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

// Sector data for the four commutant families: for every irrep lambda that
// appears on both halves of a bipartition, its degeneracy d and the bond
// algebra dimensions D_A, D_B.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symstat/error.hpp"
#include "symstat/exactnum.hpp"

namespace symstat {

enum class Family { U1, SUN, PF, TL };

inline std::string family_name(Family f, int N) {
  switch (f) {
    case Family::U1: return "u1";
    case Family::SUN: return N == 2 ? "su2" : "sun";
    case Family::PF: return "pf";
    case Family::TL: return "tl";
  }
  return "?";
}

/// Accepts u1, su2, sun (or su-n), pf, tl. su2 pins N = 2.
inline Family parse_family(const std::string& name, int* N = nullptr) {
  if (name == "u1") {
    if (N) *N = 2;
    return Family::U1;
  }
  if (name == "su2") {
    if (N) *N = 2;
    return Family::SUN;
  }
  if (name == "sun" || name == "su-n") return Family::SUN;
  if (name == "pf") return Family::PF;
  if (name == "tl") return Family::TL;
  throw Error(Errc::config_error, "unknown family '" + name + "'");
}

enum class Mode { exact, log_domain };
enum class Backend { exact, log_domain, automatic };

inline constexpr std::int64_t kExactThreshold = 512;

inline Mode resolve_backend(Backend b, std::int64_t L, std::int64_t threshold = kExactThreshold) {
  if (b == Backend::exact) return Mode::exact;
  if (b == Backend::log_domain) return Mode::log_domain;
  return L <= threshold ? Mode::exact : Mode::log_domain;
}

inline std::string mode_name(Mode m) { return m == Mode::exact ? "exact" : "log_domain"; }

struct CommutantSpec {
  Family family = Family::SUN;
  int N = 2;
  std::int64_t L = 0;
  std::int64_t L_A = 0;
  std::int64_t L_B = 0;

  static CommutantSpec half_chain(Family f, int N, std::int64_t L) {
    return {f, f == Family::U1 ? 2 : N, L, L / 2, L - L / 2};
  }
  static CommutantSpec cut(Family f, int N, std::int64_t L, std::int64_t L_A) {
    return {f, f == Family::U1 ? 2 : N, L, L_A, L - L_A};
  }
  std::int64_t L_min() const { return std::min(L_A, L_B); }
};

/// Throws Inadmissible with the violated rule.
inline void check_admissible(const CommutantSpec& s) {
  auto fail = [&](const std::string& why) { throw Error(Errc::inadmissible, why); };
  if (s.N < 2) fail("local dimension N must be >= 2");
  if (s.family == Family::U1 && s.N != 2) fail("U1 is defined for N = 2");
  if (s.L_A + s.L_B != s.L) fail("L_A + L_B must equal L");
  if (s.L_A < 1 || s.L_B < 1) fail("both subsystems must be non-empty");
  switch (s.family) {
    case Family::U1:
      if (s.L % 2) fail("U1 requires even L for the M_tot = 0 sector");
      break;
    case Family::SUN:
      if (s.L % s.N || s.L_A % s.N || s.L_B % s.N)
        fail("SU(" + std::to_string(s.N) + ") requires L, L_A, L_B divisible by " +
             std::to_string(s.N));
      break;
    case Family::PF:
    case Family::TL:
      if (s.L % 2 || s.L_A % 2 || s.L_B % 2)
        fail(family_name(s.family, s.N) + " requires even L, L_A and L_B");
      break;
  }
}

// ---------------------------------------------------------------------------
// Records

/// Twice the magnetization of subsystem A.
struct MagnetizationLabel {
  std::int64_t twice_m = 0;
};
/// Twice the spin lambda (SU(2) and TL).
struct SpinLabel {
  std::int64_t twice_lambda = 0;
};
/// Young diagram on A together with its dual on B.
struct PartitionLabel {
  std::vector<std::int64_t> parts;
  std::vector<std::int64_t> dual;
};
/// Length of a dot pattern; one record stands for pattern_count patterns.
struct DotLabel {
  std::int64_t length = 0;
};

using SectorLabel = std::variant<MagnetizationLabel, SpinLabel, PartitionLabel, DotLabel>;

inline std::string to_string(const SectorLabel& label) {
  struct V {
    std::string operator()(const MagnetizationLabel& l) const {
      return l.twice_m % 2 ? "M=" + std::to_string(l.twice_m) + "/2"
                           : "M=" + std::to_string(l.twice_m / 2);
    }
    std::string operator()(const SpinLabel& l) const {
      return l.twice_lambda % 2 ? "lambda=" + std::to_string(l.twice_lambda) + "/2"
                                : "lambda=" + std::to_string(l.twice_lambda / 2);
    }
    std::string operator()(const PartitionLabel& l) const {
      auto list = [](const std::vector<std::int64_t>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
      };
      return list(l.parts) + "|" + list(l.dual);
    }
    std::string operator()(const DotLabel& l) const { return "dots=" + std::to_string(l.length); }
  };
  return std::visit(V{}, label);
}

/// A count known exactly (exact mode) and always as a log-domain value.
struct SectorCount {
  std::optional<BigCount> exact;
  LogReal approx;

  static SectorCount of(BigCount v) {
    SectorCount c;
    c.approx = LogReal::from_count(v);
    c.exact = std::move(v);
    return c;
  }
  static SectorCount of_log(long double log_value) {
    return SectorCount{std::nullopt, LogReal::from_log(log_value)};
  }
  static SectorCount one() { return of(BigCount(1)); }
  long double log() const { return approx.log_value(); }
};

struct IrrepRecord {
  SectorLabel label;
  SectorCount d;
  SectorCount D_A;
  SectorCount D_B;
  SectorCount pattern_count;
};

/// One irrep of a single chain of length ell.
struct ChainSector {
  SectorLabel label;
  SectorCount d;
  SectorCount D;
  SectorCount pattern_count;
};

// ---------------------------------------------------------------------------
// Partitions

/// Streams the partitions of n into at most `rows` parts, each at most `cap`,
/// in reverse lexicographic order. Single consumer.
class PartitionStream {
 public:
  PartitionStream(std::int64_t n, int rows, std::int64_t cap) : parts_(rows, 0) {
    if (n < 0 || rows < 1 || cap < 0 || n > cap * rows) {
      done_ = true;
      return;
    }
    fill(0, n, cap);
  }

  bool done() const noexcept { return done_; }
  const std::vector<std::int64_t>& current() const noexcept { return parts_; }

  void advance() {
    const int rows = static_cast<int>(parts_.size());
    std::int64_t tail = 0;
    for (int i = rows - 1; i >= 0; --i) {
      const std::int64_t top = parts_[i] - 1;
      if (i < rows - 1 && top >= 0 && top * (rows - 1 - i) >= tail + 1) {
        parts_[i] = top;
        fill(i + 1, tail + 1, top);
        return;
      }
      tail += parts_[i];
    }
    done_ = true;
  }

 private:
  void fill(int from, std::int64_t remaining, std::int64_t cap) {
    for (std::size_t j = from; j < parts_.size(); ++j) {
      parts_[j] = std::min(cap, remaining);
      remaining -= parts_[j];
    }
  }

  std::vector<std::int64_t> parts_;
  bool done_ = false;
};

namespace detail {

// Shifted rows lambda_i + N - i (i = 1..N).
inline std::vector<std::int64_t> shifted(const std::vector<std::int64_t>& parts) {
  const auto N = static_cast<std::int64_t>(parts.size());
  std::vector<std::int64_t> s(parts.size());
  for (std::int64_t i = 0; i < N; ++i) s[i] = parts[i] + N - 1 - i;
  return s;
}

}  // namespace detail

/// dim of the U(N) irrep: prod_{i<j}(l_i - l_j) / prod_{k<N} k!.
inline SectorCount sun_degeneracy(const std::vector<std::int64_t>& parts, Mode mode) {
  const auto s = detail::shifted(parts);
  const auto N = static_cast<std::int64_t>(s.size());
  if (mode == Mode::exact) {
    BigInt num = 1, den = 1;
    for (std::int64_t i = 0; i < N; ++i)
      for (std::int64_t j = i + 1; j < N; ++j) num *= (s[i] - s[j]);
    for (std::int64_t k = 1; k < N; ++k) den *= factorial(k);
    return SectorCount::of(num / den);
  }
  long double l = 0;
  for (std::int64_t i = 0; i < N; ++i)
    for (std::int64_t j = i + 1; j < N; ++j) l += std::log(static_cast<long double>(s[i] - s[j]));
  for (std::int64_t k = 1; k < N; ++k) l -= log_factorial(k);
  return SectorCount::of_log(l);
}

/// dim of the S_ell irrep: ell! prod_{i<j}(l_i - l_j) / prod_i l_i!.
inline SectorCount sun_sector_dimension(const std::vector<std::int64_t>& parts, Mode mode) {
  const auto s = detail::shifted(parts);
  const auto N = static_cast<std::int64_t>(s.size());
  std::int64_t ell = 0;
  for (auto p : parts) ell += p;
  if (mode == Mode::exact) {
    BigInt num = factorial(ell), den = 1;
    for (std::int64_t i = 0; i < N; ++i) {
      for (std::int64_t j = i + 1; j < N; ++j) num *= (s[i] - s[j]);
      den *= factorial(s[i]);
    }
    return SectorCount::of(num / den);
  }
  long double l = log_factorial(ell);
  for (std::int64_t i = 0; i < N; ++i) {
    for (std::int64_t j = i + 1; j < N; ++j) l += std::log(static_cast<long double>(s[i] - s[j]));
    l -= log_factorial(s[i]);
  }
  return SectorCount::of_log(l);
}

// ---------------------------------------------------------------------------
// SU(2) / TL single-chain data

/// C(ell, ell/2+lambda) - C(ell, ell/2+lambda+1), lambda = twice_lambda/2.
inline SectorCount spin_sector_dimension(std::int64_t ell, std::int64_t twice_lambda, Mode mode) {
  if ((ell + twice_lambda) % 2 || twice_lambda < 0 || twice_lambda > ell)
    throw Error(Errc::domain_error, "spin sector outside the chain");
  const std::int64_t k = (ell + twice_lambda) / 2;
  if (mode == Mode::exact) return SectorCount::of(binomial(ell, k) - binomial(ell, k + 1));
  // Same difference written as C(ell, k) (2 lambda + 1) / (k + 1).
  return SectorCount::of_log(log_binomial(ell, k) +
                             std::log(static_cast<long double>(twice_lambda + 1)) -
                             std::log(static_cast<long double>(k + 1)));
}

/// Degeneracy 2 lambda + 1 (SU(2)) or [2 lambda + 1]_q with q + 1/q = N (TL).
class SpinDegeneracy {
 public:
  SpinDegeneracy(Family f, int N, std::int64_t max_twice_lambda, Mode mode)
      : family_(f), N_(N), mode_(mode) {
    if (f == Family::TL && N > 2) {
      q_ = q_from_dimension(N);
      if (mode == Mode::exact) exact_ = q_int_sequence(N, max_twice_lambda + 1);
    }
  }

  SectorCount operator()(std::int64_t twice_lambda) const {
    const std::int64_t n = twice_lambda + 1;
    if (family_ != Family::TL || N_ == 2) {
      return mode_ == Mode::exact ? SectorCount::of(BigCount(n))
                                  : SectorCount::of_log(std::log(static_cast<long double>(n)));
    }
    if (mode_ == Mode::exact) return SectorCount::of(exact_.at(n - 1));
    return SectorCount::of_log(log_q_int(n, q_));
  }

 private:
  Family family_;
  int N_;
  Mode mode_;
  long double q_ = 1.0L;
  std::vector<BigCount> exact_;
};

// ---------------------------------------------------------------------------
// PF

/// D_M^{(ell)} for every M = 0..ell (zero where M and ell differ in parity).
///
/// A word reduces to a pattern of length M iff its stack walk ends at height
/// M; dividing the walk count by the N (N-1)^{M-1} patterns of that length
/// gives the integer recurrence g(h) <- g(h-1) + c_h g(h+1), c_0 = N,
/// c_h = N-1.
inline std::vector<BigCount> pf_sector_dimensions(int N, std::int64_t ell) {
  if (ell < 0) throw Error(Errc::domain_error, "negative chain length");
  std::vector<BigCount> g(ell + 2, BigCount(0)), next(ell + 2, BigCount(0));
  g[0] = 1;
  for (std::int64_t t = 0; t < ell; ++t) {
    const std::int64_t top = t + 1;
    for (std::int64_t h = 0; h <= top; ++h) {
      BigCount v = h > 0 ? g[h - 1] : BigCount(0);
      if (h + 1 <= t) v += g[h + 1] * (h == 0 ? N : N - 1);
      next[h] = std::move(v);
    }
    std::swap(g, next);
  }
  g.resize(ell + 1);
  return g;
}

/// Log-domain twin of pf_sector_dimensions; -inf entries are empty sectors.
inline std::vector<long double> pf_log_sector_dimensions(int N, std::int64_t ell) {
  if (ell < 0) throw Error(Errc::domain_error, "negative chain length");
  std::vector<long double> g(ell + 2, 0.0L), next(ell + 2, 0.0L);
  g[0] = 1.0L;
  long double log_scale = 0.0L;
  for (std::int64_t t = 0; t < ell; ++t) {
    long double peak = 0.0L;
    for (std::int64_t h = 0; h <= t + 1; ++h) {
      long double v = h > 0 ? g[h - 1] : 0.0L;
      if (h + 1 <= t) v += g[h + 1] * static_cast<long double>(h == 0 ? N : N - 1);
      next[h] = v;
      peak = std::max(peak, v);
    }
    for (std::int64_t h = 0; h <= t + 1; ++h) next[h] /= peak;
    log_scale += std::log(peak);
    std::swap(g, next);
  }
  std::vector<long double> out(ell + 1);
  for (std::int64_t h = 0; h <= ell; ++h)
    out[h] = g[h] > 0 ? std::log(g[h]) + log_scale : -std::numeric_limits<long double>::infinity();
  return out;
}

inline BigCount pf_sector_dimension(int N, std::int64_t L, std::int64_t M) {
  if (L < 0 || M < 0 || M > L) throw Error(Errc::domain_error, "need 0 <= M <= L");
  if ((L - M) % 2) throw Error(Errc::parity_error, "M and L must have equal parity");
  return pf_sector_dimensions(N, L)[M];
}

/// N (N-1)^{M-1} patterns of length M >= 1; one (empty) pattern for M = 0.
inline BigCount pf_pattern_count(int N, std::int64_t M) {
  if (M == 0) return 1;
  return BigCount(N) * boost::multiprecision::pow(BigCount(N - 1), static_cast<unsigned>(M - 1));
}

inline long double pf_log_pattern_count(int N, std::int64_t M) {
  if (M == 0) return 0.0L;
  return std::log(static_cast<long double>(N)) +
         static_cast<long double>(M - 1) * std::log(static_cast<long double>(N - 1));
}

// ---------------------------------------------------------------------------
// Enumeration

/// Every irrep of one chain of length ell (no bipartite pairing).
inline void for_each_chain_sector(Family f, int N, std::int64_t ell, Mode mode,
                                  const std::function<void(const ChainSector&)>& fn) {
  switch (f) {
    case Family::U1:
      for (std::int64_t k = 0; k <= ell; ++k) {
        ChainSector s{MagnetizationLabel{ell - 2 * k}, SectorCount::one(), {}, SectorCount::one()};
        s.D = mode == Mode::exact ? SectorCount::of(binomial(ell, k))
                                  : SectorCount::of_log(log_binomial(ell, k));
        fn(s);
      }
      return;
    case Family::SUN:
      if (N == 2) break;
      for (PartitionStream p(ell, N, ell); !p.done(); p.advance())
        fn({PartitionLabel{p.current(), {}}, sun_degeneracy(p.current(), mode),
            sun_sector_dimension(p.current(), mode), SectorCount::one()});
      return;
    case Family::TL:
      break;
    case Family::PF: {
      if (mode == Mode::exact) {
        const auto D = pf_sector_dimensions(N, ell);
        for (std::int64_t M = ell % 2; M <= ell; M += 2)
          fn({DotLabel{M}, SectorCount::one(), SectorCount::of(D[M]),
              SectorCount::of(pf_pattern_count(N, M))});
      } else {
        const auto D = pf_log_sector_dimensions(N, ell);
        for (std::int64_t M = ell % 2; M <= ell; M += 2)
          fn({DotLabel{M}, SectorCount::one(), SectorCount::of_log(D[M]),
              SectorCount::of_log(pf_log_pattern_count(N, M))});
      }
      return;
    }
  }
  // SU(2) in log mode and TL: spin labels.
  const SpinDegeneracy deg(f, N, ell, mode);
  for (std::int64_t tl = ell % 2; tl <= ell; tl += 2)
    fn({SpinLabel{tl}, deg(tl), spin_sector_dimension(ell, tl, mode), SectorCount::one()});
}

/// Streams the bipartite records of enumerate_sectors without storing them.
inline void for_each_sector(const CommutantSpec& spec, Mode mode,
                            const std::function<void(const IrrepRecord&)>& fn) {
  check_admissible(spec);
  const std::int64_t LA = spec.L_A, LB = spec.L_B, Lmin = spec.L_min();
  switch (spec.family) {
    case Family::U1: {
      // k_A up spins on A, L/2 - k_A on B.
      const std::int64_t half = spec.L / 2;
      for (std::int64_t kA = std::max<std::int64_t>(0, half - LB); kA <= std::min(LA, half); ++kA) {
        IrrepRecord r{MagnetizationLabel{2 * kA - LA}, SectorCount::one(), {}, {},
                      SectorCount::one()};
        if (mode == Mode::exact) {
          r.D_A = SectorCount::of(binomial(LA, kA));
          r.D_B = SectorCount::of(binomial(LB, half - kA));
        } else {
          r.D_A = SectorCount::of_log(log_binomial(LA, kA));
          r.D_B = SectorCount::of_log(log_binomial(LB, half - kA));
        }
        fn(r);
      }
      return;
    }
    case Family::SUN: {
      const int N = spec.N;
      if (N == 2) break;
      const std::int64_t width = spec.L / N;
      for (PartitionStream p(LA, N, width); !p.done(); p.advance()) {
        const auto& lam = p.current();
        std::vector<std::int64_t> dual(N);
        for (int i = 0; i < N; ++i) dual[i] = width - lam[N - 1 - i];
        IrrepRecord r{PartitionLabel{lam, dual}, sun_degeneracy(lam, mode),
                      sun_sector_dimension(lam, mode), sun_sector_dimension(dual, mode),
                      SectorCount::one()};
        fn(r);
      }
      return;
    }
    case Family::TL:
      break;
    case Family::PF: {
      if (mode == Mode::exact) {
        const auto DA = pf_sector_dimensions(spec.N, LA);
        const auto DB = pf_sector_dimensions(spec.N, LB);
        for (std::int64_t M = 0; M <= Lmin; M += 2)
          fn({DotLabel{M}, SectorCount::one(), SectorCount::of(DA[M]), SectorCount::of(DB[M]),
              SectorCount::of(pf_pattern_count(spec.N, M))});
      } else {
        const auto DA = pf_log_sector_dimensions(spec.N, LA);
        const auto DB = pf_log_sector_dimensions(spec.N, LB);
        for (std::int64_t M = 0; M <= Lmin; M += 2)
          fn({DotLabel{M}, SectorCount::one(), SectorCount::of_log(DA[M]),
              SectorCount::of_log(DB[M]), SectorCount::of_log(pf_log_pattern_count(spec.N, M))});
      }
      return;
    }
  }
  const SpinDegeneracy deg(spec.family, spec.N, Lmin, mode);
  for (std::int64_t tl = 0; tl <= Lmin; tl += 2)
    fn({SpinLabel{tl}, deg(tl), spin_sector_dimension(LA, tl, mode),
        spin_sector_dimension(LB, tl, mode), SectorCount::one()});
}

inline std::vector<IrrepRecord> enumerate_sectors(const CommutantSpec& spec,
                                                  Mode mode = Mode::exact) {
  std::vector<IrrepRecord> out;
  for_each_sector(spec, mode, [&](const IrrepRecord& r) { out.push_back(r); });
  return out;
}

// ---------------------------------------------------------------------------
// Singlet and commutant dimensions

/// D_0^{(L)}, the dimension of the bond-algebra irrep paired with the trivial
/// commutant irrep.
inline BigCount singlet_dimension(const CommutantSpec& spec) {
  check_admissible(spec);
  const std::int64_t L = spec.L;
  switch (spec.family) {
    case Family::U1: return binomial(L, L / 2);
    case Family::SUN: {
      const int N = spec.N;
      BigInt num = factorial(L), den = 1;
      for (int k = 1; k < N; ++k) num *= factorial(k);
      for (int k = 0; k < N; ++k) den *= factorial(L / N + k);
      return num / den;
    }
    case Family::TL: return binomial(L, L / 2) - binomial(L, L / 2 + 1);
    case Family::PF: return pf_sector_dimensions(spec.N, L)[0];
  }
  return 0;
}

inline long double log_singlet_dimension(const CommutantSpec& spec) {
  check_admissible(spec);
  const std::int64_t L = spec.L;
  switch (spec.family) {
    case Family::U1: return log_binomial(L, L / 2);
    case Family::SUN: {
      const int N = spec.N;
      long double l = log_factorial(L);
      for (int k = 1; k < N; ++k) l += log_factorial(k);
      for (int k = 0; k < N; ++k) l -= log_factorial(L / N + k);
      return l;
    }
    case Family::TL: return spin_sector_dimension(L, 0, Mode::log_domain).log();
    case Family::PF: return pf_log_sector_dimensions(spec.N, L)[0];
  }
  return 0;
}

enum class Side { A_side, B_side, min_side };

inline std::int64_t side_length(const CommutantSpec& spec, Side side) {
  switch (side) {
    case Side::A_side: return spec.L_A;
    case Side::B_side: return spec.L_B;
    case Side::min_side: return spec.L_min();
  }
  return spec.L_min();
}

/// sum over all irreps of the chain of length ell of pattern_count * d^2.
inline LogReal chain_commutant_dimension(Family f, int N, std::int64_t ell) {
  switch (f) {
    case Family::U1: return LogReal::from_count(BigCount(ell + 1));
    case Family::SUN: {
      // Equals the sum of d^2 over U(N) irreps with ell boxes (tested).
      const std::int64_t n2 = static_cast<std::int64_t>(N) * N;
      return LogReal::from_log(log_binomial(ell + n2 - 1, n2 - 1));
    }
    case Family::PF: {
      LogSumAccumulator acc;
      for (std::int64_t M = ell % 2; M <= ell; M += 2) acc.add_log(pf_log_pattern_count(N, M));
      return acc.result();
    }
    case Family::TL: {
      const SpinDegeneracy deg(f, N, ell, Mode::log_domain);
      LogSumAccumulator acc;
      for (std::int64_t tl = ell % 2; tl <= ell; tl += 2) acc.add_log(2 * deg(tl).log());
      return acc.result();
    }
  }
  return LogReal();
}

inline LogReal commutant_dimension(const CommutantSpec& spec, Side side = Side::min_side) {
  check_admissible(spec);
  return chain_commutant_dimension(spec.family, spec.N, side_length(spec, side));
}

/// log of the largest d over irreps of the chain on the given side.
inline long double log_max_degeneracy(const CommutantSpec& spec, Side side = Side::min_side) {
  check_admissible(spec);
  const std::int64_t ell = side_length(spec, side);
  switch (spec.family) {
    case Family::U1:
    case Family::PF: return 0.0L;
    case Family::TL: return SpinDegeneracy(spec.family, spec.N, ell, Mode::log_domain)(ell).log();
    case Family::SUN: {
      if (spec.N == 2) return std::log(static_cast<long double>(ell + 1));
      long double best = 0.0L;
      for (PartitionStream p(ell, spec.N, ell); !p.done(); p.advance())
        best = std::max(best, sun_degeneracy(p.current(), Mode::log_domain).log());
      return best;
    }
  }
  return 0.0L;
}

}  // namespace symstat
