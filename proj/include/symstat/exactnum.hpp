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

// Exact combinatorics (big integers and rationals) plus a log-domain real
// type. Every closed form in the library is evaluated either exactly, with a
// single floating-point log at the end, or fully in the log domain so that
// counts of size N^L with L ~ 10^6 never overflow.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symstat/error.hpp"

namespace symstat {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
/// Non-negative exact count. Never rounded.
using BigCount = BigInt;

inline constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

/// Natural log of a positive big integer, accurate to long double precision.
inline long double log_of(const BigInt& x) {
  if (x <= 0) throw Error(Errc::domain_error, "log of a non-positive integer");
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 63) return std::log(static_cast<long double>(x.convert_to<std::uint64_t>()));
  const auto shift = bits - 62;
  const BigInt top = x >> shift;
  return std::log(static_cast<long double>(top.convert_to<std::uint64_t>())) +
         static_cast<long double>(shift) * kLn2;
}

namespace detail {

// Mantissa in [2^62, 2^63) and binary exponent of a positive integer.
inline std::pair<long double, long> split_binary(const BigInt& x) {
  const auto bits = static_cast<long>(boost::multiprecision::msb(x));
  if (bits < 63) return {static_cast<long double>(x.convert_to<std::uint64_t>()), 0};
  const long shift = bits - 62;
  return {static_cast<long double>((x >> shift).convert_to<std::uint64_t>()), shift};
}

}  // namespace detail

/// Natural log of a positive rational. Mantissas are divided before taking
/// the log, so ratios close to one keep full relative precision.
inline long double log_of(const BigRational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  if (num <= 0) throw Error(Errc::domain_error, "log of a non-positive rational");
  const auto [mn, en] = detail::split_binary(num);
  const auto [md, ed] = detail::split_binary(boost::multiprecision::denominator(r));
  return std::log(mn / md) + static_cast<long double>(en - ed) * kLn2;
}

/// Correctly scaled conversion of an exact rational, even when numerator and
/// denominator individually exceed the floating-point range.
inline long double to_long_double(const BigRational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  if (num == 0) return 0.0L;
  const bool negative = num < 0;
  const auto [mn, en] = detail::split_binary(negative ? BigInt(-num) : num);
  const auto [md, ed] = detail::split_binary(den);
  const long double v = std::ldexp(mn / md, static_cast<int>(en - ed));
  return negative ? -v : v;
}

// ---------------------------------------------------------------------------
// Factorials

/// Process-wide memo of n! and log n!, grown on demand up to the largest
/// requested argument. Concurrent readers never block each other; growth
/// takes the exclusive lock. std::deque keeps references stable on growth.
class FactorialCache {
 public:
  static FactorialCache& instance() {
    static FactorialCache cache;
    return cache;
  }

  const BigInt& exact(std::int64_t n) {
    check(n);
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < exact_.size()) return exact_[n];
    }
    std::unique_lock lock(mutex_);
    while (exact_.size() <= static_cast<std::size_t>(n))
      exact_.push_back(exact_.back() * static_cast<std::int64_t>(exact_.size()));
    return exact_[n];
  }

  long double log(std::int64_t n) {
    check(n);
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < log_.size()) return log_[n];
    }
    std::unique_lock lock(mutex_);
    // Cumulative sums of log k lose ~1e-19 per term; fine up to n ~ 1e7.
    while (log_.size() <= static_cast<std::size_t>(n))
      log_.push_back(log_.back() + std::log(static_cast<long double>(log_.size())));
    return log_[n];
  }

 private:
  FactorialCache() : exact_{BigInt(1)}, log_{0.0L} {}

  static void check(std::int64_t n) {
    if (n < 0) throw Error(Errc::domain_error, "factorial of a negative integer");
  }

  std::shared_mutex mutex_;
  std::deque<BigInt> exact_;
  std::deque<long double> log_;
};

inline const BigInt& factorial(std::int64_t n) { return FactorialCache::instance().exact(n); }
inline long double log_factorial(std::int64_t n) { return FactorialCache::instance().log(n); }

/// Exact C(n, k); zero when k < 0 or k > n.
inline BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw Error(Errc::domain_error, "binomial with negative n");
  if (k < 0 || k > n) return BigCount(0);
  k = std::min(k, n - k);
  // Multiplicative form stays exact: each partial product is C(n-k+i, i).
  BigCount c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    c *= (n - k + i);
    c /= i;
  }
  return c;
}

/// log C(n, k); -inf outside the support.
inline long double log_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw Error(Errc::domain_error, "binomial with negative n");
  if (k < 0 || k > n) return -std::numeric_limits<long double>::infinity();
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

/// Exact n! / prod(parts_i!).
inline BigCount multinomial(std::int64_t n, std::span<const std::int64_t> parts) {
  std::int64_t sum = 0;
  for (auto p : parts) {
    if (p < 0) throw Error(Errc::domain_error, "negative multinomial part");
    sum += p;
  }
  if (sum != n) throw Error(Errc::sum_mismatch, "parts sum to " + std::to_string(sum) +
                                                    ", expected " + std::to_string(n));
  BigCount c = 1;
  std::int64_t filled = 0;
  for (auto p : parts) {
    filled += p;
    c *= binomial(filled, p);
  }
  return c;
}

inline BigCount multinomial(std::int64_t n, std::initializer_list<std::int64_t> parts) {
  return multinomial(n, std::span<const std::int64_t>(parts.begin(), parts.size()));
}

// ---------------------------------------------------------------------------
// Log-domain reals

enum class Sign : std::int8_t { negative = -1, zero = 0, positive = 1 };

/// A real number stored as sign and natural log of its magnitude.
class LogReal {
 public:
  constexpr LogReal() = default;

  static LogReal from_log(long double log_value, Sign sign = Sign::positive) {
    if (sign == Sign::zero || (std::isinf(log_value) && log_value < 0)) return LogReal();
    return LogReal(log_value, sign);
  }
  static LogReal from_value(long double v) {
    if (v == 0) return LogReal();
    return LogReal(std::log(std::fabs(v)), v > 0 ? Sign::positive : Sign::negative);
  }
  static LogReal from_count(const BigInt& x) {
    if (x == 0) return LogReal();
    if (x < 0) return LogReal(log_of(BigInt(-x)), Sign::negative);
    return LogReal(log_of(x), Sign::positive);
  }

  long double log_value() const noexcept { return log_; }
  Sign sign() const noexcept { return sign_; }
  bool is_zero() const noexcept { return sign_ == Sign::zero; }

  long double value() const noexcept {
    if (sign_ == Sign::zero) return 0.0L;
    const long double m = std::exp(log_);
    return sign_ == Sign::negative ? -m : m;
  }

  friend LogReal operator*(const LogReal& a, const LogReal& b) {
    if (a.is_zero() || b.is_zero()) return LogReal();
    return LogReal(a.log_ + b.log_, static_cast<Sign>(static_cast<int>(a.sign_) *
                                                       static_cast<int>(b.sign_)));
  }
  friend LogReal operator/(const LogReal& a, const LogReal& b) {
    if (b.is_zero()) throw Error(Errc::domain_error, "LogReal division by zero");
    if (a.is_zero()) return LogReal();
    return LogReal(a.log_ - b.log_, static_cast<Sign>(static_cast<int>(a.sign_) *
                                                       static_cast<int>(b.sign_)));
  }
  friend LogReal operator+(const LogReal& a, const LogReal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const LogReal& big = a.log_ >= b.log_ ? a : b;
    const LogReal& small = a.log_ >= b.log_ ? b : a;
    const long double r = std::exp(small.log_ - big.log_);
    if (a.sign_ == b.sign_) return LogReal(big.log_ + std::log1p(r), big.sign_);
    if (r == 1.0L) return LogReal();
    return LogReal(big.log_ + std::log1p(-r), big.sign_);
  }

  /// |x|^p for positive x.
  LogReal pow(long double p) const {
    if (sign_ != Sign::positive) throw Error(Errc::domain_error, "pow of a non-positive LogReal");
    return LogReal(log_ * p, Sign::positive);
  }

 private:
  LogReal(long double l, Sign s) : log_(l), sign_(s) {}

  long double log_ = -std::numeric_limits<long double>::infinity();
  Sign sign_ = Sign::zero;
};

/// Streaming max-shift log-sum-exp over positive terms.
class LogSumAccumulator {
 public:
  void add_log(long double term) {
    if (std::isinf(term) && term < 0) return;
    if (empty_) {
      max_ = term;
      scaled_ = 1.0L;
      empty_ = false;
    } else if (term <= max_) {
      scaled_ += std::exp(term - max_);
    } else {
      scaled_ = scaled_ * std::exp(max_ - term) + 1.0L;
      max_ = term;
    }
  }
  void add(const LogReal& x) {
    if (x.is_zero()) return;
    if (x.sign() != Sign::positive) throw Error(Errc::domain_error, "log_sum of a negative term");
    add_log(x.log_value());
  }
  bool empty() const noexcept { return empty_; }
  /// Natural log of the sum; -inf when empty.
  long double log() const noexcept {
    return empty_ ? -std::numeric_limits<long double>::infinity() : max_ + std::log(scaled_);
  }
  LogReal result() const { return LogReal::from_log(log()); }

 private:
  bool empty_ = true;
  long double max_ = 0.0L;
  long double scaled_ = 0.0L;
};

inline LogReal log_sum(std::span<const LogReal> terms) {
  LogSumAccumulator acc;
  for (const auto& t : terms) acc.add(t);
  return acc.result();
}

// ---------------------------------------------------------------------------
// q-deformed integers

/// [n]_q = (q^n - q^-n)/(q - q^-1), with [n]_1 = n. Written as
/// sinh(n t)/sinh(t), t = ln q, which has no cancellation near q = 1.
inline long double q_int(std::int64_t n, long double q) {
  if (!(q >= 1.0L)) throw Error(Errc::domain_error, "q_int requires q >= 1");
  if (q == 1.0L) return static_cast<long double>(n);
  const long double t = std::log(q);
  return std::sinh(static_cast<long double>(n) * t) / std::sinh(t);
}

/// ln [n]_q for n >= 1, overflow-free for large n.
inline long double log_q_int(std::int64_t n, long double q) {
  if (n < 1) throw Error(Errc::domain_error, "log_q_int requires n >= 1");
  if (!(q >= 1.0L)) throw Error(Errc::domain_error, "log_q_int requires q >= 1");
  if (q == 1.0L) return std::log(static_cast<long double>(n));
  const long double t = std::log(q);
  const long double nt = static_cast<long double>(n) * t;
  // ln sinh(x) = x + ln(1 - e^{-2x}) - ln 2
  return nt + std::log1p(-std::exp(-2.0L * nt)) - (t + std::log1p(-std::exp(-2.0L * t)));
}

/// The q >= 1 solving q + 1/q = N, for N >= 2.
inline long double q_from_dimension(int N) {
  if (N < 2) throw Error(Errc::domain_error, "q + 1/q = N needs N >= 2");
  const long double n = N;
  return (n + std::sqrt(n * n - 4.0L)) / 2.0L;
}

/// Exact [1]_q .. [count]_q for q + 1/q = N. These are integers, from the
/// recurrence [k+1] = N [k] - [k-1] with [0] = 0, [1] = 1.
inline std::vector<BigCount> q_int_sequence(int N, std::int64_t count) {
  std::vector<BigCount> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  BigInt prev = 0, cur = 1;
  for (std::int64_t k = 1; k <= count; ++k) {
    out.push_back(cur);
    BigInt next = cur * N - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

}  // namespace symstat
