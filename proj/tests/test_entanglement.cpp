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
#include <vector>

#include <gtest/gtest.h>

#include "symstat/entanglement.hpp"

namespace symstat {
namespace {

struct Data {
  std::vector<IrrepRecord> sectors;
  SectorCount D0;
};

Data data(Family f, int N, std::int64_t L, Mode mode = Mode::exact) {
  const auto spec = CommutantSpec::half_chain(f, N, L);
  Data d{enumerate_sectors(spec, mode), {}};
  d.D0 = mode == Mode::exact ? SectorCount::of(singlet_dimension(spec))
                             : SectorCount::of_log(log_singlet_dimension(spec));
  return d;
}

// Closed SU(2) forms written with plain binomials.
double su2_en(std::int64_t L) {
  return std::log(static_cast<double>(L / 2 + 1)) + 2 * static_cast<double>(log_binomial(L / 2, L / 4)) -
         static_cast<double>(log_binomial(L, L / 2));
}
double su2_r3(std::int64_t L) {
  const double l = static_cast<double>(L);
  return std::log((l + 2) * (l + 2) / (4 * (l + 1)));
}

TEST(LogNegativity, Su2EightSites) {
  const auto d = data(Family::SUN, 2, 8);
  EXPECT_NEAR(log_negativity(d.sectors, d.D0), std::log(18.0 / 7.0), 1e-14);
}

TEST(LogNegativity, AbelianFamiliesVanishExactly) {
  for (std::int64_t L = 4; L <= 64; L += 2) {
    for (auto f : {Family::U1, Family::PF}) {
      for (std::int64_t LA = 2; LA < L; LA += 2) {
        const auto spec = CommutantSpec::cut(f, 3, L, LA);
        const auto rep = evaluate(spec, Mode::exact, {true, {3, 4, 5}, {0.5, 3.0}, false});
        ASSERT_EQ(*rep.E_N, 0.0);
        for (const auto& [n, v] : rep.R) ASSERT_EQ(v, 0.0);
        for (const auto& [n, v] : rep.R_tilde) ASSERT_EQ(v, 0.0);
      }
    }
  }
  const auto d = data(Family::PF, 3, 8);
  EXPECT_EQ(log_negativity(d.sectors, d.D0), 0.0);
}

TEST(LogNegativity, EmptyList) {
  try {
    log_negativity({}, SectorCount::one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_sector_list);
  }
}

TEST(RenyiNegativity, Examples) {
  const auto su2 = data(Family::SUN, 2, 8);
  EXPECT_NEAR(renyi_negativity(su2.sectors, su2.D0, 3), std::log(25.0 / 9.0), 1e-14);
  EXPECT_EQ(renyi_negativity(su2.sectors, su2.D0, 1), 0.0);
  EXPECT_EQ(renyi_negativity(su2.sectors, su2.D0, 2), 0.0);
  const auto tl = data(Family::TL, 3, 4);
  EXPECT_NEAR(renyi_negativity(tl.sectors, tl.D0, 3), std::log(128.0 / 65.0), 1e-14);
  EXPECT_EQ(renyi_negativity(tl.sectors, tl.D0, 4), renyi_negativity(tl.sectors, tl.D0, 3));
}

TEST(GeneralizedRenyi, Examples) {
  const auto su2 = data(Family::SUN, 2, 8);
  EXPECT_NEAR(generalized_renyi(su2.sectors, su2.D0, 1.0), log_negativity(su2.sectors, su2.D0), 1e-14);
  const auto tl = data(Family::TL, 3, 4);
  EXPECT_NEAR(generalized_renyi(tl.sectors, tl.D0, 4.0), std::log(128.0 / 65.0) / 2, 1e-14);
  EXPECT_NEAR(generalized_renyi(tl.sectors, tl.D0, 4.0), 0.3389, 1e-4);
  try {
    generalized_renyi(tl.sectors, tl.D0, 2.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::n_at_two);
  }
  EXPECT_THROW(generalized_renyi(tl.sectors, tl.D0, 2.0 + 5e-7), Error);
  EXPECT_NO_THROW(generalized_renyi(tl.sectors, tl.D0, 2.001));
}

TEST(OperatorSpaceEntanglement, Examples) {
  const auto su2 = data(Family::SUN, 2, 4);
  EXPECT_NEAR(operator_space_entanglement(su2.sectors, su2.D0), (std::log(2.0) + std::log(18.0)) / 2,
              1e-14);
  double expect = 0;
  for (int k = 0; k <= 4; ++k) {
    const double c = static_cast<double>(binomial(4, k).convert_to<long>());
    const double p = c * c / 70.0;
    expect -= p * std::log(p);
  }
  const auto u1 = data(Family::U1, 2, 8);
  EXPECT_NEAR(operator_space_entanglement(u1.sectors, u1.D0), expect, 1e-14);
  EXPECT_NEAR(expect, 1.138073514962, 1e-12);

  IrrepRecord one{SpinLabel{0}, SectorCount::one(), SectorCount::of(3), SectorCount::of(4),
                  SectorCount::one()};
  EXPECT_EQ(operator_space_entanglement({one}, SectorCount::of(12)), 0.0);
}

TEST(UpperBounds, Examples) {
  EXPECT_NEAR(upper_bounds(CommutantSpec::half_chain(Family::U1, 2, 8)).E_N, std::log(5.0), 1e-14);
  const auto b = upper_bounds(CommutantSpec::half_chain(Family::SUN, 2, 4), {1.0, 3.0});
  EXPECT_NEAR(b.E_N, std::log(10.0), 1e-14);
  EXPECT_NEAR(b.R_tilde.at(1.0).value, std::log(10.0), 1e-14);
  EXPECT_NEAR(b.R_tilde.at(3.0).commutant_form, 0.5 * std::log(10.0), 1e-14);
  EXPECT_NEAR(b.R_tilde.at(3.0).max_d_form, std::log(3.0), 1e-14);
  EXPECT_TRUE(b.R_tilde.at(3.0).max_d_tighter == (std::log(3.0) < 0.5 * std::log(10.0)));
  const auto pf = upper_bounds(CommutantSpec::half_chain(Family::PF, 3, 8), {4.0});
  EXPECT_EQ(pf.R_tilde.at(4.0).max_d_form, 0.0);
  EXPECT_TRUE(pf.R_tilde.at(4.0).max_d_tighter);
}

TEST(Properties, Su2ClosedFormsExactUpTo256) {
  for (std::int64_t L = 4; L <= 256; L += 4) {
    const auto rep = evaluate(CommutantSpec::half_chain(Family::SUN, 2, L), Mode::exact);
    ASSERT_NEAR(*rep.E_N, su2_en(L), 1e-12) << L;
    ASSERT_NEAR(rep.R.at(3), su2_r3(L), 1e-12) << L;
  }
}

TEST(Properties, BoundsHold) {
  for (std::int64_t L = 4; L <= 64; L += 4) {
    for (auto [f, N] : std::vector<std::pair<Family, int>>{
             {Family::U1, 2}, {Family::SUN, 2}, {Family::TL, 3}, {Family::TL, 4}, {Family::PF, 3}}) {
      const auto rep = evaluate(CommutantSpec::half_chain(f, N, L), Mode::exact);
      EXPECT_LE(*rep.E_N, rep.bounds.E_N + 1e-10);
      EXPECT_LE(*rep.S_OP, rep.bounds.S_OP + 1e-10);
      EXPECT_GE(*rep.E_N, 0.0);
      EXPECT_GE(*rep.S_OP, 0.0);
    }
  }
  for (std::int64_t L = 6; L <= 36; L += 6) {
    const auto rep = evaluate(CommutantSpec::half_chain(Family::SUN, 3, L), Mode::exact);
    EXPECT_LE(*rep.E_N, rep.bounds.E_N + 1e-10);
    EXPECT_LE(*rep.S_OP, rep.bounds.S_OP + 1e-10);
  }
}

TEST(Properties, TildeBoundsHold) {
  const std::set<double> orders{0.5, 1.0, 1.5, 3.0, 4.0, 6.0};
  for (std::int64_t L = 4; L <= 64; L += 4)
    for (auto [f, N] : std::vector<std::pair<Family, int>>{{Family::SUN, 2}, {Family::TL, 3}}) {
      const auto rep = evaluate(CommutantSpec::half_chain(f, N, L), Mode::exact, {false, {}, orders, false});
      for (double n : orders) EXPECT_LE(rep.R_tilde.at(n), rep.bounds.R_tilde.at(n).value + 1e-10);
    }
}

TEST(Properties, EvenStepAndConsistency) {
  for (std::int64_t L = 4; L <= 64; L += 4) {
    const auto rep = evaluate(CommutantSpec::half_chain(Family::TL, 3, L), Mode::exact,
                              {true, {1, 2, 3, 4, 5, 6, 8}, {1.0, 4.0, 6.0, 8.0}, false});
    EXPECT_EQ(rep.R.at(4), rep.R.at(3));
    EXPECT_EQ(rep.R.at(6), rep.R.at(5));
    EXPECT_NEAR(rep.R_tilde.at(1.0), *rep.E_N, 1e-12 * std::max(1.0, *rep.E_N));
    for (int n : {4, 6, 8})
      EXPECT_NEAR((n - 2) * rep.R_tilde.at(n), rep.R.at(n), 1e-12 * std::max(1.0, rep.R.at(n)));
  }
}

TEST(Properties, TlMonotoneInOrder) {
  for (std::int64_t L = 4; L <= 64; L += 4) {
    const std::vector<double> orders{3, 4, 5, 6, 8};
    const auto rep = evaluate(CommutantSpec::half_chain(Family::TL, 3, L), Mode::exact,
                              {false, {}, {orders.begin(), orders.end()}, false});
    double prev = -1;
    for (double n : orders) {
      const double v = (n - 2) * rep.R_tilde.at(n);
      EXPECT_GE(v, prev - 1e-12);
      prev = v;
    }
  }
}

TEST(Properties, TlRenyiCeiling) {
  for (std::int64_t L = 4; L <= 64; L += 4) {
    const auto rep = evaluate(CommutantSpec::half_chain(Family::TL, 3, L), Mode::exact, {false, {3, 5, 7, 9}, {}, false});
    const double half = static_cast<double>(log_of(*spin_sector_dimension(L / 2, 0, Mode::exact).exact));
    const double ceiling =
        -(2 * half - static_cast<double>(log_of(singlet_dimension(CommutantSpec::half_chain(Family::TL, 3, L)))));
    for (const auto& [n, v] : rep.R) EXPECT_LT(v, ceiling) << L << " " << n;
  }
}

TEST(Modes, LogDomainMatchesExact) {
  const std::set<double> orders{0.5, 1.5, 3.0};
  for (auto [f, N, L] : std::vector<std::tuple<Family, int, std::int64_t>>{
           {Family::SUN, 2, 256}, {Family::TL, 3, 256}, {Family::U1, 2, 256}, {Family::PF, 3, 256},
           {Family::SUN, 3, 90}, {Family::TL, 5, 64}}) {
    const auto spec = CommutantSpec::half_chain(f, N, L);
    const auto ex = evaluate(spec, Mode::exact, {true, {3, 5}, orders, true});
    const auto lg = evaluate(spec, Mode::log_domain, {true, {3, 5}, orders, true});
    EXPECT_NEAR(*ex.E_N, *lg.E_N, 1e-10 * std::max(1.0, *ex.E_N));
    EXPECT_NEAR(ex.R.at(3), lg.R.at(3), 1e-10 * std::max(1.0, ex.R.at(3)));
    EXPECT_NEAR(ex.R.at(5), lg.R.at(5), 1e-10 * std::max(1.0, ex.R.at(5)));
    EXPECT_NEAR(*ex.S_OP, *lg.S_OP, 1e-10 * std::max(1.0, *ex.S_OP));
    for (double n : orders) EXPECT_NEAR(ex.R_tilde.at(n), lg.R_tilde.at(n), 1e-10);
    EXPECT_EQ(ex.sector_count, lg.sector_count);
  }
}

TEST(SunFastPath, MatchesEnumeration) {
  for (int N : {2, 3, 4, 5})
    for (std::int64_t L = 2 * N; L <= 24 * N; L += 2 * N) {
      const auto rep = evaluate(CommutantSpec::half_chain(Family::SUN, N, L), Mode::exact, {false, {3}, {}, false});
      ASSERT_NEAR(sun_half_chain_r3(N, L), rep.R.at(3), 1e-11) << N << " " << L;
    }
  EXPECT_NEAR(sun_half_chain_r3(2, 1000), su2_r3(1000), 1e-11);
}

TEST(Modes, ResolveBackend) {
  EXPECT_EQ(resolve_backend(Backend::automatic, 512), Mode::exact);
  EXPECT_EQ(resolve_backend(Backend::automatic, 514), Mode::log_domain);
  EXPECT_EQ(resolve_backend(Backend::exact, 4096), Mode::exact);
  EXPECT_EQ(resolve_backend(Backend::log_domain, 4), Mode::log_domain);
}

}  // namespace
}  // namespace symstat
