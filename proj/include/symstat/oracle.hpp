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

// Dense reference implementation: Kraus channels on small chains, iteration
// to the stationary state, and entanglement read off the density matrix.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "symstat/commutants.hpp"
#include "symstat/error.hpp"

namespace symstat {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

inline constexpr std::int64_t kDenseCap = 6561;

inline std::int64_t hilbert_dimension(int N, int L, std::int64_t cap = kDenseCap) {
  std::int64_t dim = 1;
  for (int i = 0; i < L; ++i) {
    dim *= N;
    if (dim > cap)
      throw Error(Errc::too_large, std::to_string(N) + "^" + std::to_string(L) + " exceeds the dense cap " +
                                       std::to_string(cap));
  }
  return dim;
}

// ---------------------------------------------------------------------------
// States

/// Density matrix on L sites of dimension N. Site 0 is the most significant
/// digit of the basis index.
struct DenseState {
  CMatrix matrix;
  std::vector<int> site_dims;

  int N() const { return site_dims.empty() ? 1 : site_dims.front(); }
  int L() const { return static_cast<int>(site_dims.size()); }
  double trace() const { return matrix.trace().real(); }
  bool is_real() const { return matrix.imag().cwiseAbs().maxCoeff() == 0.0; }

  static DenseState make(CMatrix m, int N, int L) {
    DenseState s{std::move(m), std::vector<int>(L, N)};
    s.validate();
    return s;
  }

  void validate() const {
    const auto dim = static_cast<Eigen::Index>(hilbert_dimension(N(), L(), std::numeric_limits<std::int64_t>::max()));
    if (matrix.rows() != dim || matrix.cols() != dim)
      throw Error(Errc::domain_error, "matrix size does not match the site dimensions");
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
      throw Error(Errc::domain_error, "density matrix is not Hermitian");
    if (std::fabs(trace() - 1.0) > 1e-12) throw Error(Errc::domain_error, "density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(matrix, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) throw Error(Errc::domain_error, "density matrix is not positive");
  }
};

inline DenseState pure_state(const Eigen::VectorXcd& psi, int N, int L) {
  const Eigen::VectorXcd v = psi / psi.norm();
  return DenseState::make(v * v.adjoint(), N, L);
}

inline DenseState maximally_mixed(int N, int L) {
  const auto dim = hilbert_dimension(N, L);
  return DenseState::make(CMatrix::Identity(dim, dim) / static_cast<double>(dim), N, L);
}

/// Product of local singlets: two-site spin singlets (U1, SU(2)), N-site
/// antisymmetric states (SU(N)), or sum_s |ss>/sqrt(N) pairs (TL, PF).
inline DenseState singlet_product_state(Family f, int N, int L) {
  const auto dim = hilbert_dimension(N, L);
  const int block = f == Family::SUN ? N : 2;
  if (L % block) throw Error(Errc::inadmissible, "L must be a multiple of the singlet block size");
  // One block's amplitudes.
  std::vector<std::pair<std::int64_t, double>> unit;
  if (f == Family::SUN || f == Family::U1) {
    std::vector<int> perm(block);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inversions = 0;
      std::int64_t idx = 0;
      for (int i = 0; i < block; ++i) {
        idx = idx * N + perm[i];
        for (int k = i + 1; k < block; ++k) inversions += perm[i] > perm[k];
      }
      unit.emplace_back(idx, inversions % 2 ? -1.0 : 1.0);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    for (int s = 0; s < N; ++s) unit.emplace_back(s * N + s, 1.0);
  }
  std::int64_t block_dim = 1;
  for (int i = 0; i < block; ++i) block_dim *= N;
  Eigen::VectorXd amp = Eigen::VectorXd::Ones(1);
  for (int b = 0; b < L / block; ++b) {
    Eigen::VectorXd next = Eigen::VectorXd::Zero(amp.size() * block_dim);
    for (Eigen::Index i = 0; i < amp.size(); ++i)
      for (const auto& [idx, a] : unit) next(i * block_dim + idx) = amp(i) * a;
    amp = std::move(next);
  }
  (void)dim;
  return pure_state(amp.cast<Complex>(), N, L);
}

// ---------------------------------------------------------------------------
// Kraus sets

struct KrausOperator {
  int site = 0;  // acts on sites (site, site + 1)
  CMatrix op;
};

struct KrausSet {
  Family family = Family::SUN;
  int N = 2;
  int L = 0;
  std::vector<CMatrix> local;  // the same set on every bond
  std::vector<KrausOperator> operators;
  double completeness_defect = 0;
};

namespace detail {

inline RMatrix unit_matrix(int N, int a, int b) {
  RMatrix m = RMatrix::Zero(N, N);
  m(a, b) = 1;
  return m;
}

inline RMatrix kron(const RMatrix& a, const RMatrix& b) {
  RMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline RMatrix swap_operator(int N) {
  RMatrix P = RMatrix::Zero(N * N, N * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) P(b * N + a, a * N + b) = 1;
  return P;
}

// N |s><s| with |s> = sum_a |aa> / sqrt(N).
inline RMatrix tl_generator(int N) {
  RMatrix e = RMatrix::Zero(N * N, N * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) e(a * N + a, b * N + b) = 1;
  return e;
}

// Pairs (even-site, odd-site) of single-site operators whose staggered or
// uniform sums are conserved.
inline std::vector<std::pair<RMatrix, RMatrix>> conserved_local(Family f, int N) {
  std::vector<std::pair<RMatrix, RMatrix>> out;
  switch (f) {
    case Family::U1: {
      RMatrix z = RMatrix::Zero(2, 2);
      z(0, 0) = 0.5;
      z(1, 1) = -0.5;
      out.emplace_back(z, z);
      break;
    }
    case Family::SUN:
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) out.emplace_back(unit_matrix(N, a, b), unit_matrix(N, a, b));
      break;
    case Family::TL:
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) out.emplace_back(unit_matrix(N, a, b), -unit_matrix(N, b, a));
      break;
    case Family::PF:
      for (int a = 0; a < N; ++a) out.emplace_back(unit_matrix(N, a, a), -unit_matrix(N, a, a));
      break;
  }
  return out;
}

}  // namespace detail

/// Local Kraus operators on one bond. Every set is a convex combination of
/// pinchings by commuting projectors, so the fixed points are exactly the
/// commutant.
inline std::vector<RMatrix> local_kraus(Family f, int N) {
  const int d = N * N;
  const RMatrix I = RMatrix::Identity(d, d);
  const double half = std::sqrt(0.5);
  std::vector<RMatrix> K;
  auto add_dephasing = [&](int n) {
    for (int a = 0; a < n; ++a) K.push_back(half * detail::kron(detail::unit_matrix(n, a, a), RMatrix::Identity(n, n)));
  };
  switch (f) {
    case Family::SUN: {
      const RMatrix P = detail::swap_operator(N);
      K = {(I + P) / 2, (I - P) / 2};
      break;
    }
    case Family::TL: {
      const RMatrix e = detail::tl_generator(N) / N;
      K = {e, I - e};
      break;
    }
    case Family::U1: {
      // Spectral projectors of the hop h = |01><10| + |10><01|.
      RMatrix plus = RMatrix::Zero(4, 4), minus = RMatrix::Zero(4, 4), zero = RMatrix::Zero(4, 4);
      plus(1, 1) = plus(2, 2) = plus(1, 2) = plus(2, 1) = 0.5;
      minus(1, 1) = minus(2, 2) = 0.5;
      minus(1, 2) = minus(2, 1) = -0.5;
      zero(0, 0) = zero(3, 3) = 1;
      K = {half * plus, half * minus, half * zero};
      add_dephasing(2);
      break;
    }
    case Family::PF: {
      // Pair flips act on span{|aa>} as the all-ones matrix; its spectral
      // projectors are e/N and the rest of that span.
      const RMatrix qa = detail::tl_generator(N) / N;
      RMatrix same = RMatrix::Zero(d, d);
      for (int a = 0; a < N; ++a) same(a * N + a, a * N + a) = 1;
      K = {half * qa, half * (same - qa), half * (I - same)};
      add_dephasing(N);
      break;
    }
  }
  return K;
}

inline KrausSet build_kraus(Family f, int N, int L, std::int64_t cap = kDenseCap) {
  if (f == Family::U1) N = 2;
  if (L < 2) throw Error(Errc::domain_error, "need at least two sites");
  hilbert_dimension(N, L, cap);
  const auto local = local_kraus(f, N);
  const int d = N * N;
  RMatrix sum = RMatrix::Zero(d, d);
  for (const auto& k : local) {
    if ((k - k.transpose()).cwiseAbs().maxCoeff() > 1e-15) throw Error(Errc::domain_error, "Kraus operator not Hermitian");
    sum += k.transpose() * k;
  }
  KrausSet set;
  set.family = f;
  set.N = N;
  set.L = L;
  set.completeness_defect = (sum - RMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (set.completeness_defect > 1e-12) throw Error(Errc::domain_error, "Kraus set is not trace preserving");
  // Strong symmetry on the bond, for both bond parities.
  for (const auto& [even, odd] : detail::conserved_local(f, N)) {
    const RMatrix In = RMatrix::Identity(N, N);
    for (const RMatrix& O : {RMatrix(detail::kron(even, In) + detail::kron(In, odd)),
                             RMatrix(detail::kron(odd, In) + detail::kron(In, even))})
      for (const auto& k : local)
        if ((k * O - O * k).cwiseAbs().maxCoeff() > 1e-12)
          throw Error(Errc::domain_error, "Kraus operator breaks a conserved quantity");
  }
  for (const auto& k : local) set.local.push_back(k.cast<Complex>());
  for (int j = 0; j + 1 < L; ++j)
    for (const auto& k : set.local) set.operators.push_back({j, k});
  return set;
}

/// Conserved operators of the family on the full chain (small L only).
inline std::vector<CMatrix> conserved_quantities(Family f, int N, int L) {
  if (f == Family::U1) N = 2;
  const auto dim = hilbert_dimension(N, L);
  std::vector<CMatrix> out;
  for (const auto& [even, odd] : detail::conserved_local(f, N)) {
    RMatrix total = RMatrix::Zero(dim, dim);
    for (int j = 0; j < L; ++j) {
      RMatrix term = RMatrix::Identity(1, 1);
      for (int k = 0; k < L; ++k)
        term = detail::kron(term, k == j ? (j % 2 ? odd : even) : RMatrix::Identity(N, N));
      total += term;
    }
    out.push_back(total.cast<Complex>());
  }
  return out;
}

/// Embeds a two-site operator on (site, site + 1) into the chain.
inline CMatrix embed_bond(const CMatrix& op, int site, int N, int L) {
  RMatrix left = RMatrix::Identity(hilbert_dimension(N, site), hilbert_dimension(N, site));
  RMatrix right = RMatrix::Identity(hilbert_dimension(N, L - site - 2), hilbert_dimension(N, L - site - 2));
  const RMatrix re = detail::kron(detail::kron(left, op.real()), right);
  const RMatrix im = detail::kron(detail::kron(left, op.imag()), right);
  CMatrix out(re.rows(), re.cols());
  out.real() = re;
  out.imag() = im;
  return out;
}

// ---------------------------------------------------------------------------
// Channel iteration

namespace detail {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// S[(a,b),(a',b')] = sum_k K[a,a'] conj(K[b,b']).
template <class Scalar>
Mat<Scalar> superoperator(const std::vector<CMatrix>& local) {
  const auto d = local.front().rows();
  CMatrix S = CMatrix::Zero(d * d, d * d);
  for (const auto& K : local)
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index b = 0; b < d; ++b)
        for (Eigen::Index ap = 0; ap < d; ++ap)
          for (Eigen::Index bp = 0; bp < d; ++bp) S(a * d + b, ap * d + bp) += K(a, ap) * std::conj(K(b, bp));
  if constexpr (std::is_same_v<Scalar, double>) return S.real();
  else return S;
}

struct BondLayout {
  std::vector<std::int64_t> rest;    // basis indices with both bond digits zero
  std::vector<std::int64_t> offset;  // N^2 local offsets
};

inline BondLayout bond_layout(int N, int L, int j) {
  std::int64_t sa = 1, sb;
  for (int k = 0; k < L - 1 - j; ++k) sa *= N;
  sb = sa / N;
  BondLayout lay;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) lay.offset.push_back(a * sa + b * sb);
  std::int64_t dim = 1;
  for (int k = 0; k < L; ++k) dim *= N;
  for (std::int64_t i = 0; i < dim; ++i)
    if ((i / sa) % N == 0 && (i / sb) % N == 0) lay.rest.push_back(i);
  return lay;
}

template <class Scalar>
class Sweeper {
 public:
  Sweeper(const KrausSet& set) : S_(superoperator<Scalar>(set.local)) {
    for (int j = 0; j + 1 < set.L; ++j) layouts_.push_back(bond_layout(set.N, set.L, j));
  }

  /// One pass over bonds j = 0 .. L-2, in that order.
  void sweep(Mat<Scalar>& rho) const {
    const auto d = static_cast<Eigen::Index>(layouts_.front().offset.size());
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v(d * d), w(d * d);
    for (const auto& lay : layouts_) {
      for (std::int64_t r : lay.rest)
        for (std::int64_t c : lay.rest) {
          for (Eigen::Index a = 0; a < d; ++a)
            for (Eigen::Index b = 0; b < d; ++b) v(a * d + b) = rho(r + lay.offset[a], c + lay.offset[b]);
          w.noalias() = S_ * v;
          for (Eigen::Index a = 0; a < d; ++a)
            for (Eigen::Index b = 0; b < d; ++b) rho(r + lay.offset[a], c + lay.offset[b]) = w(a * d + b);
        }
    }
  }

 private:
  Mat<Scalar> S_;
  std::vector<BondLayout> layouts_;
};

}  // namespace detail

struct FixedPointOptions {
  double tol = 1e-12;
  std::int64_t max_sweeps = 1'000'000;
  std::int64_t stall_window = 10'000;
  double stall_ratio = 0.9999;
};

struct FixedPointResult {
  DenseState state;
  std::int64_t sweeps = 0;
  double defect = 0;
};

/// Observer called after every sweep with (sweep, state matrix, defect).
using SweepObserver = std::function<void(std::int64_t, const CMatrix&, double)>;

namespace detail {

template <class Scalar>
FixedPointResult iterate(const KrausSet& set, const DenseState& rho0, const FixedPointOptions& opt,
                         const SweepObserver& observer) {
  const Sweeper<Scalar> sweeper(set);
  Mat<Scalar> rho;
  if constexpr (std::is_same_v<Scalar, double>) rho = rho0.matrix.real();
  else rho = rho0.matrix;
  Mat<Scalar> prev;
  double last_defect = std::numeric_limits<double>::infinity();
  std::int64_t slow = 0;
  for (std::int64_t t = 1; t <= opt.max_sweeps; ++t) {
    prev = rho;
    sweeper.sweep(rho);
    const double defect = (rho - prev).norm();
    if (observer) observer(t, rho.template cast<Complex>(), defect);
    if (defect <= opt.tol) {
      FixedPointResult r;
      r.state = DenseState{rho.template cast<Complex>(), rho0.site_dims};
      r.sweeps = t;
      r.defect = defect;
      return r;
    }
    slow = defect > opt.stall_ratio * last_defect ? slow + 1 : 0;
    if (slow >= opt.stall_window)
      throw Error(Errc::no_convergence, "defect stalled at " + std::to_string(defect) + " after " +
                                            std::to_string(t) + " sweeps");
    last_defect = defect;
  }
  throw Error(Errc::no_convergence, "no convergence within " + std::to_string(opt.max_sweeps) + " sweeps");
}

}  // namespace detail

inline FixedPointResult channel_fixed_point_run(const KrausSet& set, const DenseState& rho0,
                                                const FixedPointOptions& opt = {},
                                                const SweepObserver& observer = {}) {
  if (rho0.L() != set.L || rho0.N() != set.N) throw Error(Errc::domain_error, "state and Kraus set disagree");
  rho0.validate();
  bool real = rho0.is_real();
  for (const auto& k : set.local) real = real && k.imag().cwiseAbs().maxCoeff() == 0.0;
  return real ? detail::iterate<double>(set, rho0, opt, observer)
              : detail::iterate<Complex>(set, rho0, opt, observer);
}

inline DenseState channel_fixed_point(const KrausSet& set, const DenseState& rho0, double tol = 1e-12,
                                      std::int64_t max_sweeps = 1'000'000) {
  FixedPointOptions opt;
  opt.tol = tol;
  opt.max_sweeps = max_sweeps;
  return channel_fixed_point_run(set, rho0, opt).state;
}

// ---------------------------------------------------------------------------
// Dense entanglement

namespace detail {

inline void check_cut(const DenseState& rho, int cut) {
  if (cut <= 0 || cut >= rho.L()) throw Error(Errc::bad_cut, "cut must satisfy 0 < L_A < L");
}

inline std::int64_t block_dim(int N, int sites) {
  std::int64_t d = 1;
  for (int i = 0; i < sites; ++i) d *= N;
  return d;
}

}  // namespace detail

/// rho^{T_B}: transpose over sites cut .. L-1.
inline CMatrix partial_transpose(const DenseState& rho, int cut) {
  detail::check_cut(rho, cut);
  const std::int64_t dB = detail::block_dim(rho.N(), rho.L() - cut);
  const std::int64_t dA = detail::block_dim(rho.N(), cut);
  CMatrix pt(rho.matrix.rows(), rho.matrix.cols());
  for (std::int64_t iA = 0; iA < dA; ++iA)
    for (std::int64_t jA = 0; jA < dA; ++jA)
      for (std::int64_t iB = 0; iB < dB; ++iB)
        for (std::int64_t jB = 0; jB < dB; ++jB)
          pt(iA * dB + iB, jA * dB + jB) = rho.matrix(iA * dB + jB, jA * dB + iB);
  return pt;
}

inline constexpr double kEigenFloor = 1e-12;

/// Spectra needed for every negativity: eigenvalues of rho^{T_B} and rho.
struct NegativitySpectrum {
  std::vector<double> pt;
  std::vector<double> rho;
};

namespace detail {

inline std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  Eigen::VectorXd ev;
  if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(m.real(), Eigen::EigenvaluesOnly);
    ev = es.eigenvalues();
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    ev = es.eigenvalues();
  }
  std::vector<double> out;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::fabs(ev(i)) > kEigenFloor) out.push_back(ev(i));
  return out;
}

inline double power_sum(const std::vector<double>& v, double n, bool absolute) {
  long double s = 0;
  for (double x : v) s += std::pow(static_cast<long double>(absolute ? std::fabs(x) : x), static_cast<long double>(n));
  return static_cast<double>(s);
}

}  // namespace detail

inline NegativitySpectrum negativity_spectrum(const DenseState& rho, int cut) {
  return {detail::hermitian_eigenvalues(partial_transpose(rho, cut)), detail::hermitian_eigenvalues(rho.matrix)};
}

inline double log_negativity_from(const NegativitySpectrum& s) {
  return std::log(detail::power_sum(s.pt, 1, true));
}

inline double renyi_negativity_from(const NegativitySpectrum& s, int n) {
  if (n < 1) throw Error(Errc::domain_error, "Renyi order must be >= 1");
  return -std::log(detail::power_sum(s.pt, n, false) / detail::power_sum(s.rho, n, false));
}

inline double generalized_renyi_from(const NegativitySpectrum& s, double n) {
  if (!(n > 0) || std::fabs(n - 2) < 1e-6) throw Error(Errc::n_at_two, "order n = 2 is excluded");
  return std::log(detail::power_sum(s.pt, n, true) / detail::power_sum(s.rho, n, true)) / (2 - n);
}

inline double dense_log_negativity(const DenseState& rho, int cut) {
  detail::check_cut(rho, cut);
  return std::log(detail::power_sum(detail::hermitian_eigenvalues(partial_transpose(rho, cut)), 1, true));
}

inline double dense_renyi_negativity(const DenseState& rho, int cut, int n) {
  return renyi_negativity_from(negativity_spectrum(rho, cut), n);
}

inline double dense_generalized_renyi(const DenseState& rho, int cut, double n) {
  return generalized_renyi_from(negativity_spectrum(rho, cut), n);
}

/// Entropy of the Frobenius-normalized |rho>> across (A A' | B B').
inline double dense_ose(const DenseState& rho, int cut) {
  detail::check_cut(rho, cut);
  const std::int64_t dB = detail::block_dim(rho.N(), rho.L() - cut);
  const std::int64_t dA = detail::block_dim(rho.N(), cut);
  CMatrix M(dA * dA, dB * dB);
  for (std::int64_t iA = 0; iA < dA; ++iA)
    for (std::int64_t jA = 0; jA < dA; ++jA)
      for (std::int64_t iB = 0; iB < dB; ++iB)
        for (std::int64_t jB = 0; jB < dB; ++jB)
          M(iA * dA + jA, iB * dB + jB) = rho.matrix(iA * dB + iB, jA * dB + jB);
  M /= M.norm();
  const CMatrix G = M.rows() <= M.cols() ? CMatrix(M * M.adjoint()) : CMatrix(M.adjoint() * M);
  long double s = 0;
  for (double p : detail::hermitian_eigenvalues(G))
    if (p > 0) s -= static_cast<long double>(p) * std::log(static_cast<long double>(p));
  return static_cast<double>(s);
}

// ---------------------------------------------------------------------------
// Trajectories

struct TrajectoryRow {
  std::int64_t sweep = 0;
  double E_N = 0;
  double R3 = 0;
  double S_OP = 0;
  double defect = 0;
};

/// E_N, R_3 and S_OP after every sweep until convergence.
inline std::vector<TrajectoryRow> trajectory(const KrausSet& set, const DenseState& rho0, int cut,
                                             const FixedPointOptions& opt = {}) {
  std::vector<TrajectoryRow> rows;
  channel_fixed_point_run(set, rho0, opt, [&](std::int64_t t, const CMatrix& m, double defect) {
    const DenseState s{m, rho0.site_dims};
    const auto spec = negativity_spectrum(s, cut);
    rows.push_back({t, log_negativity_from(spec), renyi_negativity_from(spec, 3), dense_ose(s, cut), defect});
  });
  return rows;
}

// ---------------------------------------------------------------------------
// PF census

/// Stack-reduces every product state and counts words per residual pattern.
inline std::map<std::vector<int>, std::int64_t> pf_pattern_census(int N, int L) {
  hilbert_dimension(N, L, 10'000'000);
  std::map<std::vector<int>, std::int64_t> census;
  std::vector<int> word(L, 0), stack;
  for (;;) {
    stack.clear();
    for (int c : word) {
      if (!stack.empty() && stack.back() == c) stack.pop_back();
      else stack.push_back(c);
    }
    ++census[stack];
    int i = L - 1;
    while (i >= 0 && ++word[i] == N) word[i--] = 0;
    if (i < 0) break;
  }
  return census;
}

}  // namespace symstat
