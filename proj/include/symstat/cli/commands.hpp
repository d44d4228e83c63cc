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

// Subcommand drivers. Each writes one CSV table or one JSON document.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "symstat/asymptotics.hpp"
#include "symstat/cli/config.hpp"
#include "symstat/entanglement.hpp"
#include "symstat/oracle.hpp"
#include "symstat/su2cg.hpp"

namespace symstat::cli {

using Json = nlohmann::ordered_json;

/// 12 significant digits; negative zero prints as 0.
inline std::string fmt(double x) {
  if (!std::isfinite(x)) throw Error(Errc::domain_error, "non-finite value in output");
  if (x == 0) x = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline double round12(double x) { return std::stod(fmt(x)); }

// ---------------------------------------------------------------------------
// Quantities

struct QuantityKey {
  enum Kind { EN, R, RT, SOP } kind = EN;
  double n = 0;

  auto operator<=>(const QuantityKey&) const = default;

  std::string name() const {
    switch (kind) {
      case EN: return "E_N";
      case R: return "R_" + std::to_string(static_cast<int>(n));
      case RT: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", n);
        return std::string("Rtilde_") + buf;
      }
      case SOP: return "S_OP";
    }
    return "?";
  }
};

/// Tokens en, r<k>, rt (one key per n-grid entry) and sop, in canonical order.
inline std::vector<QuantityKey> parse_quantities(const std::vector<std::string>& tokens,
                                                 const std::vector<double>& n_grid) {
  std::set<QuantityKey> keys;
  for (const auto& t : tokens) {
    if (t == "en") {
      keys.insert({QuantityKey::EN, 0});
    } else if (t == "sop") {
      keys.insert({QuantityKey::SOP, 0});
    } else if (t == "rt") {
      if (n_grid.empty()) throw Error(Errc::config_error, "quantity rt needs an n grid (--n)");
      for (double n : n_grid) {
        check_tilde_order(n);
        keys.insert({QuantityKey::RT, n});
      }
    } else if (t.size() > 1 && t[0] == 'r' && t.find_first_not_of("0123456789", 1) == std::string::npos) {
      const int n = std::stoi(t.substr(1));
      if (n < 1) throw Error(Errc::config_error, "Renyi order must be >= 1");
      keys.insert({QuantityKey::R, static_cast<double>(n)});
    } else {
      throw Error(Errc::config_error, "unknown quantity '" + t + "'");
    }
  }
  if (keys.empty()) throw Error(Errc::config_error, "no quantities requested");
  return {keys.begin(), keys.end()};
}

inline EntanglementRequest request_for(const std::vector<QuantityKey>& keys) {
  EntanglementRequest req{false, {}, {}, false};
  for (const auto& k : keys) switch (k.kind) {
      case QuantityKey::EN: req.log_negativity = true; break;
      case QuantityKey::R: req.renyi.insert(static_cast<int>(k.n)); break;
      case QuantityKey::RT: req.renyi_tilde.insert(k.n); break;
      case QuantityKey::SOP: req.ose = true; break;
    }
  return req;
}

inline double report_value(const EntanglementReport& r, const QuantityKey& k) {
  switch (k.kind) {
    case QuantityKey::EN: return *r.E_N;
    case QuantityKey::R: return r.R.at(static_cast<int>(k.n));
    case QuantityKey::RT: return r.R_tilde.at(k.n);
    case QuantityKey::SOP: return *r.S_OP;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Shared context

struct Context {
  RunConfig cfg;
  Family family = Family::SUN;
  int N = 2;
  Backend backend = Backend::automatic;
  std::string format;
  double unit = 1;  // divisor applied to entropic values on output

  explicit Context(const RunConfig& c) : cfg(c) {
    std::tie(family, N) = resolve_family(c.family, c.N);
    if (family == Family::U1) N = 2;
    backend = parse_backend(c.backend);
    format = resolved_format(c);
    unit = c.log2 ? std::log(2.0) : 1.0;
    if (c.jobs < 1) throw Error(Errc::config_error, "jobs must be >= 1");
  }

  std::string family_label() const { return family_name(family, N); }

  CommutantSpec spec(std::int64_t L) const {
    return cfg.L_A ? CommutantSpec::cut(family, N, L, *cfg.L_A) : CommutantSpec::half_chain(family, N, L);
  }

  std::int64_t single_L() const {
    if (!cfg.L) throw Error(Errc::config_error, command_name(cfg.command) + " needs --L");
    return *cfg.L;
  }

  std::vector<std::int64_t> L_values(const std::optional<LRange>& fallback = std::nullopt) const {
    if (cfg.range) return cfg.range->values();
    if (cfg.L) return {*cfg.L};
    if (fallback) return fallback->values();
    throw Error(Errc::config_error, command_name(cfg.command) + " needs --L or --range");
  }

  double out(double x) const { return round12(x / unit); }
  std::string units() const { return cfg.log2 ? "bits" : "nats"; }

  Json spec_json(const CommutantSpec& s) const {
    return Json{{"family", family_label()}, {"N", s.N}, {"L", s.L}, {"L_A", s.L_A}, {"L_B", s.L_B}};
  }
};

/// Runs f(i) for i in [0, n) on up to `jobs` threads; the first error wins.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f) {
  const int workers = static_cast<int>(std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex m;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(m);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Closed-form values at one point. SU(N >= 3) half-chain R_3 alone takes
/// the partition-free path.
inline std::vector<double> closed_form_values(const Context& ctx, const CommutantSpec& spec,
                                              const std::vector<QuantityKey>& keys) {
  if (spec.family == Family::SUN && spec.N >= 3 && spec.L_A == spec.L_B && keys.size() == 1 &&
      keys[0].kind == QuantityKey::R && keys[0].n == 3)
    return {sun_half_chain_r3(spec.N, spec.L)};
  const auto rep = evaluate(spec, resolve_backend(ctx.backend, spec.L), request_for(keys));
  std::vector<double> v;
  for (const auto& k : keys) v.push_back(report_value(rep, k));
  return v;
}

inline void write_csv(std::ostream& os, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << '\n';
  }
}

inline void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// compute

inline int cmd_compute(const RunConfig& cfg, std::ostream& os) {
  const auto t0 = Clock::now();
  const Context ctx(cfg);
  const auto spec = ctx.spec(ctx.single_L());
  const auto keys = parse_quantities(resolved_quantities(cfg), cfg.n_grid);
  const auto rep = evaluate(spec, resolve_backend(ctx.backend, spec.L), request_for(keys));
  if (ctx.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& k : keys) rows.push_back({k.name(), fmt(ctx.out(report_value(rep, k)))});
    write_csv(os, {"quantity", "value"}, rows);
    return 0;
  }
  Json j;
  j["command"] = "compute";
  j["spec"] = ctx.spec_json(spec);
  j["mode"] = mode_name(rep.mode);
  j["units"] = ctx.units();
  j["sector_count"] = rep.sector_count;
  j["log_D0"] = ctx.out(rep.log_D0);
  Json q = Json::object();
  for (const auto& k : keys) q[k.name()] = ctx.out(report_value(rep, k));
  j["quantities"] = q;
  Json b;
  b["log_dim_commutant_min"] = ctx.out(static_cast<double>(rep.dim_C_min.log_value()));
  b["E_N"] = ctx.out(rep.bounds.E_N);
  b["S_OP"] = ctx.out(rep.bounds.S_OP);
  Json rt = Json::object();
  for (const auto& [n, r] : rep.bounds.R_tilde)
    rt[QuantityKey{QuantityKey::RT, n}.name()] = Json{{"value", ctx.out(r.value)},
                                                      {"commutant_form", ctx.out(r.commutant_form)},
                                                      {"max_d_form", ctx.out(r.max_d_form)},
                                                      {"max_d_tighter", r.max_d_tighter}};
  b["R_tilde"] = rt;
  j["bounds"] = b;
  if (cfg.timing) j["wall_time_s"] = round12(seconds_since(t0));
  write_json(os, j);
  return 0;
}

// ---------------------------------------------------------------------------
// scan

struct ScanPoint {
  CommutantSpec spec;
  std::vector<double> values;
};

/// Admissible points of the L list, evaluated in parallel, in L order.
inline std::vector<ScanPoint> scan_points(const Context& ctx, const std::vector<QuantityKey>& keys,
                                          const std::vector<std::int64_t>& Ls, std::vector<std::int64_t>* skipped) {
  std::vector<ScanPoint> pts;
  for (auto L : Ls) {
    const auto s = ctx.spec(L);
    try {
      check_admissible(s);
      pts.push_back({s, {}});
    } catch (const Error& e) {
      if (e.code() != Errc::inadmissible) throw;
      if (skipped) skipped->push_back(L);
    }
  }
  if (pts.empty()) throw Error(Errc::empty_scan, "no admissible L in the requested range");
  parallel_for(pts.size(), ctx.cfg.jobs, [&](std::size_t i) { pts[i].values = closed_form_values(ctx, pts[i].spec, keys); });
  return pts;
}

inline int cmd_scan(const RunConfig& cfg, std::ostream& os) {
  const auto t0 = Clock::now();
  const Context ctx(cfg);
  const auto keys = parse_quantities(resolved_quantities(cfg), cfg.n_grid);
  std::vector<std::int64_t> skipped;
  const auto pts = scan_points(ctx, keys, ctx.L_values(), &skipped);
  if (ctx.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : pts)
      for (std::size_t k = 0; k < keys.size(); ++k)
        rows.push_back({std::to_string(p.spec.L), keys[k].name(), fmt(ctx.out(p.values[k]))});
    write_csv(os, {"L", "quantity", "value"}, rows);
    return 0;
  }
  Json j;
  j["command"] = "scan";
  j["family"] = ctx.family_label();
  j["N"] = ctx.N;
  j["units"] = ctx.units();
  Json rows = Json::array();
  for (const auto& p : pts)
    for (std::size_t k = 0; k < keys.size(); ++k)
      rows.push_back(Json{{"L", p.spec.L}, {"L_A", p.spec.L_A}, {"quantity", keys[k].name()}, {"value", ctx.out(p.values[k])}});
  j["rows"] = rows;
  j["skipped"] = skipped;
  if (cfg.timing) j["wall_time_s"] = round12(seconds_since(t0));
  write_json(os, j);
  return 0;
}

// ---------------------------------------------------------------------------
// asymptote

inline Quantity law_quantity(const QuantityKey& k) {
  switch (k.kind) {
    case QuantityKey::EN: return Quantity::EN;
    case QuantityKey::RT: return Quantity::Rtilde;
    case QuantityKey::SOP: return Quantity::SOP;
    case QuantityKey::R:
      if (k.n == 3) return Quantity::R3;
      break;
  }
  throw Error(Errc::unsupported, "no scaling law for " + k.name());
}

inline int cmd_asymptote(const RunConfig& cfg, std::ostream& os) {
  const auto t0 = Clock::now();
  const Context ctx(cfg);
  const auto keys = parse_quantities(resolved_quantities(cfg), cfg.n_grid);
  const auto pts = scan_points(ctx, keys, ctx.L_values(LRange{64, 4096, 2, true}), nullptr);
  FitOptions fo;
  fo.min_L = cfg.fit_min_L;
  if (cfg.fit_max_L) fo.max_L = *cfg.fit_max_L;
  struct Row {
    QuantityKey key;
    ScalingLaw law;
    ScalingForm form;
    FitResult fit;
  };
  std::vector<Row> rows;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const auto law = predicted_law(ctx.family, ctx.N, law_quantity(keys[k]), keys[k].n);
    const ScalingForm form = cfg.form ? parse_form(*cfg.form) : law.form;
    std::vector<std::pair<double, double>> series;
    for (const auto& p : pts) series.emplace_back(static_cast<double>(p.spec.L), p.values[k]);
    rows.push_back({keys[k], law, form, fit_scaling(series, form, fo)});
  }
  const auto opt = [&](const std::optional<double>& v) { return v ? fmt(ctx.out(*v)) : std::string(); };
  if (ctx.format == "csv") {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : rows)
      out.push_back({r.key.name(), form_name(r.form), form_name(r.law.form), kind_name(r.law.kind),
                     opt(r.law.coefficient), r.law.bracket ? fmt(ctx.out(r.law.bracket->first)) : "",
                     r.law.bracket ? fmt(ctx.out(r.law.bracket->second)) : "", fmt(ctx.out(r.fit.slope)),
                     fmt(ctx.out(r.fit.intercept)), opt(r.fit.log_coefficient), fmt(ctx.out(r.fit.residual)),
                     fmt(r.fit.window.first), fmt(r.fit.window.second), std::to_string(r.fit.points)});
    write_csv(os,
              {"quantity", "fit_form", "law_form", "law_kind", "predicted", "bracket_low", "bracket_high", "slope",
               "intercept", "log_coefficient", "residual", "L_min", "L_max", "points"},
              out);
    return 0;
  }
  Json j;
  j["command"] = "asymptote";
  j["family"] = ctx.family_label();
  j["N"] = ctx.N;
  j["units"] = ctx.units();
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json law{{"form", form_name(r.law.form)}, {"kind", kind_name(r.law.kind)}};
    law["coefficient"] = r.law.coefficient ? Json(ctx.out(*r.law.coefficient)) : Json(nullptr);
    law["offset"] = r.law.offset ? Json(ctx.out(*r.law.offset)) : Json(nullptr);
    law["bracket"] = r.law.bracket ? Json::array({ctx.out(r.law.bracket->first), ctx.out(r.law.bracket->second)})
                                   : Json(nullptr);
    law["validity"] = r.law.validity;
    Json fit{{"form", form_name(r.form)},
             {"slope", ctx.out(r.fit.slope)},
             {"intercept", ctx.out(r.fit.intercept)},
             {"log_coefficient", r.fit.log_coefficient ? Json(ctx.out(*r.fit.log_coefficient)) : Json(nullptr)},
             {"residual", ctx.out(r.fit.residual)},
             {"window", Json::array({r.fit.window.first, r.fit.window.second})},
             {"points", r.fit.points}};
    arr.push_back(Json{{"quantity", r.key.name()}, {"predicted", law}, {"fitted", fit}});
  }
  j["fits"] = arr;
  if (cfg.timing) j["wall_time_s"] = round12(seconds_since(t0));
  write_json(os, j);
  return 0;
}

// ---------------------------------------------------------------------------
// oracle

/// Cuts checked by the oracle: the requested one, else every admissible cut.
inline std::vector<std::int64_t> oracle_cuts(const Context& ctx, std::int64_t L) {
  if (ctx.cfg.L_A) return {*ctx.cfg.L_A};
  std::vector<std::int64_t> cuts;
  for (std::int64_t a = 1; a < L; ++a) {
    try {
      check_admissible(CommutantSpec::cut(ctx.family, ctx.N, L, a));
      cuts.push_back(a);
    } catch (const Error&) {
    }
  }
  if (cuts.empty()) check_admissible(ctx.spec(L));
  return cuts;
}

inline double dense_value(const NegativitySpectrum& s, const DenseState& rho, int cut, const QuantityKey& k) {
  switch (k.kind) {
    case QuantityKey::EN: return log_negativity_from(s);
    case QuantityKey::R: return renyi_negativity_from(s, static_cast<int>(k.n));
    case QuantityKey::RT: return generalized_renyi_from(s, k.n);
    case QuantityKey::SOP: return dense_ose(rho, cut);
  }
  return 0;
}

inline int cmd_oracle(const RunConfig& cfg, std::ostream& os) {
  const auto t0 = Clock::now();
  const Context ctx(cfg);
  const auto L = ctx.single_L();
  const auto keys = parse_quantities(resolved_quantities(cfg), cfg.n_grid);
  const auto cuts = oracle_cuts(ctx, L);
  const auto kraus = build_kraus(ctx.family, ctx.N, static_cast<int>(L));
  FixedPointOptions opt;
  opt.tol = cfg.tol;
  opt.max_sweeps = cfg.max_sweeps;
  const auto fp = channel_fixed_point_run(kraus, singlet_product_state(ctx.family, ctx.N, static_cast<int>(L)), opt);
  struct Row {
    std::int64_t cut;
    QuantityKey key;
    double closed, dense;
  };
  std::vector<Row> rows;
  bool pass = true;
  for (auto cut : cuts) {
    const auto spec = CommutantSpec::cut(ctx.family, ctx.N, L, cut);
    const auto closed = closed_form_values(ctx, spec, keys);
    const auto s = negativity_spectrum(fp.state, static_cast<int>(cut));
    for (std::size_t k = 0; k < keys.size(); ++k) {
      rows.push_back({cut, keys[k], closed[k], dense_value(s, fp.state, static_cast<int>(cut), keys[k])});
      pass = pass && std::fabs(rows.back().closed - rows.back().dense) <= cfg.verify_tol;
    }
  }
  const auto status = [&](const Row& r) { return std::fabs(r.closed - r.dense) <= cfg.verify_tol ? "PASS" : "FAIL"; };
  if (ctx.format == "csv") {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : rows)
      out.push_back({std::to_string(r.cut), r.key.name(), fmt(ctx.out(r.closed)), fmt(ctx.out(r.dense)),
                     fmt(std::fabs(r.closed - r.dense) / ctx.unit), status(r)});
    write_csv(os, {"L_A", "quantity", "closed_form", "dense", "abs_diff", "status"}, out);
  } else {
    Json j;
    j["command"] = "oracle";
    j["family"] = ctx.family_label();
    j["N"] = ctx.N;
    j["L"] = L;
    j["units"] = ctx.units();
    j["sweeps"] = fp.sweeps;
    j["defect"] = round12(fp.defect);
    j["tolerance"] = cfg.verify_tol;
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back(Json{{"L_A", r.cut},
                         {"quantity", r.key.name()},
                         {"closed_form", ctx.out(r.closed)},
                         {"dense", ctx.out(r.dense)},
                         {"abs_diff", round12(std::fabs(r.closed - r.dense) / ctx.unit)},
                         {"status", status(r)}});
    j["checks"] = arr;
    j["pass"] = pass;
    if (cfg.timing) j["wall_time_s"] = round12(seconds_since(t0));
    write_json(os, j);
  }
  if (!pass) throw Error(Errc::verification_failure, "dense and closed forms differ beyond tolerance");
  return 0;
}

// ---------------------------------------------------------------------------
// haar

struct HaarCurve {
  std::int64_t L = 0;
  std::vector<std::int64_t> lambda_max;
  std::vector<HaarResult> results;
};

struct HaarCrossing {
  std::int64_t L = 0, L_next = 0;
  double ratio = 0;
  double mean = 0;
};

inline std::vector<HaarCurve> haar_curves(const std::vector<std::int64_t>& Ls, int samples, std::uint64_t seed,
                                          int jobs) {
  std::vector<HaarCurve> curves;
  for (auto L : Ls) {
    if (L % 2) throw Error(Errc::inadmissible, "the Haar ensemble needs even L");
    HaarCurve c{L, {}, {}};
    for (std::int64_t lm = 0; 2 * lm <= L; ++lm) {
      c.lambda_max.push_back(lm);
      c.results.push_back(haar_average_negativity({L, 0, lm, samples, seed}, jobs));
    }
    curves.push_back(std::move(c));
  }
  return curves;
}

/// Crossings of consecutive curves, both resampled on a common ratio grid.
inline std::vector<HaarCrossing> haar_crossings(const std::vector<HaarCurve>& curves, int grid_points = 401) {
  std::vector<double> grid;
  for (int i = 0; i < grid_points; ++i) grid.push_back(0.5 * i / (grid_points - 1));
  std::vector<HaarCrossing> out;
  for (std::size_t c = 0; c + 1 < curves.size(); ++c) {
    auto curve = [&](const HaarCurve& h) {
      std::vector<double> x, y;
      for (std::size_t i = 0; i < h.lambda_max.size(); ++i) {
        x.push_back(static_cast<double>(h.lambda_max[i]) / static_cast<double>(h.L));
        y.push_back(h.results[i].mean);
      }
      return resample(x, y, grid);
    };
    const auto a = curve(curves[c]), b = curve(curves[c + 1]);
    const double r = crossing_point(grid, a, b);
    const double mean = resample(grid, a, {r}).front();
    out.push_back({curves[c].L, curves[c + 1].L, r, mean});
  }
  return out;
}

inline int cmd_haar(const RunConfig& cfg, std::ostream& os) {
  const auto t0 = Clock::now();
  const Context ctx(cfg);
  if (ctx.family != Family::SUN || ctx.N != 2) throw Error(Errc::unsupported, "the Haar ensemble is SU(2) only");
  if (cfg.L_A) throw Error(Errc::unsupported, "the Haar ensemble uses the half chain");
  const auto curves = haar_curves(ctx.L_values(), cfg.samples, cfg.seed, cfg.jobs);
  const auto crossings = haar_crossings(curves);
  if (ctx.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : curves)
      for (std::size_t i = 0; i < c.lambda_max.size(); ++i)
        rows.push_back({"point", std::to_string(c.L), "0", std::to_string(c.lambda_max[i]),
                        fmt(static_cast<double>(c.lambda_max[i]) / c.L), fmt(ctx.out(c.results[i].mean)),
                        fmt(ctx.out(c.results[i].stderr_)), std::to_string(c.results[i].samples),
                        std::to_string(cfg.seed)});
    for (const auto& x : crossings)
      rows.push_back({"crossing", std::to_string(x.L), std::to_string(x.L_next), fmt(x.ratio * x.L), fmt(x.ratio),
                      fmt(ctx.out(x.mean)), "0", std::to_string(cfg.samples), std::to_string(cfg.seed)});
    write_csv(os, {"kind", "L", "L_next", "lambda_max", "ratio", "mean", "stderr", "samples", "seed"}, rows);
    return 0;
  }
  Json j;
  j["command"] = "haar";
  j["units"] = ctx.units();
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  Json pts = Json::array();
  for (const auto& c : curves)
    for (std::size_t i = 0; i < c.lambda_max.size(); ++i)
      pts.push_back(Json{{"L", c.L},
                         {"lambda_max", c.lambda_max[i]},
                         {"ratio", round12(static_cast<double>(c.lambda_max[i]) / c.L)},
                         {"mean", ctx.out(c.results[i].mean)},
                         {"stderr", ctx.out(c.results[i].stderr_)},
                         {"samples", c.results[i].samples}});
  j["points"] = pts;
  Json xs = Json::array();
  for (const auto& x : crossings)
    xs.push_back(Json{{"L", x.L}, {"L_next", x.L_next}, {"ratio", round12(x.ratio)}, {"mean", ctx.out(x.mean)}});
  j["crossings"] = xs;
  if (cfg.timing) j["wall_time_s"] = round12(seconds_since(t0));
  write_json(os, j);
  return 0;
}

// ---------------------------------------------------------------------------
// dynamics

inline int cmd_dynamics(const RunConfig& cfg, std::ostream& os) {
  const auto t0 = Clock::now();
  const Context ctx(cfg);
  const auto L = ctx.single_L();
  const auto spec = ctx.spec(L);
  check_admissible(spec);
  const auto kraus = build_kraus(ctx.family, ctx.N, static_cast<int>(L));
  FixedPointOptions opt;
  opt.tol = cfg.tol;
  opt.max_sweeps = cfg.max_sweeps;
  const auto rows = trajectory(kraus, singlet_product_state(ctx.family, ctx.N, static_cast<int>(L)),
                               static_cast<int>(spec.L_A), opt);
  if (ctx.format == "csv") {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : rows)
      out.push_back({std::to_string(r.sweep), fmt(ctx.out(r.E_N)), fmt(ctx.out(r.R3)), fmt(ctx.out(r.S_OP)),
                     fmt(r.defect)});
    write_csv(os, {"sweep", "E_N", "R3", "S_OP", "defect"}, out);
    return 0;
  }
  const auto rep = evaluate(spec, resolve_backend(ctx.backend, L), {true, {3}, {}, true});
  Json j;
  j["command"] = "dynamics";
  j["spec"] = ctx.spec_json(spec);
  j["units"] = ctx.units();
  j["closed_form"] = Json{{"E_N", ctx.out(*rep.E_N)}, {"R3", ctx.out(rep.R.at(3))}, {"S_OP", ctx.out(*rep.S_OP)}};
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back(Json{{"sweep", r.sweep},
                       {"E_N", ctx.out(r.E_N)},
                       {"R3", ctx.out(r.R3)},
                       {"S_OP", ctx.out(r.S_OP)},
                       {"defect", round12(r.defect)}});
  j["trajectory"] = arr;
  if (cfg.timing) j["wall_time_s"] = round12(seconds_since(t0));
  write_json(os, j);
  return 0;
}

inline int run(const RunConfig& cfg, std::ostream& os) {
  switch (cfg.command) {
    case Command::compute: return cmd_compute(cfg, os);
    case Command::scan: return cmd_scan(cfg, os);
    case Command::asymptote: return cmd_asymptote(cfg, os);
    case Command::oracle: return cmd_oracle(cfg, os);
    case Command::haar: return cmd_haar(cfg, os);
    case Command::dynamics: return cmd_dynamics(cfg, os);
  }
  return 1;
}

}  // namespace symstat::cli
