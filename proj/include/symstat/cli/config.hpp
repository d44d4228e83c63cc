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

// Run configuration shared by every subcommand, with its JSON form.

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symstat/commutants.hpp"
#include "symstat/error.hpp"

namespace symstat::cli {

enum class Command { compute, scan, asymptote, oracle, haar, dynamics };

inline std::string command_name(Command c) {
  switch (c) {
    case Command::compute: return "compute";
    case Command::scan: return "scan";
    case Command::asymptote: return "asymptote";
    case Command::oracle: return "oracle";
    case Command::haar: return "haar";
    case Command::dynamics: return "dynamics";
  }
  return "?";
}

inline Command parse_command(const std::string& s) {
  for (Command c : {Command::compute, Command::scan, Command::asymptote, Command::oracle, Command::haar,
                    Command::dynamics})
    if (command_name(c) == s) return c;
  throw Error(Errc::config_error, "unknown subcommand '" + s + "'");
}

/// start:stop[:+k | :xk]. Linear steps add k, geometric steps multiply by k.
struct LRange {
  std::int64_t start = 0;
  std::int64_t stop = 0;
  std::int64_t step = 1;
  bool geometric = false;

  bool operator==(const LRange&) const = default;

  std::vector<std::int64_t> values() const {
    if (start < 1 || stop < start) throw Error(Errc::config_error, "range needs 1 <= start <= stop");
    if (step < (geometric ? 2 : 1)) throw Error(Errc::config_error, "range step too small");
    std::vector<std::int64_t> out;
    for (std::int64_t L = start; L <= stop; L = geometric ? L * step : L + step) out.push_back(L);
    return out;
  }

  std::string to_string() const {
    return std::to_string(start) + ":" + std::to_string(stop) + ":" + (geometric ? "x" : "+") + std::to_string(step);
  }

  static LRange parse(const std::string& s) {
    LRange r;
    const auto c1 = s.find(':');
    if (c1 == std::string::npos) throw Error(Errc::config_error, "range '" + s + "' needs start:stop");
    const auto c2 = s.find(':', c1 + 1);
    try {
      r.start = std::stoll(s.substr(0, c1));
      r.stop = std::stoll(s.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1));
      if (c2 != std::string::npos) {
        std::string step = s.substr(c2 + 1);
        if (!step.empty() && (step[0] == 'x' || step[0] == '*')) {
          r.geometric = true;
          step = step.substr(1);
        } else if (!step.empty() && step[0] == '+') {
          step = step.substr(1);
        }
        r.step = std::stoll(step);
      }
    } catch (const std::logic_error&) {
      throw Error(Errc::config_error, "cannot parse range '" + s + "'");
    }
    r.values();
    return r;
  }
};

struct RunConfig {
  Command command = Command::compute;
  std::string family = "su2";
  int N = 2;
  std::optional<std::int64_t> L;
  std::optional<LRange> range;
  std::optional<std::int64_t> L_A;  // unset: half chain
  std::optional<std::vector<std::string>> quantities;
  std::vector<double> n_grid;
  std::optional<std::string> format;
  std::string output;  // empty: stdout
  std::uint64_t seed = 0;
  std::string backend = "auto";
  double tol = 1e-12;
  std::int64_t max_sweeps = 1'000'000;
  double verify_tol = 1e-8;
  int samples = 100;
  int jobs = 1;
  std::optional<std::string> form;
  double fit_min_L = 64;
  std::optional<double> fit_max_L;
  bool log2 = false;
  bool timing = false;

  bool operator==(const RunConfig&) const = default;
};

/// Accepts the family names of parse_family, optionally with N appended
/// (tl3, pf4, su3).
inline std::pair<Family, int> resolve_family(const std::string& name, int N) {
  std::size_t digits = name.size();
  while (digits > 0 && std::isdigit(static_cast<unsigned char>(name[digits - 1]))) --digits;
  if (digits < name.size() && name != "u1" && name != "su2") {
    const int n = std::stoi(name.substr(digits));
    std::string base = name.substr(0, digits);
    if (base == "su") base = "sun";
    int pinned = n;
    const Family f = parse_family(base, &pinned);
    return {f, n};
  }
  const Family f = parse_family(name, &N);
  return {f, N};
}

inline Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::exact;
  if (s == "log" || s == "log_domain") return Backend::log_domain;
  if (s == "auto") return Backend::automatic;
  throw Error(Errc::config_error, "unknown backend '" + s + "'");
}

inline std::string resolved_format(const RunConfig& c) {
  if (c.format) {
    if (*c.format != "csv" && *c.format != "json") throw Error(Errc::config_error, "format must be csv or json");
    return *c.format;
  }
  switch (c.command) {
    case Command::compute:
    case Command::asymptote:
    case Command::oracle: return "json";
    default: return "csv";
  }
}

inline std::vector<std::string> resolved_quantities(const RunConfig& c) {
  if (c.quantities) return *c.quantities;
  std::vector<std::string> q{"en", "r3"};
  if (c.command == Command::oracle) q.push_back("r4");
  if (!c.n_grid.empty()) q.push_back("rt");
  q.push_back("sop");
  return q;
}

// ---------------------------------------------------------------------------
// JSON

inline void to_json(nlohmann::ordered_json& j, const LRange& r) {
  j = nlohmann::ordered_json{{"start", r.start}, {"stop", r.stop}, {"step", r.step}, {"geometric", r.geometric}};
}

inline void from_json(const nlohmann::ordered_json& j, LRange& r) {
  if (j.is_string()) {
    r = LRange::parse(j.get<std::string>());
    return;
  }
  r.start = j.at("start").get<std::int64_t>();
  r.stop = j.at("stop").get<std::int64_t>();
  r.step = j.value("step", std::int64_t{1});
  r.geometric = j.value("geometric", false);
}

inline nlohmann::ordered_json config_to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = command_name(c.command);
  j["family"] = c.family;
  j["N"] = c.N;
  if (c.L) j["L"] = *c.L;
  if (c.range) j["range"] = *c.range;
  if (c.L_A) j["L_A"] = *c.L_A;
  if (c.quantities) j["quantities"] = *c.quantities;
  j["n_grid"] = c.n_grid;
  if (c.format) j["format"] = *c.format;
  j["output"] = c.output;
  j["seed"] = c.seed;
  j["backend"] = c.backend;
  j["tol"] = c.tol;
  j["max_sweeps"] = c.max_sweeps;
  j["verify_tol"] = c.verify_tol;
  j["samples"] = c.samples;
  j["jobs"] = c.jobs;
  if (c.form) j["form"] = *c.form;
  j["fit_min_L"] = c.fit_min_L;
  if (c.fit_max_L) j["fit_max_L"] = *c.fit_max_L;
  j["log2"] = c.log2;
  j["timing"] = c.timing;
  return j;
}

/// Missing keys keep the values already in `c`.
inline void merge_json(const nlohmann::ordered_json& j, RunConfig& c) {
  static const std::vector<std::string> known{
      "command", "family", "N",       "L",          "range",   "L_A",       "quantities", "n_grid",
      "format",  "output", "seed",    "backend",    "tol",     "max_sweeps", "verify_tol", "samples",
      "jobs",    "form",   "fit_min_L", "fit_max_L", "log2",   "timing"};
  if (!j.is_object()) throw Error(Errc::config_error, "config must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end())
      throw Error(Errc::config_error, "unknown config key '" + k + "'");
  try {
    if (j.contains("command")) c.command = parse_command(j["command"].get<std::string>());
    if (j.contains("family")) c.family = j["family"].get<std::string>();
    if (j.contains("N")) c.N = j["N"].get<int>();
    if (j.contains("L")) c.L = j["L"].get<std::int64_t>();
    if (j.contains("range")) c.range = j["range"].get<LRange>();
    if (j.contains("L_A")) c.L_A = j["L_A"].get<std::int64_t>();
    if (j.contains("quantities")) c.quantities = j["quantities"].get<std::vector<std::string>>();
    if (j.contains("n_grid")) c.n_grid = j["n_grid"].get<std::vector<double>>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
    if (j.contains("output")) c.output = j["output"].get<std::string>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("backend")) c.backend = j["backend"].get<std::string>();
    if (j.contains("tol")) c.tol = j["tol"].get<double>();
    if (j.contains("max_sweeps")) c.max_sweeps = j["max_sweeps"].get<std::int64_t>();
    if (j.contains("verify_tol")) c.verify_tol = j["verify_tol"].get<double>();
    if (j.contains("samples")) c.samples = j["samples"].get<int>();
    if (j.contains("jobs")) c.jobs = j["jobs"].get<int>();
    if (j.contains("form")) c.form = j["form"].get<std::string>();
    if (j.contains("fit_min_L")) c.fit_min_L = j["fit_min_L"].get<double>();
    if (j.contains("fit_max_L")) c.fit_max_L = j["fit_max_L"].get<double>();
    if (j.contains("log2")) c.log2 = j["log2"].get<bool>();
    if (j.contains("timing")) c.timing = j["timing"].get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::config_error, e.what());
  }
}

inline RunConfig config_from_json(const nlohmann::ordered_json& j) {
  RunConfig c;
  merge_json(j, c);
  return c;
}

inline nlohmann::ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::config_error, "cannot open '" + path + "'");
  try {
    return nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::config_error, path + ": " + e.what());
  }
}

}  // namespace symstat::cli
