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

// Flag parsing. A --config file is read first; flags given on the command
// line override its keys. Without a subcommand the config's command runs.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "symstat/cli/commands.hpp"

namespace symstat::cli {

namespace detail {

inline std::string find_config_path(int argc, const char* const* argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return {};
}

// Staging area for flags whose target is optional or needs conversion.
struct Staged {
  std::string command;
  std::int64_t L = 0;
  std::string range;
  std::int64_t L_A = 0;
  std::string bipartition;
  std::vector<std::string> quantities;
  std::string format;
  std::string form;
  double fit_max_L = 0;
  std::string config;
};

}  // namespace detail

class ArgParser {
 public:
  ArgParser() : app_("Entanglement of symmetric quantum channel stationary states", "symstat") {
    app_.require_subcommand(0, 1);
    app_.set_version_flag("--version", "symstat 1.0.0");
    app_.add_option("--config", st_.config, "JSON run configuration; flags override its keys");
    add(app_.add_subcommand("compute", "Evaluate closed forms at one (family, L, cut)"));
    add(app_.add_subcommand("scan", "Evaluate closed forms over a range of L"));
    add(app_.add_subcommand("asymptote", "Fit large-L scaling and compare with the predicted law"));
    add(app_.add_subcommand("oracle", "Check closed forms against the dense channel fixed point"));
    add(app_.add_subcommand("haar", "Haar-averaged SU(2) negativity versus the spin cutoff"));
    add(app_.add_subcommand("dynamics", "Entanglement along the channel iteration"));
  }

  CLI::App& app() { return app_; }

  /// Throws CLI::ParseError (including help) or symstat::Error.
  RunConfig parse(int argc, const char* const* argv) {
    RunConfig cfg;
    const auto path = detail::find_config_path(argc, argv);
    if (!path.empty()) merge_json(read_json_file(path), cfg);
    cfg_ = cfg;
    app_.parse(argc, argv);
    const auto subs = app_.get_subcommands();
    if (subs.empty() && path.empty()) throw CLI::CallForHelp();
    for (auto* sub : subs) cfg_.command = parse_command(sub->get_name());
    apply();
    return cfg_;
  }

 private:
  void add(CLI::App* sub) {
    sub->add_option("--config", st_.config, "JSON run configuration; flags override its keys");
    opts_["family"].push_back(sub->add_option("--family", cfg_.family, "u1, su2, sun, pf, tl (N may be appended: tl3)"));
    opts_["N"].push_back(sub->add_option("--N", cfg_.N, "Local dimension / SU(N) rank"));
    opts_["L"].push_back(sub->add_option("--L", st_.L, "Chain length"));
    opts_["range"].push_back(sub->add_option("--range", st_.range, "L range start:stop[:+k|:xk]"));
    opts_["L_A"].push_back(sub->add_option("--LA", st_.L_A, "Length of subsystem A (default: half chain)"));
    opts_["quantities"].push_back(
        sub->add_option("--quantities,-q", st_.quantities, "en, r<k>, rt, sop")->delimiter(','));
    opts_["n_grid"].push_back(sub->add_option("--n", cfg_.n_grid, "Orders of the generalized Renyi negativity")->delimiter(','));
    opts_["format"].push_back(sub->add_option("--format", st_.format, "csv or json"));
    opts_["output"].push_back(sub->add_option("--output,-o", cfg_.output, "Output file (default: stdout)"));
    opts_["seed"].push_back(sub->add_option("--seed", cfg_.seed, "Random seed"));
    opts_["backend"].push_back(sub->add_option("--backend", cfg_.backend, "exact, log or auto"));
    opts_["tol"].push_back(sub->add_option("--tol", cfg_.tol, "Fixed-point tolerance (Frobenius)"));
    opts_["max_sweeps"].push_back(sub->add_option("--max-sweeps", cfg_.max_sweeps, "Sweep limit"));
    opts_["verify_tol"].push_back(sub->add_option("--verify-tol", cfg_.verify_tol, "Oracle agreement tolerance"));
    opts_["samples"].push_back(sub->add_option("--samples", cfg_.samples, "Haar draws per point"));
    opts_["jobs"].push_back(sub->add_option("--jobs,-j", cfg_.jobs, "Worker threads"));
    opts_["form"].push_back(sub->add_option("--form", st_.form, "Fit form: constant, log, sqrt, linear, sqrt_log"));
    opts_["fit_min_L"].push_back(sub->add_option("--fit-min-L", cfg_.fit_min_L, "Smallest L in the fit window"));
    opts_["fit_max_L"].push_back(sub->add_option("--fit-max-L", st_.fit_max_L, "Largest L in the fit window"));
    opts_["log2"].push_back(sub->add_flag("--log2", cfg_.log2, "Report entropic values in bits"));
    opts_["timing"].push_back(sub->add_flag("--timing", cfg_.timing, "Include wall time in JSON output"));
  }

  bool given(const std::string& key) const {
    for (auto* o : opts_.at(key))
      if (o->count()) return true;
    return false;
  }

  void apply() {
    if (given("L")) cfg_.L = st_.L;
    if (given("range")) cfg_.range = LRange::parse(st_.range);
    if (given("L_A")) cfg_.L_A = st_.L_A;
    if (given("quantities")) cfg_.quantities = st_.quantities;
    if (given("format")) cfg_.format = st_.format;
    if (given("form")) cfg_.form = st_.form;
    if (given("fit_max_L")) cfg_.fit_max_L = st_.fit_max_L;
  }

  CLI::App app_;
  RunConfig cfg_;
  detail::Staged st_;
  std::map<std::string, std::vector<CLI::Option*>> opts_;
};

/// Full tool behaviour: parse, run, map errors to exit codes.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ArgParser parser;
  RunConfig cfg;
  try {
    cfg = parser.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return parser.app().exit(e, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e.code());
  }
  try {
    if (cfg.output.empty()) return run(cfg, out);
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw Error(Errc::config_error, "cannot write '" + cfg.output + "'");
    return run(cfg, file);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace symstat::cli
