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

#include <stdexcept>
#include <string>
#include <string_view>

namespace symstat {

enum class Errc {
  inadmissible,
  domain_error,
  sum_mismatch,
  parity_error,
  empty_sector_list,
  n_at_two,
  unsupported,
  too_few_points,
  invalid_spin,
  weight_error,
  no_crossing,
  multiple_crossings,
  too_large,
  no_convergence,
  bad_cut,
  empty_scan,
  verification_failure,
  config_error,
};

constexpr std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::inadmissible: return "Inadmissible";
    case Errc::domain_error: return "DomainError";
    case Errc::sum_mismatch: return "SumMismatch";
    case Errc::parity_error: return "ParityError";
    case Errc::empty_sector_list: return "EmptySectorList";
    case Errc::n_at_two: return "NAtTwo";
    case Errc::unsupported: return "Unsupported";
    case Errc::too_few_points: return "TooFewPoints";
    case Errc::invalid_spin: return "InvalidSpin";
    case Errc::weight_error: return "WeightError";
    case Errc::no_crossing: return "NoCrossing";
    case Errc::multiple_crossings: return "MultipleCrossings";
    case Errc::too_large: return "TooLarge";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::bad_cut: return "BadCut";
    case Errc::empty_scan: return "EmptyScan";
    case Errc::verification_failure: return "VerificationFailure";
    case Errc::config_error: return "ConfigError";
  }
  return "Error";
}

/// Process exit code used by the command-line tool for each error kind.
constexpr int exit_code(Errc c) noexcept {
  switch (c) {
    case Errc::inadmissible: return 2;
    case Errc::verification_failure: return 3;
    case Errc::too_large: return 4;
    default: return 1;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace symstat
