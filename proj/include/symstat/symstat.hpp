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

// Umbrella header for the library (the command-line front end lives under
// symstat/cli/ and needs nlohmann_json and CLI11).

#include "symstat/asymptotics.hpp"
#include "symstat/commutants.hpp"
#include "symstat/entanglement.hpp"
#include "symstat/error.hpp"
#include "symstat/exactnum.hpp"
#include "symstat/oracle.hpp"
#include "symstat/su2cg.hpp"
