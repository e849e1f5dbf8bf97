// Copyright 2026 The v2vsig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Solver core. Scenario I/O lives in scenario.hpp and csv.hpp, which pull in
// yaml-cpp.

#pragma once

#include "v2vsig/consistency.hpp"
#include "v2vsig/equilibrium.hpp"
#include "v2vsig/error.hpp"
#include "v2vsig/hazard_model.hpp"
#include "v2vsig/optimize.hpp"
#include "v2vsig/oracle.hpp"
#include "v2vsig/root_finding.hpp"
