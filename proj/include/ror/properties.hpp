// Copyright 2026 The imprecise-ror Authors
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

// Random instance generation and the algebraic law suite over dominance,
// single-DM and group relations.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ror/model.hpp"
#include "ror/value_model.hpp"

namespace ror {

struct GeneratorOptions {
  int max_alternatives = 8;
  int max_criteria = 4;
  int max_n = 3;
  int max_statements = 5;  // per DM; proposals that break compatibility are dropped
  int max_dms = 1;
  int value_span = 10;  // integer evaluations in [0, value_span]
};

struct Instance {
  PerformanceTable table;
  std::vector<PreferenceStatement> statements;  // authors "d1", "d2", ...
  std::vector<std::string> dms;
};

Instance random_instance(std::mt19937_64& rng, const GeneratorOptions& opts = {});

struct ClauseResult {
  std::string name;
  long checks = 0;    // hypothesis instances examined
  long failures = 0;
  std::string first_failure;
};

struct PropertyReport {
  int instances = 0;
  long lp_calls = 0;
  std::vector<ClauseResult> clauses;

  bool passed() const;
  long failures() const;
  // Clauses whose names start with the prefix.
  bool passed(const std::string& prefix) const;
};

struct PropertyOptions {
  GeneratorOptions generator;
  int samples_per_dm = 3;  // vertices used for the value-level laws
};

// Runs every law on `instances` random instances. DM counts are drawn from
// 1..max_dms; the group laws run on every non-empty coalition.
PropertyReport check_properties(std::uint64_t seed, int instances, PropertyOptions opts = {});

// The same laws on one given instance.
void check_instance(const Instance& inst, PropertyReport& report, std::uint64_t seed,
                    const PropertyOptions& opts = {});

}  // namespace ror
