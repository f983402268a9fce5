// Copyright 2026 The clopen Authors
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

// The acceptance checks: exhaustive small-universe oracles and seeded random
// batteries, one runner per criterion. Each runner re-validates outputs with
// independent checks rather than trusting the construction's own bookkeeping.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clopen::suite {

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string details;
  double elapsed_ms = 0.0;
};

CriterionResult run_upset_laws(std::uint64_t seed);          // c1
CriterionResult run_enumeration();                           // c2
CriterionResult run_separation_exhaustive();                 // c3
CriterionResult run_logic_certificates();                    // c4
CriterionResult run_density(std::uint64_t seed);             // c5
CriterionResult run_nontopology(std::uint64_t seed);         // c6
CriterionResult run_function_spaces(std::uint64_t seed);     // c7
CriterionResult run_ad_families(std::uint64_t seed);         // c8

std::vector<CriterionResult> run_all(std::uint64_t seed);
// Runs one criterion by id (c1..c8 or its name); empty result id = unknown.
CriterionResult run_one(const std::string& id, std::uint64_t seed);
std::vector<std::string> criterion_ids();

}  // namespace clopen::suite
