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

// Runs the full acceptance battery and prints one line per criterion.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "clopen/suite.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  auto results = clopen::suite::run_all(seed);
  bool all = true;
  for (const auto& c : results) {
    std::printf("[%s] %s — %s (%s) [%.0f ms]\n", c.pass ? "PASS" : "FAIL", c.id.c_str(),
                c.name.c_str(), c.details.c_str(), c.elapsed_ms);
    all = all && c.pass;
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES");
  return all ? 0 : 1;
}
