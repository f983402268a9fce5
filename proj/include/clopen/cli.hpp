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

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace clopen::cli {

// Exit codes: 0 success, 1 domain error (a structured negative answer,
// precondition or resource failure), 2 usage or input-parse error.
struct RunResult {
  int exit_code = 0;
  nlohmann::json report;   // {"command","outcome","payload"/"error"[,"elapsed_ms"]}
  std::string human;       // rendering of the report for terminals
};

// Parses argv (without the program name) and runs one command. Reports are
// deterministic for fixed inputs and seed; timings appear only when the
// --timings flag asks for them.
RunResult dispatch(const std::vector<std::string>& args);

}  // namespace clopen::cli
