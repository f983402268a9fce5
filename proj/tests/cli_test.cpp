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

#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "clopen/cli.hpp"

using clopen::cli::RunResult;
using clopen::cli::dispatch;

TEST_CASE("enumerate command") {
  RunResult r = dispatch({"enumerate", "--n", "2", "--json"});
  CHECK(r.exit_code == 0);
  CHECK(r.report.at("outcome") == "ok");
  CHECK(r.report.at("payload").at("counts").at("topologies") == 4);
  CHECK_FALSE(r.report.contains("elapsed_ms"));
}

TEST_CASE("set operations through the command line") {
  RunResult r = dispatch({"upset-eval", "--op", "intersect", "--a", R"({"p":2,"R":[0]})", "--b",
                          R"({"p":3,"R":[0]})"});
  CHECK(r.exit_code == 0);
  CHECK(r.report.at("payload").at("p") == 6);

  RunResult bad = dispatch({"upset-eval", "--op", "union", "--a", R"({"p":2,"R":[0]})"});
  CHECK(bad.exit_code == 2);

  RunResult nth = dispatch({"upset-eval", "--op", "nth", "--a", R"({"elems":[4]})", "--k", "2"});
  CHECK(nth.exit_code == 1);
  CHECK(nth.report.at("error").at("code") == "out_of_range");
}

TEST_CASE("the exclusion certificate example") {
  RunResult r = dispatch({"logic", "certify", "--sentence",
                          "forall x. forall y. (P(x) and P(y)) -> P(x | y)", "--family",
                          R"({"universe":{"finite":2},"sets":[[0],[1]]})"});
  REQUIRE(r.exit_code == 0);
  const auto& nbhd = r.report.at("payload").at("neighborhood");
  CHECK(nbhd.at("pos").size() == 2);
  CHECK(nbhd.at("neg").size() == 1);
  CHECK(nbhd.at("neg")[0] == nlohmann::json::array({0, 1}));
}

TEST_CASE("witness commands") {
  RunResult r = dispatch({"witness", "lattice", "--family",
                          R"({"universe":{"finite":2},"sets":[[0],[1]]})"});
  CHECK(r.exit_code == 0);
  CHECK(r.report.at("payload").at("class") == "lattices");

  RunResult sep = dispatch({"witness", "lattice", "--family",
                            R"({"universe":{"finite":2},"sets":[[],[0],[1],[0,1]]})"});
  CHECK(sep.exit_code == 1);
  CHECK(sep.report.at("error").at("code") == "NotSeparable");

  RunResult t1 = dispatch({"witness", "t1", "--tau", R"({"builtin":"cofinite"})", "--bound", "3"});
  CHECK(t1.exit_code == 1);
  CHECK(t1.report.at("error").at("code") == "SearchBoundExceeded");
}

TEST_CASE("file arguments and the construction command") {
  std::string path = "cli_test_nbhd.json";
  {
    std::ofstream out(path);
    out << R"({"universe":"nat","pos":[{"p":2,"R":[0]}],"neg":[{"p":2,"R":[1]}]})";
  }
  RunResult r = dispatch({"witness", "nontopology", "--nbhd", path, "--m", "4"});
  std::remove(path.c_str());
  REQUIRE(r.exit_code == 0);
  const auto& payload = r.report.at("payload");
  CHECK(payload.at("parts").size() == 4);
  for (const auto& [name, ok] : payload.at("checks").items()) CHECK(ok == true);
}

TEST_CASE("reports are deterministic") {
  std::vector<std::string> args{"suite", "c5", "--seed", "42", "--json"};
  RunResult a = dispatch(args), b = dispatch(args);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.exit_code == 0);

  RunResult c = dispatch({"enumerate", "--n", "3", "--json"});
  RunResult d = dispatch({"enumerate", "--n", "3", "--json"});
  CHECK(c.report.dump() == d.report.dump());
}

TEST_CASE("error paths exit nonzero without a success payload") {
  RunResult unknown = dispatch({"frobnicate"});
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.report.at("outcome") == "error");
  CHECK_FALSE(unknown.report.contains("payload"));

  RunResult parse = dispatch({"logic", "eval", "--sentence", "forall x. P(x", "--family",
                              R"({"universe":{"finite":2},"sets":[]})"});
  CHECK(parse.exit_code == 2);
  CHECK(parse.report.at("error").at("code") == "sentence_parse");
  CHECK(parse.report.at("error").at("line") == 1);

  RunResult badjson = dispatch({"family-classify", "--family", "{broken"});
  CHECK(badjson.exit_code == 2);
  CHECK(badjson.report.at("error").at("code") == "invalid_input");
}
