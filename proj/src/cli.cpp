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

#include "clopen/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "clopen/json_io.hpp"
#include "clopen/suite.hpp"

namespace clopen::cli {

namespace {

using jsonio::json;

// Inline JSON, @path, a bare path to a JSON file, or "-" for stdin.
json load_json_arg(const std::string& arg) {
  std::string text = arg;
  bool is_path = !arg.empty() && arg[0] == '@';
  if (!is_path && !arg.empty() && arg[0] != '{' && arg[0] != '[') is_path = true;
  if (is_path) {
    std::string path = arg[0] == '@' ? arg.substr(1) : arg;
    std::stringstream ss;
    if (path == "-") {
      ss << std::cin.rdbuf();
    } else {
      std::ifstream in(path);
      if (!in) throw ValidationError("cannot open file '" + path + "'");
      ss << in.rdbuf();
    }
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

struct Options {
  bool json_output = false;
  bool timings = false;
  std::uint64_t seed = 0;
};

json run_upset_eval(const std::string& op, const std::string& a, const std::string& b, Nat n,
                    Nat k, Nat q, Nat rr) {
  UPSet sa = jsonio::upset_from_json(load_json_arg(a));
  auto need_b = [&]() {
    if (b.empty()) throw ValidationError("operation '" + op + "' needs --b");
    return jsonio::upset_from_json(load_json_arg(b));
  };
  if (op == "union") return jsonio::upset_to_json(set_union(sa, need_b()));
  if (op == "intersect") return jsonio::upset_to_json(set_intersection(sa, need_b()));
  if (op == "complement") return jsonio::upset_to_json(set_complement(sa));
  if (op == "difference") return jsonio::upset_to_json(set_difference(sa, need_b()));
  if (op == "classify") {
    Cardinality c = sa.classify();
    return c.is_infinite() ? json{{"cardinality", "infinite"}}
                           : json{{"cardinality", "finite"}, {"count", c.count()}};
  }
  if (op == "contains") return json{{"contains", sa.contains(n)}};
  if (op == "nth") return json{{"nth", sa.nth(k)}};
  if (op == "subset") return json{{"subset", is_subset(sa, need_b())}};
  if (op == "index-filter") return jsonio::upset_to_json(index_filter(sa, q, rr));
  throw ValidationError("unknown set operation '" + op + "'");
}

FamilyOracle oracle_from_arg(const std::string& arg) {
  json j = load_json_arg(arg);
  if (j.is_object() && j.contains("builtin")) {
    const json& b = j.at("builtin");
    if (b.is_string() && b.get<std::string>() == "cofinite") {
      return FamilyOracle::cofinite_topology();
    }
    if (b.is_object() && b.contains("discrete")) {
      return FamilyOracle::discrete_topology(b.at("discrete").get<int>());
    }
    throw ValidationError("unknown builtin oracle");
  }
  return FamilyOracle::materialized(jsonio::family_from_json(j));
}

json suite_payload(const std::vector<suite::CriterionResult>& results, bool timings) {
  json arr = json::array();
  bool all = true;
  for (const auto& c : results) {
    json e{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"details", c.details}};
    if (timings) e["elapsed_ms"] = c.elapsed_ms;
    arr.push_back(e);
    all = all && c.pass;
  }
  return json{{"criteria", arr}, {"all_pass", all}};
}

std::string render_human(const json& report) {
  std::ostringstream os;
  os << "outcome: " << report.at("outcome").get<std::string>() << "\n";
  if (report.contains("error")) {
    os << "error: " << report.at("error").at("code").get<std::string>();
    std::string detail = report.at("error").value("detail", std::string{});
    if (!detail.empty()) os << " (" << detail << ")";
    os << "\n";
  }
  if (report.contains("payload")) {
    const json& p = report.at("payload");
    if (p.is_object() && p.contains("criteria")) {
      for (const auto& c : p.at("criteria")) {
        os << (c.at("pass").get<bool>() ? "[PASS] " : "[FAIL] ") << c.at("id").get<std::string>()
           << " " << c.at("name").get<std::string>() << " — "
           << c.at("details").get<std::string>() << "\n";
      }
      os << (p.at("all_pass").get<bool>() ? "all criteria passed" : "criteria failed") << "\n";
    } else {
      os << p.dump(2) << "\n";
    }
  }
  return os.str();
}

}  // namespace

RunResult dispatch(const std::vector<std::string>& args) {
  Options opt;
  std::string command_echo;
  for (const auto& a : args) command_echo += (command_echo.empty() ? "" : " ") + a;

  CLI::App app{"workbench for families of sets as points of a product cube"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json_output, "emit the machine report on stdout");
  app.add_flag("--timings", opt.timings, "include elapsed milliseconds in reports");
  app.add_option("--seed", opt.seed, "seed for randomized batteries")->capture_default_str();

  // upset-eval
  std::string ue_op, ue_a, ue_b;
  Nat ue_n = 0, ue_k = 0, ue_q = 1, ue_r = 0;
  auto* upset_cmd = app.add_subcommand("upset-eval", "evaluate a set operation");
  upset_cmd->add_option("--op", ue_op, "union|intersect|complement|difference|classify|contains|nth|subset|index-filter")->required();
  upset_cmd->add_option("--a", ue_a, "first operand (JSON or file)")->required();
  upset_cmd->add_option("--b", ue_b, "second operand");
  upset_cmd->add_option("--n", ue_n, "element for contains");
  upset_cmd->add_option("--k", ue_k, "index for nth");
  upset_cmd->add_option("--q", ue_q, "index-filter modulus");
  upset_cmd->add_option("--r", ue_r, "index-filter residue");

  // family-classify
  std::string fc_family;
  auto* classify_cmd = app.add_subcommand("family-classify", "classify a finite family");
  classify_cmd->add_option("--family", fc_family, "family JSON or file")->required();

  // enumerate
  int en_n = 2;
  auto* enum_cmd = app.add_subcommand("enumerate", "classify every family over a small universe");
  enum_cmd->add_option("--n", en_n, "universe size, 1..4")->required();

  // witness subcommands
  auto* witness_cmd = app.add_subcommand("witness", "separation and density constructions");
  witness_cmd->require_subcommand(1);
  std::string w_family, w_nbhd, w_dir = "down", w_phi, w_tau, w_kind = "cns", w_map, w_fn,
              w_space, w_pairs, w_a, w_b, w_lambda = "omega";
  Nat w_bound = 4;
  int w_m = 8;

  auto* w_lat = witness_cmd->add_subcommand("lattice", "separate a non-sublattice");
  w_lat->add_option("--family", w_family)->required();
  auto* w_latb = witness_cmd->add_subcommand("latb", "separate from the bounded sublattices");
  w_latb->add_option("--family", w_family)->required();
  auto* w_ud = witness_cmd->add_subcommand("updown", "separate from a down-set or up-set");
  w_ud->add_option("--dir", w_dir, "down|up");
  w_ud->add_option("--phi", w_phi, "base family or builtin oracle")->required();
  w_ud->add_option("--theta", w_family, "the point to separate")->required();
  auto* w_t1 = witness_cmd->add_subcommand("t1", "separate from the T1 topologies");
  w_t1->add_option("--tau", w_tau, "family or builtin oracle")->required();
  w_t1->add_option("--bound", w_bound, "complement search bound");
  auto* w_map_cmd = witness_cmd->add_subcommand("map", "separate from a self-map property class");
  w_map_cmd->add_option("--kind", w_kind, "cns|open|closed");
  w_map_cmd->add_option("--map", w_map, "the self-map")->required();
  w_map_cmd->add_option("--family", w_family, "the topology")->required();
  auto* w_fn_cmd = witness_cmd->add_subcommand("function", "separate from a function space");
  w_fn_cmd->add_option("--pairs", w_pairs, "pair-universe family")->required();
  w_fn_cmd->add_option("--space", w_space, "function space")->required();
  auto* w_ad = witness_cmd->add_subcommand("ad", "separate from the almost disjoint families");
  w_ad->add_option("--family", w_family)->required();
  w_ad->add_option("--lambda", w_lambda, "omega or a finite bound");
  auto* w_dt = witness_cmd->add_subcommand("density-topology", "topology inside a neighborhood");
  w_dt->add_option("--nbhd", w_nbhd)->required();
  auto* w_dff = witness_cmd->add_subcommand("density-finite-fn",
                                            "finite restriction inside a neighborhood");
  w_dff->add_option("--fn", w_fn)->required();
  w_dff->add_option("--nbhd", w_nbhd)->required();
  auto* w_ext = witness_cmd->add_subcommand("extend-infinite-fn",
                                            "infinite extension inside a neighborhood");
  w_ext->add_option("--fn", w_fn)->required();
  w_ext->add_option("--nbhd", w_nbhd)->required();
  w_ext->add_option("--space", w_space)->required();
  auto* w_onto = witness_cmd->add_subcommand("density-onto", "onto function inside a neighborhood");
  w_onto->add_option("--nbhd", w_nbhd)->required();
  w_onto->add_option("--A", w_a)->required();
  w_onto->add_option("--B", w_b)->required();
  auto* w_nt = witness_cmd->add_subcommand("nontopology",
                                           "join-incomplete bounded sublattice in a neighborhood");
  w_nt->add_option("--nbhd", w_nbhd)->required();
  w_nt->add_option("--m", w_m, "number of materialized parts");
  auto* w_ead = witness_cmd->add_subcommand("extend-ad", "extend an almost disjoint family");
  w_ead->add_option("--family", w_family)->required();

  // logic subcommands
  auto* logic_cmd = app.add_subcommand("logic", "sentences over (P(X), F)");
  logic_cmd->require_subcommand(1);
  std::string l_sentence, l_family, l_corpus;
  int l_n = 2;
  auto* l_eval = logic_cmd->add_subcommand("eval", "evaluate a sentence in a structure");
  l_eval->add_option("--sentence", l_sentence)->required();
  l_eval->add_option("--family", l_family)->required();
  auto* l_cert = logic_cmd->add_subcommand("certify", "exclusion certificate for a falsified sentence");
  l_cert->add_option("--sentence", l_sentence)->required();
  l_cert->add_option("--family", l_family)->required();
  auto* l_class = logic_cmd->add_subcommand("class", "every family satisfying the sentence");
  l_class->add_option("--sentence", l_sentence)->required();
  l_class->add_option("--n", l_n, "universe size, 1..3")->required();
  auto* l_check = logic_cmd->add_subcommand("check", "evaluate a sentence corpus in a structure");
  l_check->add_option("--corpus", l_corpus, "sentence file")->required();
  l_check->add_option("--family", l_family)->required();

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "run a named battery");
  std::string s_name = "acceptance";
  suite_cmd->add_option("name", s_name, "acceptance or c1..c8");

  // Global flags may follow the subcommand.
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    a->fallthrough(true);
    for (auto* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  try {
    std::vector<const char*> argv;
    argv.push_back("clopen");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    RunResult r;
    std::stringstream out;
    out << app.help();
    r.human = out.str();
    r.report = json{{"command", command_echo}, {"outcome", "ok"}, {"payload", {{"help", r.human}}}};
    return r;
  } catch (const CLI::ParseError& e) {
    RunResult r;
    r.exit_code = 2;
    r.report = json{{"command", command_echo},
                    {"outcome", "error"},
                    {"error", {{"code", "usage"}, {"detail", e.what()}}}};
    r.human = render_human(r.report);
    return r;
  }

  auto started = std::chrono::steady_clock::now();
  RunResult r;
  json payload;
  try {
    if (*upset_cmd) {
      payload = run_upset_eval(ue_op, ue_a, ue_b, ue_n, ue_k, ue_q, ue_r);
    } else if (*classify_cmd) {
      payload = jsonio::class_report_to_json(
          classify_family(jsonio::family_from_json(load_json_arg(fc_family))));
    } else if (*enum_cmd) {
      payload = json{{"n", en_n}, {"counts", jsonio::counts_to_json(enumerate_classify(en_n))}};
    } else if (*witness_cmd) {
      auto emit_cert = [&](const Outcome<witnesses::SeparationCertificate>& c) {
        if (!c.ok()) throw c.failure();
        payload = jsonio::certificate_to_json(c.value());
      };
      if (*w_lat) {
        emit_cert(witnesses::separate_lattice(jsonio::family_from_json(load_json_arg(w_family))));
      } else if (*w_latb) {
        emit_cert(witnesses::separate_latb(jsonio::family_from_json(load_json_arg(w_family))));
      } else if (*w_ud) {
        witnesses::Direction dir;
        if (w_dir == "down") dir = witnesses::Direction::Down;
        else if (w_dir == "up") dir = witnesses::Direction::Up;
        else throw ValidationError("--dir must be down or up");
        emit_cert(witnesses::separate_updown(dir, oracle_from_arg(w_phi),
                                             jsonio::family_from_json(load_json_arg(w_family))));
      } else if (*w_t1) {
        emit_cert(witnesses::separate_t1(oracle_from_arg(w_tau), w_bound));
      } else if (*w_map_cmd) {
        witnesses::MapProperty kind;
        if (w_kind == "cns") kind = witnesses::MapProperty::Continuous;
        else if (w_kind == "open") kind = witnesses::MapProperty::Open;
        else if (w_kind == "closed") kind = witnesses::MapProperty::Closed;
        else throw ValidationError("--kind must be cns, open or closed");
        emit_cert(witnesses::separate_map(kind, jsonio::endomap_from_json(load_json_arg(w_map)),
                                          jsonio::family_from_json(load_json_arg(w_family))));
      } else if (*w_fn_cmd) {
        emit_cert(witnesses::separate_function(jsonio::family_from_json(load_json_arg(w_pairs)),
                                               jsonio::fn_space_from_json(load_json_arg(w_space))));
      } else if (*w_ad) {
        Cardinality lambda = w_lambda == "omega"
                                 ? Cardinality::infinite()
                                 : Cardinality::finite(std::stoull(w_lambda));
        emit_cert(witnesses::separate_ad(jsonio::family_from_json(load_json_arg(w_family)), lambda));
      } else if (*w_dt) {
        auto out = witnesses::density_topology(jsonio::nbhd_from_json(load_json_arg(w_nbhd)));
        if (!out.ok()) throw out.failure();
        payload = jsonio::family_to_json(out.value());
      } else if (*w_dff) {
        auto out = witnesses::density_finite_fn(jsonio::partial_fn_from_json(load_json_arg(w_fn)),
                                                jsonio::nbhd_from_json(load_json_arg(w_nbhd)));
        if (!out.ok()) throw out.failure();
        payload = jsonio::partial_fn_to_json(out.value());
      } else if (*w_ext) {
        auto out = witnesses::extend_infinite_fn(
            jsonio::partial_fn_from_json(load_json_arg(w_fn)),
            jsonio::nbhd_from_json(load_json_arg(w_nbhd)),
            jsonio::fn_space_from_json(load_json_arg(w_space)));
        if (!out.ok()) throw out.failure();
        payload = jsonio::partial_fn_to_json(out.value());
      } else if (*w_onto) {
        auto out = witnesses::density_onto(jsonio::nbhd_from_json(load_json_arg(w_nbhd)),
                                           jsonio::upset_from_json(load_json_arg(w_a)),
                                           jsonio::upset_from_json(load_json_arg(w_b)));
        if (!out.ok()) throw out.failure();
        payload = jsonio::partial_fn_to_json(out.value());
      } else if (*w_nt) {
        auto out = witnesses::nontopology_lattice(jsonio::nbhd_from_json(load_json_arg(w_nbhd)), w_m);
        if (!out.ok()) throw out.failure();
        payload = jsonio::nontopology_to_json(out.value());
      } else if (*w_ead) {
        auto out = witnesses::extend_ad(jsonio::family_from_json(load_json_arg(w_family)));
        if (!out.ok()) throw out.failure();
        payload = json{{"extension", jsonio::upset_to_json(out.value())}};
      }
    } else if (*logic_cmd) {
      auto structure_of = [&](const std::string& fam) {
        FiniteFamily f = jsonio::family_from_json(load_json_arg(fam));
        if (f.universe().kind != UniverseKind::Finite) {
          throw ValidationError("logic structures need a finite universe");
        }
        return logic::Structure::make(f.universe().width, f);
      };
      if (*l_eval) {
        logic::Formula phi = logic::parse_sentence(l_sentence);
        logic::Structure s = structure_of(l_family);
        payload = json{{"sentence", logic::to_text(phi)}, {"value", logic::eval(s, phi)}};
      } else if (*l_cert) {
        logic::Formula phi = logic::parse_sentence(l_sentence);
        auto out = logic::certify_exclusion(phi, structure_of(l_family));
        if (!out.ok()) throw out.failure();
        payload = jsonio::exclusion_to_json(out.value());
      } else if (*l_class) {
        logic::Formula phi = logic::parse_sentence(l_sentence);
        json fams = json::array();
        for (const auto& f : logic::defined_class(phi, l_n)) {
          fams.push_back(jsonio::family_to_json(f));
        }
        payload = json{{"sentence", logic::to_text(phi)},
                       {"n", l_n},
                       {"count", fams.size()},
                       {"families", fams}};
      } else if (*l_check) {
        std::ifstream in(l_corpus);
        if (!in) throw ValidationError("cannot open corpus '" + l_corpus + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        auto corpus = logic::load_corpus(ss.str());
        std::vector<logic::Formula> sentences;
        for (auto& [text, f] : corpus) sentences.push_back(f);
        payload = jsonio::collection_report_to_json(
            logic::check_collection(sentences, structure_of(l_family)));
      }
    } else if (*suite_cmd) {
      std::vector<suite::CriterionResult> results;
      if (s_name == "acceptance") {
        results = suite::run_all(opt.seed);
      } else {
        suite::CriterionResult one = suite::run_one(s_name, opt.seed);
        if (one.id.empty()) throw ValidationError("unknown battery '" + s_name + "'");
        results.push_back(one);
      }
      payload = suite_payload(results, opt.timings);
      if (!payload.at("all_pass").get<bool>()) {
        r.exit_code = 1;
        r.report = json{{"command", command_echo},
                        {"outcome", "error"},
                        {"error", {{"code", "criteria_failed"}, {"detail", "see payload"}}},
                        {"payload", payload}};
        if (opt.timings) {
          r.report["elapsed_ms"] =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                  .count();
        }
        r.human = render_human(r.report);
        return r;
      }
    }
    r.report = json{{"command", command_echo}, {"outcome", "ok"}, {"payload", payload}};
    if (opt.timings) {
      r.report["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
              .count();
    }
  } catch (const Fail& f) {
    r.exit_code = 1;
    r.report = json{{"command", command_echo},
                    {"outcome", "error"},
                    {"error", {{"code", fail_code_name(f.code)}, {"detail", f.detail}}}};
  } catch (const logic::ParseError& e) {
    r.exit_code = 2;
    r.report = json{{"command", command_echo},
                    {"outcome", "error"},
                    {"error",
                     {{"code", "sentence_parse"},
                      {"detail", e.what()},
                      {"line", e.line()},
                      {"column", e.col()}}}};
  } catch (const ValidationError& e) {
    r.exit_code = 2;
    r.report = json{{"command", command_echo},
                    {"outcome", "error"},
                    {"error", {{"code", "invalid_input"}, {"detail", e.what()}}}};
  } catch (const PreconditionError& e) {
    r.exit_code = 1;
    r.report = json{{"command", command_echo},
                    {"outcome", "error"},
                    {"error", {{"code", "precondition"}, {"detail", e.what()}}}};
  } catch (const ResourceError& e) {
    r.exit_code = 1;
    r.report = json{{"command", command_echo},
                    {"outcome", "error"},
                    {"error", {{"code", "resource_limit"}, {"detail", e.what()}}}};
  } catch (const RangeError& e) {
    r.exit_code = 1;
    r.report = json{{"command", command_echo},
                    {"outcome", "error"},
                    {"error", {{"code", "out_of_range"}, {"detail", e.what()}}}};
  }
  r.human = render_human(r.report);
  return r;
}

}  // namespace clopen::cli
