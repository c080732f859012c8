/*
 * Copyright 2026 The katd authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Batch front end. Verdicts are data: exit 0 means the tool ran, whatever
// the analyses concluded. Exit 1 is reserved for law-suite runs whose
// outcome contradicts a law's polarity, exit 2 for infrastructure failures
// (unreadable or malformed input, unknown names, enumeration caps).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "katd/ars.hpp"
#include "katd/errors.hpp"
#include "katd/lang_model.hpp"
#include "katd/laws/library.hpp"
#include "katd/laws/suite.hpp"
#include "katd/path_model.hpp"
#include "katd/rel_model.hpp"
#include "katd/report.hpp"
#include "katd/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpectedVerdict = 1;
constexpr int kExitInfrastructure = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw katd::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct AnalyzeArgs {
  std::string file;
  std::string rels;
  bool include_union = false;
  bool json = false;
};

struct PairArgs {
  std::string file;
  std::string a;
  std::string b;
  bool json = false;
};

struct LawsArgs {
  std::string suite = "core";
  std::string model = "rel";
  int states = 2;
  int alphabet = 2;
  int bound = 0;  // 0 = per-model default
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool json = false;
  bool list = false;
};

int run_analyze(const AnalyzeArgs& args) {
  std::string text = read_file(args.file);
  katd::ArsSystem sys = katd::parse_ars(text);
  katd::AnalyzeRequest req;
  if (!args.rels.empty()) {
    req.relations = split_csv(args.rels);
  } else {
    for (const auto& [name, rel] : sys.relations) req.relations.push_back(name);
  }
  req.include_union = args.include_union;
  if (args.json) {
    std::cout << katd::analysis_json(sys, req, katd::input_digest(text)).dump(2) << "\n";
  } else {
    std::cout << katd::analysis_text(sys, req);
  }
  return kExitOk;
}

int run_newman(const PairArgs& args) {
  std::string text = read_file(args.file);
  katd::ArsSystem sys = katd::parse_ars(text);
  if (args.json) {
    katd::AnalyzeRequest req{{args.a, args.b}, false};
    std::cout << katd::analysis_json(sys, req, katd::input_digest(text)).dump(2) << "\n";
  } else {
    std::cout << katd::newman_text(sys, args.a, args.b) << "\n";
  }
  return kExitOk;
}

int run_union(const PairArgs& args) {
  std::string text = read_file(args.file);
  katd::ArsSystem sys = katd::parse_ars(text);
  if (args.json) {
    katd::AnalyzeRequest req{{args.a, args.b}, true};
    std::cout << katd::analysis_json(sys, req, katd::input_digest(text)).dump(2) << "\n";
  } else {
    std::cout << katd::union_text(sys, args.a, args.b) << "\n";
  }
  return kExitOk;
}

int run_laws(const LawsArgs& args) {
  if (args.list) {
    std::cout << katd::builtin_library_json() << "\n";
    return kExitOk;
  }
  auto names = katd::suite_names();
  if (std::find(names.begin(), names.end(), args.suite) == names.end()) {
    std::string known;
    for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
    throw katd::Error("unknown suite '" + args.suite + "' (known: " + known + ")");
  }
  katd::SuiteOptions opt;
  if (args.samples > 0) opt.strategy = katd::Strategy::sample(args.samples, args.seed);

  katd::SuiteRun run;
  if (args.model == "rel") {
    katd::RelModel m(args.states);
    run = katd::run_suite(m, args.suite, opt);
  } else if (args.model == "lang") {
    katd::LangModel m(args.alphabet, args.bound > 0 ? args.bound : 4);
    run = katd::run_suite(m, args.suite, opt);
  } else {
    katd::PathModel m(args.states, args.bound > 0 ? args.bound : 3);
    run = katd::run_suite(m, args.suite, opt);
  }
  if (args.json) {
    std::cout << katd::suite_json(run, opt.strategy).dump(2) << "\n";
  } else {
    std::cout << katd::suite_text(run);
  }
  return run.unexpected_count == 0 ? kExitOk : kExitUnexpectedVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modal Kleene algebra toolkit: termination, confluence and law checking over finite models"};
  app.set_version_flag("--version", std::string(katd::kVersion));
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "analyze the relations of an ARS file");
  analyze->add_option("file", an.file, "ARS input file")->required();
  analyze->add_option("--rels", an.rels, "comma-separated relation names (default: all)");
  analyze->add_flag("--union", an.include_union, "also analyze the union of the selected relations");
  analyze->add_flag("--json", an.json, "emit the JSON report");

  PairArgs nw;
  auto* newman = app.add_subcommand("newman", "check Newman's hypotheses and conclusion for a pair");
  newman->add_option("file", nw.file, "ARS input file")->required();
  newman->add_option("a", nw.a, "first relation name")->required();
  newman->add_option("b", nw.b, "second relation name")->required();
  newman->add_flag("--json", nw.json, "emit the JSON report");

  PairArgs un;
  auto* union_cmd = app.add_subcommand("union", "check the union termination theorem for a pair");
  union_cmd->add_option("file", un.file, "ARS input file")->required();
  union_cmd->add_option("a", un.a, "first relation name")->required();
  union_cmd->add_option("b", un.b, "second relation name")->required();
  union_cmd->add_flag("--json", un.json, "emit the JSON report");

  LawsArgs lw;
  auto* laws = app.add_subcommand("laws", "run a law suite over a finite model family");
  laws->add_option("--suite", lw.suite, "suite name (default: core)");
  laws->add_option("--model", lw.model, "model family")
      ->check(CLI::IsMember({"rel", "lang", "path"}));
  laws->add_option("--states", lw.states, "state count for rel/path models")->check(CLI::Range(1, 8));
  laws->add_option("--alphabet", lw.alphabet, "alphabet size for the lang model")->check(CLI::Range(1, 26));
  laws->add_option("--bound", lw.bound, "length bound for lang/path models");
  laws->add_option("--samples", lw.samples, "sample count (0 = exhaustive)");
  laws->add_option("--seed", lw.seed, "sampling seed");
  laws->add_flag("--json", lw.json, "emit the JSON report");
  laws->add_flag("--list", lw.list, "print the law library as JSON and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInfrastructure;
  }

  try {
    if (*analyze) return run_analyze(an);
    if (*newman) return run_newman(nw);
    if (*union_cmd) return run_union(un);
    return run_laws(lw);
  } catch (const katd::Error& e) {
    std::cerr << "katd: error: " << e.what() << "\n";
    return kExitInfrastructure;
  }
}
