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
#include <string>

#include "doctest.h"
#include "katd/ars.hpp"
#include "katd/lang_model.hpp"
#include "katd/laws/suite.hpp"
#include "katd/rel_model.hpp"
#include "katd/report.hpp"

using katd::ArsSystem;
using katd::parse_ars;
using katd::ParseError;

namespace {

std::string data_path(const char* name) {
  return std::string(KATD_TEST_DATA_DIR) + "/" + name;
}

// Message-checked throw: doctest's CHECK_THROWS_WITH depends on exception
// text, which is exactly what these tests pin (line numbers included).
#define CHECK_PARSE_ERROR(text, message) CHECK_THROWS_WITH(parse_ars(text), message)

}  // namespace

TEST_CASE("parser builds states and relations in declaration order") {
  ArsSystem sys = parse_ars("states: A B\na: A -> A\na: A -> B\n");
  REQUIRE(sys.state_count() == 2);
  CHECK(sys.states == std::vector<std::string>{"A", "B"});
  CHECK(sys.state_index("A") == 0);
  CHECK(sys.state_index("B") == 1);
  CHECK(sys.state_index("C") == -1);
  REQUIRE(sys.relations.size() == 1);
  const katd::FiniteRelation* a = sys.relation("a");
  REQUIRE(a != nullptr);
  CHECK(a->at(0, 0));
  CHECK(a->at(0, 1));
  CHECK_FALSE(a->at(1, 0));
  CHECK_FALSE(a->at(1, 1));
  CHECK(sys.relation("b") == nullptr);
}

TEST_CASE("parser accepts numeric state names and multiple relations") {
  ArsSystem sys = katd::parse_ars_file(data_path("newman4.ars"));
  CHECK(sys.states == std::vector<std::string>{"1", "2", "3", "4"});
  REQUIRE(sys.relations.size() == 2);
  CHECK(sys.relations[0].first == "a");
  CHECK(sys.relations[1].first == "b");
  const katd::FiniteRelation* a = sys.relation("a");
  const katd::FiniteRelation* b = sys.relation("b");
  REQUIRE(a != nullptr);
  REQUIRE(b != nullptr);
  CHECK(a->at(1, 2));  // 2 -> 3
  CHECK(a->at(2, 3));  // 3 -> 4
  CHECK(b->at(1, 0));  // 2 -> 1
  CHECK(b->at(2, 1));  // 3 -> 2
  CHECK(a->edge_count() == 2);
  CHECK(b->edge_count() == 2);
}

TEST_CASE("bare declaration yields the empty relation") {
  ArsSystem sys = parse_ars("states: A B\nzero:\na: A -> B\n");
  const katd::FiniteRelation* z = sys.relation("zero");
  REQUIRE(z != nullptr);
  CHECK(z->edge_count() == 0);
  // declaration order is kept even though zero never gains an edge
  CHECK(sys.relations[0].first == "zero");
  CHECK(sys.relations[1].first == "a");
}

TEST_CASE("comments and blank lines are ignored everywhere") {
  ArsSystem sys = parse_ars(
      "# leading comment\n"
      "\n"
      "states: A B   # trailing comment\n"
      "   \t  \n"
      "a: A -> B  # an edge\n"
      "#a: B -> A\n");
  CHECK(sys.state_count() == 2);
  const katd::FiniteRelation* a = sys.relation("a");
  REQUIRE(a != nullptr);
  CHECK(a->at(0, 1));
  CHECK_FALSE(a->at(1, 0));
}

TEST_CASE("parse errors carry 1-based line numbers") {
  CHECK_PARSE_ERROR("a: X -> Y\n", "line 1: states must be declared before relation 'a'");
  CHECK_PARSE_ERROR("states: A\nstates: B\n", "line 2: duplicate states declaration");
  CHECK_PARSE_ERROR("states: A A\n", "line 1: duplicate state 'A'");
  CHECK_PARSE_ERROR("states:\n", "line 1: states declaration names no states");
  CHECK_PARSE_ERROR("states: A ->\n", "line 1: invalid state name '->'");
  CHECK_PARSE_ERROR("states: A\n\na: A -> B\n", "line 3: unknown state 'B'");
  CHECK_PARSE_ERROR("states: A\na: B -> A\n", "line 2: unknown state 'B'");
  CHECK_PARSE_ERROR("states: A\na: A\n", "line 2: expected 'SRC -> DST' after 'a:'");
  CHECK_PARSE_ERROR("states: A\n1a: A -> A\n", "line 2: invalid relation name '1a'");
  CHECK_PARSE_ERROR("states: A\njust words\n", "line 2: expected 'name:' declaration, got 'just words'");
  CHECK_PARSE_ERROR("", "line 1: missing states declaration");
  CHECK_PARSE_ERROR("# only a comment\n", "line 1: missing states declaration");

  std::string many = "states:";
  for (int i = 0; i < 65; ++i) many += " s" + std::to_string(i);
  CHECK_PARSE_ERROR(many, "line 1: more than 64 states");

  try {
    parse_ars("states: A\na: A\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("file loading reads fixtures and rejects missing paths") {
  ArsSystem sys = katd::parse_ars_file(data_path("twostate.ars"));
  CHECK(sys.state_count() == 2);
  CHECK(sys.relation("a") != nullptr);
  CHECK_THROWS_WITH(katd::parse_ars_file(data_path("no-such.ars")),
                    doctest::Contains("cannot open"));
}

TEST_CASE("input digest is 64-bit fnv-1a in fixed-width hex") {
  // published fnv-1a vectors
  CHECK(katd::input_digest("") == "cbf29ce484222325");
  CHECK(katd::input_digest("a") == "af63dc4c8601ec8c");
  CHECK(katd::input_digest("foobar") == "85944171f73967e8");
  CHECK(katd::input_digest("x").size() == 16);
  CHECK(katd::input_digest("x") == katd::input_digest("x"));
  CHECK(katd::input_digest("x") != katd::input_digest("y"));
}

TEST_CASE("analysis json pins the newman fixture end to end") {
  std::string text =
      "states: 1 2 3 4\n"
      "a: 2 -> 3\n"
      "a: 3 -> 4\n"
      "b: 2 -> 1\n"
      "b: 3 -> 2\n";
  ArsSystem sys = parse_ars(text);
  katd::AnalyzeRequest req;
  req.relations = {"a", "b"};
  req.include_union = true;
  nlohmann::ordered_json doc = katd::analysis_json(sys, req, katd::input_digest(text));

  CHECK(doc["input_digest"] == "8cf846fb5582a65b");
  REQUIRE(doc.contains("version"));
  REQUIRE(doc.contains("relations"));
  REQUIRE(doc.contains("pairs"));

  const auto& a = doc["relations"]["a"];
  CHECK(a["noetherian"] == true);
  CHECK(a["divergence"].empty());
  CHECK(a["convergence"] == nlohmann::ordered_json::array({"1", "2", "3", "4"}));
  CHECK(a["normal_forms"] == nlohmann::ordered_json::array({"1", "4"}));
  CHECK(a["omega_empty"] == true);
  CHECK(a["pre_loebian"] == true);
  CHECK(a["loebian"] == false);
  CHECK(a["d_transitive"] == false);

  const auto& u = doc["relations"]["a+b"];
  CHECK(u["noetherian"] == false);
  CHECK(u["divergence"] == nlohmann::ordered_json::array({"2", "3"}));
  CHECK(u["normal_forms"] == nlohmann::ordered_json::array({"1", "4"}));

  const auto& p = doc["pairs"]["a,b"];
  CHECK(p["locally_d_commutes"] == true);
  CHECK(p["d_commutes"] == false);
  CHECK(p["commuting_core"] == nlohmann::ordered_json::array({"1", "4"}));
  CHECK(p["newman"]["hypotheses_met"] == false);
  CHECK(p["newman"]["conclusion"] == false);
  CHECK(p["union"]["quasi_commutes"] == false);
  CHECK(p["union"]["biconditional_holds"] == false);

  // the union relation participates in no pair
  CHECK(doc["pairs"].size() == 1);

  // serialization is deterministic: same input, same bytes
  nlohmann::ordered_json again = katd::analysis_json(sys, req, katd::input_digest(text));
  CHECK(doc.dump(2) == again.dump(2));

  CHECK_THROWS_WITH((void)katd::analysis_json(sys, {{"c"}, false}, "x"),
                    "unknown relation 'c'");
}

TEST_CASE("analysis text renders one line per relation and pair") {
  ArsSystem sys = katd::parse_ars_file(data_path("newman4.ars"));
  katd::AnalyzeRequest req;
  req.relations = {"a", "b"};
  req.include_union = true;
  std::string text = katd::analysis_text(sys, req);
  CHECK(text ==
        "relation a: noetherian=yes divergence={} convergence={1,2,3,4} normal_forms={1,4} "
        "omega_empty=yes pre_loebian=yes loebian=no d_transitive=no\n"
        "relation b: noetherian=yes divergence={} convergence={1,2,3,4} normal_forms={1,4} "
        "omega_empty=yes pre_loebian=yes loebian=no d_transitive=no\n"
        "relation a+b: noetherian=no divergence={2,3} convergence={1,4} normal_forms={1,4} "
        "omega_empty=no pre_loebian=no loebian=no d_transitive=no\n"
        "pair a,b: locally_d_commutes=yes d_commutes=no commuting_core={1,4} witness_state=4\n"
        "  newman: hypotheses not met: a+b not Noetherian; note: d-commutation indeed fails "
        "at state 4\n"
        "  union: hypotheses not met: a does not d-quasi-commute over b; note: the Noetherian "
        "biconditional indeed fails\n");
}

TEST_CASE("one-line verdicts cover met and unmet hypotheses") {
  ArsSystem blocked = katd::parse_ars_file(data_path("newman4.ars"));
  CHECK(katd::newman_text(blocked, "a", "b") ==
        "hypotheses not met: a+b not Noetherian; note: d-commutation indeed fails at state 4");
  CHECK(katd::union_text(blocked, "a", "b") ==
        "hypotheses not met: a does not d-quasi-commute over b; note: the Noetherian "
        "biconditional indeed fails");

  ArsSystem pass = parse_ars("states: A B\na: A -> B\nb:\n");
  CHECK(katd::newman_text(pass, "a", "b") == "hypotheses met; d-commutation holds");
  CHECK(katd::union_text(pass, "a", "b") == "hypotheses met; union Noetherian equivalence holds");

  CHECK_THROWS_WITH((void)katd::newman_text(pass, "a", "c"), "unknown relation 'c'");
  CHECK_THROWS_WITH((void)katd::union_text(pass, "c", "b"), "unknown relation 'c'");
}

TEST_CASE("suite json records the strategy and per-law outcomes") {
  katd::LangModel m(2, 3);
  katd::Strategy strat = katd::Strategy::sample(200, 11);
  katd::SuiteRun run = katd::run_suite(m, "divergence", katd::SuiteOptions{strat, {}});
  nlohmann::ordered_json doc = katd::suite_json(run, strat);

  REQUIRE(doc.contains("version"));
  CHECK(doc["suite"] == "divergence");
  CHECK(doc["model"] == "lang(2,3)");
  CHECK(doc["strategy"]["mode"] == "sampled");
  CHECK(doc["strategy"]["samples"] == 200);
  CHECK(doc["strategy"]["seed"] == 11);
  CHECK(doc["unexpected"] == 0);
  REQUIRE(doc["laws"].is_array());
  CHECK(doc["laws"].size() == run.outcomes.size());
  for (const auto& l : doc["laws"]) {
    REQUIRE(l.contains("name"));
    REQUIRE(l.contains("polarity"));
    REQUIRE(l.contains("status"));
    if (l["status"] != "exempted") REQUIRE(l.contains("expected"));
  }

  // exhaustive rendering on a carrier small enough to stay under the cap
  katd::RelModel rm(2);
  katd::Strategy ex = katd::Strategy::exhaustive();
  katd::SuiteRun run2 = katd::run_suite(rm, "divergence", katd::SuiteOptions{ex, {}});
  nlohmann::ordered_json doc2 = katd::suite_json(run2, ex);
  CHECK(doc2["strategy"]["mode"] == "exhaustive");
  CHECK_FALSE(doc2["strategy"].contains("seed"));
  CHECK(doc2["unexpected"] == 0);

  std::string text = katd::suite_text(run2);
  CHECK(text.find("suite divergence on rel(2)") == 0);
  CHECK(text.find("0 unexpected") != std::string::npos);
  CHECK(text.rfind("ok: ") != std::string::npos);
}
