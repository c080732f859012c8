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
#include "katd/report.hpp"

#include <cstdio>
#include <sstream>

#include "katd/prng.hpp"
#include "katd/rel_model.hpp"
#include "katd/rewriting.hpp"
#include "katd/termination.hpp"
#include "katd/version.hpp"

namespace katd {

std::string input_digest(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

namespace {

using ordered_json = nlohmann::ordered_json;

nlohmann::ordered_json state_names(const ArsSystem& sys, const StateSet& t) {
  auto arr = ordered_json::array();
  for (int s : t.members()) arr.push_back(sys.states[static_cast<std::size_t>(s)]);
  return arr;
}

std::string state_set_text(const ArsSystem& sys, const StateSet& t) {
  std::string out = "{";
  bool first = true;
  for (int s : t.members()) {
    if (!first) out += ",";
    out += sys.states[static_cast<std::size_t>(s)];
    first = false;
  }
  return out + "}";
}

const char* yn(bool b) { return b ? "yes" : "no"; }

struct ResolvedRequest {
  // Requested relations in order, then optionally their sum.
  std::vector<std::pair<std::string, FiniteRelation>> items;
  std::size_t pair_count;  // items beyond this index are synthesized
};

ResolvedRequest resolve(const ArsSystem& sys, const AnalyzeRequest& req) {
  ResolvedRequest out{{}, 0};
  for (const std::string& name : req.relations) {
    const FiniteRelation* r = sys.relation(name);
    if (!r) throw Error("unknown relation '" + name + "'");
    out.items.emplace_back(name, *r);
  }
  out.pair_count = out.items.size();
  if (req.include_union && !out.items.empty()) {
    FiniteRelation u(sys.state_count());
    std::string uname;
    for (std::size_t i = 0; i < out.pair_count; ++i) {
      if (i) uname += "+";
      uname += out.items[i].first;
      u = u.sum(out.items[i].second);
    }
    out.items.emplace_back(uname, u);
  }
  return out;
}

ordered_json relation_entry(const ArsSystem& sys, const RelModel& m, const FiniteRelation& r) {
  TerminationReport<RelModel> t = analyze_termination(m, r);
  ordered_json e;
  e["noetherian"] = t.noetherian;
  e["divergence"] = state_names(sys, t.divergence);
  e["convergence"] = state_names(sys, t.convergence);
  e["normal_forms"] = state_names(sys, t.normal_forms);
  e["omega_empty"] = t.omega_empty.value();
  e["pre_loebian"] = t.pre_loebian;
  e["loebian"] = t.loebian;
  e["d_transitive"] = t.d_transitive;
  return e;
}

ordered_json pair_entry(const ArsSystem& sys, const RelModel& m, const FiniteRelation& a,
                        const FiniteRelation& b) {
  CommutationReport<RelModel> c = analyze_commutation(m, a, b);
  NewmanResult nw = check_newman(m, a, b);
  UnionResult un = check_union_theorem(m, a, b);
  ordered_json p;
  p["locally_d_commutes"] = c.locally_d_commutes;
  p["d_commutes"] = c.d_commutes;
  p["commuting_core"] = state_names(sys, c.commuting_core);
  ordered_json nj;
  nj["hypotheses_met"] = nw.hypotheses_met;
  nj["conclusion"] = nw.commutes;
  p["newman"] = nj;
  ordered_json uj;
  uj["quasi_commutes"] = un.quasi_commutes;
  uj["biconditional_holds"] = un.biconditional_holds;
  p["union"] = uj;
  return p;
}

}  // namespace

nlohmann::ordered_json analysis_json(const ArsSystem& sys, const AnalyzeRequest& req,
                                     const std::string& digest) {
  ResolvedRequest res = resolve(sys, req);
  RelModel m(sys.state_count());

  ordered_json doc;
  doc["version"] = kVersion;
  doc["input_digest"] = digest;
  ordered_json rels = ordered_json::object();
  for (const auto& [name, r] : res.items) rels[name] = relation_entry(sys, m, r);
  doc["relations"] = rels;
  ordered_json pairs = ordered_json::object();
  for (std::size_t i = 0; i < res.pair_count; ++i)
    for (std::size_t j = i + 1; j < res.pair_count; ++j)
      pairs[res.items[i].first + "," + res.items[j].first] =
          pair_entry(sys, m, res.items[i].second, res.items[j].second);
  doc["pairs"] = pairs;
  return doc;
}

std::string analysis_text(const ArsSystem& sys, const AnalyzeRequest& req) {
  ResolvedRequest res = resolve(sys, req);
  RelModel m(sys.state_count());

  std::ostringstream out;
  for (const auto& [name, r] : res.items) {
    TerminationReport<RelModel> t = analyze_termination(m, r);
    out << "relation " << name << ": noetherian=" << yn(t.noetherian)
        << " divergence=" << state_set_text(sys, t.divergence)
        << " convergence=" << state_set_text(sys, t.convergence)
        << " normal_forms=" << state_set_text(sys, t.normal_forms)
        << " omega_empty=" << yn(t.omega_empty.value())
        << " pre_loebian=" << yn(t.pre_loebian) << " loebian=" << yn(t.loebian)
        << " d_transitive=" << yn(t.d_transitive) << "\n";
  }
  for (std::size_t i = 0; i < res.pair_count; ++i)
    for (std::size_t j = i + 1; j < res.pair_count; ++j) {
      const auto& [an, ar] = res.items[i];
      const auto& [bn, br] = res.items[j];
      CommutationReport<RelModel> c = analyze_commutation(m, ar, br);
      out << "pair " << an << "," << bn << ": locally_d_commutes=" << yn(c.locally_d_commutes)
          << " d_commutes=" << yn(c.d_commutes)
          << " commuting_core=" << state_set_text(sys, c.commuting_core);
      if (c.witness_atom >= 0)
        out << " witness_state=" << sys.states[static_cast<std::size_t>(c.witness_atom)];
      out << "\n";
      out << "  newman: " << newman_text(sys, an, bn) << "\n";
      out << "  union: " << union_text(sys, an, bn) << "\n";
    }
  return out.str();
}

std::string newman_text(const ArsSystem& sys, const std::string& a, const std::string& b) {
  const FiniteRelation* ra = sys.relation(a);
  if (!ra) throw Error("unknown relation '" + a + "'");
  const FiniteRelation* rb = sys.relation(b);
  if (!rb) throw Error("unknown relation '" + b + "'");
  RelModel m(sys.state_count());
  NewmanResult r = check_newman(m, *ra, *rb);
  CommutationReport<RelModel> c = analyze_commutation(m, *ra, *rb);
  std::string witness = c.witness_atom >= 0
                            ? sys.states[static_cast<std::size_t>(c.witness_atom)]
                            : std::string("?");

  if (r.status == TheoremStatus::Pass) return "hypotheses met; d-commutation holds";
  if (r.status == TheoremStatus::Violated)
    return "THEOREM VIOLATION: hypotheses met but d-commutation fails at state " + witness;

  std::string out = "hypotheses not met: ";
  bool first = true;
  if (!r.noetherian_sum) {
    out += a + "+" + b + " not Noetherian";
    first = false;
  }
  if (!r.locally_commutes) {
    if (!first) out += "; ";
    out += a + " and " + b + " do not locally d-commute";
  }
  if (r.commutes)
    out += "; note: d-commutation holds regardless";
  else
    out += "; note: d-commutation indeed fails at state " + witness;
  return out;
}

std::string union_text(const ArsSystem& sys, const std::string& a, const std::string& b) {
  const FiniteRelation* ra = sys.relation(a);
  if (!ra) throw Error("unknown relation '" + a + "'");
  const FiniteRelation* rb = sys.relation(b);
  if (!rb) throw Error("unknown relation '" + b + "'");
  RelModel m(sys.state_count());
  UnionResult r = check_union_theorem(m, *ra, *rb);

  if (r.status == TheoremStatus::Pass)
    return "hypotheses met; union Noetherian equivalence holds";
  if (r.status == TheoremStatus::Violated)
    return "THEOREM VIOLATION: hypotheses met but " + r.detail;

  std::string out = "hypotheses not met: " + a + " does not d-quasi-commute over " + b;
  if (r.biconditional_holds)
    out += "; note: the Noetherian biconditional holds regardless";
  else
    out += "; note: the Noetherian biconditional indeed fails";
  return out;
}

nlohmann::ordered_json suite_json(const SuiteRun& run, const Strategy& strategy) {
  ordered_json doc;
  doc["version"] = kVersion;
  doc["suite"] = run.suite;
  doc["model"] = run.model;
  ordered_json strat;
  strat["mode"] = strategy.sampled ? "sampled" : "exhaustive";
  if (strategy.sampled) {
    strat["samples"] = strategy.samples;
    strat["seed"] = strategy.seed;
  }
  doc["strategy"] = strat;
  ordered_json laws = ordered_json::array();
  for (const LawOutcome& o : run.outcomes) {
    ordered_json l;
    l["name"] = o.name;
    l["polarity"] = o.polarity == Polarity::MustHold ? "must-hold" : "must-fail";
    if (o.exempted) {
      l["status"] = "exempted";
      laws.push_back(std::move(l));
      continue;
    }
    l["status"] = to_string(o.verdict.status);
    l["enumerated"] = o.verdict.enumerated;
    l["checked"] = o.verdict.checked;
    if (o.verdict.status == LawVerdict::Status::Counterexample) {
      ordered_json cex;
      cex["index"] = o.verdict.index;
      ordered_json asg = ordered_json::object();
      for (const auto& [var, value] : o.verdict.assignment) asg[var] = value;
      cex["assignment"] = asg;
      l["counterexample"] = cex;
    }
    l["expected"] = !o.unexpected;
    laws.push_back(std::move(l));
  }
  doc["laws"] = laws;
  doc["unexpected"] = run.unexpected_count;
  return doc;
}

std::string suite_text(const SuiteRun& run) {
  std::ostringstream out;
  out << "suite " << run.suite << " on " << run.model << "\n";
  for (const LawOutcome& o : run.outcomes) {
    out << "  " << o.name << ": ";
    if (o.exempted) {
      out << "exempted on this model\n";
      continue;
    }
    switch (o.verdict.status) {
      case LawVerdict::Status::HoldsExhaustive:
        out << "holds-exhaustive (" << o.verdict.enumerated << " assignments, "
            << o.verdict.checked << " admissible)";
        break;
      case LawVerdict::Status::HoldsSampled:
        out << "holds-sampled (" << o.verdict.enumerated << " draws, " << o.verdict.checked
            << " admissible, seed " << o.verdict.seed << ")";
        break;
      case LawVerdict::Status::Counterexample: {
        out << "counterexample at index " << o.verdict.index;
        for (const auto& [var, value] : o.verdict.assignment) out << " " << var << "=" << value;
        break;
      }
    }
    if (o.polarity == Polarity::MustFail)
      out << (o.unexpected ? " [UNEXPECTED: refutation not found]" : " [expected refutation]");
    else if (o.unexpected)
      out << " [UNEXPECTED]";
    out << "\n";
  }
  out << (run.unexpected_count == 0 ? "ok: " : "FAIL: ") << run.outcomes.size()
      << " laws, " << run.unexpected_count << " unexpected\n";
  return out.str();
}

}  // namespace katd
