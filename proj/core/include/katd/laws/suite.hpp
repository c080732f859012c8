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
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "katd/laws/engine.hpp"
#include "katd/laws/library.hpp"

namespace katd {

struct SuiteOptions {
  Strategy strategy = Strategy::exhaustive();
  EngineLimits limits;
};

// One law's fate in a suite run. A law outside the model family never
// appears; a law on the model's exemption list appears unchecked, so
// reports stay honest about what was not verified.
struct LawOutcome {
  std::string name;
  Polarity polarity = Polarity::MustHold;
  bool exempted = false;
  LawVerdict verdict;
  bool unexpected = false;  // verdict contradicts the law's polarity
};

struct SuiteRun {
  std::string suite;
  std::string model;
  std::vector<LawOutcome> outcomes;
  int unexpected_count = 0;
};

template <ModalModel M>
SuiteRun run_suite(const M& m, const std::string& suite, const SuiteOptions& opt = {}) {
  SuiteRun run;
  run.suite = suite;
  run.model = m.describe();
  const std::string family = m.family();
  const std::vector<std::string> exempt = m.exempted_laws();

  for (const Law& law : builtin_library()) {
    if (std::find(law.suites.begin(), law.suites.end(), suite) == law.suites.end()) continue;
    if (std::find(law.models.begin(), law.models.end(), family) == law.models.end()) continue;

    LawOutcome out;
    out.name = law.name;
    out.polarity = law.polarity;
    if (std::find(exempt.begin(), exempt.end(), law.name) != exempt.end()) {
      out.exempted = true;
      out.verdict.law = law.name;
      out.verdict.model = run.model;
      run.outcomes.push_back(std::move(out));
      continue;
    }
    CheckResult<M> res = check_law(m, law, opt.strategy, opt.limits);
    out.verdict = res.verdict;
    bool refuted = out.verdict.status == LawVerdict::Status::Counterexample;
    out.unexpected = (law.polarity == Polarity::MustHold) ? refuted : !refuted;
    if (out.unexpected) ++run.unexpected_count;
    run.outcomes.push_back(std::move(out));
  }
  return run;
}

}  // namespace katd
