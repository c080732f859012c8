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
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "katd/laws/eval.hpp"
#include "katd/prng.hpp"

namespace katd {

struct Strategy {
  bool sampled = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static Strategy exhaustive() { return {}; }
  static Strategy sample(std::uint64_t count, std::uint64_t seed) { return {true, count, seed}; }
};

struct EngineLimits {
  std::uint64_t max_assignments = std::uint64_t{1} << 24;
};

struct LawVerdict {
  enum class Status { HoldsExhaustive, HoldsSampled, Counterexample };
  std::string law;
  Status status = Status::HoldsExhaustive;
  std::string model;          // descriptor of the model swept
  std::uint64_t enumerated = 0;  // assignments visited (drawn, in sampled mode)
  std::uint64_t checked = 0;     // assignments whose hypotheses held
  std::uint64_t seed = 0;        // sampled mode only
  std::uint64_t index = 0;       // counterexample position for reproduction
  /// Counterexample payload: variable name -> printed value.
  std::vector<std::pair<std::string, std::string>> assignment;
};

inline const char* to_string(LawVerdict::Status s) {
  switch (s) {
    case LawVerdict::Status::HoldsExhaustive: return "holds-exhaustive";
    case LawVerdict::Status::HoldsSampled: return "holds-sampled";
    case LawVerdict::Status::Counterexample: return "counterexample";
  }
  return "?";
}

template <ModalModel M>
struct CheckResult {
  LawVerdict verdict;
  std::optional<Assignment<M>> counterexample;
};

namespace detail {

template <ModalModel M>
void record_counterexample(const M& m, const Law& law, const Assignment<M>& asg, LawVerdict& v) {
  for (std::size_t i = 0; i < law.elem_vars.size(); ++i)
    v.assignment.emplace_back(law.elem_vars[i], m.print_element(asg.elems[i]));
  std::vector<int> bound = bound_test_vars(law);
  for (std::size_t i = 0; i < law.test_vars.size(); ++i) {
    if (std::find(bound.begin(), bound.end(), static_cast<int>(i)) != bound.end()) continue;
    v.assignment.emplace_back(law.test_vars[i], m.print_test(asg.tests[i]));
  }
}

/// Draws one sampled assignment; the generator hook, when present on the
/// model, replaces the uniform draw for the element variables it covers.
template <ModalModel M>
void draw_assignment(const M& m, const Law& law, RandomStream& rng, Assignment<M>& asg) {
  std::size_t next_elem = 0;
  if (law.generator == Generator::NoetherianSumPair && law.elem_vars.size() >= 2) {
    if constexpr (requires { m.random_noetherian_sum_pair(rng); }) {
      auto [x, y] = m.random_noetherian_sum_pair(rng);
      asg.elems[0] = x;
      asg.elems[1] = y;
      next_elem = 2;
    }
  }
  if (law.generator == Generator::EpsFreeLang) {
    if constexpr (requires { m.random_nonempty_epsfree(rng); }) {
      for (; next_elem < law.elem_vars.size(); ++next_elem)
        asg.elems[next_elem] = m.random_nonempty_epsfree(rng);
    }
  }
  for (; next_elem < law.elem_vars.size(); ++next_elem) asg.elems[next_elem] = m.random_element(rng);
  std::vector<int> bound = bound_test_vars(law);
  for (std::size_t i = 0; i < law.test_vars.size(); ++i) {
    if (std::find(bound.begin(), bound.end(), static_cast<int>(i)) != bound.end()) continue;
    asg.tests[i] = m.random_test(rng);
  }
}

}  // namespace detail

/// Sweeps the law's variable space. Exhaustive order is mixed-radix with the
/// first declared variable most significant and element/test indices
/// ascending, so the reported counterexample is the minimal one; sampling is
/// keyed by (seed, law name, draw index) and therefore order-independent.
template <ModalModel M>
CheckResult<M> check_law(const M& m, const Law& law, const Strategy& strategy,
                         const EngineLimits& limits = {}) {
  CheckResult<M> out;
  out.verdict.law = law.name;
  out.verdict.model = m.describe();

  Assignment<M> asg;
  asg.elems.assign(law.elem_vars.size(), m.zero());
  asg.tests.assign(law.test_vars.size(), m.test_zero());

  std::vector<int> bound = bound_test_vars(law);
  std::vector<std::size_t> free_tests;
  for (std::size_t i = 0; i < law.test_vars.size(); ++i)
    if (std::find(bound.begin(), bound.end(), static_cast<int>(i)) == bound.end())
      free_tests.push_back(i);

  if (strategy.sampled) {
    out.verdict.status = LawVerdict::Status::HoldsSampled;
    out.verdict.seed = strategy.seed;
    for (std::uint64_t k = 0; k < strategy.samples; ++k) {
      RandomStream rng = stream_for(strategy.seed, law.name, k);
      detail::draw_assignment(m, law, rng, asg);
      ++out.verdict.enumerated;
      LawEvaluation ev = evaluate_law_at(m, law, asg);
      if (!ev.hypotheses_hold) continue;
      ++out.verdict.checked;
      if (!ev.conclusion_holds) {
        out.verdict.status = LawVerdict::Status::Counterexample;
        out.verdict.index = k;
        detail::record_counterexample(m, law, asg, out.verdict);
        out.counterexample = asg;
        return out;
      }
    }
    return out;
  }

  std::uint64_t elem_radix = m.element_count();
  std::uint64_t test_radix = m.test_count();
  if (elem_radix == 0 && !law.elem_vars.empty())
    throw CapExceeded("element space of " + m.describe() + " is not enumerable");
  if (!free_tests.empty()) require_testspace(m);

  std::vector<std::uint64_t> radix;
  for (std::size_t i = 0; i < law.elem_vars.size(); ++i) radix.push_back(elem_radix);
  for (std::size_t i = 0; i < free_tests.size(); ++i) radix.push_back(test_radix);
  std::uint64_t total = 1;
  for (std::uint64_t r : radix) {
    if (r == 0 || total > limits.max_assignments / r)
      throw CapExceeded("assignment space exceeds the enumeration cap for " + law.name);
    total *= r;
  }

  out.verdict.status = LawVerdict::Status::HoldsExhaustive;
  std::vector<std::uint64_t> digits(radix.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (std::size_t i = 0; i < law.elem_vars.size(); ++i)
      asg.elems[i] = m.element_by_index(digits[i]);
    for (std::size_t j = 0; j < free_tests.size(); ++j)
      asg.tests[free_tests[j]] = m.test_by_index(digits[law.elem_vars.size() + j]);
    ++out.verdict.enumerated;
    LawEvaluation ev = evaluate_law_at(m, law, asg);
    if (ev.hypotheses_hold) {
      ++out.verdict.checked;
      if (!ev.conclusion_holds) {
        out.verdict.status = LawVerdict::Status::Counterexample;
        out.verdict.index = idx;
        detail::record_counterexample(m, law, asg, out.verdict);
        out.counterexample = asg;
        return out;
      }
    }
    for (std::size_t pos = digits.size(); pos-- > 0;) {
      if (++digits[pos] < radix[pos]) break;
      digits[pos] = 0;
    }
  }
  return out;
}

}  // namespace katd
