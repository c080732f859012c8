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

#include <string>
#include <vector>

#include "katd/laws/expr.hpp"

namespace katd {

// A law is a universally quantified implication between atomic conditions.
// Implications live at this level, never inside the term language, which
// stays equational; quantifier structure is explicit in the condition kinds.

enum class Rel { Leq, Eq };

enum class CondKind {
  TestRel,  // relation between two test terms
  ElemRel,  // relation between two element terms
  OpIneq,   // relation between two test terms, quantified over one test var
  Pred,     // named predicate of element terms
};

enum class PredKind {
  Noetherian,
  NoetherianByEnumeration,  // quantifier route: no nonzero postfixpoint of the diamond
  DTransitive,
  PreLoebian,
  Loebian,
  LocallyDSemiCommutes,
  DSemiCommutes,
  DQuasiCommutes,
  LocallyDCommutes,
  DCommutes,
  DConfluent,
  DDeterministic,
};

struct Condition {
  CondKind kind = CondKind::TestRel;
  bool negated = false;
  Rel rel = Rel::Leq;
  TestPtr t_lhs, t_rhs;  // TestRel and OpIneq
  ElemPtr e_lhs, e_rhs;  // ElemRel
  // OpIneq only: the quantified test variable, and whether additivity of
  // both sides lets atoms decide the sweep.
  int bound_var = -1;
  bool atoms_sufficient = false;
  // Pred only.
  PredKind pred = PredKind::Noetherian;
  std::vector<ElemPtr> pred_args;  // element terms the predicate ranges over
};

Condition test_leq(TestPtr lhs, TestPtr rhs);
Condition test_eq(TestPtr lhs, TestPtr rhs);
Condition elem_leq(ElemPtr lhs, ElemPtr rhs);
Condition elem_eq(ElemPtr lhs, ElemPtr rhs);
Condition op_leq(int bound_var, TestPtr lhs, TestPtr rhs, bool atoms_sufficient);
Condition op_eq(int bound_var, TestPtr lhs, TestPtr rhs, bool atoms_sufficient);
Condition pred(PredKind kind, std::vector<ElemPtr> args);
Condition negate(Condition c);

enum class Polarity {
  MustHold,  // a theorem: any counterexample is a bug
  MustFail,  // a refuted non-theorem: the search must produce a counterexample
};

// Constructive sampling hooks for laws whose hypotheses are rare under
// uniform draws. A model that lacks the hook falls back to rejection.
enum class Generator {
  None,
  NoetherianSumPair,  // two elements whose sum is acyclic, for the first two element vars
  EpsFreeLang,        // nonempty languages without the empty word
};

struct Law {
  std::string name;
  std::string citation;
  std::vector<std::string> elem_vars;
  std::vector<std::string> test_vars;  // includes any OpIneq-bound variables
  std::vector<Condition> hypotheses;
  Condition conclusion;
  Polarity polarity = Polarity::MustHold;
  std::vector<std::string> models;  // model families the law ranges over
  std::vector<std::string> suites;
  Generator generator = Generator::None;
};

/// Variable indices bound by some OpIneq condition; the engine enumerates
/// only the remaining test variables.
std::vector<int> bound_test_vars(const Law& law);

std::string to_string(const Condition& c, const Law& law);

}  // namespace katd
