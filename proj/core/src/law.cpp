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
#include "katd/laws/law.hpp"

#include <algorithm>

namespace katd {

Condition test_leq(TestPtr lhs, TestPtr rhs) {
  Condition c;
  c.kind = CondKind::TestRel;
  c.rel = Rel::Leq;
  c.t_lhs = std::move(lhs);
  c.t_rhs = std::move(rhs);
  return c;
}

Condition test_eq(TestPtr lhs, TestPtr rhs) {
  Condition c = test_leq(std::move(lhs), std::move(rhs));
  c.rel = Rel::Eq;
  return c;
}

Condition elem_leq(ElemPtr lhs, ElemPtr rhs) {
  Condition c;
  c.kind = CondKind::ElemRel;
  c.rel = Rel::Leq;
  c.e_lhs = std::move(lhs);
  c.e_rhs = std::move(rhs);
  return c;
}

Condition elem_eq(ElemPtr lhs, ElemPtr rhs) {
  Condition c = elem_leq(std::move(lhs), std::move(rhs));
  c.rel = Rel::Eq;
  return c;
}

Condition op_leq(int bound_var, TestPtr lhs, TestPtr rhs, bool atoms_sufficient) {
  Condition c;
  c.kind = CondKind::OpIneq;
  c.rel = Rel::Leq;
  c.t_lhs = std::move(lhs);
  c.t_rhs = std::move(rhs);
  c.bound_var = bound_var;
  c.atoms_sufficient = atoms_sufficient;
  return c;
}

Condition op_eq(int bound_var, TestPtr lhs, TestPtr rhs, bool atoms_sufficient) {
  Condition c = op_leq(bound_var, std::move(lhs), std::move(rhs), atoms_sufficient);
  c.rel = Rel::Eq;
  return c;
}

Condition pred(PredKind kind, std::vector<ElemPtr> args) {
  Condition c;
  c.kind = CondKind::Pred;
  c.pred = kind;
  c.pred_args = std::move(args);
  return c;
}

Condition negate(Condition c) {
  c.negated = !c.negated;
  return c;
}

std::vector<int> bound_test_vars(const Law& law) {
  std::vector<int> out;
  auto note = [&](const Condition& c) {
    if (c.kind == CondKind::OpIneq && std::find(out.begin(), out.end(), c.bound_var) == out.end())
      out.push_back(c.bound_var);
  };
  for (const Condition& h : law.hypotheses) note(h);
  note(law.conclusion);
  return out;
}

namespace {

const char* pred_name(PredKind k) {
  switch (k) {
    case PredKind::Noetherian: return "noetherian";
    case PredKind::NoetherianByEnumeration: return "noetherian-by-enumeration";
    case PredKind::DTransitive: return "d-transitive";
    case PredKind::PreLoebian: return "pre-loebian";
    case PredKind::Loebian: return "loebian";
    case PredKind::LocallyDSemiCommutes: return "locally-d-semi-commutes";
    case PredKind::DSemiCommutes: return "d-semi-commutes";
    case PredKind::DQuasiCommutes: return "d-quasi-commutes";
    case PredKind::LocallyDCommutes: return "locally-d-commutes";
    case PredKind::DCommutes: return "d-commutes";
    case PredKind::DConfluent: return "d-confluent";
    case PredKind::DDeterministic: return "d-deterministic";
  }
  return "?";
}

}  // namespace

std::string to_string(const Condition& c, const Law& law) {
  std::string body;
  const char* rel = (c.rel == Rel::Leq) ? " <= " : " == ";
  switch (c.kind) {
    case CondKind::TestRel:
      body = to_string(c.t_lhs, law.elem_vars, law.test_vars) + rel +
             to_string(c.t_rhs, law.elem_vars, law.test_vars);
      break;
    case CondKind::ElemRel:
      body = to_string(c.e_lhs, law.elem_vars, law.test_vars) + rel +
             to_string(c.e_rhs, law.elem_vars, law.test_vars);
      break;
    case CondKind::OpIneq:
      body = std::string("forall ") + (c.atoms_sufficient ? "atoms " : "") +
             law.test_vars[static_cast<std::size_t>(c.bound_var)] + ": " +
             to_string(c.t_lhs, law.elem_vars, law.test_vars) + rel +
             to_string(c.t_rhs, law.elem_vars, law.test_vars);
      break;
    case CondKind::Pred: {
      body = std::string(pred_name(c.pred)) + "(";
      for (std::size_t i = 0; i < c.pred_args.size(); ++i) {
        if (i) body += ",";
        body += to_string(c.pred_args[i], law.elem_vars, law.test_vars);
      }
      body += ")";
      break;
    }
  }
  if (c.negated) return "not(" + body + ")";
  return body;
}

}  // namespace katd
