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

#include <vector>

#include "katd/algebra.hpp"
#include "katd/errors.hpp"
#include "katd/fixpoint.hpp"
#include "katd/laws/law.hpp"
#include "katd/model.hpp"
#include "katd/rewriting.hpp"
#include "katd/termination.hpp"

namespace katd {

/// One point of the quantified variable space. Slots for OpIneq-bound test
/// variables exist here too; they are scratch space for the sweeps and
/// meaningless outside them.
template <ModalModel M>
struct Assignment {
  std::vector<typename M::Element> elems;
  std::vector<typename M::Test> tests;
};

template <ModalModel M>
typename M::Test eval_test(const M& m, const TestPtr& t, const Assignment<M>& asg);

template <ModalModel M>
typename M::Element eval_elem(const M& m, const ElemPtr& e, const Assignment<M>& asg) {
  switch (e->op) {
    case ElemOp::Var: return asg.elems.at(static_cast<std::size_t>(e->var));
    case ElemOp::Zero: return m.zero();
    case ElemOp::One: return m.one();
    case ElemOp::Top: return m.top();
    case ElemOp::Add: return m.add(eval_elem(m, e->lhs, asg), eval_elem(m, e->rhs, asg));
    case ElemOp::Mul: return m.mul(eval_elem(m, e->lhs, asg), eval_elem(m, e->rhs, asg));
    case ElemOp::Star: return m.star(eval_elem(m, e->lhs, asg));
    case ElemOp::Plus: {
      typename M::Element x = eval_elem(m, e->lhs, asg);
      return m.mul(x, m.star(x));
    }
    case ElemOp::Omega:
      if constexpr (HasOmega<M>) {
        return m.omega(eval_elem(m, e->lhs, asg));
      } else {
        throw UnsupportedOperation("omega is not available on model " + m.describe());
      }
    case ElemOp::Embed: return m.embed(eval_test(m, e->test, asg));
  }
  throw EvalError("unhandled element operator");
}

template <ModalModel M>
typename M::Test eval_test(const M& m, const TestPtr& t, const Assignment<M>& asg) {
  switch (t->op) {
    case TestOp::Var: return asg.tests.at(static_cast<std::size_t>(t->var));
    case TestOp::Zero: return m.test_zero();
    case TestOp::One: return m.test_one();
    case TestOp::Not: return m.test_not(eval_test(m, t->tlhs, asg));
    case TestOp::Join: return m.test_join(eval_test(m, t->tlhs, asg), eval_test(m, t->trhs, asg));
    case TestOp::Meet: return m.test_meet(eval_test(m, t->tlhs, asg), eval_test(m, t->trhs, asg));
    case TestOp::Implies:
      return m.test_join(m.test_not(eval_test(m, t->tlhs, asg)), eval_test(m, t->trhs, asg));
    case TestOp::Fdia: return m.fdia(eval_elem(m, t->elem, asg), eval_test(m, t->tlhs, asg));
    case TestOp::Bdia: return m.bdia(eval_elem(m, t->elem, asg), eval_test(m, t->tlhs, asg));
    case TestOp::Fbox: return fbox(m, eval_elem(m, t->elem, asg), eval_test(m, t->tlhs, asg));
    case TestOp::Bbox: return bbox(m, eval_elem(m, t->elem, asg), eval_test(m, t->tlhs, asg));
    case TestOp::Dom: return domain(m, eval_elem(m, t->elem, asg));
    case TestOp::Cod: return codomain(m, eval_elem(m, t->elem, asg));
    case TestOp::MaxPart:
      return max_part(m, eval_elem(m, t->elem, asg), eval_test(m, t->tlhs, asg));
    case TestOp::MinPart:
      return min_part(m, eval_elem(m, t->elem, asg), eval_test(m, t->tlhs, asg));
    case TestOp::Nabla: return divergence(m, eval_elem(m, t->elem, asg));
    case TestOp::Cvg: return convergence(m, eval_elem(m, t->elem, asg));
    case TestOp::MuDia: {
      typename M::Element a = eval_elem(m, t->elem, asg);
      typename M::Test p = eval_test(m, t->tlhs, asg);
      TestTransformer<M> f{[&](const typename M::Test& x) { return m.test_join(p, m.fdia(a, x)); },
                           true, false};
      return lfp(m, f);
    }
    case TestOp::NuDia: {
      typename M::Element a = eval_elem(m, t->elem, asg);
      typename M::Test p = eval_test(m, t->tlhs, asg);
      TestTransformer<M> f{[&](const typename M::Test& x) { return m.test_join(p, m.fdia(a, x)); },
                           true, false};
      return gfp(m, f);
    }
  }
  throw EvalError("unhandled test operator");
}

namespace detail {

template <ModalModel M>
bool eval_test_rel(const M& m, Rel r, const typename M::Test& l, const typename M::Test& rr) {
  return r == Rel::Leq ? m.test_leq(l, rr) : m.test_equal(l, rr);
}

template <ModalModel M>
bool eval_pred(const M& m, const Condition& c, const Assignment<M>& asg) {
  auto arg = [&](std::size_t i) -> typename M::Element {
    return eval_elem(m, c.pred_args.at(i), asg);
  };
  switch (c.pred) {
    case PredKind::Noetherian: return is_noetherian(m, arg(0));
    case PredKind::NoetherianByEnumeration: return is_noetherian_by_postfix_enumeration(m, arg(0));
    case PredKind::DTransitive: return is_d_transitive(m, arg(0));
    case PredKind::PreLoebian: return is_pre_loebian(m, arg(0));
    case PredKind::Loebian: return is_loebian(m, arg(0));
    case PredKind::LocallyDSemiCommutes: return locally_d_semi_commutes(m, arg(0), arg(1));
    case PredKind::DSemiCommutes: return d_semi_commutes(m, arg(0), arg(1));
    case PredKind::DQuasiCommutes: return d_quasi_commutes(m, arg(0), arg(1));
    case PredKind::LocallyDCommutes: return locally_d_commutes(m, arg(0), arg(1));
    case PredKind::DCommutes: return d_commutes(m, arg(0), arg(1));
    case PredKind::DConfluent: return is_d_confluent(m, arg(0));
    case PredKind::DDeterministic: return is_d_deterministic(m, arg(0));
  }
  throw EvalError("unhandled predicate");
}

}  // namespace detail

/// Evaluates one condition at a point. OpIneq sweeps its bound variable
/// through the assignment's scratch slot: atoms when additivity permits,
/// the whole (capped) test space otherwise.
template <ModalModel M>
bool eval_condition(const M& m, const Condition& c, Assignment<M>& asg) {
  bool value = false;
  switch (c.kind) {
    case CondKind::TestRel:
      value = detail::eval_test_rel(m, c.rel, eval_test(m, c.t_lhs, asg), eval_test(m, c.t_rhs, asg));
      break;
    case CondKind::ElemRel: {
      typename M::Element l = eval_elem(m, c.e_lhs, asg);
      typename M::Element r = eval_elem(m, c.e_rhs, asg);
      value = c.rel == Rel::Leq ? m.leq(l, r) : m.equal(l, r);
      break;
    }
    case CondKind::OpIneq: {
      std::size_t slot = static_cast<std::size_t>(c.bound_var);
      value = true;
      if (c.atoms_sufficient) {
        for (int i = 0; i < m.atom_count() && value; ++i) {
          asg.tests.at(slot) = m.atom(i);
          value = detail::eval_test_rel(m, c.rel, eval_test(m, c.t_lhs, asg), eval_test(m, c.t_rhs, asg));
        }
      } else {
        require_testspace(m);
        for (std::uint64_t i = 0; i < m.test_count() && value; ++i) {
          asg.tests.at(slot) = m.test_by_index(i);
          value = detail::eval_test_rel(m, c.rel, eval_test(m, c.t_lhs, asg), eval_test(m, c.t_rhs, asg));
        }
      }
      break;
    }
    case CondKind::Pred:
      value = detail::eval_pred(m, c, asg);
      break;
  }
  return c.negated ? !value : value;
}

struct LawEvaluation {
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
};

/// The re-evaluation entry point: a counterexample must come back as
/// hypotheses true, conclusion false.
template <ModalModel M>
LawEvaluation evaluate_law_at(const M& m, const Law& law, Assignment<M>& asg) {
  LawEvaluation out;
  out.hypotheses_hold = true;
  for (const Condition& h : law.hypotheses) {
    if (!eval_condition(m, h, asg)) {
      out.hypotheses_hold = false;
      return out;
    }
  }
  out.conclusion_holds = eval_condition(m, law.conclusion, asg);
  return out;
}

}  // namespace katd
