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

#include <optional>

#include "katd/algebra.hpp"
#include "katd/fixpoint.hpp"
#include "katd/model.hpp"
#include "katd/relation.hpp"

namespace katd {

/// Largest test p with p <= <a>p: the states admitting an infinite forward
/// a-chain. Zero exactly when a admits no infinite descent.
template <ModalModel M>
typename M::Test divergence(const M& m, const typename M::Element& a) {
  TestTransformer<M> f{[&](const typename M::Test& q) { return m.fdia(a, q); }, true, true};
  return gfp(m, f);
}

/// Complement of the divergence: the states from which every a-computation
/// halts. Equivalently the least test p with [a>p <= p.
template <ModalModel M>
typename M::Test convergence(const M& m, const typename M::Element& a) {
  return m.test_not(divergence(m, a));
}

template <ModalModel M>
bool is_noetherian(const M& m, const typename M::Element& a) {
  return m.test_equal(divergence(m, a), m.test_zero());
}

/// Noetherity via the defining quantifier instead of the greatest fixpoint:
/// no nonzero test is expanded by the forward diamond. Exponential in the
/// atom count, so capped; kept as an independent route for cross-checking.
template <ModalModel M>
bool is_noetherian_by_postfix_enumeration(const M& m, const typename M::Element& a, int cap_atoms = -1) {
  require_testspace(m, cap_atoms);
  for (std::uint64_t i = 0; i < m.test_count(); ++i) {
    typename M::Test p = m.test_by_index(i);
    if (m.test_equal(p, m.test_zero())) continue;
    if (m.test_leq(p, m.fdia(a, p))) return false;
  }
  return true;
}

/// States from which no a-step leaves: the complement of the domain.
template <ModalModel M>
typename M::Test normal_forms(const M& m, const typename M::Element& a) {
  return m.test_not(domain(m, a));
}

/// a* restricted to end in a normal form; maps each state to the normal
/// forms it can reach.
template <ModalModel M>
typename M::Element normaliser(const M& m, const typename M::Element& a) {
  return m.mul(m.star(a), m.embed(normal_forms(m, a)));
}

/// <a><a> <= <a> as operators. Both sides are additive, so atoms decide it.
template <ModalModel M>
bool is_d_transitive(const M& m, const typename M::Element& a) {
  for (int i = 0; i < m.atom_count(); ++i) {
    typename M::Test p = m.atom(i);
    if (!m.test_leq(m.fdia(a, m.fdia(a, p)), m.fdia(a, p))) return false;
  }
  return true;
}

/// <a>p <= <a>+ max_a(p) for every test p, with the transitive closure taken
/// of the diamond as an operator. max_a is not additive, so the whole test
/// space is swept (capped).
template <ModalModel M>
bool is_pre_loebian(const M& m, const typename M::Element& a, int cap_atoms = -1) {
  require_testspace(m, cap_atoms);
  for (std::uint64_t i = 0; i < m.test_count(); ++i) {
    typename M::Test p = m.test_by_index(i);
    if (!m.test_leq(m.fdia(a, p), fdia_op_plus(m, a, max_part(m, a, p)))) return false;
  }
  return true;
}

/// <a>p <= <a> max_a(p) for every test p (capped sweep, as above).
template <ModalModel M>
bool is_loebian(const M& m, const typename M::Element& a, int cap_atoms = -1) {
  require_testspace(m, cap_atoms);
  for (std::uint64_t i = 0; i < m.test_count(); ++i) {
    typename M::Test p = m.test_by_index(i);
    if (!m.test_leq(m.fdia(a, p), m.fdia(a, max_part(m, a, p)))) return false;
  }
  return true;
}

template <HasOmega M>
bool is_omega_noetherian(const M& m, const typename M::Element& a) {
  return m.equal(m.omega(a), m.zero());
}

template <ModalModel M>
struct TerminationReport {
  typename M::Test divergence;
  typename M::Test convergence;
  typename M::Test normal_forms;
  typename M::Element normaliser;
  bool noetherian = false;
  bool pre_loebian = false;
  bool loebian = false;
  bool d_transitive = false;
  std::optional<bool> omega_empty;  // absent when the model has no omega
};

/// Full termination analysis with internal consistency checks. The checked
/// implications are theorems of the operator algebra, so a violation means a
/// computation bug, not an interesting input; it is reported as an Error.
template <ModalModel M>
TerminationReport<M> analyze_termination(const M& m, const typename M::Element& a) {
  TerminationReport<M> r{divergence(m, a),  convergence(m, a),      normal_forms(m, a),
                         normaliser(m, a),  is_noetherian(m, a),    is_pre_loebian(m, a),
                         is_loebian(m, a),  is_d_transitive(m, a),  std::nullopt};
  if constexpr (HasOmega<M>) {
    typename M::Element w = m.omega(a);
    r.omega_empty = m.equal(w, m.zero());
    if (!m.test_leq(domain(m, w), r.divergence))
      throw Error("termination invariant violated: dom(omega) exceeds divergence");
  }
  if (r.noetherian != m.test_equal(r.divergence, m.test_zero()))
    throw Error("termination invariant violated: noetherity vs divergence");
  if (!m.test_equal(r.convergence, m.test_not(r.divergence)))
    throw Error("termination invariant violated: convergence must complement divergence");
  // Normal forms are definable three ways; all must agree.
  if (!m.test_equal(r.normal_forms, fbox(m, a, m.test_zero())) ||
      !m.test_equal(r.normal_forms, max_part(m, a, m.test_one())))
    throw Error("termination invariant violated: normal-form routes disagree");
  {
    typename M::Element nf = m.embed(r.normal_forms);
    if (!m.equal(m.mul(nf, a), m.zero()))
      throw Error("termination invariant violated: a normal form admits a step");
    if (!m.equal(m.mul(nf, m.star(a)), nf))
      throw Error("termination invariant violated: normal forms must be star-fixed");
  }
  if (!m.equal(m.mul(r.normaliser, r.normaliser), r.normaliser))
    throw Error("termination invariant violated: normaliser must be idempotent");
  if (r.noetherian != r.pre_loebian)
    throw Error("termination invariant violated: noetherity vs pre-Loebian");
  if (r.loebian && !r.pre_loebian)
    throw Error("termination invariant violated: Loebian must imply pre-Loebian");
  if (r.d_transitive && r.loebian != r.pre_loebian)
    throw Error("termination invariant violated: under d-transitivity Loebian and pre-Loebian coincide");
  if (r.noetherian && !m.test_equal(domain(m, r.normaliser), m.test_one()))
    throw Error("termination invariant violated: noetherity must make the normaliser total");
  return r;
}

/// Graph-walk routes for finite relations, independent of the fixpoint and
/// star machinery above: a state diverges exactly when it reaches a cycle.
StateSet divergence_oracle(const FiniteRelation& a);
bool noetherian_oracle(const FiniteRelation& a);

}  // namespace katd
