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

#include "katd/algebra.hpp"
#include "katd/model.hpp"
#include "katd/termination.hpp"

namespace katd {

/// Commutation properties of a pair of abstract reduction relations, phrased
/// as inequalities between composed diamonds. Operators compose right to
/// left, so <b><a>p asks for a b-step from here to somewhere with an a-step
/// into p. Every operator below is additive in its test argument, so the
/// universally quantified inequalities are decided on atoms.

/// <b><a> <= <a+><b*>: one b-step before an a-step can be traded for a
/// nonempty a-sequence followed by b-steps.
template <ModalModel M>
bool locally_d_semi_commutes(const M& m, const typename M::Element& a, const typename M::Element& b) {
  typename M::Element ap = m.mul(a, m.star(a));
  typename M::Element bs = m.star(b);
  for (int i = 0; i < m.atom_count(); ++i) {
    typename M::Test q = m.atom(i);
    if (!m.test_leq(m.fdia(b, m.fdia(a, q)), m.fdia(ap, m.fdia(bs, q)))) return false;
  }
  return true;
}

/// <b*><a> <= <a+><b*>: the same with arbitrarily many leading b-steps.
template <ModalModel M>
bool d_semi_commutes(const M& m, const typename M::Element& a, const typename M::Element& b) {
  typename M::Element ap = m.mul(a, m.star(a));
  typename M::Element bs = m.star(b);
  for (int i = 0; i < m.atom_count(); ++i) {
    typename M::Test q = m.atom(i);
    if (!m.test_leq(m.fdia(bs, m.fdia(a, q)), m.fdia(ap, m.fdia(bs, q)))) return false;
  }
  return true;
}

/// <b><a> <= <a><(a+b)*>: a b-step before an a-step can be traded for an
/// a-step followed by any mixed sequence.
template <ModalModel M>
bool d_quasi_commutes(const M& m, const typename M::Element& a, const typename M::Element& b) {
  typename M::Element mix = m.star(m.add(a, b));
  for (int i = 0; i < m.atom_count(); ++i) {
    typename M::Test q = m.atom(i);
    if (!m.test_leq(m.fdia(b, m.fdia(a, q)), m.fdia(a, m.fdia(mix, q)))) return false;
  }
  return true;
}

/// <b|<a> <= <a*><b*|: a one-step peak (b-step out and a-step out of the
/// same state) can be joined by a* and b*.
template <ModalModel M>
bool locally_d_commutes(const M& m, const typename M::Element& a, const typename M::Element& b) {
  typename M::Element as = m.star(a);
  typename M::Element bs = m.star(b);
  for (int i = 0; i < m.atom_count(); ++i) {
    typename M::Test q = m.atom(i);
    if (!m.test_leq(m.bdia(b, m.fdia(a, q)), m.fdia(as, m.bdia(bs, q)))) return false;
  }
  return true;
}

/// <b*|<a*> <= <a*><b*|: every many-step peak joins.
template <ModalModel M>
bool d_commutes(const M& m, const typename M::Element& a, const typename M::Element& b) {
  typename M::Element as = m.star(a);
  typename M::Element bs = m.star(b);
  for (int i = 0; i < m.atom_count(); ++i) {
    typename M::Test q = m.atom(i);
    if (!m.test_leq(m.bdia(bs, m.fdia(as, q)), m.fdia(as, m.bdia(bs, q)))) return false;
  }
  return true;
}

template <ModalModel M>
bool is_locally_d_confluent(const M& m, const typename M::Element& a) {
  return locally_d_commutes(m, a, a);
}

template <ModalModel M>
bool is_d_confluent(const M& m, const typename M::Element& a) {
  return d_commutes(m, a, a);
}

/// <a|<a> <= id: stepping forward then looking back lands where you started.
template <ModalModel M>
bool is_d_deterministic(const M& m, const typename M::Element& a) {
  for (int i = 0; i < m.atom_count(); ++i) {
    typename M::Test q = m.atom(i);
    if (!m.test_leq(m.bdia(a, m.fdia(a, q)), q)) return false;
  }
  return true;
}

template <ModalModel M>
struct CommutationReport {
  bool locally_d_semi_commutes = false;
  bool d_semi_commutes = false;
  bool d_quasi_commutes = false;
  bool locally_d_commutes = false;
  bool d_commutes = false;
  /// Smallest atom witnessing failure of local commutation if it fails,
  /// else of full commutation if that fails, else -1. The semi and quasi
  /// variants do not contribute a witness: the interesting join failures
  /// are the commutation ones, and those are what the witness points at.
  int witness_atom = -1;
  /// Largest test from which a commutes over b; 1 exactly when d_commutes.
  typename M::Test commuting_core;
};

namespace detail {

/// The commutation property relativised to a starting region p:
/// <b*|(p . <a*>q) <= <a*><b*|q for all tests q. Additive in q, so atoms
/// decide it; downward closed and join closed in p.
template <ModalModel M>
bool commutes_from(const M& m, const typename M::Test& p, const typename M::Element& a_star,
                   const typename M::Element& b_star) {
  for (int i = 0; i < m.atom_count(); ++i) {
    typename M::Test q = m.atom(i);
    typename M::Test lhs = m.bdia(b_star, m.test_meet(p, m.fdia(a_star, q)));
    if (!m.test_leq(lhs, m.fdia(a_star, m.bdia(b_star, q)))) return false;
  }
  return true;
}

}  // namespace detail

/// Largest test r from which a commutes over b, as the join of the atoms
/// with the relativised property. Join closure and maximality are rechecked
/// before returning; a failure there is a computation bug.
template <ModalModel M>
typename M::Test commuting_core(const M& m, const typename M::Element& a, const typename M::Element& b) {
  typename M::Element as = m.star(a);
  typename M::Element bs = m.star(b);
  typename M::Test r = m.test_zero();
  for (int i = 0; i < m.atom_count(); ++i) {
    typename M::Test p = m.atom(i);
    if (detail::commutes_from(m, p, as, bs)) r = m.test_join(r, p);
  }
  if (!detail::commutes_from(m, r, as, bs))
    throw Error("commuting core invariant violated: join of good atoms lost the property");
  for (int i = 0; i < m.atom_count(); ++i) {
    typename M::Test p = m.atom(i);
    if (m.test_leq(p, r)) continue;
    if (detail::commutes_from(m, m.test_join(r, p), as, bs))
      throw Error("commuting core invariant violated: a larger test still commutes");
  }
  return r;
}

template <ModalModel M>
CommutationReport<M> analyze_commutation(const M& m, const typename M::Element& a, const typename M::Element& b) {
  CommutationReport<M> r;
  r.locally_d_semi_commutes = locally_d_semi_commutes(m, a, b);
  r.d_semi_commutes = d_semi_commutes(m, a, b);
  r.d_quasi_commutes = d_quasi_commutes(m, a, b);
  r.locally_d_commutes = locally_d_commutes(m, a, b);
  r.d_commutes = d_commutes(m, a, b);
  r.commuting_core = commuting_core(m, a, b);
  typename M::Element as = m.star(a);
  typename M::Element bs = m.star(b);
  if (!r.locally_d_commutes) {
    auto lhs = [&](const typename M::Test& q) { return m.bdia(b, m.fdia(a, q)); };
    auto rhs = [&](const typename M::Test& q) { return m.fdia(as, m.bdia(bs, q)); };
    r.witness_atom = first_violating_atom(m, lhs, rhs);
  } else if (!r.d_commutes) {
    auto lhs = [&](const typename M::Test& q) { return m.bdia(bs, m.fdia(as, q)); };
    auto rhs = [&](const typename M::Test& q) { return m.fdia(as, m.bdia(bs, q)); };
    r.witness_atom = first_violating_atom(m, lhs, rhs);
  }
  // 1 <= star makes the many-step forms strictly stronger, and the core is
  // everything exactly when commutation is unrestricted. A violation here is
  // a computation bug, not an interesting input.
  if (r.d_commutes && !r.locally_d_commutes)
    throw Error("commutation invariant violated: d-commutation without the local form");
  if (r.d_semi_commutes && !r.locally_d_semi_commutes)
    throw Error("commutation invariant violated: d-semi-commutation without the local form");
  if (r.d_commutes != m.test_equal(r.commuting_core, m.test_one()))
    throw Error("commutation invariant violated: commuting core vs d-commutation");
  return r;
}

enum class TheoremStatus {
  Pass,                // hypotheses held and so did the conclusion
  PreconditionFailed,  // hypotheses not met; nothing is asserted
  Violated,            // hypotheses met, conclusion false: an implementation bug
};

struct NewmanResult {
  bool noetherian_sum = false;
  bool locally_commutes = false;
  bool hypotheses_met = false;
  bool commutes = false;
  TheoremStatus status = TheoremStatus::Pass;
  std::string detail;  // failed hypotheses, or the violated conclusion
};

/// Commutation variant of Newman's lemma: local commutation plus a
/// Noetherian union yields full commutation. Hypotheses are observations,
/// never assumptions; the conclusion is also evaluated when they fail, but
/// only reported as data.
template <ModalModel M>
NewmanResult check_newman(const M& m, const typename M::Element& a, const typename M::Element& b) {
  NewmanResult r;
  r.noetherian_sum = is_noetherian(m, m.add(a, b));
  r.locally_commutes = locally_d_commutes(m, a, b);
  r.hypotheses_met = r.noetherian_sum && r.locally_commutes;
  r.commutes = d_commutes(m, a, b);
  if (!r.hypotheses_met) {
    r.status = TheoremStatus::PreconditionFailed;
    if (!r.noetherian_sum) r.detail = "a+b not Noetherian";
    if (!r.locally_commutes) {
      if (!r.detail.empty()) r.detail += "; ";
      r.detail += "a and b do not locally d-commute";
    }
  } else if (!r.commutes) {
    r.status = TheoremStatus::Violated;
    r.detail = "hypotheses met but a and b do not d-commute";
  }
  return r;
}

struct UnionResult {
  bool quasi_commutes = false;
  bool noetherian_a = false;
  bool noetherian_b = false;
  bool noetherian_sum = false;
  bool biconditional_holds = false;
  bool composite_stays_noetherian = false;  // Noetherian a forces Noetherian b*a
  bool variants_coincide = false;           // local-semi, semi, quasi agree under Noetherian a
  TheoremStatus status = TheoremStatus::Pass;
  std::string detail;  // first violated clause
};

/// Under quasi-commutation the union is Noetherian exactly when both parts
/// are; the same hypothesis makes b*a inherit Noetherity from a and
/// collapses the three one-sided commutation variants. All clauses are
/// evaluated as data; the first violated one is named in the verdict.
template <ModalModel M>
UnionResult check_union_theorem(const M& m, const typename M::Element& a, const typename M::Element& b) {
  UnionResult r;
  r.quasi_commutes = d_quasi_commutes(m, a, b);
  r.noetherian_a = is_noetherian(m, a);
  r.noetherian_b = is_noetherian(m, b);
  r.noetherian_sum = is_noetherian(m, m.add(a, b));
  r.biconditional_holds = r.noetherian_sum == (r.noetherian_a && r.noetherian_b);
  r.composite_stays_noetherian =
      !r.noetherian_a || is_noetherian(m, m.mul(m.star(b), a));
  r.variants_coincide = true;
  if (r.noetherian_a) {
    bool lsemi = locally_d_semi_commutes(m, a, b);
    bool semi = d_semi_commutes(m, a, b);
    r.variants_coincide = (lsemi == r.quasi_commutes) && (semi == r.quasi_commutes);
  }
  if (!r.quasi_commutes) {
    r.status = TheoremStatus::PreconditionFailed;
    r.detail = "a does not d-quasi-commute over b";
  } else if (!r.biconditional_holds) {
    r.status = TheoremStatus::Violated;
    r.detail = "noetherian(a+b) differs from noetherian(a) and noetherian(b)";
  } else if (!r.composite_stays_noetherian) {
    r.status = TheoremStatus::Violated;
    r.detail = "a Noetherian but b*a is not";
  } else if (!r.variants_coincide) {
    r.status = TheoremStatus::Violated;
    r.detail = "one-sided commutation variants disagree under Noetherian a";
  }
  return r;
}

}  // namespace katd
