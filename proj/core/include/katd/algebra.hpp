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

#include <cstdlib>

#include "katd/errors.hpp"
#include "katd/model.hpp"

namespace katd {

/// Cap on full test-space enumeration, measured in atoms (the space has
/// 2^atoms tests). KATD_MAX_TESTSPACE overrides the default of 12.
inline int max_testspace_atoms() {
  if (const char* s = std::getenv("KATD_MAX_TESTSPACE")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 12;
}

/// Guard for operations that enumerate all tests of a model.
template <ModalModel M>
void require_testspace(const M& m, int cap = -1) {
  int limit = cap > 0 ? cap : max_testspace_atoms();
  if (m.atom_count() > limit)
    throw CapExceeded("test space 2^" + std::to_string(m.atom_count()) +
                      " exceeds cap 2^" + std::to_string(limit) +
                      " (set KATD_MAX_TESTSPACE to raise)");
}

/// Natural order of the idempotent semiring: a <= b iff a + b = b.
template <ModalModel M>
bool natural_leq(const M& m, const typename M::Element& a, const typename M::Element& b) {
  return m.equal(m.add(a, b), b);
}

/// Transitive closure a . a*.
template <ModalModel M>
typename M::Element transitive_closure(const M& m, const typename M::Element& a) {
  return m.mul(a, m.star(a));
}

/// Forward box, the De Morgan dual of the forward diamond.
template <ModalModel M>
typename M::Test fbox(const M& m, const typename M::Element& a, const typename M::Test& p) {
  return m.test_not(m.fdia(a, m.test_not(p)));
}

/// Backward box, the De Morgan dual of the backward diamond.
template <ModalModel M>
typename M::Test bbox(const M& m, const typename M::Element& a, const typename M::Test& p) {
  return m.test_not(m.bdia(a, m.test_not(p)));
}

/// Domain: the least test p with a <= p.a, computed as <a>1.
template <ModalModel M>
typename M::Test domain(const M& m, const typename M::Element& a) {
  return m.fdia(a, m.test_one());
}

/// Codomain: <a|1.
template <ModalModel M>
typename M::Test codomain(const M& m, const typename M::Element& a) {
  return m.bdia(a, m.test_one());
}

/// Maximal part of p w.r.t. a: the states of p with no a-step back into p.
template <ModalModel M>
typename M::Test max_part(const M& m, const typename M::Element& a, const typename M::Test& p) {
  return m.test_meet(p, m.test_not(m.fdia(a, p)));
}

/// Minimal part of p w.r.t. a: the states of p not reached from p by a.
template <ModalModel M>
typename M::Test min_part(const M& m, const typename M::Element& a, const typename M::Test& p) {
  return m.test_meet(p, m.test_not(m.bdia(a, p)));
}

/// Test implication p -> q.
template <ModalModel M>
typename M::Test test_implies(const M& m, const typename M::Test& p, const typename M::Test& q) {
  return m.test_join(m.test_not(p), q);
}

/// Checks F(q) <= G(q) for all tests q, restricted to atoms when both sides
/// are completely additive in q. The full sweep is guarded by the test-space
/// cap; the atom sweep never is.
template <ModalModel M, typename F, typename G>
bool op_leq(const M& m, F&& lhs, G&& rhs, bool atoms_sufficient, int cap = -1) {
  if (atoms_sufficient) {
    for (int i = 0; i < m.atom_count(); ++i) {
      typename M::Test q = m.atom(i);
      if (!m.test_leq(lhs(q), rhs(q))) return false;
    }
    return true;
  }
  require_testspace(m, cap);
  for (std::uint64_t i = 0; i < m.test_count(); ++i) {
    typename M::Test q = m.test_by_index(i);
    if (!m.test_leq(lhs(q), rhs(q))) return false;
  }
  return true;
}

/// First atom (in atom order) where F(atom) <= G(atom) fails, or -1.
template <ModalModel M, typename F, typename G>
int first_violating_atom(const M& m, F&& lhs, G&& rhs) {
  for (int i = 0; i < m.atom_count(); ++i) {
    typename M::Test q = m.atom(i);
    if (!m.test_leq(lhs(q), rhs(q))) return i;
  }
  return -1;
}

/// Operator-level transitive closure of the forward diamond of a:
/// the pointwise sum of <a>^k p over k >= 1. In the relational model this
/// agrees with the diamond of the transitive closure of a; in the bounded
/// models it may be strictly larger, and it is the form under which the
/// termination correspondences stay theorems.
template <ModalModel M>
typename M::Test fdia_op_plus(const M& m, const typename M::Element& a, const typename M::Test& p) {
  typename M::Test acc = m.fdia(a, p);
  for (int i = 0; i <= m.atom_count() + 1; ++i) {
    typename M::Test next = m.test_join(acc, m.fdia(a, acc));
    if (m.test_equal(next, acc)) return acc;
    acc = next;
  }
  throw FixpointError("diamond closure failed to stabilise");
}

}  // namespace katd
