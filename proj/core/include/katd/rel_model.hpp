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

#include <cstdint>
#include <string>
#include <vector>

#include "katd/prng.hpp"
#include "katd/relation.hpp"

namespace katd {

/// The relational model REL(n): all binary relations on n states, with
/// union, composition, star and omega. Tests are state sets embedded as
/// partial identities; the forward diamond is preimage, the backward
/// diamond is image. REL is extensional and satisfies every law in the
/// builtin library, so it declares no exemptions.
class RelModel {
 public:
  using Element = FiniteRelation;
  using Test = StateSet;

  explicit RelModel(int n);

  int states() const { return n_; }

  Element add(const Element& a, const Element& b) const { return check(a), check(b), a.sum(b); }
  Element mul(const Element& a, const Element& b) const { return check(a), check(b), a.compose(b); }
  Element zero() const { return FiniteRelation::empty(n_); }
  Element one() const { return FiniteRelation::identity(n_); }
  Element top() const { return FiniteRelation::full(n_); }
  Element star(const Element& a) const { return check(a), a.star(); }
  Element omega(const Element& a) const { return check(a), a.omega(); }
  bool equal(const Element& a, const Element& b) const { return check(a), check(b), a == b; }
  bool leq(const Element& a, const Element& b) const { return check(a), check(b), a.subset_of(b); }

  Test test_zero() const { return StateSet::empty(n_); }
  Test test_one() const { return StateSet::full(n_); }
  Test test_join(const Test& p, const Test& q) const { return p | q; }
  Test test_meet(const Test& p, const Test& q) const { return p & q; }
  Test test_not(const Test& p) const { return p.complement(); }
  bool test_equal(const Test& p, const Test& q) const { return p == q; }
  bool test_leq(const Test& p, const Test& q) const { return p.subset_of(q); }

  Element embed(const Test& p) const;
  /// Inverse of embed on subidentities.
  Test project(const Element& a) const;

  Test fdia(const Element& a, const Test& p) const { return check(a), a.preimage(p); }
  Test bdia(const Element& a, const Test& p) const { return check(a), a.image(p); }

  int atom_count() const { return n_; }
  Test atom(int i) const { return StateSet::single(n_, i); }
  std::uint64_t test_count() const { return 1ull << n_; }
  Test test_by_index(std::uint64_t i) const { return StateSet(n_, i); }

  /// 2^(n*n) when the integer encoding fits in 64 bits, otherwise 0 to mark
  /// the carrier as too large for exhaustive enumeration.
  std::uint64_t element_count() const;
  Element element_by_index(std::uint64_t i) const { return FiniteRelation::from_code(n_, i); }
  Element random_element(RandomStream& rng) const;
  Test random_test(RandomStream& rng) const { return StateSet(n_, rng.next()); }

  /// Random pair (a, b) whose union is contained in a strict order, hence
  /// Noetherian. Used as a generator hook for laws with rare hypotheses.
  std::pair<Element, Element> random_noetherian_sum_pair(RandomStream& rng) const;

  static constexpr const char* family() { return "rel"; }
  std::string describe() const { return "rel(" + std::to_string(n_) + ")"; }
  const std::vector<std::string>& exempted_laws() const { return exemptions_; }

  std::string print_element(const Element& a) const { return check(a), a.str(); }
  std::string print_test(const Test& p) const { return p.str(); }

 private:
  void check(const Element& a) const {
    if (a.size() != n_) throw DimensionMismatch("relation does not belong to this model");
  }

  int n_;
  std::vector<std::string> exemptions_;  // always empty
};

}  // namespace katd
