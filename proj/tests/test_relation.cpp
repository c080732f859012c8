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
#include "doctest.h"

#include <set>
#include <utility>
#include <vector>

#include "katd/errors.hpp"
#include "katd/prng.hpp"
#include "katd/relation.hpp"

using katd::FiniteRelation;
using katd::StateSet;

namespace {

// Reference composition by the set definition, no bit tricks.
FiniteRelation naive_compose(const FiniteRelation& a, const FiniteRelation& b) {
  FiniteRelation r(a.size());
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      for (int z = 0; z < a.size(); ++z)
        if (a.at(x, y) && b.at(y, z)) r.add_edge(x, z);
  return r;
}

// Reference reflexive-transitive closure: iterate sum-with-composition to a
// fixpoint, starting from the identity.
FiniteRelation naive_star(const FiniteRelation& a) {
  FiniteRelation r = FiniteRelation::identity(a.size());
  for (;;) {
    FiniteRelation next = r.sum(naive_compose(r, a));
    if (next == r) return r;
    r = next;
  }
}

}  // namespace

TEST_CASE("state sets are a boolean algebra over masks") {
  StateSet p(4, 0b0101), q(4, 0b0011);
  CHECK((p | q).bits() == 0b0111);
  CHECK((p & q).bits() == 0b0001);
  CHECK((p - q).bits() == 0b0100);
  CHECK(p.complement().bits() == 0b1010);
  CHECK(p.complement().complement() == p);
  CHECK(p.count() == 2);
  CHECK(p.contains(0));
  CHECK(!p.contains(1));
  CHECK(p.members() == std::vector<int>{0, 2});
  CHECK(p.str() == "{0,2}");
  CHECK(StateSet::empty(4).none());
  CHECK(StateSet::full(4).all());
  CHECK(StateSet::single(4, 3).bits() == 0b1000);
  CHECK((p & q).subset_of(p));
  CHECK(p.subset_of(p | q));
}

TEST_CASE("relation construction and edge queries") {
  FiniteRelation a = FiniteRelation::from_pairs(3, {{0, 1}, {1, 2}});
  CHECK(a.at(0, 1));
  CHECK(a.at(1, 2));
  CHECK(!a.at(0, 2));
  CHECK(a.str() == "{(0,1),(1,2)}");
  a.add_edge(0, 2);
  CHECK(a.at(0, 2));
  CHECK(FiniteRelation::identity(3).at(2, 2));
  CHECK(!FiniteRelation::identity(3).at(0, 1));
  CHECK(FiniteRelation::full(2).code() == 15);
}

TEST_CASE("integer codes enumerate REL(n) exactly") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t c = 0; c < 16; ++c) {
    FiniteRelation a = FiniteRelation::from_code(2, c);
    CHECK(a.code() == c);
    seen.insert(a.code());
  }
  CHECK(seen.size() == 16);
  // bit x*n+y encodes the edge (x,y)
  FiniteRelation a = FiniteRelation::from_code(2, 0b0010);
  CHECK(a.at(0, 1));
  CHECK(!a.at(1, 0));
}

TEST_CASE("sum and composition match the set definitions") {
  katd::RandomStream rng = katd::stream_for(2026, "relation-ops", 0);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.next() % 5);
    FiniteRelation a = FiniteRelation::from_code(n, rng.next() & katd::low_bits(n * n));
    FiniteRelation b = FiniteRelation::from_code(n, rng.next() & katd::low_bits(n * n));
    CHECK(a.compose(b) == naive_compose(a, b));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) CHECK(a.sum(b).at(x, y) == (a.at(x, y) || b.at(x, y)));
    CHECK(a.sum(b) == b.sum(a));
    CHECK(a.subset_of(a.sum(b)));
  }
}

TEST_CASE("star is the reflexive-transitive closure") {
  katd::RandomStream rng = katd::stream_for(2026, "relation-star", 0);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.next() % 5);
    FiniteRelation a = FiniteRelation::from_code(n, rng.next() & katd::low_bits(n * n));
    FiniteRelation s = a.star();
    CHECK(s == naive_star(a));
    CHECK(a.plus() == a.compose(s));
    CHECK(a.plus() == s.compose(a));
    CHECK(s.star() == s);
  }
}

TEST_CASE("converse flips every edge") {
  FiniteRelation a = FiniteRelation::from_pairs(3, {{0, 1}, {1, 2}, {2, 2}});
  FiniteRelation c = a.converse();
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(c.at(x, y) == a.at(y, x));
  CHECK(c.converse() == a);
}

TEST_CASE("image and preimage match the set definitions") {
  katd::RandomStream rng = katd::stream_for(2026, "relation-dia", 0);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.next() % 5);
    FiniteRelation a = FiniteRelation::from_code(n, rng.next() & katd::low_bits(n * n));
    StateSet p(n, rng.next() & katd::low_bits(n));
    StateSet pre = a.preimage(p);
    StateSet img = a.image(p);
    for (int x = 0; x < n; ++x) {
      bool pre_x = false, img_x = false;
      for (int y = 0; y < n; ++y) {
        if (a.at(x, y) && p.contains(y)) pre_x = true;
        if (a.at(y, x) && p.contains(y)) img_x = true;
      }
      CHECK(pre.contains(x) == pre_x);
      CHECK(img.contains(x) == img_x);
    }
  }
}

TEST_CASE("omega is the largest fixpoint of left multiplication") {
  katd::RandomStream rng = katd::stream_for(2026, "relation-omega", 0);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng.next() % 4);
    FiniteRelation a = FiniteRelation::from_code(n, rng.next() & katd::low_bits(n * n));
    FiniteRelation w = a.omega();
    CHECK(w == a.compose(w));
    // co-induction: any y with y <= a y sits below omega
    FiniteRelation y = FiniteRelation::from_code(n, rng.next() & katd::low_bits(n * n));
    if (y.subset_of(a.compose(y))) CHECK(y.subset_of(w));
  }
  // x has an infinite path exactly when its omega row is full
  FiniteRelation a = FiniteRelation::from_pairs(3, {{0, 1}, {1, 1}, {2, 0}});
  FiniteRelation w = a.omega();
  for (int y = 0; y < 3; ++y) {
    CHECK(w.at(0, y));
    CHECK(w.at(1, y));
    CHECK(w.at(2, y));
  }
  CHECK(FiniteRelation::from_pairs(3, {{0, 1}, {1, 2}}).omega() == FiniteRelation::empty(3));
}

TEST_CASE("embedded tests are partial identities") {
  StateSet p(3, 0b101);
  FiniteRelation e = katd::embed_test(p);
  CHECK(e.at(0, 0));
  CHECK(!e.at(1, 1));
  CHECK(e.at(2, 2));
  CHECK(!e.at(0, 2));
  CHECK(e.diagonal() == p);
  CHECK(e.subset_of(FiniteRelation::identity(3)));
}

TEST_CASE("mixed-size operands are rejected") {
  FiniteRelation a(2), b(3);
  CHECK_THROWS_AS((void)a.sum(b), katd::DimensionMismatch);
  CHECK_THROWS_AS((void)a.compose(b), katd::DimensionMismatch);
  CHECK_THROWS_AS((void)a.preimage(StateSet::empty(3)), katd::DimensionMismatch);
}
