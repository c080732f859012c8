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

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "katd/prng.hpp"

namespace katd {

/// A modal idempotent semiring with a finite Boolean test algebra.
///
/// A model bundles a carrier descriptor (state count, alphabet, bounds) with
/// the operations the generic algorithms need: semiring structure on
/// elements, Boolean structure on tests, the embedding of tests into
/// elements, and the forward/backward diamonds. Tests are ordered by the
/// atoms the model exposes; atom(i) enumeration order is also the witness
/// order used by the rewriting checks.
///
/// All operations are pure; values are immutable once constructed.
template <typename M>
concept ModalModel = requires(const M& m, const typename M::Element& a,
                              const typename M::Test& p, RandomStream& rng,
                              std::uint64_t i, int k) {
  typename M::Element;
  typename M::Test;
  { m.add(a, a) } -> std::same_as<typename M::Element>;
  { m.mul(a, a) } -> std::same_as<typename M::Element>;
  { m.zero() } -> std::same_as<typename M::Element>;
  { m.one() } -> std::same_as<typename M::Element>;
  { m.top() } -> std::same_as<typename M::Element>;
  { m.star(a) } -> std::same_as<typename M::Element>;
  { m.equal(a, a) } -> std::same_as<bool>;
  { m.leq(a, a) } -> std::same_as<bool>;
  { m.test_zero() } -> std::same_as<typename M::Test>;
  { m.test_one() } -> std::same_as<typename M::Test>;
  { m.test_join(p, p) } -> std::same_as<typename M::Test>;
  { m.test_meet(p, p) } -> std::same_as<typename M::Test>;
  { m.test_not(p) } -> std::same_as<typename M::Test>;
  { m.test_equal(p, p) } -> std::same_as<bool>;
  { m.test_leq(p, p) } -> std::same_as<bool>;
  { m.embed(p) } -> std::same_as<typename M::Element>;
  { m.fdia(a, p) } -> std::same_as<typename M::Test>;
  { m.bdia(a, p) } -> std::same_as<typename M::Test>;
  { m.atom_count() } -> std::same_as<int>;
  { m.atom(k) } -> std::same_as<typename M::Test>;
  { m.test_count() } -> std::same_as<std::uint64_t>;
  { m.test_by_index(i) } -> std::same_as<typename M::Test>;
  { m.element_count() } -> std::same_as<std::uint64_t>;
  { m.element_by_index(i) } -> std::same_as<typename M::Element>;
  { m.random_element(rng) } -> std::same_as<typename M::Element>;
  { m.random_test(rng) } -> std::same_as<typename M::Test>;
  { M::family() } -> std::convertible_to<const char*>;
  { m.describe() } -> std::same_as<std::string>;
  { m.exempted_laws() } -> std::same_as<const std::vector<std::string>&>;
  { m.print_element(a) } -> std::same_as<std::string>;
  { m.print_test(p) } -> std::same_as<std::string>;
};

/// Models that additionally carry the omega operation (infinite iteration).
template <typename M>
concept HasOmega = ModalModel<M> && requires(const M& m, const typename M::Element& a) {
  { m.omega(a) } -> std::same_as<typename M::Element>;
};

}  // namespace katd
