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

#include <functional>

#include "katd/errors.hpp"
#include "katd/model.hpp"

namespace katd {

/// A function on the test algebra of a model, tagged with the structural
/// properties the caller asserts about it. The fixpoint engine only accepts
/// isotone transformers; the additive flag is advisory and lets callers
/// restrict universally quantified checks to atoms.
template <ModalModel M>
struct TestTransformer {
  using Test = typename M::Test;

  std::function<Test(const Test&)> apply;
  bool isotone = true;
  bool additive = false;
};

/// Least fixpoint by Kleene iteration from 0. For an isotone transformer on
/// a finite Boolean algebra the ascending chain stabilises after at most
/// atom_count() proper steps; exceeding the bound means f was mis-flagged.
template <ModalModel M>
typename M::Test lfp(const M& m, const TestTransformer<M>& f) {
  if (!f.apply) throw std::invalid_argument("transformer has no function");
  if (!f.isotone) throw std::invalid_argument("lfp requires an isotone transformer");
  typename M::Test x = m.test_zero();
  for (int i = 0; i <= m.atom_count() + 1; ++i) {
    typename M::Test next = f.apply(x);
    if (m.test_equal(next, x)) return x;
    x = next;
  }
  throw FixpointError("lfp iteration exceeded lattice height; transformer is not isotone");
}

/// Greatest fixpoint by iteration downward from 1. Same bound as lfp.
template <ModalModel M>
typename M::Test gfp(const M& m, const TestTransformer<M>& f) {
  if (!f.apply) throw std::invalid_argument("transformer has no function");
  if (!f.isotone) throw std::invalid_argument("gfp requires an isotone transformer");
  typename M::Test x = m.test_one();
  for (int i = 0; i <= m.atom_count() + 1; ++i) {
    typename M::Test next = f.apply(x);
    if (m.test_equal(next, x)) return x;
    x = next;
  }
  throw FixpointError("gfp iteration exceeded lattice height; transformer is not isotone");
}

/// Spot-check the declared flags of a transformer on sampled tests.
/// Returns false when a sampled pair refutes isotony (or additivity when
/// declared). Used by tests; the engines trust the flags at run time.
template <ModalModel M>
bool validate_transformer(const M& m, const TestTransformer<M>& f, RandomStream& rng, int samples) {
  for (int i = 0; i < samples; ++i) {
    typename M::Test p = m.random_test(rng);
    typename M::Test q = m.random_test(rng);
    typename M::Test pq = m.test_join(p, q);
    if (f.isotone && !m.test_leq(f.apply(p), f.apply(pq))) return false;
    if (f.additive && !m.test_equal(f.apply(pq), m.test_join(f.apply(p), f.apply(q)))) return false;
  }
  return true;
}

}  // namespace katd
