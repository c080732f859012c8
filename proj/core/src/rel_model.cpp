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
#include "katd/rel_model.hpp"

#include <numeric>

namespace katd {

RelModel::RelModel(int n) : n_(n) {
  if (n < 1 || n > 64) throw DimensionMismatch("rel model size must be in [1,64]");
}

FiniteRelation RelModel::embed(const StateSet& p) const {
  if (p.width() != n_) throw DimensionMismatch("test does not belong to this model");
  return embed_test(p);
}

StateSet RelModel::project(const FiniteRelation& a) const {
  check(a);
  if (!a.is_subidentity()) throw DimensionMismatch("projection requires a subidentity");
  return a.diagonal();
}

std::uint64_t RelModel::element_count() const {
  return n_ * n_ < 64 ? (1ull << (n_ * n_)) : 0;
}

FiniteRelation RelModel::random_element(RandomStream& rng) const {
  FiniteRelation r(n_);
  for (int x = 0; x < n_; ++x) {
    std::uint64_t row = rng.next() & low_bits(n_);
    for (std::uint64_t b = row; b; b &= b - 1) r.add_edge(x, std::countr_zero(b));
  }
  return r;
}

std::pair<FiniteRelation, FiniteRelation> RelModel::random_noetherian_sum_pair(RandomStream& rng) const {
  std::vector<int> rank(n_);
  std::iota(rank.begin(), rank.end(), 0);
  for (int i = n_ - 1; i > 0; --i) std::swap(rank[i], rank[rng.below(i + 1)]);
  FiniteRelation ra(n_), rb(n_);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      if (rank[x] >= rank[y]) continue;  // only edges that strictly climb the rank
      std::uint64_t bits = rng.next();
      if (bits & 1) ra.add_edge(x, y);
      if (bits & 2) rb.add_edge(x, y);
    }
  return {ra, rb};
}

}  // namespace katd
