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
#include "katd/termination.hpp"

#include <bit>
#include <vector>

namespace katd {

namespace {

// reach[x] = states reachable from x in one or more steps, by worklist
// expansion over successor rows.
std::vector<std::uint64_t> reach_plus(const FiniteRelation& a) {
  int n = a.size();
  std::vector<std::uint64_t> reach(n, 0);
  for (int x = 0; x < n; ++x) {
    std::uint64_t frontier = a.row(x);
    while (frontier) {
      reach[x] |= frontier;
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b; b &= b - 1) next |= a.row(std::countr_zero(b));
      frontier = next & ~reach[x];
    }
  }
  return reach;
}

}  // namespace

StateSet divergence_oracle(const FiniteRelation& a) {
  int n = a.size();
  std::vector<std::uint64_t> reach = reach_plus(a);
  std::uint64_t on_cycle = 0;
  for (int x = 0; x < n; ++x)
    if (reach[x] & (1ull << x)) on_cycle |= 1ull << x;
  std::uint64_t diverging = on_cycle;
  for (int x = 0; x < n; ++x)
    if (reach[x] & on_cycle) diverging |= 1ull << x;
  return StateSet(n, diverging);
}

bool noetherian_oracle(const FiniteRelation& a) {
  return divergence_oracle(a).none();
}

}  // namespace katd
