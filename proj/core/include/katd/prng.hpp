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
#include <string_view>

namespace katd {

/// 64-bit FNV-1a hash. Used for input digests and for deriving per-law
/// random streams from string keys.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// One round of splitmix64. A counter-based bijection on 64-bit words,
/// good enough for reproducible test-case generation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Splittable counter-based random stream. Two streams constructed from the
/// same key yield the same sequence regardless of what other streams were
/// consumed in between, so sampled law checks are order-independent.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : key_(key) {}

  /// Derive a child stream; independent of draws made on the parent.
  RandomStream split(std::uint64_t salt) const {
    return RandomStream(splitmix64(key_ ^ (salt * 0x9e3779b97f4a7c15ull)));
  }

  std::uint64_t next() { return splitmix64(key_ + (++ctr_) * 0xd1b54a32d192ed03ull); }

  /// Uniform value in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

/// Stream keyed by (seed, name, index); the engine uses one per sampled
/// assignment so that reruns with the same seed are byte-for-byte identical.
inline RandomStream stream_for(std::uint64_t seed, std::string_view name, std::uint64_t index) {
  return RandomStream(splitmix64(seed ^ fnv1a64(name)) ^ splitmix64(index));
}

}  // namespace katd
