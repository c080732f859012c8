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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "katd/errors.hpp"

namespace katd {

/// Mask with the lowest n bits set. n must be in [0, 64].
inline std::uint64_t low_bits(int n) {
  return n >= 64 ? ~0ull : ((1ull << n) - 1);
}

/// A set of states drawn from {0, ..., width-1}, width <= 64. State sets are
/// the tests of the relational model: they embed as partial identities and
/// form a Boolean algebra under union, intersection and complement.
class StateSet {
 public:
  StateSet() = default;
  StateSet(int width, std::uint64_t bits);

  static StateSet empty(int width) { return StateSet(width, 0); }
  static StateSet full(int width) { return StateSet(width, low_bits(width)); }
  static StateSet single(int width, int s);

  int width() const { return width_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int s) const { return (bits_ >> s) & 1; }
  bool none() const { return bits_ == 0; }
  bool all() const { return bits_ == low_bits(width_); }
  int count() const { return std::popcount(bits_); }
  std::vector<int> members() const;

  StateSet operator|(const StateSet& o) const;
  StateSet operator&(const StateSet& o) const;
  StateSet operator-(const StateSet& o) const;
  StateSet complement() const { return StateSet(width_, ~bits_ & low_bits(width_)); }
  bool subset_of(const StateSet& o) const;
  bool operator==(const StateSet& o) const = default;

  StateSet& set(int s);

  /// Prints as e.g. "{0,2}" in ascending state order.
  std::string str() const;

 private:
  int width_ = 0;
  std::uint64_t bits_ = 0;
};

/// A binary relation on {0, ..., n-1}, n <= 64, stored as a boolean matrix
/// with one machine word per row. row(x) holds the successors of x. Values
/// are immutable once built; all algebraic operations return new relations.
class FiniteRelation {
 public:
  explicit FiniteRelation(int n);

  static FiniteRelation empty(int n) { return FiniteRelation(n); }
  static FiniteRelation identity(int n);
  static FiniteRelation full(int n);
  static FiniteRelation from_pairs(int n, std::initializer_list<std::pair<int, int>> edges);
  static FiniteRelation from_pairs(int n, const std::vector<std::pair<int, int>>& edges);

  /// Decode from the row-major integer encoding: bit x*n+y is edge (x,y).
  /// Requires n*n <= 64. This fixes the exhaustive enumeration order.
  static FiniteRelation from_code(int n, std::uint64_t code);
  std::uint64_t code() const;

  int size() const { return n_; }
  bool at(int x, int y) const { return (rows_[x] >> y) & 1; }
  std::uint64_t row(int x) const { return rows_[x]; }
  int edge_count() const;
  std::vector<std::pair<int, int>> pairs() const;

  FiniteRelation& add_edge(int x, int y);

  // Idempotent-semiring structure: union as addition, composition as product.
  FiniteRelation sum(const FiniteRelation& o) const;
  FiniteRelation compose(const FiniteRelation& o) const;
  bool subset_of(const FiniteRelation& o) const;
  bool operator==(const FiniteRelation& o) const { return n_ == o.n_ && rows_ == o.rows_; }

  /// Reflexive-transitive closure (Warshall on bitset rows).
  FiniteRelation star() const;
  /// Transitive closure, a . a*.
  FiniteRelation plus() const;
  /// Greatest fixpoint of y -> a . y, reached by iteration downward from the
  /// full relation. Equals (divergence of a) . full.
  FiniteRelation omega() const;
  FiniteRelation converse() const;

  /// Sources with at least one successor inside p.
  StateSet preimage(const StateSet& p) const;
  /// Successors of sources inside p.
  StateSet image(const StateSet& p) const;

  /// States on the diagonal; meaningful for subidentities.
  StateSet diagonal() const;
  bool is_subidentity() const;

  /// Prints as e.g. "{(0,1),(1,2)}" sorted by (row, column).
  std::string str() const;

 private:
  void check_same(const FiniteRelation& o) const;

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Partial identity on the states of p.
FiniteRelation embed_test(const StateSet& p);

}  // namespace katd
