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
#include <initializer_list>
#include <string>
#include <vector>

#include "katd/errors.hpp"
#include "katd/model.hpp"
#include "katd/relation.hpp"

namespace katd {

/// A set of node sequences of length 1..bound over nodes 1..n, tagged with
/// its carrier. Membership is a bitmask over the model's path table.
struct BoundedPathSet {
  int nodes = 0;
  int bound = 0;
  std::uint64_t paths = 0;

  bool operator==(const BoundedPathSet&) const = default;
};

/// Length-bounded path model. The product fuses paths end to start and drops
/// fusions longer than the bound. Tests are the sets of single-node paths,
/// so the test algebra is the full powerset of nodes and both diamonds are
/// computed exactly (fusion with a single-node path never grows a path).
///
/// There is no omega operation: the untruncated path algebra has no infinite
/// joins and the truncated descending product chain does not stabilise at a
/// meaningful value. Laws mentioning omega never run here.
///
/// Like the language model, products past the bound make the composition
/// axioms for diamonds and every law that unfolds a star under a diamond
/// fail at the bound; the exemption list below was collected by running the
/// conformance suites and checking each failure is a bound overflow.
class PathModel {
 public:
  using Element = BoundedPathSet;
  using Test = StateSet;

  /// nodes in [1,16] (named "1".."n"), bound >= 1, and the path table must
  /// fit into 64 bits.
  PathModel(int nodes, int bound);

  int node_count() const { return nodes_; }
  int bound() const { return bound_; }
  int path_count() const { return static_cast<int>(paths_.size()); }
  const std::vector<int>& path(int i) const { return paths_[i]; }

  /// Paths given as node sequences, e.g. {{1,2},{2,2}}. Nodes are 1-based.
  Element from_paths(std::initializer_list<std::vector<int>> ps) const;
  Element from_paths(const std::vector<std::vector<int>>& ps) const;
  std::vector<std::vector<int>> paths_of(const Element& x) const;

  Element add(const Element& x, const Element& y) const;
  Element mul(const Element& x, const Element& y) const;
  Element zero() const { return make(0); }
  Element one() const { return make(low_bits(nodes_)); }  // single-node paths come first
  Element top() const { return make(low_mask_); }
  Element star(const Element& x) const;
  bool equal(const Element& x, const Element& y) const { return check(x), check(y), x.paths == y.paths; }
  bool leq(const Element& x, const Element& y) const { return check(x), check(y), (x.paths & ~y.paths) == 0; }

  Test test_zero() const { return StateSet::empty(nodes_); }
  Test test_one() const { return StateSet::full(nodes_); }
  Test test_join(const Test& p, const Test& q) const { return p | q; }
  Test test_meet(const Test& p, const Test& q) const { return p & q; }
  Test test_not(const Test& p) const { return p.complement(); }
  bool test_equal(const Test& p, const Test& q) const { return p == q; }
  bool test_leq(const Test& p, const Test& q) const { return p.subset_of(q); }

  Element embed(const Test& p) const;
  Test fdia(const Element& x, const Test& p) const;
  Test bdia(const Element& x, const Test& p) const;

  int atom_count() const { return nodes_; }
  Test atom(int i) const { return StateSet::single(nodes_, i); }
  std::uint64_t test_count() const { return 1ull << nodes_; }
  Test test_by_index(std::uint64_t i) const { return StateSet(nodes_, i); }

  std::uint64_t element_count() const;
  Element element_by_index(std::uint64_t i) const { return make(i & low_mask_); }
  Element random_element(RandomStream& rng) const { return make(rng.next() & low_mask_); }
  Test random_test(RandomStream& rng) const { return StateSet(nodes_, rng.next() & low_bits(nodes_)); }

  static constexpr const char* family() { return "path"; }
  std::string describe() const;
  const std::vector<std::string>& exempted_laws() const { return exemptions_; }

  std::string print_element(const Element& x) const;
  std::string print_test(const Test& p) const;

 private:
  Element make(std::uint64_t mask) const { return BoundedPathSet{nodes_, bound_, mask & low_mask_}; }
  void check(const Element& x) const;

  int nodes_;
  int bound_;
  std::uint64_t low_mask_;
  std::vector<std::vector<int>> paths_;           // length-then-lex order; 1-based node ids
  std::vector<std::vector<signed char>> fuse_;    // fuse_[i][j] = path index, or -1 (no fusion or past bound)
  std::vector<std::string> exemptions_;
};

}  // namespace katd
