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
#include "katd/path_model.hpp"

#include <bit>
#include <map>
#include <sstream>

namespace katd {

PathModel::PathModel(int nodes, int bound) : nodes_(nodes), bound_(bound) {
  if (nodes < 1 || nodes > 16) throw DimensionMismatch("node count must be in [1,16]");
  if (bound < 1) throw DimensionMismatch("path length bound must be >= 1");
  std::map<std::vector<int>, int> index;
  for (int v = 1; v <= nodes; ++v) paths_.push_back({v});
  std::size_t level_begin = 0;
  for (int len = 2; len <= bound; ++len) {
    std::size_t level_end = paths_.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int v = 1; v <= nodes; ++v) {
        std::vector<int> p = paths_[i];
        p.push_back(v);
        paths_.push_back(std::move(p));
        if (paths_.size() > 64) throw DimensionMismatch("path table exceeds 64 entries; shrink nodes or bound");
      }
    level_begin = level_end;
  }
  low_mask_ = low_bits(static_cast<int>(paths_.size()));
  for (std::size_t i = 0; i < paths_.size(); ++i) index[paths_[i]] = static_cast<int>(i);
  fuse_.assign(paths_.size(), std::vector<signed char>(paths_.size(), -1));
  for (std::size_t i = 0; i < paths_.size(); ++i)
    for (std::size_t j = 0; j < paths_.size(); ++j) {
      const auto& p = paths_[i];
      const auto& q = paths_[j];
      if (p.back() != q.front()) continue;
      if (static_cast<int>(p.size() + q.size()) - 1 > bound) continue;
      std::vector<int> fused = p;
      fused.insert(fused.end(), q.begin() + 1, q.end());
      fuse_[i][j] = static_cast<signed char>(index.at(fused));
    }
  // Failures collected by the conformance suites; each one disappears when
  // the bound is raised past the longest product the law builds, so all are
  // truncation overflow rather than genuine countermodels. Star-heavy
  // equalities lose their overflowed upper bounds first, which is why the
  // unfold and denesting laws appear here while the inequational forms of
  // the same facts do not. An inequality still fails once the star sits on
  // its greater side, which is how divvsfound enters at three nodes.
  exemptions_ = {"dia2",          "dia2-b",
                 "box2",          "box2-b",
                 "dom-local",     "nulem6",
                 "nulem7",        "diaind-unfold",
                 "diaind-unfold-right", "dia-iteration-least",
                 "noetherian-normaliser-total", "divvsfound"};
}

void PathModel::check(const Element& x) const {
  if (x.nodes != nodes_ || x.bound != bound_)
    throw DimensionMismatch("path set does not belong to this model");
}

PathModel::Element PathModel::from_paths(std::initializer_list<std::vector<int>> ps) const {
  return from_paths(std::vector<std::vector<int>>(ps));
}

PathModel::Element PathModel::from_paths(const std::vector<std::vector<int>>& ps) const {
  std::uint64_t mask = 0;
  for (const auto& p : ps) {
    bool found = false;
    for (std::size_t i = 0; i < paths_.size(); ++i)
      if (paths_[i] == p) {
        mask |= 1ull << i;
        found = true;
        break;
      }
    if (!found) throw DimensionMismatch("path not in this carrier");
  }
  return make(mask);
}

std::vector<std::vector<int>> PathModel::paths_of(const Element& x) const {
  check(x);
  std::vector<std::vector<int>> out;
  for (std::uint64_t b = x.paths; b; b &= b - 1) out.push_back(paths_[std::countr_zero(b)]);
  return out;
}

PathModel::Element PathModel::add(const Element& x, const Element& y) const {
  check(x), check(y);
  return make(x.paths | y.paths);
}

PathModel::Element PathModel::mul(const Element& x, const Element& y) const {
  check(x), check(y);
  std::uint64_t out = 0;
  for (std::uint64_t bx = x.paths; bx; bx &= bx - 1) {
    int i = std::countr_zero(bx);
    for (std::uint64_t by = y.paths; by; by &= by - 1) {
      signed char k = fuse_[i][std::countr_zero(by)];
      if (k >= 0) out |= 1ull << k;
    }
  }
  return make(out);
}

PathModel::Element PathModel::star(const Element& x) const {
  check(x);
  Element acc = one();
  for (int i = 0; i <= path_count() + 1; ++i) {
    Element next = add(one(), mul(x, acc));
    if (next.paths == acc.paths) return acc;
    acc = next;
  }
  throw FixpointError("path star failed to stabilise");
}

PathModel::Element PathModel::embed(const Test& p) const {
  if (p.width() != nodes_) throw DimensionMismatch("test does not belong to this model");
  return make(p.bits());  // single-node paths occupy the low bits in node order
}

PathModel::Test PathModel::fdia(const Element& x, const Test& p) const {
  check(x);
  if (p.width() != nodes_) throw DimensionMismatch("test does not belong to this model");
  std::uint64_t out = 0;
  for (std::uint64_t b = x.paths; b; b &= b - 1) {
    const auto& path = paths_[std::countr_zero(b)];
    if (p.contains(path.back() - 1)) out |= 1ull << (path.front() - 1);
  }
  return StateSet(nodes_, out);
}

PathModel::Test PathModel::bdia(const Element& x, const Test& p) const {
  check(x);
  if (p.width() != nodes_) throw DimensionMismatch("test does not belong to this model");
  std::uint64_t out = 0;
  for (std::uint64_t b = x.paths; b; b &= b - 1) {
    const auto& path = paths_[std::countr_zero(b)];
    if (p.contains(path.front() - 1)) out |= 1ull << (path.back() - 1);
  }
  return StateSet(nodes_, out);
}

std::uint64_t PathModel::element_count() const {
  return path_count() < 63 ? (1ull << path_count()) : 0;
}

std::string PathModel::describe() const {
  return "path(" + std::to_string(nodes_) + "," + std::to_string(bound_) + ")";
}

std::string PathModel::print_element(const Element& x) const {
  check(x);
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::uint64_t b = x.paths; b; b &= b - 1) {
    if (!first) os << ',';
    os << '<';
    const auto& path = paths_[std::countr_zero(b)];
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) os << ',';
      os << path[i];
    }
    os << '>';
    first = false;
  }
  os << '}';
  return os.str();
}

std::string PathModel::print_test(const Test& p) const {
  if (p.width() != nodes_) throw DimensionMismatch("test does not belong to this model");
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : p.members()) {
    if (!first) os << ',';
    os << (v + 1);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace katd
