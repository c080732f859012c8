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
#include "katd/relation.hpp"

#include <bit>
#include <sstream>

namespace katd {

StateSet::StateSet(int width, std::uint64_t bits) : width_(width), bits_(bits & low_bits(width)) {
  if (width < 1 || width > 64) throw DimensionMismatch("state set width must be in [1,64]");
}

StateSet StateSet::single(int width, int s) {
  StateSet p(width, 0);
  return p.set(s), p;
}

StateSet& StateSet::set(int s) {
  if (s < 0 || s >= width_) throw DimensionMismatch("state index out of range");
  bits_ |= 1ull << s;
  return *this;
}

std::vector<int> StateSet::members() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

static void check_width(const StateSet& a, const StateSet& b) {
  if (a.width() != b.width()) throw DimensionMismatch("state sets have different widths");
}

StateSet StateSet::operator|(const StateSet& o) const {
  check_width(*this, o);
  return StateSet(width_, bits_ | o.bits_);
}

StateSet StateSet::operator&(const StateSet& o) const {
  check_width(*this, o);
  return StateSet(width_, bits_ & o.bits_);
}

StateSet StateSet::operator-(const StateSet& o) const {
  check_width(*this, o);
  return StateSet(width_, bits_ & ~o.bits_);
}

bool StateSet::subset_of(const StateSet& o) const {
  check_width(*this, o);
  return (bits_ & ~o.bits_) == 0;
}

std::string StateSet::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int s : members()) {
    if (!first) os << ',';
    os << s;
    first = false;
  }
  os << '}';
  return os.str();
}

FiniteRelation::FiniteRelation(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > 64) throw DimensionMismatch("relation size must be in [1,64]");
}

FiniteRelation FiniteRelation::identity(int n) {
  FiniteRelation r(n);
  for (int i = 0; i < n; ++i) r.rows_[i] = 1ull << i;
  return r;
}

FiniteRelation FiniteRelation::full(int n) {
  FiniteRelation r(n);
  for (int i = 0; i < n; ++i) r.rows_[i] = low_bits(n);
  return r;
}

FiniteRelation FiniteRelation::from_pairs(int n, std::initializer_list<std::pair<int, int>> edges) {
  FiniteRelation r(n);
  for (auto [x, y] : edges) r.add_edge(x, y);
  return r;
}

FiniteRelation FiniteRelation::from_pairs(int n, const std::vector<std::pair<int, int>>& edges) {
  FiniteRelation r(n);
  for (auto [x, y] : edges) r.add_edge(x, y);
  return r;
}

FiniteRelation FiniteRelation::from_code(int n, std::uint64_t code) {
  if (n * n > 64) throw DimensionMismatch("integer encoding requires n*n <= 64");
  FiniteRelation r(n);
  for (std::uint64_t b = code & low_bits(n * n); b; b &= b - 1) {
    int k = std::countr_zero(b);
    r.rows_[k / n] |= 1ull << (k % n);
  }
  return r;
}

std::uint64_t FiniteRelation::code() const {
  if (n_ * n_ > 64) throw DimensionMismatch("integer encoding requires n*n <= 64");
  std::uint64_t c = 0;
  for (int x = 0; x < n_; ++x) c |= rows_[x] << (x * n_);
  return c;
}

int FiniteRelation::edge_count() const {
  int c = 0;
  for (auto r : rows_) c += std::popcount(r);
  return c;
}

std::vector<std::pair<int, int>> FiniteRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (std::uint64_t b = rows_[x]; b; b &= b - 1) out.emplace_back(x, std::countr_zero(b));
  return out;
}

FiniteRelation& FiniteRelation::add_edge(int x, int y) {
  if (x < 0 || x >= n_ || y < 0 || y >= n_) throw DimensionMismatch("edge endpoint out of range");
  rows_[x] |= 1ull << y;
  return *this;
}

void FiniteRelation::check_same(const FiniteRelation& o) const {
  if (n_ != o.n_) throw DimensionMismatch("relations have different sizes");
}

FiniteRelation FiniteRelation::sum(const FiniteRelation& o) const {
  check_same(o);
  FiniteRelation r(n_);
  for (int x = 0; x < n_; ++x) r.rows_[x] = rows_[x] | o.rows_[x];
  return r;
}

FiniteRelation FiniteRelation::compose(const FiniteRelation& o) const {
  check_same(o);
  FiniteRelation r(n_);
  for (int x = 0; x < n_; ++x) {
    std::uint64_t acc = 0;
    for (std::uint64_t b = rows_[x]; b; b &= b - 1) acc |= o.rows_[std::countr_zero(b)];
    r.rows_[x] = acc;
  }
  return r;
}

bool FiniteRelation::subset_of(const FiniteRelation& o) const {
  check_same(o);
  for (int x = 0; x < n_; ++x)
    if (rows_[x] & ~o.rows_[x]) return false;
  return true;
}

FiniteRelation FiniteRelation::star() const {
  FiniteRelation r = *this;
  for (int i = 0; i < n_; ++i) r.rows_[i] |= 1ull << i;
  for (int k = 0; k < n_; ++k)
    for (int x = 0; x < n_; ++x)
      if ((r.rows_[x] >> k) & 1) r.rows_[x] |= r.rows_[k];
  return r;
}

FiniteRelation FiniteRelation::plus() const { return compose(star()); }

FiniteRelation FiniteRelation::omega() const {
  FiniteRelation y = full(n_);
  // The iterates decrease monotonically, so at most n*n proper steps occur.
  for (int i = 0; i <= n_ * n_ + 1; ++i) {
    FiniteRelation next = compose(y);
    if (next == y) return y;
    y = next;
  }
  throw FixpointError("omega iteration failed to stabilise");
}

FiniteRelation FiniteRelation::converse() const {
  FiniteRelation r(n_);
  for (int x = 0; x < n_; ++x)
    for (std::uint64_t b = rows_[x]; b; b &= b - 1) r.rows_[std::countr_zero(b)] |= 1ull << x;
  return r;
}

StateSet FiniteRelation::preimage(const StateSet& p) const {
  if (p.width() != n_) throw DimensionMismatch("test width does not match relation size");
  std::uint64_t out = 0;
  for (int x = 0; x < n_; ++x)
    if (rows_[x] & p.bits()) out |= 1ull << x;
  return StateSet(n_, out);
}

StateSet FiniteRelation::image(const StateSet& p) const {
  if (p.width() != n_) throw DimensionMismatch("test width does not match relation size");
  std::uint64_t out = 0;
  for (std::uint64_t b = p.bits(); b; b &= b - 1) out |= rows_[std::countr_zero(b)];
  return StateSet(n_, out);
}

StateSet FiniteRelation::diagonal() const {
  std::uint64_t out = 0;
  for (int x = 0; x < n_; ++x)
    if ((rows_[x] >> x) & 1) out |= 1ull << x;
  return StateSet(n_, out);
}

bool FiniteRelation::is_subidentity() const {
  for (int x = 0; x < n_; ++x)
    if (rows_[x] & ~(1ull << x)) return false;
  return true;
}

std::string FiniteRelation::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [x, y] : pairs()) {
    if (!first) os << ',';
    os << '(' << x << ',' << y << ')';
    first = false;
  }
  os << '}';
  return os.str();
}

FiniteRelation embed_test(const StateSet& p) {
  FiniteRelation r(p.width());
  for (int s : p.members()) r.add_edge(s, s);
  return r;
}

}  // namespace katd
