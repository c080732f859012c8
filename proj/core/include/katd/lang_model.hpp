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
#include <unordered_map>
#include <vector>

#include "katd/errors.hpp"
#include "katd/model.hpp"

namespace katd {

/// A language over a fixed alphabet containing only words of length <= bound,
/// tagged with its carrier so that cross-model operations are rejected.
/// Membership is a bitmask over the model's word table.
struct TruncatedLanguage {
  int alphabet = 0;
  int bound = 0;
  std::uint64_t words = 0;

  bool operator==(const TruncatedLanguage&) const = default;
};

/// Word-length-truncated language model. Concatenation drops every product
/// longer than the bound, which keeps the carrier finite while preserving
/// the semiring laws exactly. The test algebra is two-valued: 0 and {eps}.
///
/// Composition of diamonds can pass through words that the truncated product
/// cannot represent, so the composition axioms for diamonds and boxes fail
/// at the bound; those laws are declared as exemptions and the model is used
/// only where that does not matter, chiefly to separate omega-triviality
/// from Noetherity.
class LangModel {
 public:
  using Element = TruncatedLanguage;
  using Test = bool;

  /// alphabet_size in [1,26] (symbols 'a', 'b', ...), bound >= 1, and the
  /// word table must fit into 64 bits.
  LangModel(int alphabet_size, int bound);

  int alphabet_size() const { return alphabet_; }
  int bound() const { return bound_; }
  int word_count() const { return static_cast<int>(words_.size()); }
  const std::string& word(int i) const { return words_[i]; }

  Element from_words(std::initializer_list<std::string> ws) const;
  Element from_words(const std::vector<std::string>& ws) const;
  std::vector<std::string> words_of(const Element& x) const;

  Element add(const Element& x, const Element& y) const;
  Element mul(const Element& x, const Element& y) const;
  Element zero() const { return make(0); }
  Element one() const { return make(1); }  // word index 0 is the empty word
  Element top() const { return make(low_mask_); }
  Element star(const Element& x) const;
  Element omega(const Element& x) const;
  bool equal(const Element& x, const Element& y) const { return check(x), check(y), x.words == y.words; }
  bool leq(const Element& x, const Element& y) const { return check(x), check(y), (x.words & ~y.words) == 0; }

  Test test_zero() const { return false; }
  Test test_one() const { return true; }
  Test test_join(Test p, Test q) const { return p || q; }
  Test test_meet(Test p, Test q) const { return p && q; }
  Test test_not(Test p) const { return !p; }
  bool test_equal(Test p, Test q) const { return p == q; }
  bool test_leq(Test p, Test q) const { return !p || q; }

  Element embed(Test p) const { return p ? one() : zero(); }
  Test fdia(const Element& x, Test p) const { return check(x), p && x.words != 0; }
  Test bdia(const Element& x, Test p) const { return check(x), p && x.words != 0; }

  int atom_count() const { return 1; }
  Test atom(int i) const;
  std::uint64_t test_count() const { return 2; }
  Test test_by_index(std::uint64_t i) const { return (i & 1) != 0; }

  std::uint64_t element_count() const;
  Element element_by_index(std::uint64_t i) const { return make(i & low_mask_); }
  Element random_element(RandomStream& rng) const { return make(rng.next() & low_mask_); }
  Test random_test(RandomStream& rng) const { return (rng.next() & 1) != 0; }

  /// Nonzero language without the empty word; generator hook for the
  /// omega-vs-Noetherian separations.
  Element random_nonempty_epsfree(RandomStream& rng) const;

  static constexpr const char* family() { return "lang"; }
  std::string describe() const;
  const std::vector<std::string>& exempted_laws() const { return exemptions_; }

  std::string print_element(const Element& x) const;
  std::string print_test(Test p) const { return p ? "1" : "0"; }

 private:
  Element make(std::uint64_t mask) const { return TruncatedLanguage{alphabet_, bound_, mask & low_mask_}; }
  void check(const Element& x) const;

  int alphabet_;
  int bound_;
  std::uint64_t low_mask_;
  std::vector<std::string> words_;                  // length-then-lex order; index 0 is eps
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<signed char>> concat_;    // concat_[i][j] = word index or -1 past bound
  std::vector<std::string> exemptions_;
};

}  // namespace katd
