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
#include "katd/lang_model.hpp"

#include <bit>
#include <sstream>

#include "katd/relation.hpp"

namespace katd {

LangModel::LangModel(int alphabet_size, int bound) : alphabet_(alphabet_size), bound_(bound) {
  if (alphabet_size < 1 || alphabet_size > 26) throw DimensionMismatch("alphabet size must be in [1,26]");
  if (bound < 1) throw DimensionMismatch("length bound must be >= 1");
  words_.push_back("");
  std::size_t level_begin = 0;
  for (int len = 1; len <= bound; ++len) {
    std::size_t level_end = words_.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int c = 0; c < alphabet_size; ++c) {
        words_.push_back(words_[i] + static_cast<char>('a' + c));
        if (words_.size() > 63) throw DimensionMismatch("word table exceeds 63 entries; shrink alphabet or bound");
      }
    level_begin = level_end;
  }
  low_mask_ = low_bits(static_cast<int>(words_.size()));
  for (std::size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = static_cast<int>(i);
  concat_.assign(words_.size(), std::vector<signed char>(words_.size(), -1));
  for (std::size_t i = 0; i < words_.size(); ++i)
    for (std::size_t j = 0; j < words_.size(); ++j) {
      if (static_cast<int>(words_[i].size() + words_[j].size()) > bound) continue;
      concat_[i][j] = static_cast<signed char>(index_.at(words_[i] + words_[j]));
    }
  // Composed modalities of products can overflow the bound; see class notes.
  // The list is pinned by the exhaustive conformance sweeps over small
  // alphabets and bounds, and every entry passes again at a raised bound.
  exemptions_ = {"dia2", "dia2-b", "box2", "box2-b", "dom-local"};
}

void LangModel::check(const Element& x) const {
  if (x.alphabet != alphabet_ || x.bound != bound_)
    throw DimensionMismatch("language does not belong to this model");
}

LangModel::Element LangModel::from_words(std::initializer_list<std::string> ws) const {
  return from_words(std::vector<std::string>(ws));
}

LangModel::Element LangModel::from_words(const std::vector<std::string>& ws) const {
  std::uint64_t mask = 0;
  for (const auto& w : ws) {
    auto it = index_.find(w);
    if (it == index_.end()) throw DimensionMismatch("word not in this carrier: \"" + w + "\"");
    mask |= 1ull << it->second;
  }
  return make(mask);
}

std::vector<std::string> LangModel::words_of(const Element& x) const {
  check(x);
  std::vector<std::string> out;
  for (std::uint64_t b = x.words; b; b &= b - 1) out.push_back(words_[std::countr_zero(b)]);
  return out;
}

LangModel::Element LangModel::add(const Element& x, const Element& y) const {
  check(x), check(y);
  return make(x.words | y.words);
}

LangModel::Element LangModel::mul(const Element& x, const Element& y) const {
  check(x), check(y);
  std::uint64_t out = 0;
  for (std::uint64_t bx = x.words; bx; bx &= bx - 1) {
    int i = std::countr_zero(bx);
    for (std::uint64_t by = y.words; by; by &= by - 1) {
      signed char k = concat_[i][std::countr_zero(by)];
      if (k >= 0) out |= 1ull << k;
    }
  }
  return make(out);
}

LangModel::Element LangModel::star(const Element& x) const {
  check(x);
  Element acc = one();
  for (int i = 0; i <= word_count() + 1; ++i) {
    Element next = add(one(), mul(x, acc));
    if (next.words == acc.words) return acc;
    acc = next;
  }
  throw FixpointError("language star failed to stabilise");
}

LangModel::Element LangModel::omega(const Element& x) const {
  check(x);
  Element y = top();
  for (int i = 0; i <= word_count() + 1; ++i) {
    Element next = mul(x, y);
    if (next.words == y.words) return y;
    y = next;
  }
  throw FixpointError("language omega failed to stabilise");
}

bool LangModel::atom(int i) const {
  if (i != 0) throw DimensionMismatch("two-valued test algebra has a single atom");
  return true;
}

std::uint64_t LangModel::element_count() const {
  return word_count() < 63 ? (1ull << word_count()) : 0;
}

LangModel::Element LangModel::random_nonempty_epsfree(RandomStream& rng) const {
  if (word_count() < 2) throw DimensionMismatch("carrier has no nonempty words");
  for (int tries = 0; tries < 4096; ++tries) {
    std::uint64_t mask = rng.next() & low_mask_ & ~1ull;  // clear the empty word
    if (mask) return make(mask);
  }
  throw Error("failed to sample a nonempty eps-free language");
}

std::string LangModel::describe() const {
  return "lang(" + std::to_string(alphabet_) + "," + std::to_string(bound_) + ")";
}

std::string LangModel::print_element(const Element& x) const {
  check(x);
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::uint64_t b = x.words; b; b &= b - 1) {
    if (!first) os << ',';
    const std::string& w = words_[std::countr_zero(b)];
    os << (w.empty() ? "eps" : w);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace katd
