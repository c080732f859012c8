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

#include <string>
#include <utility>
#include <vector>

#include "katd/errors.hpp"
#include "katd/relation.hpp"

namespace katd {

/// Parse failure with a 1-based source line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// A named abstract reduction system: a finite state set plus labelled
/// transition relations over it. States and relations keep declaration
/// order; reports render states by name in that order.
///
/// Text format, one declaration per line, '#' starts a comment:
///
///   states: A B C      (required first declaration)
///   a: A -> B          (one edge of relation a)
///   b:                 (declares b as the empty relation)
struct ArsSystem {
  std::vector<std::string> states;
  std::vector<std::pair<std::string, FiniteRelation>> relations;

  int state_count() const { return static_cast<int>(states.size()); }
  /// Index of a state name, -1 when absent.
  int state_index(const std::string& name) const;
  /// Relation by name, nullptr when absent.
  const FiniteRelation* relation(const std::string& name) const;
};

ArsSystem parse_ars(const std::string& text);
ArsSystem parse_ars_file(const std::string& path);

}  // namespace katd
