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
#include <vector>

#include "katd/laws/law.hpp"

namespace katd {

/// The built-in law library. Names are stable identifiers: tests, the CLI
/// and the JSON export all key on them. Built once, then shared.
const std::vector<Law>& builtin_library();

/// Lookup by stable name; nullptr when absent.
const Law* find_law(const std::string& name);

/// Names of the suites that occur in the library, in display order.
std::vector<std::string> suite_names();

/// Serializes the whole library as a JSON array: name, citation, sorts,
/// hypotheses, conclusion, polarity and applicability of every law.
std::string builtin_library_json();

}  // namespace katd
