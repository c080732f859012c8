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

#include <nlohmann/json.hpp>

#include "katd/ars.hpp"
#include "katd/laws/suite.hpp"

namespace katd {

/// FNV-1a 64 digest of the raw input bytes, fixed-width lowercase hex.
std::string input_digest(const std::string& bytes);

struct AnalyzeRequest {
  std::vector<std::string> relations;  // names, in report order
  bool include_union = false;          // also analyze the sum, named "r1+r2+..."
};

/// The analysis document: version, input digest, per-relation termination
/// projections keyed by name, per-pair commutation projections keyed
/// "r1,r2" for every requested pair in order. States render by name.
/// Field order is fixed so identical inputs give identical bytes.
nlohmann::ordered_json analysis_json(const ArsSystem& sys, const AnalyzeRequest& req,
                                     const std::string& digest);

/// Same analysis as a plain-text table.
std::string analysis_text(const ArsSystem& sys, const AnalyzeRequest& req);

/// One-line verdicts. Hypotheses are evaluated, never assumed: an unmet
/// hypothesis reports which one failed plus what the conclusion did anyway,
/// and a met-but-violated conclusion is flagged as a theorem violation,
/// which can only mean a computation bug.
std::string newman_text(const ArsSystem& sys, const std::string& a, const std::string& b);
std::string union_text(const ArsSystem& sys, const std::string& a, const std::string& b);

/// Law-suite run rendering. JSON carries the strategy so reruns with the
/// same seed are byte-identical.
nlohmann::ordered_json suite_json(const SuiteRun& run, const Strategy& strategy);
std::string suite_text(const SuiteRun& run);

}  // namespace katd
