/*
 * Copyright 2026 The nilcascade Authors
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

#include "nilcascade/report.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nilcascade::cli {

/// Suite names in run order.
const std::vector<std::string>& suite_names();

struct VerifyOptions {
  std::vector<std::string> suites;  // empty: all
  bool numeric = false;             // run the numeric suite inside "all"
  std::optional<std::string> type;  // "E7", "B" with rank, ...
  std::optional<int> rank;
};

struct SuiteResult {
  std::string name;
  std::string status;  // "PASS", "FAIL", "SKIP"
  std::vector<VerificationReport> reports;
  nlohmann::json residuals = nlohmann::json::array();  // numeric suite only
};

/// Runs the selected suites in order. Throws std::invalid_argument for an
/// unknown suite or system.
std::vector<SuiteResult> verify_all(const VerifyOptions& options);

nlohmann::json to_json(const std::vector<SuiteResult>& results);

/// Entry point behind the nilcascade tool; args excludes the program name.
/// Returns 0 on success, 1 on a verification failure, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilcascade::cli
