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

#include "nilcascade/cascade.hpp"
#include "nilcascade/report.hpp"
#include "nilcascade/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilcascade {

/// A misprint in the printed tables and the value used instead.
struct FixtureCorrection {
  std::string where;      // e.g. "beta_1", "layer 1 pair 1"
  std::string verbatim;   // exactly as printed
  std::string corrected;  // as stored in the fixture
};

/// Published cascade and layer tables for one system. Roots are stored in
/// psi notation, pairs as one or two strings.
struct GoldenFixture {
  std::string label;
  std::vector<std::vector<std::string>> generations;
  std::vector<std::vector<std::vector<std::string>>> layers;  // empty vector: no pair list printed
  std::vector<FixtureCorrection> corrections;
  bool has_layers = true;
};

/// G2, F4, E6, E7, E8.
const std::vector<GoldenFixture>& exceptional_fixtures();

/// Parametric families A_n, B_n, C_n, D_n. Betas from the closed formulas;
/// layer pairs only for type A, where the printed description is a full rule.
GoldenFixture classical_fixture(RootType type, int rank);

/// Fixture for a label such as "E7" or "B5"; nullopt if none exists.
std::optional<GoldenFixture> find_fixture(const std::string& label);

/// Set comparison per generation and per layer. Each mismatch line names the
/// layer, the missing or extra root, and any correction touching that layer.
VerificationReport compare_with_fixture(const RootSystem& sys, const GoldenFixture& fixture);

/// Loading check: the fixture on its own must be a partition of the positive
/// roots into betas and pairs summing to their beta.
VerificationReport validate_fixture(const RootSystem& sys, const GoldenFixture& fixture);

}  // namespace nilcascade
