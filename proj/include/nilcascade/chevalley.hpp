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

#include "nilcascade/root_system.hpp"

#include <map>
#include <utility>

namespace nilcascade {

/// Chevalley structure constants N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}.
///
/// Signs follow the extraspecial-pair convention: for every non-simple
/// positive root g, the pair (a, g - a) with a first in the order (height,
/// then coefficients read from the last simple root) gets
/// N = +(p + 1). Every other constant is forced by the quadruple and triple
/// relations among the N's, so the table is determined by those choices.
class ConstantsTable {
 public:
  explicit ConstantsTable(const RootSystem& sys);

  /// Constant for arbitrary roots a, b (either sign); 0 when a + b is not a root.
  int operator()(const Root& a, const Root& b) const;

  /// All (a, b) positive with a + b a root, keyed by positive-root indices.
  const std::map<std::pair<std::size_t, std::size_t>, int>& positive_pairs() const {
    return positive_;
  }

  /// Extraspecial pair of a non-simple positive root.
  std::pair<Root, Root> extraspecial(const Root& gamma) const;

 private:
  Rational compute(const Root& a, const Root& b) const;
  Rational norm(const Root& a) const { return bilinear(sys_, a, a); }

  RootSystem sys_;
  mutable std::map<std::pair<Root, Root>, Rational> memo_;
  std::map<std::pair<std::size_t, std::size_t>, int> positive_;
};

/// Throws std::invalid_argument for a nonreduced (BC) system.
ConstantsTable chevalley_constants(const RootSystem& sys);

}  // namespace nilcascade
