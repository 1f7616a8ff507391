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
#include "nilcascade/root_system.hpp"

#include <optional>
#include <vector>

namespace nilcascade {

/// Order used inside one generation of the cascade (several maximal roots
/// chosen at once from mutually orthogonal components). Only the order
/// changes; the set of betas in a generation does not.
enum class TieBreak {
  DescendingReverseLex,  // default; last coordinate compared first, larger first
  AscendingLex,
  DescendingHeight,
};

struct Cascade {
  std::vector<Root> betas;
  std::vector<std::vector<int>> generations;  // indices into betas
};

/// Kostant cascade: beta_1 is the highest root; each later generation takes
/// the highest root of every irreducible component of the positive roots
/// orthogonal to all earlier betas.
Cascade kostant_cascade(const RootSystem& sys, TieBreak tie = TieBreak::DescendingReverseLex);

/// {alpha, beta_r - alpha}; `second` is empty for the fixed point beta_r / 2.
struct LayerPair {
  Root first;
  std::optional<Root> second;
};

struct LayerDecomposition {
  std::vector<std::vector<Root>> layers;      // Delta^+_r, sorted
  std::vector<std::vector<LayerPair>> pairs;  // same roots grouped in pairs
};

/// Layers by the subtraction rule, cross-checked at construction against
/// the orthogonality characterization. Throws std::logic_error if the two
/// disagree.
LayerDecomposition compute_layers(const RootSystem& sys, const Cascade& cascade);

/// Delta^+_r by the orthogonality characterization alone:
/// {alpha : alpha _|_ beta_i (i < r), <alpha, beta_r> > 0} minus beta_r.
std::vector<Root> layer_by_orthogonality(const RootSystem& sys, const Cascade& cascade,
                                         std::size_t r);

/// sigma_r(alpha) = -s_{beta_r}(alpha). `r` is 0-based. Throws
/// std::invalid_argument if alpha is not in Delta^+_r.
Root sigma(const RootSystem& sys, const Cascade& cascade, std::size_t r, const Root& alpha);

/// One line per structural check on cascade + layers:
/// fill-out partition, orthogonality characterization, sums inside a layer,
/// [m_r, z_s] = 0 for r > s, and cross-layer sums never hitting a beta.
VerificationReport verify_layer_lemmas(const RootSystem& sys, const Cascade& cascade,
                                       const LayerDecomposition& layers);

}  // namespace nilcascade
