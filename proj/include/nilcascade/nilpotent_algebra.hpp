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

#include "nilcascade/rational.hpp"
#include "nilcascade/report.hpp"
#include "nilcascade/root_system.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilcascade {

/// Sparse coefficient vector: (basis index, coefficient), indices increasing.
using SparseVector = std::vector<std::pair<int, Rational>>;

/// Finite-dimensional Lie algebra over Q with a layered basis
/// n = m_1 + ... + m_m, m_r = z_r + v_r.
class NilpotentAlgebra {
 public:
  NilpotentAlgebra() = default;
  explicit NilpotentAlgebra(std::vector<std::string> labels);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& basis() const { return labels_; }
  int index_of(const std::string& label) const;  // -1 if absent

  /// Sets [x_i, x_j] = value and [x_j, x_i] = -value.
  void set_bracket(int i, int j, SparseVector value);
  /// Sets only [x_i, x_j]; for building deliberately broken tables.
  void set_bracket_one_sided(int i, int j, SparseVector value);
  const SparseVector& structure(int i, int j) const { return sc_[i][j]; }

  /// Bilinear extension. Throws std::invalid_argument on a size mismatch.
  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;
  RationalVector unit(int i) const;

  /// Copy with one coefficient of [x_i, x_j] (and its antisymmetric partner)
  /// changed.
  NilpotentAlgebra with_structure_constant(int i, int j, int k, const Rational& c) const;

  std::vector<std::vector<int>> layers;       // m_r
  std::vector<std::vector<int>> centers;      // z_r
  std::vector<std::vector<int>> complements;  // v_r, pairs adjacent
  std::vector<std::optional<Root>> roots;     // root label per basis element, if any
  std::string name;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVector>> sc_;
};

/// Strictly upper triangular l x l matrices, basis e_{i,j} (i < j),
/// layers m_r for r = 1 .. floor(l/2). Throws std::invalid_argument if l < 2.
NilpotentAlgebra build_upper_triangular(int l);

/// Nilradical of the Borel subalgebra of the split form, one generator per
/// positive root, layered by the cascade.
NilpotentAlgebra build_split_nilradical(const RootSystem& sys);

/// Supported patterns: (A_{2n-1}, {1,3,...,2n-1}) for sl(n,H) and
/// (E6, {2,3,4,5}). Throws std::invalid_argument for anything else.
NilpotentAlgebra build_restricted_nilradical(const RootSystem& sys,
                                             const std::vector<int>& zero_labels);

/// Antisymmetry and exhaustive Jacobi over basis triples.
VerificationReport verify_jacobi(const NilpotentAlgebra& alg);

/// Dimensions of the lower central series n = C^1 > C^2 > ... down to 0,
/// or up to dim + 1 terms if it stalls.
std::vector<std::size_t> lower_central_series(const NilpotentAlgebra& alg);
bool is_nilpotent(const NilpotentAlgebra& alg);

/// Layer bookkeeping plus conditions (i)-(iv):
/// (i) n_r = m_1 + ... + m_r is an ideal, (ii) [m_r, z_s] = 0 for r > s,
/// (iii) [m_r, m_s] in v for r > s, (iv) z_r central in m_r and
/// [v_r, v_r] in z_r + v.
VerificationReport verify_setup(const NilpotentAlgebra& alg);

/// Matrix of x, y -> coefficient of x_{z} in [x, y] over v_r, for the k-th
/// basis element z of z_r.
RationalMatrix pairing_matrix(const NilpotentAlgebra& alg, std::size_t r, std::size_t k = 0);

/// For every layer with dim z_r = 1: the pairing v_r x v_r -> z_r has full rank.
VerificationReport verify_pairing(const NilpotentAlgebra& alg);

nlohmann::json to_json(const NilpotentAlgebra& alg);
NilpotentAlgebra algebra_from_json(const nlohmann::json& j);

}  // namespace nilcascade
