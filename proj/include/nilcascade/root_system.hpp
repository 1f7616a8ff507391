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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilcascade {

/// Integer coordinates over the simple roots, Bourbaki order. Index 0 holds
/// the coefficient of psi_1.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}
  Root(std::initializer_list<int> coeffs) : coeffs_(coeffs) {}

  static Root simple(std::size_t rank, std::size_t index);
  static Root zero(std::size_t rank) { return Root(std::vector<int>(rank, 0)); }

  std::size_t rank() const { return coeffs_.size(); }
  int operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<int>& coeffs() const { return coeffs_; }

  int height() const;
  bool is_zero() const;
  bool is_positive() const;  // nonzero, all coefficients >= 0
  bool is_negative() const;

  /// Coefficientwise a <= b (the root-lattice partial order on positive roots).
  bool dominated_by(const Root& other) const;

  Root operator+(const Root& other) const;
  Root operator-(const Root& other) const;
  Root operator-() const;
  Root operator*(int k) const;

  friend bool operator==(const Root&, const Root&) = default;
  /// Height first, then lexicographic on the coefficients.
  friend std::strong_ordering operator<=>(const Root& a, const Root& b);

  /// e.g. "psi1+2psi2" ; zero vector prints as "0".
  std::string to_string() const;

 private:
  std::vector<int> coeffs_;
};

/// Parses the output format of Root::to_string ("psi1+2psi2", "2*psi3" also
/// accepted) for a given rank.
Root parse_root(std::string_view text, std::size_t rank);

enum class RootType { A, B, C, D, E, F, G, BC };

std::string to_string(RootType type);
/// Accepts a bare letter ("E") or a letter with rank ("E8", "BC3").
RootType parse_root_type(std::string_view text);

struct RootSystem {
  RootType type = RootType::A;
  int rank = 0;
  std::vector<Root> simple_roots;
  Eigen::MatrixXi cartan;  // cartan(i,j) = 2 <psi_i, psi_j> / <psi_j, psi_j>
  RationalMatrix gram;     // invariant form, longest roots have <a,a> = 2
  std::vector<Root> positive_roots;  // height-graded, then lexicographic

  std::string label() const;  // "E8", "BC2", ...
  bool is_reduced() const { return type != RootType::BC; }
  std::optional<std::size_t> index_of(const Root& positive) const;
  const Root& highest_root() const { return positive_roots.back(); }

  // Membership cache, filled by build_root_system.
  std::map<Root, std::size_t> positive_index;
};

/// Cartan data and positive roots generated by root-string closure from the
/// simple roots. Throws std::invalid_argument for an invalid (type, rank).
RootSystem build_root_system(RootType type, int rank);
RootSystem build_root_system(std::string_view label);

/// Classical |positive roots| for the type.
std::size_t classical_positive_count(RootType type, int rank);

/// a^T gram b. Throws std::invalid_argument on rank mismatch.
Rational bilinear(const RootSystem& sys, const Root& a, const Root& b);

/// Membership in the positive roots or their negatives.
bool is_root(const RootSystem& sys, const Root& v);
bool is_positive_root(const RootSystem& sys, const Root& v);
/// 2a is not a root (nonmultipliable).
bool is_nonmultipliable(const RootSystem& sys, const Root& a);

/// s_beta(alpha) = alpha - (2<alpha,beta>/<beta,beta>) beta.
/// Throws std::invalid_argument when beta is not a root.
Root reflect(const RootSystem& sys, const Root& beta, const Root& alpha);

/// alpha + beta and alpha - beta both non-roots.
bool strongly_orthogonal(const RootSystem& sys, const Root& a, const Root& b);

/// max{k >= 0 : beta - k*alpha is a root}.
int string_down(const RootSystem& sys, const Root& alpha, const Root& beta);

/// Restriction to the split part by deleting the coordinates of `zero_labels`
/// (1-based Bourbaki labels). Exact only for Satake diagrams without arrows;
/// the caller is responsible for passing such a pattern.
struct RestrictedSystem {
  RootType ambient_type = RootType::A;
  int ambient_rank = 0;
  std::vector<int> zero_labels;       // sorted, 1-based
  std::vector<int> surviving_labels;  // sorted, 1-based
  std::vector<Root> restricted_positive;
  std::map<Root, std::vector<Root>> fibers;  // restricted root -> ambient roots
  std::vector<Root> zero_fiber;              // ambient positives restricting to 0

  Root restrict_root(const Root& ambient) const;
};

RestrictedSystem restrict_roots(const RootSystem& sys, std::vector<int> zero_labels);

}  // namespace nilcascade
