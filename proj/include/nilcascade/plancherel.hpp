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

#include "nilcascade/nilpotent_algebra.hpp"
#include "nilcascade/rational.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilcascade {

template <typename Scalar>
Scalar from_rational(const Rational& q) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return q;
  } else {
    return q.template convert_to<Scalar>();
  }
}

/// Pfaffian by skew-symmetric elimination. Exact scalars pivot on the first
/// nonzero entry, floating ones on the largest. The 0 x 0 matrix has
/// Pfaffian 1. Throws std::invalid_argument for odd size or asymmetry.
template <typename Scalar>
Scalar pfaffian(Matrix<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("pfaffian: matrix is not square");
  if (n % 2) throw std::invalid_argument("pfaffian: odd dimension " + std::to_string(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      bool bad;
      if constexpr (is_exact_v<Scalar>) {
        bad = a(i, j) != -a(j, i);
      } else {
        using std::abs;
        bad = abs(a(i, j) + a(j, i)) > Scalar(1e-12) * (Scalar(1) + abs(a(i, j)));
      }
      if (bad) throw std::invalid_argument("pfaffian: matrix is not antisymmetric");
    }
  }
  Scalar pf = 1;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index pivot = -1;
    if constexpr (is_exact_v<Scalar>) {
      for (Eigen::Index p = k + 1; p < n; ++p) {
        if (a(k, p) != 0) {
          pivot = p;
          break;
        }
      }
    } else {
      using std::abs;
      Scalar best = 0;
      for (Eigen::Index p = k + 1; p < n; ++p) {
        if (abs(a(k, p)) > best) {
          best = abs(a(k, p));
          pivot = p;
        }
      }
    }
    if (pivot < 0) return Scalar(0);
    if (pivot != k + 1) {
      a.row(k + 1).swap(a.row(pivot));
      a.col(k + 1).swap(a.col(pivot));
      pf = -pf;
    }
    const Scalar head = a(k, k + 1);
    pf *= head;
    for (Eigen::Index i = k + 2; i < n; ++i) {
      if (a(k, i) == Scalar(0)) continue;
      const Scalar c = a(k, i) / head;
      a.row(i) -= c * a.row(k + 1);
      a.col(i) -= c * a.col(k + 1);
    }
  }
  return pf;
}

/// Sparse polynomial with rational coefficients in named variables.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Polynomial constant(std::vector<std::string> vars, const Rational& c);
  static Polynomial variable(std::vector<std::string> vars, std::size_t i);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  void add_term(std::vector<int> exps, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  int degree() const;  // -1 for zero
  Rational evaluate(const std::vector<Rational>& x) const;
  double evaluate(const std::vector<double>& x) const;
  std::string to_string() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<std::string> vars_;
  std::map<std::vector<int>, Rational> terms_;
};

using PfaffianPolynomial = Polynomial;

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

/// Coordinates of s*: "l{r}_{k}" for the k-th basis element of z_r (1-based).
std::vector<std::string> lambda_variables(const NilpotentAlgebra& alg);
/// Offset of layer r's coordinates inside the concatenated lambda vector.
std::size_t lambda_offset(const NilpotentAlgebra& alg, std::size_t r);
std::size_t lambda_dimension(const NilpotentAlgebra& alg);

/// b_{lambda_r}(x, y) = lambda_r([x, y]) on v_r; lambda_r has one entry per
/// element of z_r. Throws std::invalid_argument if r is out of range.
template <typename Scalar>
Matrix<Scalar> b_matrix(const NilpotentAlgebra& alg, std::size_t r, const Vector<Scalar>& lambda_r) {
  if (r >= alg.layers.size()) throw std::invalid_argument("b_matrix: layer index out of range");
  const auto& z = alg.centers[r];
  if (static_cast<std::size_t>(lambda_r.size()) != z.size()) {
    throw std::invalid_argument("b_matrix: lambda has " + std::to_string(lambda_r.size()) +
                                " coordinates, z_r has dimension " + std::to_string(z.size()));
  }
  const auto& v = alg.complements[r];
  const Eigen::Index n = static_cast<Eigen::Index>(v.size());
  Matrix<Scalar> out = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      for (const auto& [t, c] : alg.structure(v[a], v[b])) {
        for (std::size_t k = 0; k < z.size(); ++k) {
          if (z[k] == t) out(a, b) += from_rational<Scalar>(c) * lambda_r(k);
        }
      }
    }
  }
  return out;
}

/// Entries are linear forms in the layer-r variables of lambda_variables(alg).
std::vector<std::vector<Polynomial>> b_matrix_symbolic(const NilpotentAlgebra& alg, std::size_t r);

/// Symbolic Pf(b_{lambda_r}). dim z_r = 1 uses Pf(b) = lambda^d Pf(pairing);
/// otherwise full expansion, allowed for dim v_r <= 16. Larger layers throw
/// std::length_error: use find_nondegenerate_lambda on such layers.
Polynomial layer_pfaffian(const NilpotentAlgebra& alg, std::size_t r);

/// P(lambda) = prod_r Pf(b_{lambda_r}).
Polynomial plancherel_polynomial(const NilpotentAlgebra& alg);

/// c = 2^{d_1 + ... + d_m} d_1! ... d_m!, d_r = dim(v_r) / 2.
Integer plancherel_constant(const NilpotentAlgebra& alg);

/// Exact P(lambda) from numeric Pfaffians; lambda is the concatenated
/// coordinate vector (see lambda_offset). Works at any size.
Rational plancherel_value(const NilpotentAlgebra& alg, const RationalVector& lambda);

/// |P(lambda)|.
Rational formal_degree(const NilpotentAlgebra& alg, const RationalVector& lambda);

/// Every lambda_r is nonzero and every Pf(b_{lambda_r}) is nonzero.
bool is_stepwise_si(const NilpotentAlgebra& alg, const RationalVector& lambda);

/// det b_{lambda_r} != 0 on v_r.
bool is_nondegenerate(const NilpotentAlgebra& alg, std::size_t r, const RationalVector& lambda_r);

struct WitnessResult {
  std::optional<RationalVector> lambda;  // coordinates on z_r
  std::string method;                    // which pattern or trial produced it
  std::uint64_t seed = 0;
  int trials = 0;                        // random trials used
  bool inconclusive() const { return !lambda.has_value(); }
};

inline constexpr std::uint64_t kDefaultWitnessSeed = 20260101;
inline constexpr int kWitnessTrialBudget = 64;

/// Seed from CASCADE_LIE_SEED if set and parseable, else kDefaultWitnessSeed.
std::uint64_t witness_seed();

/// Sparse patterns first (lambda supported on the highest and lowest root of
/// the fiber, then single coordinates, then pairs), then seeded random
/// rational trials.
WitnessResult find_nondegenerate_lambda(const NilpotentAlgebra& alg, std::size_t r,
                                        std::optional<std::uint64_t> seed = std::nullopt);

/// Lattice Lambda in s: columns are generators, block diagonal per z_r.
struct LatticeSpec {
  RationalMatrix basis;
  std::vector<std::size_t> blocks;  // dim z_r per block
};

/// Standard integer lattice in the given layer blocks.
LatticeSpec standard_lattice(const NilpotentAlgebra& alg);

/// Inverse transpose per block. Throws std::invalid_argument if the basis is
/// singular or not block diagonal.
LatticeSpec dual_lattice(const LatticeSpec& lattice);

/// |P(lambda)| when every lambda_r lies in the dual lattice and P(lambda) != 0,
/// otherwise 0. lambda is in the coordinates dual to the z_r basis.
Rational multiplicity(const NilpotentAlgebra& alg, const LatticeSpec& lattice,
                      const RationalVector& lambda);

struct MultiplicityReport {
  int box = 0;
  std::vector<std::pair<RationalVector, Rational>> entries;
};

/// Dual-lattice points with integer coordinates (in the dual basis) of
/// sup-norm at most box; only nonzero multiplicities are listed.
MultiplicityReport multiplicity_table(const NilpotentAlgebra& alg, const LatticeSpec& lattice,
                                      int box);

nlohmann::json to_json(const MultiplicityReport& report);
MultiplicityReport multiplicity_report_from_json(const nlohmann::json& j);

}  // namespace nilcascade
