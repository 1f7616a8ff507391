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

#include <json.hpp>

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace nilcascade::numcheck {

/// Trapezoid grid on [-extent, extent] per axis.
struct QuadratureSpec {
  double extent = 6.0;
  int points = 192;
};

/// p(s) exp(-pi a s^2) with p given by its coefficients (constant first).
struct GaussPoly {
  std::vector<double> coeffs = {1.0};
  double width = 1.0;  // a

  double operator()(double s) const;
  /// Closed form from Gaussian moments.
  double norm_squared() const;
};

/// Decomposable vector in L^2(R^d): one factor per coordinate.
using TestVector = std::vector<GaussPoly>;

double norm_squared(const TestVector& v);

/// Element (x, y, t) of the Heisenberg group H_d with
/// (x,y,t)(x',y',t') = (x+x', y+y', t+t' + (x'.y - x.y')/2).
struct HeisenbergElement {
  std::vector<double> x, y;
  double t = 0;
};

HeisenbergElement operator*(const HeisenbergElement& a, const HeisenbergElement& b);

using Function = std::function<std::complex<double>(const std::vector<double>&)>;

/// pi_lambda(x,y,t) f(s) = exp(2 pi i lambda (t + x.s + x.y/2)) f(s + y).
class HeisenbergModel {
 public:
  HeisenbergModel(int d, double lambda);
  int d() const { return d_; }
  double lambda() const { return lambda_; }
  Function apply(const HeisenbergElement& g, Function f) const;

 private:
  int d_;
  double lambda_;
};

Function as_function(const TestVector& v);

/// max |pi(g)pi(h)f - pi(gh)f| over the sample points.
double group_law_defect(const HeisenbergModel& model, const HeisenbergElement& g,
                        const HeisenbergElement& h, const TestVector& v,
                        const std::vector<std::vector<double>>& samples);

/// | ||pi(g)v||^2 - ||v||^2 | / ||v||^2 by quadrature.
double unitarity_defect(const HeisenbergModel& model, const HeisenbergElement& g,
                        const TestVector& v, const QuadratureSpec& q);

struct ResidualReport {
  std::string check;
  nlohmann::json params;
  double value = 0;     // finest-grid integral
  double expected = 0;  // closed form
  double residual = 0;
  double threshold = 0;
  std::vector<int> grids;
  std::string verdict;  // "pass", "fail", "inconclusive"
};

nlohmann::json to_json(const ResidualReport& r);

/// Integral of |<pi_lambda(x,y,0) v, u>|^2 over R^{2d} on a grid of q.points.
double coefficient_norm_integral(int d, double lambda, const TestVector& u, const TestVector& v,
                                 const QuadratureSpec& q);

/// Relative error of the integral against ||u||^2 ||v||^2 / |lambda|^d.
/// Evaluated on q.points and 2 q.points; disagreement above the threshold
/// makes the verdict inconclusive.
ResidualReport coefficient_norm_check(int d, double lambda, const TestVector& u,
                                      const TestVector& v, const QuadratureSpec& q,
                                      double threshold);

/// I(lambda) / I(2 lambda) compared with 2^d.
ResidualReport degree_scaling_check(int d, double lambda, const QuadratureSpec& q,
                                    double threshold);

/// Centered Gaussian amplitude * exp(-pi sum a_i X_i^2) in exponential
/// coordinates of the algebra.
struct GaussianSpec {
  double amplitude = 1.0;
  std::vector<double> widths;  // one per basis element; empty means all 1
};

enum class InversionGroup { Heisenberg1, UpperTriangular4 };

/// Right side of the inversion formula at the identity, with
/// Theta_lambda(h) = |P(lambda)|^{-1} int_{v*} h^(xi + lambda) d xi and
/// P from plancherel_polynomial; the lambda integral uses a midpoint grid.
double inversion_rhs(InversionGroup group, const GaussianSpec& f, const QuadratureSpec& q);

/// |RHS - f(e)| / |f(e)|, same grid-doubling policy as above.
ResidualReport plancherel_inversion_check(InversionGroup group, const GaussianSpec& f,
                                          const QuadratureSpec& q, double threshold);

}  // namespace nilcascade::numcheck
