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


#include "nilcascade/numcheck.hpp"

#include "nilcascade/nilpotent_algebra.hpp"
#include "nilcascade/plancherel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nilcascade::numcheck {

namespace {

constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;

void validate(const QuadratureSpec& q) {
  if (q.points < 8) throw std::invalid_argument("quadrature needs at least 8 points per axis");
  if (!(q.extent > 0)) throw std::invalid_argument("quadrature extent must be positive");
}

// Nodes and trapezoid weights on [-a, a].
struct Grid {
  std::vector<double> nodes;
  double h = 0;
};

Grid grid(double a, int n) {
  Grid g;
  g.h = 2 * a / (n - 1);
  g.nodes.resize(n);
  for (int i = 0; i < n; ++i) g.nodes[i] = -a + i * g.h;
  return g;
}

double weight(const Grid& g, int i) {
  return (i == 0 || i + 1 == static_cast<int>(g.nodes.size())) ? g.h / 2 : g.h;
}

// int |int e^{2 pi i lambda x s} v(s+y) u(s) ds|^2 dx dy for one coordinate.
double coordinate_integral(double lambda, const GaussPoly& u, const GaussPoly& v,
                           const QuadratureSpec& q) {
  const int n = q.points;
  const Grid s = grid(q.extent, 2 * n);
  const Grid y = grid(q.extent, n);
  const Grid x = grid(q.extent / std::abs(lambda), n);
  const int ns = static_cast<int>(s.nodes.size());

  Eigen::MatrixXcd phase(n, ns);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < ns; ++k)
      phase(i, k) = std::polar(weight(s, k), 2 * kPi * lambda * x.nodes[i] * s.nodes[k]);
  Eigen::MatrixXcd w(ns, n);
  for (int k = 0; k < ns; ++k)
    for (int j = 0; j < n; ++j) w(k, j) = v(s.nodes[k] + y.nodes[j]) * u(s.nodes[k]);
  const Eigen::MatrixXcd g = phase * w;

  double total = 0;
  for (int i = 0; i < n; ++i) {
    double row = 0;
    for (int j = 0; j < n; ++j) row += weight(y, j) * std::norm(g(i, j));
    total += weight(x, i) * row;
  }
  return total;
}

ResidualReport finish(std::string check, nlohmann::json params, double coarse, double fine,
                      double expected, double threshold, std::vector<int> grids) {
  ResidualReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.value = fine;
  r.expected = expected;
  r.residual = std::abs(fine - expected) / std::abs(expected);
  r.threshold = threshold;
  r.grids = std::move(grids);
  if (std::abs(fine - coarse) / std::abs(fine) > threshold)
    r.verdict = "inconclusive";
  else
    r.verdict = r.residual < threshold ? "pass" : "fail";
  return r;
}

nlohmann::json vector_params(const TestVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : v) out.push_back({{"coeffs", f.coeffs}, {"width", f.width}});
  return out;
}

// Trapezoid Fourier transform of amplitude * exp(-pi a X^2) at omega.
double gaussian_transform(double a, double omega, const QuadratureSpec& q) {
  const Grid g = grid(q.extent / std::sqrt(a), 2 * q.points);
  cd sum = 0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    sum += weight(g, static_cast<int>(i)) * std::exp(-kPi * a * g.nodes[i] * g.nodes[i]) *
           std::polar(1.0, -2 * kPi * omega * g.nodes[i]);
  return sum.real();
}

}  // namespace

double GaussPoly::operator()(double s) const {
  double p = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p = p * s + *it;
  return p * std::exp(-kPi * width * s * s);
}

double GaussPoly::norm_squared() const {
  // int s^{2m} exp(-2 pi a s^2) ds = (2m-1)!! / (4 pi a)^m / sqrt(2a)
  std::vector<double> sq(2 * coeffs.size(), 0.0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < coeffs.size(); ++j) sq[i + j] += coeffs[i] * coeffs[j];
  double total = 0;
  double moment = 1 / std::sqrt(2 * width);
  for (std::size_t k = 0; k < sq.size(); k += 2) {
    total += sq[k] * moment;
    moment *= static_cast<double>(k + 1) / (4 * kPi * width);
  }
  return total;
}

double norm_squared(const TestVector& v) {
  double out = 1;
  for (const auto& f : v) out *= f.norm_squared();
  return out;
}

HeisenbergElement operator*(const HeisenbergElement& a, const HeisenbergElement& b) {
  if (a.x.size() != b.x.size() || a.y.size() != b.y.size() || a.x.size() != a.y.size())
    throw std::invalid_argument("Heisenberg elements of different dimension");
  HeisenbergElement c{a.x, a.y, a.t + b.t};
  for (std::size_t k = 0; k < a.x.size(); ++k) {
    c.x[k] += b.x[k];
    c.y[k] += b.y[k];
    c.t += (b.x[k] * a.y[k] - a.x[k] * b.y[k]) / 2;
  }
  return c;
}

HeisenbergModel::HeisenbergModel(int d, double lambda) : d_(d), lambda_(lambda) {
  if (d < 1) throw std::invalid_argument("Heisenberg dimension must be positive");
  if (lambda == 0) throw std::invalid_argument("lambda must be nonzero");
}

Function HeisenbergModel::apply(const HeisenbergElement& g, Function f) const {
  if (static_cast<int>(g.x.size()) != d_ || static_cast<int>(g.y.size()) != d_)
    throw std::invalid_argument("element dimension does not match the model");
  const double lambda = lambda_;
  return [g, f = std::move(f), lambda](const std::vector<double>& s) {
    double phase = g.t;
    std::vector<double> shifted(s);
    for (std::size_t k = 0; k < s.size(); ++k) {
      phase += g.x[k] * s[k] + g.x[k] * g.y[k] / 2;
      shifted[k] += g.y[k];
    }
    return std::polar(1.0, 2 * kPi * lambda * phase) * f(shifted);
  };
}

Function as_function(const TestVector& v) {
  return [v](const std::vector<double>& s) {
    double out = 1;
    for (std::size_t k = 0; k < v.size(); ++k) out *= v[k](s[k]);
    return cd(out, 0);
  };
}

double group_law_defect(const HeisenbergModel& model, const HeisenbergElement& g,
                        const HeisenbergElement& h, const TestVector& v,
                        const std::vector<std::vector<double>>& samples) {
  const Function f = as_function(v);
  const Function lhs = model.apply(g, model.apply(h, f));
  const Function rhs = model.apply(g * h, f);
  double worst = 0;
  for (const auto& s : samples) worst = std::max(worst, std::abs(lhs(s) - rhs(s)));
  return worst;
}

double unitarity_defect(const HeisenbergModel& model, const HeisenbergElement& g,
                        const TestVector& v, const QuadratureSpec& q) {
  validate(q);
  if (static_cast<int>(v.size()) != model.d())
    throw std::invalid_argument("vector dimension does not match the model");
  const Function moved = model.apply(g, as_function(v));
  double shift = 0;
  for (double y : g.y) shift = std::max(shift, std::abs(y));
  const Grid s = grid(q.extent + shift, q.points);
  const int d = model.d();
  double moved_norm = 0;
  std::vector<int> idx(d, 0);
  std::vector<double> point(d);
  while (true) {
    double w = 1;
    for (int k = 0; k < d; ++k) {
      point[k] = s.nodes[idx[k]];
      w *= weight(s, idx[k]);
    }
    moved_norm += w * std::norm(moved(point));
    int k = d - 1;
    while (k >= 0 && ++idx[k] == q.points) idx[k--] = 0;
    if (k < 0) break;
  }
  const double expected = norm_squared(v);
  return std::abs(moved_norm - expected) / expected;
}

nlohmann::json to_json(const ResidualReport& r) {
  return {{"check", r.check},       {"params", r.params},
          {"residual", r.residual}, {"grids", r.grids},
          {"verdict", r.verdict},   {"value", r.value},
          {"expected", r.expected}, {"threshold", r.threshold}};
}

double coefficient_norm_integral(int d, double lambda, const TestVector& u, const TestVector& v,
                                 const QuadratureSpec& q) {
  validate(q);
  if (d < 1 || static_cast<int>(u.size()) != d || static_cast<int>(v.size()) != d)
    throw std::invalid_argument("test vectors must have d factors");
  if (lambda == 0) throw std::invalid_argument("lambda must be nonzero");
  // The 2d-dimensional trapezoid sum of a product integrand is the product of
  // the per-coordinate sums.
  double out = 1;
  for (int k = 0; k < d; ++k) out *= coordinate_integral(lambda, u[k], v[k], q);
  return out;
}

ResidualReport coefficient_norm_check(int d, double lambda, const TestVector& u,
                                      const TestVector& v, const QuadratureSpec& q,
                                      double threshold) {
  QuadratureSpec fine = q;
  fine.points = 2 * q.points;
  const double a = coefficient_norm_integral(d, lambda, u, v, q);
  const double b = coefficient_norm_integral(d, lambda, u, v, fine);
  const double expected = norm_squared(u) * norm_squared(v) / std::pow(std::abs(lambda), d);
  return finish("coefficient_norm",
                {{"d", d}, {"lambda", lambda}, {"u", vector_params(u)}, {"v", vector_params(v)},
                 {"extent", q.extent}},
                a, b, expected, threshold, {q.points, fine.points});
}

ResidualReport degree_scaling_check(int d, double lambda, const QuadratureSpec& q,
                                    double threshold) {
  const TestVector u(d, GaussPoly{{1.0}, 1.0});
  const TestVector v(d, GaussPoly{{0.5, 1.0}, 1.0});
  QuadratureSpec fine = q;
  fine.points = 2 * q.points;
  auto ratio = [&](const QuadratureSpec& spec) {
    return coefficient_norm_integral(d, lambda, u, v, spec) /
           coefficient_norm_integral(d, 2 * lambda, u, v, spec);
  };
  return finish("degree_scaling", {{"d", d}, {"lambda", lambda}, {"extent", q.extent}},
                ratio(q), ratio(fine), std::pow(2.0, d), threshold, {q.points, fine.points});
}

double inversion_rhs(InversionGroup group, const GaussianSpec& f, const QuadratureSpec& q) {
  validate(q);
  const NilpotentAlgebra alg =
      build_upper_triangular(group == InversionGroup::Heisenberg1 ? 3 : 4);
  const Polynomial p = plancherel_polynomial(alg);
  std::vector<double> widths = f.widths;
  if (widths.empty()) widths.assign(alg.dim(), 1.0);
  if (widths.size() != alg.dim()) throw std::invalid_argument("one width per basis element");

  std::vector<int> s_axes, v_axes;
  for (const auto& z : alg.centers) s_axes.insert(s_axes.end(), z.begin(), z.end());
  for (const auto& v : alg.complements) v_axes.insert(v_axes.end(), v.begin(), v.end());

  // int_{v*} h^(xi + lambda) d xi splits into v-factors and s-factors.
  double v_part = f.amplitude;
  for (int i : v_axes) {
    const double a = widths[i];
    const Grid w = grid(q.extent * std::sqrt(a), q.points);
    double sum = 0;
    for (std::size_t k = 0; k < w.nodes.size(); ++k)
      sum += weight(w, static_cast<int>(k)) * gaussian_transform(a, w.nodes[k], q);
    v_part *= sum;
  }

  // Midpoint grid in s*, which never hits lambda_r = 0.
  const int m = static_cast<int>(s_axes.size());
  const int n = q.points;
  std::vector<std::vector<double>> nodes(m);
  std::vector<double> steps(m);
  for (int r = 0; r < m; ++r) {
    const double extent = q.extent * std::sqrt(widths[s_axes[r]]);
    steps[r] = 2 * extent / n;
    for (int k = 0; k < n; ++k) nodes[r].push_back(-extent + (k + 0.5) * steps[r]);
  }
  std::vector<std::vector<double>> transforms(m, std::vector<double>(n));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k < n; ++k)
      transforms[r][k] = gaussian_transform(widths[s_axes[r]], nodes[r][k], q);

  double total = 0;
  std::vector<int> idx(m, 0);
  std::vector<double> lambda(m);
  while (true) {
    double hat = v_part, cell = 1;
    for (int r = 0; r < m; ++r) {
      lambda[r] = nodes[r][idx[r]];
      hat *= transforms[r][idx[r]];
      cell *= steps[r];
    }
    const double pf = std::abs(p.evaluate(lambda));
    if (pf > 0) {
      const double theta = hat / pf;
      total += cell * theta * pf;
    }
    int r = m - 1;
    while (r >= 0 && ++idx[r] == n) idx[r--] = 0;
    if (r < 0) break;
  }
  return total;
}

ResidualReport plancherel_inversion_check(InversionGroup group, const GaussianSpec& f,
                                          const QuadratureSpec& q, double threshold) {
  QuadratureSpec fine = q;
  fine.points = 2 * q.points;
  const double a = inversion_rhs(group, f, q);
  const double b = inversion_rhs(group, f, fine);
  const std::string name =
      group == InversionGroup::Heisenberg1 ? "inversion_heisenberg" : "inversion_upper4";
  return finish(name, {{"amplitude", f.amplitude}, {"widths", f.widths}, {"extent", q.extent}},
                a, b, f.amplitude, threshold, {q.points, fine.points});
}

}  // namespace nilcascade::numcheck
