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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcascade/numcheck.hpp"

#include <cmath>
#include <random>

using namespace nilcascade::numcheck;

namespace {

// Plain Riemann sum on a wide, fine grid.
double riemann_norm(const GaussPoly& f) {
  double sum = 0;
  const double h = 1e-4;
  for (double s = -12; s <= 12; s += h) sum += f(s) * f(s) * h;
  return sum;
}

HeisenbergElement random_element(std::mt19937_64& rng, int d) {
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  HeisenbergElement g;
  for (int k = 0; k < d; ++k) {
    g.x.push_back(dist(rng));
    g.y.push_back(dist(rng));
  }
  g.t = dist(rng);
  return g;
}

const TestVector kGauss1 = {GaussPoly{{1.0}, 1.0}};
const TestVector kHermite1 = {GaussPoly{{0.0, 2.0}, 1.0}};

}  // namespace

TEST_CASE("Gaussian moment norms agree with direct summation") {
  for (const GaussPoly& f : {GaussPoly{{1.0}, 1.0}, GaussPoly{{0.5, -1.0, 2.0}, 1.0},
                             GaussPoly{{1.0, 0.0, 0.0, 3.0}, 0.5}, GaussPoly{{2.0}, 2.5}})
    CHECK(f.norm_squared() == doctest::Approx(riemann_norm(f)).epsilon(1e-10));
  CHECK(norm_squared({GaussPoly{{1.0}, 1.0}, GaussPoly{{1.0}, 1.0}}) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("Heisenberg group law") {
  std::mt19937_64 rng(7);
  for (int d = 1; d <= 3; ++d)
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_element(rng, d), b = random_element(rng, d),
                 c = random_element(rng, d);
      const auto l = (a * b) * c, r = a * (b * c);
      CHECK(l.t == doctest::Approx(r.t).epsilon(1e-12));
      HeisenbergElement inv{a.x, a.y, -a.t};
      for (auto& x : inv.x) x = -x;
      for (auto& y : inv.y) y = -y;
      CHECK(std::abs((a * inv).t) < 1e-12);
    }
  CHECK_THROWS_AS(HeisenbergElement({1.0}, {1.0}, 0) * HeisenbergElement({1.0, 2.0}, {1.0, 2.0}, 0),
                  std::invalid_argument);
}

TEST_CASE("model is a unitary representation") {
  std::mt19937_64 rng(11);
  const std::vector<std::vector<double>> samples = {{-0.7, 0.2}, {0.0, 0.0}, {1.1, -0.4}};
  const TestVector v = {GaussPoly{{1.0, 0.5}, 1.0}, GaussPoly{{0.0, 1.0, -1.0}, 1.5}};
  QuadratureSpec q;
  q.points = 160;
  for (double lambda : {1.0, -2.0, 0.75}) {
    const HeisenbergModel model(2, lambda);
    for (int trial = 0; trial < 5; ++trial) {
      const auto g = random_element(rng, 2), h = random_element(rng, 2);
      CHECK(group_law_defect(model, g, h, v, samples) < 1e-12);
      CHECK(unitarity_defect(model, g, v, q) < 1e-8);
    }
  }
  // Dropping the x.y/2 term breaks the law.
  const HeisenbergModel model(1, 1.0);
  const HeisenbergElement g{{0.8}, {0.5}, 0}, h{{-0.3}, {1.2}, 0};
  const Function f = as_function(kGauss1);
  const HeisenbergElement gh = g * h;
  const HeisenbergElement wrong{gh.x, gh.y, g.t + h.t};
  const std::vector<double> s = {-1.7};
  CHECK(std::abs(model.apply(g, model.apply(h, f))(s) - model.apply(wrong, f)(s)) > 1e-3);
  CHECK_THROWS_AS(HeisenbergModel(1, 0.0), std::invalid_argument);
}

TEST_CASE("coefficient norms for d = 1") {
  for (double lambda : {1.0, 2.0}) {
    // Gaussian against itself: ||u||^4 / |lambda| = 1 / (2 |lambda|).
    CHECK(coefficient_norm_integral(1, lambda, kGauss1, kGauss1, QuadratureSpec{}) ==
          doctest::Approx(0.5 / lambda).epsilon(1e-9));
    const auto r = coefficient_norm_check(1, lambda, kGauss1, kHermite1, QuadratureSpec{}, 1e-6);
    CAPTURE(r.residual);
    CHECK(r.verdict == "pass");
    CHECK(r.residual < 1e-6);
    CHECK(r.grids == std::vector<int>{192, 384});
  }
  const auto neg = coefficient_norm_check(1, -1.5, kHermite1, kGauss1, QuadratureSpec{}, 1e-6);
  CHECK(neg.verdict == "pass");
}

TEST_CASE("coefficient norms for d = 2 and degree scaling") {
  const TestVector u = {GaussPoly{{1.0}, 1.0}, GaussPoly{{0.0, 2.0}, 1.0}};
  const TestVector v = {GaussPoly{{0.5, 1.0}, 1.0}, GaussPoly{{1.0, 0.0, -1.0}, 1.0}};
  for (double lambda : {1.0, 2.0}) {
    const auto r = coefficient_norm_check(2, lambda, u, v, QuadratureSpec{}, 1e-4);
    CAPTURE(r.residual);
    CHECK(r.verdict == "pass");
  }
  for (int d : {1, 2, 3}) {
    const auto r = degree_scaling_check(d, 1.0, QuadratureSpec{}, 1e-4);
    CAPTURE(d);
    CHECK(r.verdict == "pass");
    CHECK(r.value == doctest::Approx(std::pow(2.0, d)).epsilon(1e-6));
  }
}

TEST_CASE("numeric negative controls") {
  // Wrong formal degree exponent.
  const double i2 = coefficient_norm_integral(2, 2.0, {kGauss1[0], kGauss1[0]},
                                              {kGauss1[0], kGauss1[0]}, QuadratureSpec{});
  CHECK(std::abs(i2 - 0.25 / 8) / (0.25 / 8) > 0.5);
  // A coarse grid cannot resolve the oscillation.
  QuadratureSpec coarse;
  coarse.points = 8;
  const auto r = coefficient_norm_check(1, 2.0, kGauss1, kHermite1, coarse, 1e-6);
  CHECK(r.verdict != "pass");
  QuadratureSpec bad;
  bad.points = 4;
  CHECK_THROWS_AS(coefficient_norm_integral(1, 1.0, kGauss1, kGauss1, bad), std::invalid_argument);
  CHECK_THROWS_AS(coefficient_norm_integral(2, 1.0, kGauss1, kGauss1, QuadratureSpec{}),
                  std::invalid_argument);
}

TEST_CASE("Plancherel inversion on H_1 and the l = 4 group") {
  QuadratureSpec q;
  q.points = 96;
  const auto h = plancherel_inversion_check(InversionGroup::Heisenberg1, GaussianSpec{}, q, 1e-4);
  CAPTURE(h.residual);
  CHECK(h.verdict == "pass");

  GaussianSpec wide;
  wide.amplitude = 3.0;
  wide.widths = {1.0, 0.5, 2.0};
  const double scaled = inversion_rhs(InversionGroup::Heisenberg1, wide, q);
  CHECK(scaled == doctest::Approx(3.0).epsilon(1e-6));

  QuadratureSpec q4;
  q4.points = 48;
  GaussianSpec f4;
  f4.widths = {1.0, 0.5, 1.5, 1.0, 2.0, 1.0};
  const auto u = plancherel_inversion_check(InversionGroup::UpperTriangular4, f4, q4, 1e-2);
  CAPTURE(u.residual);
  CHECK(u.verdict == "pass");
  CHECK_THROWS_AS(inversion_rhs(InversionGroup::UpperTriangular4, wide, q4),
                  std::invalid_argument);
}

TEST_CASE("residual report JSON") {
  const auto r = coefficient_norm_check(1, 1.0, kGauss1, kGauss1, QuadratureSpec{}, 1e-6);
  const auto j = to_json(r);
  for (const char* key : {"check", "params", "residual", "grids", "verdict"})
    CHECK(j.contains(key));
  CHECK(j["check"] == "coefficient_norm");
  CHECK(j["params"]["lambda"] == 1.0);
}
