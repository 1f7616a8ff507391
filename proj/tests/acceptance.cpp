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


// One PASS/FAIL line per acceptance criterion.

#include "nilcascade/cascade.hpp"
#include "nilcascade/golden.hpp"
#include "nilcascade/nilpotent_algebra.hpp"
#include "nilcascade/numcheck.hpp"
#include "nilcascade/plancherel.hpp"
#include "nilcascade/root_system.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

using namespace nilcascade;

namespace {

const char* kSystems[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4", "B5", "C2",
                          "C3", "C4", "C5", "D4", "D5", "D6", "G2", "F4", "E6", "E7", "E8"};

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

GoldenFixture fixture_for(const RootSystem& sys) {
  if (auto fx = find_fixture(sys.label())) return *fx;
  return classical_fixture(sys.type, sys.rank);
}

Outcome cascade_golden() {
  Outcome o;
  for (const char* label : kSystems) {
    const RootSystem sys = build_root_system(label);
    const GoldenFixture fx = fixture_for(sys);
    if (!validate_fixture(sys, fx).passed()) o.fail(std::string(label) + " fixture invalid");
    for (const auto& c : compare_with_fixture(sys, fx).checks)
      if (starts_with(c.name, "generation") && !c.passed) o.fail(c.detail);
  }
  // A_{l-1}: beta_r = psi_r + ... + psi_{l-r}, written out directly.
  for (int l = 2; l <= 8; ++l) {
    const RootSystem sys = build_root_system(RootType::A, l - 1);
    const Cascade c = kostant_cascade(sys);
    std::set<Root> want, got(c.betas.begin(), c.betas.end());
    for (int r = 1; 2 * r <= l; ++r) {
      std::vector<int> v(l - 1, 0);
      for (int k = r; k <= l - r; ++k) v[k - 1] = 1;
      want.insert(Root(v));
    }
    if (want != got) o.fail("A" + std::to_string(l - 1) + " betas");
  }
  return o;
}

Outcome layer_golden() {
  Outcome o;
  const std::map<std::string, std::vector<std::size_t>> counts = {
      {"G2", {2, 0}},
      {"F4", {7, 2, 1, 0}},
      {"E6", {10, 4, 2, 0}},
      {"E7", {16, 8, 0, 4, 0, 0, 0}},
      {"E8", {28, 16, 8, 0, 4, 0, 0, 0}}};
  for (const char* label : kSystems) {
    const RootSystem sys = build_root_system(label);
    const GoldenFixture fx = fixture_for(sys);
    for (const auto& c : compare_with_fixture(sys, fx).checks)
      if (!c.passed) o.fail(std::string(label) + " " + c.name + ": " + c.detail);
    const Cascade c = kostant_cascade(sys);
    const LayerDecomposition l = compute_layers(sys, c);
    std::size_t total = c.betas.size();
    for (const auto& layer : l.layers) total += layer.size();
    if (total != sys.positive_roots.size()) o.fail(std::string(label) + " cardinality identity");
    if (auto it = counts.find(label); it != counts.end()) {
      // Printed pair lists, keyed by beta as printed.
      std::vector<std::size_t> printed;
      for (const auto& layer : fx.layers) printed.push_back(layer.size());
      std::map<Root, std::size_t> computed;
      for (std::size_t r = 0; r < c.betas.size(); ++r) computed[c.betas[r]] = l.pairs[r].size();
      std::vector<std::size_t> by_fixture;
      for (const auto& g : fx.generations)
        for (const auto& b : g) by_fixture.push_back(computed[parse_root(b, sys.rank)]);
      if (by_fixture != it->second || printed != it->second)
        o.fail(std::string(label) + " pair counts");
    }
  }
  return o;
}

std::vector<NilpotentAlgebra> upper_algebras() {
  std::vector<NilpotentAlgebra> out;
  for (int l = 2; l <= 8; ++l) out.push_back(build_upper_triangular(l));
  return out;
}

Outcome structural_lemmas() {
  Outcome o;
  for (const char* label : kSystems) {
    const RootSystem sys = build_root_system(label);
    const Cascade c = kostant_cascade(sys);
    for (const auto& chk : verify_layer_lemmas(sys, c, compute_layers(sys, c)).checks)
      if (!chk.passed) o.fail(std::string(label) + " " + chk.name + ": " + chk.detail);
    const NilpotentAlgebra alg = build_split_nilradical(sys);
    for (const auto& chk : verify_setup(alg).checks)
      if (!chk.passed) o.fail(alg.name + " " + chk.name);
    if (!is_nilpotent(alg)) o.fail(alg.name + " not nilpotent");
  }
  for (const auto& alg : upper_algebras()) {
    for (const auto& chk : verify_setup(alg).checks)
      if (!chk.passed) o.fail(alg.name + " " + chk.name);
    if (!is_nilpotent(alg)) o.fail(alg.name + " not nilpotent");
  }
  return o;
}

Outcome jacobi_pairing() {
  Outcome o;
  std::vector<NilpotentAlgebra> algs = upper_algebras();
  for (const char* label : {"G2", "F4", "B4", "C4", "D5", "E6", "E7"})
    algs.push_back(build_split_nilradical(build_root_system(label)));
  for (const auto& alg : algs) {
    for (const auto& chk : verify_jacobi(alg).checks)
      if (!chk.passed) o.fail(alg.name + " " + chk.name + ": " + chk.detail);
    // Full exact rank of the pairing in every layer with a one-dimensional center.
    for (std::size_t r = 0; r < alg.layers.size(); ++r) {
      if (alg.centers[r].size() != 1) continue;
      const RationalMatrix b = pairing_matrix(alg, r);
      if (exact_rank(b) != b.rows())
        o.fail(alg.name + " layer " + std::to_string(r + 1) + " pairing rank");
    }
  }
  return o;
}

Outcome plancherel_polynomials() {
  Outcome o;
  for (int l = 3; l <= 8; ++l) {
    const Polynomial p = plancherel_polynomial(build_upper_triangular(l));
    std::vector<int> want;
    for (int r = 1; r <= l / 2; ++r) want.push_back(l - 2 * r);
    const bool ok = p.terms().size() == 1 && p.terms().begin()->first == want &&
                    (p.terms().begin()->second == 1 || p.terms().begin()->second == -1);
    if (!ok) o.fail("l = " + std::to_string(l) + ": " + p.to_string());
  }
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> half(1, 6), num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * half(rng);
    RationalMatrix a = RationalMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        a(i, j) = Rational(num(rng), den(rng));
        a(j, i) = -a(i, j);
      }
    const Rational pf = pfaffian<Rational>(a);
    const Rational det = a.fullPivLu().determinant();
    if (pf * pf != det) o.fail("trial " + std::to_string(trial));
  }
  return o;
}

RationalVector fiber_lambda(const NilpotentAlgebra& alg, const std::vector<Root>& support) {
  const auto& z = alg.centers[0];
  RationalVector l = RationalVector::Zero(static_cast<Eigen::Index>(z.size()));
  for (std::size_t k = 0; k < z.size(); ++k)
    for (const Root& a : support)
      if (*alg.roots[z[k]] == a) l(static_cast<Eigen::Index>(k)) = 1;
  return l;
}

Outcome witnesses() {
  Outcome o;
  const NilpotentAlgebra h3 = build_restricted_nilradical(build_root_system("A5"), {1, 3, 5});
  const NilpotentAlgebra e6 = build_restricted_nilradical(build_root_system("E6"), {2, 3, 4, 5});
  for (const auto* alg : {&h3, &e6}) {
    const WitnessResult w = find_nondegenerate_lambda(*alg, 0);
    if (!w.lambda || !is_nondegenerate(*alg, 0, *w.lambda)) o.fail(alg->name + " no witness");
  }
  const RationalVector ph = fiber_lambda(h3, {Root{1, 1, 1, 1, 1}, Root{0, 1, 1, 1, 0}});
  const RationalVector pe = fiber_lambda(e6, {Root{1, 2, 2, 3, 2, 1}, Root{1, 0, 1, 1, 1, 1}});
  if (ph.sum() != 2 || !is_nondegenerate(h3, 0, ph)) o.fail("sl(3,H) sparse lambda rejected");
  if (pe.sum() != 2 || !is_nondegenerate(e6, 0, pe)) o.fail("e6f4 sparse lambda rejected");
  return o;
}

// Orbits of m -> m + n on a window of Z, by union-find.
int orbit_count(int n) {
  if (n == 0) return 0;
  const int w = 40;
  std::vector<int> parent(2 * w + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (int m = -w; m <= w; ++m)
    if (m + n >= -w && m + n <= w) parent[find(m + w)] = find(m + n + w);
  std::set<int> classes;
  for (int m = -w / 2; m <= w / 2; ++m) classes.insert(find(m + w));
  return static_cast<int>(classes.size());
}

Outcome multiplicities() {
  Outcome o;
  const NilpotentAlgebra h = build_upper_triangular(3);
  const LatticeSpec lattice = standard_lattice(h);
  auto mult = [&](const Rational& x) {
    RationalVector v(1);
    v(0) = x;
    return multiplicity(h, lattice, v);
  };
  for (int n = -5; n <= 5; ++n) {
    const Rational m = mult(n);
    if (m != std::abs(n)) o.fail("lambda = " + std::to_string(n));
    if (std::abs(n) <= 3 && m != orbit_count(n)) o.fail("oracle at " + std::to_string(n));
  }
  for (const Rational x : {Rational(1, 2), Rational(-3, 2), Rational(7, 3), Rational(9, 4)})
    if (mult(x) != 0) o.fail("non-integer lambda " + to_string(x));
  return o;
}

Outcome numerics() {
  using namespace numcheck;
  Outcome o;
  auto need = [&](const ResidualReport& r) {
    if (r.verdict != "pass")
      o.fail(r.check + " " + r.verdict + " residual " + std::to_string(r.residual));
  };
  const TestVector g = {GaussPoly{{1.0}, 1.0}}, h = {GaussPoly{{0.0, 2.0}, 1.0}};
  for (double lambda : {1.0, 2.0}) need(coefficient_norm_check(1, lambda, g, h, {}, 1e-6));
  const TestVector u2 = {GaussPoly{{1.0}, 1.0}, GaussPoly{{0.0, 2.0}, 1.0}};
  const TestVector v2 = {GaussPoly{{0.5, 1.0}, 1.0}, GaussPoly{{1.0, 0.0, -1.0}, 1.0}};
  need(coefficient_norm_check(2, 1.0, u2, v2, {}, 1e-4));
  QuadratureSpec q1;
  q1.points = 96;
  need(plancherel_inversion_check(InversionGroup::Heisenberg1, GaussianSpec{}, q1, 1e-4));
  QuadratureSpec q4;
  q4.points = 48;
  GaussianSpec f4;
  f4.widths = {1.0, 0.5, 1.5, 1.0, 2.0, 1.0};
  need(plancherel_inversion_check(InversionGroup::UpperTriangular4, f4, q4, 1e-2));
  for (int d : {1, 2, 3}) need(degree_scaling_check(d, 1.0, {}, 1e-4));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"cascade golden match", 5, cascade_golden},
      {"layer golden match and cardinality identity", 10, layer_golden},
      {"structural lemma suite", 30, structural_lemmas},
      {"Jacobi and pairing rank", 60, jacobi_pairing},
      {"Plancherel polynomial and Pf^2 = det", 60, plancherel_polynomials},
      {"nondegeneracy witnesses", 10, witnesses},
      {"Heisenberg multiplicities", 60, multiplicities},
      {"numeric identities", 300, numerics},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= criteria[i].limit_seconds)
      o.fail("took " + std::to_string(secs) + " s, limit " +
             std::to_string(criteria[i].limit_seconds) + " s");
    std::printf("%s %zu %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                o.ok ? "" : ": ", o.note.c_str());
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
