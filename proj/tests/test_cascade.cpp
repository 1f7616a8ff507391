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

#include "nilcascade/cascade.hpp"
#include "nilcascade/golden.hpp"

#include <set>

using namespace nilcascade;

namespace {

const char* kSupported[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4",
                            "B5", "C2", "C3", "C4", "C5", "D4", "D5", "D6", "G2", "F4",
                            "E6", "E7", "E8"};

std::vector<std::size_t> pair_counts_by_beta(const RootSystem& sys, const GoldenFixture& fx) {
  const Cascade c = kostant_cascade(sys);
  const LayerDecomposition l = compute_layers(sys, c);
  std::vector<std::size_t> out;
  for (const auto& g : fx.generations) {
    for (const auto& b : g) {
      const Root beta = parse_root(b, sys.rank);
      for (std::size_t i = 0; i < c.betas.size(); ++i) {
        if (c.betas[i] == beta) out.push_back(l.pairs[i].size());
      }
    }
  }
  return out;
}

Root sum_range(int n, int from, int to, int coeff = 1) {
  std::vector<int> v(n, 0);
  for (int i = from; i <= to; ++i) v[i - 1] = coeff;
  return Root(v);
}

std::set<std::set<Root>> computed_pairs(const LayerDecomposition& l, std::size_t r) {
  std::set<std::set<Root>> out;
  for (const auto& p : l.pairs[r]) {
    std::set<Root> s = {p.first};
    if (p.second) s.insert(*p.second);
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("exceptional fixtures load and match") {
  for (const auto& fx : exceptional_fixtures()) {
    CAPTURE(fx.label);
    const RootSystem sys = build_root_system(fx.label);
    const auto v = validate_fixture(sys, fx);
    for (const auto& c : v.checks) {
      CAPTURE(c.detail);
      CHECK_MESSAGE(c.passed, c.name);
    }
    const auto cmp = compare_with_fixture(sys, fx);
    for (const auto& c : cmp.checks) {
      CAPTURE(c.detail);
      CHECK_MESSAGE(c.passed, c.name);
    }
  }
}

TEST_CASE("fixture mismatches name the layer, the root and the correction") {
  GoldenFixture fx = *find_fixture("E6");
  const RootSystem sys = build_root_system("E6");
  fx.layers[1].pop_back();
  const auto cmp = compare_with_fixture(sys, fx);
  const Check* c = cmp.find("layer 2 pairs");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
  CHECK(c->detail.find("layer 2: extra ") == 0);
  CHECK(c->detail.find("correction layer 2") != std::string::npos);
  CHECK(cmp.find("layer 1 pairs")->passed);

  GoldenFixture moved = *find_fixture("G2");
  moved.generations[1][0] = "psi2";
  const auto g = compare_with_fixture(build_root_system("G2"), moved);
  CHECK_FALSE(g.find("generation 2")->passed);
  CHECK(g.find("generation 2")->detail.find("missing psi2") != std::string::npos);
  CHECK(g.find("generation 2")->detail.find("extra psi1") != std::string::npos);
}

TEST_CASE("classical fixtures match") {
  for (const char* label : kSupported) {
    const RootSystem sys = build_root_system(label);
    if (sys.type != RootType::A && sys.type != RootType::B && sys.type != RootType::C &&
        sys.type != RootType::D) {
      continue;
    }
    const std::string name = label;
    CAPTURE(name);
    const GoldenFixture fx = classical_fixture(sys.type, sys.rank);
    CHECK(validate_fixture(sys, fx).passed());
    const auto cmp = compare_with_fixture(sys, fx);
    for (const auto& c : cmp.checks) {
      CAPTURE(c.detail);
      CHECK_MESSAGE(c.passed, c.name);
    }
  }
}

TEST_CASE("pair counts per layer") {
  auto counts = [](const char* label) {
    const RootSystem sys = build_root_system(label);
    return pair_counts_by_beta(sys, *find_fixture(label));
  };
  CHECK(counts("G2") == std::vector<std::size_t>{2, 0});
  CHECK(counts("F4") == std::vector<std::size_t>{7, 2, 1, 0});
  CHECK(counts("E6") == std::vector<std::size_t>{10, 4, 2, 0});
  CHECK(counts("E7") == std::vector<std::size_t>{16, 8, 0, 4, 0, 0, 0});
  CHECK(counts("E8") == std::vector<std::size_t>{28, 16, 8, 0, 4, 0, 0, 0});
}

TEST_CASE("B and C layers follow the closed-form pair rule") {
  // B_n, odd r: {psi_r..psi_u, psi_{r+1}..psi_u + 2(psi_{u+1}..psi_n)} for r < u <= n,
  // and {psi_{r+1}..psi_u, psi_r..psi_u + 2(psi_{u+1}..psi_n)} for r < u < n.
  for (int n = 2; n <= 6; ++n) {
    const RootSystem sys = build_root_system(RootType::B, n);
    const Cascade c = kostant_cascade(sys);
    const LayerDecomposition l = compute_layers(sys, c);
    for (int r = 1; r <= n; r += 2) {
      const Root beta = sum_range(n, r, r) + sum_range(n, r + 1, n, 2);
      std::set<std::set<Root>> want;
      for (int u = r + 1; u <= n; ++u) {
        want.insert({sum_range(n, r, u), sum_range(n, r + 1, u) + sum_range(n, u + 1, n, 2)});
        if (u < n) {
          want.insert({sum_range(n, r + 1, u), sum_range(n, r, u) + sum_range(n, u + 1, n, 2)});
        }
      }
      std::size_t idx = 0;
      while (c.betas[idx] != beta) ++idx;
      CAPTURE(n);
      CAPTURE(r);
      CHECK(computed_pairs(l, idx) == want);
    }
  }
  // C_n: {psi_r..psi_u, psi_r..psi_u + 2(psi_{u+1}..psi_{n-1}) + psi_n} for r <= u < n.
  for (int n = 2; n <= 6; ++n) {
    const RootSystem sys = build_root_system(RootType::C, n);
    const Cascade c = kostant_cascade(sys);
    const LayerDecomposition l = compute_layers(sys, c);
    for (int r = 1; r <= n; ++r) {
      std::set<std::set<Root>> want;
      for (int u = r; u < n; ++u) {
        want.insert({sum_range(n, r, u),
                     sum_range(n, r, u) + sum_range(n, u + 1, n - 1, 2) + sum_range(n, n, n)});
      }
      CHECK(c.betas[r - 1] == sum_range(n, r, n - 1, 2) + sum_range(n, n, n));
      CHECK(computed_pairs(l, r - 1) == want);
    }
  }
}

TEST_CASE("E8 layer cardinalities") {
  const RootSystem sys = build_root_system("E8");
  const auto counts = pair_counts_by_beta(sys, *find_fixture("E8"));
  std::vector<std::size_t> sizes;
  for (auto c : counts) sizes.push_back(2 * c);
  CHECK(sizes == std::vector<std::size_t>{56, 32, 16, 0, 8, 0, 0, 0});
}

TEST_CASE("structural lemmas hold for every supported system") {
  for (const char* label : kSupported) {
    const std::string name = label;
    CAPTURE(name);
    const RootSystem sys = build_root_system(label);
    const Cascade c = kostant_cascade(sys);
    const LayerDecomposition l = compute_layers(sys, c);
    const auto report = verify_layer_lemmas(sys, c, l);
    for (const auto& chk : report.checks) {
      CAPTURE(chk.detail);
      CHECK_MESSAGE(chk.passed, chk.name);
    }
    for (const auto& b : c.betas) CHECK(is_nonmultipliable(sys, b));
  }
  for (int n = 1; n <= 5; ++n) {
    const RootSystem sys = build_root_system(RootType::BC, n);
    const Cascade c = kostant_cascade(sys);
    CHECK(verify_layer_lemmas(sys, c, compute_layers(sys, c)).passed());
  }
}

TEST_CASE("swapped layer assignment fails the fill-out check") {
  const RootSystem sys = build_root_system("F4");
  const Cascade c = kostant_cascade(sys);
  LayerDecomposition l = compute_layers(sys, c);
  std::swap(l.layers[0].back(), l.layers[1].back());
  const auto report = verify_layer_lemmas(sys, c, l);
  CHECK_FALSE(report.find("(a) fill-out partition")->passed);
  CHECK_FALSE(report.passed());
}

TEST_CASE("tie-break changes order, not sets") {
  for (const char* label : kSupported) {
    const RootSystem sys = build_root_system(label);
    const Cascade base = kostant_cascade(sys);
    const std::set<Root> want(base.betas.begin(), base.betas.end());
    for (TieBreak t : {TieBreak::AscendingLex, TieBreak::DescendingHeight}) {
      const Cascade other = kostant_cascade(sys, t);
      CHECK(std::set<Root>(other.betas.begin(), other.betas.end()) == want);
      CHECK(other.generations.size() == base.generations.size());
      CHECK_NOTHROW(compute_layers(sys, other));
    }
  }
}

TEST_CASE("E7 ordering puts psi7 before the D4 top root") {
  const RootSystem sys = build_root_system("E7");
  const Cascade c = kostant_cascade(sys);
  REQUIRE(c.betas.size() == 7);
  CHECK(c.betas[2] == Root{0, 0, 0, 0, 0, 0, 1});
  CHECK(c.betas[3] == Root{0, 1, 1, 2, 1, 0, 0});
}

TEST_CASE("sigma") {
  const RootSystem g2 = build_root_system("G2");
  const Cascade cg = kostant_cascade(g2);
  CHECK(sigma(g2, cg, 0, Root{0, 1}) == Root{3, 1});
  CHECK_THROWS_AS(sigma(g2, cg, 0, Root{1, 0}), std::invalid_argument);
  const RootSystem f4 = build_root_system("F4");
  const Cascade cf = kostant_cascade(f4);
  CHECK(sigma(f4, cf, 1, Root{0, 0, 0, 1}) == Root{0, 1, 2, 1});
  const RootSystem bc1 = build_root_system(RootType::BC, 1);
  const Cascade cb = kostant_cascade(bc1);
  REQUIRE(cb.betas.size() == 1);
  CHECK(cb.betas[0] == Root{2});
  CHECK(sigma(bc1, cb, 0, Root{1}) == Root{1});
  const LayerDecomposition lb = compute_layers(bc1, cb);
  REQUIRE(lb.pairs[0].size() == 1);
  CHECK_FALSE(lb.pairs[0][0].second.has_value());
}

TEST_CASE("strong orthogonality examples") {
  const RootSystem a3 = build_root_system("A3");
  CHECK(strongly_orthogonal(a3, Root{1, 0, 0}, Root{0, 0, 1}));
  const RootSystem a2 = build_root_system("A2");
  CHECK_FALSE(strongly_orthogonal(a2, Root{1, 0}, Root{0, 1}));
  const RootSystem g2 = build_root_system("G2");
  const Cascade c = kostant_cascade(g2);
  CHECK(strongly_orthogonal(g2, c.betas[0], c.betas[1]));
}
