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


#include "nilcascade/golden.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nilcascade {

namespace {

// Transcribed from the published tables; see `corrections` for misprints.
const std::vector<GoldenFixture> kExceptional = {
    {"G2",
     {{"3psi1+2psi2"}, {"psi1"}},
     {
         {{"3psi1+psi2", "psi2"},
          {"2psi1+psi2", "psi1+psi2"}},
         {},
     },
     {{"layer 1 pair 2", "\\psi_1 + \\Psi_2", "psi1+psi2"}}},
    {"F4",
     {{"2psi1+3psi2+4psi3+2psi4"}, {"psi2+2psi3+2psi4"}, {"psi2+2psi3"}, {"psi2"}},
     {
         {{"psi1", "psi1+3psi2+4psi3+2psi4"},
          {"psi1+psi2", "psi1+2psi2+4psi3+2psi4"},
          {"psi1+psi2+psi3", "psi1+2psi2+3psi3+2psi4"},
          {"psi1+psi2+2psi3", "psi1+2psi2+2psi3+2psi4"},
          {"psi1+psi2+psi3+psi4", "psi1+2psi2+3psi3+psi4"},
          {"psi1+2psi2+2psi3", "psi1+psi2+2psi3+2psi4"},
          {"psi1+psi2+2psi3+psi4", "psi1+2psi2+2psi3+psi4"}},
         {{"psi4", "psi2+2psi3+psi4"},
          {"psi3+psi4", "psi2+psi3+psi4"}},
         {{"psi3", "psi2+psi3"}},
         {},
     },
     {{"beta_1", "2\\psi_1 + 3\\psi_2 + 4\\psi_4 + 2\\psi_4", "2psi1+3psi2+4psi3+2psi4"},
      {"layer 3", "\\Delta^+_3 = \\{\\psi_3,\\, \\psi_2 + \\psi_3\\}", "one pair {psi3, psi2+psi3}"}}},
    {"E6",
     {{"psi1+2psi2+2psi3+3psi4+2psi5+psi6"}, {"psi1+psi3+psi4+psi5+psi6"}, {"psi3+psi4+psi5"}, {"psi4"}},
     {
         {{"psi2", "psi1+psi2+2psi3+3psi4+2psi5+psi6"},
          {"psi2+psi4", "psi1+psi2+2psi3+2psi4+2psi5+psi6"},
          {"psi2+psi3+psi4", "psi1+psi2+psi3+2psi4+2psi5+psi6"},
          {"psi2+psi4+psi5", "psi1+psi2+2psi3+2psi4+psi5+psi6"},
          {"psi1+psi2+psi3+psi4", "psi2+psi3+2psi4+2psi5+psi6"},
          {"psi2+psi3+psi4+psi5", "psi1+psi2+psi3+2psi4+psi5+psi6"},
          {"psi2+psi4+psi5+psi6", "psi1+psi2+2psi3+2psi4+psi5"},
          {"psi1+psi2+psi3+psi4+psi5", "psi2+psi3+2psi4+psi5+psi6"},
          {"psi2+psi3+2psi4+psi5", "psi1+psi2+psi3+psi4+psi5+psi6"},
          {"psi2+psi3+psi4+psi5+psi6", "psi1+psi2+psi3+2psi4+psi5"}},
         {{"psi1", "psi3+psi4+psi5+psi6"},
          {"psi6", "psi1+psi3+psi4+psi5"},
          {"psi1+psi3", "psi4+psi5+psi6"},
          {"psi5+psi6", "psi1+psi3+psi4"}},
         {{"psi3", "psi4+psi5"},
          {"psi5", "psi3+psi4"}},
         {},
     },
     {{"layer 1 pair 1", "\\psi_1 + \\psi_2 + 2\\psi_2 + 3\\psi_4 + 2\\psi_5 + \\psi_6",
       "psi1+psi2+2psi3+3psi4+2psi5+psi6"},
      {"layer 2", "\\{\\psi_1, \\psi_3 + \\psi_4 + \\psi_5 + \\psi_6;\n          \\psi_6, \\psi_1 + \\psi_3 + \\psi_4 + \\psi_5\\}",
       "two pairs {psi1, psi3+psi4+psi5+psi6}, {psi6, psi1+psi3+psi4+psi5}; likewise the second group"}}},
    {"E7",
     {{"2psi1+2psi2+3psi3+4psi4+3psi5+2psi6+psi7"}, {"psi2+psi3+2psi4+2psi5+2psi6+psi7"}, {"psi7", "psi2+psi3+2psi4+psi5"}, {"psi2", "psi3", "psi5"}},
     {
         {{"psi1", "psi1+2psi2+3psi3+4psi4+3psi5+2psi6+psi7"},
          {"psi1+psi3", "psi1+2psi2+2psi3+4psi4+3psi5+2psi6+psi7"},
          {"psi1+psi3+psi4", "psi1+2psi2+2psi3+3psi4+3psi5+2psi6+psi7"},
          {"psi1+psi2+psi3+psi4", "psi1+psi2+2psi3+3psi4+3psi5+2psi6+psi7"},
          {"psi1+psi3+psi4+psi5", "psi1+2psi2+2psi3+3psi4+2psi5+2psi6+psi7"},
          {"psi1+psi2+psi3+psi4+psi5", "psi1+psi2+2psi3+3psi4+2psi5+2psi6+psi7"},
          {"psi1+psi3+psi4+psi5+psi6", "psi1+2psi2+2psi3+3psi4+2psi5+psi6+psi7"},
          {"psi1+psi2+psi3+2psi4+psi5", "psi1+psi2+2psi3+2psi4+2psi5+2psi6+psi7"},
          {"psi1+psi2+psi3+psi4+psi5+psi6", "psi1+psi2+2psi3+3psi4+2psi5+psi6+psi7"},
          {"psi1+psi3+psi4+psi5+psi6+psi7", "psi1+2psi2+2psi3+3psi4+2psi5+psi6"},
          {"psi1+psi2+2psi3+2psi4+psi5", "psi1+psi2+psi3+2psi4+2psi5+2psi6+psi7"},
          {"psi1+psi2+psi3+2psi4+psi5+psi6", "psi1+psi2+2psi3+2psi4+2psi5+psi6+psi7"},
          {"psi1+psi2+psi3+psi4+psi5+psi6+psi7", "psi1+psi2+2psi3+3psi4+2psi5+psi6"},
          {"psi1+psi2+2psi3+2psi4+psi5+psi6", "psi1+psi2+psi3+2psi4+2psi5+psi6+psi7"},
          {"psi1+psi2+psi3+2psi4+2psi5+psi6", "psi1+psi2+2psi3+2psi4+psi5+psi6+psi7"},
          {"psi1+psi2+psi3+2psi4+psi5+psi6+psi7", "psi1+psi2+2psi3+2psi4+2psi5+psi6"}},
         {{"psi6", "psi2+psi3+2psi4+2psi5+psi6+psi7"},
          {"psi5+psi6", "psi2+psi3+2psi4+psi5+psi6+psi7"},
          {"psi6+psi7", "psi2+psi3+2psi4+2psi5+psi6"},
          {"psi4+psi5+psi6", "psi2+psi3+psi4+psi5+psi6+psi7"},
          {"psi5+psi6+psi7", "psi2+psi3+2psi4+psi5+psi6"},
          {"psi2+psi4+psi5+psi6", "psi3+psi4+psi5+psi6+psi7"},
          {"psi3+psi4+psi5+psi6", "psi2+psi4+psi5+psi6+psi7"},
          {"psi4+psi5+psi6+psi7", "psi2+psi3+psi4+psi5+psi6"}},
         {},
         {{"psi4", "psi2+psi3+psi4+psi5"},
          {"psi2+psi4", "psi3+psi4+psi5"},
          {"psi3+psi4", "psi2+psi4+psi5"},
          {"psi4+psi5", "psi2+psi3+psi4"}},
         {},
         {},
         {},
     },
     {{"layer 2 pair 3", "\\{\\{psi_6 + \\psi_7,\n\t     \\psi_2 + \\psi_3 + 2\\psi_4 + 2\\psi_5 + \\psi_6;\\}",
       "{psi6+psi7, psi2+psi3+2psi4+2psi5+psi6}"},
      {"layer 2 pair 5", "\\psi_2 + \\psi_3 + 2\\psi_4 + \\psi_5 + \\psi_6;\\}", "psi2+psi3+2psi4+psi5+psi6"}}},
    {"E8",
     {{"2psi1+3psi2+4psi3+6psi4+5psi5+4psi6+3psi7+2psi8"}, {"2psi1+2psi2+3psi3+4psi4+3psi5+2psi6+psi7"}, {"psi2+psi3+2psi4+2psi5+2psi6+psi7"}, {"psi7", "psi2+psi3+2psi4+psi5"}, {"psi2", "psi3", "psi5"}},
     {
         {{"psi8", "2psi1+3psi2+4psi3+6psi4+5psi5+4psi6+3psi7+psi8"},
          {"psi7+psi8", "2psi1+3psi2+4psi3+6psi4+5psi5+4psi6+2psi7+psi8"},
          {"psi6+psi7+psi8", "2psi1+3psi2+4psi3+6psi4+5psi5+3psi6+2psi7+psi8"},
          {"psi5+psi6+psi7+psi8", "2psi1+3psi2+4psi3+6psi4+4psi5+3psi6+2psi7+psi8"},
          {"psi4+psi5+psi6+psi7+psi8", "2psi1+3psi2+4psi3+5psi4+4psi5+3psi6+2psi7+psi8"},
          {"psi2+psi4+psi5+psi6+psi7+psi8", "2psi1+2psi2+4psi3+5psi4+4psi5+3psi6+2psi7+psi8"},
          {"psi3+psi4+psi5+psi6+psi7+psi8", "2psi1+3psi2+3psi3+5psi4+4psi5+3psi6+2psi7+psi8"},
          {"psi1+psi3+psi4+psi5+psi6+psi7+psi8", "psi1+3psi2+3psi3+5psi4+4psi5+3psi6+2psi7+psi8"},
          {"psi2+psi3+psi4+psi5+psi6+psi7+psi8", "2psi1+2psi2+3psi3+5psi4+4psi5+3psi6+2psi7+psi8"},
          {"psi1+psi2+psi3+psi4+psi5+psi6+psi7+psi8", "psi1+2psi2+3psi3+5psi4+4psi5+3psi6+2psi7+psi8"},
          {"psi2+psi3+2psi4+psi5+psi6+psi7+psi8", "2psi1+2psi2+3psi3+4psi4+4psi5+3psi6+2psi7+psi8"},
          {"psi1+psi2+psi3+2psi4+psi5+psi6+psi7+psi8", "psi1+2psi2+3psi3+4psi4+4psi5+3psi6+2psi7+psi8"},
          {"psi2+psi3+2psi4+2psi5+psi6+psi7+psi8", "2psi1+2psi2+3psi3+4psi4+3psi5+3psi6+2psi7+psi8"},
          {"psi1+psi2+2psi3+2psi4+psi5+psi6+psi7+psi8", "psi1+2psi2+2psi3+4psi4+4psi5+3psi6+2psi7+psi8"},
          {"psi1+psi2+psi3+2psi4+2psi5+psi6+psi7+psi8", "psi1+2psi2+3psi3+4psi4+3psi5+3psi6+2psi7+psi8"},
          {"psi2+psi3+2psi4+2psi5+2psi6+psi7+psi8", "2psi1+2psi2+3psi3+4psi4+3psi5+2psi6+2psi7+psi8"},
          {"psi1+psi2+2psi3+2psi4+2psi5+psi6+psi7+psi8", "psi1+2psi2+2psi3+4psi4+3psi5+3psi6+2psi7+psi8"},
          {"psi1+psi2+psi3+2psi4+2psi5+2psi6+psi7+psi8", "psi1+2psi2+3psi3+4psi4+3psi5+2psi6+2psi7+psi8"},
          {"psi2+psi3+2psi4+2psi5+2psi6+2psi7+psi8", "2psi1+2psi2+3psi3+4psi4+3psi5+2psi6+psi7+psi8"},
          {"psi1+psi2+2psi3+3psi4+2psi5+psi6+psi7+psi8", "psi1+2psi2+2psi3+3psi4+3psi5+3psi6+2psi7+psi8"},
          {"psi1+psi2+2psi3+2psi4+2psi5+2psi6+psi7+psi8", "psi1+2psi2+2psi3+4psi4+3psi5+2psi6+2psi7+psi8"},
          {"psi1+psi2+psi3+2psi4+2psi5+2psi6+2psi7+psi8", "psi1+2psi2+3psi3+4psi4+3psi5+2psi6+psi7+psi8"},
          {"psi1+2psi2+2psi3+3psi4+2psi5+psi6+psi7+psi8", "psi1+psi2+2psi3+3psi4+3psi5+3psi6+2psi7+psi8"},
          {"psi1+psi2+2psi3+3psi4+2psi5+2psi6+psi7+psi8", "psi1+2psi2+2psi3+3psi4+3psi5+2psi6+2psi7+psi8"},
          {"psi1+psi2+2psi3+2psi4+2psi5+2psi6+2psi7+psi8", "psi1+2psi2+2psi3+4psi4+3psi5+2psi6+psi7+psi8"},
          {"psi1+2psi2+2psi3+3psi4+2psi5+2psi6+psi7+psi8", "psi1+psi2+2psi3+3psi4+3psi5+2psi6+2psi7+psi8"},
          {"psi1+psi2+2psi3+3psi4+3psi5+2psi6+psi7+psi8", "psi1+2psi2+2psi3+3psi4+2psi5+2psi6+2psi7+psi8"},
          {"psi1+psi2+2psi3+3psi4+2psi5+2psi6+2psi7+psi8", "psi1+2psi2+2psi3+3psi4+3psi5+2psi6+psi7+psi8"}},
         {{"psi1", "psi1+2psi2+3psi3+4psi4+3psi5+2psi6+psi7"},
          {"psi1+psi3", "psi1+2psi2+2psi3+4psi4+3psi5+2psi6+psi7"},
          {"psi1+psi3+psi4", "psi1+2psi2+2psi3+3psi4+3psi5+2psi6+psi7"},
          {"psi1+psi2+psi3+psi4", "psi1+psi2+2psi3+3psi4+3psi5+2psi6+psi7"},
          {"psi1+psi3+psi4+psi5", "psi1+2psi2+2psi3+3psi4+2psi5+2psi6+psi7"},
          {"psi1+psi2+psi3+psi4+psi5", "psi1+psi2+2psi3+3psi4+2psi5+2psi6+psi7"},
          {"psi1+psi3+psi4+psi5+psi6", "psi1+2psi2+2psi3+3psi4+2psi5+psi6+psi7"},
          {"psi1+psi2+psi3+2psi4+psi5", "psi1+psi2+2psi3+2psi4+2psi5+2psi6+psi7"},
          {"psi1+psi2+psi3+psi4+psi5+psi6", "psi1+psi2+2psi3+3psi4+2psi5+psi6+psi7"},
          {"psi1+psi3+psi4+psi5+psi6+psi7", "psi1+2psi2+2psi3+3psi4+2psi5+psi6"},
          {"psi1+psi2+2psi3+2psi4+psi5", "psi1+psi2+psi3+2psi4+2psi5+2psi6+psi7"},
          {"psi1+psi2+psi3+2psi4+psi5+psi6", "psi1+psi2+2psi3+2psi4+2psi5+psi6+psi7"},
          {"psi1+psi2+psi3+psi4+psi5+psi6+psi7", "psi1+psi2+2psi3+3psi4+2psi5+psi6"},
          {"psi1+psi2+2psi3+2psi4+psi5+psi6", "psi1+psi2+psi3+2psi4+2psi5+psi6+psi7"},
          {"psi1+psi2+psi3+2psi4+2psi5+psi6", "psi1+psi2+2psi3+2psi4+psi5+psi6+psi7"},
          {"psi1+psi2+psi3+2psi4+psi5+psi6+psi7", "psi1+psi2+2psi3+2psi4+2psi5+psi6"}},
         {{"psi6", "psi2+psi3+2psi4+2psi5+psi6+psi7"},
          {"psi5+psi6", "psi2+psi3+2psi4+psi5+psi6+psi7"},
          {"psi6+psi7", "psi2+psi3+2psi4+2psi5+psi6"},
          {"psi4+psi5+psi6", "psi2+psi3+psi4+psi5+psi6+psi7"},
          {"psi5+psi6+psi7", "psi2+psi3+2psi4+psi5+psi6"},
          {"psi2+psi4+psi5+psi6", "psi3+psi4+psi5+psi6+psi7"},
          {"psi3+psi4+psi5+psi6", "psi2+psi4+psi5+psi6+psi7"},
          {"psi4+psi5+psi6+psi7", "psi2+psi3+psi4+psi5+psi6"}},
         {},
         {{"psi4", "psi2+psi3+psi4+psi5"},
          {"psi2+psi4", "psi3+psi4+psi5"},
          {"psi3+psi4", "psi2+psi4+psi5"},
          {"psi4+psi5", "psi2+psi3+psi4"}},
         {},
         {},
         {},
     },
     {}},
};

Root span(int rank, int from, int to, int coeff = 1) {
  std::vector<int> c(rank, 0);
  for (int i = from; i <= to; ++i) c[i - 1] = coeff;
  return Root(std::move(c));
}

std::vector<std::string> names(const std::vector<Root>& roots) {
  std::vector<std::string> out;
  for (const Root& r : roots) out.push_back(r.to_string());
  return out;
}

std::string pair_key(const std::vector<Root>& pair) {
  std::vector<std::string> n = names(pair);
  std::sort(n.begin(), n.end());
  std::string out = "{";
  for (std::size_t i = 0; i < n.size(); ++i) out += (i ? ", " : "") + n[i];
  return out + "}";
}

std::vector<Root> parse_pair(const std::vector<std::string>& p, std::size_t rank) {
  std::vector<Root> out;
  for (const auto& s : p) out.push_back(parse_root(s, rank));
  return out;
}

std::string corrections_for(const GoldenFixture& fx, const std::string& prefix) {
  std::string out;
  for (const auto& c : fx.corrections) {
    const bool next_is_digit = c.where.size() > prefix.size() &&
                               std::isdigit(static_cast<unsigned char>(c.where[prefix.size()]));
    if (c.where.rfind(prefix, 0) == 0 && !next_is_digit) {
      out += " [correction " + c.where + ": printed \"" + c.verbatim + "\", using " + c.corrected + "]";
    }
  }
  return out;
}

}  // namespace

const std::vector<GoldenFixture>& exceptional_fixtures() { return kExceptional; }

GoldenFixture classical_fixture(RootType type, int n) {
  build_root_system(type, n);  // validates (type, n)
  GoldenFixture fx;
  fx.label = to_string(type) + std::to_string(n);
  std::vector<std::vector<Root>> gens;
  switch (type) {
    case RootType::A: {
      const int l = n + 1;
      fx.has_layers = true;
      for (int r = 1; r <= l / 2; ++r) {
        gens.push_back({span(n, r, l - r)});
        std::vector<std::vector<std::string>> pairs;
        for (int s = r; s < l - r; ++s) {
          pairs.push_back({span(n, r, s).to_string(), span(n, s + 1, l - r).to_string()});
        }
        fx.layers.push_back(std::move(pairs));
      }
      break;
    }
    case RootType::B: {
      fx.has_layers = false;
      gens.push_back({span(n, 1, 1) + span(n, 2, n, 2)});
      for (int r = 2; r <= n; r += 2) {
        std::vector<Root> g = {span(n, r - 1, r - 1)};
        if (r + 1 <= n) g.push_back(span(n, r + 1, r + 1) + span(n, r + 2, n, 2));
        gens.push_back(g);
      }
      break;
    }
    case RootType::C: {
      fx.has_layers = false;
      for (int r = 1; r <= n; ++r) gens.push_back({span(n, r, n - 1, 2) + span(n, n, n)});
      break;
    }
    case RootType::D: {
      fx.has_layers = false;
      auto odd = [n](int r) { return span(n, r, r) + span(n, r + 1, n - 2, 2) + span(n, n - 1, n); };
      gens.push_back({odd(1)});
      for (int r = 1;; r += 2) {
        const int k = n - r + 1;  // current D_k sits on psi_r..psi_n
        std::vector<Root> g = {span(n, r, r)};
        if (k - 2 >= 3) {
          g.push_back(odd(r + 2));
          gens.push_back(g);
          continue;
        }
        if (k - 2 == 2) {
          g.push_back(span(n, n - 1, n - 1));
          g.push_back(span(n, n, n));
        }
        gens.push_back(g);
        break;
      }
      break;
    }
    default:
      throw std::invalid_argument("classical_fixture: " + to_string(type) + " is not classical");
  }
  for (const auto& g : gens) fx.generations.push_back(names(g));
  if (type == RootType::C) {
    fx.corrections.push_back({"beta_1", "2(\\psi_1 + \\dots \\psi_{n-1} + \\psi_n",
                              "2(psi1+...+psi{n-1})+psi_n"});
  }
  return fx;
}

std::optional<GoldenFixture> find_fixture(const std::string& label) {
  for (const auto& fx : kExceptional) {
    if (fx.label == label) return fx;
  }
  try {
    const RootSystem sys = build_root_system(label);
    if (sys.type == RootType::A || sys.type == RootType::B || sys.type == RootType::C ||
        sys.type == RootType::D) {
      return classical_fixture(sys.type, sys.rank);
    }
  } catch (const std::invalid_argument&) {
  }
  return std::nullopt;
}

VerificationReport validate_fixture(const RootSystem& sys, const GoldenFixture& fx) {
  VerificationReport report;
  report.subject = fx.label + " fixture";
  const std::size_t rank = sys.rank;
  std::vector<Root> betas;
  for (const auto& g : fx.generations) {
    for (const auto& b : g) betas.push_back(parse_root(b, rank));
  }
  {
    bool ok = true;
    std::string detail;
    for (const Root& b : betas) {
      if (ok && !is_positive_root(sys, b)) {
        ok = false;
        detail = b.to_string() + " is not a positive root";
      }
    }
    report.add("fixture betas are positive roots", ok, detail);
  }
  if (!fx.has_layers) return report;

  bool sums = fx.layers.size() == betas.size();
  std::string sums_detail = sums ? "" : "layer count differs from beta count";
  std::map<Root, int> seen;
  for (const Root& b : betas) ++seen[b];
  for (std::size_t r = 0; r < fx.layers.size() && r < betas.size(); ++r) {
    for (const auto& p : fx.layers[r]) {
      const std::vector<Root> roots = parse_pair(p, rank);
      Root total = Root::zero(rank);
      for (const Root& a : roots) {
        total = total + a;
        ++seen[a];
      }
      if (roots.size() == 1) total = total * 2;
      if (sums && total != betas[r]) {
        sums = false;
        sums_detail = "layer " + std::to_string(r + 1) + ": " + pair_key(roots) +
                      " does not sum to " + betas[r].to_string() +
                      corrections_for(fx, "layer " + std::to_string(r + 1));
      }
    }
  }
  report.add("fixture pairs sum to their beta", sums, sums_detail);

  bool part = true;
  std::string part_detail;
  for (const Root& a : sys.positive_roots) {
    const int c = seen.count(a) ? seen[a] : 0;
    if (part && c != 1) {
      part = false;
      part_detail = a.to_string() + " appears " + std::to_string(c) + " times";
    }
  }
  for (const auto& [a, c] : seen) {
    if (part && !is_positive_root(sys, a)) {
      part = false;
      part_detail = a.to_string() + " is not a positive root";
    }
  }
  report.add("fixture partitions the positive roots", part, part_detail);
  return report;
}

VerificationReport compare_with_fixture(const RootSystem& sys, const GoldenFixture& fx) {
  VerificationReport report;
  report.subject = fx.label;
  const std::size_t rank = sys.rank;
  const Cascade cascade = kostant_cascade(sys);
  const LayerDecomposition layers = compute_layers(sys, cascade);

  // One check per generation and per layer; every difference is listed.
  auto diff = [](const std::set<std::string>& want, const std::set<std::string>& got) {
    std::string out;
    for (const auto& k : want)
      if (!got.count(k)) out += (out.empty() ? "" : "; ") + ("missing " + k);
    for (const auto& k : got)
      if (!want.count(k)) out += (out.empty() ? "" : "; ") + ("extra " + k);
    return out;
  };

  report.add("generation count", cascade.generations.size() == fx.generations.size(),
             std::to_string(cascade.generations.size()) + " vs " +
                 std::to_string(fx.generations.size()));
  for (std::size_t g = 0; g < fx.generations.size(); ++g) {
    std::set<std::string> want, got;
    for (const auto& b : fx.generations[g]) want.insert(parse_root(b, rank).to_string());
    if (g < cascade.generations.size())
      for (int i : cascade.generations[g]) got.insert(cascade.betas[i].to_string());
    std::string detail = diff(want, got);
    const bool ok = detail.empty();
    if (!ok) detail = "generation " + std::to_string(g + 1) + ": " + detail + corrections_for(fx, "beta");
    report.add("generation " + std::to_string(g + 1), ok, detail);
  }

  if (fx.has_layers) {
    std::map<Root, std::size_t> layer_of;
    for (std::size_t i = 0; i < cascade.betas.size(); ++i) layer_of[cascade.betas[i]] = i;
    std::vector<Root> fx_betas;
    for (const auto& g : fx.generations) {
      for (const auto& b : g) fx_betas.push_back(parse_root(b, rank));
    }
    report.add("layer count", fx.layers.size() == fx_betas.size(),
               std::to_string(fx.layers.size()) + " pair lists for " +
                   std::to_string(fx_betas.size()) + " betas");
    for (std::size_t r = 0; r < fx.layers.size() && r < fx_betas.size(); ++r) {
      const std::string where = "layer " + std::to_string(r + 1);
      std::set<std::string> want, got;
      for (const auto& p : fx.layers[r]) want.insert(pair_key(parse_pair(p, rank)));
      auto it = layer_of.find(fx_betas[r]);
      if (it != layer_of.end()) {
        for (const LayerPair& p : layers.pairs[it->second]) {
          std::vector<Root> v = {p.first};
          if (p.second) v.push_back(*p.second);
          got.insert(pair_key(v));
        }
      }
      std::string detail = it == layer_of.end()
                               ? "beta " + fx_betas[r].to_string() + " not in computed cascade"
                               : diff(want, got);
      const bool ok = detail.empty();
      if (!ok) detail = where + ": " + detail + corrections_for(fx, where);
      report.add(where + " pairs", ok, detail);
    }
  }

  std::size_t total = cascade.betas.size();
  for (const auto& l : layers.layers) total += l.size();
  report.add("sum |layer| + m = |positive roots|", total == sys.positive_roots.size(),
             std::to_string(total) + " vs " + std::to_string(sys.positive_roots.size()));
  return report;
}

}  // namespace nilcascade
