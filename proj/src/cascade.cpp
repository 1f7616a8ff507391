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


#include "nilcascade/cascade.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nilcascade {

namespace {

bool before(const Root& a, const Root& b, TieBreak tie) {
  switch (tie) {
    case TieBreak::DescendingReverseLex: {
      const auto& ca = a.coeffs();
      const auto& cb = b.coeffs();
      return std::lexicographical_compare(cb.rbegin(), cb.rend(), ca.rbegin(), ca.rend());
    }
    case TieBreak::AscendingLex:
      return a.coeffs() < b.coeffs();
    case TieBreak::DescendingHeight:
      return b < a;
  }
  return false;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

bool orthogonal_to_all(const RootSystem& sys, const Root& a, const std::vector<Root>& betas,
                       std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (bilinear(sys, a, betas[i]) != 0) return false;
  }
  return true;
}

std::string join(const std::vector<Root>& roots) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < roots.size(); ++i) out << (i ? ", " : "") << roots[i].to_string();
  out << "}";
  return out.str();
}

}  // namespace

Cascade kostant_cascade(const RootSystem& sys, TieBreak tie) {
  Cascade out;
  while (true) {
    std::vector<Root> candidates;
    for (const Root& a : sys.positive_roots) {
      if (orthogonal_to_all(sys, a, out.betas, out.betas.size())) candidates.push_back(a);
    }
    if (candidates.empty()) break;

    // Irreducible components: connect roots with nonzero inner product.
    std::vector<std::size_t> parent(candidates.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (bilinear(sys, candidates[i], candidates[j]) != 0) {
          parent[find_root(parent, i)] = find_root(parent, j);
        }
      }
    }
    std::map<std::size_t, std::vector<Root>> components;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      components[find_root(parent, i)].push_back(candidates[i]);
    }

    std::vector<Root> generation;
    for (auto& [key, comp] : components) {
      const Root top = *std::max_element(comp.begin(), comp.end());
      for (const Root& a : comp) {
        if (!a.dominated_by(top)) {
          throw std::logic_error("cascade: component of " + top.to_string() +
                                 " has no unique maximum (" + a.to_string() + ")");
        }
      }
      if (!is_nonmultipliable(sys, top)) {
        throw std::logic_error("cascade: maximal root " + top.to_string() + " is multipliable");
      }
      generation.push_back(top);
    }
    std::sort(generation.begin(), generation.end(),
              [tie](const Root& a, const Root& b) { return before(a, b, tie); });

    std::vector<int> indices;
    for (const Root& b : generation) {
      indices.push_back(static_cast<int>(out.betas.size()));
      out.betas.push_back(b);
    }
    out.generations.push_back(std::move(indices));
  }
  return out;
}

std::vector<Root> layer_by_orthogonality(const RootSystem& sys, const Cascade& cascade,
                                         std::size_t r) {
  const Root& beta = cascade.betas.at(r);
  std::vector<Root> out;
  for (const Root& a : sys.positive_roots) {
    if (a == beta) continue;
    if (!orthogonal_to_all(sys, a, cascade.betas, r)) continue;
    if (bilinear(sys, a, beta) > 0) out.push_back(a);
  }
  return out;
}

LayerDecomposition compute_layers(const RootSystem& sys, const Cascade& cascade) {
  LayerDecomposition out;
  std::set<Root> assigned;
  for (std::size_t r = 0; r < cascade.betas.size(); ++r) {
    const Root& beta = cascade.betas[r];
    std::vector<Root> layer;
    for (const Root& a : sys.positive_roots) {
      if (assigned.count(a)) continue;
      if (is_positive_root(sys, beta - a)) layer.push_back(a);
    }
    for (const Root& a : layer) assigned.insert(a);

    const std::vector<Root> check = layer_by_orthogonality(sys, cascade, r);
    if (check != layer) {
      throw std::logic_error("compute_layers: layer " + std::to_string(r + 1) + " of " +
                             sys.label() + " is " + join(layer) +
                             " by subtraction but " + join(check) + " by orthogonality");
    }

    std::vector<LayerPair> pairs;
    for (const Root& a : layer) {
      const Root partner = beta - a;
      if (partner == a) {
        pairs.push_back({a, std::nullopt});
      } else if (a.coeffs() < partner.coeffs()) {
        pairs.push_back({a, partner});
      }
    }
    out.layers.push_back(std::move(layer));
    out.pairs.push_back(std::move(pairs));
  }
  return out;
}

Root sigma(const RootSystem& sys, const Cascade& cascade, std::size_t r, const Root& alpha) {
  if (r >= cascade.betas.size()) {
    throw std::invalid_argument("sigma: layer index out of range");
  }
  const std::vector<Root> layer = layer_by_orthogonality(sys, cascade, r);
  if (!std::binary_search(layer.begin(), layer.end(), alpha)) {
    throw std::invalid_argument("sigma: " + alpha.to_string() + " is not in layer " +
                                std::to_string(r + 1));
  }
  return -reflect(sys, cascade.betas[r], alpha);
}

VerificationReport verify_layer_lemmas(const RootSystem& sys, const Cascade& cascade,
                                       const LayerDecomposition& layers) {
  VerificationReport report;
  report.subject = sys.label();
  const std::size_t m = cascade.betas.size();

  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < m && ok; ++i) {
      for (std::size_t j = i + 1; j < m && ok; ++j) {
        if (!strongly_orthogonal(sys, cascade.betas[i], cascade.betas[j])) {
          ok = false;
          detail = cascade.betas[i].to_string() + " vs " + cascade.betas[j].to_string();
        }
      }
    }
    for (const Root& a : sys.positive_roots) {
      if (ok && orthogonal_to_all(sys, a, cascade.betas, m)) {
        ok = false;
        detail = a.to_string() + " is orthogonal to every beta";
      }
    }
    report.add("cascade strongly orthogonal and maximal", ok, detail);
  }

  // (a) fill-out: a partition of the non-beta positive roots, with each root
  // placed in a layer whose beta it subtracts from.
  {
    bool ok = layers.layers.size() == m;
    std::string detail = ok ? "" : "layer count differs from beta count";
    std::map<Root, int> count;
    for (std::size_t r = 0; r < layers.layers.size() && r < m; ++r) {
      for (const Root& a : layers.layers[r]) {
        ++count[a];
        if (ok && !is_positive_root(sys, cascade.betas[r] - a)) {
          ok = false;
          detail = a.to_string() + " placed in layer " + std::to_string(r + 1) +
                   " but beta - alpha is not a positive root";
        }
      }
    }
    std::set<Root> betas(cascade.betas.begin(), cascade.betas.end());
    for (const Root& a : sys.positive_roots) {
      if (!ok) break;
      const int c = count.count(a) ? count[a] : 0;
      const int expected = betas.count(a) ? 0 : 1;
      if (c != expected) {
        ok = false;
        detail = a.to_string() + " occurs in " + std::to_string(c) + " layers";
      }
    }
    report.add("(a) fill-out partition", ok, detail);
  }

  // (b) subtraction rule agrees with the orthogonality characterization.
  {
    bool ok = layers.layers.size() == m;
    std::string detail;
    for (std::size_t r = 0; r < m && ok; ++r) {
      std::vector<Root> given = layers.layers[r];
      std::sort(given.begin(), given.end());
      if (given != layer_by_orthogonality(sys, cascade, r)) {
        ok = false;
        detail = "layer " + std::to_string(r + 1) + " differs";
      }
    }
    report.add("(b) orthogonality characterization", ok, detail);
  }

  // (c) inside a layer, any root sum is beta_r; sigma_r pairs alpha with beta_r - alpha.
  {
    bool ok = true;
    std::string detail;
    for (std::size_t r = 0; r < m && r < layers.layers.size() && ok; ++r) {
      const auto& layer = layers.layers[r];
      const Root& beta = cascade.betas[r];
      for (const Root& a : layer) {
        const Root s = -reflect(sys, beta, a);
        if (a + s != beta || !std::count(layer.begin(), layer.end(), s)) {
          ok = false;
          detail = "sigma fails at " + a.to_string();
          break;
        }
        if (-reflect(sys, beta, s) != a) {
          ok = false;
          detail = "sigma is not an involution at " + a.to_string();
          break;
        }
        for (const Root& b : layer) {
          if (is_root(sys, a + b) && a + b != beta) {
            ok = false;
            detail = a.to_string() + " + " + b.to_string() + " is a root other than beta";
            break;
          }
        }
        if (!ok) break;
      }
    }
    report.add("(c) layer sums equal beta_r", ok, detail);
  }

  // (d) [m_r, z_s] = 0 for r > s.
  {
    bool ok = true;
    std::string detail;
    for (std::size_t r = 0; r < m && ok; ++r) {
      std::vector<Root> span = r < layers.layers.size() ? layers.layers[r] : std::vector<Root>{};
      span.push_back(cascade.betas[r]);
      for (std::size_t s = 0; s < r && ok; ++s) {
        for (const Root& a : span) {
          if (is_root(sys, a + cascade.betas[s])) {
            ok = false;
            detail = a.to_string() + " + beta_" + std::to_string(s + 1) + " is a root";
            break;
          }
        }
      }
    }
    report.add("(d) [m_r, z_s] = 0 for r > s", ok, detail);
  }

  // (e) sums across different layers never land on a beta.
  {
    std::set<Root> betas(cascade.betas.begin(), cascade.betas.end());
    bool ok = true;
    std::string detail;
    for (std::size_t r = 0; r < layers.layers.size() && ok; ++r) {
      for (std::size_t s = r + 1; s < layers.layers.size() && ok; ++s) {
        for (const Root& a : layers.layers[r]) {
          for (const Root& b : layers.layers[s]) {
            if (betas.count(a + b)) {
              ok = false;
              detail = a.to_string() + " + " + b.to_string() + " is a beta";
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    report.add("(e) [m_r, m_s] in v for r != s", ok, detail);
  }
  return report;
}

}  // namespace nilcascade
