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


#include "nilcascade/chevalley.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace nilcascade {

namespace {

// Height first, then the coefficient vectors read from the last simple root,
// so psi_1 precedes psi_2 precedes ...
bool precedes(const Root& a, const Root& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

}  // namespace

ConstantsTable::ConstantsTable(const RootSystem& sys) : sys_(sys) {
  if (!sys.is_reduced()) {
    throw std::invalid_argument("chevalley_constants: " + sys.label() + " is not reduced");
  }
  const auto& pos = sys.positive_roots;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = 0; j < pos.size(); ++j) {
      if (!is_root(sys, pos[i] + pos[j])) continue;
      positive_.emplace(std::make_pair(i, j), (*this)(pos[i], pos[j]));
    }
  }
}

std::pair<Root, Root> ConstantsTable::extraspecial(const Root& gamma) const {
  std::optional<Root> best;
  for (const Root& a : sys_.positive_roots) {
    if (a.height() >= gamma.height()) break;
    if (!is_positive_root(sys_, gamma - a)) continue;
    if (!best || precedes(a, *best)) best = a;
  }
  if (best) return {*best, gamma - *best};
  throw std::invalid_argument("extraspecial: " + gamma.to_string() + " is simple or not a root");
}

int ConstantsTable::operator()(const Root& a, const Root& b) const {
  const Rational n = compute(a, b);
  if (!is_integer(n)) {
    throw std::logic_error("Chevalley constant N(" + a.to_string() + ", " + b.to_string() +
                           ") is not an integer");
  }
  return static_cast<int>(boost::multiprecision::numerator(n));
}

Rational ConstantsTable::compute(const Root& a, const Root& b) const {
  const Root sum = a + b;
  if (sum.is_zero() || !is_root(sys_, sum)) return 0;
  const auto key = std::make_pair(a, b);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Rational value;
  if (a.is_positive() && b.is_positive()) {
    if (precedes(b, a)) {
      value = -compute(b, a);
    } else {
      const auto [alpha, beta] = extraspecial(sum);
      const Rational n_ab = string_down(sys_, alpha, beta) + 1;
      if (a == alpha) {
        value = n_ab;
      } else {
        // Quadruple relation on (a, b, -alpha, -beta), using N_{-x,-y} = -N_{x,y}.
        Rational rhs = 0;
        const Root b_m_alpha = b - alpha;
        if (!b_m_alpha.is_zero() && is_root(sys_, b_m_alpha)) {
          rhs += compute(b, -alpha) * compute(a, -beta) / norm(b_m_alpha);
        }
        const Root a_m_alpha = a - alpha;
        if (!a_m_alpha.is_zero() && is_root(sys_, a_m_alpha)) {
          rhs += compute(-alpha, a) * compute(b, -beta) / norm(a_m_alpha);
        }
        value = norm(sum) * rhs / n_ab;
      }
    }
  } else if (a.is_negative() && b.is_negative()) {
    value = -compute(-a, -b);
  } else if (a.is_negative()) {
    value = -compute(b, a);
  } else {
    // a positive, b negative; triple relation on (a, b, -sum).
    if (sum.is_positive()) {
      value = -norm(sum) / norm(a) * compute(-b, sum);
    } else {
      value = norm(sum) / norm(b) * compute(-sum, a);
    }
  }
  memo_.emplace(key, value);
  return value;
}

ConstantsTable chevalley_constants(const RootSystem& sys) { return ConstantsTable(sys); }

}  // namespace nilcascade
