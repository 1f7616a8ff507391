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


#include "nilcascade/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nilcascade {

// ---------------------------------------------------------------- Root

Root Root::simple(std::size_t rank, std::size_t index) {
  std::vector<int> c(rank, 0);
  c.at(index) = 1;
  return Root(std::move(c));
}

int Root::height() const {
  int h = 0;
  for (int c : coeffs_) h += c;
  return h;
}

bool Root::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c <= 0; });
}

bool Root::dominated_by(const Root& other) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] > other.coeffs_[i]) return false;
  }
  return true;
}

Root Root::operator+(const Root& other) const {
  if (rank() != other.rank()) throw std::invalid_argument("root rank mismatch");
  std::vector<int> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coeffs_[i];
  return Root(std::move(c));
}

Root Root::operator-(const Root& other) const {
  if (rank() != other.rank()) throw std::invalid_argument("root rank mismatch");
  std::vector<int> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coeffs_[i];
  return Root(std::move(c));
}

Root Root::operator-() const { return *this * -1; }

Root Root::operator*(int k) const {
  std::vector<int> c(coeffs_);
  for (int& x : c) x *= k;
  return Root(std::move(c));
}

std::strong_ordering operator<=>(const Root& a, const Root& b) {
  if (auto cmp = a.height() <=> b.height(); cmp != 0) return cmp;
  return a.coeffs_ <=> b.coeffs_;
}

std::string Root::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    if (c != 1 && c != -1) out << (c < 0 ? -c : c);
    out << "psi" << (i + 1);
    first = false;
  }
  if (first) return "0";
  return out.str();
}

Root parse_root(std::string_view text, std::size_t rank) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty root expression");
  std::vector<int> coeffs(rank, 0);
  if (s.front() == '[' || s.front() == '(') {
    std::size_t pos = 1;
    std::size_t idx = 0;
    while (pos < s.size() && s[pos] != ']' && s[pos] != ')') {
      std::size_t used = 0;
      const int v = std::stoi(s.substr(pos), &used);
      if (idx >= rank) throw std::invalid_argument("too many coordinates in '" + s + "'");
      coeffs[idx++] = v;
      pos += used;
      if (pos < s.size() && s[pos] == ',') ++pos;
    }
    if (idx != rank) throw std::invalid_argument("wrong number of coordinates in '" + s + "'");
    return Root(std::move(coeffs));
  }
  if (s == "0") return Root(std::move(coeffs));
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    int mult = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t used = 0;
      mult = std::stoi(s.substr(pos), &used);
      pos += used;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (s.compare(pos, 3, "psi") != 0) {
      throw std::invalid_argument("malformed root expression '" + s + "'");
    }
    pos += 3;
    if (pos < s.size() && s[pos] == '_') ++pos;
    std::size_t used = 0;
    const int label = std::stoi(s.substr(pos), &used);
    pos += used;
    if (label < 1 || static_cast<std::size_t>(label) > rank) {
      throw std::invalid_argument("simple root label out of range in '" + s + "'");
    }
    coeffs[label - 1] += sign * mult;
  }
  return Root(std::move(coeffs));
}

// ---------------------------------------------------------------- types

std::string to_string(RootType type) {
  switch (type) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::E: return "E";
    case RootType::F: return "F";
    case RootType::G: return "G";
    case RootType::BC: return "BC";
  }
  return "?";
}

RootType parse_root_type(std::string_view text) {
  std::string letters;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) break;
    letters.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  if (letters == "A") return RootType::A;
  if (letters == "B") return RootType::B;
  if (letters == "C") return RootType::C;
  if (letters == "D") return RootType::D;
  if (letters == "E") return RootType::E;
  if (letters == "F") return RootType::F;
  if (letters == "G") return RootType::G;
  if (letters == "BC") return RootType::BC;
  throw std::invalid_argument("unknown root system type '" + std::string(text) + "'");
}

std::string RootSystem::label() const { return to_string(type) + std::to_string(rank); }

std::optional<std::size_t> RootSystem::index_of(const Root& positive) const {
  auto it = positive_index.find(positive);
  if (it == positive_index.end()) return std::nullopt;
  return it->second;
}

namespace {

void check_type_rank(RootType type, int rank) {
  bool ok = false;
  switch (type) {
    case RootType::A: ok = rank >= 1; break;
    case RootType::B:
    case RootType::C: ok = rank >= 2; break;
    case RootType::D: ok = rank >= 4; break;
    case RootType::E: ok = rank >= 6 && rank <= 8; break;
    case RootType::F: ok = rank == 4; break;
    case RootType::G: ok = rank == 2; break;
    case RootType::BC: ok = rank >= 1; break;
  }
  if (ok) return;
  std::string why;
  switch (type) {
    case RootType::A: why = "A needs rank >= 1"; break;
    case RootType::B: why = "B needs rank >= 2"; break;
    case RootType::C: why = "C needs rank >= 2"; break;
    case RootType::D: why = "D needs rank >= 4 (D3 is A3, D2 is reducible)"; break;
    case RootType::E: why = "E exists only for rank 6, 7, 8"; break;
    case RootType::F: why = "F exists only for rank 4"; break;
    case RootType::G: why = "G exists only for rank 2"; break;
    case RootType::BC: why = "BC needs rank >= 1"; break;
  }
  throw std::invalid_argument("invalid root system " + to_string(type) + std::to_string(rank) +
                              ": " + why);
}

void link(RationalMatrix& g, int i, int j, const Rational& value) {
  g(i, j) = value;
  g(j, i) = value;
}

RationalMatrix make_gram(RootType type, int n) {
  RationalMatrix g = RationalMatrix::Zero(n, n);
  switch (type) {
    case RootType::A:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) link(g, i, i + 1, -1);
      break;
    case RootType::B:
    case RootType::BC:
      for (int i = 0; i + 1 < n; ++i) g(i, i) = 2;
      g(n - 1, n - 1) = 1;
      for (int i = 0; i + 1 < n; ++i) link(g, i, i + 1, -1);
      if (type == RootType::BC) g /= Rational(2);  // 2e_i is the longest root
      break;
    case RootType::C:
      for (int i = 0; i + 1 < n; ++i) g(i, i) = 1;
      g(n - 1, n - 1) = 2;
      for (int i = 0; i + 2 < n; ++i) link(g, i, i + 1, Rational(-1, 2));
      link(g, n - 2, n - 1, -1);
      break;
    case RootType::D:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) link(g, i, i + 1, -1);
      link(g, n - 3, n - 1, -1);
      break;
    case RootType::E:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      link(g, 0, 2, -1);
      link(g, 1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(g, i, i + 1, -1);
      break;
    case RootType::F:
      g(0, 0) = 2;
      g(1, 1) = 2;
      g(2, 2) = 1;
      g(3, 3) = 1;
      link(g, 0, 1, -1);
      link(g, 1, 2, -1);
      link(g, 2, 3, Rational(-1, 2));
      break;
    case RootType::G:
      g(0, 0) = Rational(2, 3);
      g(1, 1) = 2;
      link(g, 0, 1, -1);
      break;
  }
  return g;
}

}  // namespace

std::size_t classical_positive_count(RootType type, int n) {
  check_type_rank(type, n);
  const auto r = static_cast<std::size_t>(n);
  switch (type) {
    case RootType::A: return r * (r + 1) / 2;
    case RootType::B:
    case RootType::C: return r * r;
    case RootType::D: return r * (r - 1);
    case RootType::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case RootType::F: return 24;
    case RootType::G: return 6;
    case RootType::BC: return r * r + r;
  }
  return 0;
}

RootSystem build_root_system(RootType type, int rank) {
  check_type_rank(type, rank);
  RootSystem sys;
  sys.type = type;
  sys.rank = rank;
  sys.gram = make_gram(type, rank);
  sys.cartan.resize(rank, rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      const Rational c = Rational(2) * sys.gram(i, j) / sys.gram(j, j);
      sys.cartan(i, j) = static_cast<int>(boost::multiprecision::numerator(c));
    }
  }
  const auto n = static_cast<std::size_t>(rank);
  for (std::size_t i = 0; i < n; ++i) sys.simple_roots.push_back(Root::simple(n, i));

  // Root-string closure: alpha + psi_i is a root iff p - <alpha, psi_i^vee> > 0.
  std::map<Root, std::size_t> known;
  std::vector<Root> level = sys.simple_roots;
  for (const Root& r : level) known.emplace(r, 0);
  while (!level.empty()) {
    std::vector<Root> next;
    for (const Root& alpha : level) {
      for (std::size_t i = 0; i < n; ++i) {
        const Root& psi = sys.simple_roots[i];
        int p = 0;
        while (known.count(alpha - psi * (p + 1))) ++p;
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += alpha[j] * sys.cartan(j, i);
        if (p - pairing > 0) {
          const Root sum = alpha + psi;
          if (known.emplace(sum, 0).second) next.push_back(sum);
        }
      }
    }
    level = std::move(next);
  }
  if (type == RootType::BC) {
    // Short roots e_i have <a,a> = 1/2; their doubles complete the system.
    std::vector<Root> doubles;
    for (const auto& [root, unused] : known) {
      if (bilinear(sys, root, root) == Rational(1, 2)) doubles.push_back(root * 2);
    }
    for (const Root& d : doubles) known.emplace(d, 0);
  }
  for (const auto& [root, unused] : known) sys.positive_roots.push_back(root);
  std::sort(sys.positive_roots.begin(), sys.positive_roots.end());
  for (std::size_t k = 0; k < sys.positive_roots.size(); ++k) {
    sys.positive_index.emplace(sys.positive_roots[k], k);
  }
  return sys;
}

RootSystem build_root_system(std::string_view label) {
  const RootType type = parse_root_type(label);
  std::size_t pos = 0;
  while (pos < label.size() && !std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
  if (pos == label.size()) {
    if (type == RootType::F) return build_root_system(type, 4);
    if (type == RootType::G) return build_root_system(type, 2);
    throw std::invalid_argument("root system label '" + std::string(label) + "' needs a rank");
  }
  return build_root_system(type, std::stoi(std::string(label.substr(pos))));
}

// ---------------------------------------------------------------- queries

Rational bilinear(const RootSystem& sys, const Root& a, const Root& b) {
  const auto n = static_cast<std::size_t>(sys.rank);
  if (a.rank() != n || b.rank() != n) {
    throw std::invalid_argument("bilinear: vector rank does not match " + sys.label());
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0 || sys.gram(i, j) == 0) continue;
      sum += sys.gram(i, j) * a[i] * b[j];
    }
  }
  return sum;
}

bool is_positive_root(const RootSystem& sys, const Root& v) {
  return v.rank() == static_cast<std::size_t>(sys.rank) && sys.positive_index.count(v) > 0;
}

bool is_root(const RootSystem& sys, const Root& v) {
  if (v.rank() != static_cast<std::size_t>(sys.rank)) return false;
  if (v.is_positive()) return sys.positive_index.count(v) > 0;
  if (v.is_negative()) return sys.positive_index.count(-v) > 0;
  return false;
}

bool is_nonmultipliable(const RootSystem& sys, const Root& a) {
  return is_root(sys, a) && !is_root(sys, a * 2);
}

Root reflect(const RootSystem& sys, const Root& beta, const Root& alpha) {
  if (!is_root(sys, beta)) {
    throw std::invalid_argument("reflect: " + beta.to_string() + " is not a root of " +
                                sys.label());
  }
  const Rational k = Rational(2) * bilinear(sys, alpha, beta) / bilinear(sys, beta, beta);
  if (!is_integer(k)) {
    throw std::logic_error("reflect: non-integral Cartan integer, corrupt root system");
  }
  return alpha - beta * static_cast<int>(boost::multiprecision::numerator(k));
}

bool strongly_orthogonal(const RootSystem& sys, const Root& a, const Root& b) {
  return !is_root(sys, a + b) && !is_root(sys, a - b);
}

int string_down(const RootSystem& sys, const Root& alpha, const Root& beta) {
  int p = 0;
  while (is_root(sys, beta - alpha * (p + 1))) ++p;
  return p;
}

// ---------------------------------------------------------------- restriction

Root RestrictedSystem::restrict_root(const Root& ambient) const {
  std::vector<int> c;
  c.reserve(surviving_labels.size());
  for (int label : surviving_labels) c.push_back(ambient[static_cast<std::size_t>(label - 1)]);
  return Root(std::move(c));
}

RestrictedSystem restrict_roots(const RootSystem& sys, std::vector<int> zero_labels) {
  std::sort(zero_labels.begin(), zero_labels.end());
  zero_labels.erase(std::unique(zero_labels.begin(), zero_labels.end()), zero_labels.end());
  for (int label : zero_labels) {
    if (label < 1 || label > sys.rank) {
      throw std::invalid_argument("restrict: label " + std::to_string(label) +
                                  " out of range for " + sys.label());
    }
  }
  if (static_cast<int>(zero_labels.size()) == sys.rank) {
    throw std::invalid_argument("restrict: zero set covers every simple root of " + sys.label());
  }
  RestrictedSystem out;
  out.ambient_type = sys.type;
  out.ambient_rank = sys.rank;
  out.zero_labels = zero_labels;
  for (int label = 1; label <= sys.rank; ++label) {
    if (!std::binary_search(zero_labels.begin(), zero_labels.end(), label)) {
      out.surviving_labels.push_back(label);
    }
  }
  for (const Root& alpha : sys.positive_roots) {
    Root r = out.restrict_root(alpha);
    if (r.is_zero()) {
      out.zero_fiber.push_back(alpha);
    } else {
      out.fibers[r].push_back(alpha);
    }
  }
  for (const auto& [r, fiber] : out.fibers) out.restricted_positive.push_back(r);
  std::sort(out.restricted_positive.begin(), out.restricted_positive.end());
  return out;
}

}  // namespace nilcascade
