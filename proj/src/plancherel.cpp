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


#include "nilcascade/plancherel.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>
#include <unordered_map>

namespace nilcascade {

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rational& c) {
  Polynomial p(std::move(vars));
  p.add_term(std::vector<int>(p.vars_.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, std::size_t i) {
  Polynomial p(std::move(vars));
  std::vector<int> e(p.vars_.size(), 0);
  e.at(i) = 1;
  p.add_term(std::move(e), 1);
  return p;
}

void Polynomial::add_term(std::vector<int> exps, const Rational& c) {
  if (exps.size() != vars_.size()) throw std::invalid_argument("Polynomial: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(exps), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
  if (x.size() != vars_.size()) throw std::invalid_argument("Polynomial: point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    }
    total += t;
  }
  return total;
}

double Polynomial::evaluate(const std::vector<double>& x) const {
  if (x.size() != vars_.size()) throw std::invalid_argument("Polynomial: point has wrong dimension");
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.convert_to<double>();
    for (std::size_t i = 0; i < e.size(); ++i) t *= std::pow(x[i], e[i]);
    total += t;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational coef = c;
    if (!first) {
      out << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    }
    bool monomial = false;
    for (int x : e) monomial = monomial || x > 0;
    if (!monomial || (coef != 1 && coef != -1)) {
      if (denominator(coef) == 1) {
        out << numerator(coef);
      } else {
        out << nilcascade::to_string(coef);
      }
      if (monomial) out << "*";
    } else if (coef == -1) {
      out << "-";
    }
    bool star = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      out << (star ? "*" : "") << vars_[i];
      if (e[i] > 1) out << "^" << e[i];
      star = true;
    }
    first = false;
  }
  return out.str();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb.at(i);
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(vars_);
  for (const auto& [e, x] : terms_) out.add_term(e, x * c);
  return out;
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, to_string(c)});
  return {{"vars", p.vars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  Polynomial p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms")) {
    p.add_term(t.at(0).get<std::vector<int>>(), parse_rational(t.at(1).get<std::string>()));
  }
  return p;
}

std::vector<std::string> lambda_variables(const NilpotentAlgebra& alg) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < alg.centers.size(); ++r) {
    for (std::size_t k = 0; k < alg.centers[r].size(); ++k) {
      out.push_back("l" + std::to_string(r + 1) + "_" + std::to_string(k + 1));
    }
  }
  return out;
}

std::size_t lambda_offset(const NilpotentAlgebra& alg, std::size_t r) {
  std::size_t off = 0;
  for (std::size_t s = 0; s < r; ++s) off += alg.centers.at(s).size();
  return off;
}

std::size_t lambda_dimension(const NilpotentAlgebra& alg) {
  return lambda_offset(alg, alg.centers.size());
}

std::vector<std::vector<Polynomial>> b_matrix_symbolic(const NilpotentAlgebra& alg, std::size_t r) {
  if (r >= alg.layers.size()) throw std::invalid_argument("b_matrix: layer index out of range");
  const auto vars = lambda_variables(alg);
  const std::size_t off = lambda_offset(alg, r);
  const auto& z = alg.centers[r];
  const auto& v = alg.complements[r];
  std::vector<std::vector<Polynomial>> out(v.size(), std::vector<Polynomial>(v.size(), Polynomial(vars)));
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = 0; b < v.size(); ++b) {
      for (const auto& [t, c] : alg.structure(v[a], v[b])) {
        for (std::size_t k = 0; k < z.size(); ++k) {
          if (z[k] == t) out[a][b] = out[a][b] + Polynomial::variable(vars, off + k) * c;
        }
      }
    }
  }
  return out;
}

namespace {

Polynomial expand_pfaffian(const std::vector<std::vector<Polynomial>>& m, std::uint32_t set,
                           const std::vector<std::string>& vars,
                           std::unordered_map<std::uint32_t, Polynomial>& memo) {
  if (set == 0) return Polynomial::constant(vars, 1);
  if (auto it = memo.find(set); it != memo.end()) return it->second;
  const int i = __builtin_ctz(set);
  const std::uint32_t rest = set & ~(1u << i);
  Polynomial total(vars);
  int position = 0;
  for (int j = i + 1; j < 32; ++j) {
    if (!(rest & (1u << j))) continue;
    ++position;
    if (m[i][j].is_zero()) continue;
    const Polynomial sub = expand_pfaffian(m, rest & ~(1u << j), vars, memo);
    if (sub.is_zero()) continue;
    const Polynomial term = m[i][j] * sub;
    total = position % 2 ? total + term : total - term;
  }
  memo.emplace(set, total);
  return total;
}

}  // namespace

Polynomial layer_pfaffian(const NilpotentAlgebra& alg, std::size_t r) {
  if (r >= alg.layers.size()) throw std::invalid_argument("layer_pfaffian: layer index out of range");
  const auto vars = lambda_variables(alg);
  const std::size_t n = alg.complements[r].size();
  if (n == 0) return Polynomial::constant(vars, 1);
  if (n % 2) return Polynomial(vars);
  if (alg.centers[r].size() == 1) {
    const Rational pf = pfaffian<Rational>(pairing_matrix(alg, r));
    Polynomial out(vars);
    std::vector<int> e(vars.size(), 0);
    e[lambda_offset(alg, r)] = static_cast<int>(n / 2);
    out.add_term(e, pf);
    return out;
  }
  if (n > 16) {
    throw std::length_error("layer_pfaffian: layer " + std::to_string(r + 1) + " has dim v_r = " +
                            std::to_string(n) +
                            " with a multi-dimensional center, beyond the symbolic budget of 16; "
                            "use find_nondegenerate_lambda for numeric witnesses");
  }
  const auto m = b_matrix_symbolic(alg, r);
  std::unordered_map<std::uint32_t, Polynomial> memo;
  return expand_pfaffian(m, (n == 32 ? 0u : (1u << n)) - 1u, vars, memo);
}

Polynomial plancherel_polynomial(const NilpotentAlgebra& alg) {
  Polynomial p = Polynomial::constant(lambda_variables(alg), 1);
  for (std::size_t r = 0; r < alg.layers.size(); ++r) p = p * layer_pfaffian(alg, r);
  return p;
}

Integer plancherel_constant(const NilpotentAlgebra& alg) {
  Integer c = 1;
  for (const auto& v : alg.complements) {
    const std::size_t d = v.size() / 2;
    for (std::size_t k = 1; k <= d; ++k) c *= 2 * Integer(static_cast<long>(k));
  }
  return c;
}

namespace {

RationalVector slice(const NilpotentAlgebra& alg, const RationalVector& lambda, std::size_t r) {
  if (static_cast<std::size_t>(lambda.size()) != lambda_dimension(alg)) {
    throw std::invalid_argument("lambda has " + std::to_string(lambda.size()) +
                                " coordinates, expected " + std::to_string(lambda_dimension(alg)));
  }
  return lambda.segment(static_cast<Eigen::Index>(lambda_offset(alg, r)),
                        static_cast<Eigen::Index>(alg.centers[r].size()));
}

}  // namespace

Rational plancherel_value(const NilpotentAlgebra& alg, const RationalVector& lambda) {
  Rational p = 1;
  for (std::size_t r = 0; r < alg.layers.size() && p != 0; ++r) {
    p *= pfaffian<Rational>(b_matrix<Rational>(alg, r, slice(alg, lambda, r)));
  }
  return p;
}

Rational formal_degree(const NilpotentAlgebra& alg, const RationalVector& lambda) {
  return abs(plancherel_value(alg, lambda));
}

bool is_stepwise_si(const NilpotentAlgebra& alg, const RationalVector& lambda) {
  for (std::size_t r = 0; r < alg.layers.size(); ++r) {
    const RationalVector lr = slice(alg, lambda, r);
    bool nonzero = false;
    for (Eigen::Index k = 0; k < lr.size(); ++k) nonzero = nonzero || lr(k) != 0;
    if (!nonzero) return false;
    if (pfaffian<Rational>(b_matrix<Rational>(alg, r, lr)) == 0) return false;
  }
  return true;
}

bool is_nondegenerate(const NilpotentAlgebra& alg, std::size_t r, const RationalVector& lambda_r) {
  return exact_determinant<Rational>(b_matrix<Rational>(alg, r, lambda_r)) != 0;
}

std::uint64_t witness_seed() {
  if (const char* env = std::getenv("CASCADE_LIE_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultWitnessSeed;
}

WitnessResult find_nondegenerate_lambda(const NilpotentAlgebra& alg, std::size_t r,
                                        std::optional<std::uint64_t> seed) {
  if (r >= alg.layers.size()) throw std::invalid_argument("find_nondegenerate_lambda: layer out of range");
  WitnessResult result;
  result.seed = seed ? *seed : witness_seed();
  const auto& z = alg.centers[r];
  const Eigen::Index k = static_cast<Eigen::Index>(z.size());
  auto accept = [&](const RationalVector& l, std::string method) {
    if (!is_nondegenerate(alg, r, l)) return false;
    result.lambda = l;
    result.method = std::move(method);
    return true;
  };

  if (k == 1) {
    if (accept(RationalVector::Ones(1), "lambda_r = 1")) return result;
  }
  bool have_roots = true;
  for (int i : z) have_roots = have_roots && alg.roots[i].has_value();
  if (have_roots && k >= 2) {
    Eigen::Index lo = 0, hi = 0;
    for (Eigen::Index i = 1; i < k; ++i) {
      if (*alg.roots[z[i]] < *alg.roots[z[lo]]) lo = i;
      if (*alg.roots[z[hi]] < *alg.roots[z[i]]) hi = i;
    }
    const std::string name = "extreme fiber roots " + alg.basis()[z[hi]] + ", " + alg.basis()[z[lo]];
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, -1}, {1, 2}}) {
      RationalVector l = RationalVector::Zero(k);
      l(hi) = a;
      l(lo) = b;
      if (accept(l, name + " (" + std::to_string(a) + ", " + std::to_string(b) + ")")) return result;
    }
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    RationalVector l = RationalVector::Zero(k);
    l(i) = 1;
    if (accept(l, "single coordinate " + alg.basis()[z[i]])) return result;
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      for (int s : {1, -1}) {
        RationalVector l = RationalVector::Zero(k);
        l(i) = 1;
        l(j) = s;
        if (accept(l, "pair " + alg.basis()[z[i]] + (s > 0 ? " + " : " - ") + alg.basis()[z[j]])) {
          return result;
        }
      }
    }
  }
  std::mt19937_64 rng(result.seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  for (int t = 1; t <= kWitnessTrialBudget; ++t) {
    RationalVector l(k);
    for (Eigen::Index i = 0; i < k; ++i) l(i) = Rational(num(rng), den(rng));
    result.trials = t;
    if (accept(l, "random trial " + std::to_string(t))) return result;
  }
  result.method = "none found within budget";
  return result;
}

LatticeSpec standard_lattice(const NilpotentAlgebra& alg) {
  LatticeSpec out;
  const Eigen::Index n = static_cast<Eigen::Index>(lambda_dimension(alg));
  out.basis = RationalMatrix::Identity(n, n);
  for (const auto& z : alg.centers) out.blocks.push_back(z.size());
  return out;
}

namespace {

void check_blocks(const LatticeSpec& lattice) {
  std::size_t total = 0;
  for (auto b : lattice.blocks) total += b;
  if (lattice.basis.rows() != lattice.basis.cols() ||
      static_cast<std::size_t>(lattice.basis.rows()) != total) {
    throw std::invalid_argument("lattice: basis size does not match the block sizes");
  }
  std::size_t start = 0;
  for (auto b : lattice.blocks) {
    for (Eigen::Index i = 0; i < lattice.basis.rows(); ++i) {
      for (Eigen::Index j = static_cast<Eigen::Index>(start); j < static_cast<Eigen::Index>(start + b); ++j) {
        const bool inside = i >= static_cast<Eigen::Index>(start) && i < static_cast<Eigen::Index>(start + b);
        if (!inside && lattice.basis(i, j) != 0) {
          throw std::invalid_argument("lattice: basis is not block diagonal");
        }
      }
    }
    start += b;
  }
}

}  // namespace

LatticeSpec dual_lattice(const LatticeSpec& lattice) {
  check_blocks(lattice);
  if (exact_determinant<Rational>(lattice.basis) == 0) {
    throw std::invalid_argument("lattice: basis is singular");
  }
  LatticeSpec out = lattice;
  out.basis = lattice.basis.inverse().transpose();
  return out;
}

Rational multiplicity(const NilpotentAlgebra& alg, const LatticeSpec& lattice,
                      const RationalVector& lambda) {
  check_blocks(lattice);
  if (static_cast<std::size_t>(lambda.size()) != lambda_dimension(alg)) {
    throw std::invalid_argument("multiplicity: lambda has the wrong dimension");
  }
  const RationalVector pairing = lattice.basis.transpose() * lambda;
  for (Eigen::Index i = 0; i < pairing.size(); ++i) {
    if (!is_integer(pairing(i))) return 0;
  }
  if (!is_stepwise_si(alg, lambda)) return 0;
  return formal_degree(alg, lambda);
}

MultiplicityReport multiplicity_table(const NilpotentAlgebra& alg, const LatticeSpec& lattice,
                                      int box) {
  if (box < 0) throw std::invalid_argument("multiplicity_table: negative box");
  const LatticeSpec dual = dual_lattice(lattice);
  const Eigen::Index n = dual.basis.rows();
  MultiplicityReport report;
  report.box = box;
  std::vector<int> c(n, -box);
  while (true) {
    RationalVector coords(n);
    for (Eigen::Index i = 0; i < n; ++i) coords(i) = c[i];
    const RationalVector lambda = dual.basis * coords;
    const Rational m = multiplicity(alg, lattice, lambda);
    if (m != 0) report.entries.emplace_back(lambda, m);
    Eigen::Index i = n - 1;
    while (i >= 0 && c[i] == box) c[i--] = -box;
    if (i < 0) break;
    ++c[i];
  }
  return report;
}

nlohmann::json to_json(const MultiplicityReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [l, m] : report.entries) {
    std::vector<std::string> coords;
    for (Eigen::Index i = 0; i < l.size(); ++i) coords.push_back(to_string(l(i)));
    entries.push_back({coords, to_string(m)});
  }
  return {{"box", report.box}, {"entries", entries}};
}

MultiplicityReport multiplicity_report_from_json(const nlohmann::json& j) {
  MultiplicityReport out;
  out.box = j.at("box").get<int>();
  for (const auto& e : j.at("entries")) {
    const auto coords = e.at(0).get<std::vector<std::string>>();
    RationalVector l(static_cast<Eigen::Index>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) l(static_cast<Eigen::Index>(i)) = parse_rational(coords[i]);
    out.entries.emplace_back(l, parse_rational(e.at(1).get<std::string>()));
  }
  return out;
}

}  // namespace nilcascade
