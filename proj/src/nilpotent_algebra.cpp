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


#include "nilcascade/nilpotent_algebra.hpp"

#include "nilcascade/cascade.hpp"
#include "nilcascade/chevalley.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilcascade {

namespace {

void axpy(SparseVector& acc, const Rational& c, const SparseVector& v) {
  if (c == 0 || v.empty()) return;
  SparseVector out;
  out.reserve(acc.size() + v.size());
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < acc.size() || b < v.size()) {
    if (b == v.size() || (a < acc.size() && acc[a].first < v[b].first)) {
      out.push_back(std::move(acc[a++]));
    } else if (a == acc.size() || v[b].first < acc[a].first) {
      out.emplace_back(v[b].first, c * v[b].second);
      ++b;
    } else {
      Rational s = acc[a].second + c * v[b].second;
      if (s != 0) out.emplace_back(acc[a].first, std::move(s));
      ++a;
      ++b;
    }
  }
  acc = std::move(out);
}

SparseVector bracket_sparse(const NilpotentAlgebra& alg, int i, const SparseVector& y) {
  SparseVector out;
  for (const auto& [t, c] : y) axpy(out, c, alg.structure(i, t));
  return out;
}

// Row echelon form over sparse rows, rows normalized to leading coefficient 1.
class Echelon {
 public:
  bool insert(SparseVector v) {
    while (!v.empty()) {
      const int lead = v.front().first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        const Rational inv = 1 / v.front().second;
        for (auto& e : v) e.second *= inv;
        rows_.emplace(lead, std::move(v));
        return true;
      }
      const Rational c = -v.front().second;
      axpy(v, c, it->second);
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }
  std::vector<SparseVector> rows() const {
    std::vector<SparseVector> out;
    for (const auto& [k, r] : rows_) out.push_back(r);
    return out;
  }

 private:
  std::map<int, SparseVector> rows_;
};

std::vector<char> membership(std::size_t dim, const std::vector<int>& idx) {
  std::vector<char> m(dim, 0);
  for (int i : idx) m[i] = 1;
  return m;
}

bool supported_in(const SparseVector& v, const std::vector<char>& allowed) {
  for (const auto& [k, c] : v) {
    if (!allowed[k]) return false;
  }
  return true;
}

std::string show(const NilpotentAlgebra& alg, const SparseVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (std::size_t n = 0; n < v.size(); ++n) {
    out += (n ? " + " : "") + to_string(v[n].second) + "*" + alg.basis()[v[n].first];
  }
  return out;
}

}  // namespace

NilpotentAlgebra::NilpotentAlgebra(std::vector<std::string> labels)
    : roots(labels.size()),
      labels_(std::move(labels)),
      sc_(labels_.size(), std::vector<SparseVector>(labels_.size())) {}

int NilpotentAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

void NilpotentAlgebra::set_bracket(int i, int j, SparseVector value) {
  std::sort(value.begin(), value.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector neg = value;
  for (auto& e : neg) e.second = -e.second;
  sc_.at(i).at(j) = std::move(value);
  sc_.at(j).at(i) = std::move(neg);
}

void NilpotentAlgebra::set_bracket_one_sided(int i, int j, SparseVector value) {
  std::sort(value.begin(), value.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  sc_.at(i).at(j) = std::move(value);
}

RationalVector NilpotentAlgebra::unit(int i) const {
  RationalVector v = RationalVector::Zero(dim());
  v(i) = 1;
  return v;
}

RationalVector NilpotentAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
  if (static_cast<std::size_t>(x.size()) != dim() || static_cast<std::size_t>(y.size()) != dim()) {
    throw std::invalid_argument("bracket: vector size does not match algebra dimension " +
                                std::to_string(dim()));
  }
  RationalVector out = RationalVector::Zero(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x(i) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y(j) == 0) continue;
      const Rational c = x(i) * y(j);
      for (const auto& [k, v] : sc_[i][j]) out(k) += c * v;
    }
  }
  return out;
}

NilpotentAlgebra NilpotentAlgebra::with_structure_constant(int i, int j, int k,
                                                           const Rational& c) const {
  NilpotentAlgebra out = *this;
  SparseVector v = sc_.at(i).at(j);
  v.erase(std::remove_if(v.begin(), v.end(), [k](const auto& e) { return e.first == k; }),
          v.end());
  if (c != 0) v.emplace_back(k, c);
  out.set_bracket(i, j, std::move(v));
  return out;
}

NilpotentAlgebra build_upper_triangular(int l) {
  if (l < 2) throw std::invalid_argument("build_upper_triangular: need l >= 2, got " + std::to_string(l));
  std::vector<std::string> labels;
  std::map<std::pair<int, int>, int> idx;
  for (int i = 1; i <= l; ++i) {
    for (int j = i + 1; j <= l; ++j) {
      idx[{i, j}] = static_cast<int>(labels.size());
      labels.push_back("e" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  NilpotentAlgebra alg(labels);
  alg.name = "upper triangular " + std::to_string(l);
  // [e_ij, e_mn] = delta_jm e_in - delta_ni e_mj
  for (const auto& [a, ia] : idx) {
    for (const auto& [b, ib] : idx) {
      if (ia >= ib) continue;
      SparseVector v;
      if (a.second == b.first) v.emplace_back(idx.at({a.first, b.second}), 1);
      if (b.second == a.first) v.emplace_back(idx.at({b.first, a.second}), -1);
      if (!v.empty()) alg.set_bracket(ia, ib, v);
    }
  }
  for (int r = 1; r <= l / 2; ++r) {
    std::vector<int> v;
    for (int s = r + 1; s <= l - r; ++s) {
      v.push_back(idx.at({r, s}));
      v.push_back(idx.at({s, l - r + 1}));
    }
    const int z = idx.at({r, l - r + 1});
    std::vector<int> m = v;
    m.push_back(z);
    alg.layers.push_back(m);
    alg.centers.push_back({z});
    alg.complements.push_back(v);
  }
  return alg;
}

NilpotentAlgebra build_split_nilradical(const RootSystem& sys) {
  const ConstantsTable table = chevalley_constants(sys);
  std::vector<std::string> labels;
  for (const Root& a : sys.positive_roots) labels.push_back(a.to_string());
  NilpotentAlgebra alg(labels);
  alg.name = "split " + sys.label();
  for (std::size_t i = 0; i < labels.size(); ++i) alg.roots[i] = sys.positive_roots[i];
  for (const auto& [key, n] : table.positive_pairs()) {
    if (key.first >= key.second) continue;
    const Root sum = sys.positive_roots[key.first] + sys.positive_roots[key.second];
    alg.set_bracket(static_cast<int>(key.first), static_cast<int>(key.second),
                    {{static_cast<int>(*sys.index_of(sum)), Rational(n)}});
  }
  const Cascade cascade = kostant_cascade(sys);
  const LayerDecomposition layers = compute_layers(sys, cascade);
  for (std::size_t r = 0; r < cascade.betas.size(); ++r) {
    std::vector<int> v;
    for (const LayerPair& p : layers.pairs[r]) {
      v.push_back(static_cast<int>(*sys.index_of(p.first)));
      if (p.second) v.push_back(static_cast<int>(*sys.index_of(*p.second)));
    }
    const int z = static_cast<int>(*sys.index_of(cascade.betas[r]));
    std::vector<int> m = v;
    m.push_back(z);
    alg.layers.push_back(m);
    alg.centers.push_back({z});
    alg.complements.push_back(v);
  }
  return alg;
}

NilpotentAlgebra build_restricted_nilradical(const RootSystem& sys,
                                             const std::vector<int>& zero_labels) {
  std::vector<int> zeros = zero_labels;
  std::sort(zeros.begin(), zeros.end());
  bool supported = false;
  std::string pattern;
  if (sys.type == RootType::A && sys.rank % 2 == 1) {
    std::vector<int> odd;
    for (int i = 1; i <= sys.rank; i += 2) odd.push_back(i);
    if (zeros == odd) {
      supported = true;
      pattern = "sl(" + std::to_string((sys.rank + 1) / 2) + ",H)";
    }
  }
  if (sys.type == RootType::E && sys.rank == 6 && zeros == std::vector<int>{2, 3, 4, 5}) {
    supported = true;
    pattern = "e6(F4)";
  }
  if (!supported) {
    throw std::invalid_argument("build_restricted_nilradical: unsupported pattern for " +
                                sys.label());
  }

  const RestrictedSystem res = restrict_roots(sys, zeros);
  const int k = static_cast<int>(res.surviving_labels.size());
  const RootSystem small = build_root_system(RootType::A, k);
  if (std::vector<Root>(res.restricted_positive) != small.positive_roots) {
    throw std::logic_error("build_restricted_nilradical: restricted roots of " + sys.label() +
                           " are not of type A" + std::to_string(k));
  }
  const ConstantsTable table = chevalley_constants(sys);

  std::vector<Root> kept;
  for (const Root& a : sys.positive_roots) {
    if (!res.restrict_root(a).is_zero()) kept.push_back(a);
  }
  std::map<Root, int> pos;
  std::vector<std::string> labels;
  for (const Root& a : kept) {
    pos[a] = static_cast<int>(labels.size());
    labels.push_back(a.to_string());
  }
  NilpotentAlgebra alg(labels);
  alg.name = "restricted " + pattern;
  for (std::size_t i = 0; i < kept.size(); ++i) alg.roots[i] = kept[i];
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      const Root sum = kept[i] + kept[j];
      if (!is_root(sys, sum)) continue;
      alg.set_bracket(static_cast<int>(i), static_cast<int>(j),
                      {{pos.at(sum), Rational(table(kept[i], kept[j]))}});
    }
  }

  const Cascade cascade = kostant_cascade(small);
  const LayerDecomposition layers = compute_layers(small, cascade);
  auto fiber = [&](const Root& r) {
    std::vector<int> out;
    for (const Root& a : res.fibers.at(r)) out.push_back(pos.at(a));
    return out;
  };
  for (std::size_t r = 0; r < cascade.betas.size(); ++r) {
    std::vector<int> v;
    for (const LayerPair& p : layers.pairs[r]) {
      for (int i : fiber(p.first)) v.push_back(i);
      if (p.second) {
        for (int i : fiber(*p.second)) v.push_back(i);
      }
    }
    const std::vector<int> z = fiber(cascade.betas[r]);
    std::vector<int> m = v;
    m.insert(m.end(), z.begin(), z.end());
    alg.layers.push_back(m);
    alg.centers.push_back(z);
    alg.complements.push_back(v);
  }
  return alg;
}

VerificationReport verify_jacobi(const NilpotentAlgebra& alg) {
  VerificationReport report;
  report.subject = alg.name;
  const int n = static_cast<int>(alg.dim());
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < n && ok; ++i) {
      if (!alg.structure(i, i).empty()) {
        ok = false;
        detail = "[" + alg.basis()[i] + ", " + alg.basis()[i] + "] != 0";
      }
      for (int j = i + 1; j < n && ok; ++j) {
        SparseVector s = alg.structure(i, j);
        axpy(s, 1, alg.structure(j, i));
        if (!s.empty()) {
          ok = false;
          detail = "[" + alg.basis()[i] + ", " + alg.basis()[j] + "] + [" + alg.basis()[j] + ", " +
                   alg.basis()[i] + "] = " + show(alg, s);
        }
      }
    }
    report.add("antisymmetry", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        for (int k = j + 1; k < n && ok; ++k) {
          SparseVector total = bracket_sparse(alg, i, alg.structure(j, k));
          axpy(total, 1, bracket_sparse(alg, j, alg.structure(k, i)));
          axpy(total, 1, bracket_sparse(alg, k, alg.structure(i, j)));
          if (!total.empty()) {
            ok = false;
            detail = "triple (" + alg.basis()[i] + ", " + alg.basis()[j] + ", " + alg.basis()[k] +
                     "): cyclic sum " + show(alg, total);
          }
        }
      }
    }
    report.add("Jacobi identity", ok, detail);
  }
  return report;
}

std::vector<std::size_t> lower_central_series(const NilpotentAlgebra& alg) {
  const int n = static_cast<int>(alg.dim());
  std::vector<std::size_t> dims = {alg.dim()};
  std::vector<SparseVector> current;
  for (int i = 0; i < n; ++i) current.push_back({{i, Rational(1)}});
  while (!current.empty() && dims.size() <= alg.dim() + 1) {
    Echelon next;
    for (int i = 0; i < n; ++i) {
      for (const SparseVector& w : current) next.insert(bracket_sparse(alg, i, w));
    }
    dims.push_back(next.rank());
    if (next.rank() == current.size()) break;  // stalled
    current = next.rows();
  }
  return dims;
}

bool is_nilpotent(const NilpotentAlgebra& alg) { return lower_central_series(alg).back() == 0; }

VerificationReport verify_setup(const NilpotentAlgebra& alg) {
  VerificationReport report;
  report.subject = alg.name;
  const std::size_t dim = alg.dim();
  const std::size_t m = alg.layers.size();

  {
    bool ok = alg.centers.size() == m && alg.complements.size() == m;
    std::string detail = ok ? "" : "layers, centers, complements differ in count";
    std::vector<int> seen(dim, 0);
    for (std::size_t r = 0; r < m && ok; ++r) {
      for (int i : alg.layers[r]) ++seen.at(i);
      std::vector<int> a = alg.layers[r];
      std::vector<int> b = alg.centers[r];
      b.insert(b.end(), alg.complements[r].begin(), alg.complements[r].end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        ok = false;
        detail = "layer " + std::to_string(r + 1) + " is not z_r + v_r";
      }
    }
    for (std::size_t i = 0; i < dim && ok; ++i) {
      if (seen[i] != 1) {
        ok = false;
        detail = alg.basis()[i] + " lies in " + std::to_string(seen[i]) + " layers";
      }
    }
    report.add("(0) n = m_1 + ... + m_m, m_r = z_r + v_r", ok, detail);
    if (!ok) return report;
  }

  std::vector<int> all_v;
  for (const auto& v : alg.complements) all_v.insert(all_v.end(), v.begin(), v.end());
  const std::vector<char> in_v = membership(dim, all_v);

  auto pair_name = [&](int i, int j) {
    return "[" + alg.basis()[i] + ", " + alg.basis()[j] + "]";
  };

  {
    bool ok = true;
    std::string detail;
    std::vector<int> prefix;
    for (std::size_t r = 0; r < m && ok; ++r) {
      prefix.insert(prefix.end(), alg.layers[r].begin(), alg.layers[r].end());
      const std::vector<char> in_n = membership(dim, prefix);
      for (std::size_t i = 0; i < dim && ok; ++i) {
        for (int j : prefix) {
          if (!supported_in(alg.structure(static_cast<int>(i), j), in_n)) {
            ok = false;
            detail = pair_name(static_cast<int>(i), j) + " leaves n_" + std::to_string(r + 1);
            break;
          }
        }
      }
    }
    report.add("(i) n_r is an ideal", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t r = 0; r < m && ok; ++r) {
      for (std::size_t s = 0; s < r && ok; ++s) {
        for (int i : alg.layers[r]) {
          for (int j : alg.centers[s]) {
            if (ok && !alg.structure(i, j).empty()) {
              ok = false;
              detail = pair_name(i, j) + " != 0";
            }
          }
        }
      }
    }
    report.add("(ii) [m_r, z_s] = 0 for r > s", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t r = 0; r < m && ok; ++r) {
      for (std::size_t s = 0; s < r && ok; ++s) {
        for (int i : alg.layers[r]) {
          for (int j : alg.layers[s]) {
            if (ok && !supported_in(alg.structure(i, j), in_v)) {
              ok = false;
              detail = pair_name(i, j) + " = " + show(alg, alg.structure(i, j)) + " not in v";
            }
          }
        }
      }
    }
    report.add("(iii) [m_r, m_s] in v for r > s", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t r = 0; r < m && ok; ++r) {
      for (int i : alg.layers[r]) {
        for (int j : alg.centers[r]) {
          if (ok && !alg.structure(i, j).empty()) {
            ok = false;
            detail = pair_name(i, j) + " != 0, z_" + std::to_string(r + 1) + " not central";
          }
        }
      }
      std::vector<char> allowed = in_v;
      for (int j : alg.centers[r]) allowed[j] = 1;
      for (int i : alg.complements[r]) {
        for (int j : alg.complements[r]) {
          if (ok && !supported_in(alg.structure(i, j), allowed)) {
            ok = false;
            detail = pair_name(i, j) + " not in z_" + std::to_string(r + 1) + " + v";
          }
        }
      }
    }
    report.add("(iv) z_r central in m_r, [v_r, v_r] in z_r + v", ok, detail);
  }
  return report;
}

RationalMatrix pairing_matrix(const NilpotentAlgebra& alg, std::size_t r, std::size_t k) {
  if (r >= alg.layers.size()) throw std::invalid_argument("pairing_matrix: layer out of range");
  const auto& v = alg.complements[r];
  const int z = alg.centers[r].at(k);
  const Eigen::Index n = static_cast<Eigen::Index>(v.size());
  RationalMatrix out = RationalMatrix::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      for (const auto& [t, c] : alg.structure(v[a], v[b])) {
        if (t == z) out(a, b) = c;
      }
    }
  }
  return out;
}

VerificationReport verify_pairing(const NilpotentAlgebra& alg) {
  VerificationReport report;
  report.subject = alg.name;
  for (std::size_t r = 0; r < alg.layers.size(); ++r) {
    if (alg.centers[r].size() != 1 || alg.complements[r].empty()) continue;
    const auto rank = exact_rank(pairing_matrix(alg, r));
    const auto want = static_cast<Eigen::Index>(alg.complements[r].size());
    report.add("layer " + std::to_string(r + 1) + " pairing v_r x v_r -> z_r nondegenerate",
               rank == want, "rank " + std::to_string(rank) + " of " + std::to_string(want));
  }
  return report;
}

nlohmann::json to_json(const NilpotentAlgebra& alg) {
  nlohmann::json j;
  j["name"] = alg.name;
  j["basis"] = alg.basis();
  nlohmann::json sc = nlohmann::json::array();
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      const SparseVector& v = alg.structure(static_cast<int>(a), static_cast<int>(b));
      if (v.empty()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [k, c] : v) terms.push_back({k, to_string(c)});
      sc.push_back({a, b, terms});
    }
  }
  j["sc"] = sc;
  j["layers"] = alg.layers;
  j["centers"] = alg.centers;
  j["complements"] = alg.complements;
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : alg.roots) {
    if (r) {
      roots.push_back(r->coeffs());
    } else {
      roots.push_back(nullptr);
    }
  }
  j["roots"] = roots;
  return j;
}

NilpotentAlgebra algebra_from_json(const nlohmann::json& j) {
  NilpotentAlgebra alg(j.at("basis").get<std::vector<std::string>>());
  alg.name = j.value("name", std::string());
  for (const auto& e : j.at("sc")) {
    SparseVector v;
    for (const auto& t : e.at(2)) {
      v.emplace_back(t.at(0).get<int>(), parse_rational(t.at(1).get<std::string>()));
    }
    alg.set_bracket_one_sided(e.at(0).get<int>(), e.at(1).get<int>(), std::move(v));
  }
  alg.layers = j.at("layers").get<std::vector<std::vector<int>>>();
  alg.centers = j.at("centers").get<std::vector<std::vector<int>>>();
  if (j.contains("complements")) {
    alg.complements = j.at("complements").get<std::vector<std::vector<int>>>();
  } else {
    for (std::size_t r = 0; r < alg.layers.size(); ++r) {
      std::vector<int> v;
      for (int i : alg.layers[r]) {
        if (std::find(alg.centers[r].begin(), alg.centers[r].end(), i) == alg.centers[r].end()) {
          v.push_back(i);
        }
      }
      alg.complements.push_back(v);
    }
  }
  if (j.contains("roots")) {
    std::size_t i = 0;
    for (const auto& r : j.at("roots")) {
      if (!r.is_null() && i < alg.roots.size()) alg.roots[i] = Root(r.get<std::vector<int>>());
      ++i;
    }
  }
  return alg;
}

}  // namespace nilcascade
