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


#include "nilcascade/cli.hpp"

#include "nilcascade/cascade.hpp"
#include "nilcascade/golden.hpp"
#include "nilcascade/nilpotent_algebra.hpp"
#include "nilcascade/numcheck.hpp"
#include "nilcascade/plancherel.hpp"
#include "nilcascade/root_system.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>

namespace nilcascade::cli {

namespace {

const std::vector<std::string> kSystems = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2",
                                           "B3", "B4", "B5", "C2", "C3", "C4", "C5", "D4",
                                           "D5", "D6", "G2", "F4", "E6", "E7", "E8"};
const std::vector<std::string> kSplitAlgebras = {"G2", "F4", "B4", "C4", "D5", "E6", "E7"};
const std::map<std::string, std::size_t> kExceptionalCounts = {
    {"G2", 6}, {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string show(const Rational& q) {
  return is_integer(q) ? boost::multiprecision::numerator(q).str() : to_string(q);
}

std::string show(const RationalVector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + show(v(i));
  return out + ")";
}

nlohmann::json json_vector(const RationalVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

RootSystem resolve_system(const std::string& type, std::optional<int> rank) {
  RootType t;
  try {
    t = parse_root_type(type);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown root system '" + type + "'");
  }
  const bool has_digits = type.find_first_of("0123456789") != std::string::npos;
  try {
    if (has_digits) {
      const RootSystem sys = build_root_system(type);
      if (rank && *rank != sys.rank) throw UsageError("--rank disagrees with '" + type + "'");
      return sys;
    }
    if (rank) return build_root_system(t, *rank);
    if (t == RootType::G) return build_root_system(t, 2);
    if (t == RootType::F) return build_root_system(t, 4);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  throw UsageError("type '" + type + "' needs --rank");
}

std::string pair_text(const LayerPair& p) {
  return "{" + p.first.to_string() + (p.second ? ", " + p.second->to_string() : "") + "}";
}

// ----------------------------------------------------------------- suites

VerificationReport rootsys_report(const RootSystem& sys) {
  VerificationReport rep;
  rep.subject = sys.label();
  std::size_t want = 0;
  if (auto it = kExceptionalCounts.find(sys.label()); it != kExceptionalCounts.end())
    want = it->second;
  else
    want = classical_positive_count(sys.type, sys.rank);
  rep.add("positive root count", sys.positive_roots.size() == want,
          std::to_string(sys.positive_roots.size()) + " vs " + std::to_string(want));
  std::string bad;
  for (const Root& s : sys.simple_roots)
    for (const Root& a : sys.positive_roots)
      if (bad.empty() && !is_root(sys, reflect(sys, s, a)))
        bad = "s_" + s.to_string() + "(" + a.to_string() + ") not a root";
  rep.add("closed under simple reflections", bad.empty(), bad);
  bad.clear();
  for (const Root& a : sys.positive_roots)
    if (bad.empty() && !a.dominated_by(sys.highest_root())) bad = a.to_string();
  rep.add("highest root dominates", bad.empty(), bad);
  bad.clear();
  for (std::size_t i = 0; i < sys.positive_roots.size(); ++i)
    for (std::size_t j = 0; j < sys.positive_roots.size(); ++j) {
      const Root sum = sys.positive_roots[i] + sys.positive_roots[j];
      const bool closed = !is_root(sys, sum) || sys.index_of(sum).has_value();
      if (bad.empty() && !closed) bad = sum.to_string();
    }
  rep.add("sums of positive roots are positive", bad.empty(), bad);
  return rep;
}

VerificationReport cascade_report(const RootSystem& sys) {
  const Cascade c = kostant_cascade(sys);
  VerificationReport rep = verify_layer_lemmas(sys, c, compute_layers(sys, c));
  rep.subject = sys.label();
  std::string bad;
  for (std::size_t i = 0; i < c.betas.size(); ++i)
    for (std::size_t j = i + 1; j < c.betas.size(); ++j)
      if (bad.empty() && !strongly_orthogonal(sys, c.betas[i], c.betas[j]))
        bad = c.betas[i].to_string() + ", " + c.betas[j].to_string();
  rep.add("betas strongly orthogonal", bad.empty(), bad);
  return rep;
}

std::vector<VerificationReport> appendix_reports(const RootSystem& sys) {
  std::optional<GoldenFixture> fx = find_fixture(sys.label());
  if (!fx) {
    if (sys.type == RootType::BC || sys.type == RootType::E || sys.type == RootType::F ||
        sys.type == RootType::G)
      throw UsageError("no published tables for " + sys.label());
    fx = classical_fixture(sys.type, sys.rank);
  }
  VerificationReport loaded = validate_fixture(sys, *fx);
  loaded.subject = sys.label() + " fixture";
  VerificationReport cmp = compare_with_fixture(sys, *fx);
  cmp.subject = sys.label();
  return {loaded, cmp};
}

struct NamedAlgebra {
  std::string label;
  NilpotentAlgebra alg;
  bool split = false;
};

NilpotentAlgebra restricted_algebra(const std::string& kind, std::optional<int> n) {
  if (kind == "e6f4") return build_restricted_nilradical(build_root_system("E6"), {2, 3, 4, 5});
  if (kind == "slnh") {
    if (!n || *n < 2) throw UsageError("slnh needs n >= 2");
    std::vector<int> zeros;
    for (int k = 1; k <= 2 * *n - 1; k += 2) zeros.push_back(k);
    return build_restricted_nilradical(build_root_system(RootType::A, 2 * *n - 1), zeros);
  }
  throw UsageError("unknown restricted pattern '" + kind + "'");
}

std::vector<NamedAlgebra> structural_algebras(const VerifyOptions& o) {
  std::vector<NamedAlgebra> out;
  if (o.type) {
    const RootSystem sys = resolve_system(*o.type, o.rank);
    out.push_back({"split " + sys.label(), build_split_nilradical(sys), true});
    return out;
  }
  for (int l = 2; l <= 8; ++l)
    out.push_back({"upper " + std::to_string(l), build_upper_triangular(l), false});
  for (const auto& s : kSplitAlgebras)
    out.push_back({"split " + s, build_split_nilradical(build_root_system(s)), true});
  out.push_back({"restricted slnh 3", restricted_algebra("slnh", 3), false});
  out.push_back({"restricted e6f4", restricted_algebra("e6f4", std::nullopt), false});
  return out;
}

std::vector<VerificationReport> jacobi_reports(const std::vector<NamedAlgebra>& algs) {
  std::vector<VerificationReport> out;
  for (const auto& a : algs) {
    VerificationReport rep = verify_jacobi(a.alg);
    rep.subject = a.label;
    rep.add("nilpotent", is_nilpotent(a.alg));
    if (a.split) {
      for (const auto& c : verify_pairing(a.alg).checks) rep.checks.push_back(c);
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<VerificationReport> setup_reports(const std::vector<NamedAlgebra>& algs) {
  std::vector<VerificationReport> out;
  for (const auto& a : algs) {
    VerificationReport rep = verify_setup(a.alg);
    rep.subject = a.label;
    out.push_back(std::move(rep));
  }
  return out;
}

// lambda equal to 1 on the fiber elements over the given restricted roots.
RationalVector fiber_lambda(const NilpotentAlgebra& alg, std::size_t r,
                            const std::vector<Root>& support) {
  const auto& z = alg.centers[r];
  RationalVector l = RationalVector::Zero(static_cast<Eigen::Index>(z.size()));
  for (std::size_t k = 0; k < z.size(); ++k)
    for (const Root& a : support)
      if (alg.roots[z[k]] && *alg.roots[z[k]] == a) l(static_cast<Eigen::Index>(k)) = 1;
  return l;
}

VerificationReport upper_pfaffian_report() {
  VerificationReport rep;
  rep.subject = "upper triangular";
  for (int l = 3; l <= 8; ++l) {
    const NilpotentAlgebra alg = build_upper_triangular(l);
    const auto vars = lambda_variables(alg);
    Polynomial want = Polynomial::constant(vars, 1);
    for (int r = 1; r <= l / 2; ++r)
      for (int k = 0; k < l - 2 * r; ++k) want = want * Polynomial::variable(vars, r - 1);
    const Polynomial got = plancherel_polynomial(alg);
    rep.add("l = " + std::to_string(l) + ": P = +-prod lambda_r^(l-2r)",
            got == want || got == Polynomial() - want, got.to_string());
  }
  return rep;
}

VerificationReport pfaffian_square_report() {
  VerificationReport rep;
  rep.subject = "random antisymmetric";
  std::mt19937_64 rng(kDefaultWitnessSeed);
  std::uniform_int_distribution<int> size(1, 6), num(-9, 9), den(1, 5);
  std::string bad;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * size(rng);
    RationalMatrix a = RationalMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        a(i, j) = Rational(num(rng), den(rng));
        a(j, i) = -a(i, j);
      }
    const Rational pf = pfaffian<Rational>(a);
    if (bad.empty() && pf * pf != exact_determinant<Rational>(a))
      bad = "trial " + std::to_string(trial) + ", size " + std::to_string(n);
  }
  rep.add("Pf^2 = det on 200 matrices up to 12 x 12", bad.empty(), bad);
  return rep;
}

VerificationReport witness_report(const std::string& label, const NilpotentAlgebra& alg,
                                  const std::vector<Root>& support) {
  VerificationReport rep;
  rep.subject = label;
  const WitnessResult w = find_nondegenerate_lambda(alg, 0);
  rep.add("layer 1 witness found", w.lambda.has_value(),
          w.lambda ? w.method + " " + show(*w.lambda) : "inconclusive after budget");
  const RationalVector sparse = fiber_lambda(alg, 0, support);
  std::string where;
  for (const Root& a : support) where += (where.empty() ? "" : ", ") + a.to_string();
  rep.add("sparse lambda on " + where + " nondegenerate", is_nondegenerate(alg, 0, sparse));
  return rep;
}

std::vector<VerificationReport> pfaffian_reports(const VerifyOptions& o) {
  std::vector<VerificationReport> out;
  if (o.type) {
    const RootSystem sys = resolve_system(*o.type, o.rank);
    const NilpotentAlgebra alg = build_split_nilradical(sys);
    VerificationReport rep;
    rep.subject = "split " + sys.label();
    const Polynomial p = plancherel_polynomial(alg);
    std::size_t d = 0;
    for (const auto& v : alg.complements) d += v.size() / 2;
    rep.add("P homogeneous of degree sum d_r", p.is_homogeneous() && p.degree() == int(d),
            p.to_string());
    for (std::size_t r = 0; r < alg.layers.size(); ++r) {
      const auto w = find_nondegenerate_lambda(alg, r);
      rep.add("layer " + std::to_string(r + 1) + " witness", w.lambda.has_value(), w.method);
    }
    out.push_back(std::move(rep));
    return out;
  }
  out.push_back(upper_pfaffian_report());
  out.push_back(pfaffian_square_report());
  out.push_back(witness_report("restricted slnh 3", restricted_algebra("slnh", 3),
                               {Root{1, 1, 1, 1, 1}, Root{0, 1, 1, 1, 0}}));
  out.push_back(witness_report("restricted e6f4", restricted_algebra("e6f4", std::nullopt),
                               {Root{1, 2, 2, 3, 2, 1}, Root{1, 0, 1, 1, 1, 1}}));
  return out;
}

void numeric_suite(SuiteResult& suite) {
  using namespace numcheck;
  VerificationReport rep;
  rep.subject = "numcheck";
  auto record = [&](const ResidualReport& r, const std::string& label) {
    rep.add(label, r.verdict == "pass",
            r.verdict + ", residual " + std::to_string(r.residual) + " < " +
                std::to_string(r.threshold));
    suite.residuals.push_back(numcheck::to_json(r));
  };
  const TestVector g1 = {GaussPoly{{1.0}, 1.0}};
  const TestVector h1 = {GaussPoly{{0.0, 2.0}, 1.0}};
  for (double lambda : {1.0, 2.0})
    record(coefficient_norm_check(1, lambda, g1, h1, QuadratureSpec{}, 1e-6),
           "coefficient norm d = 1, lambda = " + std::to_string(int(lambda)));
  const TestVector u2 = {GaussPoly{{1.0}, 1.0}, GaussPoly{{0.0, 2.0}, 1.0}};
  const TestVector v2 = {GaussPoly{{0.5, 1.0}, 1.0}, GaussPoly{{1.0, 0.0, -1.0}, 1.0}};
  record(coefficient_norm_check(2, 1.0, u2, v2, QuadratureSpec{}, 1e-4),
         "coefficient norm d = 2, lambda = 1");
  for (int d : {1, 2})
    record(degree_scaling_check(d, 1.0, QuadratureSpec{}, 1e-4),
           "degree scaling d = " + std::to_string(d));
  QuadratureSpec q1;
  q1.points = 96;
  record(plancherel_inversion_check(InversionGroup::Heisenberg1, GaussianSpec{}, q1, 1e-4),
         "inversion H_1");
  QuadratureSpec q4;
  q4.points = 48;
  GaussianSpec f4;
  f4.widths = {1.0, 0.5, 1.5, 1.0, 2.0, 1.0};
  record(plancherel_inversion_check(InversionGroup::UpperTriangular4, f4, q4, 1e-2),
         "inversion l = 4");

  const HeisenbergModel model(2, 1.5);
  const HeisenbergElement g{{0.3, -0.7}, {1.1, 0.4}, 0.25}, h{{-0.5, 0.2}, {0.6, -1.3}, -0.8};
  const TestVector v = {GaussPoly{{1.0, 0.5}, 1.0}, GaussPoly{{0.0, 1.0, -1.0}, 1.5}};
  QuadratureSpec qu;
  qu.points = 160;
  const double unit = unitarity_defect(model, g, v, qu);
  rep.add("unitarity", unit < 1e-8, "defect " + std::to_string(unit));
  const double law = group_law_defect(model, g, h, v, {{0.1, -0.2}, {-1.0, 0.5}, {0.7, 0.7}});
  rep.add("group law", law < 1e-12, "defect " + std::to_string(law));
  suite.reports.push_back(std::move(rep));
}

std::vector<RootSystem> selected_systems(const VerifyOptions& o) {
  std::vector<RootSystem> out;
  if (o.type) {
    out.push_back(resolve_system(*o.type, o.rank));
    return out;
  }
  for (const auto& s : kSystems) out.push_back(build_root_system(s));
  return out;
}

void write_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << j.dump(2) << "\n";
}

// ------------------------------------------------------------ subcommands

int cmd_cascade(const RootSystem& sys, const std::string& json_path, std::ostream& out) {
  const Cascade c = kostant_cascade(sys);
  out << sys.label() << ": " << c.betas.size() << " betas in " << c.generations.size()
      << " generations\n";
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t g = 0; g < c.generations.size(); ++g) {
    out << "generation " << g + 1 << "\n";
    nlohmann::json gen = nlohmann::json::array();
    for (int i : c.generations[g]) {
      out << "  beta_" << i + 1 << " = " << c.betas[i].to_string() << "\n";
      gen.push_back(c.betas[i].to_string());
    }
    gens.push_back(gen);
  }
  if (!json_path.empty()) {
    nlohmann::json betas = nlohmann::json::array();
    for (const Root& b : c.betas) betas.push_back(b.to_string());
    write_json({{"system", sys.label()}, {"betas", betas}, {"generations", gens}}, json_path);
  }
  return 0;
}

int cmd_layers(const RootSystem& sys, const std::string& json_path, std::ostream& out) {
  const Cascade c = kostant_cascade(sys);
  const LayerDecomposition l = compute_layers(sys, c);
  std::size_t total = c.betas.size();
  for (const auto& layer : l.layers) total += layer.size();
  out << sys.label() << ": " << c.betas.size() << " layers, sum |layer| + m = " << total
      << ", |positive roots| = " << sys.positive_roots.size() << "\n";
  nlohmann::json layers = nlohmann::json::array();
  for (std::size_t r = 0; r < c.betas.size(); ++r) {
    out << "layer " << r + 1 << ": beta = " << c.betas[r].to_string() << ", "
        << l.layers[r].size() << " roots, " << l.pairs[r].size() << " pairs\n";
    nlohmann::json pairs = nlohmann::json::array();
    for (const LayerPair& p : l.pairs[r]) {
      out << "  " << pair_text(p) << "\n";
      nlohmann::json pj = {p.first.to_string()};
      if (p.second) pj.push_back(p.second->to_string());
      pairs.push_back(pj);
    }
    layers.push_back({{"beta", c.betas[r].to_string()}, {"pairs", pairs}});
  }
  if (!json_path.empty()) write_json({{"system", sys.label()}, {"layers", layers}}, json_path);
  return 0;
}

int cmd_algebra(const NilpotentAlgebra& alg, const std::string& json_path, std::ostream& out) {
  out << alg.name << ": dim " << alg.dim() << ", " << alg.layers.size() << " layers\n";
  for (std::size_t r = 0; r < alg.layers.size(); ++r)
    out << "layer " << r + 1 << ": dim z = " << alg.centers[r].size()
        << ", dim v = " << alg.complements[r].size() << "\n";
  out << "lower central series:";
  for (std::size_t d : lower_central_series(alg)) out << " " << d;
  out << "\nbrackets:\n";
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      const SparseVector& s = alg.structure(int(i), int(j));
      if (s.empty()) continue;
      out << "  [" << alg.basis()[i] << ", " << alg.basis()[j] << "] =";
      bool first = true;
      for (const auto& [k, c] : s) {
        out << (first ? " " : " + ") << "(" << show(c) << ") " << alg.basis()[k];
        first = false;
      }
      out << "\n";
    }
  if (!json_path.empty()) write_json(to_json(alg), json_path);
  return 0;
}

int cmd_pfaffian(const NilpotentAlgebra& alg, const std::string& json_path, std::ostream& out) {
  out << alg.name << "\n";
  out << "c = " << plancherel_constant(alg).str() << "\n";
  nlohmann::json layers = nlohmann::json::array();
  bool complete = true;
  for (std::size_t r = 0; r < alg.layers.size(); ++r) {
    nlohmann::json lj = {{"layer", r + 1}};
    out << "layer " << r + 1 << ": ";
    try {
      const Polynomial p = layer_pfaffian(alg, r);
      out << "Pf = " << p.to_string() << "\n";
      lj["pfaffian"] = to_json(p);
    } catch (const std::length_error&) {
      complete = false;
      out << "symbolic Pf not expanded, dim v = " << alg.complements[r].size() << "\n";
    }
    const WitnessResult w = find_nondegenerate_lambda(alg, r);
    if (w.lambda) {
      out << "  witness " << show(*w.lambda) << " by " << w.method << "\n";
      lj["witness"] = {{"lambda", json_vector(*w.lambda)}, {"method", w.method}};
    } else {
      out << "  no witness after " << w.trials << " trials, seed " << w.seed << "\n";
      lj["witness"] = nullptr;
    }
    layers.push_back(lj);
  }
  nlohmann::json j = {{"name", alg.name},
                      {"variables", lambda_variables(alg)},
                      {"constant", plancherel_constant(alg).str()},
                      {"layers", layers}};
  if (complete) {
    const Polynomial p = plancherel_polynomial(alg);
    out << "P(lambda) = " << p.to_string() << "\n";
    j["plancherel"] = to_json(p);
  }
  if (!json_path.empty()) write_json(j, json_path);
  return 0;
}

int cmd_multiplicity(int l, int box, const std::string& json_path, std::ostream& out) {
  if (box < 0) throw UsageError("--box must be nonnegative");
  const NilpotentAlgebra alg = build_upper_triangular(l);
  const MultiplicityReport rep = multiplicity_table(alg, standard_lattice(alg), box);
  out << alg.name << ", standard lattice, box " << box << ": " << rep.entries.size()
      << " nonzero multiplicities\n";
  for (const auto& [lambda, m] : rep.entries) out << "  " << show(lambda) << ": " << show(m) << "\n";
  if (!json_path.empty()) write_json(to_json(rep), json_path);
  return 0;
}

int cmd_verify(const VerifyOptions& o, const std::string& json_path, std::ostream& out) {
  const auto results = verify_all(o);
  bool ok = true;
  out << "suite     status  checks\n";
  for (const auto& s : results) {
    std::size_t n = 0, passed = 0;
    for (const auto& r : s.reports)
      for (const auto& c : r.checks) {
        ++n;
        passed += c.passed;
      }
    std::string name = s.name;
    name.resize(10, ' ');
    std::string status = s.status;
    status.resize(8, ' ');
    out << name << status
        << (s.status == "SKIP" ? "-" : std::to_string(passed) + "/" + std::to_string(n)) << "\n";
    ok = ok && s.status != "FAIL";
  }
  for (const auto& s : results)
    for (const auto& r : s.reports)
      for (const auto& c : r.checks)
        if (!c.passed) out << "FAIL " << s.name << " " << r.subject << ": " << c.name
                           << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  if (!json_path.empty()) write_json(to_json(results), json_path);
  return ok ? 0 : 1;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rootsys", "cascade",  "appendix", "jacobi",
                                                 "setup",   "pfaffian", "numeric"};
  return names;
}

std::vector<SuiteResult> verify_all(const VerifyOptions& o) {
  std::vector<std::string> wanted = o.suites;
  for (const auto& s : wanted)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw std::invalid_argument("unknown suite '" + s + "'");
  const bool everything = wanted.empty();
  if (everything) wanted = suite_names();

  std::vector<SuiteResult> results;
  std::optional<std::vector<RootSystem>> systems;
  std::optional<std::vector<NamedAlgebra>> algebras;
  auto get_systems = [&]() -> const std::vector<RootSystem>& {
    if (!systems) systems = selected_systems(o);
    return *systems;
  };
  auto get_algebras = [&]() -> const std::vector<NamedAlgebra>& {
    if (!algebras) algebras = structural_algebras(o);
    return *algebras;
  };
  for (const auto& name : suite_names()) {
    if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    SuiteResult s;
    s.name = name;
    if (name == "rootsys") {
      for (const auto& sys : get_systems()) s.reports.push_back(rootsys_report(sys));
    } else if (name == "cascade") {
      for (const auto& sys : get_systems()) s.reports.push_back(cascade_report(sys));
    } else if (name == "appendix") {
      for (const auto& sys : get_systems())
        for (auto& r : appendix_reports(sys)) s.reports.push_back(std::move(r));
    } else if (name == "jacobi") {
      s.reports = jacobi_reports(get_algebras());
    } else if (name == "setup") {
      s.reports = setup_reports(get_algebras());
    } else if (name == "pfaffian") {
      s.reports = pfaffian_reports(o);
    } else if (name == "numeric") {
      if (everything && !o.numeric) {
        s.status = "SKIP";
        results.push_back(std::move(s));
        continue;
      }
      numeric_suite(s);
    }
    const bool ok = std::all_of(s.reports.begin(), s.reports.end(),
                                [](const VerificationReport& r) { return r.passed(); });
    s.status = ok ? "PASS" : "FAIL";
    results.push_back(std::move(s));
  }
  return results;
}

nlohmann::json to_json(const std::vector<SuiteResult>& results) {
  nlohmann::json suites = nlohmann::json::array();
  bool ok = true;
  for (const auto& s : results) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : s.reports) {
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      reports.push_back({{"subject", r.subject}, {"passed", r.passed()}, {"checks", checks}});
    }
    nlohmann::json sj = {{"name", s.name}, {"status", s.status}, {"reports", reports}};
    if (!s.residuals.empty()) sj["residuals"] = s.residuals;
    suites.push_back(sj);
    ok = ok && s.status != "FAIL";
  }
  return {{"passed", ok}, {"suites", suites}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cascade, layer and Plancherel computations for nilradicals", "nilcascade"};
  app.require_subcommand(1);

  std::string type, json_path, split, what;
  std::vector<std::string> restricted;
  std::optional<int> rank, upper;
  int box = 0;
  std::string only;
  bool numeric = false;

  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--type", type, "root system, e.g. E7 or B with --rank")->required();
    cmd->add_option("--rank", rank, "rank for a bare type letter");
    cmd->add_option("--json", json_path, "write a JSON report");
  };
  auto add_selector = [&](CLI::App* cmd) {
    auto* u = cmd->add_option("--upper", upper, "strictly upper triangular l x l matrices");
    auto* s = cmd->add_option("--split", split, "nilradical of the split form of a type");
    auto* r = cmd->add_option("--restricted", restricted, "slnh n | e6f4")->expected(1, 2);
    u->excludes(s)->excludes(r);
    s->excludes(r);
    cmd->add_option("--rank", rank, "rank for --split with a bare type letter");
    cmd->add_option("--json", json_path, "write a JSON report");
  };

  auto* cascade = app.add_subcommand("cascade", "Kostant cascade by generation");
  add_system(cascade);
  auto* layers = app.add_subcommand("layers", "layer decomposition and pair lists");
  add_system(layers);
  auto* algebra = app.add_subcommand("algebra", "structure constants and layers");
  add_selector(algebra);
  auto* pfaffian_cmd = app.add_subcommand("pfaffian", "Pfaffian polynomials and witnesses");
  add_selector(pfaffian_cmd);
  auto* mult = app.add_subcommand("multiplicity", "lattice multiplicities");
  mult->add_option("--upper", upper, "strictly upper triangular l x l matrices")->required();
  mult->add_option("--box", box, "sup-norm bound on dual lattice coordinates")->required();
  mult->add_option("--json", json_path, "write a JSON report");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> targets = {"appendix", "jacobi", "setup", "all"};
  for (const auto& s : suite_names())
    if (std::find(targets.begin(), targets.end(), s) == targets.end()) targets.push_back(s);
  verify->add_option("what", what, "appendix | jacobi | setup | all")
      ->required()
      ->check(CLI::IsMember(targets));
  verify->add_flag("--numeric", numeric, "include the numeric suite in 'all'");
  verify->add_option("--type", type, "restrict to one root system");
  verify->add_option("--rank", rank, "rank for a bare type letter");
  verify->add_option("--only", only, "run a single suite")->check(CLI::IsMember(suite_names()));
  verify->add_option("--json", json_path, "write a JSON report");

  std::vector<std::string> argv_store = {"nilcascade"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  auto selected_algebra = [&]() -> NilpotentAlgebra {
    const int count = (upper ? 1 : 0) + (split.empty() ? 0 : 1) + (restricted.empty() ? 0 : 1);
    if (count != 1) throw UsageError("choose one of --upper, --split, --restricted");
    if (upper) {
      if (*upper < 2) throw UsageError("--upper needs l >= 2");
      return build_upper_triangular(*upper);
    }
    if (!split.empty()) return build_split_nilradical(resolve_system(split, rank));
    std::optional<int> n;
    if (restricted.size() == 2) {
      try {
        n = std::stoi(restricted[1]);
      } catch (const std::exception&) {
        throw UsageError("bad slnh size '" + restricted[1] + "'");
      }
    }
    if (restricted[0] == "e6f4" && n) throw UsageError("e6f4 takes no size");
    return restricted_algebra(restricted[0], n);
  };

  try {
    if (*cascade) return cmd_cascade(resolve_system(type, rank), json_path, out);
    if (*layers) return cmd_layers(resolve_system(type, rank), json_path, out);
    if (*algebra) return cmd_algebra(selected_algebra(), json_path, out);
    if (*pfaffian_cmd) return cmd_pfaffian(selected_algebra(), json_path, out);
    if (*mult) {
      if (*upper < 2) throw UsageError("--upper needs l >= 2");
      return cmd_multiplicity(*upper, box, json_path, out);
    }
    VerifyOptions o;
    o.numeric = numeric;
    o.rank = rank;
    if (!type.empty()) o.type = type;
    if (what != "all") {
      if (!only.empty() && only != what) throw UsageError("--only conflicts with '" + what + "'");
      o.suites = {what};
    } else if (!only.empty()) {
      o.suites = {only};
    }
    if (o.type) resolve_system(*o.type, o.rank);
    return cmd_verify(o, json_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
}

}  // namespace nilcascade::cli
