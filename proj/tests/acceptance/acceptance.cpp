// Acceptance checks: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "../support.hpp"
#include "liesym/kowalevskaya.hpp"
#include "liesym/liealg.hpp"
#include "liesym/report.hpp"
#include "liesym/resonance.hpp"
#include "liesym/symsearch.hpp"

using namespace liesym;
using testsupport::field;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

WeightSystem W(std::vector<Rat> g) { return WeightSystem::from_weights(std::move(g)); }

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(LIESYM_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnalyzeConfig config(const std::string& file, ParamOverrides over = {}) {
  AnalyzeConfig cfg;
  cfg.text = slurp(file);
  cfg.overrides = std::move(over);
  return cfg;
}

std::vector<VectorField> l4() { return {testsupport::X1(), testsupport::X2(), testsupport::X3(), testsupport::X4()}; }

bool has_exact(const BalanceSearch& s, const RatVector& c) {
  return std::any_of(s.balances.begin(), s.balances.end(), [&](const Balance& b) { return b.exact && b.c == c; });
}

std::multiset<Rat> exact_set(const std::vector<AlgNum>& v, bool& all_exact) {
  std::multiset<Rat> out;
  all_exact = true;
  for (const auto& a : v) {
    if (!a.is_exact()) {
      all_exact = false;
      continue;
    }
    out.insert(a.exact());
  }
  return out;
}

bool euler_identity(const VectorField& f, const WeightSystem& ws) {
  PolyMatrix J = jacobian(f);
  for (std::size_t r = 0; r < f.dim(); ++r) {
    MultiPoly lhs(f.dim());
    for (std::size_t i = 0; i < f.dim(); ++i) lhs += J[r][i] * (ws.g[i] * MultiPoly::variable(f.dim(), i));
    if (lhs != (ws.g[r] + 1) * f.comps[r]) return false;
  }
  return true;
}

// y = T x: f~(y) = T f(T^-1 y).
VectorField conjugate(const VectorField& f, const RatMatrix& T, const RatMatrix& Tinv) {
  const std::size_t n = f.dim();
  std::vector<MultiPoly> subs;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly s(n);
    for (std::size_t j = 0; j < n; ++j) s += Tinv(i, j) * MultiPoly::variable(n, j);
    subs.push_back(s);
  }
  std::vector<MultiPoly> g;
  for (const auto& c : f.comps) g.push_back(compose(c, subs));
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly s(n);
    for (std::size_t j = 0; j < n; ++j) s += T(i, j) * g[j];
    out.push_back(s);
  }
  return VectorField(f.vars, out);
}

Check criterion1() {
  Check c;
  for (int a : {1, 2, 3, 5}) {
    auto sol = find_weights(testsupport::family(a));
    c.expect(sol.unique.has_value(), "weights not unique");
    if (!sol.unique) break;
    c.expect(sol.unique->g == std::vector<Rat>{1, 1} && sol.unique->l == 1, "wrong weights");
  }
  return c;
}

Check criterion2() {
  Check c;
  WeightSystem ws = W({1, 1});
  auto s2 = find_balances(testsupport::family(2), ws);
  c.expect(!s2.family_detected && s2.balances.size() == 2 && has_exact(s2, {-1, 0}) && has_exact(s2, {0, -1}),
           "a = 2 balance set differs");
  auto s1 = find_balances(testsupport::family(1), ws);
  c.expect(s1.family_detected, "a = 1 family not detected");
  std::size_t members = 0;
  for (const auto& b : s1.balances)
    if (b.exact && b.c[1] == -b.c[0] - 1 && verify_balance(testsupport::family(1), ws, b.c)) ++members;
  c.expect(members >= 2, "fewer than two verified family members");
  return c;
}

Check criterion3() {
  Check c;
  WeightSystem ws = W({1, 1});
  for (int a : {2, 3, 5}) {
    auto vf = testsupport::family(a);
    bool ex1 = false, ex2 = false;
    Balance b1 = make_balance(vf, ws, {-1, 0});
    Balance b2 = make_balance(vf, ws, {0, -1});
    c.expect(exact_set(b1.exponents, ex1) == std::multiset<Rat>{-1, Rat(1 - a)} && ex1,
             "exponents at (-1,0) for a = " + std::to_string(a));
    c.expect(exact_set(b2.exponents, ex2) == std::multiset<Rat>{-1, 0} && ex2,
             "exponents at (0,-1) for a = " + std::to_string(a));
    c.expect(b1.diagonalizable == (a != 2) && b1.diagonalizable_exact, "diagonalizable flag at (-1,0)");
    c.expect(b2.diagonalizable, "diagonalizable flag at (0,-1)");
  }
  return c;
}

Check criterion4() {
  Check c;
  std::mt19937 rng(4);
  std::size_t balances = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto& g = testsupport::weight_families()[trial % testsupport::weight_families().size()];
    auto gen = testsupport::random_qh_with_balance(rng, W(g));
    c.expect(euler_identity(gen.vf, gen.ws), "Euler identity fails");
    c.expect(check_minus_one(make_balance(gen.vf, gen.ws, gen.c)), "planted balance fails the -1 check");
    for (const auto& b : find_balances(gen.vf, gen.ws).balances) {
      if (!b.exact) continue;
      ++balances;
      c.expect(check_minus_one(b), "found balance fails the -1 check");
    }
  }
  c.detail = c.ok ? std::to_string(balances) + " found balances plus 50 planted" : c.detail;
  return c;
}

Check criterion5() {
  Check c;
  ResonanceQuery q;
  q.lambdas = {Rat(-1), Rat(0)};
  auto r = theorem_resonances(q);
  c.expect(r.bound.kind == BoundKind::Certified && r.bound.value == 1, "bound is not Certified 1");
  std::set<long> k1;
  for (const auto& s : r.particular) k1.insert(s.k[0]);
  c.expect(k1 == std::set<long>{0, 1}, "k1 values differ from {0, 1}");
  return c;
}

Check criterion6() {
  Check c;
  WeightSystem ws = W({1, 1});
  auto vf = testsupport::family(1);
  std::vector<std::size_t> d;
  for (long M = -1; M <= 1; ++M) d.push_back(qh_symmetry_space(vf, ws, M).dim());
  c.expect(d == std::vector<std::size_t>{0, 2, 2}, "dimensions differ from (0,2,2)");
  auto s0 = qh_symmetry_space(vf, ws, 0), s1 = qh_symmetry_space(vf, ws, 1);
  c.expect(same_span(s0.basis, {testsupport::X1(), testsupport::X2()}), "M = 0 span");
  c.expect(same_span(s1.basis, {testsupport::X3(), testsupport::X4()}), "M = 1 span");
  c.expect(vf == testsupport::X3() + testsupport::X4() && in_span(vf, s1.basis) && s1.contains_trivial,
           "X_f not in the M = 1 space");
  return c;
}

Check criterion7() {
  Check c;
  WeightSystem ws = W({1, 1});
  auto vf = testsupport::family(2);
  std::vector<std::size_t> d;
  for (long M = -1; M <= 1; ++M) d.push_back(qh_symmetry_space(vf, ws, M).dim());
  c.expect(d == std::vector<std::size_t>{0, 0, 1}, "dimensions differ from (0,0,1)");
  c.expect(same_span(qh_symmetry_space(vf, ws, 1).basis, {vf}), "M = 1 space is not span{X_f}");
  auto r = run_analyze(config("quadratic.ode", {{"a", Rat(2)}}));
  c.expect(r.bound.kind == BoundKind::Certified && r.scan.certified, "bound not certified");
  c.expect(r.verdict == "NoNontrivialAnalyticSymmetries", "verdict " + r.verdict);
  return c;
}

Check criterion8() {
  Check c;
  auto t = structure_constants(l4());
  // Rows [X_i, X_j] from the published table.
  const std::vector<std::vector<RatVector>> table = {
      {{0, 0, 0, 0}, {-1, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 0}},
      {{1, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, -1}},
      {{0, 0, -1, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}},
      {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}},
  };
  c.expect(t.closed, "not closed");
  int agree = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) agree += t.structure[i][j] == table[i][j];
  c.expect(agree == 16, std::to_string(agree) + "/16 entries agree");
  c.expect(derived_series(t) == std::vector<std::size_t>{4, 3, 1, 0}, "derived series");
  c.expect(is_solvable(t), "not solvable");
  return c;
}

Check criterion9() {
  Check c;
  auto lv = run_semi(config("lv.ode", {{"a", Rat(2)}}));
  auto rep = run_semi(config("replicator.ode", {{"a", Rat(2)}}));
  c.expect(lv.semi && lv.semi->sign == SqhSign::Negative, "LV not Negative");
  c.expect(rep.semi && rep.semi->sign == SqhSign::Positive, "replicator not Positive");
  if (!lv.semi || !rep.semi) return c;
  c.expect(lv.semi->core == testsupport::family(2) && rep.semi->core == testsupport::family(2), "cores differ");
  c.expect(lv.semi->symmetry_class == "polynomial" && rep.semi->symmetry_class == "analytic", "class tags");
  c.expect(lv.semi->conclusion == "NoNontrivialPolynomialSymmetries", "LV conclusion " + lv.semi->conclusion);
  c.expect(rep.semi->conclusion == "NoNontrivialAnalyticSymmetries", "replicator conclusion " + rep.semi->conclusion);
  return c;
}

Check criterion10() {
  Check c;
  std::mt19937 rng(10);
  // Bracket identities.
  std::uniform_int_distribution<int> n_dist(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = n_dist(rng);
    auto x = testsupport::random_field(rng, n), y = testsupport::random_field(rng, n), z = testsupport::random_field(rng, n);
    auto jac = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y));
    c.expect(jac.is_zero(), "Jacobi identity");
    c.expect(lie_bracket(x, y) + lie_bracket(y, x) == VectorField::zero(x.vars), "antisymmetry");
  }

  // Symmetry spaces against resonance: a symmetry of degree M needs a solution with k1 >= M.
  WeightSystem ws = W({1, 1});
  int systems = 0, checked = 0, with_symmetries = 0;
  for (int trial = 0; systems < 100 && trial < 2000; ++trial) {
    VectorField vf;
    if (trial % 3 == 0) {
      // Linear images of the example family keep nontrivial symmetries in play.
      RatMatrix T(2, 2);
      do {
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) T(i, j) = testsupport::small_rat(rng, 2, 1);
      } while (determinant(T) == 0);
      Rat det = determinant(T);
      RatMatrix Tinv{{T(1, 1) / det, -T(0, 1) / det}, {-T(1, 0) / det, T(0, 0) / det}};
      vf = conjugate(testsupport::family(testsupport::small_rat(rng, 3, 1)), T, Tinv);
    } else {
      vf = testsupport::random_qh_with_balance(rng, ws).vf;
    }
    auto search = find_balances(vf, ws);
    bool used = false;
    for (const auto& b : search.balances) {
      if (!b.exact || !b.diagonalizable) continue;
      bool exact = std::all_of(b.exponents.begin(), b.exponents.end(), [](const AlgNum& a) { return a.is_exact(); });
      if (!exact) continue;
      ResonanceQuery q;
      q.lambdas = b.exponents;
      q.l = ws.l;
      q.k_cap = 6;
      auto r = theorem_resonances(q);
      for (long M = -1; M <= 3; ++M) {
        auto sp = qh_symmetry_space(vf, ws, M);
        if (sp.dim() == 0) continue;
        ++checked;
        if (sp.nontrivial_dim() > 0) ++with_symmetries;
        c.expect(consistency_check(r, M), "symmetry at M = " + std::to_string(M) + " without a resonance");
      }
      used = true;
    }
    systems += used;
  }
  c.expect(systems == 100, "only " + std::to_string(systems) + " systems with a usable balance");

  // Extended system: spectrum {-1/l} + exponents, and resonances of its linear part
  // with u0 absent are exactly the theorem relations sum k_i lambda_i = lambda_j.
  for (int a : {2, 3, 5}) {
    auto vf = testsupport::family(a);
    for (RatVector bal : {RatVector{-1, 0}, RatVector{0, -1}}) {
      auto cs = companion_system(vf, ws, bal, true);
      RatMatrix A(3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (const auto& [e, coef] : cs.extended->comps[i].terms())
          if (e[0] + e[1] + e[2] == 1)
            for (std::size_t k = 0; k < 3; ++k)
              if (e[k] == 1) A(i, k) = coef;
      bool ex_spec = false, ex_lam = false;
      auto spec = exact_set(eigen_split(A).roots, ex_spec);
      auto expected = exact_set(make_balance(vf, ws, bal).exponents, ex_lam);
      expected.insert(make_rat(-1, ws.l));
      c.expect(ex_spec && ex_lam && spec == expected, "extended spectrum");

      std::vector<AlgNum> lam = make_balance(vf, ws, bal).exponents;
      std::vector<AlgNum> ext{make_rat(-1, ws.l)};
      ext.insert(ext.end(), lam.begin(), lam.end());
      ResonanceQuery q;
      q.lambdas = lam;
      auto th = theorem_resonances(q);
      for (long order = 2; order <= 4; ++order) {
        for (const auto& s : equilibrium_resonances(ext, order).particular) {
          if (s.k[0] != 0 || s.j == 1) continue;
          std::vector<long> k(s.k.begin() + 1, s.k.end());
          // Covered by a minimal theorem solution for target j - 1 (plus homogeneous steps).
          bool covered = false;
          for (const auto& p : th.particular) {
            if (p.j != s.j - 1) continue;
            bool le = true;
            for (std::size_t i = 0; i < k.size(); ++i) le = le && p.k[i] <= k[i];
            covered = covered || le;
          }
          c.expect(covered, "extended resonance without theorem counterpart");
        }
      }
    }
  }
  std::ostringstream os;
  os << "200 triples, " << systems << " systems, " << checked << " nonempty spaces (" << with_symmetries
     << " nontrivial)";
  if (c.ok) c.detail = os.str();
  return c;
}

Check criterion11() {
  Check c;
  RatMatrix m{{0, 1}, {1, -1}};
  auto split = eigen_split(m);
  c.expect(split.roots.size() == 2, "root count");
  double worst = 0;
  for (const auto& r : split.roots) {
    c.expect(!r.is_exact(), "irrational root reported exact");
    auto z = r.approx();
    worst = std::max(worst, std::abs(z * z + z - 1.0));
  }
  c.expect(worst < 1e-7, "|charpoly(root)| too large");
  auto cfg = config("irrational.ode");
  cfg.weights = std::vector<Rat>{1, 1, 1};
  auto r = run_analyze(cfg);
  c.expect(!r.records.empty() && r.records[0].status == "numeric", "balance not flagged numeric");
  c.expect(r.bound.kind == BoundKind::Uncertified && !r.scan.certified, "report not Uncertified");
  c.expect(r.verdict != "NoNontrivialAnalyticSymmetries", "certified negative verdict from numeric data");
  if (c.ok) {
    std::ostringstream os;
    os << "max residual " << worst;
    c.detail = os.str();
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"weights of the example family", criterion1},
      {"balances for a = 2 and the a = 1 family", criterion2},
      {"Kowalevskaya exponents and diagonalizability", criterion3},
      {"-1 exponent and Euler identity on 50 random systems", criterion4},
      {"resonance bound for (-1, 0)", criterion5},
      {"symmetry spaces for a = 1", criterion6},
      {"non-existence for a = 2", criterion7},
      {"commutator table", criterion8},
      {"semi-quasihomogeneous corollaries", criterion9},
      {"property suites", criterion10},
      {"numeric fallback", criterion11},
  };
  int failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    failed += !c.ok;
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed in " << secs << " s\n";
  return failed == 0 ? 0 : 1;
}
