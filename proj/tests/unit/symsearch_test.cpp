#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "liesym/errors.hpp"
#include "liesym/liealg.hpp"
#include "liesym/resonance.hpp"
#include "liesym/symsearch.hpp"

using namespace liesym;
using testsupport::field;

namespace {

WeightSystem W(std::vector<Rat> g) { return WeightSystem::from_weights(std::move(g)); }

std::vector<std::size_t> dims(const VectorField& vf, const WeightSystem& ws, long lo, long hi) {
  std::vector<std::size_t> out;
  for (long M = lo; M <= hi; ++M) out.push_back(qh_symmetry_space(vf, ws, M).dim());
  return out;
}

}  // namespace

TEST_CASE("example family at a = 1") {
  WeightSystem ws = W({1, 1});
  auto vf = testsupport::family(1);
  CHECK(dims(vf, ws, -1, 1) == std::vector<std::size_t>{0, 2, 2});
  auto s0 = qh_symmetry_space(vf, ws, 0);
  CHECK(same_span(s0.basis, {testsupport::X1(), testsupport::X2()}));
  CHECK_FALSE(s0.contains_trivial);
  auto s1 = qh_symmetry_space(vf, ws, 1);
  CHECK(same_span(s1.basis, {testsupport::X3(), testsupport::X4()}));
  CHECK(s1.contains_trivial);
  CHECK(s1.nontrivial_dim() == 1);
  CHECK(s1.monomial_counts == std::vector<std::size_t>{3, 3});
}

TEST_CASE("example family at a = 2") {
  WeightSystem ws = W({1, 1});
  auto vf = testsupport::family(2);
  CHECK(dims(vf, ws, -1, 1) == std::vector<std::size_t>{0, 0, 1});
  auto s1 = qh_symmetry_space(vf, ws, 1);
  CHECK(same_span(s1.basis, {vf}));
  CHECK(s1.nontrivial_dim() == 0);
  auto scan = analytic_symmetry_scan(vf, ws, -1, 1, true);
  CHECK(scan.verdict == ScanVerdict::NoNontrivialAnalyticSymmetries);
  CHECK(scan.nontrivial_total() == 0);
  CHECK(scan.spaces.size() == 3);
  auto open = analytic_symmetry_scan(vf, ws, -1, 1, false);
  CHECK(open.verdict == ScanVerdict::UpToDegree);
  CHECK_FALSE(open.certified);
}

TEST_CASE("constraint matrix at a = 2, M = 1 against brute force") {
  WeightSystem ws = W({1, 1});
  auto vf = testsupport::family(2);
  RatMatrix m = bracket_constraint_matrix(vf, ws, 1);
  CHECK(m.rows() == 8);
  CHECK(m.cols() == 6);
  CHECK(rank(m) == 5);
  // All integer ansatz fields with coefficients in [-2, 2] that commute with f.
  const std::vector<Exponent> mons{{2, 0}, {1, 1}, {0, 2}};
  std::vector<std::vector<int>> hits;
  std::vector<int> v(6, -2);
  while (true) {
    std::vector<MultiPoly> comps(2, MultiPoly(2));
    for (std::size_t i = 0; i < 6; ++i) comps[i / 3].add_term(mons[i % 3], v[i]);
    VectorField phi(vf.vars, comps);
    if (lie_bracket(vf, phi).is_zero()) hits.push_back(v);
    std::size_t i = 0;
    while (i < 6 && v[i] == 2) v[i++] = -2;
    if (i == 6) break;
    ++v[i];
  }
  // Only multiples of f itself: (1, 1, 0 | 0, 2, 1) up to scale.
  CHECK(hits.size() == 3);
  for (const auto& h : hits) CHECK(h == std::vector<int>{h[0], h[0], 0, 0, 2 * h[0], h[0]});
}

TEST_CASE("one-dimensional system") {
  auto vf = field({"x1^2"}, {"x1"});
  WeightSystem ws = W({1});
  CHECK(dims(vf, ws, -1, 3) == std::vector<std::size_t>{0, 0, 1, 0, 0});
  auto scan = analytic_symmetry_scan(vf, ws, -1, 1, true);
  CHECK(scan.verdict == ScanVerdict::NoNontrivialAnalyticSymmetries);
}

TEST_CASE("weights must be positive and the field quasihomogeneous") {
  CHECK_THROWS_AS(qh_symmetry_space(field({"x2", "0"}), W({make_rat(-1, 2), make_rat(1, 2)}), 0), UnsupportedWeights);
  auto lv = field({"x1 + x1^2", "x2^2"});
  CHECK_THROWS_AS(qh_symmetry_space(lv, W({1, 1}), 0), NotQuasihomogeneous);
}

TEST_CASE("is_symmetry") {
  CHECK(is_symmetry(testsupport::family(1), testsupport::X1()));
  CHECK(is_symmetry(testsupport::family(1), testsupport::X4()));
  CHECK_FALSE(is_symmetry(testsupport::family(2), testsupport::X1()));
  CHECK(is_symmetry(testsupport::family(7), testsupport::family(7)));
  CHECK(is_symmetry(testsupport::family(7), VectorField::zero({"x1", "x2"})));
}

TEST_CASE("leading order spaces of linear parts") {
  auto d12 = field({"x1 + x2^3", "2*x2"});
  auto s = leading_order_space(d12, 2);
  REQUIRE(s.dim() == 1);
  CHECK(same_span(s.basis, {field({"0", "x1^2"})}));
  CHECK(leading_order_space(field({"x1", "3*x2"}), 2).dim() == 0);
  auto lin = leading_order_space(field({"x1", "2*x2"}), 1);
  CHECK(same_span(lin.basis, {field({"x1", "0"}), field({"0", "x2"})}));
  CHECK_THROWS_AS(leading_order_space(field({"1 + x1", "x2"}), 2), HypothesisError);
  // Zero linear part: every homogeneous field commutes with it.
  CHECK(leading_order_space(testsupport::family(2), 2).dim() == 6);
}

TEST_CASE("scan results on random quasihomogeneous systems") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto& g = testsupport::weight_families()[trial % testsupport::weight_families().size()];
    auto gen = testsupport::random_qh_with_balance(rng, W(g));
    CAPTURE(to_string(gen.vf));
    for (long M = -gen.ws.S.back(); M <= gen.ws.l + 1; ++M) {
      auto sp = qh_symmetry_space(gen.vf, gen.ws, M);
      RatMatrix m = bracket_constraint_matrix(gen.vf, gen.ws, M);
      CHECK(sp.dim() == m.cols() - rank(m));
      for (const auto& phi : sp.basis) {
        CHECK(is_symmetry(gen.vf, phi));
        CHECK(symmetry_degree(phi, gen.ws) == M);
      }
      if (M == gen.ws.l) CHECK(sp.contains_trivial);
      CHECK(sp.contains_trivial == (M == gen.ws.l && in_span(gen.vf, sp.basis)));
    }
  }
}

TEST_CASE("linear part hypotheses") {
  auto h = linear_part_hypotheses(field({"x1 + x2", "x2"}));
  CHECK(h.det_nonzero);
  CHECK_FALSE(h.diagonalizable);
  auto z = linear_part_hypotheses(field({"x1", "x1^2"}));
  CHECK_FALSE(z.det_nonzero);
  CHECK(z.diagonalizable);
  CHECK_THROWS_AS(linear_part_hypotheses(field({"x1", "1"})), HypothesisError);
}

TEST_CASE("leading order spaces agree with equilibrium resonances") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> ev(-3, 4), dim(2, 3), ord(2, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = dim(rng);
    std::vector<Rat> lam;
    while (lam.size() < n) {
      Rat v = ev(rng);
      if (std::find(lam.begin(), lam.end(), v) == lam.end()) lam.push_back(v);
    }
    auto vars = default_var_names(n);
    std::vector<MultiPoly> comps;
    for (std::size_t i = 0; i < n; ++i) comps.push_back(lam[i] * MultiPoly::variable(n, i));
    VectorField lin(vars, comps);
    const long k = ord(rng);
    auto sp = leading_order_space(lin, k);
    auto res = equilibrium_resonances(std::vector<AlgNum>(lam.begin(), lam.end()), k);
    CAPTURE(to_string(lin));
    // For diagonal A the space is spanned by x^m d/dx_j with m . lambda = lambda_j.
    CHECK(sp.dim() == res.particular.size());
    for (const auto& phi : sp.basis) CHECK(lie_bracket(lin, phi).is_zero());
  }
}
