#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "../support.hpp"
#include "liesym/errors.hpp"
#include "liesym/kowalevskaya.hpp"

using namespace liesym;
using testsupport::field;

namespace {

WeightSystem W(std::vector<Rat> g) { return WeightSystem::from_weights(std::move(g)); }

bool has_balance(const BalanceSearch& s, const RatVector& c) {
  return std::any_of(s.balances.begin(), s.balances.end(), [&](const Balance& b) { return b.exact && b.c == c; });
}

std::vector<Rat> exact_exponents(const Balance& b) {
  std::vector<Rat> out;
  for (const auto& e : b.exponents) {
    REQUIRE(e.is_exact());
    out.push_back(e.exact());
  }
  return out;
}

}  // namespace

TEST_CASE("verify_balance") {
  WeightSystem ws = W({1, 1});
  RatVector c{5, -6};
  CHECK(verify_balance(testsupport::family(1), ws, c));
  RatVector zero{0, 0};
  CHECK_FALSE(verify_balance(testsupport::family(1), ws, zero));
  RatVector off{1, -1};
  CHECK_FALSE(verify_balance(testsupport::family(1), ws, off));
  std::vector<std::complex<double>> z{{-1, 0}, {1e-13, 0}};
  CHECK(verify_balance(testsupport::family(2), ws, z));
  std::vector<std::complex<double>> far{{-1, 0}, {1e-3, 0}};
  CHECK_FALSE(verify_balance(testsupport::family(2), ws, far));
}

TEST_CASE("isolated balances of the example family") {
  WeightSystem ws = W({1, 1});
  for (int a : {2, 3, 5, -1}) {
    CAPTURE(a);
    auto s = find_balances(testsupport::family(a), ws);
    CHECK_FALSE(s.family_detected);
    CHECK_FALSE(s.incomplete);
    REQUIRE(s.balances.size() == 2);
    CHECK(has_balance(s, {-1, 0}));
    CHECK(has_balance(s, {0, -1}));
    for (const auto& b : s.balances) CHECK(b.isolated);
  }
}

TEST_CASE("one-dimensional balance") {
  auto s = find_balances(field({"x1^2"}, {"x1"}), W({1}));
  REQUIRE(s.balances.size() == 1);
  CHECK(s.balances[0].c == RatVector{-1});
  CHECK(exact_exponents(s.balances[0]) == std::vector<Rat>{-1});
  CHECK(s.balances[0].K->operator()(0, 0) == -1);
}

TEST_CASE("balance family at a = 1") {
  WeightSystem ws = W({1, 1});
  auto s = find_balances(testsupport::family(1), ws);
  CHECK(s.family_detected);
  CHECK(has_balance(s, {0, -1}));
  CHECK(has_balance(s, {1, -2}));
  for (const auto& b : s.balances) {
    CHECK(verify_balance(testsupport::family(1), ws, b.c));
    CHECK(exact_exponents(b) == std::vector<Rat>{-1, 0});
  }
  // Every member c = (t, -1 - t) has exponents {-1, 0}.
  for (int t = -5; t <= 5; ++t) {
    RatVector c{Rat(t), Rat(-1 - t)};
    Balance b = make_balance(testsupport::family(1), ws, c, false);
    CHECK(exact_exponents(b) == std::vector<Rat>{-1, 0});
    CHECK(b.diagonalizable);
  }
}

TEST_CASE("Kowalevskaya matrices of the example family") {
  WeightSystem ws = W({1, 1});
  RatVector c1{-1, 0}, c2{0, -1};
  for (int a : {2, 3, 5}) {
    CAPTURE(a);
    auto vf = testsupport::family(a);
    RatMatrix K1 = kowalevskaya_matrix(vf, ws, c1);
    CHECK(K1 == RatMatrix{{-1, -1}, {0, Rat(1 - a)}});
    RatMatrix K2 = kowalevskaya_matrix(vf, ws, c2);
    CHECK(K2 == RatMatrix{{0, 0}, {Rat(-a), -1}});
    Balance b1 = make_balance(vf, ws, c1);
    CHECK(exact_exponents(b1) == std::vector<Rat>{-1, Rat(1 - a)});
    CHECK(b1.diagonalizable == (a != 2));
    CHECK(b1.diagonalizable_exact);
    Balance b2 = make_balance(vf, ws, c2);
    CHECK(exact_exponents(b2) == std::vector<Rat>{-1, 0});
    CHECK(b2.diagonalizable);
    CHECK(check_minus_one(b1));
    CHECK(check_minus_one(b2));
    CHECK(b1.q == RatVector{-1, 0});
  }
  RatVector bad{1, 1};
  CHECK_THROWS_AS(kowalevskaya_matrix(testsupport::family(2), ws, bad), HypothesisError);
}

TEST_CASE("irrational exponents stay numeric") {
  auto vf = field({"x1^2", "2*x1*x2 + x1*x3", "x1*x2 + x1*x3"}, {"x1", "x2", "x3"});
  auto s = find_balances(vf, W({1, 1, 1}));
  CHECK(s.incomplete);
  REQUIRE(s.balances.size() == 1);
  const Balance& b = s.balances[0];
  REQUIRE(b.exact);
  CHECK(b.c == RatVector{-1, 0, 0});
  REQUIRE(b.exponents.size() == 3);
  CHECK(b.exponents[0] == AlgNum(Rat(-1)));
  std::vector<double> rest;
  for (std::size_t i = 1; i < 3; ++i) {
    CHECK_FALSE(b.exponents[i].is_exact());
    CHECK(std::abs(b.exponents[i].approx().imag()) < 1e-9);
    rest.push_back(b.exponents[i].approx().real());
  }
  std::sort(rest.begin(), rest.end());
  CHECK(rest[0] == doctest::Approx((-1 - std::sqrt(5.0)) / 2).epsilon(1e-9));
  CHECK(rest[1] == doctest::Approx((-1 + std::sqrt(5.0)) / 2).epsilon(1e-9));
  CHECK(b.diagonalizable);
  CHECK(check_minus_one(b));
}

TEST_CASE("companion system") {
  WeightSystem ws = W({1, 1});
  auto vf = testsupport::family(3);
  RatVector c{-1, 0};
  auto cs = companion_system(vf, ws, c, true);
  CHECK(cs.K == kowalevskaya_matrix(vf, ws, c));
  // Quadratic fields are their own second-order remainder.
  for (std::size_t i = 0; i < 2; ++i) CHECK(cs.f_tilde.comps[i] == vf.comps[i]);
  for (const auto& p : cs.f_tilde.comps) {
    for (const auto& [e, coef] : p.terms()) {
      int d = 0;
      for (auto v : e) d += v;
      CHECK(d >= 2);
    }
  }
  REQUIRE(cs.extended);
  CHECK(cs.extended->dim() == 3);
  CHECK(cs.extended->comps[0] == -MultiPoly::variable(3, 0));
  // u' = K u + f~(u)
  for (std::size_t i = 0; i < 2; ++i) {
    MultiPoly lin(2);
    for (std::size_t j = 0; j < 2; ++j) lin += cs.K(i, j) * MultiPoly::variable(2, j);
    CHECK(cs.system.comps[i] == lin + cs.f_tilde.comps[i]);
  }
}

TEST_CASE("companion system of a cubic keeps higher order terms") {
  WeightSystem ws = W({make_rat(1, 2), make_rat(1, 2)});
  auto vf = field({"-2*x1^3", "-2*x2^3"});
  auto s = find_balances(vf, ws);
  CHECK(s.balances.size() == 8);
  for (const auto& b : s.balances) {
    REQUIRE(b.exact);
    auto cs = companion_system(vf, ws, b.c);
    CHECK_FALSE(cs.extended);
    for (const auto& p : cs.f_tilde.comps)
      for (const auto& [e, coef] : p.terms()) CHECK(e[0] + e[1] >= 2);
    for (std::size_t i = 0; i < 2; ++i) CHECK(homogeneous_part(cs.f_tilde.comps[i], 3) == vf.comps[i]);
  }
}

TEST_CASE("planted balances on random quasihomogeneous systems") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& g = testsupport::weight_families()[trial % testsupport::weight_families().size()];
    auto gen = testsupport::random_qh_with_balance(rng, W(g));
    CAPTURE(to_string(gen.vf));
    REQUIRE(verify_balance(gen.vf, gen.ws, gen.c));
    auto s = find_balances(gen.vf, gen.ws);
    if (!s.family_detected) CHECK(has_balance(s, gen.c));
    for (const auto& b : s.balances) {
      CHECK(verify_balance(gen.vf, gen.ws, b.c_numeric));
      if (!b.exact) continue;
      CHECK(verify_balance(gen.vf, gen.ws, b.c));
      CHECK(check_minus_one(b));
      CHECK(b.exponents.front() == AlgNum(Rat(-1)));
    }
  }
}
