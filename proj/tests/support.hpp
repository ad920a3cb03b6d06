#pragma once

#include <random>
#include <string>
#include <vector>

#include "liesym/liealg.hpp"
#include "liesym/parse.hpp"
#include "liesym/quasi.hpp"
#include "liesym/vfield.hpp"

namespace testsupport {

using namespace liesym;

inline MultiPoly P(const std::string& text, const std::vector<std::string>& vars = {"x1", "x2"}) {
  std::string src = "vars:";
  for (const auto& v : vars) src += " " + v;
  src += "\neq " + vars[0] + "' = " + text + "\n";
  for (std::size_t i = 1; i < vars.size(); ++i) src += "eq " + vars[i] + "' = 0\n";
  return parse_system(src).equations.comps[0];
}

inline VectorField field(const std::vector<std::string>& comps, const std::vector<std::string>& vars = {"x1", "x2"}) {
  std::vector<MultiPoly> c;
  for (const auto& s : comps) c.push_back(P(s, vars));
  return VectorField(vars, c);
}

// x1' = x1^2 + x1 x2, x2' = a x1 x2 + x2^2
inline VectorField family(const Rat& a) {
  return field({"x1^2 + x1*x2", to_string(a) + "*x1*x2 + x2^2"});
}

inline VectorField X1() { return field({"x1", "-x1"}); }
inline VectorField X2() { return field({"x2", "-x2"}); }
inline VectorField X3() { return field({"x1^2", "x1*x2"}); }
inline VectorField X4() { return field({"x1*x2", "x2^2"}); }

inline Rat small_rat(std::mt19937& rng, int num = 4, int den = 3) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  return make_rat(n(rng), d(rng));
}

inline Rat nonzero_rat(std::mt19937& rng, int num = 3, int den = 2) {
  Rat r;
  do r = small_rat(rng, num, den);
  while (r == 0);
  return r;
}

inline MultiPoly random_poly(std::mt19937& rng, std::size_t nvars, int max_deg, int terms) {
  MultiPoly p(nvars);
  std::uniform_int_distribution<int> e(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    Exponent ex(nvars);
    for (auto& v : ex) v = e(rng);
    p.add_term(ex, small_rat(rng));
  }
  return p;
}

inline VectorField random_field(std::mt19937& rng, std::size_t n, int max_deg = 2, int terms = 3) {
  std::vector<MultiPoly> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_poly(rng, n, max_deg, terms));
  return VectorField(default_var_names(n), c);
}

inline Rat monomial_value(const Exponent& e, const RatVector& c) {
  Rat v = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int k = 0; k < e[i]; ++k) v *= c[i];
  return v;
}

struct Generated {
  VectorField vf;
  WeightSystem ws;
  RatVector c;  // a balance planted by construction
};

// Random 2-D system, quasihomogeneous for ws, with f(c) + G c = 0 forced by
// solving for one coefficient per component.
inline Generated random_qh_with_balance(std::mt19937& rng, const WeightSystem& ws) {
  const std::size_t n = ws.dim();
  Generated out;
  out.ws = ws;
  for (std::size_t i = 0; i < n; ++i) out.c.push_back(nonzero_rat(rng));
  std::vector<MultiPoly> comps;
  for (std::size_t j = 0; j < n; ++j) {
    auto mons = weighted_monomials(ws.S, ws.l + ws.S[j]);
    MultiPoly p(n);
    for (std::size_t m = 1; m < mons.size(); ++m) p.add_term(mons[m], small_rat(rng, 3, 2));
    // Solve for the coefficient of mons[0].
    Rat rest = eval(p, out.c) + ws.g[j] * out.c[j];
    p.add_term(mons[0], -rest / monomial_value(mons[0], out.c));
    comps.push_back(p);
  }
  out.vf = VectorField(default_var_names(n), comps);
  return out;
}

inline const std::vector<std::vector<Rat>>& weight_families() {
  static const std::vector<std::vector<Rat>> w = {
      {1, 1}, {1, 2}, {2, 1}, {2, 3}, {1, 3}, {Rat(1, 2), 1}};
  return w;
}

}  // namespace testsupport
