#include "liesym/quasi.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "liesym/errors.hpp"
#include "liesym/matrix.hpp"

namespace liesym {

WeightSystem WeightSystem::from_weights(std::vector<Rat> g) {
  WeightSystem ws;
  Int l = lcm_of_denominators(g);
  if (!l.fits_slong_p()) throw UnsupportedWeights("ramification degree too large");
  ws.l = l.get_si();
  for (const auto& gi : g) {
    Rat s = gi * ws.l;
    ws.S.push_back(s.get_num().get_si());
  }
  ws.g = std::move(g);
  return ws;
}

bool WeightSystem::all_positive() const {
  return std::all_of(g.begin(), g.end(), [](const Rat& x) { return x > 0; });
}

std::string WeightSystem::str() const {
  std::ostringstream os;
  os << "g = (";
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << to_string(g[i]);
  os << "), l = " << l;
  return os.str();
}

namespace {

struct MonomialRef {
  std::size_t component;
  Exponent k;
};

std::string describe(const MonomialRef& m, const VectorField& vf) {
  return to_string(MultiPoly::monomial(m.k, Rat(1)), vf.vars) + " in the equation for " + vf.vars[m.component];
}

RatVector weight_row(const MonomialRef& m, std::size_t n) {
  RatVector row(n);
  for (std::size_t i = 0; i < n; ++i) row[i] = m.k[i];
  row[m.component] -= 1;
  return row;
}

bool consistent(const std::vector<MonomialRef>& eqs, std::size_t n) {
  std::vector<RatVector> rows;
  RatVector rhs;
  for (const auto& e : eqs) {
    rows.push_back(weight_row(e, n));
    rhs.push_back(Rat(1));
  }
  return solve_affine(from_rows(rows, n), rhs).has_value();
}

}  // namespace

WeightSolution find_weights(const VectorField& vf) {
  const std::size_t n = vf.dim();
  std::vector<MonomialRef> eqs;
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [k, c] : vf.comps[j].terms()) eqs.push_back({j, k});

  std::vector<RatVector> rows;
  RatVector rhs;
  for (const auto& e : eqs) {
    rows.push_back(weight_row(e, n));
    rhs.push_back(Rat(1));
  }
  auto sol = solve_affine(from_rows(rows, n), rhs);
  if (!sol) {
    // Locate the first monomial that breaks consistency and a partner it clashes with.
    std::vector<MonomialRef> prefix;
    for (const auto& e : eqs) {
      prefix.push_back(e);
      if (consistent(prefix, n)) continue;
      const MonomialRef* partner = &prefix[prefix.size() - 2];
      for (std::size_t i = 0; i + 1 < prefix.size(); ++i)
        if (!consistent({prefix[i], e}, n)) {
          partner = &prefix[i];
          break;
        }
      throw NotQuasihomogeneous("no weights make the system quasihomogeneous: monomial " + describe(e, vf) +
                                " conflicts with " + describe(*partner, vf));
    }
    throw NotQuasihomogeneous("no weights make the system quasihomogeneous");
  }
  WeightSolution out;
  out.particular = sol->particular;
  out.basis = sol->basis;
  if (out.basis.empty()) out.unique = WeightSystem::from_weights(out.particular);
  return out;
}

std::optional<WeightSystem> canonical_weights(const WeightSolution& sol, long max_l, long max_s) {
  if (sol.unique) return sol.unique->all_positive() ? sol.unique : std::nullopt;
  const std::size_t n = sol.particular.size();
  const std::size_t d = sol.basis.size();
  // Parametrization g = particular + B t; coordinate constraints g_i = v are linear in t.
  RatMatrix b(n, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < n; ++r) b(r, c) = sol.basis[c][r];

  for (long l = 1; l <= max_l; ++l) {
    std::vector<RatVector> rows;
    RatVector rhs;
    std::vector<Rat> chosen;
    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
      if (i == n) return true;
      // Is g_i already forced by earlier choices?
      std::optional<AffineSolution> cur;
      if (rows.empty()) {
        cur = AffineSolution{RatVector(d), {}};
        for (std::size_t c = 0; c < d; ++c) {
          RatVector e(d);
          e[c] = 1;
          cur->basis.push_back(e);
        }
      } else {
        cur = solve_affine(from_rows(rows, d), rhs);
        if (!cur) return false;
      }
      RatVector brow = b.row(i);
      auto dot = [&](const RatVector& t) {
        Rat s = 0;
        for (std::size_t c = 0; c < d; ++c) s += brow[c] * t[c];
        return s;
      };
      bool forced = std::all_of(cur->basis.begin(), cur->basis.end(), [&](const RatVector& v) { return dot(v) == 0; });
      auto try_value = [&](const Rat& gi) {
        rows.push_back(brow);
        rhs.push_back(gi - sol.particular[i]);
        chosen.push_back(gi);
        if (search(i + 1)) return true;
        rows.pop_back();
        rhs.pop_back();
        chosen.pop_back();
        return false;
      };
      if (forced) {
        Rat gi = sol.particular[i] + dot(cur->particular);
        Rat s = gi * l;
        if (gi <= 0 || !is_integer(s)) return false;
        return try_value(gi);
      }
      for (long s = 1; s <= max_s; ++s)
        if (try_value(make_rat(s, l))) return true;
      return false;
    };
    if (search(0)) {
      WeightSystem ws = WeightSystem::from_weights(chosen);
      if (ws.l == l) return ws;
    }
  }
  return std::nullopt;
}

long weighted_deviation(const Exponent& k, std::size_t j, const WeightSystem& ws) {
  long s = 0;
  for (std::size_t i = 0; i < k.size(); ++i) s += ws.S[i] * k[i];
  return s - ws.S[j] - ws.l;
}

bool is_quasihomogeneous(const VectorField& vf, const WeightSystem& ws) {
  if (vf.dim() != ws.dim()) throw DimensionError("weights and vector field differ in dimension");
  for (std::size_t j = 0; j < vf.dim(); ++j)
    for (const auto& [k, c] : vf.comps[j].terms())
      if (weighted_deviation(k, j, ws) != 0) return false;
  return true;
}

long qh_degree(const MultiPoly& p, const WeightSystem& ws) {
  if (p.nvars() != ws.dim()) throw DimensionError("weights and polynomial differ in dimension");
  if (p.is_zero()) throw NotQuasihomogeneous("the zero polynomial has no quasihomogeneous degree");
  std::optional<long> deg;
  for (const auto& [k, c] : p.terms()) {
    long s = 0;
    for (std::size_t i = 0; i < k.size(); ++i) s += ws.S[i] * k[i];
    if (deg && *deg != s)
      throw NotQuasihomogeneous("monomials of weighted degrees " + std::to_string(*deg) + " and " + std::to_string(s) +
                                " are mixed");
    deg = s;
  }
  return *deg;
}

long symmetry_degree(const VectorField& phi, const WeightSystem& ws) {
  if (phi.dim() != ws.dim()) throw DimensionError("weights and vector field differ in dimension");
  std::optional<long> m;
  for (std::size_t i = 0; i < phi.dim(); ++i) {
    if (phi.comps[i].is_zero()) continue;
    long mi = qh_degree(phi.comps[i], ws) - ws.S[i];
    if (m && *m != mi)
      throw NotQuasihomogeneous("components imply symmetry degrees " + std::to_string(*m) + " and " + std::to_string(mi));
    m = mi;
  }
  if (!m) throw NotQuasihomogeneous("the zero vector field has no degree");
  return *m;
}

std::string to_string(SqhSign s) {
  switch (s) {
    case SqhSign::Positive: return "Positive";
    case SqhSign::Negative: return "Negative";
    case SqhSign::ExactlyQuasihomogeneous: return "ExactlyQuasihomogeneous";
  }
  return "?";
}

SqhDecomposition sqh_decompose(const VectorField& vf, const WeightSystem& ws) {
  if (vf.dim() != ws.dim()) throw DimensionError("weights and vector field differ in dimension");
  SqhDecomposition d{VectorField::zero(vf.vars), VectorField::zero(vf.vars), SqhSign::ExactlyQuasihomogeneous};
  bool pos = false, neg = false;
  for (std::size_t j = 0; j < vf.dim(); ++j) {
    for (const auto& [k, c] : vf.comps[j].terms()) {
      long dev = weighted_deviation(k, j, ws);
      if (dev == 0) {
        d.core.comps[j].add_term(k, c);
      } else {
        (dev > 0 ? pos : neg) = true;
        d.rest.comps[j].add_term(k, c);
      }
    }
  }
  if (pos && neg) throw NotSemiQuasihomogeneous("monomials deviate from the weights " + ws.str() + " in both directions");
  d.sign = pos ? SqhSign::Positive : neg ? SqhSign::Negative : SqhSign::ExactlyQuasihomogeneous;
  return d;
}

VectorField truncate(const VectorField& vf, const WeightSystem& ws) { return sqh_decompose(vf, ws).core; }

std::vector<Exponent> weighted_monomials(std::span<const long> S, long degree) {
  for (long s : S)
    if (s <= 0) throw UnsupportedWeights("weighted monomial enumeration needs positive weights");
  std::vector<Exponent> out;
  if (degree < 0) return out;
  Exponent k(S.size(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i + 1 == S.size()) {
      if (left % S[i] == 0) {
        k[i] = static_cast<int>(left / S[i]);
        out.push_back(k);
      }
      return;
    }
    for (long e = left / S[i]; e >= 0; --e) {
      k[i] = static_cast<int>(e);
      rec(i + 1, left - e * S[i]);
    }
  };
  if (S.empty()) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  rec(0, degree);
  return out;
}

VectorField euler_field(const WeightSystem& ws, const std::vector<std::string>& vars) {
  VectorField w = VectorField::zero(vars);
  for (std::size_t i = 0; i < ws.dim(); ++i) w.comps[i] = ws.g[i] * MultiPoly::variable(ws.dim(), i);
  return w;
}

}  // namespace liesym
