#include "liesym/symsearch.hpp"

#include <map>

#include "liesym/errors.hpp"
#include "liesym/eigen.hpp"
#include "liesym/liealg.hpp"

namespace liesym {

namespace {

struct Ansatz {
  std::vector<std::vector<Exponent>> monomials;  // per component
  std::vector<std::pair<std::size_t, Exponent>> unknowns;
};

Ansatz make_ansatz(std::vector<std::vector<Exponent>> monomials) {
  Ansatz a;
  a.monomials = std::move(monomials);
  for (std::size_t j = 0; j < a.monomials.size(); ++j)
    for (const auto& m : a.monomials[j]) a.unknowns.emplace_back(j, m);
  return a;
}

VectorField unit_field(const std::vector<std::string>& vars, std::size_t j, const Exponent& m) {
  VectorField f = VectorField::zero(vars);
  f.comps[j] = MultiPoly::monomial(m, Rat(1));
  return f;
}

// Bracket matrix against a fixed list of rows (component, monomial).
RatMatrix constraint_matrix(const VectorField& vf, const Ansatz& a,
                            const std::vector<std::pair<std::size_t, Exponent>>& rows) {
  std::map<std::pair<std::size_t, Exponent>, std::size_t> index;
  for (std::size_t r = 0; r < rows.size(); ++r) index.emplace(rows[r], r);
  RatMatrix m(rows.size(), a.unknowns.size());
  for (std::size_t c = 0; c < a.unknowns.size(); ++c) {
    const auto& [j, mono] = a.unknowns[c];
    VectorField br = lie_bracket(vf, unit_field(vf.vars, j, mono));
    for (std::size_t r = 0; r < br.dim(); ++r)
      for (const auto& [e, v] : br.comps[r].terms()) {
        auto it = index.find({r, e});
        if (it == index.end()) throw std::logic_error("bracket leaves the expected monomial support");
        m(it->second, c) = v;
      }
  }
  return m;
}

std::vector<std::pair<std::size_t, Exponent>> support_rows(const VectorField& vf, const Ansatz& a) {
  std::map<std::pair<std::size_t, Exponent>, int> seen;
  for (const auto& [j, mono] : a.unknowns) {
    VectorField br = lie_bracket(vf, unit_field(vf.vars, j, mono));
    for (std::size_t r = 0; r < br.dim(); ++r)
      for (const auto& [e, v] : br.comps[r].terms()) seen.emplace(std::make_pair(r, e), 0);
  }
  std::vector<std::pair<std::size_t, Exponent>> rows;
  for (const auto& [key, unused] : seen) rows.push_back(key);
  return rows;
}

SymmetrySpace solve_space(const VectorField& vf, const Ansatz& a, const RatMatrix& m, long degree) {
  SymmetrySpace s;
  s.degree = degree;
  for (const auto& mons : a.monomials) s.monomial_counts.push_back(mons.size());
  if (a.unknowns.empty()) return s;
  for (const auto& v : row_reduce(exact_nullspace(m))) {
    RatVector p = primitive_integer(v);
    VectorField phi = VectorField::zero(vf.vars);
    for (std::size_t c = 0; c < p.size(); ++c)
      if (p[c] != 0) phi.comps[a.unknowns[c].first] += MultiPoly::monomial(a.unknowns[c].second, p[c]);
    s.basis.push_back(std::move(phi));
  }
  s.contains_trivial = !vf.is_zero() && !s.basis.empty() && in_span(vf, s.basis);
  return s;
}

Ansatz qh_ansatz(const WeightSystem& ws, long M) {
  if (!ws.all_positive()) throw UnsupportedWeights("symmetry ansatz needs positive weights");
  std::vector<std::vector<Exponent>> mons;
  for (std::size_t j = 0; j < ws.dim(); ++j) mons.push_back(weighted_monomials(ws.S, M + ws.S[j]));
  return make_ansatz(std::move(mons));
}

}  // namespace

RatMatrix bracket_constraint_matrix(const VectorField& vf, const WeightSystem& ws, long M) {
  if (!is_quasihomogeneous(vf, ws)) throw NotQuasihomogeneous("field is not quasihomogeneous for these weights");
  Ansatz a = qh_ansatz(ws, M);
  std::vector<std::pair<std::size_t, Exponent>> rows;
  for (std::size_t r = 0; r < ws.dim(); ++r)
    for (auto& e : weighted_monomials(ws.S, M + ws.l + ws.S[r])) rows.emplace_back(r, std::move(e));
  return constraint_matrix(vf, a, rows);
}

SymmetrySpace qh_symmetry_space(const VectorField& vf, const WeightSystem& ws, long M) {
  if (!is_quasihomogeneous(vf, ws)) throw NotQuasihomogeneous("field is not quasihomogeneous for these weights");
  Ansatz a = qh_ansatz(ws, M);
  return solve_space(vf, a, constraint_matrix(vf, a, support_rows(vf, a)), M);
}

std::string to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::NoNontrivialAnalyticSymmetries: return "NoNontrivialAnalyticSymmetries";
    case ScanVerdict::NontrivialSymmetriesFound: return "NontrivialSymmetriesFound";
    case ScanVerdict::UpToDegree: return "UpToDegree";
  }
  return "?";
}

std::size_t SymmetryScan::nontrivial_total() const {
  std::size_t t = 0;
  for (const auto& s : spaces) t += s.nontrivial_dim();
  return t;
}

SymmetryScan analytic_symmetry_scan(const VectorField& vf, const WeightSystem& ws, long m_min, long m_max,
                                    bool certified) {
  if (m_min > m_max) throw std::invalid_argument("empty degree range");
  SymmetryScan scan;
  scan.m_min = m_min;
  scan.m_max = m_max;
  scan.certified = certified;
  for (long M = m_min; M <= m_max; ++M) scan.spaces.push_back(qh_symmetry_space(vf, ws, M));
  if (scan.nontrivial_total() > 0)
    scan.verdict = ScanVerdict::NontrivialSymmetriesFound;
  else
    scan.verdict = certified ? ScanVerdict::NoNontrivialAnalyticSymmetries : ScanVerdict::UpToDegree;
  return scan;
}

bool is_symmetry(const VectorField& vf, const VectorField& phi) { return lie_bracket(vf, phi).is_zero(); }

SymmetrySpace leading_order_space(const VectorField& vf, long k) {
  const std::size_t n = vf.dim();
  RatVector zero(n);
  for (const auto& v : eval(vf, zero))
    if (v != 0) throw HypothesisError("the origin is not an equilibrium");
  RatMatrix A = eval(jacobian(vf), zero);
  VectorField lin = VectorField::zero(vf.vars);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) lin.comps[r] += A(r, c) * MultiPoly::variable(n, c);
  std::vector<long> ones(n, 1);
  std::vector<std::vector<Exponent>> mons(n, weighted_monomials(ones, k));
  Ansatz a = make_ansatz(std::move(mons));
  SymmetrySpace s = solve_space(lin, a, constraint_matrix(lin, a, support_rows(lin, a)), k);
  return s;
}

LinearPartCheck linear_part_hypotheses(const VectorField& vf) {
  RatVector zero(vf.dim());
  for (const auto& v : eval(vf, zero))
    if (v != 0) throw HypothesisError("the origin is not an equilibrium");
  RatMatrix A = eval(jacobian(vf), zero);
  return {determinant(A) != 0, eigen_split(A).diagonalizable};
}

}  // namespace liesym
