#include "liesym/kowalevskaya.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "liesym/bivariate.hpp"
#include "liesym/errors.hpp"
#include "liesym/upoly.hpp"

namespace liesym {

namespace {

using cd = std::complex<double>;

// h_j(x) = f^j(x) + g_j x^j; balances are the nonzero zeros of h.
std::vector<MultiPoly> balance_map(const VectorField& vf, const WeightSystem& ws) {
  std::vector<MultiPoly> h;
  for (std::size_t j = 0; j < vf.dim(); ++j) h.push_back(vf.comps[j] + ws.g[j] * MultiPoly::variable(vf.dim(), j));
  return h;
}

bool is_origin(std::span<const Rat> c) {
  return std::all_of(c.begin(), c.end(), [](const Rat& v) { return v == 0; });
}

bool near_origin(std::span<const cd> c) {
  double s = 0;
  for (auto v : c) s += std::norm(v);
  return std::sqrt(s) < 1e-8;
}

double dist(std::span<const cd> a, std::span<const cd> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

std::vector<cd> to_complex(std::span<const Rat> c) {
  std::vector<cd> out;
  for (const auto& v : c) out.emplace_back(v.get_d(), 0.0);
  return out;
}

// Solves a x = b in place by Gaussian elimination with partial pivoting.
bool complex_solve(std::vector<std::vector<cd>> a, std::vector<cd>& b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    if (std::abs(a[p][k]) < 1e-300) return false;
    std::swap(a[p], a[k]);
    std::swap(b[p], b[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      cd f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = k + 1; j < n; ++j) b[k] -= a[k][j] * b[j];
    b[k] /= a[k][k];
  }
  return true;
}

double residual(const std::vector<MultiPoly>& h, std::span<const cd> x) {
  double s = 0;
  for (const auto& p : h) s = std::max(s, std::abs(eval(p, x)));
  return s;
}

// Newton iteration on the square system h = 0. Returns true on convergence.
bool newton(const std::vector<MultiPoly>& h, const PolyMatrix& jac, std::vector<cd>& x, int max_iter = 80) {
  const std::size_t n = x.size();
  for (int it = 0; it < max_iter; ++it) {
    std::vector<cd> rhs(n);
    for (std::size_t j = 0; j < n; ++j) rhs[j] = -eval(h[j], std::span<const cd>(x));
    double scale = 1;
    for (auto v : x) scale = std::max(scale, std::abs(v));
    if (std::abs(*std::max_element(rhs.begin(), rhs.end(), [](cd a, cd b) { return std::abs(a) < std::abs(b); })) <
        1e-13 * scale * scale)
      return true;
    std::vector<std::vector<cd>> a(n, std::vector<cd>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a[r][c] = eval(jac[r][c], std::span<const cd>(x));
    if (!complex_solve(a, rhs)) return false;
    for (std::size_t i = 0; i < n; ++i) x[i] += rhs[i];
    double mag = 0;
    for (auto v : x) mag = std::max(mag, std::abs(v));
    if (!std::isfinite(mag) || mag > 1e12) return false;
  }
  double scale = 1;
  for (auto v : x) scale = std::max(scale, std::abs(v));
  return residual(h, x) < 1e-9 * scale * scale;
}

// Tries to read a numeric solution as rational and confirm it exactly.
std::optional<RatVector> reconstruct(const std::vector<MultiPoly>& h, std::span<const cd> x) {
  RatVector c;
  for (auto v : x) {
    if (std::abs(v.imag()) > 1e-7 * (1 + std::abs(v.real()))) return std::nullopt;
    c.push_back(rational_approximation(static_cast<long double>(v.real()), Int(10000)));
  }
  for (const auto& p : h)
    if (eval(p, c) != 0) return std::nullopt;
  return c;
}

std::vector<AlgNum> minus_one_first(std::vector<AlgNum> roots, double tol) {
  auto is_minus_one = [tol](const AlgNum& a) {
    if (a.is_exact()) return a.exact() == -1;
    return std::abs(a.approx() - cd(-1.0, 0.0)) < tol * 10;
  };
  auto it = std::find_if(roots.begin(), roots.end(), is_minus_one);
  if (it != roots.end()) std::rotate(roots.begin(), it, it + 1);
  return roots;
}

struct Collector {
  const VectorField& vf;
  const WeightSystem& ws;
  const BalanceOptions& opts;
  BalanceSearch& out;

  bool has_exact(const RatVector& c) const {
    return std::any_of(out.balances.begin(), out.balances.end(), [&](const Balance& b) { return b.exact && b.c == c; });
  }
  bool has_numeric(std::span<const cd> c) const {
    return std::any_of(out.balances.begin(), out.balances.end(),
                       [&](const Balance& b) { return dist(b.c_numeric, c) < 1e-6 * (1 + std::abs(c[0])); });
  }
  void add_exact(RatVector c, bool isolated) {
    if (is_origin(c) || has_exact(c)) return;
    out.balances.push_back(make_balance(vf, ws, std::move(c), isolated, opts.tol));
  }
  void add_numeric(std::vector<cd> c) {
    if (near_origin(c) || has_numeric(c)) return;
    out.balances.push_back(make_numeric_balance(vf, ws, std::move(c), opts.tol));
  }
};

// Polynomial in x only (degree 0 in y) viewed as univariate.
UPoly to_upoly_in_x(const MultiPoly& g) {
  std::vector<Rat> c(static_cast<std::size_t>(std::max(g.degree_in(0), 0) + 1));
  for (const auto& [e, v] : g.terms()) c[static_cast<std::size_t>(e[0])] += v;
  return UPoly(std::move(c));
}

void sample_family_1d(Collector& col) {
  for (int t : {1, -1, 2, -2, 3}) {
    if (static_cast<int>(col.out.balances.size()) >= col.opts.family_samples) break;
    col.add_exact({Rat(t)}, false);
  }
}

// Rational points on the curve G(x, y) = 0 at small integer abscissae (or ordinates).
void sample_family_2d(Collector& col, const MultiPoly& g) {
  int found = 0;
  static const int kTries[] = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6};
  if (g.degree_in(1) >= 1) {
    for (int t : kTries) {
      if (found >= col.opts.family_samples) break;
      UPoly gy = specialize(g, 0, Rat(t));
      if (gy.is_zero()) {
        // The whole vertical line x = t lies in the family.
        for (int s : {1, -1}) {
          col.add_exact({Rat(t), Rat(s)}, false);
          ++found;
        }
        continue;
      }
      for (const auto& r : rational_roots(squarefree_part(gy)).roots) {
        RatVector c{Rat(t), r};
        if (is_origin(c)) continue;
        col.add_exact(c, false);
        ++found;
      }
    }
  } else {
    for (const auto& x0 : rational_roots(squarefree_part(to_upoly_in_x(g))).roots) {
      for (int t : {1, -1, 2}) {
        if (found >= col.opts.family_samples) break;
        col.add_exact({x0, Rat(t)}, false);
        ++found;
      }
    }
  }
  if (found == 0) {
    col.out.incomplete = true;
    col.out.notes.push_back("balance family has no rational points at small sample values");
  }
}

void solve_two(Collector& col, const std::vector<MultiPoly>& h) {
  BalanceSearch& out = col.out;
  if (h[0].is_zero() && h[1].is_zero()) {
    out.family_detected = true;
    for (const RatVector& c : {RatVector{Rat(1), Rat(0)}, RatVector{Rat(0), Rat(1)}, RatVector{Rat(1), Rat(1)}})
      col.add_exact(c, false);
    return;
  }
  MultiPoly g = bivariate_gcd(h[0], h[1]);
  MultiPoly q1 = h[0], q2 = h[1];
  const bool family = g.total_degree() >= 1;
  if (family) {
    out.family_detected = true;
    q1 = bivariate_divide(h[0], g);
    q2 = bivariate_divide(h[1], g);
    sample_family_2d(col, g);
  }

  // Isolated zeros of (q1, q2). Balances lying on the family curve are family members.
  UPoly res = resultant(q1, q2, 1);
  if (res.is_zero()) {
    out.incomplete = true;
    out.notes.push_back("resultant vanished identically after removing the common factor");
    return;
  }
  auto on_family = [&](const RatVector& c) { return family && eval(g, c) == 0; };
  const PolyMatrix jq = {{diff(q1, 0), diff(q1, 1)}, {diff(q2, 0), diff(q2, 1)}};
  for (const auto& [factor, mult] : squarefree_factorization(res)) {
    (void)mult;
    RationalRootSplit rs = rational_roots(factor);
    for (const auto& x0 : rs.roots) {
      UPoly a = specialize(q1, 0, x0);
      UPoly b = specialize(q2, 0, x0);
      UPoly common = gcd(a, b);
      if (common.degree() < 1) continue;
      for (const auto& y : split_roots(common, col.opts.tol)) {
        if (y.is_exact()) {
          RatVector c{x0, y.exact()};
          col.add_exact(c, !on_family(c));
        } else {
          std::vector<cd> c{cd(x0.get_d(), 0), y.approx()};
          newton({q1, q2}, jq, c);
          col.add_numeric(c);
        }
      }
    }
    if (rs.cofactor.degree() < 1) continue;
    for (const auto& x0 : numeric_roots(rs.cofactor)) {
      const cd xc(static_cast<double>(x0.real()), static_cast<double>(x0.imag()));
      // Roots in y of q1(x0, y) (or q2 when q1 degenerates), filtered by q2.
      for (const MultiPoly* p : {&q1, &q2}) {
        std::vector<std::complex<long double>> coeffs(static_cast<std::size_t>(std::max(p->degree_in(1), 0) + 1));
        for (const auto& [e, v] : p->terms()) {
          std::complex<long double> t = v.get_d();
          for (int k = 0; k < e[0]; ++k) t *= std::complex<long double>(xc);
          coeffs[static_cast<std::size_t>(e[1])] += t;
        }
        bool degenerate = std::all_of(coeffs.begin() + 1, coeffs.end(),
                                      [](auto v) { return std::abs(v) < 1e-12L; });
        if (degenerate) continue;
        for (const auto& y : numeric_roots(coeffs)) {
          std::vector<cd> c{xc, cd(static_cast<double>(y.real()), static_cast<double>(y.imag()))};
          if (!newton({q1, q2}, jq, c)) continue;
          if (auto exact = reconstruct(h, c))
            col.add_exact(*exact, !on_family(*exact));
          else
            col.add_numeric(c);
        }
        break;
      }
    }
  }
}

void solve_numeric(Collector& col, const std::vector<MultiPoly>& h) {
  const std::size_t n = h.size();
  PolyMatrix jac(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) jac[r].push_back(diff(h[r], c));
  std::mt19937 rng(col.opts.seed);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int s = 0; s < col.opts.newton_starts; ++s) {
    std::vector<cd> x(n);
    // Half the starts on the real axis, where rational balances live.
    for (auto& v : x) v = cd(dist(rng), s % 2 == 0 ? 0.0 : dist(rng));
    if (!newton(h, jac, x)) continue;
    if (near_origin(x)) continue;
    if (auto exact = reconstruct(h, x)) {
      RatMatrix jc = eval(jac, *exact);
      col.add_exact(*exact, rank(jc) == n);
      if (rank(jc) < n) col.out.family_detected = true;
    } else {
      col.add_numeric(x);
    }
  }
  col.out.incomplete = true;
  col.out.notes.push_back("balances for n > 2 come from multi-start Newton and may be incomplete");
}

}  // namespace

bool verify_balance(const VectorField& vf, const WeightSystem& ws, std::span<const Rat> c) {
  if (c.size() != vf.dim()) throw DimensionError("balance vector has wrong dimension");
  if (is_origin(c)) return false;
  for (const auto& p : balance_map(vf, ws))
    if (eval(p, c) != 0) return false;
  return true;
}

bool verify_balance(const VectorField& vf, const WeightSystem& ws, std::span<const cd> c, double tol) {
  if (c.size() != vf.dim()) throw DimensionError("balance vector has wrong dimension");
  if (near_origin(c)) return false;
  double scale = 1;
  for (auto v : c) scale = std::max(scale, std::abs(v));
  return residual(balance_map(vf, ws), c) < tol * scale * scale;
}

BalanceSearch find_balances(const VectorField& vf, const WeightSystem& ws, const BalanceOptions& opts) {
  BalanceSearch out;
  Collector col{vf, ws, opts, out};
  auto h = balance_map(vf, ws);
  const std::size_t n = vf.dim();
  if (n == 1) {
    UPoly p = to_upoly(h[0]);
    if (p.is_zero()) {
      out.family_detected = true;
      sample_family_1d(col);
    } else {
      for (const auto& r : split_roots(p, opts.tol)) {
        if (r.is_exact())
          col.add_exact({r.exact()}, true);
        else
          col.add_numeric({r.approx()});
      }
    }
  } else if (n == 2) {
    solve_two(col, h);
  } else {
    solve_numeric(col, h);
  }
  std::stable_sort(out.balances.begin(), out.balances.end(), [](const Balance& a, const Balance& b) {
    if (a.exact != b.exact) return a.exact;
    if (a.exact) {
      if (a.isolated != b.isolated) return a.isolated;
      return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
    }
    return false;
  });
  return out;
}

RatMatrix kowalevskaya_matrix(const VectorField& vf, const WeightSystem& ws, std::span<const Rat> c) {
  if (!verify_balance(vf, ws, c)) throw HypothesisError("not a balance: f(c) + G c != 0 or c = 0");
  return eval(jacobian(vf), c) + ws.G();
}

EigenSplit kowalevskaya_exponents(const RatMatrix& K, double tol) {
  EigenSplit es = eigen_split(K, tol);
  es.roots = minus_one_first(std::move(es.roots), tol);
  return es;
}

bool check_minus_one(const Balance& b) {
  if (!b.exact || !b.K) return false;
  RatVector kq = (*b.K) * std::span<const Rat>(b.q);
  for (std::size_t i = 0; i < kq.size(); ++i)
    if (kq[i] != -b.q[i]) return false;
  return eval(char_upoly(*b.K), Rat(-1)) == 0;
}

Balance make_balance(const VectorField& vf, const WeightSystem& ws, RatVector c, bool isolated, double tol) {
  Balance b;
  b.exact = true;
  b.c_numeric = to_complex(c);
  b.K = kowalevskaya_matrix(vf, ws, c);
  EigenSplit es = kowalevskaya_exponents(*b.K, tol);
  b.exponents = std::move(es.roots);
  b.diagonalizable = es.diagonalizable;
  b.diagonalizable_exact = true;
  for (std::size_t i = 0; i < c.size(); ++i) b.q.push_back(ws.g[i] * c[i]);
  b.c = std::move(c);
  b.isolated = isolated;
  b.minus_one_ok = check_minus_one(b);
  return b;
}

Balance make_numeric_balance(const VectorField& vf, const WeightSystem& ws, std::vector<cd> c, double tol) {
  Balance b;
  b.exact = false;
  b.c_numeric = std::move(c);
  const std::size_t n = vf.dim();
  PolyMatrix jac = jacobian(vf);
  std::vector<std::vector<cd>> k(n, std::vector<cd>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col)
      k[r][col] = eval(jac[r][col], std::span<const cd>(b.c_numeric)) + (r == col ? ws.g[r].get_d() : 0.0);
  std::vector<AlgNum> ex;
  auto eig = numeric_eigenvalues(k);
  for (auto z : eig) ex.emplace_back(NumericComplex{z.real(), std::abs(z.imag()) < tol ? 0.0 : z.imag(), tol});
  b.exponents = minus_one_first(std::move(ex), tol);
  b.diagonalizable = true;
  for (std::size_t i = 0; i < eig.size(); ++i)
    for (std::size_t j = i + 1; j < eig.size(); ++j)
      if (std::abs(eig[i] - eig[j]) < 1e-6) b.diagonalizable = false;
  b.diagonalizable_exact = false;
  std::vector<cd> q(n), kq(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = ws.g[i].get_d() * b.c_numeric[i];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) kq[r] += k[r][col] * q[col];
  double err = 0, mag = 1;
  for (std::size_t i = 0; i < n; ++i) {
    err = std::max(err, std::abs(kq[i] + q[i]));
    mag = std::max(mag, std::abs(q[i]));
  }
  b.minus_one_ok = err < 1e-6 * mag;
  return b;
}

CompanionSystem companion_system(const VectorField& vf, const WeightSystem& ws, std::span<const Rat> c, bool extended) {
  const std::size_t n = vf.dim();
  CompanionSystem cs;
  cs.K = kowalevskaya_matrix(vf, ws, c);
  RatMatrix jc = eval(jacobian(vf), c);
  std::vector<std::string> uvars = default_var_names(n, "u");

  std::vector<MultiPoly> shifted;
  for (std::size_t i = 0; i < n; ++i)
    shifted.push_back(MultiPoly::constant(n, c[i]) + MultiPoly::variable(n, i));
  RatVector fc = eval(vf, c);

  cs.f_tilde = VectorField::zero(uvars);
  cs.system = VectorField::zero(uvars);
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly ft = compose(vf.comps[j], shifted) - MultiPoly::constant(n, fc[j]);
    MultiPoly ku(n);
    for (std::size_t i = 0; i < n; ++i) {
      ft -= jc(j, i) * MultiPoly::variable(n, i);
      ku += cs.K(j, i) * MultiPoly::variable(n, i);
    }
    cs.f_tilde.comps[j] = ft;
    cs.system.comps[j] = ku + ft;
  }
  if (extended) {
    std::vector<std::string> evars{"u0"};
    evars.insert(evars.end(), uvars.begin(), uvars.end());
    VectorField ext = VectorField::zero(evars);
    ext.comps[0] = make_rat(-1, ws.l) * MultiPoly::variable(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j) ext.comps[j + 1] = embed(cs.system.comps[j], n + 1, 1);
    cs.extended = std::move(ext);
  }
  return cs;
}

}  // namespace liesym
