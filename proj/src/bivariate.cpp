#include "liesym/bivariate.hpp"

#include <algorithm>

#include "liesym/errors.hpp"
#include "liesym/matrix.hpp"

namespace liesym {

namespace {

// Coefficient list in the main variable; entry d is a polynomial in the other variable.
using BiPoly = std::vector<UPoly>;

void check_bivariate(const MultiPoly& p, std::size_t main) {
  if (p.nvars() != 2 || main > 1) throw DimensionError("expected a polynomial in two variables");
}

BiPoly to_bipoly(const MultiPoly& p, std::size_t main) {
  check_bivariate(p, main);
  const std::size_t other = 1 - main;
  int dmain = std::max(p.degree_in(main), 0);
  int dother = std::max(p.degree_in(other), 0);
  std::vector<std::vector<Rat>> raw(static_cast<std::size_t>(dmain + 1), std::vector<Rat>(static_cast<std::size_t>(dother + 1)));
  for (const auto& [e, c] : p.terms()) raw[static_cast<std::size_t>(e[main])][static_cast<std::size_t>(e[other])] = c;
  BiPoly out;
  for (auto& r : raw) out.emplace_back(std::move(r));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

MultiPoly from_bipoly(const BiPoly& b, std::size_t main) {
  MultiPoly p(2);
  const std::size_t other = 1 - main;
  for (std::size_t d = 0; d < b.size(); ++d) {
    for (std::size_t k = 0; k < b[d].coeffs().size(); ++k) {
      Exponent e(2);
      e[main] = static_cast<int>(d);
      e[other] = static_cast<int>(k);
      p.add_term(e, b[d].coeffs()[k]);
    }
  }
  return p;
}

int deg(const BiPoly& b) { return static_cast<int>(b.size()) - 1; }

void trim(BiPoly& b) {
  while (!b.empty() && b.back().is_zero()) b.pop_back();
}

UPoly content(const BiPoly& b) {
  UPoly g;
  for (const auto& c : b) g = gcd(g, c);
  return g;
}

BiPoly divide_coeffs(const BiPoly& b, const UPoly& d) {
  BiPoly out;
  for (const auto& c : b) {
    auto [q, r] = divmod(c, d);
    if (!r.is_zero()) throw std::domain_error("content does not divide coefficient");
    out.push_back(q);
  }
  return out;
}

BiPoly primitive_part(const BiPoly& b) {
  if (b.empty()) return b;
  return divide_coeffs(b, content(b));
}

// Some nonzero multiple of the pseudo-remainder of a by b.
BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
  const UPoly lb = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    const UPoly la = a.back();
    const int shift = deg(a) - deg(b);
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= deg(b); ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
    trim(a);
  }
  return a;
}

UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  // Newton divided differences.
  std::vector<Rat> coef = ys;
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPoly p = UPoly::constant(coef[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) p = p * UPoly::linear_root(xs[i]) + UPoly::constant(coef[i]);
  return p;
}

}  // namespace

UPoly specialize(const MultiPoly& p, std::size_t var, const Rat& value) {
  check_bivariate(p, var);
  const std::size_t other = 1 - var;
  std::vector<Rat> c(static_cast<std::size_t>(std::max(p.degree_in(other), 0) + 1));
  for (const auto& [e, v] : p.terms()) {
    Rat t = v;
    for (int k = 0; k < e[var]; ++k) t *= value;
    c[static_cast<std::size_t>(e[other])] += t;
  }
  return UPoly(std::move(c));
}

UPoly resultant(const MultiPoly& a, const MultiPoly& b, std::size_t main) {
  check_bivariate(a, main);
  check_bivariate(b, main);
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t other = 1 - main;
  const int da = std::max(a.degree_in(main), 0);
  const int db = std::max(b.degree_in(main), 0);
  if (da == 0 && db == 0) return UPoly::constant(1);
  const int bound = db * std::max(a.degree_in(other), 0) + da * std::max(b.degree_in(other), 0);
  const std::size_t size = static_cast<std::size_t>(da + db);

  std::vector<Rat> xs, ys;
  for (int pt = 0; pt <= bound; ++pt) {
    Rat x0 = pt;
    UPoly av = specialize(a, other, x0);
    UPoly bv = specialize(b, other, x0);
    RatMatrix syl(size, size);
    // Formal degrees da, db; coefficients listed from the top power down.
    for (int r = 0; r < db; ++r)
      for (int i = 0; i <= da; ++i) syl(static_cast<std::size_t>(r), static_cast<std::size_t>(r + i)) = av[static_cast<std::size_t>(da - i)];
    for (int r = 0; r < da; ++r)
      for (int i = 0; i <= db; ++i)
        syl(static_cast<std::size_t>(db + r), static_cast<std::size_t>(r + i)) = bv[static_cast<std::size_t>(db - i)];
    xs.push_back(x0);
    ys.push_back(determinant(syl));
  }
  return interpolate(xs, ys);
}

MultiPoly bivariate_gcd(const MultiPoly& a, const MultiPoly& b, std::size_t main) {
  BiPoly pa = to_bipoly(a, main);
  BiPoly pb = to_bipoly(b, main);
  auto normalize = [main](BiPoly g) {
    if (g.empty()) return MultiPoly(2);
    UPoly lc = g.back();
    Rat s = 1 / lc.leading();
    for (auto& c : g) c = c * s;
    return from_bipoly(g, main);
  };
  if (pa.empty()) return normalize(pb);
  if (pb.empty()) return normalize(pa);
  UPoly cont = gcd(content(pa), content(pb));
  pa = primitive_part(pa);
  pb = primitive_part(pb);
  if (deg(pa) < deg(pb)) std::swap(pa, pb);
  BiPoly g;
  for (;;) {
    if (deg(pb) == 0) {
      g = BiPoly{UPoly::constant(1)};
      break;
    }
    BiPoly r = pseudo_remainder(pa, pb);
    if (r.empty()) {
      g = pb;
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  for (auto& c : g) c = c * cont;
  return normalize(g);
}

MultiPoly bivariate_divide(const MultiPoly& a, const MultiPoly& b, std::size_t main) {
  BiPoly rem = to_bipoly(a, main);
  BiPoly d = to_bipoly(b, main);
  if (d.empty()) throw std::domain_error("division by zero polynomial");
  if (deg(rem) < deg(d)) {
    if (rem.empty()) return MultiPoly(2);
    throw std::domain_error("polynomial does not divide exactly");
  }
  BiPoly quot(static_cast<std::size_t>(deg(rem) - deg(d) + 1));
  while (!rem.empty() && deg(rem) >= deg(d)) {
    auto [q, r] = divmod(rem.back(), d.back());
    if (!r.is_zero()) throw std::domain_error("polynomial does not divide exactly");
    const int shift = deg(rem) - deg(d);
    quot[static_cast<std::size_t>(shift)] = q;
    for (int i = 0; i <= deg(d); ++i) rem[static_cast<std::size_t>(i + shift)] -= q * d[static_cast<std::size_t>(i)];
    trim(rem);
  }
  if (!rem.empty()) throw std::domain_error("polynomial does not divide exactly");
  trim(quot);
  return from_bipoly(quot, main);
}

}  // namespace liesym
