#include "liesym/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "liesym/errors.hpp"

namespace liesym {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Rat lc = leading();
  UPoly r = *this;
  for (auto& v : r.c_) v /= lc;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

UPoly operator*(UPoly a, const Rat& c) {
  for (auto& v : a.c_) v *= c;
  a.trim();
  return a;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rat lc = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rat q = rem[static_cast<std::size_t>(i)] / lc;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly derivative(const UPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rat> d(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(d));
}

Rat eval(const UPoly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<long double> eval(const UPoly& p, std::complex<long double> x) {
  std::complex<long double> acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() < 1) return p.is_zero() ? p : UPoly::constant(1);
  return divmod(p, gcd(p, derivative(p))).first.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_factorization(const UPoly& p) {
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() < 1) return out;
  UPoly a = p.monic();
  UPoly b = derivative(a);
  UPoly c = gcd(a, b);
  UPoly w = divmod(a, c).first;
  UPoly y = divmod(b, c).first;
  UPoly z = y - derivative(w);
  int i = 1;
  while (w.degree() >= 1) {
    UPoly g = gcd(w, z);
    if (g.degree() >= 1) out.emplace_back(g.monic(), i);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - derivative(w);
    ++i;
  }
  return out;
}

namespace {

// Integer polynomial proportional to p with content 1.
std::vector<Int> primitive_integer(const UPoly& p) {
  Int l = lcm_of_denominators(p.coeffs());
  std::vector<Int> out;
  out.reserve(p.coeffs().size());
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    Rat scaled = c * l;
    out.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g != 0 && g != 1)
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

const Int kDivisorLimit("1000000000000");

std::vector<Int> positive_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Int, int>> factors;
  for (Int d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Int> divs{Int(1)};
  for (const auto& [prime, e] : factors) {
    const std::size_t prev = divs.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < prev; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

RationalRootSplit rational_roots(const UPoly& squarefree) {
  RationalRootSplit out;
  UPoly rest = squarefree;
  if (rest.degree() < 1) {
    out.cofactor = rest;
    return out;
  }
  if (rest[0] == 0) {
    out.roots.push_back(Rat(0));
    rest = divmod(rest, UPoly::x()).first;
  }
  std::vector<Rat> found;
  if (rest.degree() >= 1) {
    auto ints = primitive_integer(rest);
    Int a0 = abs(ints.front());
    Int an = abs(ints.back());
    if (a0 <= kDivisorLimit && an <= kDivisorLimit) {
      auto ps = positive_divisors(a0);
      auto qs = positive_divisors(an);
      for (const auto& q : qs) {
        for (const auto& pnum : ps) {
          if (gcd(pnum, q) != 1) continue;
          for (int sign : {1, -1}) {
            Rat cand = make_rat(pnum * sign, q);
            if (eval(rest, cand) == 0) found.push_back(cand);
          }
        }
      }
    } else {
      // Coefficients too large to factor by trial division: guess candidates
      // from numeric roots and confirm them exactly.
      for (const auto& z : numeric_roots(rest)) {
        if (std::abs(z.imag()) > 1e-8L * (1 + std::abs(z.real()))) continue;
        Rat cand = rational_approximation(z.real(), an);
        if (eval(rest, cand) == 0 && std::find(found.begin(), found.end(), cand) == found.end())
          found.push_back(cand);
      }
    }
  }
  for (const auto& r : found) {
    rest = divmod(rest, UPoly::linear_root(r)).first;
    out.roots.push_back(r);
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.cofactor = rest;
  return out;
}

namespace {

using cld = std::complex<long double>;

cld horner(const std::vector<cld>& a, cld z, cld* deriv) {
  cld p = 0, d = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    d = d * z + p;
    p = p * z + *it;
  }
  if (deriv) *deriv = d;
  return p;
}

}  // namespace

std::vector<cld> numeric_roots(const std::vector<cld>& coeffs_in) {
  std::vector<cld> a = coeffs_in;
  while (!a.empty() && a.back() == cld(0)) a.pop_back();
  if (a.size() <= 1) return {};
  const std::size_t n = a.size() - 1;
  const cld lead = a.back();
  for (auto& v : a) v /= lead;
  if (n == 1) return {-a[0]};
  if (n == 2) {
    const cld b = a[1], c = a[0];
    cld s = std::sqrt(b * b - 4.0L * c);
    if ((std::conj(b) * s).real() < 0) s = -s;
    cld q = -0.5L * (b + s);
    if (std::abs(q) == 0) return {cld(0), cld(0)};
    return {q, c / q};
  }

  long double radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::abs(a[i]), 1.0L / (n - i)));
  if (radius == 0) radius = 1;
  std::vector<cld> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    long double theta = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = std::polar(radius, theta);
  }

  bool converged = false;
  for (int iter = 0; iter < 2000 && !converged; ++iter) {
    converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      cld d;
      cld p = horner(a, z[k], &d);
      if (p == cld(0)) continue;
      cld ratio = p / d;
      cld sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      cld step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      if (std::abs(step) > 1e-17L * (1 + std::abs(z[k]))) converged = false;
    }
  }
  for (auto& root : z) {
    for (int polish = 0; polish < 3; ++polish) {
      cld d;
      cld p = horner(a, root, &d);
      if (d == cld(0)) break;
      root -= p / d;
    }
  }
  if (!converged) {
    long double scale = 0;
    for (const auto& v : a) scale = std::max(scale, std::abs(v));
    for (const auto& root : z) {
      long double mag = std::max<long double>(1, std::pow(std::abs(root), n));
      if (std::abs(horner(a, root, nullptr)) > 1e-10L * scale * mag)
        throw NumericError("root finder did not converge for degree-" + std::to_string(n) + " polynomial");
    }
  }
  return z;
}

std::vector<cld> numeric_roots(const UPoly& squarefree) {
  std::vector<cld> a;
  a.reserve(squarefree.coeffs().size());
  // Scale to integers first so the double conversion keeps relative precision.
  Int l = lcm_of_denominators(squarefree.coeffs());
  for (const auto& c : squarefree.coeffs()) {
    Rat scaled = c * l;
    a.emplace_back(static_cast<long double>(scaled.get_d()));
  }
  return numeric_roots(a);
}

MultiPoly to_multipoly(const UPoly& p) {
  MultiPoly m(1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) m.add_term({static_cast<int>(i)}, p.coeffs()[i]);
  return m;
}

UPoly to_upoly(const MultiPoly& p) {
  if (p.nvars() != 1) throw DimensionError("expected a univariate polynomial");
  std::vector<Rat> c(static_cast<std::size_t>(std::max(p.total_degree() + 1, 0)));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0])] = v;
  return UPoly(std::move(c));
}

Rat rational_approximation(long double x, const Int& max_den) {
  // Convergents h/k of the continued fraction of x.
  Int h_prev = 0, h = 1, k_prev = 1, k = 0;
  long double rem = x;
  Rat best = Rat(static_cast<double>(std::floor(x)));
  for (int it = 0; it < 64; ++it) {
    long double fl = std::floor(rem);
    Int a(static_cast<double>(fl));
    Int h_next = a * h + h_prev;
    Int k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    best = make_rat(h, k);
    long double frac = rem - fl;
    if (frac < 1e-18L) break;
    rem = 1.0L / frac;
  }
  return best;
}

}  // namespace liesym
