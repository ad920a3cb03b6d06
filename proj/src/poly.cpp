#include "liesym/poly.hpp"

#include <algorithm>
#include <numeric>

#include "liesym/errors.hpp"

namespace liesym {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rat& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DimensionError("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(e, Rat(1));
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rat& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

Rat MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MultiPoly::constant_term() const { return coeff(Exponent(nvars_, 0)); }

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
  if (e.size() != nvars_) throw DimensionError("exponent length does not match nvars");
  for (int k : e)
    if (k < 0) throw DimensionError("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same_nvars(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw DimensionError("polynomials live in different rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_nvars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_nvars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_nvars(b);
  MultiPoly r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator-(MultiPoly a) { return a *= Rat(-1); }

Rat eval(const MultiPoly& p, std::span<const Rat> point) {
  if (point.size() != p.nvars()) throw DimensionError("evaluation point has wrong dimension");
  Rat sum = 0;
  Rat term;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Rat base = point[i];
      Rat acc = 1;
      for (int k = 0; k < e[i]; ++k) acc *= base;
      term *= acc;
    }
    sum += term;
  }
  return sum;
}

std::complex<double> eval(const MultiPoly& p, std::span<const std::complex<double>> point) {
  if (point.size() != p.nvars()) throw DimensionError("evaluation point has wrong dimension");
  std::complex<double> sum = 0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

MultiPoly diff(const MultiPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw DimensionError("differentiation index out of range");
  MultiPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly result = MultiPoly::constant(p.nvars(), Rat(1));
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

MultiPoly compose(const MultiPoly& p, std::span<const MultiPoly> subs) {
  if (subs.size() != p.nvars()) throw DimensionError("substitution list has wrong length");
  if (subs.empty()) return p;
  const std::size_t target = subs.front().nvars();
  for (const auto& s : subs)
    if (s.nvars() != target) throw DimensionError("substitutes live in different rings");

  // Cache powers of each substitute; polynomials here have small degree.
  std::vector<std::vector<MultiPoly>> powers(subs.size());
  MultiPoly result(target);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(MultiPoly::constant(target, Rat(1)));
      while (cache.size() <= static_cast<std::size_t>(e[i])) cache.push_back(cache.back() * subs[i]);
      term *= cache[e[i]];
    }
    result += term;
  }
  return result;
}

MultiPoly embed(const MultiPoly& p, std::size_t new_nvars, std::size_t offset) {
  if (offset + p.nvars() > new_nvars) throw DimensionError("embedding does not fit");
  MultiPoly r(new_nvars);
  Exponent f(new_nvars, 0);
  for (const auto& [e, c] : p.terms()) {
    std::fill(f.begin(), f.end(), 0);
    std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
    r.add_term(f, c);
  }
  return r;
}

MultiPoly homogeneous_part(const MultiPoly& p, int d) {
  MultiPoly r(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (std::accumulate(e.begin(), e.end(), 0) == d) r.add_term(e, c);
  return r;
}

}  // namespace liesym
