#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "liesym/rat.hpp"

namespace liesym {

// Dense exponent vector; length always equals the owning polynomial's nvars.
using Exponent = std::vector<int>;

// Sparse multivariate polynomial with exact rational coefficients.
// Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rat>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rat& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const Exponent& e, const Rat& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(const Exponent& e) const;
  Rat constant_term() const;
  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;

  // Accumulates c into the coefficient of x^e.
  void add_term(const Exponent& e, const Rat& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_nvars(const MultiPoly& o) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

Rat eval(const MultiPoly& p, std::span<const Rat> point);
std::complex<double> eval(const MultiPoly& p, std::span<const std::complex<double>> point);
MultiPoly diff(const MultiPoly& p, std::size_t var);
MultiPoly pow(const MultiPoly& p, unsigned k);

// Substitutes x_i -> subs[i]; the result lives in the ring of the substitutes.
MultiPoly compose(const MultiPoly& p, std::span<const MultiPoly> subs);

// Re-homes p into a ring with new_nvars variables, mapping x_i to x_{i+offset}.
MultiPoly embed(const MultiPoly& p, std::size_t new_nvars, std::size_t offset);

// Part of p whose monomials have total degree exactly d.
MultiPoly homogeneous_part(const MultiPoly& p, int d);

}  // namespace liesym
