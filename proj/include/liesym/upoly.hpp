#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "liesym/poly.hpp"
#include "liesym/rat.hpp"

namespace liesym {

// Dense univariate polynomial over Q; coeffs()[i] multiplies x^i. No trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);

  static UPoly constant(const Rat& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rat(0), Rat(1)}); }
  // q*x - p, i.e. a multiple of (x - p/q).
  static UPoly linear_root(const Rat& root) { return UPoly({-root, Rat(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rat& c);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);
UPoly derivative(const UPoly& p);
Rat eval(const UPoly& p, const Rat& x);
std::complex<long double> eval(const UPoly& p, std::complex<long double> x);

UPoly squarefree_part(const UPoly& p);
// Yun's algorithm: p = lc * prod_i factors[i].first ^ factors[i].second, factors monic squarefree.
std::vector<std::pair<UPoly, int>> squarefree_factorization(const UPoly& p);

// Rational roots of a squarefree polynomial, plus the cofactor left after deflating them.
struct RationalRootSplit {
  std::vector<Rat> roots;
  UPoly cofactor;
};
RationalRootSplit rational_roots(const UPoly& squarefree);

// All complex roots of a squarefree polynomial (Aberth iteration, Newton polish).
// Throws NumericError when the iteration does not converge.
std::vector<std::complex<long double>> numeric_roots(const std::vector<std::complex<long double>>& coeffs);
std::vector<std::complex<long double>> numeric_roots(const UPoly& squarefree);

MultiPoly to_multipoly(const UPoly& p);
// p must have nvars == 1.
UPoly to_upoly(const MultiPoly& p);

// Best rational approximation with denominator bounded by max_den (continued fractions).
Rat rational_approximation(long double x, const Int& max_den);

}  // namespace liesym
