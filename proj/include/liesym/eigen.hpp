#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "liesym/matrix.hpp"
#include "liesym/poly.hpp"
#include "liesym/upoly.hpp"

namespace liesym {

inline constexpr double kDefaultTol = 1e-9;

struct NumericComplex {
  double re = 0;
  double im = 0;
  double tol = kDefaultTol;
};

// An eigenvalue: exact when rational-root extraction found it, numeric otherwise.
// Consumers must branch on is_exact().
class AlgNum {
 public:
  AlgNum(Rat exact) : value_(std::move(exact)) {}  // NOLINT: implicit by intent
  AlgNum(NumericComplex numeric) : value_(numeric) {}  // NOLINT

  bool is_exact() const { return std::holds_alternative<Rat>(value_); }
  const Rat& exact() const { return std::get<Rat>(value_); }
  const NumericComplex& numeric() const { return std::get<NumericComplex>(value_); }
  std::complex<double> approx() const;
  // Tolerance attached to the value; zero for exact values.
  double tol() const { return is_exact() ? 0.0 : numeric().tol; }

  std::string str() const;

  friend bool operator==(const AlgNum& a, const AlgNum& b);

 private:
  std::variant<Rat, NumericComplex> value_;
};

// Monic characteristic polynomial det(xI - m), as a univariate MultiPoly.
MultiPoly char_poly(const RatMatrix& m);
UPoly char_upoly(const RatMatrix& m);

struct EigenSplit {
  std::vector<AlgNum> roots;  // with multiplicity
  bool diagonalizable = false;
};

// Rational roots exact, the rest numeric. Diagonalizability is decided exactly:
// m is diagonalizable over C iff the squarefree part of its characteristic
// polynomial annihilates m.
EigenSplit eigen_split(const RatMatrix& m, double tol = kDefaultTol);

// Roots of an arbitrary rational polynomial with the same exact/numeric split.
std::vector<AlgNum> split_roots(const UPoly& p, double tol = kDefaultTol);

RatMatrix eval_matrix_poly(const UPoly& p, const RatMatrix& m);

// Eigenvalues of a complex matrix (numeric only), via Faddeev-LeVerrier and
// the polynomial root finder. Used for balances without rational coordinates.
std::vector<std::complex<double>> numeric_eigenvalues(const std::vector<std::vector<std::complex<double>>>& m);

}  // namespace liesym
