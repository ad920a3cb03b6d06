#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "liesym/eigen.hpp"
#include "liesym/matrix.hpp"
#include "liesym/quasi.hpp"
#include "liesym/vfield.hpp"

namespace liesym {

// A nonzero solution c of f(c) + G c = 0, giving the particular solution
// x(t) = c t^(-G), together with its Kowalevskaya data.
struct Balance {
  bool exact = true;
  RatVector c;                                   // exact coordinates (exact only)
  std::vector<std::complex<double>> c_numeric;   // always filled
  bool isolated = true;
  std::optional<RatMatrix> K;                    // exact only
  std::vector<AlgNum> exponents;                 // -1 first when present
  bool diagonalizable = false;
  bool diagonalizable_exact = false;             // false when decided numerically
  RatVector q;                                   // G c (exact only)
  bool minus_one_ok = false;
};

struct BalanceOptions {
  double tol = kDefaultTol;
  int family_samples = 3;
  int newton_starts = 96;
  unsigned seed = 20240917u;
};

struct BalanceSearch {
  std::vector<Balance> balances;
  bool family_detected = false;  // a positive-dimensional set of balances exists
  bool incomplete = false;       // the list may miss balances
  std::vector<std::string> notes;
};

bool verify_balance(const VectorField& vf, const WeightSystem& ws, std::span<const Rat> c);
bool verify_balance(const VectorField& vf, const WeightSystem& ws, std::span<const std::complex<double>> c,
                    double tol = kDefaultTol);

// Exact for n <= 2 (resultants and bivariate gcd); multi-start Newton otherwise.
BalanceSearch find_balances(const VectorField& vf, const WeightSystem& ws, const BalanceOptions& opts = {});

// K = (df/dx)(c) + G. Throws HypothesisError when c is not a balance.
RatMatrix kowalevskaya_matrix(const VectorField& vf, const WeightSystem& ws, std::span<const Rat> c);

EigenSplit kowalevskaya_exponents(const RatMatrix& K, double tol = kDefaultTol);

// K (G c) = -G c exactly and -1 is a root of det(xI - K). Exact balances only.
bool check_minus_one(const Balance& b);

Balance make_balance(const VectorField& vf, const WeightSystem& ws, RatVector c, bool isolated = true,
                     double tol = kDefaultTol);
Balance make_numeric_balance(const VectorField& vf, const WeightSystem& ws, std::vector<std::complex<double>> c,
                             double tol = kDefaultTol);

// u' = K u + f~(u) around an exact balance, with f~ the Taylor remainder of
// order >= 2. The extended form prepends u0 with u0' = -(1/l) u0.
struct CompanionSystem {
  RatMatrix K;
  VectorField f_tilde;
  VectorField system;                  // u' = K u + f~(u)
  std::optional<VectorField> extended;  // variables (u0, u1, ..., un)
};

CompanionSystem companion_system(const VectorField& vf, const WeightSystem& ws, std::span<const Rat> c,
                                 bool extended = false);

}  // namespace liesym
