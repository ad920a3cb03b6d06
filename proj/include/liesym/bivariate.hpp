#pragma once

#include "liesym/poly.hpp"
#include "liesym/upoly.hpp"

namespace liesym {

// Polynomials in two variables. `main` picks the variable treated as the
// polynomial variable; coefficients are univariate polynomials in the other one.

// Res_main(a, b) as a polynomial in the remaining variable. Computed from the
// formal Sylvester matrix by evaluation at integer points and interpolation.
UPoly resultant(const MultiPoly& a, const MultiPoly& b, std::size_t main);

// gcd in Q[x, y], normalized so its leading coefficient (in `main`, then in the
// other variable) is 1. gcd(0, 0) = 0.
MultiPoly bivariate_gcd(const MultiPoly& a, const MultiPoly& b, std::size_t main = 1);

// a / b when b divides a exactly; throws std::domain_error otherwise.
MultiPoly bivariate_divide(const MultiPoly& a, const MultiPoly& b, std::size_t main = 1);

// Fixes variable `var` of a bivariate polynomial at `value`; the result is in the other variable.
UPoly specialize(const MultiPoly& p, std::size_t var, const Rat& value);

}  // namespace liesym
