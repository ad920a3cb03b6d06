#pragma once

#include <string>
#include <vector>

#include "liesym/matrix.hpp"
#include "liesym/poly.hpp"

namespace liesym {

// sum_i comps[i] d/dx^i over the variables `vars`.
struct VectorField {
  std::vector<std::string> vars;
  std::vector<MultiPoly> comps;

  VectorField() = default;
  VectorField(std::vector<std::string> vars, std::vector<MultiPoly> comps);
  static VectorField zero(std::vector<std::string> vars);

  std::size_t dim() const { return comps.size(); }
  bool is_zero() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const Rat& s);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Rat& s, VectorField a) { return a *= s; }
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.comps == b.comps; }
};

std::vector<std::string> default_var_names(std::size_t n, const std::string& stem = "x");

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Entry (j, i) = d f^j / d x^i.
PolyMatrix jacobian(const VectorField& vf);
RatMatrix eval(const PolyMatrix& m, std::span<const Rat> point);
RatVector eval(const VectorField& vf, std::span<const Rat> point);

// Applies the derivation sum_i X^i d/dx^i to a polynomial.
MultiPoly apply(const VectorField& x, const MultiPoly& p);

// Human-readable "(...) d/dx1 + (...) d/dx2".
std::string to_string(const MultiPoly& p, const std::vector<std::string>& vars);
std::string to_string(const VectorField& vf);

}  // namespace liesym
