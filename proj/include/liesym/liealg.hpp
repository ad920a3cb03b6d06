#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liesym/matrix.hpp"
#include "liesym/vfield.hpp"

namespace liesym {

// [X, Y]^j = sum_i (X^i dY^j/dx^i - Y^i dX^j/dx^i).
VectorField lie_bracket(const VectorField& x, const VectorField& y);

// Coordinates of each field on the union of their (component, monomial) supports.
// Rows of the result are the flattened fields.
RatMatrix flatten_fields(const std::vector<VectorField>& fields);

std::size_t span_rank(const std::vector<VectorField>& fields);
bool in_span(const VectorField& x, const std::vector<VectorField>& fields);
bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b);

// Coefficients expressing x in `basis` (assumed independent), or nullopt.
std::optional<RatVector> coordinates_in(const VectorField& x, const std::vector<VectorField>& basis);

// structure[i][j][k] = c^k_ij with [X_i, X_j] = sum_k c^k_ij X_k.
struct BracketTable {
  std::vector<VectorField> basis;
  std::vector<std::vector<RatVector>> structure;
  bool closed = true;
  std::optional<std::pair<std::size_t, std::size_t>> offending;  // first bracket outside the span

  std::size_t dim() const { return basis.size(); }
};

// Throws DependentBasis when the basis is linearly dependent.
BracketTable structure_constants(const std::vector<VectorField>& basis);

// Builds a table straight from structure constants (no vector fields attached).
BracketTable table_from_constants(std::vector<std::vector<RatVector>> structure);

// Dimensions of L, [L,L], [[L,L],[L,L]], ...; stops at 0 or at the first repeated
// dimension (which is included, so a perfect algebra of dim 3 gives [3, 3]).
std::vector<std::size_t> derived_series(const BracketTable& t);
bool is_solvable(const BracketTable& t);

}  // namespace liesym
