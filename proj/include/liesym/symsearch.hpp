#pragma once

#include <vector>

#include "liesym/matrix.hpp"
#include "liesym/quasi.hpp"
#include "liesym/vfield.hpp"

namespace liesym {

struct SymmetrySpace {
  long degree = 0;
  std::vector<VectorField> basis;            // primitive integer, reduced echelon in the ansatz coordinates
  bool contains_trivial = false;             // X_f lies in the span
  std::vector<std::size_t> monomial_counts;  // ansatz size per component
  std::size_t dim() const { return basis.size(); }
  // Dimension modulo span{X_f}.
  std::size_t nontrivial_dim() const { return basis.size() - (contains_trivial ? 1 : 0); }
};

// Rows: coefficients of [X_f, X_phi] on the monomials of degree M + l + S_r in
// component r. Columns: the ansatz phi^j spanned by monomials of degree M + S_j.
RatMatrix bracket_constraint_matrix(const VectorField& vf, const WeightSystem& ws, long M);

SymmetrySpace qh_symmetry_space(const VectorField& vf, const WeightSystem& ws, long M);

enum class ScanVerdict { NoNontrivialAnalyticSymmetries, NontrivialSymmetriesFound, UpToDegree };
std::string to_string(ScanVerdict v);

struct SymmetryScan {
  long m_min = 0;
  long m_max = 0;
  bool certified = false;
  std::vector<SymmetrySpace> spaces;  // one per degree m_min..m_max
  ScanVerdict verdict = ScanVerdict::UpToDegree;
  std::size_t nontrivial_total() const;
};

// `certified` says whether m_max comes from a certified resonance bound.
SymmetryScan analytic_symmetry_scan(const VectorField& vf, const WeightSystem& ws, long m_min, long m_max,
                                    bool certified);

bool is_symmetry(const VectorField& vf, const VectorField& phi);

// Homogeneous degree-k fields commuting with the linear part A x of a field vanishing at 0.
SymmetrySpace leading_order_space(const VectorField& vf, long k);

// The linear part A at the origin: the search runs either way, these are only reported.
struct LinearPartCheck {
  bool det_nonzero = false;
  bool diagonalizable = false;
};
LinearPartCheck linear_part_hypotheses(const VectorField& vf);

}  // namespace liesym
