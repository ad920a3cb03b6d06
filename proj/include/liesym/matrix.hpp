#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "liesym/rat.hpp"

namespace liesym {

using RatVector = std::vector<Rat>;

// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> data);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(std::span<const Rat> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  bool is_zero() const;
  Rat trace() const;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rat& s, RatMatrix a);
  friend RatVector operator*(const RatMatrix& a, std::span<const Rat> v);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// Integer row echelon form from fraction-free (Bareiss) elimination.
// Rows are scaled to integers first; row scaling leaves rank and nullspace unchanged.
struct Echelon {
  std::vector<std::vector<Int>> rows;  // first `rank` rows are the nonzero echelon rows
  std::vector<std::size_t> pivots;     // pivot column of each nonzero row
  std::size_t cols = 0;
  std::size_t rank() const { return pivots.size(); }
};

Echelon bareiss_echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Basis of {v : m v = 0}, one vector per non-pivot column, scaled to primitive integers.
std::vector<RatVector> exact_nullspace(const RatMatrix& m);

struct AffineSolution {
  RatVector particular;
  std::vector<RatVector> basis;
};

// Solution set of m x = b, or nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(const RatMatrix& m, std::span<const Rat> b);

Rat determinant(const RatMatrix& m);

// Reduced row echelon form of the row space spanned by `vectors` (zero rows dropped).
std::vector<RatVector> row_reduce(std::vector<RatVector> vectors);

RatVector primitive_integer(const RatVector& v);

// Stacks vectors as rows.
RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

}  // namespace liesym
