#include "liesym/matrix.hpp"

#include <algorithm>

#include "liesym/errors.hpp"

namespace liesym {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DimensionError("matrix data size mismatch");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(std::span<const Rat> d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& v) { return v == 0; });
}

Rat RatMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  RatMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
  RatMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  RatMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

RatMatrix operator*(const Rat& s, RatMatrix a) {
  for (auto& v : a.data_) v *= s;
  return a;
}

RatVector operator*(const RatMatrix& a, std::span<const Rat> v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  RatVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

Echelon bareiss_echelon(const RatMatrix& m) {
  Echelon ech;
  ech.cols = m.cols();
  auto& a = ech.rows;
  a.assign(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RatVector row = m.row(i);
    Int l = lcm_of_denominators(row);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat scaled = row[j] * l;
      a[i][j] = scaled.get_num();
    }
  }

  // Every entry below the current pivot row is a minor of the scaled matrix,
  // so the division by the previous pivot is exact.
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Int v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ech.pivots.push_back(c);
    ++r;
  }
  return ech;
}

std::size_t rank(const RatMatrix& m) { return bareiss_echelon(m).rank(); }

namespace {

// Back substitution on the echelon rows. `rhs` holds one extra column value per row
// (zero for homogeneous solves); `free_values` gives the non-pivot coordinates.
RatVector back_substitute(const Echelon& ech, const std::vector<Int>* rhs, const RatVector& free_values) {
  RatVector x = free_values;
  for (std::size_t k = ech.rank(); k-- > 0;) {
    const auto& row = ech.rows[k];
    const std::size_t pc = ech.pivots[k];
    Rat acc = rhs ? Rat((*rhs)[k]) : Rat(0);
    for (std::size_t j = pc + 1; j < ech.cols; ++j)
      if (row[j] != 0 && x[j] != 0) acc -= Rat(row[j]) * x[j];
    x[pc] = acc / Rat(row[pc]);
  }
  return x;
}

}  // namespace

RatVector primitive_integer(const RatVector& v) {
  Int l = lcm_of_denominators(v);
  Int g = 0;
  std::vector<Int> ints;
  ints.reserve(v.size());
  for (const auto& x : v) {
    Rat s = x * l;
    ints.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (g == 0) return v;
  RatVector out;
  out.reserve(v.size());
  for (auto& x : ints) out.emplace_back(Int(x / g));
  return out;
}

std::vector<RatVector> exact_nullspace(const RatMatrix& m) {
  Echelon ech = bareiss_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector seed(m.cols());
    seed[f] = 1;
    basis.push_back(primitive_integer(back_substitute(ech, nullptr, seed)));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const RatMatrix& m, std::span<const Rat> b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side has wrong length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon ech = bareiss_echelon(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;

  // Reinterpret the augmented echelon form as [U | c].
  Echelon u;
  u.cols = m.cols();
  u.pivots = ech.pivots;
  std::vector<Int> rhs;
  for (std::size_t k = 0; k < ech.rank(); ++k) {
    u.rows.emplace_back(ech.rows[k].begin(), ech.rows[k].end() - 1);
    rhs.push_back(ech.rows[k].back());
  }
  AffineSolution sol;
  sol.particular = back_substitute(u, &rhs, RatVector(m.cols()));
  sol.basis = exact_nullspace(m);
  return sol;
}

Rat determinant(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  // Bareiss on the unscaled rational matrix; the last pivot is the determinant.
  std::vector<RatVector> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = m.row(i);
  Rat prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<RatVector> row_reduce(std::vector<RatVector> v) {
  if (v.empty()) return v;
  const std::size_t cols = v.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < v.size(); ++c) {
    std::size_t p = r;
    while (p < v.size() && v[p][c] == 0) ++p;
    if (p == v.size()) continue;
    std::swap(v[r], v[p]);
    Rat inv = 1 / v[r][c];
    for (auto& x : v[r]) x *= inv;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i == r || v[i][c] == 0) continue;
      Rat f = v[i][c];
      for (std::size_t j = c; j < cols; ++j) v[i][j] -= f * v[r][j];
    }
    ++r;
  }
  v.resize(r);
  return v;
}

RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("row has wrong length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace liesym
