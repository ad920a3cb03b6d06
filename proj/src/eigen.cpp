#include "liesym/eigen.hpp"

#include <algorithm>
#include <sstream>

#include "liesym/errors.hpp"

namespace liesym {

std::complex<double> AlgNum::approx() const {
  if (is_exact()) return {exact().get_d(), 0.0};
  return {numeric().re, numeric().im};
}

std::string AlgNum::str() const {
  if (is_exact()) return to_string(exact());
  std::ostringstream os;
  os.precision(12);
  const auto& n = numeric();
  os << n.re;
  if (n.im != 0) os << (n.im < 0 ? " - " : " + ") << std::abs(n.im) << "i";
  os << " (+/- " << n.tol << ")";
  return os.str();
}

bool operator==(const AlgNum& a, const AlgNum& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  return a.numeric().re == b.numeric().re && a.numeric().im == b.numeric().im;
}

UPoly char_upoly(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);
  const RatMatrix id = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    c[n - k] = -(m * mk).trace() / static_cast<unsigned long>(k);
  }
  return UPoly(std::move(c));
}

MultiPoly char_poly(const RatMatrix& m) { return to_multipoly(char_upoly(m)); }

RatMatrix eval_matrix_poly(const UPoly& p, const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("matrix polynomial of non-square matrix");
  RatMatrix acc(m.rows(), m.cols());
  const RatMatrix id = RatMatrix::identity(m.rows());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * m + (*it) * id;
  return acc;
}

std::vector<AlgNum> split_roots(const UPoly& p, double tol) {
  std::vector<AlgNum> out;
  std::vector<AlgNum> numeric;
  for (const auto& [factor, mult] : squarefree_factorization(p)) {
    RationalRootSplit rs = rational_roots(factor);
    for (const auto& r : rs.roots)
      for (int i = 0; i < mult; ++i) out.emplace_back(r);
    if (rs.cofactor.degree() >= 1) {
      for (const auto& z : numeric_roots(rs.cofactor)) {
        NumericComplex nc{static_cast<double>(z.real()), static_cast<double>(z.imag()), tol};
        if (std::abs(nc.im) < tol * (1 + std::abs(nc.re))) nc.im = 0;
        for (int i = 0; i < mult; ++i) numeric.emplace_back(nc);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const AlgNum& a, const AlgNum& b) { return a.exact() < b.exact(); });
  std::sort(numeric.begin(), numeric.end(), [](const AlgNum& a, const AlgNum& b) {
    const auto& x = a.numeric();
    const auto& y = b.numeric();
    return x.re != y.re ? x.re < y.re : x.im < y.im;
  });
  out.insert(out.end(), numeric.begin(), numeric.end());
  return out;
}

EigenSplit eigen_split(const RatMatrix& m, double tol) {
  UPoly p = char_upoly(m);
  EigenSplit es;
  es.roots = split_roots(p, tol);
  es.diagonalizable = eval_matrix_poly(squarefree_part(p), m).is_zero();
  return es;
}

std::vector<std::complex<double>> numeric_eigenvalues(const std::vector<std::vector<std::complex<double>>>& m) {
  using cld = std::complex<long double>;
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("numeric eigenvalues of non-square matrix");
  auto mul = [n](const std::vector<std::vector<cld>>& a, const std::vector<std::vector<cld>>& b) {
    std::vector<std::vector<cld>> r(n, std::vector<cld>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
  };
  std::vector<std::vector<cld>> a(n, std::vector<cld>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = cld(m[i][j].real(), m[i][j].imag());
  std::vector<cld> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<cld>> mk(n, std::vector<cld>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    mk = mul(a, mk);
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[n - k + 1];
    auto am = mul(a, mk);
    cld tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / static_cast<long double>(k);
  }
  std::vector<std::complex<double>> out;
  for (const auto& z : numeric_roots(c)) out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  return out;
}

}  // namespace liesym
