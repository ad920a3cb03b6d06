#include "liesym/vfield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "liesym/errors.hpp"

namespace liesym {

VectorField::VectorField(std::vector<std::string> v, std::vector<MultiPoly> c) : vars(std::move(v)), comps(std::move(c)) {
  if (vars.size() != comps.size()) throw DimensionError("vector field needs one component per variable");
  for (const auto& p : comps)
    if (p.nvars() != vars.size()) throw DimensionError("component lives in the wrong ring");
}

VectorField VectorField::zero(std::vector<std::string> vars) {
  std::vector<MultiPoly> c(vars.size(), MultiPoly(vars.size()));
  return VectorField(std::move(vars), std::move(c));
}

bool VectorField::is_zero() const {
  return std::all_of(comps.begin(), comps.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (dim() != o.dim()) throw DimensionError("vector field dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) comps[i] += o.comps[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (dim() != o.dim()) throw DimensionError("vector field dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) comps[i] -= o.comps[i];
  return *this;
}

VectorField& VectorField::operator*=(const Rat& s) {
  for (auto& p : comps) p *= s;
  return *this;
}

std::vector<std::string> default_var_names(std::size_t n, const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

PolyMatrix jacobian(const VectorField& vf) {
  PolyMatrix j(vf.dim());
  for (std::size_t r = 0; r < vf.dim(); ++r)
    for (std::size_t c = 0; c < vf.dim(); ++c) j[r].push_back(diff(vf.comps[r], c));
  return j;
}

RatMatrix eval(const PolyMatrix& m, std::span<const Rat> point) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  RatMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = eval(m[r][c], point);
  return out;
}

RatVector eval(const VectorField& vf, std::span<const Rat> point) {
  RatVector v;
  v.reserve(vf.dim());
  for (const auto& p : vf.comps) v.push_back(eval(p, point));
  return v;
}

MultiPoly apply(const VectorField& x, const MultiPoly& p) {
  if (p.nvars() != x.dim()) throw DimensionError("derivation applied to polynomial in another ring");
  MultiPoly r(p.nvars());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x.comps[i].is_zero()) continue;
    MultiPoly d = diff(p, i);
    if (!d.is_zero()) r += x.comps[i] * d;
  }
  return r;
}

std::string to_string(const MultiPoly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::vector<const MultiPoly::TermMap::value_type*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  // Higher total degree first, then lexicographically larger exponent first.
  std::stable_sort(terms.begin(), terms.end(), [](auto* a, auto* b) {
    int da = std::accumulate(a->first.begin(), a->first.end(), 0);
    int db = std::accumulate(b->first.begin(), b->first.end(), 0);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : terms) {
    const auto& [e, c] = *t;
    const bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string name = i < vars.size() ? vars[i] : "x" + std::to_string(i + 1);
      factors.push_back(e[i] == 1 ? name : name + "^" + std::to_string(e[i]));
    }
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), to_string(mag));
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

std::string to_string(const VectorField& vf) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < vf.dim(); ++i) {
    if (vf.comps[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(vf.comps[i], vf.vars) << ") d/d" << vf.vars[i];
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace liesym
