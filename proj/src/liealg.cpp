#include "liesym/liealg.hpp"

#include <map>

#include "liesym/errors.hpp"

namespace liesym {

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  if (x.dim() != y.dim()) throw DimensionError("bracket of fields of different dimension");
  VectorField r = VectorField::zero(x.vars);
  for (std::size_t j = 0; j < x.dim(); ++j) r.comps[j] = apply(x, y.comps[j]) - apply(y, x.comps[j]);
  return r;
}

RatMatrix flatten_fields(const std::vector<VectorField>& fields) {
  std::map<std::pair<std::size_t, Exponent>, std::size_t> index;
  for (const auto& f : fields)
    for (std::size_t j = 0; j < f.dim(); ++j)
      for (const auto& [k, c] : f.comps[j].terms()) index.try_emplace({j, k}, 0);
  std::size_t col = 0;
  for (auto& [key, idx] : index) idx = col++;
  RatMatrix m(fields.size(), index.size());
  for (std::size_t r = 0; r < fields.size(); ++r)
    for (std::size_t j = 0; j < fields[r].dim(); ++j)
      for (const auto& [k, c] : fields[r].comps[j].terms()) m(r, index.at({j, k})) = c;
  return m;
}

std::size_t span_rank(const std::vector<VectorField>& fields) {
  if (fields.empty()) return 0;
  return rank(flatten_fields(fields));
}

bool in_span(const VectorField& x, const std::vector<VectorField>& fields) {
  auto all = fields;
  all.push_back(x);
  return span_rank(all) == span_rank(fields);
}

bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b) {
  auto all = a;
  all.insert(all.end(), b.begin(), b.end());
  const std::size_t r = span_rank(all);
  return r == span_rank(a) && r == span_rank(b);
}

std::optional<RatVector> coordinates_in(const VectorField& x, const std::vector<VectorField>& basis) {
  auto all = basis;
  all.push_back(x);
  RatMatrix flat = flatten_fields(all);
  // Solve sum_k c_k basis_k = x column-wise: transpose of the first rows.
  RatMatrix a(flat.cols(), basis.size());
  RatVector b(flat.cols());
  for (std::size_t c = 0; c < flat.cols(); ++c) {
    for (std::size_t k = 0; k < basis.size(); ++k) a(c, k) = flat(k, c);
    b[c] = flat(basis.size(), c);
  }
  auto sol = solve_affine(a, b);
  if (!sol) return std::nullopt;
  return sol->particular;
}

BracketTable structure_constants(const std::vector<VectorField>& basis) {
  if (span_rank(basis) != basis.size()) throw DependentBasis("the given fields are linearly dependent");
  BracketTable t;
  t.basis = basis;
  const std::size_t n = basis.size();
  t.structure.assign(n, std::vector<RatVector>(n, RatVector(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto coords = coordinates_in(lie_bracket(basis[i], basis[j]), basis);
      if (!coords) {
        t.closed = false;
        if (!t.offending) t.offending = std::make_pair(i, j);
        continue;
      }
      t.structure[i][j] = *coords;
      for (std::size_t k = 0; k < n; ++k) t.structure[j][i][k] = -(*coords)[k];
    }
  }
  return t;
}

BracketTable table_from_constants(std::vector<std::vector<RatVector>> structure) {
  BracketTable t;
  t.structure = std::move(structure);
  return t;
}

namespace {

std::size_t table_dim(const BracketTable& t) { return t.structure.size(); }

RatVector bracket_coords(const BracketTable& t, const RatVector& u, const RatVector& v) {
  const std::size_t n = table_dim(t);
  RatVector out(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (u[a] == 0) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (v[b] == 0) continue;
      Rat s = u[a] * v[b];
      for (std::size_t k = 0; k < n; ++k) out[k] += s * t.structure[a][b][k];
    }
  }
  return out;
}

}  // namespace

std::vector<std::size_t> derived_series(const BracketTable& t) {
  if (!t.closed) throw HypothesisError("derived series needs a closed bracket table");
  const std::size_t n = table_dim(t);
  std::vector<RatVector> current;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n);
    e[i] = 1;
    current.push_back(e);
  }
  std::vector<std::size_t> dims{n};
  while (!current.empty()) {
    std::vector<RatVector> next;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) next.push_back(bracket_coords(t, current[i], current[j]));
    next = row_reduce(std::move(next));
    dims.push_back(next.size());
    if (next.size() == current.size()) break;
    current = std::move(next);
  }
  return dims;
}

bool is_solvable(const BracketTable& t) { return derived_series(t).back() == 0; }

}  // namespace liesym
