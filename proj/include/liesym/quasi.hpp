#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liesym/rat.hpp"
#include "liesym/vfield.hpp"

namespace liesym {

// Weight exponents g, ramification degree l (least positive integer with every
// l*g_i integral) and integer weights S = l*g.
struct WeightSystem {
  std::vector<Rat> g;
  long l = 1;
  std::vector<long> S;

  static WeightSystem from_weights(std::vector<Rat> g);
  std::size_t dim() const { return g.size(); }
  bool all_positive() const;
  RatMatrix G() const { return RatMatrix::diagonal(g); }
  std::string str() const;

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) { return a.g == b.g; }
};

// Solution set {particular + span(basis)} of sum_i g_i k_i = g_j + 1 over all
// monomials k of every component f^j.
struct WeightSolution {
  RatVector particular;
  std::vector<RatVector> basis;
  std::optional<WeightSystem> unique;  // set when the solution set is a single point
};

// Throws NotQuasihomogeneous naming a conflicting pair of monomials.
WeightSolution find_weights(const VectorField& vf);

// Canonical member of a positive-dimensional family: all g_i > 0, smallest l,
// then lexicographically smallest S = l*g. Bounded search (l <= max_l, S_i <= max_s).
std::optional<WeightSystem> canonical_weights(const WeightSolution& sol, long max_l = 24, long max_s = 64);

bool is_quasihomogeneous(const VectorField& vf, const WeightSystem& ws);

// M with F(a^G x) = a^(M/l) F(x). Throws NotQuasihomogeneous for mixed or zero input.
long qh_degree(const MultiPoly& p, const WeightSystem& ws);

// M with qh_degree(phi^i) = M + l*g_i for every nonzero component.
long symmetry_degree(const VectorField& phi, const WeightSystem& ws);

// l * (sum_i g_i k_i) - l * (g_j + 1) for the monomial k in component j.
long weighted_deviation(const Exponent& k, std::size_t j, const WeightSystem& ws);

enum class SqhSign { Positive, Negative, ExactlyQuasihomogeneous };
std::string to_string(SqhSign s);

struct SqhDecomposition {
  VectorField core;  // quasihomogeneous truncation f_m
  VectorField rest;  // remainder, every monomial deviating with the sign below
  SqhSign sign = SqhSign::ExactlyQuasihomogeneous;
};

// Throws NotSemiQuasihomogeneous when deviations of both signs occur.
SqhDecomposition sqh_decompose(const VectorField& vf, const WeightSystem& ws);
VectorField truncate(const VectorField& vf, const WeightSystem& ws);

// All exponent vectors k >= 0 with sum_i S_i k_i = degree; S must be positive.
std::vector<Exponent> weighted_monomials(std::span<const long> S, long degree);

// W = sum_i g_i x^i d/dx^i.
VectorField euler_field(const WeightSystem& ws, const std::vector<std::string>& vars);

}  // namespace liesym
