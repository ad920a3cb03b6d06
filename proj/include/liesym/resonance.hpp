#pragma once

#include <optional>
#include <vector>

#include "liesym/eigen.hpp"
#include "liesym/quasi.hpp"

namespace liesym {

// One nonnegative integer vector k with sum_i k_i lambda_i equal to target j.
// In theorem mode j = 0 is the target l * (1/l) = 1; otherwise j is 1-based.
struct ResonanceSolution {
  std::vector<long> k;
  std::size_t j = 0;
  friend bool operator==(const ResonanceSolution&, const ResonanceSolution&) = default;
};

enum class BoundKind { Certified, Unbounded, Uncertified };
std::string to_string(BoundKind k);

struct DegreeBound {
  BoundKind kind = BoundKind::Uncertified;
  long value = 0;                // max k_1 when Certified, the cap otherwise
  std::optional<long> m_min;     // analytic search floor -l * max g_i
};

enum class ResonanceMode { Equilibrium, Theorem };

struct ResonanceQuery {
  std::vector<AlgNum> lambdas;  // theorem mode: lambdas[0] must be -1
  long l = 1;
  ResonanceMode mode = ResonanceMode::Theorem;
  long order = 1;               // equilibrium mode: sum of k_i
  long k_cap = 50;
  double tol = kDefaultTol;
};

struct ResonanceReport {
  std::vector<ResonanceSolution> particular;       // componentwise minimal per target
  std::vector<std::vector<long>> homogeneous;      // minimal nonzero solutions of sum k_i lambda_i = 0
  std::vector<std::size_t> free_directions;        // 0-based indices with lambda_i = 0
  DegreeBound bound;
  bool exact = true;
  bool truncated = false;                          // hit the solution limit
};

// sum k_i = k and sum k_i lambda_i = lambda_j for some j. Finite, so complete.
ResonanceReport equilibrium_resonances(const std::vector<AlgNum>& lambdas, long k, long k_cap = 50,
                                       double tol = kDefaultTol);

ResonanceReport theorem_resonances(const ResonanceQuery& q);

DegreeBound max_symmetry_degree(const ResonanceQuery& q, const std::optional<WeightSystem>& ws = std::nullopt);

// Whether the report admits a solution with k_1 >= M (necessary for a symmetry of degree M).
bool consistency_check(const ResonanceReport& r, long M);

}  // namespace liesym
