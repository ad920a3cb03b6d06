#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liesym/kowalevskaya.hpp"
#include "liesym/liealg.hpp"
#include "liesym/parse.hpp"
#include "liesym/quasi.hpp"
#include "liesym/resonance.hpp"
#include "liesym/symsearch.hpp"

namespace liesym {

struct AnalyzeConfig {
  std::string text;                           // system definition
  ParamOverrides overrides;
  std::optional<std::vector<Rat>> weights;    // --weights
  std::optional<long> max_degree;             // --max-degree
  double tol = kDefaultTol;
  long k_cap = 50;
};

// Per-balance application of the resonance theorem.
// status: "certified", "unbounded", "numeric" (exponents or balance not exact),
// or "blocked" (K not diagonalizable).
struct BalanceRecord {
  Balance balance;
  std::string status;
  std::optional<ResonanceReport> resonance;
};

struct SemiInfo {
  SqhSign sign = SqhSign::ExactlyQuasihomogeneous;
  VectorField core;
  VectorField rest;
  bool weights_derived = false;   // weights chosen from the lowest admissible homogeneous core
  std::string symmetry_class;     // "analytic" (positive) or "polynomial" (negative)
  std::string conclusion;         // statement about the full system
};

struct AnalysisReport {
  std::string command = "analyze";
  SystemDef system;
  WeightSystem weights;
  bool weights_unique = true;
  std::optional<SemiInfo> semi;
  BalanceSearch search;
  std::vector<BalanceRecord> records;
  DegreeBound bound;                         // strongest over certified balances
  std::optional<std::size_t> bound_source;   // index into records
  SymmetryScan scan;
  std::optional<BracketTable> algebra;
  std::vector<std::size_t> derived;
  bool solvable = false;
  std::string verdict;
  std::vector<std::string> warnings;
  double seconds = 0;                        // text output only
};

AnalysisReport run_analyze(const AnalyzeConfig& cfg);
AnalysisReport run_semi(const AnalyzeConfig& cfg);

// Analysis of an already parsed system (used by both entry points).
AnalysisReport analyze_system(const SystemDef& sys, const WeightSystem& ws, const AnalyzeConfig& cfg);

// Weights making some homogeneous part of vf a core with one-signed remainder.
std::optional<WeightSystem> derive_semi_weights(const VectorField& vf);

// Linear combination of named basis elements, e.g. "-X1 - X2" or "0".
std::string combination_string(const RatVector& coeffs, const std::vector<std::string>& names);

std::string report_json(const AnalysisReport& r);
std::string report_text(const AnalysisReport& r);

std::string table_text(const BracketTable& t, const std::vector<std::string>& names);
std::string table_json(const BracketTable& t, const std::vector<std::string>& names);

std::string resonance_text(const ResonanceQuery& q, const ResonanceReport& r);
std::string resonance_json(const ResonanceQuery& q, const ResonanceReport& r);

}  // namespace liesym
