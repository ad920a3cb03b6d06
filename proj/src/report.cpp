#include "liesym/report.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include <json.hpp>

#include "liesym/errors.hpp"
#include "liesym/poly.hpp"

namespace liesym {

namespace {

using json = nlohmann::ordered_json;

constexpr long kNumericCap = 20;

std::string vec_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string complex_string(std::complex<double> z) {
  std::ostringstream os;
  os.precision(10);
  os << z.real();
  if (z.imag() != 0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string balance_string(const Balance& b) {
  if (b.exact) return vec_string(b.c);
  std::string s = "(";
  for (std::size_t i = 0; i < b.c_numeric.size(); ++i) s += (i ? ", " : "") + complex_string(b.c_numeric[i]);
  return s + ")";
}

std::string exponents_string(const std::vector<AlgNum>& ex) {
  std::string s = "{";
  for (std::size_t i = 0; i < ex.size(); ++i) s += (i ? ", " : "") + ex[i].str();
  return s + "}";
}

json alg_json(const AlgNum& a) {
  if (a.is_exact()) return to_string(a.exact());
  return json{{"re", a.numeric().re}, {"im", a.numeric().im}, {"tol", a.numeric().tol}};
}

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json field_json(const VectorField& f) {
  json o = json::object();
  for (std::size_t j = 0; j < f.dim(); ++j) o[f.vars[j]] = to_string(f.comps[j], f.vars);
  return o;
}

json longs_json(const std::vector<long>& v) { return json(v); }

json resonance_body(const ResonanceReport& r) {
  json o;
  json part = json::array();
  for (const auto& s : r.particular) part.push_back({{"k", longs_json(s.k)}, {"j", s.j}});
  o["particular"] = part;
  json hom = json::array();
  for (const auto& h : r.homogeneous) hom.push_back(longs_json(h));
  o["homogeneous"] = hom;
  json freed = json::array();
  for (auto i : r.free_directions) freed.push_back(i + 1);
  o["free_directions"] = freed;
  o["exact"] = r.exact;
  o["truncated"] = r.truncated;
  return o;
}

std::string weights_string(const WeightSystem& ws) {
  std::string s;
  for (std::size_t i = 0; i < ws.g.size(); ++i) s += (i ? "," : "") + to_string(ws.g[i]);
  return s;
}

WeightSystem resolve_weights(const VectorField& vf, const AnalyzeConfig& cfg, bool semi) {
  if (cfg.weights) {
    if (cfg.weights->size() != vf.dim()) throw DimensionError("--weights needs one value per variable");
    WeightSystem ws = WeightSystem::from_weights(*cfg.weights);
    if (!semi && !is_quasihomogeneous(vf, ws))
      throw NotQuasihomogeneous("system is not quasihomogeneous for weights " + weights_string(ws) +
                                "; if it is semi-quasihomogeneous try analyze --semi");
    return ws;
  }
  WeightSolution sol;
  try {
    sol = find_weights(vf);
  } catch (const NotQuasihomogeneous& e) {
    throw NotQuasihomogeneous(std::string(e.what()) + "; if it is semi-quasihomogeneous try analyze --semi");
  }
  if (sol.unique) return *sol.unique;
  std::string hint;
  if (auto c = canonical_weights(sol)) hint = " (for example --weights " + weights_string(*c) + ")";
  throw HypothesisError("weight exponents are not unique (a " + std::to_string(sol.basis.size()) +
                        "-parameter family); choose them with --weights" + hint);
}

std::vector<std::string> basis_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
  return names;
}

std::string elapsed_string(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

}  // namespace

std::string combination_string(const RatVector& coeffs, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rat& c = coeffs[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rat mag = abs(c);
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (mag != 1) s += to_string(mag) + "*";
    s += names[i];
  }
  return s.empty() ? "0" : s;
}

AnalysisReport analyze_system(const SystemDef& sys, const WeightSystem& ws, const AnalyzeConfig& cfg) {
  const VectorField& vf = sys.equations;
  if (!ws.all_positive()) throw UnsupportedWeights("weights must be positive (got " + weights_string(ws) + ")");
  if (!is_quasihomogeneous(vf, ws)) throw NotQuasihomogeneous("system is not quasihomogeneous for the weights");

  AnalysisReport r;
  r.system = sys;
  r.weights = ws;

  BalanceOptions bo;
  bo.tol = cfg.tol;
  r.search = find_balances(vf, ws, bo);
  for (const auto& note : r.search.notes) r.warnings.push_back(note);

  for (const auto& b : r.search.balances) {
    BalanceRecord rec;
    rec.balance = b;
    if (!b.diagonalizable) {
      rec.status = "blocked";
      r.warnings.push_back("Kowalevskaya matrix at c = " + balance_string(b) +
                           " is not diagonalizable; resonance theorem not applied there");
    } else {
      ResonanceQuery q;
      q.lambdas = b.exponents;
      q.l = ws.l;
      q.tol = cfg.tol;
      const bool exact = b.exact && std::all_of(b.exponents.begin(), b.exponents.end(),
                                                [](const AlgNum& a) { return a.is_exact(); });
      q.k_cap = exact ? cfg.k_cap : std::min(cfg.k_cap, kNumericCap);
      try {
        rec.resonance = theorem_resonances(q);
        if (!exact)
          rec.status = "numeric";
        else
          rec.status = rec.resonance->bound.kind == BoundKind::Certified ? "certified" : "unbounded";
        if (rec.resonance->truncated)
          r.warnings.push_back("resonance enumeration at c = " + balance_string(b) + " hit the solution limit");
      } catch (const HypothesisError& e) {
        rec.status = "numeric";
        r.warnings.push_back("c = " + balance_string(b) + ": " + e.what());
      }
    }
    r.records.push_back(std::move(rec));
  }

  // Strongest certified bound across balances; each one bounds M independently.
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const auto& rec = r.records[i];
    if (rec.status != "certified") continue;
    if (!r.bound_source || rec.resonance->bound.value < r.bound.value) {
      r.bound = rec.resonance->bound;
      r.bound_source = i;
    }
  }
  if (!r.bound_source) {
    const bool any_unbounded = std::any_of(r.records.begin(), r.records.end(),
                                           [](const BalanceRecord& x) { return x.status == "unbounded"; });
    r.bound.kind = any_unbounded ? BoundKind::Unbounded : BoundKind::Uncertified;
    r.bound.value = 0;
  }
  const long m_min = -*std::max_element(ws.S.begin(), ws.S.end());
  r.bound.m_min = m_min;

  bool certified = r.bound.kind == BoundKind::Certified;
  long m_max = certified ? r.bound.value : ws.l;
  if (cfg.max_degree) {
    if (*cfg.max_degree < m_min)
      throw std::invalid_argument("--max-degree is below the analytic floor " + std::to_string(m_min));
    if (certified && *cfg.max_degree < r.bound.value) certified = false;
    m_max = *cfg.max_degree;
  } else if (!certified) {
    r.warnings.push_back("no certified degree bound; symmetry search limited to M <= " + std::to_string(m_max) +
                         " (use --max-degree to widen)");
  }
  r.scan = analytic_symmetry_scan(vf, ws, m_min, m_max, certified);

  std::vector<VectorField> all;
  for (const auto& s : r.scan.spaces) all.insert(all.end(), s.basis.begin(), s.basis.end());
  if (!all.empty()) {
    r.algebra = structure_constants(all);
    if (r.algebra->closed) {
      r.derived = derived_series(*r.algebra);
      r.solvable = r.derived.back() == 0;
    } else {
      r.warnings.push_back("the symmetries found do not close under the bracket within the scanned degrees");
    }
  }

  r.verdict = to_string(r.scan.verdict);
  if (r.scan.verdict == ScanVerdict::UpToDegree) r.verdict += "(" + std::to_string(m_max) + ")";
  return r;
}

AnalysisReport run_analyze(const AnalyzeConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  SystemDef sys = parse_system(cfg.text, cfg.overrides);
  WeightSystem ws = resolve_weights(sys.equations, cfg, false);
  AnalysisReport r = analyze_system(sys, ws, cfg);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::optional<WeightSystem> derive_semi_weights(const VectorField& vf) {
  std::set<int> degrees;
  for (const auto& c : vf.comps)
    for (const auto& [e, v] : c.terms()) {
      int d = 0;
      for (int k : e) d += k;
      degrees.insert(d);
    }
  for (int d : degrees) {
    VectorField core = VectorField::zero(vf.vars);
    for (std::size_t j = 0; j < vf.dim(); ++j) core.comps[j] = homogeneous_part(vf.comps[j], d);
    std::optional<WeightSystem> ws;
    try {
      WeightSolution sol = find_weights(core);
      ws = sol.unique ? sol.unique : canonical_weights(sol);
    } catch (const HypothesisError&) {
      continue;
    }
    if (!ws || !ws->all_positive()) continue;
    try {
      SqhDecomposition dec = sqh_decompose(vf, *ws);
      if (!dec.core.is_zero()) return ws;
    } catch (const HypothesisError&) {
    }
  }
  return std::nullopt;
}

AnalysisReport run_semi(const AnalyzeConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  SystemDef sys = parse_system(cfg.text, cfg.overrides);
  const VectorField& vf = sys.equations;
  WeightSystem ws;
  bool derived = false;
  if (cfg.weights) {
    ws = resolve_weights(vf, cfg, true);
  } else if (auto w = derive_semi_weights(vf)) {
    ws = *w;
    derived = true;
  } else {
    throw NotSemiQuasihomogeneous("no homogeneous part of the system serves as a semi-quasihomogeneous core; "
                                  "give weights with --weights");
  }
  SqhDecomposition dec = sqh_decompose(vf, ws);

  SemiInfo info;
  info.sign = dec.sign;
  info.core = dec.core;
  info.rest = dec.rest;
  info.weights_derived = derived;

  AnalysisReport r;
  if (dec.sign == SqhSign::ExactlyQuasihomogeneous) {
    r = analyze_system(sys, ws, cfg);
    info.symmetry_class = "analytic";
    info.conclusion = "system is exactly quasihomogeneous; verdict applies directly";
  } else {
    SystemDef core_sys = sys;
    core_sys.equations = dec.core;
    r = analyze_system(core_sys, ws, cfg);
    r.system = sys;
    const bool positive = dec.sign == SqhSign::Positive;
    info.symmetry_class = positive ? "analytic" : "polynomial";
    if (r.scan.verdict == ScanVerdict::NoNontrivialAnalyticSymmetries)
      info.conclusion = positive ? "NoNontrivialAnalyticSymmetries" : "NoNontrivialPolynomialSymmetries";
    else
      info.conclusion = "Inconclusive";
  }
  r.command = "semi";
  r.semi = std::move(info);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string report_json(const AnalysisReport& r) {
  json o;
  o["schema_version"] = 1;
  o["command"] = r.command;

  json params = json::object();
  for (const auto& [k, v] : r.system.bound_params) params[k] = to_string(v);
  o["system"] = {{"vars", r.system.var_names}, {"params", params}, {"equations", field_json(r.system.equations)}};

  json g = json::array();
  for (const auto& v : r.weights.g) g.push_back(to_string(v));
  o["weights"] = {{"g", g}, {"l", r.weights.l}, {"S", r.weights.S}};

  if (r.semi) {
    o["semi"] = {{"sign", to_string(r.semi->sign)},
                 {"weights_derived", r.semi->weights_derived},
                 {"truncation", field_json(r.semi->core)},
                 {"remainder", field_json(r.semi->rest)},
                 {"symmetry_class", r.semi->symmetry_class},
                 {"full_system", r.semi->conclusion}};
  }

  json items = json::array();
  for (const auto& rec : r.records) {
    const Balance& b = rec.balance;
    json it;
    it["exact"] = b.exact;
    if (b.exact) {
      json c = json::array();
      for (const auto& v : b.c) c.push_back(to_string(v));
      it["c"] = c;
      it["K"] = matrix_json(*b.K);
    } else {
      json c = json::array();
      for (auto z : b.c_numeric) c.push_back({{"re", z.real()}, {"im", z.imag()}, {"tol", 1e-9}});
      it["c"] = c;
    }
    it["isolated"] = b.isolated;
    json ex = json::array();
    for (const auto& e : b.exponents) ex.push_back(alg_json(e));
    it["exponents"] = ex;
    it["diagonalizable"] = b.diagonalizable;
    it["diagonalizable_exact"] = b.diagonalizable_exact;
    it["minus_one_check"] = b.minus_one_ok;
    it["bound_status"] = rec.status;
    if (rec.resonance) {
      json res = resonance_body(*rec.resonance);
      if (rec.status == "certified") res["max_k1"] = rec.resonance->bound.value;
      it["resonance"] = res;
    }
    items.push_back(it);
  }
  o["balances"] = {{"family_detected", r.search.family_detected},
                   {"incomplete", r.search.incomplete},
                   {"items", items}};

  json bound = {{"kind", to_string(r.bound.kind)}};
  if (r.bound.kind == BoundKind::Certified) {
    bound["m_max"] = r.bound.value;
    bound["source_balance"] = *r.bound_source + 1;
  }
  if (r.bound.m_min) bound["m_min"] = *r.bound.m_min;
  o["degree_bound"] = bound;

  json spaces = json::array();
  std::size_t total = 0;
  for (const auto& s : r.scan.spaces) {
    json basis = json::array();
    for (const auto& f : s.basis) basis.push_back(field_json(f));
    spaces.push_back({{"degree", s.degree},
                      {"dim", s.dim()},
                      {"contains_trivial", s.contains_trivial},
                      {"monomial_counts", s.monomial_counts},
                      {"basis", basis}});
    total += s.dim();
  }
  o["symmetries"] = {{"m_min", r.scan.m_min},
                     {"m_max", r.scan.m_max},
                     {"bound_certified", r.scan.certified},
                     {"total_dim", total},
                     {"dim_modulo_field", r.scan.nontrivial_total()},
                     {"spaces", spaces}};

  if (r.algebra) {
    const auto names = basis_names(r.algebra->dim());
    json a = json::parse(table_json(*r.algebra, names));
    o["algebra"] = a;
  } else {
    o["algebra"] = nullptr;
  }
  o["verdict"] = r.verdict;
  o["warnings"] = r.warnings;
  return o.dump(2) + "\n";
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream os;
  const auto& vars = r.system.var_names;
  os << "system:\n";
  for (std::size_t j = 0; j < vars.size(); ++j)
    os << "  " << vars[j] << "' = " << to_string(r.system.equations.comps[j], vars) << "\n";
  for (const auto& [k, v] : r.system.bound_params) os << "  param " << k << " = " << to_string(v) << "\n";
  os << "weights: g = (" << weights_string(r.weights) << "), l = " << r.weights.l << "\n";
  if (r.semi) {
    os << "semi-quasihomogeneous: " << to_string(r.semi->sign)
       << (r.semi->weights_derived ? " (weights derived from the lowest admissible core)" : "") << "\n";
    os << "  truncation:\n";
    for (std::size_t j = 0; j < vars.size(); ++j)
      os << "    " << vars[j] << "' = " << to_string(r.semi->core.comps[j], vars) << "\n";
  }
  os << "balances" << (r.search.family_detected ? " (non-isolated family present)" : "")
     << (r.search.incomplete ? " (list may be incomplete)" : "") << ":\n";
  for (const auto& rec : r.records) {
    const Balance& b = rec.balance;
    os << "  c = " << balance_string(b) << (b.isolated ? "" : " [family member]") << "\n";
    os << "    exponents " << exponents_string(b.exponents) << ", "
       << (b.diagonalizable ? "diagonalizable" : "not diagonalizable") << ", K(Gc) = -Gc "
       << (b.minus_one_ok ? "ok" : "FAILED") << "\n";
    os << "    theorem: " << rec.status;
    if (rec.resonance) {
      if (rec.status == "certified") os << ", max k1 = " << rec.resonance->bound.value;
      os << ", " << rec.resonance->particular.size() << " particular solution(s)";
      if (!rec.resonance->homogeneous.empty()) os << ", " << rec.resonance->homogeneous.size() << " generator(s)";
    }
    os << "\n";
  }
  os << "degree bound: " << to_string(r.bound.kind);
  if (r.bound.kind == BoundKind::Certified) os << " M <= " << r.bound.value;
  if (r.bound.m_min) os << ", analytic floor M >= " << *r.bound.m_min;
  os << "\n";
  os << "symmetry spaces:\n";
  std::size_t idx = 0;
  for (const auto& s : r.scan.spaces) {
    os << "  M = " << s.degree << ": dim " << s.dim() << (s.contains_trivial ? " (contains the field itself)" : "")
       << "\n";
    for (const auto& f : s.basis) os << "    X" << ++idx << " = " << to_string(f) << "\n";
  }
  if (r.algebra) {
    os << "commutator table:\n" << table_text(*r.algebra, basis_names(r.algebra->dim()));
  }
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  os << "verdict: " << r.verdict << "\n";
  if (r.semi) os << "full system (" << r.semi->symmetry_class << " symmetries): " << r.semi->conclusion << "\n";
  os << "time: " << elapsed_string(r.seconds) << "\n";
  return os.str();
}

std::string table_text(const BracketTable& t, const std::vector<std::string>& names) {
  std::ostringstream os;
  const std::size_t n = names.size();
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  std::size_t width = 4;
  for (const auto& nm : names) width = std::max(width, nm.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cells[i][j] = combination_string(t.structure[i][j], names);
      if (!t.closed && i != j && !t.basis.empty() && !in_span(lie_bracket(t.basis[i], t.basis[j]), t.basis))
        cells[i][j] = "outside";
      width = std::max(width, cells[i][j].size());
    }
  auto pad = [width](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
  os << pad("") << " |";
  for (const auto& nm : names) os << " " << pad(nm);
  os << "\n" << std::string(width + 2 + n * (width + 1), '-') << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << pad(names[i]) << " |";
    for (std::size_t j = 0; j < n; ++j) os << " " << pad(cells[i][j]);
    os << "\n";
  }
  if (t.closed) {
    auto d = derived_series(t);
    os << "derived series:";
    for (auto v : d) os << " " << v;
    os << "\n" << (d.back() == 0 ? "solvable" : "not solvable") << "\n";
  } else {
    os << "not closed: [" << names[t.offending->first] << ", " << names[t.offending->second]
       << "] leaves the span\n";
  }
  return os.str();
}

std::string table_json(const BracketTable& t, const std::vector<std::string>& names) {
  json o;
  o["basis"] = names;
  json fields = json::array();
  for (const auto& f : t.basis) fields.push_back(field_json(f));
  o["fields"] = fields;
  o["closed"] = t.closed;
  json table = json::array();
  for (std::size_t i = 0; i < names.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < names.size(); ++j) row.push_back(combination_string(t.structure[i][j], names));
    table.push_back(row);
  }
  o["table"] = table;
  if (t.closed) {
    auto d = derived_series(t);
    o["derived_series"] = d;
    o["solvable"] = d.back() == 0;
  } else {
    o["offending"] = {names[t.offending->first], names[t.offending->second]};
  }
  return o.dump(2) + "\n";
}

std::string resonance_text(const ResonanceQuery& q, const ResonanceReport& r) {
  std::ostringstream os;
  os << "exponents " << exponents_string(q.lambdas) << ", l = " << q.l << "\n";
  auto kstr = [](const std::vector<long>& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? ", " : "") + std::to_string(k[i]);
    return s + ")";
  };
  os << "particular solutions:\n";
  for (const auto& s : r.particular) os << "  k = " << kstr(s.k) << ", j = " << s.j << "\n";
  if (r.particular.empty()) os << "  none\n";
  if (!r.homogeneous.empty()) {
    os << "homogeneous generators:\n";
    for (const auto& h : r.homogeneous) os << "  " << kstr(h) << "\n";
  }
  if (!r.free_directions.empty()) {
    os << "free directions:";
    for (auto i : r.free_directions) os << " k" << i + 1;
    os << "\n";
  }
  if (q.mode == ResonanceMode::Theorem) {
    os << "k1 bound: " << to_string(r.bound.kind);
    if (r.bound.kind == BoundKind::Certified) os << " (M <= " << r.bound.value << ")";
    os << "\n";
  }
  if (r.truncated) os << "enumeration truncated\n";
  return os.str();
}

std::string resonance_json(const ResonanceQuery& q, const ResonanceReport& r) {
  json o;
  o["schema_version"] = 1;
  o["command"] = q.mode == ResonanceMode::Theorem ? "resonance" : "equilibrium";
  json lam = json::array();
  for (const auto& a : q.lambdas) lam.push_back(alg_json(a));
  o["lambdas"] = lam;
  o["l"] = q.l;
  o["result"] = resonance_body(r);
  if (q.mode == ResonanceMode::Theorem) {
    json bound = {{"kind", to_string(r.bound.kind)}};
    if (r.bound.kind == BoundKind::Certified) bound["m_max"] = r.bound.value;
    o["bound"] = bound;
  } else {
    o["order"] = q.order;
  }
  return o.dump(2) + "\n";
}

}  // namespace liesym
