#include "liesym/resonance.hpp"

#include <algorithm>
#include <complex>
#include <functional>
#include <numeric>

#include "liesym/errors.hpp"

namespace liesym {

namespace {

constexpr std::size_t kMaxSolutions = 200000;
constexpr long long kMaxNodes = 50000000;

bool all_exact(const std::vector<AlgNum>& v) {
  return std::all_of(v.begin(), v.end(), [](const AlgNum& a) { return a.is_exact(); });
}

long long to_ll(const Int& z) {
  if (!z.fits_slong_p()) throw LimitError("resonance coefficients too large");
  return z.get_si();
}

// Integer problem: sum_i a_i k_i = b with 0 <= k_i <= hi_i over the listed coordinates.
struct IntProblem {
  std::vector<std::size_t> coords;
  std::vector<long long> a;
  std::vector<long> hi;
};

// Depth-first enumeration with interval pruning on the remaining coordinates.
// Returns false if the solution limit was reached.
bool enumerate_int(const IntProblem& p, long long b, std::size_t n, std::vector<std::vector<long>>& out,
                   bool skip_zero = false) {
  const std::size_t m = p.coords.size();
  std::vector<long long> rem_min(m + 1, 0), rem_max(m + 1, 0);
  for (std::size_t i = m; i-- > 0;) {
    long long span = p.a[i] * p.hi[i];
    rem_min[i] = rem_min[i + 1] + std::min(0LL, span);
    rem_max[i] = rem_max[i + 1] + std::max(0LL, span);
  }
  std::vector<long> k(n, 0);
  bool ok = true;
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long s) {
    if (!ok) return;
    const long long need = b - s;
    if (need < rem_min[i] || need > rem_max[i]) return;
    if (i == m) {
      if (need != 0) return;
      if (skip_zero && std::all_of(k.begin(), k.end(), [](long v) { return v == 0; })) return;
      if (out.size() >= kMaxSolutions) {
        ok = false;
        return;
      }
      out.push_back(k);
      return;
    }
    for (long v = 0; v <= p.hi[i]; ++v) {
      k[p.coords[i]] = v;
      rec(i + 1, s + p.a[i] * v);
    }
    k[p.coords[i]] = 0;
  };
  rec(0, 0);
  return ok;
}

bool dominates(const std::vector<long>& small, const std::vector<long>& big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

// Keeps the componentwise minimal vectors, in order of increasing total.
std::vector<std::vector<long>> minimal_only(std::vector<std::vector<long>> v) {
  auto total = [](const std::vector<long>& x) { return std::accumulate(x.begin(), x.end(), 0L); };
  std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    long ta = total(a), tb = total(b);
    return ta != tb ? ta < tb : a < b;
  });
  std::vector<std::vector<long>> kept;
  for (auto& x : v)
    if (std::none_of(kept.begin(), kept.end(), [&](const auto& y) { return dominates(y, x); })) kept.push_back(x);
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Common scaling of lambdas and targets to integers.
struct Scaled {
  std::vector<long long> lambda;
  std::vector<long long> target;
};

Scaled scale(const std::vector<Rat>& lambda, const std::vector<Rat>& target) {
  std::vector<Rat> all = lambda;
  all.insert(all.end(), target.begin(), target.end());
  Int d = lcm_of_denominators(all);
  Scaled s;
  for (const auto& v : lambda) s.lambda.push_back(to_ll(Int(v * d)));
  for (const auto& v : target) s.target.push_back(to_ll(Int(v * d)));
  return s;
}

// Minimal nonzero solutions of sum a_i k_i = 0. Components are bounded by the
// largest coefficient of opposite sign (Lambert).
std::vector<std::vector<long>> hilbert_basis(const std::vector<std::size_t>& coords, const std::vector<long long>& a,
                                             std::size_t n, long k_cap, bool& truncated) {
  long long max_pos = 0, max_neg = 0;
  for (auto v : a) {
    max_pos = std::max(max_pos, v);
    max_neg = std::max(max_neg, -v);
  }
  if (max_pos == 0 || max_neg == 0) return {};
  IntProblem p{coords, a, {}};
  for (auto v : a) {
    long long bound = v > 0 ? max_neg : max_pos;
    if (bound > k_cap) truncated = true;
    p.hi.push_back(static_cast<long>(std::min<long long>(bound, k_cap)));
  }
  std::vector<std::vector<long>> sols;
  if (!enumerate_int(p, 0, n, sols, true)) truncated = true;
  return minimal_only(std::move(sols));
}

std::vector<std::complex<double>> approx_all(const std::vector<AlgNum>& v) {
  std::vector<std::complex<double>> out;
  for (const auto& a : v) out.push_back(a.approx());
  return out;
}

// Box enumeration for numeric lambdas; returns false if the node limit was reached.
bool enumerate_numeric(const std::vector<std::size_t>& coords, const std::vector<std::complex<double>>& lambda,
                       std::complex<double> target, long cap, double tol, std::size_t n,
                       std::vector<std::vector<long>>& out, bool skip_zero) {
  std::vector<long> k(n, 0);
  long long nodes = 0;
  bool ok = true;
  const double eps = tol * (1 + std::abs(target));
  std::function<void(std::size_t, std::complex<double>)> rec = [&](std::size_t i, std::complex<double> s) {
    if (!ok) return;
    if (++nodes > kMaxNodes || out.size() >= kMaxSolutions) {
      ok = false;
      return;
    }
    if (i == coords.size()) {
      if (std::abs(s - target) > eps) return;
      if (skip_zero && std::all_of(k.begin(), k.end(), [](long v) { return v == 0; })) return;
      out.push_back(k);
      return;
    }
    for (long v = 0; v <= cap; ++v) {
      k[coords[i]] = v;
      rec(i + 1, s + static_cast<double>(v) * lambda[coords[i]]);
    }
    k[coords[i]] = 0;
  };
  rec(0, {0, 0});
  return ok;
}

}  // namespace

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::Certified: return "Certified";
    case BoundKind::Unbounded: return "Unbounded";
    case BoundKind::Uncertified: return "Uncertified";
  }
  return "?";
}

ResonanceReport equilibrium_resonances(const std::vector<AlgNum>& lambdas, long k, long k_cap, double tol) {
  if (k < 1) throw std::invalid_argument("resonance order must be >= 1");
  (void)k_cap;
  const std::size_t n = lambdas.size();
  ResonanceReport r;
  r.exact = all_exact(lambdas);
  r.bound.kind = r.exact ? BoundKind::Certified : BoundKind::Uncertified;
  r.bound.value = k;
  // All compositions of k into n parts.
  std::vector<std::vector<long>> comps;
  std::vector<long> cur(n, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (n == 0) return;
    if (i + 1 == n) {
      cur[i] = left;
      comps.push_back(cur);
      return;
    }
    for (long v = left; v >= 0; --v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, k);
  for (const auto& kv : comps) {
    for (std::size_t j = 0; j < n; ++j) {
      bool hit;
      if (r.exact) {
        Rat s = 0;
        for (std::size_t i = 0; i < n; ++i) s += kv[i] * lambdas[i].exact();
        hit = s == lambdas[j].exact();
      } else {
        std::complex<double> s = 0;
        for (std::size_t i = 0; i < n; ++i) s += static_cast<double>(kv[i]) * lambdas[i].approx();
        hit = std::abs(s - lambdas[j].approx()) <= tol * (1 + std::abs(lambdas[j].approx()));
      }
      if (hit) r.particular.push_back({kv, j + 1});
    }
    if (r.particular.size() >= kMaxSolutions) {
      r.truncated = true;
      break;
    }
  }
  return r;
}

ResonanceReport theorem_resonances(const ResonanceQuery& q) {
  const std::size_t n = q.lambdas.size();
  if (n == 0) throw DimensionError("no exponents given");
  if (q.l < 1) throw std::invalid_argument("ramification degree must be positive");
  const bool first_is_minus_one = q.lambdas[0].is_exact()
                                      ? q.lambdas[0].exact() == -1
                                      : std::abs(q.lambdas[0].approx() + 1.0) <= q.tol * 2;
  if (!first_is_minus_one) throw HypothesisError("theorem mode needs lambda_1 = -1");

  ResonanceReport r;
  r.exact = all_exact(q.lambdas);
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i) {
    bool zero = r.exact ? q.lambdas[i].exact() == 0 : std::abs(q.lambdas[i].approx()) <= q.tol;
    (zero ? r.free_directions : active).push_back(i);
  }

  if (!r.exact) {
    auto lam = approx_all(q.lambdas);
    std::vector<std::complex<double>> targets{1.0};
    for (auto v : lam) targets.push_back(static_cast<double>(q.l) * v);
    for (std::size_t j = 0; j < targets.size(); ++j) {
      std::vector<std::vector<long>> sols;
      if (!enumerate_numeric(active, lam, targets[j], q.k_cap, q.tol, n, sols, false)) r.truncated = true;
      for (auto& k : minimal_only(std::move(sols))) r.particular.push_back({std::move(k), j});
    }
    std::vector<std::vector<long>> hom;
    if (!enumerate_numeric(active, lam, 0.0, std::min<long>(q.k_cap, 12), q.tol, n, hom, true)) r.truncated = true;
    r.homogeneous = minimal_only(std::move(hom));
    r.bound.kind = BoundKind::Uncertified;
    r.bound.value = q.k_cap;
    return r;
  }

  std::vector<Rat> lam;
  for (const auto& a : q.lambdas) lam.push_back(a.exact());
  std::vector<Rat> targets{Rat(1)};
  for (const auto& v : lam) targets.push_back(q.l * v);
  Scaled sc = scale(lam, targets);

  const bool unbounded = std::any_of(active.begin(), active.end(), [&](std::size_t i) { return i > 0 && lam[i] > 0; });
  std::vector<long long> a;
  for (auto i : active) a.push_back(sc.lambda[i]);

  for (std::size_t j = 0; j < targets.size(); ++j) {
    IntProblem p{active, a, {}};
    const long long t = sc.target[j];
    if (!unbounded) {
      // lambda_1 = -1 and the rest negative: each k_i |lambda_i| <= -target.
      if (t > 0) continue;
      for (auto v : a) p.hi.push_back(static_cast<long>(-t / -v));
    } else {
      p.hi.assign(active.size(), q.k_cap);
    }
    std::vector<std::vector<long>> sols;
    if (!enumerate_int(p, t, n, sols)) r.truncated = true;
    for (auto& k : minimal_only(std::move(sols))) r.particular.push_back({std::move(k), j});
  }
  r.homogeneous = hilbert_basis(active, a, n, q.k_cap, r.truncated);

  if (unbounded) {
    r.bound.kind = BoundKind::Unbounded;
    r.bound.value = q.k_cap;
  } else {
    r.bound.kind = BoundKind::Certified;
    long best = 0;
    for (const auto& s : r.particular) best = std::max(best, s.k[0]);
    r.bound.value = best;
  }
  return r;
}

DegreeBound max_symmetry_degree(const ResonanceQuery& q, const std::optional<WeightSystem>& ws) {
  DegreeBound b = theorem_resonances(q).bound;
  if (ws) {
    long top = *std::max_element(ws->S.begin(), ws->S.end());
    b.m_min = -top;
  }
  return b;
}

bool consistency_check(const ResonanceReport& r, long M) {
  for (const auto& s : r.particular)
    if (s.k[0] >= M) return true;
  // A homogeneous generator with k_1 > 0 can be added to any solution indefinitely.
  if (!r.particular.empty())
    for (const auto& h : r.homogeneous)
      if (h[0] > 0) return true;
  return false;
}

}  // namespace liesym
