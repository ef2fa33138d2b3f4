#pragma once

#include "clutterlab/properties.hpp"

#include <json.hpp>

#include <climits>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace clutterlab {

namespace detail {

// ---------- overflow-checked 64-bit integer for the fast geometry path ----------

// Drop-in integer for ray_enumeration: same arithmetic as long long, but any
// overflow raises BoundExceeded so the caller can fall back to unbounded
// precision instead of computing garbage.
struct I64 {
  long long v = 0;
  I64() = default;
  I64(int x) : v(x) {}
  I64(long long x) : v(x) {}
};

inline void i64_overflow() { fail(errc::bound_exceeded, "fast-path arithmetic overflow"); }

inline I64 operator*(I64 a, I64 b) {
  long long r;
  if (__builtin_mul_overflow(a.v, b.v, &r)) i64_overflow();
  return I64(r);
}
inline I64 operator-(I64 a, I64 b) {
  long long r;
  if (__builtin_sub_overflow(a.v, b.v, &r)) i64_overflow();
  return I64(r);
}
inline I64 operator-(I64 a) {
  if (a.v == LLONG_MIN) i64_overflow();
  return I64(-a.v);
}
inline I64& operator+=(I64& a, I64 b) {
  if (__builtin_add_overflow(a.v, b.v, &a.v)) i64_overflow();
  return a;
}
inline I64 operator%(I64 a, I64 b) { return I64(a.v % b.v); }
inline I64& operator/=(I64& a, I64 b) {
  a.v /= b.v;
  return a;
}
inline bool operator<(I64 a, I64 b) { return a.v < b.v; }
inline bool operator>(I64 a, I64 b) { return a.v > b.v; }
inline bool operator<=(I64 a, I64 b) { return a.v <= b.v; }
inline bool operator>=(I64 a, I64 b) { return a.v >= b.v; }
inline bool operator==(I64 a, I64 b) { return a.v == b.v; }
inline bool operator!=(I64 a, I64 b) { return a.v != b.v; }

// Vertex integrality of the covering polyhedron, entirely in checked 64-bit
// arithmetic.  Throws BoundExceeded on overflow; callers retry unbounded.
inline bool ideal_fast(int n, const std::vector<std::uint64_t>& edges) {
  const int dim = n + 1;  // homogenizing coordinate last
  std::vector<std::vector<I64>> cons;
  for (int i = 0; i < n; ++i) {
    std::vector<I64> row(dim, I64(0));
    row[i] = I64(1);
    cons.push_back(std::move(row));
  }
  for (std::uint64_t e : edges) {
    std::vector<I64> row(dim, I64(0));
    for (std::uint64_t m = e; m; m &= m - 1) row[__builtin_ctzll(m)] = I64(1);
    row[n] = I64(-1);
    cons.push_back(std::move(row));
  }
  {
    std::vector<I64> row(dim, I64(0));
    row[n] = I64(1);
    cons.push_back(std::move(row));
  }
  DDResult<I64> dd = ray_enumeration<I64>(dim, cons);
  if (!dd.lineality.empty())
    fail(errc::internal_contradiction, "ideal_fast: covering cone has lineality");
  bool any_vertex = false;
  bool ok = true;
  for (const auto& r : dd.rays) {
    long long t = r[n].v;
    if (t < 0) fail(errc::internal_contradiction, "ideal_fast: negative homogenizing coordinate");
    if (t == 0) continue;
    any_vertex = true;
    for (int i = 0; i < n && ok; ++i)
      if (r[i].v % t != 0) ok = false;
  }
  if (!any_vertex)
    fail(errc::internal_contradiction, "ideal_fast: covering polyhedron has no vertices");
  return ok;
}

// ---------- mask-level helpers for the enumeration sweeps ----------

inline bool pm_exists_masks(const std::vector<std::uint64_t>& edges, std::uint64_t full) {
  std::function<bool(std::uint64_t)> rec = [&](std::uint64_t used) -> bool {
    if (used == full) return true;
    int v = __builtin_ctzll(~used);
    for (std::uint64_t e : edges) {
      if (!(e & (std::uint64_t(1) << v)) || (e & used)) continue;
      if (rec(used | e)) return true;
    }
    return false;
  };
  return rec(0);
}

inline bool cover_partition_exists_masks(const std::vector<std::uint64_t>& covers,
                                         std::uint64_t full) {
  std::function<bool(std::uint64_t)> rec = [&](std::uint64_t used) -> bool {
    if (used == full) return true;
    int v = __builtin_ctzll(~used);
    for (std::uint64_t u : covers) {
      if (!(u & (std::uint64_t(1) << v)) || (u & used)) continue;
      if (rec(used | u)) return true;
    }
    return false;
  };
  return rec(0);
}

inline bool unit_cover_exists_masks(const std::vector<std::uint64_t>& covers,
                                    const std::vector<std::uint64_t>& edges) {
  for (std::uint64_t u : covers) {
    bool all_one = true;
    for (std::uint64_t e : edges)
      if (__builtin_popcountll(u & e) != 1) {
        all_one = false;
        break;
      }
    if (all_one) return true;
  }
  return false;
}

inline bool vertex_critical_masks(const std::vector<std::uint64_t>& edges, int n, int a0) {
  for (int v = 0; v < n; ++v) {
    std::vector<std::uint64_t> sub;
    for (std::uint64_t e : edges)
      if (!(e & (std::uint64_t(1) << v))) sub.push_back(e);
    int av = sub.empty() ? 0 : alpha0_masks(sub, n);
    if (av >= a0) return false;
  }
  return true;
}

// Packing property by memoized descent through single-vertex minors; minors
// with an empty edge or no edges are skipped exactly as in the reference scan.
inline bool packing_masks(int n, const std::vector<std::uint64_t>& edges,
                          std::vector<std::uint8_t>& memo) {
  memo.assign(std::size_t(1) << (2 * n), 0);
  const std::uint64_t full = (std::uint64_t(1) << n) - 1;
  std::function<bool(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t z,
                                                              std::uint64_t o) -> bool {
    std::size_t key = (std::size_t(z) << n) | o;
    if (memo[key]) return memo[key] == 1;
    std::vector<std::uint64_t> sub;
    bool valid = true;
    for (std::uint64_t e : edges) {
      if (e & z) continue;
      std::uint64_t f = e & ~o;
      if (!f) {
        valid = false;
        break;
      }
      sub.push_back(f);
    }
    bool ok = true;
    if (valid && !sub.empty()) {
      std::vector<std::uint64_t> mins;
      for (std::size_t i = 0; i < sub.size() && ok; ++i) {
        bool dom = false;
        for (std::size_t j = 0; j < sub.size() && !dom; ++j)
          if (i != j && (sub[j] & sub[i]) == sub[j] && (sub[j] != sub[i] || j < i)) dom = true;
        if (!dom) mins.push_back(sub[i]);
      }
      if (alpha0_masks(mins, n) != beta1_masks(mins)) ok = false;
      if (ok) {
        std::uint64_t rest = full & ~(z | o);
        for (std::uint64_t m = rest; m && ok; m &= m - 1) {
          std::uint64_t b = std::uint64_t(1) << __builtin_ctzll(m);
          if (!rec(z | b, o)) ok = false;
          if (ok && !rec(z, o | b)) ok = false;
        }
      }
    }
    memo[key] = ok ? 1 : 2;
    return ok;
  };
  return rec(0, 0);
}

// ---------- orderly (isomorph-free) enumeration ----------

// Candidate-edge universe closed under vertex permutations, with the
// precomputed action of every permutation on edge indices.
struct Universe {
  int n = 0;
  std::vector<std::uint64_t> masks;                   // ascending
  std::vector<std::vector<std::uint8_t>> edge_map;    // [perm][edge] -> image index
  std::vector<std::vector<std::uint8_t>> suffix_min;  // [perm][i] = min over edge_map[perm][i..]
};

inline Universe make_universe(int n, std::vector<std::uint64_t> masks) {
  check_mask_width(n, "make_universe");
  if (masks.size() > 63)
    fail(errc::bound_exceeded, "enumeration universe exceeds 63 candidate edges");
  Universe u;
  u.n = n;
  std::sort(masks.begin(), masks.end());
  u.masks = std::move(masks);
  const int C = int(u.masks.size());
  std::vector<int> index_of(std::size_t(1) << n, -1);
  for (int i = 0; i < C; ++i) index_of[u.masks[i]] = i;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::uint8_t> em(C);
    for (int e = 0; e < C; ++e) {
      std::uint64_t img = 0;
      for (std::uint64_t m = u.masks[e]; m; m &= m - 1)
        img |= std::uint64_t(1) << perm[__builtin_ctzll(m)];
      int j = index_of[img];
      if (j < 0) fail(errc::internal_contradiction, "make_universe: universe not closed");
      em[e] = std::uint8_t(j);
    }
    std::vector<std::uint8_t> sm(C + 1, 255);
    for (int i = C - 1; i >= 0; --i) sm[i] = std::min(sm[i + 1], em[i]);
    u.edge_map.push_back(std::move(em));
    u.suffix_min.push_back(std::move(sm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return u;
}

inline Universe uniform_universe(int n, int d) {
  if (d < 1 || d > n) fail(errc::parse, "uniform_universe: need 1 <= d <= n");
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m)
    if (__builtin_popcountll(m) == d) masks.push_back(m);
  return make_universe(n, std::move(masks));
}

inline Universe antichain_universe(int n) {
  if (n > 6) fail(errc::bound_exceeded, "antichain_universe: supports n <= 6");
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) masks.push_back(m);
  return make_universe(n, std::move(masks));
}

// Emits every canonical family whose edges cover all n vertices, exactly one
// representative per isomorphism class.  Canonical means: the ascending edge
// index sequence is lexicographically minimal over all vertex relabelings
// (equivalently: lowest differing universe index lies on the family's side).
// Families grow by appending indices above the current maximum; removing the
// largest index of a canonical family leaves a canonical family, so the tree
// below reaches every class.  Permutation bookkeeping is incremental: each
// live permutation carries its image mask and the first index where the image
// differs; permutations whose future images stay above their difference can
// never reject a descendant and are dropped.
inline void orderly_enumerate(const Universe& u, bool antichain,
                              const std::function<void(const std::vector<int>&)>& emit) {
  const int C = int(u.masks.size());
  const int P = int(u.edge_map.size());
  const std::uint64_t full = (std::uint64_t(1) << u.n) - 1;
  struct PermState {
    int perm;
    std::uint64_t im;
    int diff;  // -1: image set equals the family
  };
  std::vector<std::vector<PermState>> buf(std::size_t(C) + 1);
  std::vector<int> chosen;
  std::vector<std::uint64_t> chosen_masks;

  std::function<void(int, std::uint64_t, std::uint64_t)> rec = [&](int depth, std::uint64_t smask,
                                                                   std::uint64_t covered) {
    if (covered == full) emit(chosen);
    for (int e = chosen.back() + 1; e < C; ++e) {
      if (antichain) {
        bool comparable = false;
        for (std::uint64_t cm : chosen_masks) {
          std::uint64_t em = u.masks[e];
          if ((cm & em) == cm || (cm & em) == em) {
            comparable = true;
            break;
          }
        }
        if (comparable) continue;
      }
      const std::uint64_t ebit = std::uint64_t(1) << e;
      const std::uint64_t smask2 = smask | ebit;
      auto& parent = buf[depth];
      auto& child = buf[depth + 1];
      child.clear();
      bool reject = false;
      for (const PermState& ps : parent) {
        int x = u.edge_map[ps.perm][e];
        if (ps.diff < 0) {
          if (x < e) {
            reject = true;
            break;
          }
          std::uint64_t im2 = ps.im | (std::uint64_t(1) << x);
          if (x == e)
            child.push_back({ps.perm, im2, -1});
          else if (u.suffix_min[ps.perm][e + 1] <= e)
            child.push_back({ps.perm, im2, e});
        } else {
          int t = ps.diff;
          if (x < t) {
            reject = true;
            break;
          }
          std::uint64_t im2 = ps.im | (std::uint64_t(1) << x);
          if (x == t) {
            std::uint64_t dmask = im2 ^ smask2;
            if (!dmask) {
              child.push_back({ps.perm, im2, -1});
              continue;
            }
            std::uint64_t low = dmask & (~dmask + 1);
            if (im2 & low) {
              reject = true;
              break;
            }
            int t2 = __builtin_ctzll(dmask);
            if (u.suffix_min[ps.perm][e + 1] <= t2) child.push_back({ps.perm, im2, t2});
          } else if (u.suffix_min[ps.perm][e + 1] <= t) {
            child.push_back({ps.perm, im2, t});
          }
        }
      }
      if (reject) continue;
      chosen.push_back(e);
      chosen_masks.push_back(u.masks[e]);
      rec(depth + 1, smask2, covered | u.masks[e]);
      chosen_masks.pop_back();
      chosen.pop_back();
    }
  };

  // roots: the canonical one-edge families
  std::vector<int> roots;
  if (antichain) {
    for (int k = 1; k <= u.n; ++k) {
      std::uint64_t m = (std::uint64_t(1) << k) - 1;
      for (int i = 0; i < C; ++i)
        if (u.masks[i] == m) roots.push_back(i);
    }
  } else {
    roots.push_back(0);
  }
  for (int r : roots) {
    buf[1].clear();
    bool reject = false;
    for (int p = 0; p < P && !reject; ++p) {
      int x = u.edge_map[p][r];
      if (x < r) reject = true;
      else if (x == r)
        buf[1].push_back({p, std::uint64_t(1) << x, -1});
      else if (u.suffix_min[p][r + 1] <= r)
        buf[1].push_back({p, std::uint64_t(1) << x, r});
    }
    if (reject) continue;
    chosen.assign(1, r);
    chosen_masks.assign(1, u.masks[r]);
    rec(1, std::uint64_t(1) << r, u.masks[r]);
  }
}

}  // namespace detail

// ---------- the exhaustive theorem sweep ----------

struct SweepViolation {
  int n = 0, d = 0;
  std::string which;    // the implication that failed
  std::string clutter;  // serialized instance
};

struct SweepStats {
  long long classes = 0;           // covering canonical families emitted
  long long ideal_true = 0;        // instances with an integral covering polyhedron
  long long mfmc_true = 0;         // ideal and Rees-normal
  long long dd_runs = 0;           // vertex enumerations actually performed
  long long filter_certified = 0;  // non-ideal by the covering-number bound
  long long fallback_runs = 0;     // unbounded-precision retries after overflow
  long long cross_checked = 0;     // instances double-checked at full precision
  long long bound_skips = 0;       // instances skipped due to resource bounds
  std::vector<SweepViolation> violations;
};

// Checks, on every d-uniform isomorphism class with n_lo <= n <= n_hi vertices
// and no isolated vertices:
//   mfmc  => gcd of full-rank minors 1, all invariant factors 1,
//            integrally closed edge cone, packing, ideal
//   packing => ideal
//   ideal => a partition into disjoint minimal covers and a minimal cover
//            meeting every edge exactly once
//   ideal + perfect matching => vertex critical and n = d * alpha0
// Non-ideal instances are certified either by the covering-number bound
// alpha0 > n/d (valid for uniform clutters) or by vertex enumeration; with
// cross_validate every instance with n <= 6 is recomputed at full precision.
inline SweepStats sweep_theorem_suite(int d, int n_lo, int n_hi, bool cross_validate = true,
                                      std::ostream* log = nullptr) {
  SweepStats st;
  std::vector<std::uint8_t> packing_memo;
  for (int n = std::max(n_lo, d); n <= n_hi; ++n) {
    detail::Universe u = detail::uniform_universe(n, d);
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    detail::orderly_enumerate(u, false, [&](const std::vector<int>& idx) {
      ++st.classes;
      if (log && st.classes % 500000 == 0)
        *log << "  sweep d=" << d << ": " << st.classes << " classes...\n";
      std::vector<std::uint64_t> edges;
      edges.reserve(idx.size());
      for (int i : idx) edges.push_back(u.masks[i]);

      int a0 = detail::alpha0_masks(edges, n);
      int b1 = detail::beta1_masks(edges);
      bool konig = a0 == b1;
      bool pm = (n % d == 0) && detail::pm_exists_masks(edges, full);

      auto instance = [&]() {
        std::vector<std::vector<int>> ev;
        for (std::uint64_t e : edges) ev.push_back(detail::mask_to_vertices(e));
        return make_clutter(n, ev);
      };
      auto violation = [&](const std::string& which) {
        st.violations.push_back({n, d, which, serialize_clutter(instance())});
        if (log) *log << "  VIOLATION " << which << " at n=" << n << " d=" << d << "\n";
      };

      bool ideal;
      if (a0 * d > n) {
        ideal = false;  // covering-number certificate, uniform case
        ++st.filter_certified;
      } else {
        ++st.dd_runs;
        try {
          ideal = detail::ideal_fast(n, edges);
        } catch (const error& e) {
          if (e.kind() != errc::bound_exceeded) throw;
          ++st.fallback_runs;
          ideal = is_ideal(instance()).ideal;
        }
      }
      if (cross_validate && n <= 6) {
        ++st.cross_checked;
        if (is_ideal(instance()).ideal != ideal) violation("idealness-certificate-mismatch");
      }

      if (!ideal) {
        // packing => ideal (contrapositive; packing needs König already)
        if (konig && detail::packing_masks(n, edges, packing_memo)) violation("packing=>ideal");
        return;
      }
      ++st.ideal_true;

      auto covers = detail::minimal_transversal_masks(n, edges);
      if (!detail::cover_partition_exists_masks(covers, full)) violation("ideal=>cover-partition");
      if (!detail::unit_cover_exists_masks(covers, edges)) violation("ideal=>unit-cover");
      if (pm) {
        if (!detail::vertex_critical_masks(edges, n, a0)) violation("ideal+pm=>vertex-critical");
        if (n != d * a0) violation("ideal+pm=>n=d*alpha0");
      }

      bool rees;
      try {
        rees = rees_is_normal(instance());
      } catch (const error& e) {
        if (e.kind() != errc::bound_exceeded) throw;
        ++st.bound_skips;
        if (log) *log << "  bound-skip (rees) at n=" << n << " d=" << d << "\n";
        return;
      }
      if (!rees) return;
      ++st.mfmc_true;

      Clutter c = instance();
      if (!has_packing_property(c).first) violation("mfmc=>packing");
      IntMatrix a = incidence_matrix(c);
      if (delta_r(a, rank(a)) != 1) violation("mfmc=>delta1");
      for (const Int& f : smith_normal_form(a).invariant_factors)
        if (f != 1) {
          violation("mfmc=>snf-identity");
          break;
        }
      try {
        if (!edge_cone_closure(c).hilbert) violation("mfmc=>hilbert");
      } catch (const error& e) {
        if (e.kind() != errc::bound_exceeded) throw;
        ++st.bound_skips;
        if (log) *log << "  bound-skip (closure) at n=" << n << " d=" << d << "\n";
      }
    });
  }
  return st;
}

// ---------- the implication-search harness ----------

struct SearchTask {
  int n_lo = 2;
  int n_hi = 6;
  int d = 2;  // 0: all clutters (mixed edge sizes), otherwise d-uniform
  std::string target;
  bool random = false;
  std::uint64_t seed = 0;  // required in random mode
  int count = 200;         // random draws to examine
  double p = 0.25;         // random edge-inclusion probability
};

struct SearchTargetInfo {
  const char* name;
  bool conjecture;      // false: established statement, a hit in scope is a bug
  bool uniform_scope;   // statement is about uniform clutters only
};

inline const std::vector<SearchTargetInfo>& search_targets() {
  static const std::vector<SearchTargetInfo> t = {
      {"packing=>mfmc", true, false},      {"packing=>ehrhart", true, true},
      {"packing=>delta1B", true, true},    {"mfmc=>urt", true, true},
      {"packing=>ideal", false, false},    {"mfmc=>packing", false, false},
      {"mfmc=>delta1A", false, true},      {"mfmc=>snf-identity", false, true},
      {"mfmc=>hilbert", false, true}};
  return t;
}

struct SearchCandidate {
  std::string status;  // counterexample | implementation-error | out-of-scope-example | inconclusive
  bool uniform = false;
  int n = 0;
  std::string canonical;
  nlohmann::ordered_json clutter_json;
};

struct SearchResult {
  SearchTask task;
  SearchTargetInfo info{};
  long long tested = 0;
  long long hypothesis_met = 0;
  long long skipped_bound = 0;
  std::vector<SearchCandidate> candidates;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json t;
    t["mode"] = task.random ? "random" : "exhaustive";
    t["target"] = task.target;
    t["kind"] = info.conjecture ? "conjecture" : "theorem";
    t["scope"] = info.uniform_scope ? "uniform" : "all";
    t["d"] = task.d;
    t["n_min"] = task.n_lo;
    t["n_max"] = task.n_hi;
    if (task.random) {
      t["seed"] = task.seed;
      t["count"] = task.count;
      t["p"] = task.p;
    }
    nlohmann::ordered_json cands = nlohmann::ordered_json::array();
    long long counterexamples = 0, bugs = 0, out_of_scope = 0, inconclusive = 0;
    for (const auto& c : candidates) {
      nlohmann::ordered_json one;
      one["status"] = c.status;
      one["uniform"] = c.uniform;
      one["n"] = c.n;
      one["canonical"] = c.canonical;
      one["clutter"] = c.clutter_json;
      cands.push_back(one);
      if (c.status == "counterexample") ++counterexamples;
      else if (c.status == "implementation-error") ++bugs;
      else if (c.status == "out-of-scope-example") ++out_of_scope;
      else ++inconclusive;
    }
    nlohmann::ordered_json out;
    out["task"] = t;
    out["tested"] = tested;
    out["hypothesis_met"] = hypothesis_met;
    out["skipped_bound"] = skipped_bound;
    out["candidates"] = cands;
    nlohmann::ordered_json sum;
    sum["counterexamples"] = counterexamples;
    sum["implementation_errors"] = bugs;
    sum["out_of_scope_examples"] = out_of_scope;
    sum["inconclusive"] = inconclusive;
    out["summary"] = sum;
    return out;
  }
};

namespace detail {

inline int enumeration_cap(int fallback) {
  if (const char* s = std::getenv("CLUTTERLAB_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 63) return int(v);
  }
  return fallback;
}

inline bool target_hypothesis(const std::string& target, const Clutter& c) {
  if (target.rfind("packing", 0) == 0) {
    if (alpha0(c) != beta1(c)) return false;  // König is necessary
    return has_packing_property(c).first;
  }
  return has_mfmc(c);
}

inline bool target_conclusion(const std::string& target, const Clutter& c) {
  if (target == "packing=>mfmc") return has_mfmc(c);
  if (target == "packing=>ehrhart") return ehrhart_equality(c);
  if (target == "packing=>delta1B" ) {
    IntMatrix a = incidence_matrix(c);
    IntMatrix b(c.n + 1, c.q());
    for (int i = 0; i < c.n; ++i)
      for (int j = 0; j < c.q(); ++j) b.at(i, j) = a.at(i, j);
    for (int j = 0; j < c.q(); ++j) b.at(c.n, j) = 1;
    return delta_r(b, rank(b)) == 1;
  }
  if (target == "mfmc=>urt") {
    std::vector<std::vector<Int>> cols;
    for (const auto& e : c.edges) {
      std::vector<Int> g(c.n, Int(0));
      for (int v : e) g[v] = 1;
      cols.push_back(std::move(g));
    }
    return unimodular_regular_triangulation_search(cols, 64).found;
  }
  if (target == "packing=>ideal") return is_ideal(c).ideal;
  if (target == "mfmc=>packing") return has_packing_property(c).first;
  if (target == "mfmc=>delta1A") {
    IntMatrix a = incidence_matrix(c);
    return delta_r(a, rank(a)) == 1;
  }
  if (target == "mfmc=>snf-identity") {
    for (const Int& f : smith_normal_form(incidence_matrix(c)).invariant_factors)
      if (f != 1) return false;
    return true;
  }
  if (target == "mfmc=>hilbert") return edge_cone_closure(c).hilbert;
  fail(errc::parse, "unknown search target '" + target + "'");
}

}  // namespace detail

// Runs a search task: enumerate instances (exhaustively up to isomorphism, or
// by seeded random draws), filter by the target's hypothesis, test the
// conclusion, re-verify every candidate on a freshly parsed copy before
// emitting it.  Bound overruns on single instances are logged to `log` and
// counted, never treated as pass or fail.
inline SearchResult run_search(const SearchTask& task, std::ostream* log = nullptr) {
  SearchResult res;
  res.task = task;
  bool known = false;
  for (const auto& t : search_targets())
    if (task.target == t.name) {
      res.info = t;
      known = true;
    }
  if (!known) fail(errc::parse, "unknown search target '" + task.target + "'");
  if (task.n_lo < 1 || task.n_lo > task.n_hi) fail(errc::parse, "bad vertex range");
  if (task.random && task.seed == 0)
    fail(errc::parse, "random mode requires an explicit nonzero seed");
  const int iface = task.random ? 9 : 8;  // canonical forms cap random mode at 9
  if (task.n_hi > iface)
    fail(errc::parse, "vertex range exceeds the search interface bound " + std::to_string(iface));
  const int cap = detail::enumeration_cap(iface);
  if (task.n_hi > cap)
    fail(errc::bound_exceeded,
         "CLUTTERLAB_MAX_N lowers the enumeration bound to " + std::to_string(cap));

  auto examine = [&](const Clutter& c) {
    ++res.tested;
    try {
      if (!detail::target_hypothesis(task.target, c)) return;
      ++res.hypothesis_met;
      if (detail::target_conclusion(task.target, c)) return;
      // candidate: re-verify on a fresh copy before emitting
      Clutter fresh = parse_clutter(serialize_clutter(c));
      if (!detail::target_hypothesis(task.target, fresh) ||
          detail::target_conclusion(task.target, fresh))
        fail(errc::internal_contradiction, "search: candidate did not re-verify");
      SearchCandidate cand;
      cand.uniform = uniformity(fresh).has_value();
      bool in_scope = cand.uniform || !res.info.uniform_scope;
      if (task.target == "mfmc=>urt")
        cand.status = "inconclusive";  // absence of a sampled witness is not a disproof
      else if (!in_scope)
        cand.status = "out-of-scope-example";
      else
        cand.status = res.info.conjecture ? "counterexample" : "implementation-error";
      cand.n = fresh.n;
      cand.canonical = canonical_form(fresh);
      cand.clutter_json = nlohmann::ordered_json::parse(serialize_clutter(fresh));
      res.candidates.push_back(std::move(cand));
    } catch (const error& e) {
      if (e.kind() != errc::bound_exceeded) throw;
      ++res.skipped_bound;
      if (log) *log << "search: bound exceeded, instance skipped: " << e.what() << "\n";
    }
  };

  // emission order is canonical-string order regardless of how instances were
  // scheduled, so reports are reproducible by construction
  auto finish = [&res]() -> SearchResult& {
    std::sort(res.candidates.begin(), res.candidates.end(),
              [](const SearchCandidate& a, const SearchCandidate& b) {
                return a.canonical < b.canonical;
              });
    return res;
  };

  if (!task.random) {
    if (task.d == 0 && task.n_hi > 6)
      fail(errc::bound_exceeded, "mixed-size exhaustive search supports n <= 6");
    for (int n = task.n_lo; n <= task.n_hi; ++n) {
      if (task.d == 0) {
        detail::Universe u = detail::antichain_universe(n);
        detail::orderly_enumerate(u, true, [&](const std::vector<int>& idx) {
          std::vector<std::vector<int>> ev;
          for (int i : idx) ev.push_back(detail::mask_to_vertices(u.masks[i]));
          examine(make_clutter(n, ev));
        });
      } else {
        if (n < task.d) continue;
        detail::Universe u = detail::uniform_universe(n, task.d);
        detail::orderly_enumerate(u, false, [&](const std::vector<int>& idx) {
          std::vector<std::vector<int>> ev;
          for (int i : idx) ev.push_back(detail::mask_to_vertices(u.masks[i]));
          examine(make_clutter(n, ev));
        });
      }
    }
    return finish();
  }

  // random mode: independent edge draws, reduced to the minimal members,
  // de-duplicated up to isomorphism
  std::mt19937_64 rng(task.seed);
  const std::uint64_t threshold =
      task.p >= 1.0 ? ~std::uint64_t(0)
                    : std::uint64_t(task.p * 18446744073709551616.0);
  std::set<std::string> seen;
  int made = 0;
  long long attempts = 0;
  while (made < task.count && attempts < 200LL * task.count) {
    ++attempts;
    int n = task.n_lo + int(rng() % std::uint64_t(task.n_hi - task.n_lo + 1));
    std::vector<std::uint64_t> pool;
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
      int pc = __builtin_popcountll(m);
      if (task.d != 0 && pc != task.d) continue;
      if (task.d == 0 && pc < 1) continue;
      if (rng() <= threshold) pool.push_back(m);
    }
    // keep the inclusion-minimal members
    std::vector<std::uint64_t> mins;
    for (std::uint64_t a : pool) {
      bool dom = false;
      for (std::uint64_t b : pool)
        if (b != a && (b & a) == b) {
          dom = true;
          break;
        }
      if (!dom) mins.push_back(a);
    }
    std::uint64_t covered = 0;
    for (std::uint64_t e : mins) covered |= e;
    if (mins.empty() || covered != (std::uint64_t(1) << n) - 1) continue;
    std::vector<std::vector<int>> ev;
    for (std::uint64_t e : mins) ev.push_back(detail::mask_to_vertices(e));
    Clutter c = make_clutter(n, ev);
    if (!seen.insert(canonical_form(c)).second) continue;
    ++made;
    examine(c);
  }
  return finish();
}

}  // namespace clutterlab
