#pragma once

#include "clutterlab/clutter.hpp"
#include "clutterlab/covers.hpp"
#include "clutterlab/linalg.hpp"
#include "clutterlab/polyhedra.hpp"
#include "clutterlab/semigroup.hpp"
#include "clutterlab/triangulation.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace clutterlab {

// ---------- balancedness ----------

struct BalanceResult {
  bool balanced = true;
  // when unbalanced: an odd-order square submatrix with exactly two ones in
  // each of its rows and columns (given by row and column index sets)
  std::vector<int> rows;
  std::vector<int> cols;
};

// A 0/1 matrix is balanced iff its bipartite row/column incidence graph has
// no chordless cycle of length == 2 (mod 4).  Such a cycle visits k rows and
// k columns with k odd, and the induced submatrix has exactly two ones per
// line; conversely any such submatrix yields such a cycle.  The search below
// enumerates chordless cycles by extending induced paths from each start
// node (the smallest node of the cycle), so it is exhaustive.
inline BalanceResult is_balanced(const IntMatrix& m) {
  const int R = m.rows, C = m.cols, N = R + C;
  if (N > 120) fail(errc::bound_exceeded, "is_balanced: matrix too large");
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j)
      if (m.at(i, j) != 0 && m.at(i, j) != 1)
        fail(errc::parse, "is_balanced: matrix entries must be 0 or 1");

  // nodes 0..R-1 are rows, R..R+C-1 are columns
  std::vector<std::vector<char>> adj(N, std::vector<char>(N, 0));
  std::vector<std::vector<int>> nbr(N);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j)
      if (m.at(i, j) == 1) {
        adj[i][R + j] = adj[R + j][i] = 1;
        nbr[i].push_back(R + j);
        nbr[R + j].push_back(i);
      }

  long long budget = 10000000;
  std::vector<int> path;
  std::vector<char> on_path(N, 0);
  BalanceResult res;

  // extend the induced path; all nodes of a cycle exceed its smallest node s
  std::function<bool(int)> grow = [&](int s) -> bool {
    if (--budget < 0) fail(errc::bound_exceeded, "is_balanced: search budget exhausted");
    int last = path.back();
    for (int w : nbr[last]) {
      if (w <= s || on_path[w]) continue;
      int hits = 0;  // adjacencies to interior path nodes (excluding s, last)
      for (std::size_t t = 1; t + 1 < path.size(); ++t)
        if (adj[w][path[t]]) ++hits;
      if (hits > 0) continue;  // would chord the path
      if (path.size() > 1 && adj[w][s]) {
        // closes a chordless cycle s, path[1..], w
        if (path.size() >= 3 && path[1] < w) {
          std::size_t len = path.size() + 1;
          if (len % 4 == 2) {
            for (int v : path)
              (v < R ? res.rows : res.cols).push_back(v < R ? v : v - R);
            (w < R ? res.rows : res.cols).push_back(w < R ? w : w - R);
            std::sort(res.rows.begin(), res.rows.end());
            std::sort(res.cols.begin(), res.cols.end());
            res.balanced = false;
            return true;
          }
        }
        continue;  // adjacent to s: cannot extend the induced path through w
      }
      path.push_back(w);
      on_path[w] = 1;
      if (grow(s)) return true;
      on_path[w] = 0;
      path.pop_back();
    }
    return false;
  };

  for (int s = 0; s < N && res.balanced; ++s) {
    path.assign(1, s);
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    grow(s);
  }
  return res;
}

inline BalanceResult is_balanced(const Clutter& c) { return is_balanced(incidence_matrix(c)); }

// ---------- max-flow min-cut ----------

// Both covering LPs have integral optima for every nonnegative integral
// objective exactly when the covering polyhedron is integral and the blowup
// algebra is normal; that reformulation is finite, so it is the decision
// procedure (the LP route survives as tdi_spot_check).
inline bool has_mfmc(const Clutter& c) { return is_ideal(c).ideal && rees_is_normal(c); }

// ---------- TDI spot check ----------

struct TdiCheck {
  Rat lp_opt = Rat(0);
  bool min_integral = false;
  bool max_integral = false;
};

namespace detail {

// search for a nonnegative integral y with sum(y) == target and A y <= alpha
inline bool integral_dual_attains(const Clutter& c, const std::vector<Int>& alpha,
                                  const Int& target) {
  const int q = c.q();
  std::vector<Int> residual = alpha;
  // static per-edge cap: y_j can never exceed the smallest alpha over its
  // vertices, so suffix sums of caps bound what is still achievable
  std::vector<Int> cap(q, Int(0));
  for (int j = 0; j < q; ++j) {
    Int m = alpha[c.edges[j][0]];
    for (int v : c.edges[j]) m = std::min(m, alpha[v]);
    cap[j] = m;
  }
  std::vector<Int> suffix(q + 1, Int(0));
  for (int j = q - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + cap[j];

  long long budget = 10000000;
  std::function<bool(int, Int)> rec = [&](int j, Int placed) -> bool {
    if (placed == target) return true;
    if (j == q) return false;
    if (placed + suffix[j] < target) return false;
    if (--budget < 0) fail(errc::bound_exceeded, "tdi_spot_check: dual search budget exhausted");
    Int hi = cap[j];
    for (int v : c.edges[j]) hi = std::min(hi, residual[v]);
    hi = std::min(hi, Int(target - placed));
    for (Int y = hi; y >= 0; --y) {
      for (int v : c.edges[j]) residual[v] -= y;
      if (rec(j + 1, placed + y)) return true;
      for (int v : c.edges[j]) residual[v] += y;
    }
    return false;
  };
  return rec(0, Int(0));
}

}  // namespace detail

// Solve min{<alpha,x> : x >= 0, <v_j,x> >= 1 for every edge j} and its dual
// max{sum(y) : y >= 0, sum_{j: i in e_j} y_j <= alpha_i} exactly, and test
// each side for an integral optimum.
inline TdiCheck tdi_spot_check(const Clutter& c, const std::vector<Int>& alpha) {
  if (int(alpha.size()) != c.n) fail(errc::parse, "tdi_spot_check: objective length mismatch");
  for (const Int& a : alpha)
    if (a < 0) fail(errc::parse, "tdi_spot_check: objective must be nonnegative");

  // primal: minimise over the vertices of the covering polyhedron (the
  // recession cone is the nonnegative orthant and alpha >= 0, so some vertex
  // is optimal)
  VRep v = dd_convert_h_to_v(covering_polyhedron(c));
  std::optional<Rat> lp_min;
  for (const auto& p : v.vertices) {
    Rat s(0);
    for (int i = 0; i < c.n; ++i) s += Rat(alpha[i]) * p[i];
    if (!lp_min || s < *lp_min) lp_min = s;
  }
  if (!lp_min) fail(errc::internal_contradiction, "tdi_spot_check: no primal vertices");

  // an integral optimum exists iff some minimal cover attains the optimum:
  // any integral feasible point dominates the characteristic vector of a
  // cover, and alpha >= 0 makes domination only more expensive
  bool min_integral = false;
  for (const auto& u : minimal_vertex_covers(c)) {
    Int s(0);
    for (int i : u) s += alpha[i];
    if (Rat(s) == *lp_min) {
      min_integral = true;
      break;
    }
  }

  // dual: a polytope in edge space; enumerate its vertices
  const int q = c.q();
  HRep dual;
  dual.dim = q;
  for (int j = 0; j < q; ++j) {
    std::vector<Int> row(q, Int(0));
    row[j] = 1;
    dual.a.push_back(std::move(row));
    dual.b.push_back(Int(0));
  }
  for (int i = 0; i < c.n; ++i) {
    std::vector<Int> row(q, Int(0));
    for (int j = 0; j < q; ++j)
      if (std::find(c.edges[j].begin(), c.edges[j].end(), i) != c.edges[j].end()) row[j] = -1;
    dual.a.push_back(std::move(row));
    dual.b.push_back(Int(-alpha[i]));
  }
  VRep w = dd_convert_h_to_v(dual);
  if (!w.rays.empty() || !w.lines.empty())
    fail(errc::internal_contradiction, "tdi_spot_check: dual region is unbounded");
  std::optional<Rat> lp_max;
  for (const auto& p : w.vertices) {
    Rat s(0);
    for (int j = 0; j < q; ++j) s += p[j];
    if (!lp_max || s > *lp_max) lp_max = s;
  }
  if (!lp_max || *lp_max != *lp_min)
    fail(errc::internal_contradiction, "tdi_spot_check: duality gap in exact arithmetic");

  TdiCheck res;
  res.lp_opt = *lp_min;
  res.min_integral = min_integral;
  Rat opt = *lp_max;
  if (boost::multiprecision::denominator(opt) == 1)
    res.max_integral =
        detail::integral_dual_attains(c, alpha, Int(boost::multiprecision::numerator(opt)));
  return res;
}

// ---------- theorem registry ----------

struct PropertyEntry {
  nlohmann::ordered_json value;
  nlohmann::ordered_json witness;  // null when there is nothing to show
  std::string method;              // operation chain that produced the value
};

struct PropertyReport {
  std::string id;
  std::vector<std::pair<std::string, PropertyEntry>> entries;

  void add(const std::string& name, nlohmann::ordered_json value, const std::string& method,
           nlohmann::ordered_json witness = nullptr) {
    entries.push_back({name, PropertyEntry{std::move(value), std::move(witness), method}});
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json props;
    for (const auto& [name, e] : entries) {
      nlohmann::ordered_json one;
      one["value"] = e.value;
      if (!e.witness.is_null()) one["witness"] = e.witness;
      one["method"] = e.method;
      props[name] = one;
    }
    nlohmann::ordered_json out;
    out["id"] = id;
    out["properties"] = props;
    return out;
  }
};

enum class Verdict { pass, fail, hypotheses_not_met };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "hypotheses-not-met";
  }
}

struct TheoremOutcome {
  std::string id;
  Verdict verdict = Verdict::hypotheses_not_met;
  std::string detail;  // one-line human summary
  PropertyReport report;
};

// Stable registry ids, in documented order.
inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "lem-2.2",  "prop-2.5", "prop-2.7", "prop-2.9", "thm-3.6",  "cor-3.8",
      "cor-3.9",  "cor-3.10", "thm-3.14", "prop-3.15", "thm-4.1", "cor-4.2",
      "cor-4.3",  "thm-4.6",  "cor-4.7",  "thm-5.5"};
  return ids;
}

namespace detail {

inline nlohmann::ordered_json cover_json(const std::vector<int>& u) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (int v : u) a.push_back(v + 1);
  return a;
}

inline nlohmann::ordered_json covers_json(const std::vector<std::vector<int>>& us) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& u : us) a.push_back(cover_json(u));
  return a;
}

struct TheoremEval {
  TheoremOutcome out;
  bool hyp_ok = true;
  bool any_fail = false;
  bool any_unvouched_fail = false;

  explicit TheoremEval(const std::string& id) {
    out.id = id;
    out.report.id = id;
  }
  void hypothesis(const std::string& name, bool ok, const std::string& method) {
    out.report.add("hypothesis:" + name, ok, method);
    if (!ok && hyp_ok) {
      hyp_ok = false;
      out.detail = "hypotheses not met: " + name;
    }
  }
  void conclusion(const std::string& name, bool ok, const std::string& method,
                  nlohmann::ordered_json witness = nullptr) {
    out.report.add("conclusion:" + name, ok, method, std::move(witness));
    if (!ok) {
      if (!any_fail) out.detail = "conclusion failed: " + name;
      any_fail = true;
      any_unvouched_fail = true;
    }
  }
  // A conclusion that is only proven under a side condition the caller
  // vouched for: a failure blames the vouch, not the implementation.
  void conclusion_vouched(const std::string& name, bool ok, const std::string& method) {
    out.report.add("conclusion:" + name, ok, method);
    if (!ok) {
      if (!any_fail) out.detail = "conclusion failed: " + name;
      any_fail = true;
    }
  }
  void skipped(const std::string& name, const std::string& why) {
    out.report.add("conclusion:" + name, "skipped", why);
  }
  void note(const std::string& name, nlohmann::ordered_json value, const std::string& method) {
    out.report.add(name, std::move(value), method);
  }
  TheoremOutcome finish(bool proven_statement = true) {
    if (!hyp_ok) {
      out.verdict = Verdict::hypotheses_not_met;
    } else if (any_fail) {
      out.verdict = Verdict::fail;
      if (proven_statement && any_unvouched_fail)
        out.detail = "implementation error: proven statement " + out.id +
                     " violated on this input (" + out.detail + ")";
      else if (!any_unvouched_fail)
        out.detail += " (the caller-asserted side condition may not hold for this input)";
    } else {
      out.verdict = Verdict::pass;
      if (out.detail.empty()) out.detail = "all conclusions hold";
    }
    out.report.add("verdict", verdict_name(out.verdict), "registry evaluation");
    return out;
  }
};

inline bool uniform_hypothesis(TheoremEval& ev, const Clutter& c, std::optional<int>& d) {
  d = uniformity(c);
  ev.hypothesis("uniform", d.has_value(), "all edge sizes equal");
  return d.has_value();
}

inline bool cover_meets_all_edges_once(const Clutter& c, std::vector<int>& found) {
  for (const auto& u : minimal_vertex_covers(c)) {
    bool all_one = true;
    for (const auto& e : c.edges) {
      int hits = 0;
      for (int v : e)
        if (std::binary_search(u.begin(), u.end(), v)) ++hits;
      if (hits != 1) {
        all_one = false;
        break;
      }
    }
    if (all_one) {
      found = u;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Evaluate one registry statement on a clutter: hypotheses first, then each
// conclusion, with witnesses.  A failing conclusion on any of these (all are
// established results) is reported as an implementation error.  assert_cm
// unlocks the extra conclusion of cor-4.7 that is only valid for inputs the
// caller vouches are Cohen-Macaulay.
inline TheoremOutcome verify_theorem(const Clutter& c, const std::string& id,
                                     bool assert_cm = false) {
  using detail::TheoremEval;
  TheoremEval ev(id);
  std::optional<int> d;

  try {
    if (id == "lem-2.2") {
      if (detail::uniform_hypothesis(ev, c, d)) {
        ev.hypothesis("ideal", is_ideal(c).ideal, "covering-polyhedron vertex enumeration");
        if (ev.hyp_ok) {
          std::vector<int> u;
          bool found = detail::cover_meets_all_edges_once(c, u);
          ev.conclusion("some minimal cover meets every edge exactly once", found,
                        "scan of the minimal-cover list",
                        found ? detail::cover_json(u) : nlohmann::ordered_json(nullptr));
        }
      }
    } else if (id == "prop-2.5") {
      if (detail::uniform_hypothesis(ev, c, d)) {
        ev.hypothesis("ideal", is_ideal(c).ideal, "covering-polyhedron vertex enumeration");
        if (ev.hyp_ok) {
          auto parts = cover_partition_classes(c, *d);
          ev.conclusion("vertex set partitions into d disjoint minimal covers", parts.has_value(),
                        "backtracking over disjoint minimal covers",
                        parts ? detail::covers_json(*parts) : nlohmann::ordered_json(nullptr));
        }
      }
    } else if (id == "prop-2.7") {
      if (detail::uniform_hypothesis(ev, c, d)) {
        auto pm = find_perfect_matching(c);
        ev.hypothesis("perfect matching", pm.has_value(), "exact-cover search over edges");
        ev.hypothesis("ideal", is_ideal(c).ideal, "covering-polyhedron vertex enumeration");
        if (ev.hyp_ok)
          ev.conclusion("vertex critical", is_vertex_critical(c),
                        "covering number of every single-vertex deletion");
      }
    } else if (id == "prop-2.9") {
      if (detail::uniform_hypothesis(ev, c, d)) {
        auto pm = find_perfect_matching(c);
        ev.hypothesis("perfect matching", pm.has_value(), "exact-cover search over edges");
        ev.hypothesis("ideal", is_ideal(c).ideal, "covering-polyhedron vertex enumeration");
        if (ev.hyp_ok) {
          int r = int(pm->size());
          int a0 = alpha0(c);
          ev.conclusion("matching size equals covering number", r == a0,
                        "perfect-matching size vs branch-and-bound covering number");
          auto parts = cover_partition_classes(c, *d, a0);
          ev.conclusion("partition into d minimal covers of size alpha0", parts.has_value(),
                        "backtracking over disjoint minimal covers of the prescribed size",
                        parts ? detail::covers_json(*parts) : nlohmann::ordered_json(nullptr));
        }
      }
    } else if (id == "thm-3.6") {
      if (detail::uniform_hypothesis(ev, c, d)) {
        ev.hypothesis("mfmc", has_mfmc(c), "integral covering polyhedron + normal blowup algebra");
        if (ev.hyp_ok) {
          IntMatrix a = incidence_matrix(c);
          int r = rank(a);
          Int g = delta_r(a, r);
          ev.conclusion("gcd of full-rank minors of the incidence matrix is 1", g == 1,
                        "rank + gcd of r x r subdeterminants",
                        nlohmann::ordered_json(g.str()));
          auto cl = edge_cone_closure(c);
          ev.conclusion("edge semigroup picks up every lattice point of its cone", cl.hilbert,
                        "generator completeness over the cone's lattice points");
        }
      }
    } else if (id == "cor-3.8") {
      if (detail::uniform_hypothesis(ev, c, d)) {
        ev.hypothesis("mfmc", has_mfmc(c), "integral covering polyhedron + normal blowup algebra");
        if (ev.hyp_ok) {
          auto s = smith_normal_form(incidence_matrix(c));
          bool all_ones = true;
          nlohmann::ordered_json fs = nlohmann::ordered_json::array();
          for (const auto& f : s.invariant_factors) {
            fs.push_back(f.str());
            if (f != 1) all_ones = false;
          }
          ev.conclusion("all invariant factors of the incidence matrix equal 1", all_ones,
                        "diagonalisation over the integers", fs);
        }
      }
    } else if (id == "cor-3.9") {
      if (detail::uniform_hypothesis(ev, c, d)) {
        bool lhs = has_mfmc(c);
        bool ideal = is_ideal(c).ideal;
        bool closed = edge_cone_closure(c).hilbert;
        ev.note("mfmc", lhs, "integral covering polyhedron + normal blowup algebra");
        ev.note("ideal", ideal, "covering-polyhedron vertex enumeration");
        ev.note("edge cone closure", closed, "generator completeness over the cone's lattice points");
        ev.conclusion("mfmc iff ideal and integrally closed edge cone", lhs == (ideal && closed),
                      "both sides computed independently");
      }
    } else if (id == "cor-3.10") {
      if (detail::uniform_hypothesis(ev, c, d)) {
        ev.hypothesis("mfmc", has_mfmc(c), "integral covering polyhedron + normal blowup algebra");
        if (ev.hyp_ok) {
          bool pm = find_perfect_matching(c).has_value();
          int a0 = alpha0(c);
          ev.note("n", c.n, "input");
          ev.note("d * alpha0", *d * a0, "edge size times covering number");
          ev.conclusion("perfect matching iff n = d * alpha0", pm == (c.n == *d * a0),
                        "exact-cover search vs arithmetic identity");
        }
      }
    } else if (id == "thm-3.14") {
      auto [packs, wit] = has_packing_property(c);
      (void)wit;
      ev.hypothesis("packing", packs, "covering number vs matching number on every minor");
      if (ev.hyp_ok)
        ev.conclusion("ideal", is_ideal(c).ideal, "covering-polyhedron vertex enumeration");
    } else if (id == "prop-3.15") {
      ev.hypothesis("mfmc", has_mfmc(c), "integral covering polyhedron + normal blowup algebra");
      if (ev.hyp_ok) {
        auto [packs, wit] = has_packing_property(c);
        nlohmann::ordered_json w = nullptr;
        if (wit) {
          w = nlohmann::ordered_json::object();
          w["deleted"] = detail::cover_json(wit->zeros);
          w["contracted"] = detail::cover_json(wit->ones);
        }
        ev.conclusion("packing", packs, "covering number vs matching number on every minor", w);
      }
    } else if (id == "thm-4.1" || id == "cor-4.2" || id == "cor-4.3") {
      if (detail::uniform_hypothesis(ev, c, d)) {
        auto pm = find_perfect_matching(c);
        ev.hypothesis("perfect matching", pm.has_value(), "exact-cover search over edges");
        auto [packs, wit] = has_packing_property(c);
        (void)wit;
        ev.hypothesis("packing", packs, "covering number vs matching number on every minor");
        if (ev.hyp_ok)
          ev.hypothesis("covering number is 2", alpha0(c) == 2,
                        "branch-and-bound covering number");
        if (id == "cor-4.2" && ev.hyp_ok)
          ev.hypothesis("homogenised edge semigroup integrally closed in its lattice",
                        edge_subring_normality(c).hilbert,
                        "generator completeness in the generated lattice");
        if (id == "cor-4.3" && ev.hyp_ok) {
          IntMatrix a = incidence_matrix(c);
          ev.hypothesis("edge vectors linearly independent", rank(a) == c.q(),
                        "rank vs number of edges");
        }
        if (ev.hyp_ok) {
          if (id == "thm-4.1") {
            IntMatrix a = incidence_matrix(c);
            IntMatrix b(c.n + 1, c.q());
            for (int i = 0; i < c.n; ++i)
              for (int j = 0; j < c.q(); ++j) b.at(i, j) = a.at(i, j);
            for (int j = 0; j < c.q(); ++j) b.at(c.n, j) = 1;
            int r = rank(b);
            Int g = delta_r(b, r);
            ev.conclusion("gcd of full-rank minors of the homogenised matrix is 1", g == 1,
                          "rank + gcd of r x r subdeterminants",
                          nlohmann::ordered_json(g.str()));
          } else {
            ev.conclusion("mfmc", has_mfmc(c),
                          "integral covering polyhedron + normal blowup algebra");
          }
        }
      }
    } else if (id == "thm-4.6") {
      if (detail::uniform_hypothesis(ev, c, d)) {
        auto tp = two_partition(c);
        ev.hypothesis("partition into d covers of size 2", tp.has_value(),
                      "backtracking over size-2 minimal covers");
        if (ev.hyp_ok) {
          IntMatrix a = incidence_matrix(c);
          int r = rank(a);
          ev.note("rank", r, "fraction-free elimination");
          ev.conclusion("rank of the incidence matrix is at most d+1", r <= *d + 1,
                        "fraction-free elimination");
          auto covers = minimal_vertex_covers(c);
          bool sizes_ok = true;
          for (const auto& u : covers)
            if (int(u.size()) < 2 || int(u.size()) > *d) sizes_ok = false;
          ev.conclusion("every minimal cover has size between 2 and d", sizes_ok,
                        "hitting-set enumeration of the minimal covers");
          bool has_size_d = false;
          for (const auto& u : covers)
            if (int(u.size()) == *d) has_size_d = true;
          if (has_konig_property(c) && has_size_d && *d >= 3)
            ev.conclusion("rank equals d+1 (Konig with a cover of size d)", r == *d + 1,
                          "fraction-free elimination");
          else
            ev.skipped("rank equals d+1 (Konig with a cover of size d)",
                       "side condition not met: needs the Konig property, a minimal cover of "
                       "size d, and d >= 3");
          if (is_minimally_non_normal(c) && has_packing_property(c).first)
            ev.conclusion("rank equals d+1 (minimally non-normal and packing)", r == *d + 1,
                          "fraction-free elimination");
          else
            ev.skipped("rank equals d+1 (minimally non-normal and packing)",
                       "side condition not met: needs a minimally non-normal clutter with the "
                       "packing property");
        }
      }
    } else if (id == "cor-4.7") {
      d = uniformity(c);
      ev.hypothesis("graph (all edges have two vertices)", d.has_value() && *d == 2,
                    "all edge sizes equal 2");
      if (ev.hyp_ok) ev.hypothesis("bipartite", is_bipartite(c), "two-colouring search");
      if (ev.hyp_ok)
        ev.hypothesis("unmixed", is_unmixed(c), "all minimal covers have the same size");
      if (ev.hyp_ok) {
        Clutter b = blocker(c);
        int a0 = alpha0(c);
        auto tp = two_partition(b);
        ev.conclusion("blocker partitions into covers of size 2", tp.has_value(),
                      "backtracking over size-2 minimal covers of the blocker");
        int r = rank(incidence_matrix(b));
        ev.note("blocker rank", r, "fraction-free elimination");
        ev.conclusion("blocker rank is at most alpha0+1", r <= a0 + 1,
                      "fraction-free elimination");
        if (assert_cm)
          ev.conclusion_vouched(
              "blocker rank equals alpha0+1 (caller-asserted Cohen-Macaulay input)", r == a0 + 1,
              "fraction-free elimination");
        else
          ev.skipped("blocker rank equals alpha0+1 (caller-asserted Cohen-Macaulay input)",
                     "only evaluated when the caller vouches for the extra structural "
                     "hypothesis (assert_cm)");
      }
    } else if (id == "thm-5.5") {
      auto bal = is_balanced(c);
      ev.hypothesis("balanced incidence matrix", bal.balanced,
                    "chordless-cycle search in the bipartite row/column graph");
      if (ev.hyp_ok) {
        if (!detail::uniform_hypothesis(ev, c, d)) return ev.finish();
        std::vector<std::vector<Int>> cols;
        for (const auto& e : c.edges) {
          std::vector<Int> g(c.n, Int(0));
          for (int v : e) g[v] = 1;
          cols.push_back(std::move(g));
        }
        int tested = 0;
        bool all_uni = true;
        nlohmann::ordered_json bad = nullptr;
        for (const auto& wts : sample_weight_vectors(c.q(), 16)) {
          auto t = regular_triangulation(cols, wts);
          ++tested;
          if (!is_unimodular_triangulation(cols, t.cells)) {
            all_uni = false;
            bad = nlohmann::ordered_json::array();
            for (const Int& x : wts) bad.push_back(x.str());
            break;
          }
        }
        ev.note("weight vectors tested", tested, "deterministic sample");
        ev.conclusion("every sampled regular triangulation is unimodular", all_uni,
                      "lifted lower-facet triangulation + per-cell lattice comparison", bad);
      }
    } else {
      fail(errc::parse, "verify_theorem: unknown theorem id '" + id + "'");
    }
  } catch (const error& e) {
    if (e.kind() == errc::hypothesis_failed) {
      ev.hyp_ok = false;
      ev.out.detail = std::string("hypotheses not met: ") + e.what();
      return ev.finish();
    }
    throw;
  }
  return ev.finish();
}

}  // namespace clutterlab
