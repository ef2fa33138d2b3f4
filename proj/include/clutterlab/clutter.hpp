#pragma once

#include "clutterlab/matrix.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>

namespace clutterlab {

// A clutter: finite vertex set {0..n-1} (1-based in JSON), edges form an
// antichain, every vertex lies in at least one edge. Edges are stored sorted;
// the edge list keeps input order (it fixes incidence-matrix column order).
struct Clutter {
  int n = 0;
  std::vector<std::vector<int>> edges;

  int q() const { return int(edges.size()); }

  std::uint64_t edge_mask(int i) const {
    std::uint64_t m = 0;
    for (int v : edges[i]) m |= std::uint64_t(1) << v;
    return m;
  }

  std::vector<std::uint64_t> edge_masks() const {
    std::vector<std::uint64_t> ms(edges.size());
    for (int i = 0; i < q(); ++i) ms[i] = edge_mask(i);
    return ms;
  }

  bool operator==(const Clutter& o) const { return n == o.n && edges == o.edges; }
};

namespace detail {
inline void check_mask_width(int n, const char* who) {
  if (n > 63) fail(errc::bound_exceeded, std::string(who) + ": supports at most 63 vertices");
}
}  // namespace detail

// Builds a clutter from already-0-based edges, running the same validations as
// the JSON parser (dedup, Sperner, isolated vertices).
inline Clutter make_clutter(int n, std::vector<std::vector<int>> edges) {
  if (n <= 0 || n > 1024) fail(errc::parse, "vertex count must be in 1..1024");
  std::vector<std::vector<int>> kept;
  for (auto& e : edges) {
    if (e.empty()) fail(errc::empty_edge, "empty edge");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (int v : e)
      if (v < 0 || v >= n) fail(errc::out_of_range, "vertex index out of range 1.." + std::to_string(n));
    if (std::find(kept.begin(), kept.end(), e) == kept.end()) kept.push_back(std::move(e));
  }
  if (kept.empty()) fail(errc::parse, "clutter needs at least one edge");
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (i == j) continue;
      if (std::includes(kept[j].begin(), kept[j].end(), kept[i].begin(), kept[i].end()))
        fail(errc::sperner_violation,
             "edge " + std::to_string(i + 1) + " is contained in edge " + std::to_string(j + 1));
    }
  std::vector<char> seen(n, 0);
  for (const auto& e : kept)
    for (int v : e) seen[v] = 1;
  for (int v = 0; v < n; ++v)
    if (!seen[v]) fail(errc::isolated_vertex, "vertex " + std::to_string(v + 1) + " lies in no edge");
  return Clutter{n, std::move(kept)};
}

// JSON document: {"n": int, "edges": [[int,...],...]} with 1-based vertices.
inline Clutter parse_clutter(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::parse, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    fail(errc::parse, "document must be an object with keys 'n' and 'edges'");
  if (!doc["n"].is_number_integer()) fail(errc::parse, "'n' must be an integer");
  long long n = doc["n"].get<long long>();
  if (n <= 0 || n > 1024) fail(errc::parse, "'n' must be in 1..1024");
  if (!doc["edges"].is_array()) fail(errc::parse, "'edges' must be an array");
  std::vector<std::vector<int>> edges;
  for (const auto& je : doc["edges"]) {
    if (!je.is_array()) fail(errc::parse, "each edge must be an array of vertices");
    std::vector<int> e;
    for (const auto& jv : je) {
      if (!jv.is_number_integer()) fail(errc::parse, "vertices must be integers");
      long long v = jv.get<long long>();
      if (v < 1 || v > n) fail(errc::out_of_range, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      e.push_back(int(v - 1));
    }
    if (e.empty()) fail(errc::empty_edge, "empty edge");
    edges.push_back(std::move(e));
  }
  return make_clutter(int(n), std::move(edges));
}

inline std::string serialize_clutter(const Clutter& c) {
  nlohmann::ordered_json doc;
  doc["n"] = c.n;
  auto& es = doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : c.edges) {
    nlohmann::ordered_json je = nlohmann::ordered_json::array();
    for (int v : e) je.push_back(v + 1);
    es.push_back(std::move(je));
  }
  return doc.dump();
}

// Incidence matrix: rows = vertices, columns = edges in stored order.
inline IntMatrix incidence_matrix(const Clutter& c) {
  IntMatrix m(c.n, c.q());
  for (int j = 0; j < c.q(); ++j)
    for (int v : c.edges[j]) m.at(v, j) = 1;
  return m;
}

// d if every edge has the same size d, otherwise nullopt.
inline std::optional<int> uniformity(const Clutter& c) {
  int d = int(c.edges[0].size());
  for (const auto& e : c.edges)
    if (int(e.size()) != d) return std::nullopt;
  return d;
}

// A minor plus the map from its vertex indices back to the original ones.
struct Minor {
  Clutter clutter;
  std::vector<int> old_of_new;  // old_of_new[new_index] = original index
};

// Minor by an assignment: vertices in `zeros` delete every edge through them,
// vertices in `ones` are removed from the remaining edges, then the edge set is
// reduced to its minimal members and surviving vertices are re-indexed densely.
inline Minor minor(const Clutter& c, const std::vector<int>& zeros, const std::vector<int>& ones) {
  std::vector<char> z(c.n, 0), o(c.n, 0);
  for (int v : zeros) {
    if (v < 0 || v >= c.n) fail(errc::out_of_range, "minor: zero-vertex out of range");
    z[v] = 1;
  }
  for (int v : ones) {
    if (v < 0 || v >= c.n) fail(errc::out_of_range, "minor: one-vertex out of range");
    if (z[v]) fail(errc::parse, "minor: assignment sets vertex both 0 and 1");
    o[v] = 1;
  }
  std::vector<std::vector<int>> surv;
  for (const auto& e : c.edges) {
    bool killed = false;
    std::vector<int> f;
    for (int v : e) {
      if (z[v]) {
        killed = true;
        break;
      }
      if (!o[v]) f.push_back(v);
    }
    if (killed) continue;
    if (f.empty()) fail(errc::empty_minor, "minor: an edge lost all of its vertices");
    surv.push_back(std::move(f));
  }
  if (surv.empty()) fail(errc::empty_minor, "minor: no edges survive");
  // Keep minimal members only (first occurrence wins among duplicates).
  std::vector<std::vector<int>> min_edges;
  for (std::size_t i = 0; i < surv.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < surv.size() && !dominated; ++j) {
      if (i == j) continue;
      bool j_subset = std::includes(surv[i].begin(), surv[i].end(), surv[j].begin(), surv[j].end());
      if (j_subset && (surv[j].size() < surv[i].size() || j < i)) dominated = true;
    }
    if (!dominated) min_edges.push_back(surv[i]);
  }
  std::set<int> used;
  for (const auto& e : min_edges) used.insert(e.begin(), e.end());
  std::vector<int> old_of_new(used.begin(), used.end());
  std::vector<int> new_of_old(c.n, -1);
  for (int k = 0; k < int(old_of_new.size()); ++k) new_of_old[old_of_new[k]] = k;
  for (auto& e : min_edges)
    for (int& v : e) v = new_of_old[v];
  return Minor{Clutter{int(old_of_new.size()), std::move(min_edges)}, std::move(old_of_new)};
}

inline Minor deletion(const Clutter& c, int v) { return minor(c, {v}, {}); }
inline Minor contraction(const Clutter& c, int v) { return minor(c, {}, {v}); }

// Maximum matching (pairwise disjoint edges) as edge indices; among maximum
// matchings the lexicographically smallest index set is returned.
inline std::vector<int> maximum_matching(const Clutter& c) {
  detail::check_mask_width(c.n, "maximum_matching");
  auto masks = c.edge_masks();
  std::vector<int> best, cur;
  auto rec = [&](auto&& self, int next, std::uint64_t used) -> void {
    if (cur.size() + (masks.size() - next) <= best.size()) return;  // can't beat best
    if (cur.size() > best.size()) best = cur;
    for (int i = next; i < int(masks.size()); ++i) {
      if (masks[i] & used) continue;
      cur.push_back(i);
      if (cur.size() > best.size()) best = cur;
      self(self, i + 1, used | masks[i]);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

// Lexicographically smallest set of pairwise disjoint edges whose union is the
// whole vertex set, if one exists.
inline std::optional<std::vector<int>> find_perfect_matching(const Clutter& c) {
  detail::check_mask_width(c.n, "find_perfect_matching");
  auto masks = c.edge_masks();
  const std::uint64_t full = (std::uint64_t(1) << c.n) - 1;
  std::vector<int> stack;
  std::optional<std::vector<int>> best;
  auto rec = [&](auto&& self, int from, std::uint64_t used) -> bool {
    if (used == full) {
      best = stack;
      return true;
    }
    for (int i = from; i < int(masks.size()); ++i) {
      if (masks[i] & used) continue;
      stack.push_back(i);
      if (self(self, i + 1, used | masks[i])) return true;
      stack.pop_back();
    }
    return false;
  };
  rec(rec, 0, 0);
  return best;
}

// 2-uniform clutters only; returns the bipartition classes if the graph is
// bipartite (class containing vertex 0 first, both sorted).
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Clutter& c) {
  if (uniformity(c) != 2) fail(errc::not_a_graph, "bipartition requires a 2-uniform clutter");
  std::vector<int> color(c.n, -1);
  std::vector<std::vector<int>> adj(c.n);
  for (const auto& e : c.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (int s = 0; s < c.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (int w : adj[u]) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (int v = 0; v < c.n; ++v) (color[v] == color[0] ? parts.first : parts.second).push_back(v);
  return parts;
}

inline bool is_bipartite(const Clutter& c) { return bipartition(c).has_value(); }

// Canonical form: the minimum over all vertex relabelings of the sorted list of
// edge bitmasks, serialized. Two clutters are isomorphic iff strings match.
inline std::string canonical_form(const Clutter& c, int max_n = 9) {
  detail::check_mask_width(c.n, "canonical_form");
  if (c.n > max_n)
    fail(errc::bound_exceeded, "canonical_form: n exceeds permutation bound " + std::to_string(max_n));
  std::vector<int> perm(c.n);
  for (int i = 0; i < c.n; ++i) perm[i] = i;
  auto masks = c.edge_masks();
  std::vector<std::uint64_t> best, cur(masks.size());
  do {
    for (std::size_t i = 0; i < masks.size(); ++i) {
      std::uint64_t m = masks[i], p = 0;
      while (m) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        p |= std::uint64_t(1) << perm[v];
      }
      cur[i] = p;
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string s = std::to_string(c.n) + ":";
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(best[i]);
  }
  return s;
}

}  // namespace clutterlab
