#pragma once

#include "clutterlab/clutter.hpp"

namespace clutterlab {

namespace detail {

// All minimal transversals of a list of edge masks over n vertices.
inline std::vector<std::uint64_t> minimal_transversal_masks(int n, const std::vector<std::uint64_t>& edges) {
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> stackless;
  auto rec = [&](auto&& self, std::uint64_t chosen) -> void {
    std::uint64_t todo = 0;
    bool covered = true;
    for (std::uint64_t e : edges)
      if (!(e & chosen)) {
        todo = e;
        covered = false;
        break;
      }
    if (covered) {
      out.push_back(chosen);
      return;
    }
    std::uint64_t m = todo;
    while (m) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      self(self, chosen | (std::uint64_t(1) << v));
    }
  };
  (void)n;
  (void)stackless;
  rec(rec, 0);
  // minimality filter: keep masks with no proper sub-mask in the list
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t s : out) {
    bool ok = true;
    for (std::uint64_t t : out)
      if (t != s && (t & s) == t) {
        ok = false;
        break;
      }
    if (ok) minimal.push_back(s);
  }
  return minimal;
}

inline std::vector<int> mask_to_vertices(std::uint64_t m) {
  std::vector<int> v;
  while (m) {
    v.push_back(__builtin_ctzll(m));
    m &= m - 1;
  }
  return v;
}

// Covering number by branch and bound on the lowest-index uncovered edge.
inline int alpha0_masks(const std::vector<std::uint64_t>& edges, int upper) {
  int best = upper;
  auto rec = [&](auto&& self, std::uint64_t chosen, int count) -> void {
    if (count >= best) return;
    std::uint64_t todo = 0;
    bool covered = true;
    for (std::uint64_t e : edges)
      if (!(e & chosen)) {
        todo = e;
        covered = false;
        break;
      }
    if (covered) {
      best = count;
      return;
    }
    std::uint64_t m = todo;
    while (m) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      self(self, chosen | (std::uint64_t(1) << v), count + 1);
    }
  };
  rec(rec, 0, 0);
  return best;
}

// Matching number by branch and bound with a remaining-edges bound.
inline int beta1_masks(const std::vector<std::uint64_t>& edges) {
  int best = 0;
  int q = int(edges.size());
  auto rec = [&](auto&& self, int from, std::uint64_t used, int count) -> void {
    if (count > best) best = count;
    if (count + (q - from) <= best) return;
    for (int i = from; i < q; ++i)
      if (!(edges[i] & used)) self(self, i + 1, used | edges[i], count + 1);
  };
  rec(rec, 0, 0, 0);
  return best;
}

}  // namespace detail

// All minimal vertex covers, each sorted, the list sorted lexicographically.
inline std::vector<std::vector<int>> minimal_vertex_covers(const Clutter& c) {
  detail::check_mask_width(c.n, "minimal_vertex_covers");
  auto masks = detail::minimal_transversal_masks(c.n, c.edge_masks());
  std::vector<std::vector<int>> covers;
  covers.reserve(masks.size());
  for (std::uint64_t m : masks) covers.push_back(detail::mask_to_vertices(m));
  std::sort(covers.begin(), covers.end());
  return covers;
}

inline int alpha0(const Clutter& c) {
  detail::check_mask_width(c.n, "alpha0");
  return detail::alpha0_masks(c.edge_masks(), c.n);
}

inline int beta1(const Clutter& c) {
  detail::check_mask_width(c.n, "beta1");
  return detail::beta1_masks(c.edge_masks());
}

inline bool has_konig_property(const Clutter& c) { return alpha0(c) == beta1(c); }

inline bool is_unmixed(const Clutter& c) {
  auto covers = minimal_vertex_covers(c);
  for (const auto& s : covers)
    if (s.size() != covers[0].size()) return false;
  return true;
}

// Blocker: the clutter of minimal vertex covers (every vertex lies in one).
inline Clutter blocker(const Clutter& c) {
  return make_clutter(c.n, minimal_vertex_covers(c));
}

// Witness of a packing failure: the assignment whose minor violates König.
struct PackingWitness {
  std::vector<int> zeros, ones;
};

// König for every minor (the clutter itself included). Assignments are scanned
// in increasing (zero-mask, one-mask) order, vertices ↔ bits; the first failing
// assignment is returned. Minors that lose every edge are skipped.
inline std::pair<bool, std::optional<PackingWitness>> has_packing_property(const Clutter& c,
                                                                           int max_n = 14) {
  detail::check_mask_width(c.n, "has_packing_property");
  if (c.n > max_n)
    fail(errc::bound_exceeded, "has_packing_property: n exceeds bound " + std::to_string(max_n));
  auto masks = c.edge_masks();
  const std::uint64_t full = (std::uint64_t(1) << c.n) - 1;
  for (std::uint64_t z = 0; z <= full; ++z) {
    const std::uint64_t rest = full & ~z;
    // enumerate o over all submasks of rest in increasing numeric order
    std::uint64_t o = 0;
    for (;;) {
      std::vector<std::uint64_t> sub;
      bool empty_edge = false;
      for (std::uint64_t e : masks) {
        if (e & z) continue;
        std::uint64_t f = e & ~o;
        if (!f) {
          empty_edge = true;
          break;
        }
        sub.push_back(f);
      }
      if (!empty_edge && !sub.empty()) {
        // minimal members only
        std::vector<std::uint64_t> mins;
        for (std::size_t i = 0; i < sub.size(); ++i) {
          bool dom = false;
          for (std::size_t j = 0; j < sub.size() && !dom; ++j)
            if (i != j && (sub[j] & sub[i]) == sub[j] && (sub[j] != sub[i] || j < i)) dom = true;
          if (!dom) mins.push_back(sub[i]);
        }
        int a = detail::alpha0_masks(mins, c.n);
        int b = detail::beta1_masks(mins);
        if (a != b)
          return {false, PackingWitness{detail::mask_to_vertices(z), detail::mask_to_vertices(o)}};
      }
      if (o == rest) break;
      o = (o - rest) & rest;  // next submask of rest in increasing order
    }
  }
  return {true, std::nullopt};
}

// α0 strictly drops under every vertex deletion. A deletion that removes every
// edge counts as covering number 0. Clutters with a single-vertex edge are
// rejected (degenerate case documented in the covering-engine notes).
inline bool is_vertex_critical(const Clutter& c) {
  for (const auto& e : c.edges)
    if (e.size() == 1)
      fail(errc::hypothesis_failed, "is_vertex_critical: undefined for single-vertex edges");
  int a = alpha0(c);
  for (int v = 0; v < c.n; ++v) {
    int av;
    try {
      av = alpha0(deletion(c, v).clutter);
    } catch (const error& e) {
      if (e.kind() == errc::empty_minor)
        av = 0;  // deleting v annihilated the clutter
      else
        throw;
    }
    if (av >= a) return false;
  }
  return true;
}

// Partition of the vertex set into d pairwise disjoint covers of size 2
// (lexicographically least if one exists).
inline std::optional<std::vector<std::pair<int, int>>> two_partition(const Clutter& c) {
  auto d = uniformity(c);
  if (!d) fail(errc::hypothesis_failed, "two_partition: clutter is not uniform");
  if (c.n != 2 * *d) return std::nullopt;
  auto covers = minimal_vertex_covers(c);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& s : covers)
    if (s.size() == 2) pairs.emplace_back(s[0], s[1]);
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::pair<int, int>> cur;
  std::optional<std::vector<std::pair<int, int>>> best;
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t used) -> bool {
    if (popcount64(used) == c.n) {
      best = cur;
      return true;
    }
    for (std::size_t i = from; i < pairs.size(); ++i) {
      std::uint64_t m = (std::uint64_t(1) << pairs[i].first) | (std::uint64_t(1) << pairs[i].second);
      if (m & used) continue;
      cur.push_back(pairs[i]);
      if (self(self, i + 1, used | m)) return true;
      cur.pop_back();
    }
    return false;
  };
  rec(rec, 0, 0);
  return best;
}

inline bool is_2_partitionable(const Clutter& c) { return two_partition(c).has_value(); }

}  // namespace clutterlab
