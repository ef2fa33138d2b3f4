#pragma once

#include "clutterlab/dd.hpp"

#include <numeric>
#include <random>

namespace clutterlab {

struct Triangulation {
  std::vector<std::vector<int>> cells;  // sorted index sets into the configuration
  bool refined = false;                 // true when a coarse cell needed subdivision
};

namespace detail {

inline IntMatrix columns_of(const std::vector<std::vector<Int>>& pts,
                            const std::vector<int>& which) {
  if (pts.empty()) fail(errc::parse, "columns_of: empty configuration");
  IntMatrix m(int(pts[0].size()), int(which.size()));
  for (int j = 0; j < int(which.size()); ++j)
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = pts[which[j]][i];
  return m;
}

inline IntMatrix columns_of(const std::vector<std::vector<Int>>& pts) {
  std::vector<int> all(pts.size());
  std::iota(all.begin(), all.end(), 0);
  return columns_of(pts, all);
}

}  // namespace detail

// Regular triangulation of the cone spanned by `pts`, induced by lifting
// generator i to height weights[i] and projecting the lower facets back down.
// Weight vectors whose lift stays in the span of the configuration (the flat
// case, e.g. all weights zero) induce the trivial subdivision, which is then
// refined by placing.  Non-simplicial lower cells are refined the same way;
// placing is insertion-order deterministic, so shared faces agree.
inline Triangulation regular_triangulation(const std::vector<std::vector<Int>>& pts,
                                           const std::vector<Int>& weights) {
  if (pts.empty()) fail(errc::parse, "regular_triangulation: empty configuration");
  if (weights.size() != pts.size())
    fail(errc::parse, "regular_triangulation: weight count differs from generator count");
  const int m = int(pts[0].size());
  const int config_rank = rank(detail::columns_of(pts));

  std::vector<std::vector<Int>> lifted = pts;
  for (std::size_t i = 0; i < pts.size(); ++i) lifted[i].push_back(weights[i]);
  const int lifted_rank = rank(detail::columns_of(lifted));

  std::vector<std::vector<int>> coarse;
  if (lifted_rank == config_rank) {
    std::vector<int> all(pts.size());
    std::iota(all.begin(), all.end(), 0);
    coarse.push_back(std::move(all));
  } else {
    ConeFacets fc = cone_facets(lifted);
    for (std::size_t i = 0; i < fc.normals.size(); ++i)
      if (fc.normals[i][m] > 0)  // inner normal up == outward normal down
        coarse.push_back(fc.supports[i]);
  }

  Triangulation tri;
  for (const auto& cell : coarse) {
    if (cell.empty())
      fail(errc::internal_contradiction, "regular_triangulation: empty lower cell");
    int r = rank(detail::columns_of(pts, cell));
    if (int(cell.size()) == r) {
      tri.cells.push_back(cell);
      continue;
    }
    tri.refined = true;
    std::vector<std::vector<Int>> sub;
    for (int i : cell) sub.push_back(pts[i]);
    PlacingResult pr = placing_triangulation(sub);
    for (const auto& local : pr.cells) {
      std::vector<int> global;
      for (int j : local) global.push_back(cell[j]);
      std::sort(global.begin(), global.end());
      tri.cells.push_back(std::move(global));
    }
  }
  std::sort(tri.cells.begin(), tri.cells.end());
  tri.cells.erase(std::unique(tri.cells.begin(), tri.cells.end()), tri.cells.end());

  // every generator must lie in the union of the cells
  for (int idx = 0; idx < int(pts.size()); ++idx) {
    bool inside = false;
    for (const auto& cell : tri.cells) {
      RatMat a(m, RatVec(cell.size()));
      for (int i = 0; i < m; ++i)
        for (std::size_t j = 0; j < cell.size(); ++j) a[i][j] = Rat(pts[cell[j]][i]);
      auto sol = solve_rational(a, detail::to_rat(pts[idx]));
      if (!sol) continue;
      bool nonneg = true;
      for (const Rat& x : *sol)
        if (x < 0) nonneg = false;
      if (nonneg) {
        inside = true;
        break;
      }
    }
    if (!inside)
      fail(errc::internal_contradiction,
           "regular_triangulation: generator " + std::to_string(idx) + " not covered");
  }
  return tri;
}

// A triangulation is unimodular when every maximal cell generates the same
// lattice as the whole configuration.
inline bool is_unimodular_triangulation(const std::vector<std::vector<Int>>& pts,
                                        const std::vector<std::vector<int>>& cells) {
  IntMatrix whole = detail::columns_of(pts);
  for (const auto& cell : cells)
    if (!lattice_equal(detail::columns_of(pts, cell), whole)) return false;
  return true;
}

struct UrtResult {
  bool found = false;
  std::vector<Int> weights;
  Triangulation triangulation;
  int attempts_used = 0;
};

// Deterministic weight-vector sample: the zero vector, an index ramp, then
// pseudorandom draws from a fixed seed with slowly growing range.
inline std::vector<std::vector<Int>> sample_weight_vectors(int q, int count) {
  std::vector<std::vector<Int>> candidates;
  if (count <= 0) return candidates;
  candidates.push_back(std::vector<Int>(q, Int(0)));
  if (int(candidates.size()) < count) {
    std::vector<Int> ramp(q);
    for (int i = 0; i < q; ++i) ramp[i] = i;
    candidates.push_back(std::move(ramp));
  }
  std::mt19937_64 rng(0x636c7574746572ULL);  // fixed seed: reproducible sampling
  while (int(candidates.size()) < count) {
    int hi = 2 + int(candidates.size()) / 4;
    std::vector<Int> w(q);
    for (int i = 0; i < q; ++i) w[i] = Int(rng() % std::uint64_t(hi + 1));
    candidates.push_back(std::move(w));
  }
  return candidates;
}

// Deterministic candidate search for a weight vector whose regular
// triangulation is unimodular.  Absence of a hit after `attempts` rounds is
// NOT a proof that none exists; callers must treat it as inconclusive.
inline UrtResult unimodular_regular_triangulation_search(
    const std::vector<std::vector<Int>>& pts, int attempts = 64) {
  UrtResult res;
  for (const auto& w : sample_weight_vectors(int(pts.size()), attempts)) {
    ++res.attempts_used;
    Triangulation tri = regular_triangulation(pts, w);
    if (is_unimodular_triangulation(pts, tri.cells)) {
      res.found = true;
      res.weights = w;
      res.triangulation = std::move(tri);
      return res;
    }
  }
  return res;
}

}  // namespace clutterlab
