#pragma once

#include "clutterlab/linalg.hpp"

#include <array>
#include <map>

namespace clutterlab {

namespace detail {

template <class I>
struct num_ops {
  static I gcd(I a, I b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      I t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static void primitivize(std::vector<I>& v) {
    I g = 0;
    for (const I& x : v) g = gcd(g, x);
    if (g > 1)
      for (I& x : v) x /= g;
  }
};

template <>
struct num_ops<Int> {
  static Int gcd(const Int& a, const Int& b) { return clutterlab::gcd(a, b); }
  static void primitivize(std::vector<Int>& v) { clutterlab::primitivize(v); }
};

template <class I>
I dot_i(const std::vector<I>& a, const std::vector<I>& b) {
  I s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Tight-constraint bitset; enough for every desk-scale system in this library.
struct TightSet {
  static constexpr int capacity = 192;
  std::array<std::uint64_t, 3> w{0, 0, 0};
  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool subset_of(const TightSet& o) const {
    return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0 && (w[2] & ~o.w[2]) == 0;
  }
  TightSet intersect(const TightSet& o) const {
    TightSet r;
    for (int i = 0; i < 3; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
};

}  // namespace detail

// ---------- double description: extreme rays of {x : <h_i,x> >= 0} ----------

template <class I>
struct DDResult {
  std::vector<std::vector<I>> rays;      // extreme rays modulo lineality, primitive
  std::vector<std::vector<I>> lineality; // basis of the lineality space
};

template <class I>
DDResult<I> ray_enumeration(int dim, const std::vector<std::vector<I>>& halfspaces) {
  if (int(halfspaces.size()) > detail::TightSet::capacity)
    fail(errc::bound_exceeded, "ray_enumeration: more than 192 constraints");
  struct Ray {
    std::vector<I> x;
    detail::TightSet tight;
  };
  std::vector<std::vector<I>> lin;
  for (int i = 0; i < dim; ++i) {
    std::vector<I> e(dim, I(0));
    e[i] = I(1);
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;
  for (int k = 0; k < int(halfspaces.size()); ++k) {
    const auto& h = halfspaces[k];
    // lineality interaction first
    int star = -1;
    for (int i = 0; i < int(lin.size()); ++i)
      if (detail::dot_i(h, lin[i]) != 0) {
        star = i;
        break;
      }
    if (star >= 0) {
      std::vector<I> l = lin[star];
      I hl = detail::dot_i(h, l);
      if (hl < 0) {
        for (I& x : l) x = -x;
        hl = -hl;
      }
      std::vector<std::vector<I>> nl;
      for (int i = 0; i < int(lin.size()); ++i) {
        if (i == star) continue;
        I hi = detail::dot_i(h, lin[i]);
        std::vector<I> v(dim);
        for (int t = 0; t < dim; ++t) v[t] = hl * lin[i][t] - hi * l[t];
        detail::num_ops<I>::primitivize(v);
        nl.push_back(std::move(v));
      }
      lin = std::move(nl);
      for (auto& r : rays) {
        I hr = detail::dot_i(h, r.x);
        if (hr != 0) {
          std::vector<I> v(dim);
          for (int t = 0; t < dim; ++t) v[t] = hl * r.x[t] - hr * l[t];
          detail::num_ops<I>::primitivize(v);
          r.x = std::move(v);
        }
        r.tight.set(k);
      }
      Ray nr;
      nr.x = std::move(l);
      // tight at every previously inserted constraint (it came from the
      // lineality space) but strictly positive on this one
      for (int j = 0; j < k; ++j) nr.tight.set(j);
      rays.push_back(std::move(nr));
      continue;
    }
    // split the rays
    std::vector<int> pos, neg;
    std::vector<I> val(rays.size());
    for (int i = 0; i < int(rays.size()); ++i) {
      val[i] = detail::dot_i(h, rays[i].x);
      if (val[i] > 0) pos.push_back(i);
      else if (val[i] < 0) neg.push_back(i);
      else rays[i].tight.set(k);
    }
    if (neg.empty()) continue;
    std::vector<Ray> next;
    for (int i = 0; i < int(rays.size()); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);
    for (int p : pos)
      for (int m : neg) {
        detail::TightSet common = rays[p].tight.intersect(rays[m].tight);
        bool adjacent = true;
        for (int t = 0; t < int(rays.size()); ++t) {
          if (t == p || t == m) continue;
          if (common.subset_of(rays[t].tight)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Ray nr;
        nr.x.resize(dim);
        for (int t = 0; t < dim; ++t) nr.x[t] = val[p] * rays[m].x[t] - val[m] * rays[p].x[t];
        detail::num_ops<I>::primitivize(nr.x);
        nr.tight = common;
        nr.tight.set(k);
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
  }
  DDResult<I> res;
  for (auto& r : rays) res.rays.push_back(std::move(r.x));
  res.lineality = std::move(lin);
  // deterministic output order
  std::sort(res.rays.begin(), res.rays.end());
  std::sort(res.lineality.begin(), res.lineality.end());
  return res;
}

// ---------- placing triangulation of a pointed cone configuration ----------

struct PlacingResult {
  // maximal simplicial cones, each a sorted list of point indices
  std::vector<std::vector<int>> cells;
  // boundary facets of the final cone: support (indices on the facet, within
  // the current triangulation) and a primitive outward normal in span(points)
  struct Facet {
    std::vector<int> ridge;  // rank-1 simplicial piece of the facet
    std::vector<Int> outward;
  };
  std::vector<Facet> boundary;
  int rank = 0;
};

namespace detail {

// rational coordinates matrix solve helpers for placing
inline RatVec to_rat(const std::vector<Int>& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace detail

// Beneath-beyond insertion in index order. Precondition: the points span a
// pointed cone (no nonzero point of the cone has its negation in the cone);
// nonnegative nonzero configurations always qualify.
inline PlacingResult placing_triangulation(const std::vector<std::vector<Int>>& pts) {
  const int m = pts.empty() ? 0 : int(pts[0].size());
  PlacingResult res;
  if (pts.empty()) return res;
  for (const auto& p : pts)
    if (int(p.size()) != m) fail(errc::parse, "placing_triangulation: ragged points");

  std::vector<int> span_basis;              // indices of points spanning the current span
  std::vector<std::vector<int>> cells;      // index sets, each of size == current rank

  auto in_span = [&](const std::vector<Int>& p) -> bool {
    if (span_basis.empty()) return false;
    RatMat a(m, RatVec(span_basis.size()));
    for (int i = 0; i < m; ++i)
      for (std::size_t j = 0; j < span_basis.size(); ++j) a[i][j] = Rat(pts[span_basis[j]][i]);
    RatVec b = detail::to_rat(p);
    return solve_rational(a, b).has_value();
  };

  // outward normal of the boundary facet `ridge` of cell `cell`: lies in the
  // span of the processed points, vanishes on the ridge, negative on the cell.
  auto facet_normal = [&](const std::vector<int>& ridge, const std::vector<int>& cell) {
    RatMat rows;
    for (int f : ridge) {
      RatVec row(span_basis.size());
      for (std::size_t j = 0; j < span_basis.size(); ++j)
        row[j] = Rat(dot(pts[f], pts[span_basis[j]]));
      rows.push_back(std::move(row));
    }
    if (rows.empty()) rows.push_back(RatVec(span_basis.size(), Rat(0)));
    auto ns = nullspace(rows);
    if (ns.size() != 1)
      fail(errc::internal_contradiction, "placing_triangulation: facet normal space not 1-dim");
    // w = sum y_j * basis_j
    std::vector<Rat> w(m, Rat(0));
    for (std::size_t j = 0; j < span_basis.size(); ++j)
      for (int i = 0; i < m; ++i) w[i] += ns[0][j] * Rat(pts[span_basis[j]][i]);
    std::vector<Int> wi = integerize(w);
    int opp = -1;
    for (int v : cell)
      if (std::find(ridge.begin(), ridge.end(), v) == ridge.end()) {
        opp = v;
        break;
      }
    Int s = dot(wi, pts[opp]);
    if (s == 0) fail(errc::internal_contradiction, "placing_triangulation: degenerate facet");
    if (s > 0)
      for (Int& x : wi) x = -x;  // outward: negative on the cell interior
    return wi;
  };

  // boundary facets recomputed from the cell list (count-one ridges)
  auto boundary_facets = [&]() {
    std::map<std::vector<int>, std::pair<int, std::vector<int>>> count;  // ridge -> (count, owner)
    for (const auto& cell : cells)
      for (std::size_t drop = 0; drop < cell.size(); ++drop) {
        std::vector<int> ridge;
        for (std::size_t i = 0; i < cell.size(); ++i)
          if (i != drop) ridge.push_back(cell[i]);
        auto [it, fresh] = count.try_emplace(ridge, 0, cell);
        it->second.first++;
        (void)fresh;
      }
    std::vector<PlacingResult::Facet> out;
    for (auto& [ridge, info] : count)
      if (info.first == 1) out.push_back({ridge, facet_normal(ridge, info.second)});
    return out;
  };

  std::vector<PlacingResult::Facet> boundary;

  for (int idx = 0; idx < int(pts.size()); ++idx) {
    const auto& p = pts[idx];
    bool zero = true;
    for (const Int& x : p)
      if (x != 0) zero = false;
    if (zero) fail(errc::parse, "placing_triangulation: zero generator");
    if (!in_span(p)) {
      // dimension jump: every current cell is extended by the new point
      if (cells.empty()) cells.push_back({idx});
      else {
        for (auto& cell : cells) {
          cell.push_back(idx);
          std::sort(cell.begin(), cell.end());
        }
      }
      span_basis.push_back(idx);
      boundary = boundary_facets();
      continue;
    }
    std::vector<std::vector<int>> fresh;
    for (const auto& f : boundary)
      if (dot(f.outward, p) > 0) {
        std::vector<int> cell = f.ridge;
        cell.push_back(idx);
        std::sort(cell.begin(), cell.end());
        fresh.push_back(std::move(cell));
      }
    if (!fresh.empty()) {
      for (auto& c : fresh) cells.push_back(std::move(c));
      boundary = boundary_facets();
    }
  }

  // safety: every input point must lie in some cell cone
  for (int idx = 0; idx < int(pts.size()); ++idx) {
    bool inside = false;
    for (const auto& cell : cells) {
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
           "placing_triangulation: generator " + std::to_string(idx) + " not covered");
  }

  std::sort(cells.begin(), cells.end());
  res.cells = std::move(cells);
  res.boundary = std::move(boundary);
  res.rank = int(span_basis.size());
  return res;
}

// ---------- facet description of a cone from its generators ----------

struct ConeFacets {
  int dim = 0;   // ambient dimension
  int rank = 0;  // dimension of the cone's span
  // inner-pointing primitive facet normals (<a,x> >= 0 on the cone), sorted;
  // supports[i] lists the generators lying on facet i
  std::vector<std::vector<Int>> normals;
  std::vector<std::vector<int>> supports;
  // primitive equations vanishing on the span (sign fixed: leading nonzero > 0)
  std::vector<std::vector<Int>> equations;
};

inline ConeFacets cone_facets(const std::vector<std::vector<Int>>& gens) {
  if (gens.empty()) fail(errc::parse, "cone_facets: no generators");
  const int m = int(gens[0].size());
  PlacingResult tri = placing_triangulation(gens);
  ConeFacets out;
  out.dim = m;
  out.rank = tri.rank;
  // group boundary ridges by their supporting hyperplane (outward normal)
  std::map<std::vector<Int>, std::vector<int>> by_normal;
  for (const auto& f : tri.boundary) {
    if (f.ridge.empty()) continue;  // rank-1 cone: opposite halfline, not a facet
    std::vector<Int> inner = f.outward;
    for (Int& x : inner) x = -x;
    auto& sup = by_normal[inner];
    if (sup.empty()) {
      for (int i = 0; i < int(gens.size()); ++i)
        if (dot(inner, gens[i]) == 0) sup.push_back(i);
    }
  }
  if (tri.rank == 1) {
    // one generator direction: the facet description within the span is the
    // origin; represent it by the generator itself as inner normal
    std::vector<Int> g = gens[0];
    primitivize(g);
    std::vector<int> sup;
    by_normal.emplace(std::move(g), std::move(sup));
  }
  for (auto& [normal, sup] : by_normal) {
    out.normals.push_back(normal);
    out.supports.push_back(sup);
  }
  // span equations: nullspace of the generator matrix (as rows: <z, gen> = 0)
  RatMat rows;
  for (const auto& g : gens) rows.push_back(detail::to_rat(g));
  for (const auto& z : nullspace(rows)) {
    std::vector<Int> zi = integerize(z);
    // sign: first nonzero positive
    for (const Int& x : zi) {
      if (x == 0) continue;
      if (x < 0)
        for (Int& y : zi) y = -y;
      break;
    }
    out.equations.push_back(std::move(zi));
  }
  std::sort(out.equations.begin(), out.equations.end());
  return out;
}

// Membership in the cone spanned by `gens`, given its facet description.
inline bool cone_member(const ConeFacets& fc, const std::vector<Int>& x) {
  for (const auto& z : fc.equations)
    if (dot(z, x) != 0) return false;
  for (const auto& a : fc.normals)
    if (dot(a, x) < 0) return false;
  return true;
}

inline bool cone_member(const std::vector<std::vector<Int>>& gens, const std::vector<Int>& x) {
  return cone_member(cone_facets(gens), x);
}

}  // namespace clutterlab
