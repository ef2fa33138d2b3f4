#pragma once

#include "clutterlab/clutter.hpp"
#include "clutterlab/covers.hpp"
#include "clutterlab/dd.hpp"

#include <functional>
#include <set>

namespace clutterlab {

// ---------- polyhedron representations ----------

// intersection of halfspaces <a_i, x> >= b_i
struct HRep {
  int dim = 0;
  std::vector<std::vector<Int>> a;
  std::vector<Int> b;
};

struct VRep {
  int dim = 0;
  std::vector<RatVec> vertices;
  std::vector<std::vector<Int>> rays;   // primitive recession directions
  std::vector<std::vector<Int>> lines;  // primitive lineality basis
};

inline HRep covering_polyhedron(const Clutter& c) {
  HRep h;
  h.dim = c.n;
  for (int i = 0; i < c.n; ++i) {
    std::vector<Int> a(c.n, Int(0));
    a[i] = 1;
    h.a.push_back(std::move(a));
    h.b.push_back(Int(0));
  }
  for (const auto& e : c.edges) {
    std::vector<Int> a(c.n, Int(0));
    for (int v : e) a[v] = 1;
    h.a.push_back(std::move(a));
    h.b.push_back(Int(1));
  }
  return h;
}

// ---------- H -> V ----------

inline VRep dd_convert_h_to_v(const HRep& h) {
  const int d = h.dim;
  if (d <= 0) fail(errc::parse, "dd_convert: nonpositive dimension");
  std::vector<std::vector<Int>> cons;
  for (std::size_t i = 0; i < h.a.size(); ++i) {
    if (int(h.a[i].size()) != d) fail(errc::parse, "dd_convert: coefficient width mismatch");
    std::vector<Int> row = h.a[i];
    row.push_back(-h.b[i]);  // <a,x> - b*t >= 0
    cons.push_back(std::move(row));
  }
  {
    std::vector<Int> row(d + 1, Int(0));
    row[d] = 1;  // t >= 0
    cons.push_back(std::move(row));
  }
  std::sort(cons.begin(), cons.end());
  cons.erase(std::unique(cons.begin(), cons.end()), cons.end());
  DDResult<Int> dd = ray_enumeration<Int>(d + 1, cons);
  VRep v;
  v.dim = d;
  for (const auto& r : dd.rays) {
    if (r[d] > 0) {
      RatVec p(d);
      for (int i = 0; i < d; ++i) p[i] = Rat(r[i], r[d]);
      v.vertices.push_back(std::move(p));
    } else if (r[d] == 0) {
      std::vector<Int> ray(r.begin(), r.begin() + d);
      v.rays.push_back(std::move(ray));
    } else {
      fail(errc::internal_contradiction, "dd_convert: ray violates homogenizing constraint");
    }
  }
  for (const auto& l : dd.lineality) {
    if (l[d] != 0)
      fail(errc::internal_contradiction, "dd_convert: lineality escapes homogenization");
    std::vector<Int> line(l.begin(), l.begin() + d);
    v.lines.push_back(std::move(line));
  }
  if (v.vertices.empty() && v.rays.empty() && v.lines.empty())
    fail(errc::empty_polyhedron, "dd_convert: empty polyhedron");
  if (v.vertices.empty())
    fail(errc::empty_polyhedron, "dd_convert: empty polyhedron (no point has t > 0)");
  std::sort(v.vertices.begin(), v.vertices.end());
  std::sort(v.rays.begin(), v.rays.end());
  std::sort(v.lines.begin(), v.lines.end());
  return v;
}

// ---------- V -> H ----------

inline HRep dd_convert_v_to_h(const VRep& vr) {
  const int d = vr.dim;
  if (d <= 0) fail(errc::parse, "dd_convert: nonpositive dimension");
  if (vr.vertices.empty()) fail(errc::empty_polyhedron, "dd_convert: no vertices given");
  std::vector<std::vector<Int>> gens;
  for (const auto& p : vr.vertices) {
    if (int(p.size()) != d) fail(errc::parse, "dd_convert: vertex width mismatch");
    RatVec lifted = p;
    lifted.push_back(Rat(1));
    gens.push_back(integerize(lifted));
  }
  auto add_dir = [&](std::vector<Int> r) {
    if (int(r.size()) != d) fail(errc::parse, "dd_convert: ray width mismatch");
    r.push_back(Int(0));
    primitivize(r);
    bool zero = true;
    for (const Int& x : r)
      if (x != 0) zero = false;
    if (zero) fail(errc::parse, "dd_convert: zero ray");
    gens.push_back(std::move(r));
  };
  for (const auto& r : vr.rays) add_dir(r);
  for (const auto& l : vr.lines) {
    add_dir(l);
    std::vector<Int> neg = l;
    for (Int& x : neg) x = -x;
    add_dir(std::move(neg));
  }
  // reject configurations with an obvious line (placing needs a pointed cone);
  // anything subtler is caught by the triangulation's own coverage check
  {
    std::set<std::vector<Int>> seen;
    for (auto g : gens) {
      primitivize(g);
      std::vector<Int> neg = g;
      for (Int& x : neg) x = -x;
      if (seen.count(neg))
        fail(errc::bound_exceeded, "dd_convert: V-description contains a line");
      seen.insert(g);
    }
  }
  ConeFacets fc = cone_facets(gens);
  HRep h;
  h.dim = d;
  std::vector<std::pair<std::vector<Int>, Int>> ineqs;
  auto push_ineq = [&](std::vector<Int> a, Int b) {
    bool zero = true;
    for (const Int& x : a)
      if (x != 0) zero = false;
    if (zero) {
      if (b > 0)
        fail(errc::internal_contradiction, "dd_convert: contradictory facet");
      return;  // 0 >= b with b <= 0: trivial
    }
    ineqs.emplace_back(std::move(a), std::move(b));
  };
  for (const auto& nrm : fc.normals) {
    std::vector<Int> a(nrm.begin(), nrm.begin() + d);
    push_ineq(std::move(a), -nrm[d]);
  }
  for (const auto& eq : fc.equations) {
    std::vector<Int> a(eq.begin(), eq.begin() + d);
    std::vector<Int> na = a;
    for (Int& x : na) x = -x;
    push_ineq(std::move(a), -eq[d]);
    push_ineq(std::move(na), eq[d]);
  }
  std::sort(ineqs.begin(), ineqs.end());
  ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());
  for (auto& [a, b] : ineqs) {
    h.a.push_back(std::move(a));
    h.b.push_back(std::move(b));
  }
  return h;
}

// ---------- idealness of the covering polyhedron ----------

struct IdealResult {
  bool ideal = false;
  std::vector<RatVec> fractional_vertices;  // sorted; empty iff ideal
};

inline bool vertex_is_integral(const RatVec& p) {
  for (const Rat& x : p)
    if (boost::multiprecision::denominator(x) != 1) return false;
  return true;
}

inline IdealResult is_ideal(const Clutter& c) {
  VRep v = dd_convert_h_to_v(covering_polyhedron(c));
  IdealResult res;
  res.ideal = true;
  std::set<std::vector<int>> integral;
  for (const auto& p : v.vertices) {
    if (vertex_is_integral(p)) {
      std::vector<int> sup;
      for (int i = 0; i < c.n; ++i) {
        Int num(boost::multiprecision::numerator(p[i]));
        if (num < 0 || num > 1)
          fail(errc::internal_contradiction, "is_ideal: integral vertex not 0/1");
        if (num == 1) sup.push_back(i);
      }
      integral.insert(std::move(sup));
    } else {
      res.ideal = false;
      res.fractional_vertices.push_back(p);
    }
  }
  // the integral vertices must be exactly the minimal vertex covers
  auto covers = minimal_vertex_covers(c);
  std::set<std::vector<int>> cover_set(covers.begin(), covers.end());
  if (integral != cover_set)
    fail(errc::internal_contradiction,
         "is_ideal: integral vertices disagree with the minimal covers");
  return res;
}

// ---------- Rees cone ----------

// generators: the coordinate directions e_1..e_n and (v_j, 1) for each edge
inline std::vector<std::vector<Int>> rees_cone_generators(const Clutter& c) {
  std::vector<std::vector<Int>> gens;
  for (int i = 0; i < c.n; ++i) {
    std::vector<Int> e(c.n + 1, Int(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  for (const auto& edge : c.edges) {
    std::vector<Int> g(c.n + 1, Int(0));
    for (int v : edge) g[v] = 1;
    g[c.n] = 1;
    gens.push_back(std::move(g));
  }
  return gens;
}

inline ConeFacets rees_cone_facets(const Clutter& c) {
  ConeFacets fc = cone_facets(rees_cone_generators(c));
  if (fc.rank != c.n + 1 || !fc.equations.empty())
    fail(errc::internal_contradiction, "rees_cone_facets: cone is not full-dimensional");
  return fc;
}

// True when every facet normal is either a coordinate direction or of the
// shape (chi_u, -1) for a minimal vertex cover u.  Equivalent to idealness.
inline bool rees_facets_cover_shaped(const Clutter& c) {
  ConeFacets fc = rees_cone_facets(c);
  std::set<std::vector<int>> covers;
  for (auto& u : minimal_vertex_covers(c)) covers.insert(u);
  for (const auto& a : fc.normals) {
    bool coordinate = false;
    for (int i = 0; i <= c.n; ++i) {
      std::vector<Int> e(c.n + 1, Int(0));
      e[i] = 1;
      if (a == e) coordinate = true;
    }
    if (coordinate) continue;
    if (a[c.n] != -1) return false;
    std::vector<int> sup;
    for (int i = 0; i < c.n; ++i) {
      if (a[i] < 0 || a[i] > 1) return false;
      if (a[i] == 1) sup.push_back(i);
    }
    if (!covers.count(sup)) return false;
  }
  return true;
}

// ---------- partitions of the vertex set into minimal covers ----------

// Lexicographically least partition of {0..n-1} into pairwise disjoint
// minimal vertex covers, or nullopt when none exists.
inline std::optional<std::vector<std::vector<int>>> cover_partition(const Clutter& c) {
  auto covers = minimal_vertex_covers(c);  // already lexicographically sorted
  std::vector<std::uint64_t> masks;
  for (const auto& u : covers) {
    std::uint64_t m = 0;
    for (int v : u) m |= std::uint64_t(1) << v;
    masks.push_back(m);
  }
  const std::uint64_t full =
      (c.n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << c.n) - 1);
  std::vector<int> chosen;
  std::function<bool(std::uint64_t)> rec = [&](std::uint64_t used) -> bool {
    if (used == full) return true;
    int v = 0;
    while (used & (std::uint64_t(1) << v)) ++v;
    for (int i = 0; i < int(masks.size()); ++i) {
      if (!(masks[i] & (std::uint64_t(1) << v))) continue;
      if (masks[i] & used) continue;
      chosen.push_back(i);
      if (rec(used | masks[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::vector<std::vector<int>> parts;
  for (int i : chosen) parts.push_back(covers[i]);
  // classes emerge ordered by their smallest uncovered vertex already; keep
  // that order (it is the lex-least partition) but validate before returning
  std::uint64_t seen = 0;
  for (const auto& p : parts) {
    std::uint64_t m = 0;
    for (int v : p) m |= std::uint64_t(1) << v;
    if (seen & m) fail(errc::internal_contradiction, "cover_partition: classes overlap");
    seen |= m;
  }
  if (seen != full) fail(errc::internal_contradiction, "cover_partition: classes miss a vertex");
  return parts;
}

inline bool has_cover_partition(const Clutter& c) { return cover_partition(c).has_value(); }

// Partition of the vertex set into exactly k pairwise disjoint minimal
// covers, optionally all of a prescribed size.  Lex-least, or nullopt.
inline std::optional<std::vector<std::vector<int>>> cover_partition_classes(
    const Clutter& c, int k, std::optional<int> class_size = std::nullopt) {
  auto covers = minimal_vertex_covers(c);
  std::vector<std::vector<int>> usable;
  for (auto& u : covers)
    if (!class_size || int(u.size()) == *class_size) usable.push_back(u);
  std::vector<std::uint64_t> masks;
  for (const auto& u : usable) {
    std::uint64_t m = 0;
    for (int v : u) m |= std::uint64_t(1) << v;
    masks.push_back(m);
  }
  const std::uint64_t full = (std::uint64_t(1) << c.n) - 1;
  std::vector<int> chosen;
  std::function<bool(std::uint64_t)> rec = [&](std::uint64_t used) -> bool {
    if (used == full) return int(chosen.size()) == k;
    if (int(chosen.size()) >= k) return false;
    int v = 0;
    while (used & (std::uint64_t(1) << v)) ++v;
    for (int i = 0; i < int(masks.size()); ++i) {
      if (!(masks[i] & (std::uint64_t(1) << v))) continue;
      if (masks[i] & used) continue;
      chosen.push_back(i);
      if (rec(used | masks[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::vector<std::vector<int>> parts;
  for (int i : chosen) parts.push_back(usable[i]);
  return parts;
}

}  // namespace clutterlab
