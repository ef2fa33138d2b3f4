#pragma once

#include "clutterlab/polyhedra.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace clutterlab {

// ---------- membership in the semigroup generated by nonnegative vectors ----------

namespace detail {

inline void require_nonneg(const std::vector<std::vector<Int>>& gens, const char* who) {
  for (const auto& g : gens) {
    bool zero = true;
    for (const Int& x : g) {
      if (x < 0) fail(errc::hypothesis_failed, std::string(who) + ": negative generator entry");
      if (x != 0) zero = false;
    }
    if (zero) fail(errc::hypothesis_failed, std::string(who) + ": zero generator");
  }
}

}  // namespace detail

// Multiplicities lambda with sum lambda_j * gens_j == x, or nullopt.  All
// generators must be nonnegative and nonzero (true for incidence-derived
// configurations), which makes componentwise-<= pruning sound.
inline std::optional<std::vector<Int>> semigroup_member(
    const std::vector<std::vector<Int>>& gens, const std::vector<Int>& x) {
  detail::require_nonneg(gens, "semigroup_member");
  const int m = gens.empty() ? int(x.size()) : int(gens[0].size());
  if (int(x.size()) != m) fail(errc::parse, "semigroup_member: dimension mismatch");
  for (const Int& v : x)
    if (v < 0) return std::nullopt;
  std::set<std::vector<Int>> dead;  // residuals known unreachable
  std::vector<Int> counts(gens.size(), Int(0));
  std::function<bool(std::vector<Int>&)> rec = [&](std::vector<Int>& rest) -> bool {
    bool zero = true;
    for (const Int& v : rest)
      if (v != 0) zero = false;
    if (zero) return true;
    if (dead.count(rest)) return false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      bool fits = true;
      for (int i = 0; i < m; ++i)
        if (gens[j][i] > rest[i]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (int i = 0; i < m; ++i) rest[i] -= gens[j][i];
      ++counts[j];
      if (rec(rest)) return true;
      --counts[j];
      for (int i = 0; i < m; ++i) rest[i] += gens[j][i];
    }
    dead.insert(rest);
    return false;
  };
  std::vector<Int> rest = x;
  if (!rec(rest)) return std::nullopt;
  return counts;
}

// ---------- Hilbert basis test ----------

namespace detail {

inline Int rat_floor(const Rat& x) {
  Int p(boost::multiprecision::numerator(x));
  Int q(boost::multiprecision::denominator(x));  // q > 0
  if (p >= 0) return p / q;
  return -((-p + q - 1) / q);
}

// Nonzero lattice points of {sum lambda_j c_j : 0 <= lambda_j < 1} where the
// lattice has basis `basis` (columns) and the c_j are the columns of `cell`,
// linearly independent and contained in the lattice.
inline std::vector<std::vector<Int>> parallelepiped_points(const IntMatrix& basis,
                                                           const IntMatrix& cell) {
  const int r = cell.cols;
  if (basis.cols != r)
    fail(errc::rank_mismatch, "parallelepiped_points: basis/cell rank mismatch");
  RatMat b(basis.rows, RatVec(basis.cols));
  for (int i = 0; i < basis.rows; ++i)
    for (int j = 0; j < basis.cols; ++j) b[i][j] = Rat(basis.at(i, j));
  IntMatrix w(r, r);
  for (int j = 0; j < r; ++j) {
    RatVec col(cell.rows);
    for (int i = 0; i < cell.rows; ++i) col[i] = Rat(cell.at(i, j));
    auto sol = solve_rational(b, col);
    if (!sol) fail(errc::internal_contradiction, "parallelepiped_points: cell outside span");
    for (int i = 0; i < r; ++i) {
      if (boost::multiprecision::denominator((*sol)[i]) != 1)
        fail(errc::internal_contradiction, "parallelepiped_points: cell outside lattice");
      w.at(i, j) = Int(boost::multiprecision::numerator((*sol)[i]));
    }
  }
  SmithResult snf = smith_normal_form(w);
  if (int(snf.invariant_factors.size()) != r)
    fail(errc::internal_contradiction, "parallelepiped_points: singular cell matrix");
  Int total = 1;
  for (const Int& d : snf.invariant_factors) {
    total *= d;
    if (total > 1000000) fail(errc::bound_exceeded, "parallelepiped_points: index too large");
  }
  std::set<std::vector<Int>> out;
  std::vector<Int> k(r, Int(0));
  while (true) {
    // lambda0 = V * (k_j / d_j); the fractional part picks the coset
    // representative inside the half-open parallelepiped
    RatVec lambda(r, Rat(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        lambda[i] += Rat(snf.v.at(i, j)) * Rat(k[j], snf.invariant_factors[j]);
    for (int i = 0; i < r; ++i) lambda[i] -= Rat(rat_floor(lambda[i]));
    std::vector<Int> x(cell.rows, Int(0));
    bool integral = true;
    for (int i = 0; i < cell.rows && integral; ++i) {
      Rat s(0);
      for (int j = 0; j < r; ++j) s += Rat(cell.at(i, j)) * lambda[j];
      if (boost::multiprecision::denominator(s) != 1) integral = false;
      else x[i] = Int(boost::multiprecision::numerator(s));
    }
    if (!integral)
      fail(errc::internal_contradiction, "parallelepiped_points: non-integral coset point");
    bool zero = true;
    for (const Int& v : x)
      if (v != 0) zero = false;
    if (!zero) out.insert(std::move(x));
    // odometer over the residue tuples
    int pos = r - 1;
    while (pos >= 0) {
      k[pos] += 1;
      if (k[pos] < snf.invariant_factors[pos]) break;
      k[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  if (Int(out.size()) + 1 != total)
    fail(errc::internal_contradiction, "parallelepiped_points: coset count mismatch");
  return {out.begin(), out.end()};
}

inline IntMatrix gens_as_columns(const std::vector<std::vector<Int>>& gens) {
  if (gens.empty()) fail(errc::parse, "gens_as_columns: empty configuration");
  IntMatrix m(int(gens[0].size()), int(gens.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (int(gens[j].size()) != m.rows) fail(errc::parse, "gens_as_columns: ragged configuration");
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = gens[j][i];
  }
  return m;
}

}  // namespace detail

struct HilbertResult {
  bool hilbert = false;
  std::optional<std::vector<Int>> witness;  // a lattice point of the cone outside the semigroup
  long long candidates_checked = 0;
};

// Do the generators form a Hilbert basis, i.e. does every lattice point of
// cone(gens) lie in the semigroup N{gens}?  The reference lattice defaults to
// Z{gens}; pass `lattice` (as columns) to measure against a finer one, e.g.
// the integer points of the linear span.  Complete by the decomposition
// z = (integral part in the cell) + (fundamental-parallelepiped point).
inline HilbertResult is_hilbert_basis(const std::vector<std::vector<Int>>& gens,
                                      std::optional<IntMatrix> lattice = std::nullopt) {
  detail::require_nonneg(gens, "is_hilbert_basis");
  IntMatrix cols = detail::gens_as_columns(gens);
  IntMatrix basis = lattice ? hermite(*lattice).basis : hermite(cols).basis;
  if (lattice) {
    Hermite h = hermite(*lattice);
    for (const auto& g : gens)
      if (!lattice_member(h, g))
        fail(errc::hypothesis_failed, "is_hilbert_basis: generator outside reference lattice");
    if (int(h.pivot_rows.size()) != lattice_rank(cols))
      fail(errc::hypothesis_failed, "is_hilbert_basis: lattice rank differs from cone rank");
  }
  PlacingResult tri = placing_triangulation(gens);
  std::set<std::vector<Int>> candidates;
  for (const auto& cell : tri.cells) {
    IntMatrix cm(cols.rows, int(cell.size()));
    for (int j = 0; j < int(cell.size()); ++j)
      for (int i = 0; i < cols.rows; ++i) cm.at(i, j) = cols.at(i, cell[j]);
    for (auto& p : detail::parallelepiped_points(basis, cm)) candidates.insert(std::move(p));
  }
  HilbertResult res;
  for (const auto& x : candidates) {
    ++res.candidates_checked;
    if (!semigroup_member(gens, x)) {
      res.hilbert = false;
      res.witness = x;
      return res;
    }
  }
  res.hilbert = true;
  return res;
}

// Independent oracle: scan every lattice point of the componentwise box
// bounded by the sum of the generators (all irreducible semigroup elements
// live there when the generators are nonnegative).  Exponential in the box
// volume; intended for cross-checks on small instances.
inline HilbertResult is_hilbert_basis_boxscan(const std::vector<std::vector<Int>>& gens,
                                              std::optional<IntMatrix> lattice = std::nullopt,
                                              long long max_points = 5000000) {
  detail::require_nonneg(gens, "is_hilbert_basis_boxscan");
  IntMatrix cols = detail::gens_as_columns(gens);
  const int m = cols.rows;
  std::vector<Int> box(m, Int(0));
  for (const auto& g : gens)
    for (int i = 0; i < m; ++i) box[i] += g[i];
  Int volume = 1;
  for (const Int& b : box) {
    volume *= (b + 1);
    if (volume > max_points) fail(errc::bound_exceeded, "is_hilbert_basis_boxscan: box too large");
  }
  Hermite h = lattice ? hermite(*lattice) : hermite(cols);
  ConeFacets fc = cone_facets(gens);
  HilbertResult res;
  std::vector<Int> x(m, Int(0));
  while (true) {
    bool zero = true;
    for (const Int& v : x)
      if (v != 0) zero = false;
    if (!zero && lattice_member(h, x) && cone_member(fc, x)) {
      ++res.candidates_checked;
      if (!semigroup_member(gens, x)) {
        res.hilbert = false;
        res.witness = x;
        return res;
      }
    }
    int pos = m - 1;
    while (pos >= 0) {
      x[pos] += 1;
      if (x[pos] <= box[pos]) break;
      x[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  res.hilbert = true;
  return res;
}

// ---------- clutter-level wrappers ----------

// edge incidence vectors lifted by a final coordinate 1
inline std::vector<std::vector<Int>> homogenized_edge_columns(const Clutter& c) {
  std::vector<std::vector<Int>> cols;
  for (const auto& e : c.edges) {
    std::vector<Int> g(c.n + 1, Int(0));
    for (int v : e) g[v] = 1;
    g[c.n] = 1;
    cols.push_back(std::move(g));
  }
  return cols;
}

// The extended configuration {e_1..e_n} + homogenized edges is a Hilbert
// basis exactly when the blowup algebra is integrally closed.
inline HilbertResult rees_normality(const Clutter& c) {
  return is_hilbert_basis(rees_cone_generators(c));
}

inline bool rees_is_normal(const Clutter& c) { return rees_normality(c).hilbert; }

// Integral closure of the edge subring measured inside its own lattice.
inline HilbertResult edge_subring_normality(const Clutter& c) {
  return is_hilbert_basis(homogenized_edge_columns(c));
}

// Does the edge subring exhaust the Ehrhart ring, i.e. is the homogenized
// edge configuration a Hilbert basis relative to the full integer points of
// its linear span?
inline HilbertResult ehrhart_comparison(const Clutter& c) {
  auto cols = homogenized_edge_columns(c);
  // equations cutting out the span
  RatMat rows;
  for (const auto& g : cols) rows.push_back(detail::to_rat(g));
  auto eqs = nullspace(rows);
  IntMatrix lattice = IntMatrix::identity(c.n + 1);
  if (!eqs.empty()) {
    IntMatrix a(int(eqs.size()), c.n + 1);
    for (int i = 0; i < a.rows; ++i) {
      std::vector<Int> z = integerize(eqs[i]);
      for (int j = 0; j < a.cols; ++j) a.at(i, j) = z[j];
    }
    lattice = integer_kernel(a);
  }
  return is_hilbert_basis(cols, lattice);
}

inline bool ehrhart_equality(const Clutter& c) { return ehrhart_comparison(c).hilbert; }

// Do the plain edge columns pick up every integer point of their cone, i.e.
// N{v_j} = R+{v_j} intersected with Z^n?  (Z^n meets the cone inside the
// span, so the reference lattice is the integer points of the span.)
inline HilbertResult edge_cone_closure(const Clutter& c) {
  std::vector<std::vector<Int>> cols;
  for (const auto& e : c.edges) {
    std::vector<Int> g(c.n, Int(0));
    for (int v : e) g[v] = 1;
    cols.push_back(std::move(g));
  }
  RatMat rows;
  for (const auto& g : cols) rows.push_back(detail::to_rat(g));
  auto eqs = nullspace(rows);
  IntMatrix lattice = IntMatrix::identity(c.n);
  if (!eqs.empty()) {
    IntMatrix a(int(eqs.size()), c.n);
    for (int i = 0; i < a.rows; ++i) {
      std::vector<Int> z = integerize(eqs[i]);
      for (int j = 0; j < a.cols; ++j) a.at(i, j) = z[j];
    }
    lattice = integer_kernel(a);
  }
  return is_hilbert_basis(cols, lattice);
}

// ---------- symbolic versus ordinary powers (monomial computation) ----------

struct PowerComparison {
  bool equal = false;
  // exponent vector of a monomial in the k-th symbolic power but not in the
  // ordinary k-th power, when one exists
  std::optional<std::vector<Int>> witness;
  long long generators_checked = 0;
};

// Compare the k-th symbolic and ordinary powers of the edge-generated
// monomial ideal.  The symbolic power is the intersection of the k-th powers
// of the cover primes; its minimal generators have entries at most k, so the
// scan below is complete.
inline PowerComparison symbolic_vs_ordinary_power(const Clutter& c, int k) {
  if (k < 1) fail(errc::parse, "symbolic_vs_ordinary_power: k must be >= 1");
  auto covers = minimal_vertex_covers(c);
  const int n = c.n;
  double est = std::pow(double(k + 1), double(n));
  if (est > 2e6) fail(errc::bound_exceeded, "symbolic_vs_ordinary_power: scan too large");

  auto in_symbolic = [&](const std::vector<int>& a) {
    for (const auto& u : covers) {
      int s = 0;
      for (int v : u) s += a[v];
      if (s < k) return false;
    }
    return true;
  };
  // minimal in the up-closed set: no coordinate can be lowered
  auto minimal = [&](const std::vector<int>& a) {
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      bool needed = false;
      for (const auto& u : covers) {
        if (std::find(u.begin(), u.end(), i) == u.end()) continue;
        int s = 0;
        for (int v : u) s += a[v];
        if (s == k) {
          needed = true;
          break;
        }
      }
      if (!needed) return false;
    }
    return true;
  };
  // membership in the ordinary power: pick k edges (with repetition) whose
  // incidence sum is dominated by a
  std::vector<std::vector<int>> edge_vecs;
  for (const auto& e : c.edges) {
    std::vector<int> v(n, 0);
    for (int w : e) v[w] = 1;
    edge_vecs.push_back(std::move(v));
  }
  std::function<bool(std::vector<int>&, int, int)> in_ordinary =
      [&](std::vector<int>& rest, int need, int from) -> bool {
    if (need == 0) return true;
    if (from == int(edge_vecs.size())) return false;
    for (int t = need; t >= 1; --t) {
      bool fits = true;
      for (int i = 0; i < n && fits; ++i)
        if (t * edge_vecs[from][i] > rest[i]) fits = false;
      if (!fits) continue;
      for (int i = 0; i < n; ++i) rest[i] -= t * edge_vecs[from][i];
      if (in_ordinary(rest, need - t, from + 1)) return true;
      for (int i = 0; i < n; ++i) rest[i] += t * edge_vecs[from][i];
    }
    return in_ordinary(rest, need, from + 1);
  };

  PowerComparison res;
  res.equal = true;
  std::vector<int> a(n, 0);
  while (true) {
    if (in_symbolic(a) && minimal(a)) {
      ++res.generators_checked;
      std::vector<int> rest = a;
      if (!in_ordinary(rest, k, 0)) {
        res.equal = false;
        res.witness = std::vector<Int>(a.begin(), a.end());
        return res;
      }
    }
    int pos = n - 1;
    while (pos >= 0) {
      if (++a[pos] <= k) break;
      a[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return res;
}

// Not normal, but every single-vertex deletion and contraction is.
inline bool is_minimally_non_normal(const Clutter& c) {
  if (rees_is_normal(c)) return false;
  for (int v = 0; v < c.n; ++v) {
    for (int mode = 0; mode < 2; ++mode) {
      try {
        Minor m = mode == 0 ? minor(c, {v}, {}) : minor(c, {}, {v});
        if (!rees_is_normal(m.clutter)) return false;
      } catch (const error& e) {
        if (e.kind() != errc::empty_minor) throw;
      }
    }
  }
  return true;
}

}  // namespace clutterlab
