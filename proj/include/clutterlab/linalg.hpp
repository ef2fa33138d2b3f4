#pragma once

#include "clutterlab/matrix.hpp"

#include <optional>

namespace clutterlab {

// ---------- integer rank (fraction-free elimination) ----------

inline int rank(const IntMatrix& m0) {
  IntMatrix m = m0;
  int r = 0;
  Int prev = 1;
  for (int j = 0; j < m.cols && r < m.rows; ++j) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(r, k));
    for (int i = r + 1; i < m.rows; ++i) {
      for (int k = j + 1; k < m.cols; ++k)
        m.at(i, k) = (m.at(r, j) * m.at(i, k) - m.at(i, j) * m.at(r, k)) / prev;
      m.at(i, j) = 0;
    }
    prev = m.at(r, j);
    ++r;
  }
  return r;
}

// ---------- Smith normal form ----------

struct SmithResult {
  IntMatrix u, d, v;                  // u*m*v == d, u and v unimodular
  std::vector<Int> invariant_factors; // d_1 | d_2 | ... | d_r, all >= 1
};

/// Deterministic elimination: the pivot is always the minimal-|value| nonzero
// entry of the working submatrix, ties broken by row-major position.
inline SmithResult smith_normal_form(const IntMatrix& m0) {
  IntMatrix d = m0;
  IntMatrix u = IntMatrix::identity(d.rows);
  IntMatrix v = IntMatrix::identity(d.cols);
  auto row_sub = [&](int dst, int src, const Int& f) {  // row dst -= f * row src
    for (int k = 0; k < d.cols; ++k) d.at(dst, k) -= f * d.at(src, k);
    for (int k = 0; k < u.cols; ++k) u.at(dst, k) -= f * u.at(src, k);
  };
  auto col_sub = [&](int dst, int src, const Int& f) {
    for (int k = 0; k < d.rows; ++k) d.at(k, dst) -= f * d.at(k, src);
    for (int k = 0; k < v.rows; ++k) v.at(k, dst) -= f * v.at(k, src);
  };
  auto row_swap = [&](int x, int y) {
    if (x == y) return;
    for (int k = 0; k < d.cols; ++k) std::swap(d.at(x, k), d.at(y, k));
    for (int k = 0; k < u.cols; ++k) std::swap(u.at(x, k), u.at(y, k));
  };
  auto col_swap = [&](int x, int y) {
    if (x == y) return;
    for (int k = 0; k < d.rows; ++k) std::swap(d.at(k, x), d.at(k, y));
    for (int k = 0; k < v.rows; ++k) std::swap(v.at(k, x), v.at(k, y));
  };
  auto row_neg = [&](int x) {
    for (int k = 0; k < d.cols; ++k) d.at(x, k) = -d.at(x, k);
    for (int k = 0; k < u.cols; ++k) u.at(x, k) = -u.at(x, k);
  };

  int t = 0;
  while (t < d.rows && t < d.cols) {
    for (;;) {
      // minimal |nonzero| pivot in the working submatrix, row-major ties
      int pr = -1, pc = -1;
      Int best = 0;
      for (int i = t; i < d.rows; ++i)
        for (int j = t; j < d.cols; ++j) {
          const Int& x = d.at(i, j);
          if (x == 0) continue;
          Int ax = abs_int(x);
          if (pr < 0 || ax < best) {
            best = ax;
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) {  // submatrix is zero
        t = d.rows + d.cols;  // terminate outer loop
        break;
      }
      row_swap(t, pr);
      col_swap(t, pc);
      if (d.at(t, t) < 0) row_neg(t);
      bool touched = false;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int f = d.at(i, t) / d.at(t, t);
        if (f != 0) row_sub(i, t, f);
        if (d.at(i, t) != 0) touched = true;  // remainder left; new smaller pivot exists
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int f = d.at(t, j) / d.at(t, t);
        if (f != 0) col_sub(j, t, f);
        if (d.at(t, j) != 0) touched = true;
      }
      if (touched) continue;
      // pivot must divide the rest of the submatrix for the divisibility chain
      bool fixed = false;
      for (int i = t + 1; i < d.rows && !fixed; ++i)
        for (int j = t + 1; j < d.cols && !fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_sub(t, i, Int(-1));  // row t += row i, re-run the elimination
            fixed = true;
          }
      if (!fixed) break;
    }
    ++t;
  }

  SmithResult res{std::move(u), std::move(d), std::move(v), {}};
  for (int i = 0; i < res.d.rows && i < res.d.cols; ++i)
    if (res.d.at(i, i) != 0) res.invariant_factors.push_back(res.d.at(i, i));
  // internal consistency: U*M*V must reproduce D
  if (!(mul(mul(res.u, m0), res.v) == res.d))
    fail(errc::internal_contradiction, "smith_normal_form: U*M*V != D");
  return res;
}

// Δ_r: gcd of all r×r minors, computed as the product of the first r invariant
// factors. Requires 1 <= r <= rank.
inline Int delta_r(const IntMatrix& m, int r) {
  if (m.is_zero()) fail(errc::zero_matrix, "delta_r: zero matrix");
  auto s = smith_normal_form(m);
  if (r < 1 || r > int(s.invariant_factors.size()))
    fail(errc::rank_mismatch, "delta_r: r out of 1..rank");
  Int p = 1;
  for (int i = 0; i < r; ++i) p *= s.invariant_factors[i];
  return p;
}

// ---------- Hermite normal form (column style) and lattices ----------

// Lattice spanned by the columns of `gens` inside Z^m.
struct Hermite {
  IntMatrix basis;             // m×r, canonical column HNF basis (zero cols dropped)
  std::vector<int> pivot_rows; // strictly increasing, one per basis column
};

inline Hermite hermite(const IntMatrix& gens) {
  int m = gens.rows;
  std::vector<std::vector<Int>> cols;
  for (int j = 0; j < gens.cols; ++j) cols.push_back(gens.col(j));
  std::vector<int> pivots;
  int next = 0;
  for (int i = 0; i < m; ++i) {
    // gcd all entries of row i in columns >= next into column `next`
    int found = -1;
    for (int j = next; j < int(cols.size()); ++j)
      if (cols[j][i] != 0) {
        found = j;
        break;
      }
    if (found < 0) continue;
    std::swap(cols[next], cols[found]);
    for (int j = next + 1; j < int(cols.size()); ++j) {
      while (cols[j][i] != 0) {
        Int f = cols[next][i] / cols[j][i];
        if (f != 0)
          for (int k = 0; k < m; ++k) cols[next][k] -= f * cols[j][k];
        std::swap(cols[next], cols[j]);
      }
      // loop ends with cols[j][i] == 0 and the gcd-so-far in cols[next]
    }
    if (cols[next][i] < 0)
      for (int k = 0; k < m; ++k) cols[next][k] = -cols[next][k];
    // reduce earlier pivot columns at row i into [0, pivot)
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      Int& e = cols[p][i];
      if (e < 0 || e >= cols[next][i]) {
        Int f = e / cols[next][i];
        if (e - f * cols[next][i] < 0) f -= 1;  // floor division
        for (int k = 0; k < m; ++k) cols[p][k] -= f * cols[next][k];
      }
    }
    pivots.push_back(i);
    ++next;
  }
  Hermite h;
  h.pivot_rows = pivots;
  h.basis = IntMatrix(m, int(pivots.size()));
  for (int j = 0; j < h.basis.cols; ++j)
    for (int i = 0; i < m; ++i) h.basis.at(i, j) = cols[j][i];
  return h;
}

inline int lattice_rank(const IntMatrix& gens) { return int(hermite(gens).pivot_rows.size()); }

// Is x an integral combination of the lattice basis?
inline bool lattice_member(const Hermite& h, const std::vector<Int>& x0) {
  std::vector<Int> x = x0;
  if (int(x.size()) != h.basis.rows) fail(errc::rank_mismatch, "lattice_member: dimension mismatch");
  for (int j = 0; j < h.basis.cols; ++j) {
    int i = h.pivot_rows[j];
    if (x[i] % h.basis.at(i, j) != 0) return false;
    Int f = x[i] / h.basis.at(i, j);
    if (f != 0)
      for (int k = 0; k < h.basis.rows; ++k) x[k] -= f * h.basis.at(k, j);
  }
  for (const Int& e : x)
    if (e != 0) return false;
  return true;
}

inline bool lattice_member(const IntMatrix& gens, const std::vector<Int>& x) {
  return lattice_member(hermite(gens), x);
}

// Z-span equality of two generator sets (same ambient dimension).
inline bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows != b.rows) fail(errc::rank_mismatch, "lattice_equal: ambient dimension mismatch");
  Hermite ha = hermite(a), hb = hermite(b);
  if (ha.pivot_rows != hb.pivot_rows) return false;
  return ha.basis == hb.basis;  // HNF basis is canonical
}

// Index [L_sup : L_sub] for a full-rank sublattice of the same Q-span.
// RankMismatch when the Q-spans differ (the index would be infinite).
inline Int lattice_index(const IntMatrix& sub, const IntMatrix& sup) {
  if (sub.rows != sup.rows) fail(errc::rank_mismatch, "lattice_index: ambient dimension mismatch");
  Hermite hsub = hermite(sub), hsup = hermite(sup);
  int r = int(hsup.pivot_rows.size());
  if (int(hsub.pivot_rows.size()) != r)
    fail(errc::rank_mismatch, "lattice_index: ranks differ (index infinite)");
  // coordinates of each sub basis vector in the sup basis (rational solve via
  // the pivot structure); non-solvable => different spans
  std::vector<std::vector<Rat>> y(r, std::vector<Rat>(r));
  for (int j = 0; j < r; ++j) {
    std::vector<Rat> x(hsup.basis.rows);
    for (int i = 0; i < hsup.basis.rows; ++i) x[i] = Rat(hsub.basis.at(i, j));
    for (int k = 0; k < r; ++k) {
      int i = hsup.pivot_rows[k];
      Rat f = x[i] / Rat(hsup.basis.at(i, k));
      y[k][j] = f;
      if (f != 0)
        for (int t = 0; t < hsup.basis.rows; ++t) x[t] -= f * Rat(hsup.basis.at(t, k));
    }
    for (const Rat& e : x)
      if (e != 0) fail(errc::rank_mismatch, "lattice_index: spans differ (index infinite)");
  }
  // |det(y)| by rational Gaussian elimination
  Rat det = 1;
  for (int c = 0; c < r; ++c) {
    int piv = -1;
    for (int i = c; i < r; ++i)
      if (y[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) fail(errc::internal_contradiction, "lattice_index: singular coordinate matrix");
    if (piv != c) {
      std::swap(y[piv], y[c]);
      det = -det;
    }
    det *= y[c][c];
    for (int i = c + 1; i < r; ++i) {
      if (y[i][c] == 0) continue;
      Rat f = y[i][c] / y[c][c];
      for (int k = c; k < r; ++k) y[i][k] -= f * y[c][k];
    }
  }
  if (det < 0) det = -det;
  if (boost::multiprecision::denominator(det) != 1)
    fail(errc::parse, "lattice_index: first lattice is not contained in the second");
  return Int(boost::multiprecision::numerator(det));
}

// Z^m / Z{columns} is torsion-free iff every invariant factor is 1.
inline bool torsion_trivial(const IntMatrix& gens) {
  auto s = smith_normal_form(gens);
  for (const Int& f : s.invariant_factors)
    if (f != 1) return false;
  return true;
}

// Basis of {x in Z^cols : A x = 0}, one column per basis vector.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  SmithResult s = smith_normal_form(a);
  int rho = 0;
  int diag = std::min(s.d.rows, s.d.cols);
  for (int i = 0; i < diag; ++i)
    if (s.d.at(i, i) != 0) ++rho;
  IntMatrix out(a.cols, a.cols - rho);
  for (int j = rho; j < a.cols; ++j)
    for (int i = 0; i < a.cols; ++i) out.at(i, j - rho) = s.v.at(i, j);
  return out;
}

// ---------- exhaustive minors: t-unimodularity ----------

namespace detail {
inline Int det_int(const IntMatrix& m) {  // Bareiss determinant of a square matrix
  IntMatrix a = m;
  int n = a.rows;
  Int prev = 1, sign = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(a.at(piv, k), a.at(c, k));
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int k = c + 1; k < n; ++k)
        a.at(i, k) = (a.at(c, c) * a.at(i, k) - a.at(i, c) * a.at(c, k)) / prev;
      a.at(i, c) = 0;
    }
    prev = a.at(c, c);
  }
  return sign * a.at(n - 1, n - 1);
}

inline bool next_combination(std::vector<int>& idx, int n) {
  int k = int(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}
}  // namespace detail

// If every nonzero r×r minor (r = rank) has the same absolute value t, returns
// t; otherwise nullopt. The number of minors inspected is bounded.
inline std::optional<Int> is_t_unimodular(const IntMatrix& m, long long max_minors = 2000000) {
  int r = rank(m);
  if (r == 0) fail(errc::zero_matrix, "is_t_unimodular: zero matrix");
  // count combinations with overflow care (desk scale keeps this small)
  auto comb_count = [&](int n, int k) -> long long {
    long long c = 1;
    for (int i = 1; i <= k; ++i) {
      c = c * (n - k + i) / i;
      if (c > (1LL << 40)) return 1LL << 40;
    }
    return c;
  };
  long long total = comb_count(m.rows, r) * comb_count(m.cols, r);
  if (total > max_minors)
    fail(errc::bound_exceeded, "is_t_unimodular: too many minors (" + std::to_string(total) + ")");
  std::vector<int> ri(r), ci0(r);
  for (int i = 0; i < r; ++i) ri[i] = i;
  std::optional<Int> t;
  do {
    std::vector<int> ci = ci0;
    for (int i = 0; i < r; ++i) ci[i] = i;
    do {
      IntMatrix sub(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
      Int d = abs_int(detail::det_int(sub));
      if (d != 0) {
        if (!t) t = d;
        else if (*t != d) return std::nullopt;
      }
    } while (detail::next_combination(ci, m.cols));
  } while (detail::next_combination(ri, m.rows));
  return t;  // some r×r minor is nonzero since r = rank
}

// ---------- small exact rational linear algebra ----------

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<int> rref(RatMat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  int rows = int(a.size()), cols = int(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    Rat f = a[r][c];
    for (int k = c; k < cols; ++k) a[r][k] /= f;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat g = a[i][c];
      for (int k = c; k < cols; ++k) a[i][k] -= g * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Solve A x = b (A given row-major). Returns a particular solution or nullopt.
inline std::optional<RatVec> solve_rational(const RatMat& a0, const RatVec& b) {
  if (a0.empty()) return RatVec{};
  int rows = int(a0.size()), cols = int(a0[0].size());
  RatMat a(rows, RatVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a[i][j] = a0[i][j];
    a[i][cols] = b[i];
  }
  auto pivots = rref(a);
  for (int k = int(pivots.size()) - 1; k >= 0; --k)
    if (pivots[k] == cols) return std::nullopt;  // inconsistent row 0 = 1
  RatVec x(cols, Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    // row k has leading 1 at pivots[k]; free variables stay 0
    x[pivots[k]] = a[k][cols];
  }
  return x;
}

// Basis of the nullspace {x : A x = 0}.
inline std::vector<RatVec> nullspace(const RatMat& a0) {
  if (a0.empty()) return {};
  RatMat a = a0;
  int cols = int(a0[0].size());
  auto pivots = rref(a);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<RatVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Primitive integer vector proportional to a rational vector (zero stays zero).
inline std::vector<Int> integerize(const RatVec& v) {
  Int l = 1;
  for (const Rat& x : v) l = lcm(l, Int(boost::multiprecision::denominator(x)));
  std::vector<Int> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(l);
    w[i] = Int(boost::multiprecision::numerator(s));
  }
  primitivize(w);
  return w;
}

}  // namespace clutterlab
