#include "clutterlab/linalg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace clutterlab;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int max_dim, int max_abs) {
  int r = 1 + int(rng() % std::uint64_t(max_dim));
  int c = 1 + int(rng() % std::uint64_t(max_dim));
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m.at(i, j) = Int(long(rng() % std::uint64_t(2 * max_abs + 1)) - max_abs);
  return m;
}

// gcd of all k x k minors by direct expansion (reference oracle)
Int minor_gcd(const IntMatrix& m, int k) {
  std::vector<int> ri(k), ci(k);
  Int g = 0;
  std::function<void(int, int)> rows = [&](int pos, int from) {
    if (pos == k) {
      std::function<void(int, int)> cols = [&](int cp, int cf) {
        if (cp == k) {
          // Laplace expansion on the k x k submatrix
          std::function<Int(std::vector<int>, std::vector<int>)> det =
              [&](std::vector<int> rs, std::vector<int> cs) -> Int {
            if (rs.size() == 1) return m.at(rs[0], cs[0]);
            Int d = 0;
            for (std::size_t j = 0; j < cs.size(); ++j) {
              std::vector<int> rs2(rs.begin() + 1, rs.end());
              std::vector<int> cs2;
              for (std::size_t t = 0; t < cs.size(); ++t)
                if (t != j) cs2.push_back(cs[t]);
              Int term = m.at(rs[0], cs[j]) * det(rs2, cs2);
              d += (j % 2 == 0) ? term : -term;
            }
            return d;
          };
          Int d = det(ri, ci);
          g = gcd(g, d);
          return;
        }
        for (int j = cf; j < m.cols; ++j) {
          ci[cp] = j;
          cols(cp + 1, j + 1);
        }
      };
      cols(0, 0);
      return;
    }
    for (int i = from; i < m.rows; ++i) {
      ri[pos] = i;
      rows(pos + 1, i + 1);
    }
  };
  rows(0, 0);
  return g < 0 ? Int(-g) : g;
}

}  // namespace

TEST_CASE("smith normal form against the gcd-of-minors oracle") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix m = random_matrix(rng, 4, 5);
    SmithResult s = smith_normal_form(m);  // self-checks U*M*V == D internally
    int r = int(s.invariant_factors.size());
    CHECK(r == rank(m));
    // divisibility chain
    for (int i = 0; i + 1 < r; ++i) CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
    // product of the first k factors equals the gcd of all k x k minors
    Int prod = 1;
    for (int k = 1; k <= r; ++k) {
      prod *= s.invariant_factors[k - 1];
      CHECK(prod == minor_gcd(m, k));
    }
    // beyond the rank every minor vanishes
    if (r < std::min(m.rows, m.cols)) CHECK(minor_gcd(m, r + 1) == 0);
  }
}

TEST_CASE("transformation matrices are unimodular") {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 60; ++iter) {
    IntMatrix m = random_matrix(rng, 4, 5);
    SmithResult s = smith_normal_form(m);
    CHECK(delta_r(s.u, s.u.rows) == 1);
    CHECK(delta_r(s.v, s.v.rows) == 1);
  }
}

TEST_CASE("delta_r on the incidence matrices from the running example") {
  // triangle: rank 3, gcd of 3x3 minors is 2; appending a row of ones drops it to 1
  IntMatrix a(3, 3);
  a.at(0, 0) = 1; a.at(1, 0) = 1;
  a.at(1, 1) = 1; a.at(2, 1) = 1;
  a.at(0, 2) = 1; a.at(2, 2) = 1;
  REQUIRE(rank(a) == 3);
  CHECK(delta_r(a, 3) == 2);
  CHECK(minor_gcd(a, 3) == 2);
  IntMatrix b(4, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.at(i, j) = a.at(i, j);
  for (int j = 0; j < 3; ++j) b.at(3, j) = 1;
  REQUIRE(rank(b) == 3);
  CHECK(delta_r(b, 3) == 1);
  CHECK(minor_gcd(b, 3) == 1);
}

TEST_CASE("hermite form and lattice membership") {
  IntMatrix g(2, 2);
  g.at(0, 0) = 2; g.at(0, 1) = 1;
  g.at(1, 0) = 0; g.at(1, 1) = 3;
  Hermite h = hermite(g);
  // the column lattice of g is all of rank 2; membership must agree with solving
  CHECK(lattice_member(h, {1, 0}) == false);
  CHECK(lattice_member(h, {2, 0}) == true);
  CHECK(lattice_member(h, {1, 3}) == true);
  CHECK(lattice_member(h, {3, 3}) == true);
  CHECK(lattice_member(h, {0, 3}) == false);  // needs a half-step of the first column
  CHECK(lattice_rank(g) == 2);

  // canonical: any generating set of the same lattice gives the same basis
  IntMatrix g2(2, 3);
  g2.at(0, 0) = 2; g2.at(0, 1) = 1; g2.at(0, 2) = 3;
  g2.at(1, 0) = 0; g2.at(1, 1) = 3; g2.at(1, 2) = 3;
  CHECK(lattice_equal(g, g2));
}

TEST_CASE("lattice index") {
  IntMatrix sup(2, 3);
  sup.at(0, 0) = 1; sup.at(0, 1) = 1; sup.at(0, 2) = 1;
  sup.at(1, 0) = 0; sup.at(1, 1) = 1; sup.at(1, 2) = 2;
  IntMatrix sub(2, 2);
  sub.at(0, 0) = 1; sub.at(0, 1) = 1;
  sub.at(1, 0) = 0; sub.at(1, 1) = 2;
  CHECK(lattice_index(sub, sup) == 2);
  CHECK(lattice_index(sup, sup) == 1);
  // rank mismatch is an error, not zero
  IntMatrix thin(2, 1);
  thin.at(0, 0) = 1;
  CHECK_THROWS_AS(lattice_index(thin, sup), error);
}

TEST_CASE("integer kernel is a saturated lattice of solutions") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 50; ++iter) {
    IntMatrix a = random_matrix(rng, 4, 3);
    IntMatrix k = integer_kernel(a);
    // every kernel column solves a x = 0
    for (int j = 0; j < k.cols; ++j)
      for (int i = 0; i < a.rows; ++i) {
        Int s = 0;
        for (int t = 0; t < a.cols; ++t) s += a.at(i, t) * k.at(t, j);
        REQUIRE(s == 0);
      }
    CHECK(k.cols == a.cols - rank(a));
    // saturation: every small integer solution lies in the kernel lattice
    if (k.cols > 0) {
      Hermite h = hermite(k);
      std::vector<Int> x(a.cols);
      std::function<void(int)> scan = [&](int pos) {
        if (pos == a.cols) {
          for (int i = 0; i < a.rows; ++i) {
            Int s = 0;
            for (int t = 0; t < a.cols; ++t) s += a.at(i, t) * x[t];
            if (s != 0) return;
          }
          CHECK(lattice_member(h, x));
          return;
        }
        for (int v = -2; v <= 2; ++v) {
          x[pos] = v;
          scan(pos + 1);
        }
      };
      if (a.cols <= 4) scan(0);
    }
  }
}

TEST_CASE("rational kernel and solve") {
  RatMat rows = {{Rat(1), Rat(1), Rat(1)}, {Rat(0), Rat(1), Rat(2)}};
  auto ns = nullspace(rows);
  REQUIRE(ns.size() == 1);
  // the nullspace vector is proportional to (1, -2, 1)
  const RatVec& v = ns[0];
  CHECK(v[0] * Rat(-2) == v[1] * Rat(1));
  CHECK(v[0] == v[2]);

  RatMat a = {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  auto sol = solve_rational(a, {Rat(3), Rat(1), Rat(2)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 2);
  CHECK((*sol)[1] == 1);
  CHECK_FALSE(solve_rational(a, {Rat(1), Rat(1), Rat(1)}).has_value());
}
