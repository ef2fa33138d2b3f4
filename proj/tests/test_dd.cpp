#include "clutterlab/dd.hpp"
#include "clutterlab/enumerate.hpp"
#include "clutterlab/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

using namespace clutterlab;

namespace {

using Vec = std::vector<Int>;

std::set<Vec> as_set(const std::vector<Vec>& rays) { return {rays.begin(), rays.end()}; }

// Membership of x in cone(rays): solve with a tiny exact simplex-free check —
// here via nonnegative rational combination using Fourier-style elimination is
// overkill, so use the halfspace description when one is available instead.
bool satisfies_all(const std::vector<Vec>& halfspaces, const Vec& x) {
  for (const auto& h : halfspaces) {
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += h[i] * x[i];
    if (s < 0) return false;
  }
  return true;
}

// Brute oracle for extreme rays of {x >= 0, A x >= b-part... } style systems:
// every extreme ray of a pointed d-dimensional cone is the solution of d-1
// linearly independent tight constraints, so enumerate support sets of the
// inequality system, solve, and keep the feasible primitive ones.
std::vector<Vec> brute_extreme_rays(int dim, const std::vector<Vec>& halfspaces) {
  std::set<Vec> found;
  int m = int(halfspaces.size());
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (int(pick.size()) == dim - 1) {
      // nullspace of the picked rows
      RatMat a;
      for (int i : pick) {
        RatVec row;
        for (const Int& v : halfspaces[i]) row.emplace_back(v);
        a.push_back(std::move(row));
      }
      for (auto& ns : nullspace(a)) {
        // rational -> integer direction
        Int l = 1;
        for (const Rat& r : ns) l = lcm(l, Int(boost::multiprecision::denominator(r)));
        Vec cand(dim);
        for (int j = 0; j < dim; ++j) {
          Rat scaled = ns[j] * Rat(l);
          cand[j] = Int(boost::multiprecision::numerator(scaled));
        }
        primitivize(cand);
        for (int sgn = 0; sgn < 2; ++sgn) {
          Vec v = cand;
          if (sgn) for (Int& x : v) x = -x;
          if (satisfies_all(halfspaces, v)) {
            // reject if the opposite direction is feasible too (lineality)
            Vec w = v;
            for (Int& x : w) x = -x;
            if (!satisfies_all(halfspaces, w)) found.insert(v);
          }
        }
      }
      return;
    }
    for (int i = from; i < m; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  // keep only the extreme ones: an extreme ray's tight set is not contained in
  // any other ray's tight set
  auto tight_set = [&](const Vec& v) {
    std::vector<int> t;
    for (int i = 0; i < m; ++i) {
      Int s = 0;
      for (int j = 0; j < dim; ++j) s += halfspaces[i][j] * v[j];
      if (s == 0) t.push_back(i);
    }
    return t;
  };
  std::vector<Vec> rays(found.begin(), found.end());
  std::vector<Vec> extreme;
  for (const auto& v : rays) {
    auto tv = tight_set(v);
    bool ok = true;
    for (const auto& w : rays)
      if (w != v) {
        auto tw = tight_set(w);
        if (std::includes(tw.begin(), tw.end(), tv.begin(), tv.end())) {
          ok = false;
          break;
        }
      }
    if (ok) extreme.push_back(v);
  }
  return extreme;
}

}  // namespace

TEST_CASE("ray enumeration matches the tight-set oracle on random cones") {
  std::mt19937_64 rng(555);
  int done = 0;
  while (done < 200) {
    int dim = 2 + int(rng() % 3);  // 2..4
    int m = dim + int(rng() % 3);  // a few more constraints than dim
    std::vector<Vec> hs;
    // nonnegativity keeps the cone pointed
    for (int i = 0; i < dim; ++i) {
      Vec e(dim, 0);
      e[i] = 1;
      hs.push_back(e);
    }
    for (int i = 0; i < m; ++i) {
      Vec h(dim);
      for (int j = 0; j < dim; ++j) h[j] = Int(int(rng() % 7) - 3);
      hs.push_back(h);
    }
    auto dd = ray_enumeration<Int>(dim, hs);
    REQUIRE(dd.lineality.empty());  // pointed by construction
    auto want = brute_extreme_rays(dim, hs);
    auto got = as_set(dd.rays);
    INFO("dim=" << dim << " constraints=" << hs.size());
    CHECK(got == as_set(want));
    // every reported ray satisfies every halfspace
    for (const auto& r : dd.rays) CHECK(satisfies_all(hs, r));
    ++done;
  }
}

TEST_CASE("lineality is detected and factored out") {
  // {x : x1 + x2 >= 0} in dim 2: lineality along (1,-1), one ray
  std::vector<Vec> hs = {{1, 1}};
  auto dd = ray_enumeration<Int>(2, hs);
  REQUIRE(dd.lineality.size() == 1);
  // the lineality direction is orthogonal to the constraint
  CHECK(dd.lineality[0][0] + dd.lineality[0][1] == 0);
  // full space: dim-many lineality vectors, no rays
  auto full = ray_enumeration<Int>(3, {});
  CHECK(full.lineality.size() == 3);
  CHECK(full.rays.empty());
}

TEST_CASE("the 64-bit instantiation agrees with exact arithmetic") {
  std::mt19937_64 rng(556);
  for (int t = 0; t < 100; ++t) {
    int dim = 2 + int(rng() % 3);
    std::vector<Vec> hs_big;
    std::vector<std::vector<detail::I64>> hs_small;
    for (int i = 0; i < dim; ++i) {
      Vec e(dim, 0);
      e[i] = 1;
      hs_big.push_back(e);
      std::vector<detail::I64> f(dim, detail::I64(0));
      f[i] = detail::I64(1);
      hs_small.push_back(f);
    }
    for (int i = 0; i < dim + 2; ++i) {
      Vec h(dim);
      std::vector<detail::I64> h2;
      for (int j = 0; j < dim; ++j) {
        int v = int(rng() % 9) - 4;
        h[j] = v;
        h2.emplace_back(v);
      }
      hs_big.push_back(h);
      hs_small.push_back(h2);
    }
    auto big = ray_enumeration<Int>(dim, hs_big);
    auto small = ray_enumeration<detail::I64>(dim, hs_small);
    REQUIRE(big.rays.size() == small.rays.size());
    std::set<Vec> small_set;
    for (const auto& r : small.rays) {
      Vec v;
      for (const auto& x : r) v.emplace_back(x.v);
      small_set.insert(v);
    }
    CHECK(as_set(big.rays) == small_set);
  }
}

TEST_CASE("covering-cone rays recover a clutter's fractional vertices") {
  // homogenized covering cone of the triangle: rays with t>0 are the vertices
  // of {x >= 0, A x >= 1} after scaling; the (1/2,1/2,1/2) vertex must appear
  Clutter tri = *fixture_by_name("triangle")->clutter;
  int n = tri.n;
  std::vector<Vec> hs;
  for (int i = 0; i < n; ++i) {
    Vec e(n + 1, 0);
    e[i] = 1;
    hs.push_back(e);
  }
  for (const auto& edge : tri.edges) {
    Vec h(n + 1, 0);
    for (int v : edge) h[v] = 1;
    h[n] = -1;
    hs.push_back(h);
  }
  Vec t_axis(n + 1, 0);
  t_axis[n] = 1;
  hs.push_back(t_axis);
  auto dd = ray_enumeration<Int>(n + 1, hs);
  bool found_half = false;
  for (const auto& r : dd.rays)
    if (r[n] == 2 && r[0] == 1 && r[1] == 1 && r[2] == 1) found_half = true;
  CHECK(found_half);
}
