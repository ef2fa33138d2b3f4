#include "clutterlab/semigroup.hpp"
#include "clutterlab/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

using namespace clutterlab;

namespace {

Clutter random_clutter(std::mt19937_64& rng, int n_lo, int n_hi) {
  for (;;) {
    int n = n_lo + int(rng() % std::uint64_t(n_hi - n_lo + 1));
    std::vector<std::vector<int>> edges;
    std::uint64_t covered = 0;
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m)
      if (rng() % 4 == 0) {
        bool minimal = true;
        for (auto it = edges.begin(); it != edges.end();) {
          std::uint64_t em = 0;
          for (int v : *it) em |= std::uint64_t(1) << v;
          if ((em & m) == em) minimal = false;
          if ((em & m) == m) it = edges.erase(it);
          else ++it;
        }
        if (minimal) {
          edges.push_back(detail::mask_to_vertices(m));
          covered |= m;
        }
      }
    if (!edges.empty() && covered == (std::uint64_t(1) << n) - 1) return make_clutter(n, edges);
  }
}

std::vector<std::vector<Int>> plain_edge_columns(const Clutter& c) {
  std::vector<std::vector<Int>> cols;
  for (const auto& e : c.edges) {
    std::vector<Int> g(c.n, Int(0));
    for (int v : e) g[v] = 1;
    cols.push_back(std::move(g));
  }
  return cols;
}

// Exponent vector w lies in the k-th ordinary power of the edge ideal when
// some multiset of k edges has componentwise exponent sum <= w.
bool in_ordinary_power(const Clutter& c, const std::vector<Int>& w, int k) {
  auto cols = plain_edge_columns(c);
  std::function<bool(std::vector<Int>&, int, std::size_t)> rec =
      [&](std::vector<Int>& rest, int left, std::size_t from) -> bool {
    if (left == 0) return true;
    for (std::size_t j = from; j < cols.size(); ++j) {
      bool fits = true;
      for (int i = 0; i < c.n; ++i)
        if (rest[i] < cols[j][i]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (int i = 0; i < c.n; ++i) rest[i] -= cols[j][i];
      if (rec(rest, left - 1, j)) {
        for (int i = 0; i < c.n; ++i) rest[i] += cols[j][i];
        return true;
      }
      for (int i = 0; i < c.n; ++i) rest[i] += cols[j][i];
    }
    return false;
  };
  std::vector<Int> rest = w;
  return rec(rest, k, 0);
}

bool in_symbolic_power(const Clutter& c, const std::vector<Int>& w, int k) {
  for (const auto& u : minimal_vertex_covers(c)) {
    Int s = 0;
    for (int v : u) s += w[v];
    if (s < k) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("semigroup membership returns valid multipliers") {
  std::vector<std::vector<Int>> gens = {{2, 0}, {0, 3}, {1, 1}};
  auto lam = semigroup_member(gens, {4, 3});
  REQUIRE(lam.has_value());
  REQUIRE(lam->size() == gens.size());
  std::vector<Int> sum(2, Int(0));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    CHECK((*lam)[i] >= 0);
    for (int j = 0; j < 2; ++j) sum[j] += (*lam)[i] * gens[i][j];
  }
  CHECK(sum == std::vector<Int>{4, 3});

  CHECK_FALSE(semigroup_member({{2, 0}, {0, 3}}, {1, 1}).has_value());
  CHECK_FALSE(semigroup_member(gens, {-1, 0}).has_value());
  REQUIRE_THROWS_AS(semigroup_member(gens, {1, 2, 3}), error);
  REQUIRE_THROWS_AS(semigroup_member({{1, -1}}, {0, 0}), error);
}

TEST_CASE("half-open parallelepipeds hold |det|-1 nonzero lattice points") {
  std::mt19937_64 rng(911);
  int done = 0;
  while (done < 40) {
    int r = 2 + int(rng() % 2);
    IntMatrix cell(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) cell.at(i, j) = Int(int(rng() % 7) - 3);
    Int d = detail::det_int(cell);
    if (d == 0) continue;
    if (d < 0) d = -d;
    auto pts = detail::parallelepiped_points(IntMatrix::identity(r), cell);
    CHECK(Int(pts.size()) == d - 1);
    for (const auto& p : pts) {
      bool zero = true;
      for (const Int& x : p) if (x != 0) zero = false;
      CHECK_FALSE(zero);
    }
    ++done;
  }
}

TEST_CASE("hilbert-basis fast path agrees with the box-scan oracle") {
  std::mt19937_64 rng(912);
  // The oracle enumerates every lattice point of the box whose side in
  // coordinate i is the sum of the generators' i-th entries, so its cost is the
  // box volume times a membership search per point.  Keep the cross-check to
  // boxes under 1.5 * 10^5 points; the only configuration over that bound is
  // ex-2.3's blowup cone (4^9 * 6 ~ 1.5 * 10^6 points in dimension 10), which
  // stays covered by the fast path's internal certificates and by the fixture
  // cases below.
  static constexpr long long kMaxBoxVolume = 150000;
  auto box_volume = [](const std::vector<std::vector<Int>>& gens) {
    Int vol = 1;
    for (std::size_t i = 0; i < gens.front().size(); ++i) {
      Int side = 1;
      for (const auto& g : gens) side += g[i];
      vol *= side;
      if (vol > kMaxBoxVolume) return Int(kMaxBoxVolume) + 1;
    }
    return vol;
  };
  int compared = 0;
  auto check_both = [&](const std::vector<std::vector<Int>>& gens) {
    if (box_volume(gens) > kMaxBoxVolume) return;
    auto fast = is_hilbert_basis(gens);
    auto slow = is_hilbert_basis_boxscan(gens);
    CHECK(fast.hilbert == slow.hilbert);
    ++compared;
  };
  auto at = [](const char* n) { return *fixture_by_name(n)->clutter; };
  for (const char* n : {"triangle", "4cycle", "single-edge", "ex-2.3", "ex-3.7", "ex-4.5"}) {
    INFO(n);
    check_both(rees_cone_generators(at(n)));
    check_both(homogenized_edge_columns(at(n)));
  }
  CHECK(compared == 11);  // everything except ex-2.3's blowup cone
  for (int t = 0; t < 15; ++t) {
    Clutter c = random_clutter(rng, 3, 4);
    INFO(serialize_clutter(c));
    check_both(rees_cone_generators(c));
  }
  CHECK(compared == 26);
}

TEST_CASE("blowup-algebra normality of the fixtures") {
  auto at = [](const char* n) { return *fixture_by_name(n)->clutter; };
  CHECK(rees_is_normal(at("triangle")));
  CHECK(rees_is_normal(at("4cycle")));
  CHECK(rees_is_normal(at("single-edge")));
  CHECK(rees_is_normal(at("ex-2.3")));
  CHECK(rees_is_normal(at("ex-3.7")));

  auto r45 = rees_normality(at("ex-4.5"));
  CHECK_FALSE(r45.hilbert);
  REQUIRE(r45.witness.has_value());
  CHECK(*r45.witness == std::vector<Int>{1, 1, 1, 1, 1, 1, 2});
  // re-verify the witness independently: in the cone, in Z{gens}, yet not a
  // nonnegative integer combination
  auto gens = rees_cone_generators(at("ex-4.5"));
  CHECK(cone_member(gens, *r45.witness));
  IntMatrix cols = detail::gens_as_columns(gens);
  CHECK(lattice_member(hermite(cols), *r45.witness));
  CHECK_FALSE(semigroup_member(gens, *r45.witness).has_value());
}

TEST_CASE("edge-cone closure relative to the span's integer points") {
  auto at = [](const char* n) { return *fixture_by_name(n)->clutter; };
  CHECK(edge_cone_closure(at("4cycle")).hilbert);
  CHECK(edge_cone_closure(at("single-edge")).hilbert);
  CHECK(edge_cone_closure(at("ex-2.3")).hilbert);

  auto tri = edge_cone_closure(at("triangle"));
  CHECK_FALSE(tri.hilbert);
  REQUIRE(tri.witness.has_value());
  CHECK(*tri.witness == std::vector<Int>{1, 1, 1});
  CHECK_FALSE(semigroup_member(plain_edge_columns(at("triangle")), *tri.witness).has_value());

  auto e37 = edge_cone_closure(at("ex-3.7"));
  CHECK_FALSE(e37.hilbert);
  REQUIRE(e37.witness.has_value());
  CHECK(*e37.witness == std::vector<Int>{1, 1, 1, 1, 1});
  auto cols37 = plain_edge_columns(at("ex-3.7"));
  CHECK(cone_member(cols37, *e37.witness));
  CHECK_FALSE(semigroup_member(cols37, *e37.witness).has_value());
}

TEST_CASE("degree-tracking closure versus the full lattice of the span") {
  auto at = [](const char* n) { return *fixture_by_name(n)->clutter; };
  CHECK(ehrhart_equality(at("triangle")));
  CHECK(ehrhart_equality(at("4cycle")));
  CHECK(ehrhart_equality(at("ex-2.3")));

  auto e37 = ehrhart_comparison(at("ex-3.7"));
  CHECK_FALSE(e37.hilbert);
  REQUIRE(e37.witness.has_value());
  CHECK(*e37.witness == std::vector<Int>{1, 1, 1, 1, 1, 2});
  CHECK_FALSE(ehrhart_equality(at("ex-4.5")));

  // in its own lattice every fixture's homogenized configuration is closed
  for (const char* n : {"triangle", "4cycle", "single-edge", "ex-2.3", "ex-3.7", "ex-4.5"}) {
    INFO(n);
    CHECK(edge_subring_normality(at(n)).hilbert);
  }
}

TEST_CASE("symbolic versus ordinary powers") {
  auto at = [](const char* n) { return *fixture_by_name(n)->clutter; };

  CHECK(symbolic_vs_ordinary_power(at("triangle"), 1).equal);
  CHECK(symbolic_vs_ordinary_power(at("4cycle"), 2).equal);

  auto check_witness = [&](const Clutter& c, int k, const std::vector<Int>& want) {
    auto pc = symbolic_vs_ordinary_power(c, k);
    CHECK_FALSE(pc.equal);
    REQUIRE(pc.witness.has_value());
    CHECK(*pc.witness == want);
    CHECK(in_symbolic_power(c, *pc.witness, k));
    CHECK_FALSE(in_ordinary_power(c, *pc.witness, k));
  };
  check_witness(at("triangle"), 2, {1, 1, 1});
  check_witness(at("triangle"), 3, {1, 2, 2});
  check_witness(at("ex-4.5"), 2, {1, 1, 1, 1, 1, 1});

  REQUIRE_THROWS_AS(symbolic_vs_ordinary_power(at("triangle"), 0), error);
}

TEST_CASE("minimal non-normality") {
  auto at = [](const char* n) { return *fixture_by_name(n)->clutter; };
  CHECK(is_minimally_non_normal(at("ex-4.5")));
  CHECK_FALSE(is_minimally_non_normal(at("triangle")));
  CHECK_FALSE(is_minimally_non_normal(at("4cycle")));
}
