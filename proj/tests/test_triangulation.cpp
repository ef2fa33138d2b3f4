#include "clutterlab/triangulation.hpp"
#include "clutterlab/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

using namespace clutterlab;

namespace {

std::vector<std::vector<Int>> columns_as_points(const IntMatrix& m) {
  std::vector<std::vector<Int>> pts;
  for (int j = 0; j < m.cols; ++j) {
    std::vector<Int> p;
    for (int i = 0; i < m.rows; ++i) p.push_back(m.at(i, j));
    pts.push_back(std::move(p));
  }
  return pts;
}

// Union coverage: every column of the whole configuration lies in the cone of
// at least one cell (necessary condition for a subdivision of the cone).
bool cells_cover_generators(const std::vector<std::vector<Int>>& pts,
                            const std::vector<std::vector<int>>& cells) {
  for (std::size_t j = 0; j < pts.size(); ++j) {
    bool inside = false;
    for (const auto& cell : cells) {
      std::vector<std::vector<Int>> gens;
      for (int i : cell) gens.push_back(pts[i]);
      if (cone_member(gens, pts[j])) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("three collinear-direction points with a pulling weight") {
  std::vector<std::vector<Int>> pts = {{1, 0}, {1, 1}, {1, 2}};
  Triangulation t = regular_triangulation(pts, {Int(0), Int(1), Int(0)});
  // the middle point is lifted above the chord: it drops out
  REQUIRE(t.cells == std::vector<std::vector<int>>{{0, 2}});
  CHECK_FALSE(t.refined);
  IntMatrix whole = detail::columns_of(pts);
  CHECK(lattice_index(detail::columns_of(pts, t.cells[0]), whole) == 2);
  CHECK_FALSE(is_unimodular_triangulation(pts, t.cells));

  // pushing the middle point below the chord instead keeps it
  Triangulation t2 = regular_triangulation(pts, {Int(1), Int(0), Int(1)});
  REQUIRE(t2.cells == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  CHECK(is_unimodular_triangulation(pts, t2.cells));
}

TEST_CASE("zero weights fall back to a placing triangulation that covers") {
  std::vector<std::vector<Int>> pts = {{1, 0}, {1, 1}, {1, 2}, {1, 3}};
  Triangulation t = regular_triangulation(pts, std::vector<Int>(4, Int(0)));
  CHECK_FALSE(t.cells.empty());
  CHECK(cells_cover_generators(pts, t.cells));
  for (const auto& cell : t.cells) CHECK(cell.size() == 2);
}

TEST_CASE("the thirteen-column fixture has a non-unimodular regular triangulation") {
  IntMatrix m = *fixture_by_name("ex-5.7")->matrix;
  auto pts = columns_as_points(m);
  REQUIRE(pts.size() == 13);
  std::vector<Int> w(13, Int(0));
  w[6] = w[7] = w[8] = 1;
  Triangulation t = regular_triangulation(pts, w);
  // the zero-weight columns {1..6, 10..13} span a lower facet that is a
  // full-rank simplex with lattice index 2
  std::vector<int> special = {0, 1, 2, 3, 4, 5, 9, 10, 11, 12};
  bool found = false;
  for (const auto& cell : t.cells)
    if (cell == special) found = true;
  REQUIRE(found);
  IntMatrix whole = detail::columns_of(pts);
  CHECK(lattice_index(detail::columns_of(pts, special), whole) == 2);
  CHECK_FALSE(is_unimodular_triangulation(pts, t.cells));
  CHECK(cells_cover_generators(pts, t.cells));
}

TEST_CASE("every sampled weight on the 4cycle gives a unimodular triangulation") {
  Clutter c = *fixture_by_name("4cycle")->clutter;
  auto pts = columns_as_points(incidence_matrix(c));
  for (const auto& w : sample_weight_vectors(int(pts.size()), 16)) {
    Triangulation t = regular_triangulation(pts, w);
    INFO("weights " << w.size());
    CHECK(is_unimodular_triangulation(pts, t.cells));
    CHECK(cells_cover_generators(pts, t.cells));
  }
}

TEST_CASE("weight sampler is deterministic and starts with zero and ramp") {
  auto a = sample_weight_vectors(5, 7);
  auto b = sample_weight_vectors(5, 7);
  REQUIRE(a.size() == 7);
  CHECK(a == b);
  CHECK(a[0] == std::vector<Int>(5, Int(0)));
  std::vector<Int> ramp = {0, 1, 2, 3, 4};
  CHECK(a[1] == ramp);
}

TEST_CASE("unimodular search succeeds on the triangle's incidence columns") {
  Clutter c = *fixture_by_name("triangle")->clutter;
  auto pts = columns_as_points(incidence_matrix(c));
  UrtResult r = unimodular_regular_triangulation_search(pts, 64);
  REQUIRE(r.found);
  Triangulation t = regular_triangulation(pts, r.weights);
  CHECK(t.cells == r.triangulation.cells);
  CHECK(is_unimodular_triangulation(pts, t.cells));
}
