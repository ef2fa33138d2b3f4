#include "clutterlab/clutter.hpp"
#include "clutterlab/covers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using namespace clutterlab;

namespace {

std::vector<std::vector<int>> sorted_edges(const Clutter& c) {
  auto e = c.edges;
  std::sort(e.begin(), e.end());
  return e;
}

Clutter relabel(const Clutter& c, const std::vector<int>& perm) {
  std::vector<std::vector<int>> edges;
  for (const auto& e : c.edges) {
    std::vector<int> f;
    for (int v : e) f.push_back(perm[v]);
    edges.push_back(std::move(f));
  }
  return make_clutter(c.n, std::move(edges));
}

}  // namespace

TEST_CASE("parse and serialize round-trip") {
  const std::string text = R"({"n": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]})";
  Clutter c = parse_clutter(text);
  REQUIRE(c.n == 4);
  REQUIRE(c.q() == 4);
  Clutter back = parse_clutter(serialize_clutter(c));
  REQUIRE(back.edges == c.edges);
  // vertices inside an edge are sorted and duplicates collapse
  Clutter d = parse_clutter(R"({"n": 2, "edges": [[2,1,1]]})");
  REQUIRE(d.edges[0] == std::vector<int>{0, 1});
}

TEST_CASE("validation failures carry the right kind") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_clutter(text);
    } catch (const error& e) {
      return e.kind();
    }
    return errc::internal_contradiction;
  };
  CHECK(kind_of("not json") == errc::parse);
  CHECK(kind_of(R"({"n": 2})") == errc::parse);
  CHECK(kind_of(R"({"n": 2, "edges": [[1,3]]})") == errc::out_of_range);
  CHECK(kind_of(R"({"n": 2, "edges": [[]]})") == errc::empty_edge);
  CHECK(kind_of(R"({"n": 2, "edges": [[1],[1,2]]})") == errc::sperner_violation);
  CHECK(kind_of(R"({"n": 3, "edges": [[1,2]]})") == errc::isolated_vertex);
  // exact duplicates are dropped, not an error
  CHECK(parse_clutter(R"({"n": 2, "edges": [[1,2],[2,1]]})").q() == 1);
}

TEST_CASE("minors delete, contract, and reduce") {
  Clutter tri = parse_clutter(R"({"n": 3, "edges": [[1,2],[2,3],[1,3]]})");
  SECTION("deleting a vertex removes its edges") {
    Minor m = deletion(tri, 0);
    REQUIRE(m.clutter.n == 2);
    REQUIRE(m.clutter.q() == 1);
    REQUIRE(m.old_of_new == std::vector<int>{1, 2});
  }
  SECTION("contracting a vertex shrinks edges and Sperner-reduces") {
    Minor m = contraction(tri, 0);
    // {2},{3} survive; {2,3} is absorbed
    REQUIRE(m.clutter.q() == 2);
    REQUIRE(m.clutter.edges == std::vector<std::vector<int>>{{0}, {1}});
  }
  SECTION("contracting everything but one edge can empty the clutter") {
    Clutter e = parse_clutter(R"({"n": 2, "edges": [[1,2]]})");
    REQUIRE_THROWS_AS(minor(e, {0, 1}, {}), error);
  }
}

TEST_CASE("blocker involution on small instances") {
  auto names = {R"({"n": 3, "edges": [[1,2],[2,3],[1,3]]})",
                R"({"n": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]})",
                R"({"n": 6, "edges": [[1,4,5],[1,3,6],[2,4,6],[2,3,5]]})",
                R"({"n": 2, "edges": [[1,2]]})"};
  for (const auto* text : names) {
    Clutter c = parse_clutter(text);
    Clutter bb = blocker(blocker(c));
    INFO(text);
    CHECK(sorted_edges(bb) == sorted_edges(c));
  }
}

TEST_CASE("blocker involution on random clutters") {
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 40) {
    int n = 3 + int(rng() % 4);
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
    if (edges.empty() || covered != (std::uint64_t(1) << n) - 1) continue;
    ++done;
    Clutter c = make_clutter(n, edges);
    Clutter bb = blocker(blocker(c));
    CHECK(sorted_edges(bb) == sorted_edges(c));
  }
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 rng(7);
  auto texts = {R"({"n": 5, "edges": [[1,5],[2,4],[3,4,5],[1,2,3]]})",
                R"({"n": 6, "edges": [[1,4,5],[1,3,6],[2,4,6],[2,3,5]]})",
                R"({"n": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]})"};
  for (const auto* text : texts) {
    Clutter c = parse_clutter(text);
    std::string canon = canonical_form(c);
    std::vector<int> perm(c.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < 30; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabel(c, perm)) == canon);
    }
  }
  // and distinct classes have distinct canonical strings
  CHECK(canonical_form(parse_clutter(R"({"n": 3, "edges": [[1,2],[2,3],[1,3]]})")) !=
        canonical_form(parse_clutter(R"({"n": 3, "edges": [[1,2],[2,3]]})")));
}

TEST_CASE("uniformity and matchings") {
  Clutter c4 = parse_clutter(R"({"n": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]})");
  REQUIRE(uniformity(c4) == 2);
  Clutter mixed = parse_clutter(R"({"n": 3, "edges": [[1,2],[1,3],[2,3]]})");
  REQUIRE(uniformity(mixed).has_value());
  Clutter really_mixed = parse_clutter(R"({"n": 3, "edges": [[1],[2,3]]})");
  REQUIRE_FALSE(uniformity(really_mixed).has_value());

  auto pm = find_perfect_matching(c4);
  REQUIRE(pm.has_value());
  std::uint64_t covered = 0;
  int size = 0;
  for (int i : *pm) {
    for (int v : c4.edges[i]) covered |= std::uint64_t(1) << v;
    size += int(c4.edges[i].size());
  }
  CHECK(size == 4);
  CHECK(covered == 0xF);

  Clutter tri = parse_clutter(R"({"n": 3, "edges": [[1,2],[2,3],[1,3]]})");
  CHECK_FALSE(find_perfect_matching(tri).has_value());
  CHECK(maximum_matching(tri).size() == 1);
  CHECK(maximum_matching(c4).size() == 2);
}
