#include <doctest.h>

#include "kdom/construction.hpp"
#include "kdom/grid.hpp"
#include "support.hpp"

using namespace kdom;

TEST_CASE("grid box") {
  CHECK(grid_box(GridDims(6, 6)) == Box(0, 5, 0, 5));
  CHECK(grid_box(GridDims(1, 1)) == Box(0, 0, 0, 0));
  CHECK(grid_box(GridDims(51, 52)) == Box(0, 50, 0, 51));
  CHECK_THROWS_AS(GridDims(0, 3), DomainError);
  CHECK_THROWS_AS(GridDims(3, -1), DomainError);
}

TEST_CASE("neighborhood box") {
  const Box y = neighborhood_box(GridDims(6, 6), Radius(3));
  CHECK(y == Box(-3, 8, -3, 8));
  CHECK(y.area() == 144);
  CHECK(neighborhood_box(GridDims(1, 1), Radius(1)) == Box(-1, 1, -1, 1));
  CHECK(neighborhood_box(GridDims(1, 1), Radius(1)).area() == 9);
  CHECK(neighborhood_box(GridDims(51, 52), Radius(3)).area() == 57 * 58);
}

TEST_CASE("grid distance") {
  CHECK(grid_distance({0, 0}, {0, 0}) == 0);
  CHECK(grid_distance({0, 0}, {2, 3}) == 5);
  auto g = oracle::rng(11);
  for (int t = 0; t < 200; ++t) {
    const LatticePoint a{oracle::uniform(g, 0, 6), oracle::uniform(g, 0, 6)};
    const LatticePoint b{oracle::uniform(g, 0, 6), oracle::uniform(g, 0, 6)};
    REQUIRE(grid_distance(a, b) == oracle::bfs_distance(7, 7, {a.i, a.j}, {b.i, b.j}));
  }
}

TEST_CASE("verify domination examples") {
  // The centre of a 5-vertex path covers it at k=2, in either orientation.
  CHECK(verify_domination(GridDims(5, 1), Radius(2), VertexSet{{2, 0}}).uncovered.empty());
  CHECK(verify_domination(GridDims(1, 5), Radius(2), VertexSet{{0, 2}}).uncovered.empty());
  const auto r = verify_domination(GridDims(2, 2), Radius(1), VertexSet{{0, 0}});
  CHECK(r.uncovered == VertexSet{{1, 1}});
  CHECK(r.covered_count == 3);
  CHECK(is_dominating(GridDims(1, 1), Radius(1), VertexSet{{0, 0}}));
  CHECK_FALSE(is_dominating(GridDims(2, 2), Radius(1), VertexSet{{0, 0}}));
}

TEST_CASE("empty set leaves everything uncovered") {
  const auto r = verify_domination(GridDims(3, 4), Radius(1), VertexSet{});
  CHECK(r.uncovered.size() == 12);
  CHECK(r.covered_count == 0);
  CHECK(r.max_nearest_distance == 2);
}

TEST_CASE("figure set of the 6x6 grid at k=3") {
  // The residue-0 fiber in Y and its projection.
  const VertexSet base{{0, 0}, {4, 3}, {-3, 4}, {1, 7}, {7, -1}, {8, 6}};
  CHECK(base_set(GridDims(6, 6), Radius(3), Residue(0, 25)) == base);
  CHECK(is_dominating(GridDims(6, 6), Radius(3), base));
  const VertexSet projected{{0, 0}, {4, 3}, {5, 0}, {1, 5}, {5, 5}, {0, 4}};
  CHECK(project_inward(GridDims(6, 6), base) == projected);
  CHECK(is_dominating(GridDims(6, 6), Radius(3), projected));
}

TEST_CASE("full construction on 30x30 at k=2 dominates") {
  const auto c = construct(GridDims(30, 30), Radius(2));
  CHECK(is_dominating(GridDims(30, 30), Radius(2), c.set));
  CHECK(c.set.size() == 84);
}

TEST_CASE("points far outside the grid do not change the report") {
  const GridDims d(5, 4);
  const VertexSet s{{1, 1}, {4, 3}};
  VertexSet with_far = s;
  with_far.insert({-10, 2});
  with_far.insert({20, 20});
  with_far.insert({2, -2});  // distance 2 from the grid, beyond k = 1
  const auto a = verify_domination(d, Radius(1), s);
  const auto b = verify_domination(d, Radius(1), with_far);
  CHECK(a.uncovered == b.uncovered);
  CHECK(a.covered_count == b.covered_count);
  CHECK(a.multiplicity_histogram == b.multiplicity_histogram);
}

TEST_CASE("report agrees with the oracle") {
  auto g = oracle::rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::int64_t m = oracle::uniform(g, 1, 9), n = oracle::uniform(g, 1, 9), kv = oracle::uniform(g, 1, 3);
    std::vector<oracle::Pt> pts;
    const int count = static_cast<int>(oracle::uniform(g, 0, 5));
    for (int c = 0; c < count; ++c)
      pts.push_back({oracle::uniform(g, -kv - 1, m + kv), oracle::uniform(g, -kv - 1, n + kv)});
    const VertexSet s = to_set(pts);
    const auto r = verify_domination(GridDims(m, n), Radius(kv), s);
    const auto expect = oracle::uncovered(m, n, kv, to_pts(s));
    REQUIRE(to_pts(r.uncovered) == expect);
    CHECK(r.covered_count == m * n - static_cast<std::int64_t>(expect.size()));

    // Multiplicities and nearest distance, by direct count.
    std::map<std::int64_t, std::int64_t> hist;
    std::int64_t worst = 0;
    for (std::int64_t j = 0; j < n; ++j)
      for (std::int64_t i = 0; i < m; ++i) {
        std::int64_t mult = 0, best = kv + 1;
        for (const auto& q : s) {
          const auto dd = grid_distance(q, {i, j});
          mult += dd <= kv;
          best = std::min(best, dd);
        }
        ++hist[mult];
        worst = std::max(worst, best);
      }
    CHECK(r.multiplicity_histogram == hist);
    CHECK(r.max_nearest_distance == worst);
  }
}
