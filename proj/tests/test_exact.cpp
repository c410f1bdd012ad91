#include <doctest.h>

#include "kdom/construction.hpp"
#include "kdom/exact.hpp"
#include "support.hpp"

using namespace kdom;

TEST_CASE("exact small values") {
  CHECK(exact_gamma(GridDims(2, 2), Radius(1)).gamma == 2);
  CHECK(oracle::naive_gamma(2, 2, 1, 4) == 2);
  CHECK(exact_gamma(GridDims(1, 5), Radius(2)).gamma == 1);
  CHECK(exact_gamma(GridDims(1, 1), Radius(1)).gamma == 1);
  const auto r = exact_gamma(GridDims(5, 5), Radius(1));
  CHECK(r.gamma == oracle::naive_gamma(5, 5, 1, 7));
  CHECK_FALSE(r.time_budget_exceeded);
  CHECK(r.lower_bound == r.gamma);
}

TEST_CASE("path values") {
  CHECK(path_gamma(4, Radius(1)) == 2);
  CHECK(path_gamma(5, Radius(2)) == 1);
  for (std::int64_t kv = 1; kv <= 3; ++kv) {
    CHECK(path_gamma(2 * kv + 2, Radius(kv)) == 2);
    CHECK(oracle::naive_gamma(1, 2 * kv + 2, kv, 3) == 2);
  }
  CHECK(oracle::naive_gamma(1, 4, 1, 3) == 2);
}

TEST_CASE("witness dominates and has the reported size") {
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t n = m; n <= 6; ++n)
      for (std::int64_t kv = 1; kv <= 2; ++kv) {
        const auto r = exact_gamma(GridDims(m, n), Radius(kv));
        REQUIRE(static_cast<std::int64_t>(r.witness.size()) == r.gamma);
        REQUIRE(oracle::dominates(m, n, kv, to_pts(r.witness)));
      }
}

TEST_CASE("transpose and radius monotonicity") {
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t n = 1; n <= 6; ++n) {
      std::int64_t prev = INT64_MAX;
      for (std::int64_t kv = 1; kv <= 3; ++kv) {
        const auto g = exact_gamma(GridDims(m, n), Radius(kv)).gamma;
        CHECK(g == exact_gamma(GridDims(n, m), Radius(kv)).gamma);
        CHECK(g <= prev);
        prev = g;
      }
    }
}

TEST_CASE("budget") {
  const auto r = exact_gamma(GridDims(8, 8), Radius(1), ExactBudget{10});
  CHECK(r.time_budget_exceeded);
  CHECK(r.lower_bound <= r.gamma);
  CHECK(oracle::dominates(8, 8, 1, to_pts(r.witness)));
}

TEST_CASE("size limit") {
  CHECK_THROWS_AS(exact_gamma(GridDims(17, 16), Radius(1)), DomainError);
  CHECK_THROWS_AS(path_gamma(0, Radius(1)), DomainError);
}
