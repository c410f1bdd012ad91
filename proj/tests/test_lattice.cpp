#include <doctest.h>

#include <numeric>

#include "kdom/lattice.hpp"
#include "kdom/vertex_set.hpp"
#include "support.hpp"

using namespace kdom;

TEST_CASE("modulus") {
  CHECK(modulus(Radius(1)) == 5);
  CHECK(modulus(Radius(2)) == 13);
  CHECK(modulus(Radius(3)) == 25);
}

TEST_CASE("radius range") {
  CHECK_THROWS_AS(Radius(0), DomainError);
  CHECK_THROWS_AS(Radius(-3), DomainError);
  CHECK_THROWS_AS(Radius(Radius::kMaxRadius + 1), DomainError);
  CHECK(Radius(Radius::kMaxRadius).value() == Radius::kMaxRadius);
}

TEST_CASE("phi values") {
  const Radius k(2);
  CHECK(phi(k, {0, 0}) == Residue(0, 13));
  CHECK(phi(k, {1, 0}) == Residue(3, 13));
  CHECK(phi(k, {-1, -1}).value() == 8);
  CHECK(phi(k, {-1, -1}).value() == oracle::phi(2, -1, -1));
}

TEST_CASE("phi agrees with the oracle on a window") {
  for (std::int64_t kv = 1; kv <= 5; ++kv) {
    const Radius k(kv);
    for (std::int64_t j = -30; j <= 30; ++j)
      for (std::int64_t i = -30; i <= 30; ++i) REQUIRE(phi(k, {i, j}).value() == oracle::phi(kv, i, j));
  }
}

TEST_CASE("phi overflow is checked") {
  const Radius k(Radius::kMaxRadius);
  CHECK_THROWS_AS(phi(k, {INT64_MAX / 2, 0}), OverflowError);
}

TEST_CASE("residue is canonical") {
  CHECK(Residue(-1, 13).value() == 12);
  CHECK(Residue(26, 13).value() == 0);
  CHECK(Residue(-27, 13).value() == 12);
  CHECK_THROWS_AS(Residue(1, 0), DomainError);
}

TEST_CASE("box rejects empty ranges") {
  CHECK_THROWS_AS(Box(0, -1, 0, 0), DomainError);
  CHECK_THROWS_AS(Box(0, 0, 3, 2), DomainError);
  CHECK_THROWS_AS(Box(0, Box::kMaxSide, 0, 0), DomainError);
  const Box b(-2, 3, 1, 1);
  CHECK(b.width() == 6);
  CHECK(b.height() == 1);
  CHECK(b.area() == 6);
}

TEST_CASE("inverse image in a box") {
  SUBCASE("one row of p points holds one element") {
    const auto s = inverse_image_in_box(Radius(2), Residue(0, 13), Box(0, 12, 0, 0));
    REQUIRE(s.size() == 1);
    CHECK(s[0] == LatticePoint{0, 0});
  }
  SUBCASE("p x p box at k=1") {
    CHECK(inverse_image_in_box(Radius(1), Residue(0, 5), Box(0, 4, 0, 4)).size() == 5);
  }
  SUBCASE("matches enumeration") {
    for (std::int64_t kv = 1; kv <= 4; ++kv) {
      const std::int64_t p = oracle::p_of(kv);
      for (std::int64_t ell = 0; ell < p; ++ell) {
        const auto got = inverse_image_in_box(Radius(kv), Residue(ell, p), Box(-7, 11, -4, 9));
        REQUIRE(to_pts(got) == oracle::fiber(kv, ell, -7, 11, -4, 9));
      }
    }
  }
}

TEST_CASE("count in box") {
  for (std::int64_t ell = 0; ell < 13; ++ell) CHECK(count_in_box(Radius(2), Residue(ell, 13), Box(0, 12, 0, 12)) == 13);
  for (std::int64_t ell = 0; ell < 25; ++ell) CHECK(count_in_box(Radius(3), Residue(ell, 25), Box(0, 24, 0, 49)) == 50);
  const Box b(0, 6, 0, 4);
  CHECK(count_in_box(Radius(2), Residue(0, 13), b) ==
        static_cast<std::int64_t>(inverse_image_in_box(Radius(2), Residue(0, 13), b).size()));
  CHECK(count_in_box(Radius(2), Residue(0, 13), b) ==
        static_cast<std::int64_t>(oracle::fiber(2, 0, 0, 6, 0, 4).size()));
}

TEST_CASE("count in box far from the origin") {
  const Box b(1'000'000'000, 1'000'000'040, -2'000'000'000, -1'999'999'970);
  for (std::int64_t ell = 0; ell < 13; ++ell) {
    std::int64_t brute = 0;
    for (std::int64_t j = b.j_lo(); j <= b.j_hi(); ++j)
      for (std::int64_t i = b.i_lo(); i <= b.i_hi(); ++i) brute += oracle::phi(2, i, j) == ell;
    CHECK(count_in_box(Radius(2), Residue(ell, 13), b) == brute);
  }
}

TEST_CASE("row and column search") {
  const Radius k(3);
  for (std::int64_t ell = 0; ell < 25; ++ell) {
    const Residue r(ell, 25);
    for (std::int64_t row = -5; row <= 5; ++row) {
      const std::int64_t i = first_in_row(k, r, row, -3);
      CHECK(i >= -3);
      CHECK(i < -3 + 25);
      CHECK(oracle::phi(3, i, row) == ell);
      for (std::int64_t x = -3; x < i; ++x) CHECK(oracle::phi(3, x, row) != ell);
    }
    const std::int64_t j = last_in_column(k, r, -1, 10);
    CHECK(j <= 10);
    CHECK(j > 10 - 25);
    CHECK(oracle::phi(3, -1, j) == ell);
    for (std::int64_t y = j + 1; y <= 10; ++y) CHECK(oracle::phi(3, -1, y) != ell);
  }
}

TEST_CASE("inverse mod") {
  CHECK(inverse_mod(3, 13) * 3 % 13 == 1);
  CHECK(inverse_mod(4, 25) * 4 % 25 == 1);
  CHECK_THROWS_AS(inverse_mod(5, 25), DomainError);
}

TEST_CASE("ball size") {
  CHECK(ball_size(Radius(1)) == 5);
  CHECK(ball_size(Radius(2)) == 13);
  CHECK(ball_size(Radius(5)) == 61);
  CHECK(oracle::ball(5) == 61);
  CHECK(oracle::ball(2) == 13);
}

TEST_CASE("coprimality of k and k+1 with p") {
  for (std::int64_t kv = 1; kv <= 32; ++kv) {
    const std::int64_t p = modulus(Radius(kv));
    CHECK(std::gcd(kv, p) == 1);
    CHECK(std::gcd(kv + 1, p) == 1);
  }
}

TEST_CASE("vertex set ordering and dedupe") {
  VertexSet s{{3, 1}, {0, 2}, {1, 1}, {3, 1}};
  REQUIRE(s.size() == 3);
  CHECK(s[0] == LatticePoint{1, 1});
  CHECK(s[1] == LatticePoint{3, 1});
  CHECK(s[2] == LatticePoint{0, 2});
  CHECK(s.contains({0, 2}));
  CHECK_FALSE(s.insert({0, 2}));
  CHECK(s.insert({-1, 0}));
  CHECK(s[0] == LatticePoint{-1, 0});
  CHECK(s.erase({3, 1}));
  CHECK_FALSE(s.erase({3, 1}));
}
