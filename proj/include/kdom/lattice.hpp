#pragma once

// Exact arithmetic for the map phi_k : Z^2 -> Z_p, (i, j) -> (k+1) i + k j,
// p = 2k^2 + 2k + 1, and enumeration of its fibers inside finite boxes.
// Each fiber is a perfect Lee code of radius k: the radius-k Manhattan balls
// around its points tile the plane.

#include <compare>
#include <cstdint>
#include <ostream>

#include "kdom/errors.hpp"

namespace kdom {

class VertexSet;

/// Domination distance k. Supported range is 1 <= k <= kMaxRadius.
class Radius {
 public:
  static constexpr std::int64_t kMaxRadius = 2000;

  explicit Radius(std::int64_t k);

  std::int64_t value() const noexcept { return k_; }
  /// p = 2k^2 + 2k + 1 = k^2 + (k+1)^2.
  std::int64_t modulus() const noexcept { return 2 * k_ * k_ + 2 * k_ + 1; }

  friend bool operator==(Radius, Radius) = default;

 private:
  std::int64_t k_;
};

/// A point of Z^2; i is the column (west to east), j the row (south to north).
struct LatticePoint {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  /// Row-major: ascending j, then ascending i.
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& q);

/// An element of Z_p, stored as its canonical representative in [0, p).
class Residue {
 public:
  Residue(std::int64_t value, std::int64_t modulus);
  Residue(std::int64_t value, Radius k) : Residue(value, k.modulus()) {}

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

/// Inclusive integer rectangle [i_lo, i_hi] x [j_lo, j_hi]; never empty.
class Box {
 public:
  static constexpr std::int64_t kMaxSide = std::int64_t{1} << 31;

  Box(std::int64_t i_lo, std::int64_t i_hi, std::int64_t j_lo, std::int64_t j_hi);

  std::int64_t i_lo() const noexcept { return i_lo_; }
  std::int64_t i_hi() const noexcept { return i_hi_; }
  std::int64_t j_lo() const noexcept { return j_lo_; }
  std::int64_t j_hi() const noexcept { return j_hi_; }

  std::int64_t width() const noexcept { return i_hi_ - i_lo_ + 1; }
  std::int64_t height() const noexcept { return j_hi_ - j_lo_ + 1; }
  std::int64_t area() const { return detail::checked_mul(width(), height()); }

  bool contains(const LatticePoint& q) const noexcept {
    return q.i >= i_lo_ && q.i <= i_hi_ && q.j >= j_lo_ && q.j <= j_hi_;
  }

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::int64_t i_lo_, i_hi_, j_lo_, j_hi_;
};

std::ostream& operator<<(std::ostream& os, const Box& b);

std::int64_t modulus(Radius k) noexcept;

/// phi_k(q), reduced to [0, p). Throws OverflowError if (k+1) i + k j overflows.
Residue phi(Radius k, const LatticePoint& q);

/// Multiplicative inverse of a modulo m (gcd(a, m) must be 1).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// All q in `box` with phi_k(q) == ell, row-major.
VertexSet inverse_image_in_box(Radius k, const Residue& ell, const Box& box);

/// |inverse_image_in_box(k, ell, box)| in O(height) without materializing the set.
std::int64_t count_in_box(Radius k, const Residue& ell, const Box& box);

/// Smallest i >= i_min with phi_k(i, row) == ell. Fibers meet every row
/// exactly once per p consecutive columns.
std::int64_t first_in_row(Radius k, const Residue& ell, std::int64_t row, std::int64_t i_min);

/// Largest j <= j_max with phi_k(column, j) == ell.
std::int64_t last_in_column(Radius k, const Residue& ell, std::int64_t column, std::int64_t j_max);

/// Number of lattice points with |x| + |y| <= k; always equals modulus(k).
std::int64_t ball_size(Radius k);

}  // namespace kdom
