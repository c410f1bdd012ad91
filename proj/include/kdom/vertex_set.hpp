#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "kdom/lattice.hpp"

namespace kdom {

/// Duplicate-free, row-major sorted set of lattice points.
class VertexSet {
 public:
  using const_iterator = std::vector<LatticePoint>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<LatticePoint> pts) : VertexSet(std::vector<LatticePoint>(pts)) {}
  explicit VertexSet(std::vector<LatticePoint> pts);

  /// Adopts points already in canonical order; the caller guarantees sortedness.
  static VertexSet from_sorted(std::vector<LatticePoint> pts);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const_iterator begin() const noexcept { return points_.begin(); }
  const_iterator end() const noexcept { return points_.end(); }
  const LatticePoint& operator[](std::size_t idx) const { return points_[idx]; }
  std::span<const LatticePoint> points() const noexcept { return points_; }

  bool contains(const LatticePoint& q) const {
    return std::binary_search(points_.begin(), points_.end(), q);
  }

  /// Returns false if q was already present.
  bool insert(const LatticePoint& q);
  /// Returns false if q was absent.
  bool erase(const LatticePoint& q);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<LatticePoint> points_;
};

}  // namespace kdom
