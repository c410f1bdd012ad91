#pragma once

// The grid graph G_{m,n} embedded in Z^2 as [0, m-1] x [0, n-1], its
// k-neighborhood Y_{m+2k,n+2k} = [-k, m+k-1] x [-k, n+k-1], and verification
// of k-distance domination.
//
// Convention: i is the column (west to east), j the row (south to north);
// "north" means larger j.

#include <cstdint>
#include <map>

#include "kdom/lattice.hpp"
#include "kdom/vertex_set.hpp"

namespace kdom {

struct GridDims {
  std::int64_t m;  ///< columns
  std::int64_t n;  ///< rows

  GridDims(std::int64_t m_, std::int64_t n_);

  std::int64_t cells() const { return detail::checked_mul(m, n); }
  GridDims transposed() const { return {n, m}; }

  friend bool operator==(const GridDims&, const GridDims&) = default;
};

struct CoverageReport {
  GridDims dims;
  Radius k;
  std::int64_t covered_count = 0;
  VertexSet uncovered;
  /// Largest nearest-dominator distance over grid vertices; saturates at k+1.
  std::int64_t max_nearest_distance = 0;
  /// Number of dominators within distance k -> number of grid vertices.
  std::map<std::int64_t, std::int64_t> multiplicity_histogram;

  bool dominating() const noexcept { return uncovered.empty(); }
};

Box grid_box(const GridDims& dims);
Box neighborhood_box(const GridDims& dims, Radius k);

inline std::int64_t grid_distance(const LatticePoint& a, const LatticePoint& b) {
  const std::int64_t di = a.i > b.i ? a.i - b.i : b.i - a.i;
  const std::int64_t dj = a.j > b.j ? a.j - b.j : b.j - a.j;
  return di + dj;
}

/// Exact coverage of G_{m,n} by `s`. Points of `s` outside the grid are legal
/// dominators; points farther than k from the grid are ignored.
CoverageReport verify_domination(const GridDims& dims, Radius k, const VertexSet& s);

bool is_dominating(const GridDims& dims, Radius k, const VertexSet& s);

}  // namespace kdom
