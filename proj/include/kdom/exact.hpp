#pragma once

// Exact k-distance domination numbers for small grids. This is the oracle the
// constructive results are checked against, so it shares nothing with the
// lattice construction beyond the point and set types.

#include <cstdint>

#include "kdom/grid.hpp"
#include "kdom/vertex_set.hpp"

namespace kdom {

struct ExactBudget {
  static constexpr std::int64_t kMaxCells = 256;
  /// Search nodes allowed before giving up.
  std::int64_t max_nodes = 50'000'000;
};

struct ExactResult {
  GridDims dims;
  Radius k;
  /// The optimum, or the best known upper value when the budget ran out.
  std::int64_t gamma = 0;
  /// Largest size proven infeasible plus one.
  std::int64_t lower_bound = 0;
  VertexSet witness;
  std::int64_t nodes_explored = 0;
  bool time_budget_exceeded = false;
};

/// Iterative deepening on the set size with branch and bound. Branches on the
/// first uncovered vertex in row-major order over the vertices that can
/// dominate it. Throws DomainError above ExactBudget::kMaxCells cells.
ExactResult exact_gamma(const GridDims& dims, Radius k, ExactBudget budget = {});

/// ceil(n / (2k + 1)), the k-domination number of a path on n vertices.
std::int64_t path_gamma(std::int64_t n, Radius k);

}  // namespace kdom
