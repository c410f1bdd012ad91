#include "kdom/grid.hpp"

#include <array>
#include <limits>
#include <vector>

namespace kdom {

GridDims::GridDims(std::int64_t m_, std::int64_t n_) : m(m_), n(n_) {
  if (m < 1) throw DomainError("m must be ≥ 1");
  if (n < 1) throw DomainError("n must be ≥ 1");
  if (m > Box::kMaxSide || n > Box::kMaxSide) throw DomainError("grid side exceeds 2^31");
}

Box grid_box(const GridDims& dims) { return Box(0, dims.m - 1, 0, dims.n - 1); }

Box neighborhood_box(const GridDims& dims, Radius k) {
  const std::int64_t kk = k.value();
  return Box(-kk, dims.m + kk - 1, -kk, dims.n + kk - 1);
}

CoverageReport verify_domination(const GridDims& dims, Radius k, const VertexSet& s) {
  const Box y = neighborhood_box(dims, k);
  const std::int64_t kk = k.value();
  const std::int64_t w = y.width();
  const std::size_t cells = static_cast<std::size_t>(y.area());
  auto index = [&](std::int64_t i, std::int64_t j) {
    return static_cast<std::size_t>((j - y.j_lo()) * w + (i - y.i_lo()));
  };

  // Truncated multi-source frontier expansion over Y. Y is a rectangle, so
  // path lengths inside it equal Manhattan distances.
  constexpr std::int32_t kUnreached = std::numeric_limits<std::int32_t>::max();
  std::vector<std::int32_t> dist(cells, kUnreached);
  std::vector<std::int64_t> hits(static_cast<std::size_t>(dims.cells()), 0);
  std::vector<LatticePoint> frontier;
  for (const auto& q : s) {
    if (!y.contains(q)) continue;
    auto& d = dist[index(q.i, q.j)];
    if (d != 0) {
      d = 0;
      frontier.push_back(q);
    }
    // Multiplicity: add the diamond clipped to the grid.
    for (std::int64_t di = -kk; di <= kk; ++di) {
      const std::int64_t i = q.i + di;
      if (i < 0 || i >= dims.m) continue;
      const std::int64_t r = kk - (di < 0 ? -di : di);
      const std::int64_t j0 = std::max<std::int64_t>(0, q.j - r);
      const std::int64_t j1 = std::min<std::int64_t>(dims.n - 1, q.j + r);
      for (std::int64_t j = j0; j <= j1; ++j) ++hits[static_cast<std::size_t>(j * dims.m + i)];
    }
  }

  constexpr std::array<std::array<int, 2>, 4> kSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  std::vector<LatticePoint> next;
  for (std::int32_t level = 0; level < kk + 1 && !frontier.empty(); ++level) {
    next.clear();
    for (const auto& q : frontier) {
      for (const auto& st : kSteps) {
        const LatticePoint r{q.i + st[0], q.j + st[1]};
        if (!y.contains(r)) continue;
        auto& d = dist[index(r.i, r.j)];
        if (d == kUnreached) {
          d = level + 1;
          next.push_back(r);
        }
      }
    }
    frontier.swap(next);
  }

  CoverageReport report{dims, k};
  std::vector<LatticePoint> uncovered;
  for (std::int64_t j = 0; j < dims.n; ++j) {
    for (std::int64_t i = 0; i < dims.m; ++i) {
      std::int64_t d = dist[index(i, j)];
      if (d > kk) {
        d = kk + 1;
        uncovered.push_back({i, j});
      } else {
        ++report.covered_count;
      }
      report.max_nearest_distance = std::max(report.max_nearest_distance, d);
      ++report.multiplicity_histogram[hits[static_cast<std::size_t>(j * dims.m + i)]];
    }
  }
  report.uncovered = VertexSet::from_sorted(std::move(uncovered));
  return report;
}

bool is_dominating(const GridDims& dims, Radius k, const VertexSet& s) {
  return verify_domination(dims, k, s).dominating();
}

}  // namespace kdom
