#include "kdom/exact.hpp"

#include <bitset>
#include <vector>

namespace kdom {

namespace {

using Cells = std::bitset<ExactBudget::kMaxCells>;

struct BudgetExhausted {};

class Solver {
 public:
  Solver(const GridDims& dims, Radius k, std::int64_t max_nodes)
      : dims_(dims), n_cells_(static_cast<int>(dims.cells())), max_nodes_(max_nodes) {
    const std::int64_t kk = k.value();
    balls_.resize(static_cast<std::size_t>(n_cells_));
    for (int v = 0; v < n_cells_; ++v) {
      const LatticePoint a = point(v);
      for (int w = 0; w < n_cells_; ++w) {
        if (grid_distance(a, point(w)) <= kk) balls_[v].set(static_cast<std::size_t>(w));
      }
      max_cover_ = std::max<std::int64_t>(max_cover_, static_cast<std::int64_t>(balls_[v].count()));
    }
    for (int v = 0; v < n_cells_; ++v) all_.set(static_cast<std::size_t>(v));
  }

  LatticePoint point(int v) const { return {v % dims_.m, v / dims_.m}; }

  // Greedy cover: repeatedly take the vertex covering the most uncovered cells.
  std::vector<int> greedy() const {
    Cells covered;
    std::vector<int> chosen;
    while (covered != all_) {
      int best = 0;
      std::size_t best_gain = 0;
      for (int v = 0; v < n_cells_; ++v) {
        const std::size_t gain = (balls_[v] & ~covered).count();
        if (gain > best_gain) {
          best_gain = gain;
          best = v;
        }
      }
      covered |= balls_[best];
      chosen.push_back(best);
    }
    return chosen;
  }

  bool search(std::int64_t size) {
    chosen_.clear();
    return dfs(Cells{}, size);
  }

  const std::vector<int>& chosen() const { return chosen_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  bool dfs(const Cells& covered, std::int64_t left) {
    if (++nodes_ > max_nodes_) throw BudgetExhausted{};
    const Cells open = all_ & ~covered;
    const auto remaining = static_cast<std::int64_t>(open.count());
    if (remaining == 0) return true;
    if (left == 0 || (remaining + max_cover_ - 1) / max_cover_ > left) return false;

    int first = 0;
    while (!open.test(static_cast<std::size_t>(first))) ++first;

    // Candidates: every vertex within distance k of `first`. A candidate whose
    // useful coverage is contained in another's can be swapped for it, so only
    // maximal ones are tried.
    std::vector<int> cands;
    std::vector<Cells> gains;
    for (int c = 0; c < n_cells_; ++c) {
      if (!balls_[c].test(static_cast<std::size_t>(first))) continue;
      cands.push_back(c);
      gains.push_back(balls_[c] & open);
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool dominated = false;
      for (std::size_t b = 0; b < cands.size() && !dominated; ++b) {
        if (a == b) continue;
        const bool subset = (gains[a] & ~gains[b]).none();
        const bool equal = gains[a] == gains[b];
        dominated = subset && (!equal || b < a);
      }
      if (dominated) continue;
      chosen_.push_back(cands[a]);
      if (dfs(covered | balls_[cands[a]], left - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  GridDims dims_;
  int n_cells_;
  std::int64_t max_nodes_;
  std::int64_t max_cover_ = 1;
  std::int64_t nodes_ = 0;
  std::vector<Cells> balls_;
  Cells all_;
  std::vector<int> chosen_;
};

VertexSet to_set(const Solver& solver, const std::vector<int>& ids) {
  std::vector<LatticePoint> pts;
  for (int v : ids) pts.push_back(solver.point(v));
  return VertexSet(std::move(pts));
}

}  // namespace

ExactResult exact_gamma(const GridDims& dims, Radius k, ExactBudget budget) {
  if (dims.cells() > ExactBudget::kMaxCells) {
    throw DomainError("exact solver supports at most " + std::to_string(ExactBudget::kMaxCells) +
                      " cells");
  }
  Solver solver(dims, k, budget.max_nodes);
  const std::vector<int> greedy = solver.greedy();

  ExactResult result{dims, k};
  result.gamma = static_cast<std::int64_t>(greedy.size());
  result.witness = to_set(solver, greedy);
  // Each dominator covers at most p cells.
  const std::int64_t p = ball_size(k);
  std::int64_t size = (dims.cells() + p - 1) / p;
  result.lower_bound = size;
  try {
    for (; size < result.gamma; ++size) {
      if (solver.search(size)) {
        result.gamma = size;
        result.witness = to_set(solver, solver.chosen());
        break;
      }
      result.lower_bound = size + 1;
    }
    result.lower_bound = result.gamma;
  } catch (const BudgetExhausted&) {
    result.time_budget_exceeded = true;
  }
  result.nodes_explored = solver.nodes();
  return result;
}

std::int64_t path_gamma(std::int64_t n, Radius k) {
  if (n < 1) throw DomainError("n must be ≥ 1");
  const std::int64_t span = 2 * k.value() + 1;
  return (n + span - 1) / span;
}

}  // namespace kdom
