#include "kdom/vertex_set.hpp"

namespace kdom {

VertexSet::VertexSet(std::vector<LatticePoint> pts) : points_(std::move(pts)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

VertexSet VertexSet::from_sorted(std::vector<LatticePoint> pts) {
  VertexSet s;
  s.points_ = std::move(pts);
  return s;
}

bool VertexSet::insert(const LatticePoint& q) {
  auto it = std::lower_bound(points_.begin(), points_.end(), q);
  if (it != points_.end() && *it == q) return false;
  points_.insert(it, q);
  return true;
}

bool VertexSet::erase(const LatticePoint& q) {
  auto it = std::lower_bound(points_.begin(), points_.end(), q);
  if (it == points_.end() || *it != q) return false;
  points_.erase(it);
  return true;
}

}  // namespace kdom
