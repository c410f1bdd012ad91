#pragma once

#include <vector>

#include "kdom/vertex_set.hpp"
#include "oracles.hpp"

inline std::vector<oracle::Pt> to_pts(const kdom::VertexSet& s) {
  std::vector<oracle::Pt> out;
  for (const auto& q : s) out.push_back({q.i, q.j});
  return out;
}

inline kdom::VertexSet to_set(const std::vector<oracle::Pt>& pts) {
  std::vector<kdom::LatticePoint> out;
  for (const auto& q : pts) out.push_back({q.i, q.j});
  return kdom::VertexSet(out);
}
