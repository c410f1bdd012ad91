#pragma once

// Dominating-set construction for G_{m,n}:
//
//   1. pick the residue ell whose fiber meets Y_{m+2k,n+2k} least often;
//   2. take that fiber inside Y (it k-dominates G because the fiber tiles Z^2);
//   3. when m, n > 2p, delete one code point per corner, shifting nearby code
//      points so the grid stays dominated;
//   4. clamp every point outside G to its nearest grid vertex.
//
// The result has at most floor((m+2k)(n+2k)/p) - 4 points for m, n > 2p and
// at most floor((m+2k)(n+2k)/p) otherwise.
//
// Corner removal is implemented once, for the north-west corner. The other
// corners are rotated into that position; a rotation by a quarter turn maps a
// fiber of phi_k onto another fiber of phi_k, so the same case analysis holds.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kdom/grid.hpp"
#include "kdom/lattice.hpp"
#include "kdom/vertex_set.hpp"

namespace kdom {

enum class Corner { NW, NE, SW, SE };
enum class CornerCase { NegativeSlope, SteepSlope, ShallowSlope };

const char* to_string(Corner c) noexcept;
const char* to_string(CornerCase c) noexcept;

/// Exact fraction num/den with den > 0, in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Geometry of one corner, expressed in that corner's frame (the grid rotated
/// so the corner sits at the north-west).
struct CornerContext {
  Corner corner;
  int quarter_turns;      ///< counter-clockwise turns from the native frame
  GridDims frame_dims;    ///< dims after rotation
  Residue frame_residue;  ///< the fiber's residue after rotation
  LatticePoint s;         ///< westernmost code point on the north edge of Y
  LatticePoint z;         ///< northernmost code point in column -1
  std::optional<Rational> slope_l1;  ///< slope of line s-z; empty when s == z
  Rational slope_l2;                 ///< k / (k+1)
  CornerCase kind;
};

/// Points eligible for shifting at a corner, in that corner's frame.
Box corner_window(const GridDims& frame_dims, Radius k);

LatticePoint to_frame(const LatticePoint& q, const GridDims& dims, int quarter_turns);
LatticePoint from_frame(const LatticePoint& q, const GridDims& dims, int quarter_turns);

struct ShiftRecord {
  Corner corner;
  LatticePoint from;
  LatticePoint to;

  friend bool operator==(const ShiftRecord&, const ShiftRecord&) = default;
};

struct ConstructionTrace {
  GridDims dims;
  Radius k;
  Residue chosen_residue;
  std::int64_t base_size = 0;
  std::vector<CornerContext> corner_cases;
  VertexSet removed;
  std::vector<ShiftRecord> shifted_pairs;
  std::int64_t projection_merged = 0;
  std::int64_t final_size = 0;
  std::int64_t fallback_activations = 0;
  bool corners_removed = false;
};

struct Construction {
  VertexSet set;
  ConstructionTrace trace;
};

struct ConstructOptions {
  /// Verify the whole grid after each corner (cheap; on by default).
  bool verify_corners = true;
  /// Local search over unit translations if a corner ever fails verification.
  bool fallback_repair = false;
  /// Worker threads for the residue scan; the result does not depend on it.
  unsigned threads = 1;
};

/// A corner shift left grid vertices uncovered.
class CornerRepairError : public std::runtime_error {
 public:
  CornerRepairError(const std::string& what, Corner corner, VertexSet uncovered)
      : std::runtime_error(what), corner_(corner), uncovered_(std::move(uncovered)) {}

  Corner corner() const noexcept { return corner_; }
  const VertexSet& uncovered() const noexcept { return uncovered_; }

 private:
  Corner corner_;
  VertexSet uncovered_;
};

/// True when corner removal applies: m and n both exceed 2p.
bool corners_separable(const GridDims& dims, Radius k);

/// Residue minimizing |fiber ∩ Y|, ties to the smallest value, with that count.
std::pair<Residue, std::int64_t> best_residue(const GridDims& dims, Radius k, unsigned threads = 1);

VertexSet base_set(const GridDims& dims, Radius k, const Residue& ell);

/// Clamps every point to the grid box; duplicates merge.
VertexSet project_inward(const GridDims& dims, const VertexSet& s);

CornerContext classify_corner(const GridDims& dims, Radius k, const Residue& ell, Corner corner);

struct CornerOutcome {
  VertexSet set;
  LatticePoint removed;  ///< native coordinates
  std::vector<ShiftRecord> shifts;
  bool fallback_used = false;
};

/// Removes the corner's s and applies the shifts prescribed by its case.
CornerOutcome apply_corner_case(const CornerContext& ctx, const VertexSet& s_set,
                                const GridDims& dims, Radius k,
                                const ConstructOptions& opts = {});

/// Applies apply_corner_case at NW, NE, SW, SE. `s_set` must be exactly
/// base_set(dims, k, ell).
Construction remove_corners(const GridDims& dims, Radius k, const Residue& ell,
                            const VertexSet& s_set, const ConstructOptions& opts = {});

/// Rejects input whose corners were already removed.
Construction remove_corners(const Construction& prior, const ConstructOptions& opts = {});

Construction construct(const GridDims& dims, Radius k, const ConstructOptions& opts = {});

}  // namespace kdom
