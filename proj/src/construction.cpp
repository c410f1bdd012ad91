#include "kdom/construction.hpp"

#include <numeric>
#include <sstream>
#include <thread>

namespace kdom {

const char* to_string(Corner c) noexcept {
  switch (c) {
    case Corner::NW: return "NW";
    case Corner::NE: return "NE";
    case Corner::SW: return "SW";
    case Corner::SE: return "SE";
  }
  return "?";
}

const char* to_string(CornerCase c) noexcept {
  switch (c) {
    case CornerCase::NegativeSlope: return "NegativeSlope";
    case CornerCase::SteepSlope: return "SteepSlope";
    case CornerCase::ShallowSlope: return "ShallowSlope";
  }
  return "?";
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = detail::checked_sub(0, num);
    den = detail::checked_sub(0, den);
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num) * b.den;
  const __int128 rhs = static_cast<__int128>(b.num) * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.num << '/' << r.den;
}

namespace {

int quarter_turns_for(Corner c) {
  switch (c) {
    case Corner::NW: return 0;
    case Corner::NE: return 1;
    case Corner::SE: return 2;
    case Corner::SW: return 3;
  }
  return 0;
}

GridDims rotated_dims(const GridDims& dims, int quarter_turns) {
  return quarter_turns % 2 == 0 ? dims : dims.transposed();
}

// One counter-clockwise quarter turn taking G_{m,n} onto G_{n,m}.
LatticePoint rotate_once(const LatticePoint& q, const GridDims& dims) {
  return {dims.n - 1 - q.j, q.i};
}

// Signed area of (d, q): positive when q lies counter-clockwise of d.
__int128 cross(const LatticePoint& d, const LatticePoint& q) {
  return static_cast<__int128>(d.i) * q.j - static_cast<__int128>(d.j) * q.i;
}

LatticePoint minus(const LatticePoint& a, const LatticePoint& b) { return {a.i - b.i, a.j - b.j}; }

struct FrameMove {
  LatticePoint from;
  LatticePoint to;
};

// The prescribed shifts for the north-west corner, in the corner frame, with
// s already deleted from `frame_set`.
std::vector<FrameMove> case_moves(const CornerContext& ctx, const VertexSet& frame_set, Radius k) {
  const Box window = corner_window(ctx.frame_dims, k);
  std::vector<FrameMove> moves;
  switch (ctx.kind) {
    case CornerCase::NegativeSlope:
      // s's diamond misses G entirely.
      break;
    case CornerCase::SteepSlope: {
      // Everything on or north-west of L1 moves east; z then moves north as
      // well, which covers the vertex b left behind at the west boundary.
      const LatticePoint d = minus(ctx.s, ctx.z);
      for (const auto& q : frame_set) {
        if (!window.contains(q) || cross(d, minus(q, ctx.z)) < 0) continue;
        LatticePoint to{q.i + 1, q.j};
        if (q == ctx.z) to.j += 1;
        moves.push_back({q, to});
      }
      break;
    }
    case CornerCase::ShallowSlope: {
      // Code points on L2 move east (t then reaches u); the diagonal this
      // uncovers is closed by moving everything strictly above L2 south.
      const LatticePoint d{k.value() + 1, k.value()};
      for (const auto& q : frame_set) {
        if (!window.contains(q)) continue;
        const __int128 side = cross(d, minus(q, ctx.s));
        if (side == 0) moves.push_back({q, {q.i + 1, q.j}});
        else if (side > 0) moves.push_back({q, {q.i, q.j - 1}});
      }
      break;
    }
  }
  return moves;
}

VertexSet apply_moves(const VertexSet& set, const std::vector<FrameMove>& moves) {
  VertexSet out = set;
  for (const auto& mv : moves) {
    if (!out.erase(mv.from)) throw std::logic_error("shift source missing from set");
  }
  for (const auto& mv : moves) {
    if (!out.insert(mv.to)) throw std::logic_error("shift target collides with an existing point");
  }
  return out;
}

VertexSet set_to_frame(const VertexSet& s, const GridDims& dims, int turns) {
  std::vector<LatticePoint> pts;
  pts.reserve(s.size());
  for (const auto& q : s) pts.push_back(to_frame(q, dims, turns));
  return VertexSet(std::move(pts));
}

VertexSet set_from_frame(const VertexSet& s, const GridDims& dims, int turns) {
  std::vector<LatticePoint> pts;
  pts.reserve(s.size());
  for (const auto& q : s) pts.push_back(from_frame(q, dims, turns));
  return VertexSet(std::move(pts));
}

Box native_window(const GridDims& dims, Radius k, Corner c) {
  const int turns = quarter_turns_for(c);
  const Box w = corner_window(rotated_dims(dims, turns), k);
  const LatticePoint a = from_frame({w.i_lo(), w.j_lo()}, dims, turns);
  const LatticePoint b = from_frame({w.i_hi(), w.j_hi()}, dims, turns);
  return Box(std::min(a.i, b.i), std::max(a.i, b.i), std::min(a.j, b.j), std::max(a.j, b.j));
}

bool overlaps(const Box& a, const Box& b) {
  return a.i_lo() <= b.i_hi() && b.i_lo() <= a.i_hi() && a.j_lo() <= b.j_hi() &&
         b.j_lo() <= a.j_hi();
}

}  // namespace

Box corner_window(const GridDims& frame_dims, Radius k) {
  const std::int64_t kk = k.value();
  const std::int64_t p = k.modulus();
  const std::int64_t top = frame_dims.n + kk - 1;
  return Box(-kk, p - kk, top - p - kk, top);
}

LatticePoint to_frame(const LatticePoint& q, const GridDims& dims, int quarter_turns) {
  LatticePoint r = q;
  GridDims d = dims;
  for (int t = 0; t < quarter_turns; ++t) {
    r = rotate_once(r, d);
    d = d.transposed();
  }
  return r;
}

LatticePoint from_frame(const LatticePoint& q, const GridDims& dims, int quarter_turns) {
  const int back = (4 - quarter_turns % 4) % 4;
  return to_frame(q, rotated_dims(dims, quarter_turns), back);
}

bool corners_separable(const GridDims& dims, Radius k) {
  const std::int64_t two_p = 2 * k.modulus();
  return dims.m > two_p && dims.n > two_p;
}

std::pair<Residue, std::int64_t> best_residue(const GridDims& dims, Radius k, unsigned threads) {
  const std::int64_t p = k.modulus();
  const Box y = neighborhood_box(dims, k);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p));
  auto scan = [&](std::int64_t from, std::int64_t step) {
    for (std::int64_t v = from; v < p; v += step) {
      counts[static_cast<std::size_t>(v)] = count_in_box(k, Residue(v, p), y);
    }
  };
  const std::int64_t workers = std::clamp<std::int64_t>(threads, 1, p);
  if (workers == 1) {
    scan(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::int64_t w = 0; w < workers; ++w) pool.emplace_back(scan, w, workers);
  }
  const auto best = std::min_element(counts.begin(), counts.end());
  return {Residue(best - counts.begin(), p), *best};
}

VertexSet base_set(const GridDims& dims, Radius k, const Residue& ell) {
  return inverse_image_in_box(k, ell, neighborhood_box(dims, k));
}

VertexSet project_inward(const GridDims& dims, const VertexSet& s) {
  std::vector<LatticePoint> pts;
  pts.reserve(s.size());
  for (const auto& q : s) {
    pts.push_back({std::clamp<std::int64_t>(q.i, 0, dims.m - 1),
                   std::clamp<std::int64_t>(q.j, 0, dims.n - 1)});
  }
  return VertexSet(std::move(pts));
}

CornerContext classify_corner(const GridDims& dims, Radius k, const Residue& ell, Corner corner) {
  if (!corners_separable(dims, k)) throw DomainError("grid too small for corner removal");
  const int turns = quarter_turns_for(corner);
  const GridDims fd = rotated_dims(dims, turns);

  // The rotated fiber is again a fiber of phi_k; read its residue off a few
  // rotated code points.
  const LatticePoint q0{first_in_row(k, ell, 0, 0), 0};
  const Residue frame_ell = phi(k, to_frame(q0, dims, turns));
  const std::int64_t kk = k.value();
  for (const LatticePoint step : {LatticePoint{kk + 1, kk}, LatticePoint{-kk, kk + 1}}) {
    if (phi(k, to_frame({q0.i + step.i, q0.j + step.j}, dims, turns)) != frame_ell) {
      throw std::logic_error("rotation did not map the fiber onto a fiber");
    }
  }

  const std::int64_t top = fd.n + kk - 1;
  const LatticePoint s{first_in_row(k, frame_ell, top, -kk), top};
  const LatticePoint z{-1, last_in_column(k, frame_ell, -1, top)};

  CornerContext ctx{corner, turns, fd, frame_ell, s, z, std::nullopt,
                    Rational::make(kk, kk + 1), CornerCase::NegativeSlope};
  const std::int64_t di = s.i - z.i;
  const std::int64_t dj = s.j - z.j;
  if (di != 0) ctx.slope_l1 = Rational::make(dj, di);
  if (di <= 0) {
    ctx.kind = CornerCase::NegativeSlope;
  } else if (*ctx.slope_l1 > ctx.slope_l2) {
    ctx.kind = CornerCase::SteepSlope;
  } else {
    ctx.kind = CornerCase::ShallowSlope;
  }
  return ctx;
}

CornerOutcome apply_corner_case(const CornerContext& ctx, const VertexSet& s_set,
                                const GridDims& dims, Radius k, const ConstructOptions& opts) {
  const int turns = ctx.quarter_turns;
  VertexSet frame_set = set_to_frame(s_set, dims, turns);
  if (!frame_set.erase(ctx.s)) throw DomainError("corner point s is not in the input set");

  CornerOutcome out;
  out.removed = from_frame(ctx.s, dims, turns);
  const auto moves = case_moves(ctx, frame_set, k);
  VertexSet shifted = apply_moves(frame_set, moves);
  out.set = set_from_frame(shifted, dims, turns);
  for (const auto& mv : moves) {
    out.shifts.push_back({ctx.corner, from_frame(mv.from, dims, turns), from_frame(mv.to, dims, turns)});
  }
  if (!opts.verify_corners) return out;

  CoverageReport report = verify_domination(dims, k, out.set);
  if (report.dominating()) return out;

  std::ostringstream msg;
  msg << to_string(ctx.corner) << " corner (" << to_string(ctx.kind) << ") left "
      << report.uncovered.size() << " vertices uncovered";
  if (!opts.fallback_repair) throw CornerRepairError(msg.str(), ctx.corner, std::move(report.uncovered));

  // Fallback: s removed, no case shifts, then the first single unit move of a
  // window point that restores domination.
  const Box window = corner_window(ctx.frame_dims, k);
  constexpr LatticePoint kSteps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (const auto& q : frame_set) {
    if (!window.contains(q)) continue;
    for (const auto& st : kSteps) {
      const LatticePoint to{q.i + st.i, q.j + st.j};
      if (frame_set.contains(to)) continue;
      VertexSet trial = apply_moves(frame_set, {{q, to}});
      VertexSet native = set_from_frame(trial, dims, turns);
      if (is_dominating(dims, k, native)) {
        out.set = std::move(native);
        out.shifts = {{ctx.corner, from_frame(q, dims, turns), from_frame(to, dims, turns)}};
        out.fallback_used = true;
        return out;
      }
    }
  }
  throw CornerRepairError(msg.str() + "; fallback repair found no fix", ctx.corner,
                          std::move(report.uncovered));
}

Construction remove_corners(const GridDims& dims, Radius k, const Residue& ell,
                            const VertexSet& s_set, const ConstructOptions& opts) {
  if (!corners_separable(dims, k)) throw DomainError("grid too small for corner removal");
  const VertexSet base = base_set(dims, k, ell);
  if (s_set != base) {
    throw DomainError(s_set.size() < base.size()
                          ? "input set is already corner-processed"
                          : "input set is not the residue class restricted to Y");
  }

  constexpr Corner kOrder[] = {Corner::NW, Corner::NE, Corner::SW, Corner::SE};
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      if (overlaps(native_window(dims, k, kOrder[a]), native_window(dims, k, kOrder[b]))) {
        throw std::logic_error("corner shift windows overlap");
      }
    }
  }

  Construction result{base, ConstructionTrace{dims, k, ell}};
  auto& trace = result.trace;
  trace.base_size = static_cast<std::int64_t>(base.size());
  for (const Corner c : kOrder) {
    CornerContext ctx = classify_corner(dims, k, ell, c);
    CornerOutcome outcome = apply_corner_case(ctx, result.set, dims, k, opts);
    result.set = std::move(outcome.set);
    trace.removed.insert(outcome.removed);
    trace.shifted_pairs.insert(trace.shifted_pairs.end(), outcome.shifts.begin(), outcome.shifts.end());
    trace.fallback_activations += outcome.fallback_used ? 1 : 0;
    trace.corner_cases.push_back(std::move(ctx));
  }
  trace.corners_removed = true;
  trace.final_size = static_cast<std::int64_t>(result.set.size());
  if (trace.final_size != trace.base_size - static_cast<std::int64_t>(trace.removed.size()) ||
      trace.removed.size() != 4) {
    throw std::logic_error("corner removal changed cardinality unexpectedly");
  }
  return result;
}

Construction remove_corners(const Construction& prior, const ConstructOptions& opts) {
  if (prior.trace.corners_removed) throw DomainError("input set is already corner-processed");
  return remove_corners(prior.trace.dims, prior.trace.k, prior.trace.chosen_residue, prior.set, opts);
}

Construction construct(const GridDims& dims, Radius k, const ConstructOptions& opts) {
  const auto [ell, count] = best_residue(dims, k, opts.threads);
  const bool separable = corners_separable(dims, k);
  Construction result = separable ? remove_corners(dims, k, ell, base_set(dims, k, ell), opts)
                                  : Construction{base_set(dims, k, ell), ConstructionTrace{dims, k, ell}};
  if (!separable) result.trace.base_size = count;
  const std::size_t before = result.set.size();
  result.set = project_inward(dims, result.set);
  result.trace.projection_merged = static_cast<std::int64_t>(before - result.set.size());
  result.trace.final_size = static_cast<std::int64_t>(result.set.size());
  return result;
}

}  // namespace kdom
