#pragma once

// Closed-form upper bounds on the k-distance domination number of G_{m,n}.
// All arithmetic is exact integer arithmetic.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kdom {

/// floor((m+2k)(n+2k)/p) - 4, valid for m, n > 2p. Throws DomainError otherwise.
std::int64_t new_bound(std::int64_t m, std::int64_t n, std::int64_t k);

/// floor((m+2k)(n+2k)/p), valid for all m, n >= 1.
std::int64_t cor_bound(std::int64_t m, std::int64_t n, std::int64_t k);

/// ceil((m+2k)(n+2k)/p + p/4), summed over the common denominator 4p.
std::int64_t fss_bound(std::int64_t m, std::int64_t n, std::int64_t k);

/// floor((m+2)(n+2)/5) - 4 for m, n > 8 (k = 1).
std::int64_t chang_bound(std::int64_t m, std::int64_t n);

/// floor((m+4)(n+4)/13) - 4 for m, n > 26 (k = 2).
std::int64_t bijm_bound(std::int64_t m, std::int64_t n);

struct BoundRow {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::optional<std::int64_t> new_bound;
  std::optional<std::int64_t> fss_bound;
  std::optional<std::int64_t> chang_bound;
  std::optional<std::int64_t> bijm_bound;
  std::optional<std::int64_t> constructed_size;
  /// Set when the row is outside a formula's domain; other fields stay valid.
  std::optional<std::string> error;
};

/// One row per (m, n). With `build`, also runs the construction. Domain
/// errors are recorded per row.
std::vector<BoundRow> comparison_table(const std::vector<std::pair<std::int64_t, std::int64_t>>& rows,
                                       std::int64_t k, bool build = false, unsigned threads = 1);

/// The (m, n) pairs of the published k = 3 comparison: (51,52), ..., (65,66).
std::vector<std::pair<std::int64_t, std::int64_t>> demo_table_pairs();

}  // namespace kdom
