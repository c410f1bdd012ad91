#include "kdom/bounds.hpp"

#include "kdom/construction.hpp"
#include "kdom/errors.hpp"
#include "kdom/lattice.hpp"

namespace kdom {

using detail::checked_add;
using detail::checked_mul;

namespace {

void require_positive(std::int64_t m, std::int64_t n) {
  if (m < 1) throw DomainError("m must be ≥ 1");
  if (n < 1) throw DomainError("n must be ≥ 1");
}

std::int64_t padded_area(std::int64_t m, std::int64_t n, std::int64_t k) {
  return checked_mul(checked_add(m, 2 * k), checked_add(n, 2 * k));
}

}  // namespace

std::int64_t new_bound(std::int64_t m, std::int64_t n, std::int64_t k) {
  const Radius r(k);
  require_positive(m, n);
  const std::int64_t two_p = 2 * r.modulus();
  if (m <= two_p || n <= two_p) {
    throw DomainError("new bound requires m, n > " + std::to_string(two_p));
  }
  return padded_area(m, n, k) / r.modulus() - 4;
}

std::int64_t cor_bound(std::int64_t m, std::int64_t n, std::int64_t k) {
  const Radius r(k);
  require_positive(m, n);
  return padded_area(m, n, k) / r.modulus();
}

std::int64_t fss_bound(std::int64_t m, std::int64_t n, std::int64_t k) {
  const Radius r(k);
  require_positive(m, n);
  const std::int64_t p = r.modulus();
  // ceil(a/p + p/4) = ceil((4a + p^2) / 4p)
  const std::int64_t num = checked_add(checked_mul(4, padded_area(m, n, k)), p * p);
  const std::int64_t den = 4 * p;
  return (num + den - 1) / den;
}

std::int64_t chang_bound(std::int64_t m, std::int64_t n) {
  if (m <= 8 || n <= 8) throw DomainError("Chang bound requires m, n > 8");
  return padded_area(m, n, 1) / 5 - 4;
}

std::int64_t bijm_bound(std::int64_t m, std::int64_t n) {
  if (m <= 26 || n <= 26) throw DomainError("k=2 bound requires m, n > 26");
  return padded_area(m, n, 2) / 13 - 4;
}

std::vector<BoundRow> comparison_table(const std::vector<std::pair<std::int64_t, std::int64_t>>& rows,
                                       std::int64_t k, bool build, unsigned threads) {
  std::vector<BoundRow> table;
  table.reserve(rows.size());
  for (const auto& [m, n] : rows) {
    BoundRow row{m, n, k};
    try {
      row.fss_bound = fss_bound(m, n, k);
      if (build) {
        ConstructOptions opts;
        opts.threads = threads;
        row.constructed_size =
            static_cast<std::int64_t>(construct(GridDims(m, n), Radius(k), opts).set.size());
      }
      if (k == 1 && m > 8 && n > 8) row.chang_bound = chang_bound(m, n);
      if (k == 2 && m > 26 && n > 26) row.bijm_bound = bijm_bound(m, n);
      row.new_bound = new_bound(m, n, k);
    } catch (const DomainError& e) {
      row.error = e.what();
    }
    table.push_back(std::move(row));
  }
  return table;
}

std::vector<std::pair<std::int64_t, std::int64_t>> demo_table_pairs() {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t m = 51; m <= 65; m += 2) pairs.emplace_back(m, m + 1);
  return pairs;
}

}  // namespace kdom
