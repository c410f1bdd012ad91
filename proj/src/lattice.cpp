#include "kdom/lattice.hpp"

#include <sstream>
#include <string>

#include "kdom/vertex_set.hpp"

namespace kdom {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;
using detail::floor_div;
using detail::mod_floor;

Radius::Radius(std::int64_t k) : k_(k) {
  if (k < 1) throw DomainError("k must be ≥ 1");
  if (k > kMaxRadius) throw DomainError("k must be ≤ " + std::to_string(kMaxRadius));
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& q) {
  return os << '(' << q.i << ", " << q.j << ')';
}

Residue::Residue(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 1) throw DomainError("residue modulus must be positive");
  value_ = mod_floor(value, modulus);
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " mod " << r.modulus();
}

Box::Box(std::int64_t i_lo, std::int64_t i_hi, std::int64_t j_lo, std::int64_t j_hi)
    : i_lo_(i_lo), i_hi_(i_hi), j_lo_(j_lo), j_hi_(j_hi) {
  if (i_lo > i_hi || j_lo > j_hi) throw DomainError("empty box");
  // Side lengths are bounded so width * height stays within int64.
  if (checked_sub(i_hi, i_lo) >= kMaxSide || checked_sub(j_hi, j_lo) >= kMaxSide) {
    throw DomainError("box side exceeds 2^31");
  }
}

std::ostream& operator<<(std::ostream& os, const Box& b) {
  return os << '[' << b.i_lo() << ',' << b.i_hi() << "]x[" << b.j_lo() << ',' << b.j_hi() << ']';
}

std::int64_t modulus(Radius k) noexcept { return k.modulus(); }

Residue phi(Radius k, const LatticePoint& q) {
  const std::int64_t kk = k.value();
  return Residue(checked_add(checked_mul(kk + 1, q.i), checked_mul(kk, q.j)), k.modulus());
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = old_r - q * r;
    std::swap(old_r, r);
    old_s = old_s - q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw DomainError("value is not invertible modulo m");
  return mod_floor(old_s, m);
}

namespace {

void check_residue(Radius k, const Residue& ell) {
  if (ell.modulus() != k.modulus()) {
    std::ostringstream msg;
    msg << "residue modulus " << ell.modulus() << " does not match p = " << k.modulus();
    throw DomainError(msg.str());
  }
}

// Smallest i >= i_lo in row j with phi_k(i, j) == ell. Within a row the
// solutions are exactly one residue class of i modulo p.
std::int64_t first_hit(Radius k, const Residue& ell, std::int64_t row, std::int64_t i_lo,
                       std::int64_t inv_k1) {
  const std::int64_t p = k.modulus();
  const std::int64_t rhs = mod_floor(ell.value() - mod_floor(checked_mul(k.value(), mod_floor(row, p)), p), p);
  const std::int64_t i0 = mod_floor(inv_k1 * rhs, p);
  return i_lo + mod_floor(i0 - i_lo, p);
}

}  // namespace

std::int64_t first_in_row(Radius k, const Residue& ell, std::int64_t row, std::int64_t i_min) {
  check_residue(k, ell);
  return first_hit(k, ell, row, i_min, inverse_mod(k.value() + 1, k.modulus()));
}

std::int64_t last_in_column(Radius k, const Residue& ell, std::int64_t column, std::int64_t j_max) {
  check_residue(k, ell);
  const std::int64_t p = k.modulus();
  const std::int64_t rhs =
      mod_floor(ell.value() - mod_floor(checked_mul(k.value() + 1, mod_floor(column, p)), p), p);
  const std::int64_t j0 = mod_floor(inverse_mod(k.value(), p) * rhs, p);
  return j_max - mod_floor(j_max - j0, p);
}

VertexSet inverse_image_in_box(Radius k, const Residue& ell, const Box& box) {
  check_residue(k, ell);
  const std::int64_t p = k.modulus();
  const std::int64_t inv_k1 = inverse_mod(k.value() + 1, p);
  std::vector<LatticePoint> pts;
  for (std::int64_t j = box.j_lo(); j <= box.j_hi(); ++j) {
    for (std::int64_t i = first_hit(k, ell, j, box.i_lo(), inv_k1); i <= box.i_hi(); i += p) {
      pts.push_back({i, j});
    }
  }
  return VertexSet::from_sorted(std::move(pts));
}

std::int64_t count_in_box(Radius k, const Residue& ell, const Box& box) {
  check_residue(k, ell);
  const std::int64_t p = k.modulus();
  const std::int64_t inv_k1 = inverse_mod(k.value() + 1, p);
  std::int64_t total = 0;
  for (std::int64_t j = box.j_lo(); j <= box.j_hi(); ++j) {
    const std::int64_t first = first_hit(k, ell, j, box.i_lo(), inv_k1);
    if (first <= box.i_hi()) total += floor_div(box.i_hi() - first, p) + 1;
  }
  return total;
}

std::int64_t ball_size(Radius k) {
  const std::int64_t kk = k.value();
  std::int64_t count = 0;
  for (std::int64_t x = -kk; x <= kk; ++x) count += 2 * (kk - (x < 0 ? -x : x)) + 1;
  if (count != k.modulus()) throw std::logic_error("ball size differs from 2k^2+2k+1");
  return count;
}

}  // namespace kdom
