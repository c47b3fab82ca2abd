#pragma once

// Exhaustive scans over small finite fields, on element indices.
// Every kernel has a serial reference path and an OpenMP path; both return
// identical results in enumeration order.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "asf/finite_field.hpp"

namespace asf::kernels {

enum class Exec { Serial, Parallel };

using Index = std::uint32_t;
/// Membership mask over the elements of a SmallField.
using Subset = std::vector<std::uint8_t>;

/// Table-driven copy of an enumerable field of order <= kMaxOrder.
class SmallField {
 public:
  static constexpr std::uint64_t kMaxOrder = 1024;

  explicit SmallField(const FiniteField& field);

  const FiniteField& field() const { return field_; }
  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }

  Index add(Index a, Index b) const { return add_[a * q_ + b]; }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index mul(Index a, Index b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  Index inv(Index a) const { return exp_[(q_ - 1 - log_[a]) % (q_ - 1)]; }
  /// x^p - x.
  Index wp(Index x) const { return wp_[x]; }
  /// x^p.
  Index frob(Index x) const { return x == 0 ? 0 : exp_[static_cast<std::uint64_t>(log_[x]) * p_ % (q_ - 1)]; }
  std::span<const Index> wp_table() const { return wp_; }
  /// Index of the prime-field element c.
  Index prime(std::uint32_t c) const { return c % p_; }

  Element element(Index i) const { return field_.from_index(i); }

 private:
  FiniteField field_;
  std::uint32_t q_;
  std::uint32_t p_;
  std::vector<Index> add_;
  std::vector<Index> neg_;
  std::vector<Index> exp_;
  std::vector<Index> log_;
  std::vector<Index> wp_;
};

/// For each target y, the least x (enumeration order) with table[x] = y,
/// or -1. Brute force: every target scans the whole domain.
std::vector<std::int64_t> least_preimages(std::span<const Index> table, std::uint32_t order, Exec exec);

/// Values of sum_i coeffs[i] * x^{p^i} at every x.
std::vector<Index> additive_values(const SmallField& f, std::span<const Index> coeffs, Exec exec);

/// a * wp(K) as a mask.
Subset scaled_wp_image(const SmallField& f, Index a, Exec exec);

/// Intersection of a_i * wp(K) over the tuple, by exhaustive membership.
Subset scaled_wp_intersection(const SmallField& f, std::span<const Index> tuple, Exec exec);

/// Points (t, x_1..x_n) of G_a flattened row-major (n+1 indices per point),
/// ordered by t then lexicographically by (x_1..x_n).
std::vector<Index> ga_points(const SmallField& f, std::span<const Index> tuple, Exec exec);

/// Number of points of G_a without materializing them.
std::uint64_t ga_point_count(const SmallField& f, std::span<const Index> tuple, Exec exec);

/// Least n >= 1 such that every (n+1)-subset of the distinct values in A has
/// an n-subset with the same intersection of scaled wp images.
int baldwin_saxl_index(const SmallField& f, std::span<const Index> units, Exec exec);

/// Exhaustive search for coprime (g, h) over F_p, deg <= bound, h/g not in F_p,
/// with X * (h^p - h g^{p-1}) = g^p. Returns the first pair in (g, h) code order.
std::optional<std::pair<PolyFp, PolyFp>> rational_inverse_search(std::uint32_t p, int deg_bound, Exec exec);

}  // namespace asf::kernels
