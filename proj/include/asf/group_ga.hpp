#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "asf/finite_field.hpp"
#include "asf/kernels.hpp"
#include "asf/poly_fp.hpp"

namespace asf {

/// The group G_a = {(t, x_1..x_n) : t = a_i * wp(x_i) for all i} over a
/// finite field, for a nonempty tuple of nonzero a_i.
class GaGroupSpec {
 public:
  GaGroupSpec(FiniteField field, std::vector<Element> tuple);

  const FiniteField& field() const { return field_; }
  const std::vector<Element>& tuple() const { return tuple_; }
  std::size_t length() const { return tuple_.size(); }

 private:
  FiniteField field_;
  std::vector<Element> tuple_;
};

struct GaPoint {
  Element t;
  std::vector<Element> x;
};

/// All points, ordered by t and then lexicographically by x.
std::vector<GaPoint> ga_points(const GaGroupSpec& spec, kernels::Exec exec = kernels::Exec::Parallel);

struct ProjectionReport {
  std::vector<Element> image;         // pi_1(G_a(K)), from the points
  std::vector<Element> intersection;  // cap a_i wp(K), by exhaustive membership
  std::uint64_t point_count;
  std::uint64_t fiber_size;           // p^n
  bool fibers_regular;                // every nonempty fiber has p^n points
};

/// Projects G_a(K) to the first coordinate and checks it against the
/// independently computed intersection. Throws CrossCheckFailure when the
/// identity, the fiber regularity or the cardinality identity fails.
ProjectionReport first_coord_image(const GaGroupSpec& spec, kernels::Exec exec = kernels::Exec::Parallel);

/// Baldwin-Saxl stabilization index of the family {a * wp(K) : a in units}.
int baldwin_saxl_index(const FiniteField& field, const std::vector<Element>& units,
                       kernels::Exec exec = kernels::Exec::Parallel);

/// Coprime (g, h) over F_p with deg <= deg_bound, h/g not constant and
/// X * (h^p - h g^{p-1}) = g^p; nullopt when none exists.
std::optional<std::pair<PolyFp, PolyFp>> rational_as_inverse_search(std::uint32_t p, int deg_bound,
                                                                     kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace asf
