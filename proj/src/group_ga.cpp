#include "asf/group_ga.hpp"

#include "asf/error.hpp"

namespace asf {

GaGroupSpec::GaGroupSpec(FiniteField field, std::vector<Element> tuple) : field_(std::move(field)), tuple_(std::move(tuple)) {
  if (tuple_.empty()) raise(ErrorCode::InvalidArgument, "G_a needs a nonempty tuple");
  for (const auto& a : tuple_) {
    require_same_field(field_, a.field());
    if (a.is_zero()) raise(ErrorCode::InvalidArgument, "G_a tuple entries must be nonzero");
  }
}

namespace {

std::vector<kernels::Index> indices(const std::vector<Element>& xs) {
  std::vector<kernels::Index> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(static_cast<kernels::Index>(x.index()));
  return out;
}

}  // namespace

std::vector<GaPoint> ga_points(const GaGroupSpec& spec, kernels::Exec exec) {
  const kernels::SmallField sf(spec.field());
  const auto tuple = indices(spec.tuple());
  const auto flat = kernels::ga_points(sf, tuple, exec);
  const std::size_t width = tuple.size() + 1;
  std::vector<GaPoint> out;
  out.reserve(flat.size() / width);
  for (std::size_t i = 0; i < flat.size(); i += width) {
    GaPoint pt{sf.element(flat[i]), {}};
    for (std::size_t k = 1; k < width; ++k) pt.x.push_back(sf.element(flat[i + k]));
    out.push_back(std::move(pt));
  }
  return out;
}

ProjectionReport first_coord_image(const GaGroupSpec& spec, kernels::Exec exec) {
  const kernels::SmallField sf(spec.field());
  const auto tuple = indices(spec.tuple());
  const auto flat = kernels::ga_points(sf, tuple, exec);
  const std::size_t width = tuple.size() + 1;

  std::vector<std::uint64_t> fiber(sf.order(), 0);
  for (std::size_t i = 0; i < flat.size(); i += width) ++fiber[flat[i]];
  const auto inter = kernels::scaled_wp_intersection(sf, tuple, exec);

  std::uint64_t pn = 1;
  for (std::size_t i = 0; i < tuple.size(); ++i) pn *= sf.characteristic();

  ProjectionReport rep{{}, {}, flat.size() / width, pn, true};
  std::uint64_t inter_size = 0;
  for (kernels::Index t = 0; t < sf.order(); ++t) {
    if (fiber[t] > 0) rep.image.push_back(sf.element(t));
    if (inter[t]) {
      rep.intersection.push_back(sf.element(t));
      ++inter_size;
    }
    if (fiber[t] != 0 && fiber[t] != pn) rep.fibers_regular = false;
  }
  if (rep.image != rep.intersection) {
    raise(ErrorCode::CrossCheckFailure, "first-coordinate projection differs from the intersection of scaled wp images");
  }
  if (!rep.fibers_regular) raise(ErrorCode::CrossCheckFailure, "irregular fiber over the projection");
  if (rep.point_count != inter_size * pn) raise(ErrorCode::CrossCheckFailure, "|G_a(K)| != |intersection| * p^n");
  return rep;
}

int baldwin_saxl_index(const FiniteField& field, const std::vector<Element>& units, kernels::Exec exec) {
  for (const auto& a : units) {
    require_same_field(field, a.field());
    if (a.is_zero()) raise(ErrorCode::InvalidArgument, "Baldwin-Saxl family must consist of units");
  }
  const kernels::SmallField sf(field);
  return kernels::baldwin_saxl_index(sf, indices(units), exec);
}

std::optional<std::pair<PolyFp, PolyFp>> rational_as_inverse_search(std::uint32_t p, int deg_bound, kernels::Exec exec) {
  return kernels::rational_inverse_search(p, deg_bound, exec);
}

}  // namespace asf
