#include "asf/artin_schreier.hpp"

#include <algorithm>
#include <numeric>

#include "asf/error.hpp"
#include "asf/kernels.hpp"

namespace asf {

namespace {

bool small(const FiniteField& field) {
  return field.order_fits() && field.order() <= kernels::SmallField::kMaxOrder;
}

FqPoly as_polynomial(const Element& a) {
  const auto& field = a.field();
  return FqPoly::monomial(field.one(), static_cast<int>(field.characteristic())) - FqPoly::x(field) -
         FqPoly::monomial(a, 0);
}

}  // namespace

Element wp(const Element& x) { return x.frobenius() - x; }

CosetDecomposition image_subgroup(const FiniteField& field) {
  const std::uint64_t q = field.order();
  std::vector<std::uint8_t> in_image(q, 0);
  if (small(field)) {
    const kernels::SmallField sf(field);
    for (auto y : sf.wp_table()) in_image[y] = 1;
  } else {
    for (const auto& x : field.elements()) in_image[wp(x).index()] = 1;
  }
  CosetDecomposition out{field, {}, {}, 0};
  for (std::uint64_t i = 0; i < q; ++i) {
    if (in_image[i]) out.image.push_back(field.from_index(i));
  }
  for (std::uint64_t i = 0; i < q; ++i) {
    const Element x = field.from_index(i);
    const bool new_coset = std::none_of(out.reps.begin(), out.reps.end(),
                                        [&](const Element& r) { return in_image[(x - r).index()] != 0; });
    if (new_coset) out.reps.push_back(x);
  }
  out.index = out.reps.size();
  if (out.image.size() * out.index != q || out.index != field.characteristic()) {
    raise(ErrorCode::CrossCheckFailure, "coset index of wp(" + field.to_string() + ") is " + std::to_string(out.index));
  }
  return out;
}

std::optional<Element> has_as_root_scan(const FiniteField& field, const Element& a) {
  require_same_field(field, a.field());
  if (small(field)) {
    const kernels::SmallField sf(field);
    const auto target = static_cast<kernels::Index>(a.index());
    for (kernels::Index x = 0; x < sf.order(); ++x) {
      if (sf.wp(x) == target) return sf.element(x);
    }
    return std::nullopt;
  }
  for (const auto& x : field.elements()) {
    if (wp(x) == a) return x;
  }
  return std::nullopt;
}

std::optional<Element> has_as_root(const FiniteField& field, const Element& a) {
  require_same_field(field, a.field());
  const bool trace_zero = trace_to_prime(a).is_zero();
  std::optional<Element> root;
  if (field.enumerable()) {
    root = has_as_root_scan(field, a);
  } else {
    auto rs = roots(as_polynomial(a));
    if (!rs.empty()) root = rs.front();
  }
  if (root.has_value() != trace_zero) {
    raise(ErrorCode::CrossCheckFailure, "trace criterion disagrees with root search for " + a.to_string());
  }
  if (root && !(wp(*root) == a)) raise(ErrorCode::CrossCheckFailure, "returned root does not solve wp(x) = a");
  return root;
}

AsExtension build_as_extension(const FiniteField& field, const Element& a) {
  require_same_field(field, a.field());
  if (auto r = has_as_root(field, a)) {
    raise(ErrorCode::ElementInImage, a.to_string() + " = wp(" + r->to_string() + ") in " + field.to_string());
  }
  const std::uint32_t p = field.characteristic();
  const FiniteField ext = FiniteField::canonical(p, static_cast<int>(p) * field.degree());
  Embedding emb = Embedding::least_root(field, ext);
  const Element image_a = emb(a);
  const auto rs = roots(as_polynomial(image_a));
  if (rs.size() != p) {
    raise(ErrorCode::CrossCheckFailure, "x^p - x - a has " + std::to_string(rs.size()) + " roots in the extension");
  }
  const Element alpha = rs.front();
  if (!(wp(alpha) == image_a)) raise(ErrorCode::CrossCheckFailure, "wp(alpha) != a");
  std::vector<Element> shifted;
  for (std::uint32_t c = 0; c < p; ++c) shifted.push_back(alpha + ext.from_int(c));
  std::sort(shifted.begin(), shifted.end());
  if (shifted != rs) raise(ErrorCode::CrossCheckFailure, "roots are not alpha + F_p");
  return AsExtension{field, ext, std::move(emb), alpha, as_polynomial(a)};
}

std::uint64_t orbit_count(std::uint32_t p, int k) {
  if (p < 2) raise(ErrorCode::NotPrime, std::to_string(p));
  std::uint64_t pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  return (pk - 1) / (p - 1);
}

std::uint64_t count_as_extensions(const FiniteField& field) {
  const std::uint32_t p = field.characteristic();
  std::uint64_t index = 0;
  if (field.enumerable()) {
    index = image_subgroup(field).index;
  } else {
    // |K / wp(K)| = |ker wp| for finite K.
    index = roots(as_polynomial(field.zero())).size();
  }
  int k = 0;
  for (std::uint64_t r = index; r > 1; r /= p) ++k;
  return orbit_count(p, k);
}

bool as_extensions_isomorphic(const AsExtension& a, const AsExtension& b) {
  require_same_field(a.base, b.base);
  return !roots(b.embedding(a.defining_poly)).empty();
}

BruteForceCount count_as_extensions_bruteforce(const FiniteField& field) {
  const auto cosets = image_subgroup(field);
  std::vector<std::uint8_t> in_image(field.order(), 0);
  for (const auto& y : cosets.image) in_image[y.index()] = 1;

  std::vector<AsExtension> exts;
  for (std::size_t i = 1; i < cosets.reps.size(); ++i) exts.push_back(build_as_extension(field, cosets.reps[i]));

  const std::size_t m = exts.size();
  std::vector<std::size_t> iso_class(m), crit_class(m);
  std::iota(iso_class.begin(), iso_class.end(), 0);
  std::iota(crit_class.begin(), crit_class.end(), 0);
  bool agree = true;
  const std::uint32_t p = field.characteristic();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const bool iso = as_extensions_isomorphic(exts[i], exts[j]);
      if (iso != as_extensions_isomorphic(exts[j], exts[i])) agree = false;
      bool crit = false;
      for (std::uint32_t lambda = 1; lambda < p && !crit; ++lambda) {
        const Element diff = cosets.reps[i + 1] - cosets.reps[j + 1].scaled(lambda);
        crit = in_image[diff.index()] != 0;
      }
      if (iso != crit) agree = false;
      if (iso) iso_class[i] = std::min(iso_class[i], iso_class[j]);
      if (crit) crit_class[i] = std::min(crit_class[i], crit_class[j]);
    }
  }
  auto count_roots = [](const std::vector<std::size_t>& cls) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) c += cls[i] == i ? 1 : 0;
    return c;
  };
  return {count_roots(iso_class), count_roots(crit_class), agree};
}

std::pair<Element, Element> frobenius_decompose(const Element& a) {
  Element b = a;
  Element c = -a;
  if (!(b.frobenius() + wp(c) == a)) raise(ErrorCode::CrossCheckFailure, "a != a^p + wp(-a)");
  return {std::move(b), std::move(c)};
}

}  // namespace asf
