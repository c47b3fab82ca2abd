#include "asf/additive_poly.hpp"

#include <algorithm>

#include "asf/error.hpp"
#include "asf/kernels.hpp"

namespace asf {

AdditivePolynomial::AdditivePolynomial(FiniteField field) : field_(std::move(field)) {}

AdditivePolynomial::AdditivePolynomial(FiniteField field, std::vector<Element> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_) require_same_field(field_, c.field());
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AdditivePolynomial AdditivePolynomial::artin_schreier(const FiniteField& field) {
  return AdditivePolynomial(field, {-field.one(), field.one()});
}

AdditivePolynomial AdditivePolynomial::frobenius_power(const FiniteField& field, int k) {
  std::vector<Element> c(static_cast<std::size_t>(k) + 1, field.zero());
  c.back() = field.one();
  return AdditivePolynomial(field, std::move(c));
}

Element AdditivePolynomial::operator()(const Element& x) const {
  require_same_field(field_, x.field());
  Element acc = field_.zero();
  Element power = x;
  for (const auto& c : c_) {
    acc += c * power;
    power = power.frobenius();
  }
  return acc;
}

FqPoly AdditivePolynomial::to_poly() const {
  if (c_.empty()) return FqPoly(field_);
  std::uint64_t deg = 1;
  for (int i = 0; i < p_degree(); ++i) deg *= characteristic();
  std::vector<Element> dense(static_cast<std::size_t>(deg) + 1, field_.zero());
  std::uint64_t e = 1;
  for (const auto& c : c_) {
    dense[static_cast<std::size_t>(e)] = c;
    e *= characteristic();
  }
  return FqPoly(field_, std::move(dense));
}

AdditivePolynomial AdditivePolynomial::scaled(const Element& a) const {
  std::vector<Element> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(x * a);
  return AdditivePolynomial(field_, std::move(c));
}

AdditivePolynomial operator+(const AdditivePolynomial& f, const AdditivePolynomial& g) {
  require_same_field(f.field_, g.field_);
  std::vector<Element> c(std::max(f.c_.size(), g.c_.size()), f.field_.zero());
  for (std::size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
  for (std::size_t i = 0; i < g.c_.size(); ++i) c[i] += g.c_[i];
  return AdditivePolynomial(f.field_, std::move(c));
}

bool operator==(const AdditivePolynomial& f, const AdditivePolynomial& g) {
  return f.field_ == g.field_ && f.c_ == g.c_;
}

std::string AdditivePolynomial::to_string() const { return to_poly().to_string('x'); }

AdditivePolynomial from_general_poly(const FqPoly& g) {
  const auto& field = g.field();
  const std::uint32_t p = field.characteristic();
  std::vector<Element> c;
  for (int e = 0; e <= g.degree(); ++e) {
    const Element coeff = g.coeff(e);
    if (coeff.is_zero()) continue;
    if (e == 0) raise(ErrorCode::NotAdditive, "nonzero constant term in " + g.to_string());
    int i = 0;
    int rest = e;
    while (rest % static_cast<int>(p) == 0) {
      rest /= static_cast<int>(p);
      ++i;
    }
    if (rest != 1) raise(ErrorCode::NotAdditive, "exponent " + std::to_string(e) + " is not a power of " + std::to_string(p));
    if (c.size() <= static_cast<std::size_t>(i)) c.resize(static_cast<std::size_t>(i) + 1, field.zero());
    c[static_cast<std::size_t>(i)] = coeff;
  }
  return AdditivePolynomial(field, std::move(c));
}

AdditivePolynomial ore_compose(const AdditivePolynomial& f, const AdditivePolynomial& g) {
  require_same_field(f.field(), g.field());
  const auto& field = f.field();
  if (f.is_zero() || g.is_zero()) return AdditivePolynomial(field);
  std::vector<Element> c(static_cast<std::size_t>(f.p_degree() + g.p_degree()) + 1, field.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      c[i + j] += f.coeffs()[i] * g.coeffs()[j].frobenius(static_cast<int>(i));
    }
  }
  return AdditivePolynomial(field, std::move(c));
}

AdditivePolynomial embed(const AdditivePolynomial& f, const Embedding& e) {
  require_same_field(f.field(), e.source());
  std::vector<Element> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(e(x));
  return AdditivePolynomial(e.target(), std::move(c));
}

namespace {

AdditivePolynomial carry_into(const AdditivePolynomial& f, const FiniteField& field) {
  if (f.field() == field) return f;
  return embed(f, Embedding::least_root(f.field(), field));
}

bool small(const FiniteField& field) {
  return field.order_fits() && field.order() <= kernels::SmallField::kMaxOrder;
}

std::vector<kernels::Index> coeff_indices(const AdditivePolynomial& f) {
  std::vector<kernels::Index> out;
  for (const auto& c : f.coeffs()) out.push_back(static_cast<kernels::Index>(c.index()));
  return out;
}

int log_p(std::uint64_t size, std::uint32_t p) {
  int d = 0;
  while (size > 1) {
    size /= p;
    ++d;
  }
  return d;
}

}  // namespace

KernelResult kernel(const AdditivePolynomial& f, const FiniteField& field) {
  if (f.is_zero()) raise(ErrorCode::ZeroPolynomial, "kernel of the zero additive polynomial");
  const AdditivePolynomial g = carry_into(f, field);
  std::vector<Element> rs;
  if (small(field)) {
    const kernels::SmallField sf(field);
    const auto values = kernels::additive_values(sf, coeff_indices(g), kernels::Exec::Parallel);
    for (std::size_t x = 0; x < values.size(); ++x) {
      if (values[x] == 0) rs.push_back(sf.element(static_cast<kernels::Index>(x)));
    }
  } else {
    rs = roots(g.to_poly());
  }
  const int dim = log_p(rs.size(), field.characteristic());
  return {std::move(rs), dim};
}

std::optional<CanonicalForm> canonical_form(const AdditivePolynomial& f) {
  if (f.is_zero()) raise(ErrorCode::ZeroPolynomial, "canonical form of the zero additive polynomial");
  // f = g^p with g additive whenever the linear coefficient vanishes; peel
  // those layers by taking p-th roots of the coefficients.
  std::vector<Element> cur = f.coeffs();
  int n = 0;
  while (cur.front().is_zero()) {
    std::vector<Element> next;
    for (std::size_t i = 1; i < cur.size(); ++i) next.push_back(cur[i].pth_root());
    cur = std::move(next);
    ++n;
  }
  if (cur.size() != 2 || !(cur[0] == -cur[1])) return std::nullopt;
  return CanonicalForm{cur[1].frobenius(n), n};
}

AdditivePolynomial expand_canonical(const Element& a, int n) {
  const auto& field = a.field();
  std::vector<Element> c(static_cast<std::size_t>(n) + 2, field.zero());
  c[static_cast<std::size_t>(n)] = -a;
  c[static_cast<std::size_t>(n) + 1] = a;
  return AdditivePolynomial(field, std::move(c));
}

SurjectivityResult is_surjective_on(const AdditivePolynomial& f, const FiniteField& field) {
  if (f.is_zero()) return {false, field.one()};
  const AdditivePolynomial g = carry_into(f, field);
  if (small(field)) {
    const kernels::SmallField sf(field);
    const auto values = kernels::additive_values(sf, coeff_indices(g), kernels::Exec::Parallel);
    std::vector<std::uint8_t> hit(sf.order(), 0);
    for (auto v : values) hit[v] = 1;
    for (kernels::Index a = 0; a < sf.order(); ++a) {
      if (!hit[a]) return {false, sf.element(a)};
    }
    return {true, std::nullopt};
  }
  if (kernel(g, field).roots.size() == 1) return {true, std::nullopt};
  const FqPoly dense = g.to_poly();
  for (std::uint64_t i = 1;; ++i) {
    const Element a = field.from_index(i);
    if (roots(dense - FqPoly::monomial(a, 0)).empty()) return {false, a};
  }
}

}  // namespace asf
