#include "asf/finite_field.hpp"

#include <algorithm>

#include "asf/error.hpp"

namespace asf {

FiniteField FiniteField::make(std::uint32_t p, const PolyFp& modulus) {
  if (!is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (modulus.characteristic() != p) {
    raise(ErrorCode::InvalidArgument, "modulus is not a polynomial over F_" + std::to_string(p));
  }
  if (modulus.degree() < 1) raise(ErrorCode::ReducibleModulus, "modulus must have degree >= 1");
  if (!modulus.is_monic()) raise(ErrorCode::NotMonic, modulus.to_string());
  if (!is_irreducible(modulus)) raise(ErrorCode::ReducibleModulus, modulus.to_string());
  std::uint64_t order = 1;
  for (int i = 0; i < modulus.degree(); ++i) {
    if (order > UINT64_MAX / p) {
      order = 0;
      break;
    }
    order *= p;
  }
  return FiniteField(std::make_shared<const Data>(Data{p, modulus.degree(), modulus, order}));
}

FiniteField FiniteField::canonical(std::uint32_t p, int n) {
  return make(p, least_irreducible(p, n));
}

std::uint64_t FiniteField::order() const {
  if (data_->order == 0) raise(ErrorCode::FieldTooLarge, to_string() + " has more than 2^64 elements");
  return data_->order;
}

Element FiniteField::zero() const {
  return Element(*this, std::vector<std::uint32_t>(static_cast<std::size_t>(degree()), 0));
}

Element FiniteField::one() const { return from_int(1); }

Element FiniteField::gen() const {
  return from_poly(PolyFp::x(characteristic()));
}

Element FiniteField::from_int(std::int64_t c) const {
  return from_poly(PolyFp::constant(characteristic(), c));
}

Element FiniteField::from_coeffs(std::vector<std::uint32_t> coeffs) const {
  return from_poly(PolyFp(characteristic(), std::move(coeffs)));
}

Element FiniteField::from_poly(const PolyFp& f) const {
  PolyFp r = f % modulus();
  std::vector<std::uint32_t> c(static_cast<std::size_t>(degree()), 0);
  std::copy(r.coeffs().begin(), r.coeffs().end(), c.begin());
  return Element(*this, std::move(c));
}

Element FiniteField::from_index(std::uint64_t index) const {
  if (index >= order()) raise(ErrorCode::InvalidArgument, "element index out of range");
  std::vector<std::uint32_t> c(static_cast<std::size_t>(degree()), 0);
  for (auto& slot : c) {
    slot = static_cast<std::uint32_t>(index % characteristic());
    index /= characteristic();
  }
  return Element(*this, std::move(c));
}

Element FiniteField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> digit(0, characteristic() - 1);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(degree()));
  for (auto& slot : c) slot = digit(rng);
  return Element(*this, std::move(c));
}

std::vector<Element> FiniteField::elements() const {
  if (!enumerable()) raise(ErrorCode::FieldTooLarge, to_string() + " is too large to enumerate");
  std::vector<Element> out;
  out.reserve(order());
  for (std::uint64_t i = 0; i < order(); ++i) out.push_back(from_index(i));
  return out;
}

std::string FiniteField::to_string() const {
  std::string s = "GF(" + std::to_string(characteristic());
  if (degree() > 1) s += "^" + std::to_string(degree());
  s += ")";
  if (degree() > 1) s += "/" + modulus().to_string('x');
  return s;
}

bool operator==(const FiniteField& a, const FiniteField& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus;
}

void require_same_field(const FiniteField& a, const FiniteField& b) {
  if (!(a == b)) raise(ErrorCode::ParentMismatch, a.to_string() + " vs " + b.to_string());
}

// Element

bool Element::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t c) { return c == 0; });
}

bool Element::is_one() const {
  return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t c) { return c == 0; });
}

bool Element::in_prime_field() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint32_t Element::prime_value() const {
  if (!in_prime_field()) raise(ErrorCode::InvalidArgument, to_string() + " is not in the prime field");
  return c_[0];
}

std::uint64_t Element::index() const {
  const std::uint64_t p = field_.characteristic();
  (void)field_.order();
  std::uint64_t idx = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) idx = idx * p + *it;
  return idx;
}

Element Element::operator-() const {
  const auto p = field_.characteristic();
  std::vector<std::uint32_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] == 0 ? 0 : p - c_[i];
  return Element(field_, std::move(c));
}

Element operator+(const Element& a, const Element& b) {
  require_same_field(a.field_, b.field_);
  const std::uint32_t p = a.field_.characteristic();
  std::vector<std::uint32_t> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint32_t s = a.c_[i] + b.c_[i];
    c[i] = s >= p ? s - p : s;
  }
  return Element(a.field_, std::move(c));
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  require_same_field(a.field_, b.field_);
  const std::uint64_t p = a.field_.characteristic();
  const std::size_t n = a.c_.size();
  std::vector<std::uint64_t> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
  }
  // g^n = -(m_0 + m_1 g + ... + m_{n-1} g^{n-1})
  const auto& m = a.field_.modulus().coeffs();
  for (std::size_t k = prod.size(); k-- > n;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      prod[k - n + j] = (prod[k - n + j] + (p - c) * m[j]) % p;
    }
  }
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return Element(a.field_, std::move(out));
}

Element operator/(const Element& a, const Element& b) { return a * b.inv(); }

Element Element::scaled(std::uint32_t k) const {
  const std::uint64_t p = field_.characteristic();
  std::vector<std::uint32_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = static_cast<std::uint32_t>(c_[i] * (k % p) % p);
  return Element(field_, std::move(c));
}

Element Element::inv() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero in " + field_.to_string());
  auto eg = extended_gcd(as_poly(), field_.modulus());
  return field_.from_poly(eg.s);
}

Element Element::pow(std::uint64_t e) const {
  Element result = field_.one();
  Element base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Element Element::frobenius(int k) const {
  Element x = *this;
  for (int i = 0; i < k; ++i) x = x.pow(field_.characteristic());
  return x;
}

Element Element::pth_root() const { return frobenius(field_.degree() - 1); }

PolyFp Element::as_poly() const { return PolyFp(field_.characteristic(), c_); }

bool operator==(const Element& a, const Element& b) {
  return a.c_ == b.c_ && a.field_ == b.field_;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  require_same_field(a.field_, b.field_);
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
  }
  return std::strong_ordering::equal;
}

std::string Element::to_string() const { return as_poly().to_string('g'); }

Element trace_to_prime(const Element& x) {
  Element acc = x;
  Element term = x;
  for (int i = 1; i < x.field().degree(); ++i) {
    term = term.frobenius();
    acc += term;
  }
  return acc;
}

}  // namespace asf
