#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "asf/poly_fp.hpp"

namespace asf {

class Element;

/// A concrete finite field F_{p^n} = F_p[g]/(modulus). Cheap to copy: all
/// copies share one immutable descriptor. Two fields compare equal when
/// their characteristic and modulus agree.
class FiniteField {
 public:
  /// Validating constructor: p prime, modulus monic and irreducible over F_p.
  static FiniteField make(std::uint32_t p, const PolyFp& modulus);
  /// F_{p^n} with the lexicographically least monic irreducible modulus.
  static FiniteField canonical(std::uint32_t p, int n);
  static FiniteField prime(std::uint32_t p) { return canonical(p, 1); }

  std::uint32_t characteristic() const { return data_->p; }
  int degree() const { return data_->n; }
  const PolyFp& modulus() const { return data_->modulus; }

  /// True when p^n fits in 64 bits.
  bool order_fits() const { return data_->order != 0; }
  /// p^n; throws FieldTooLarge when it does not fit in 64 bits.
  std::uint64_t order() const;
  /// Fields small enough for exhaustive scans.
  bool enumerable() const { return order_fits() && data_->order <= kEnumerableLimit; }

  Element zero() const;
  Element one() const;
  /// The class of g, the root of the modulus.
  Element gen() const;
  /// Image of an integer in the prime subfield.
  Element from_int(std::int64_t c) const;
  Element from_coeffs(std::vector<std::uint32_t> coeffs) const;
  Element from_poly(const PolyFp& f) const;
  /// Inverse of Element::index().
  Element from_index(std::uint64_t index) const;
  Element random(std::mt19937_64& rng) const;

  /// All p^n elements in enumeration order (increasing index).
  std::vector<Element> elements() const;

  std::string to_string() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b);

  static constexpr std::uint64_t kEnumerableLimit = std::uint64_t{1} << 22;

 private:
  struct Data {
    std::uint32_t p;
    int n;
    PolyFp modulus;
    std::uint64_t order;  // 0 on overflow
  };
  explicit FiniteField(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend class Element;
};

/// An element of a FiniteField, stored as its coordinates in the power
/// basis 1, g, ..., g^{n-1}. Ordered by enumeration order.
class Element {
 public:
  const FiniteField& field() const { return field_; }
  std::span<const std::uint32_t> coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool in_prime_field() const;
  /// Value of an element of the prime subfield as an integer in [0, p).
  std::uint32_t prime_value() const;

  /// sum c_i p^i. Requires field().order_fits().
  std::uint64_t index() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  Element scaled(std::uint32_t c) const;
  Element inv() const;
  Element pow(std::uint64_t e) const;
  /// x^{p^k}.
  Element frobenius(int k = 1) const;
  /// The unique y with y^p = x.
  Element pth_root() const;

  PolyFp as_poly() const;

  friend bool operator==(const Element& a, const Element& b);
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

  /// Polynomial in the generator g, e.g. "g^2+2*g+1".
  std::string to_string() const;

 private:
  Element(FiniteField field, std::vector<std::uint32_t> c) : field_(std::move(field)), c_(std::move(c)) {}

  FiniteField field_;
  std::vector<std::uint32_t> c_;

  friend class FiniteField;
};

void require_same_field(const FiniteField& a, const FiniteField& b);

/// Tr_{F_{p^n}/F_p}(x) = sum_{i<n} x^{p^i}, returned as an element of the same field.
Element trace_to_prime(const Element& x);

}  // namespace asf
