#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asf/finite_field.hpp"

namespace asf {

/// Dense univariate polynomial with coefficients in a FiniteField.
class FqPoly {
 public:
  explicit FqPoly(FiniteField field);
  FqPoly(FiniteField field, std::vector<Element> coeffs);

  /// Coefficientwise image of an F_p polynomial.
  static FqPoly lift(const FiniteField& field, const PolyFp& f);
  static FqPoly monomial(const Element& c, int degree);
  static FqPoly x(const FiniteField& field);

  const FiniteField& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Element coeff(int i) const;
  const Element& lead() const { return c_.back(); }
  const std::vector<Element>& coeffs() const { return c_; }

  FqPoly monic() const;
  FqPoly derivative() const;
  Element eval(const Element& x) const;

  FqPoly operator-() const;
  friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator%(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator/(const FqPoly& a, const FqPoly& b);
  friend bool operator==(const FqPoly& a, const FqPoly& b);

  FqPoly scaled(const Element& c) const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();

  FiniteField field_;
  std::vector<Element> c_;
};

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
FqPoly gcd(const FqPoly& a, const FqPoly& b);
FqPoly powmod(const FqPoly& base, std::uint64_t e, const FqPoly& mod);

/// x^{q^k} mod f, where q is the order of the coefficient field.
FqPoly frobenius_power_of_x(const FqPoly& f, int k);

/// All distinct roots of f in its coefficient field, in enumeration order.
/// Uses Cantor-Zassenhaus splitting; the result does not depend on the seed.
std::vector<Element> roots(const FqPoly& f);

/// Exhaustive root scan; only for enumerable fields.
std::vector<Element> roots_by_scan(const FqPoly& f);

/// Degree of the smallest irreducible factor of f (distinct-degree factorization).
int min_factor_degree(const FqPoly& f);

/// A field embedding F_{p^m} -> F_{p^n}, determined by the image of the generator.
class Embedding {
 public:
  /// Maps the source generator to the least root (enumeration order) of its
  /// modulus in the target. Throws NoEmbedding when m does not divide n.
  static Embedding least_root(const FiniteField& source, const FiniteField& target);
  static Embedding identity(const FiniteField& field);

  const FiniteField& source() const { return source_; }
  const FiniteField& target() const { return target_; }
  const Element& generator_image() const { return gen_image_; }

  Element operator()(const Element& x) const;
  FqPoly operator()(const FqPoly& f) const;

 private:
  Embedding(FiniteField source, FiniteField target, Element gen_image)
      : source_(std::move(source)), target_(std::move(target)), gen_image_(std::move(gen_image)) {}

  FiniteField source_;
  FiniteField target_;
  Element gen_image_;
};

}  // namespace asf
