#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asf/finite_field.hpp"
#include "asf/fq_poly.hpp"

namespace asf {

/// sum_i c_i x^{p^i} with coefficients in a finite field. Trimmed: the
/// last coefficient is nonzero unless the polynomial is zero.
class AdditivePolynomial {
 public:
  explicit AdditivePolynomial(FiniteField field);
  AdditivePolynomial(FiniteField field, std::vector<Element> coeffs);

  /// x^p - x over the given field.
  static AdditivePolynomial artin_schreier(const FiniteField& field);
  /// x^{p^k}.
  static AdditivePolynomial frobenius_power(const FiniteField& field, int k);

  const FiniteField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  const std::vector<Element>& coeffs() const { return c_; }
  /// Index of the top p-power, -1 for zero.
  int p_degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Evaluates at an element of the coefficient field.
  Element operator()(const Element& x) const;

  /// Dense form; the degree is p^{p_degree()}.
  FqPoly to_poly() const;

  AdditivePolynomial scaled(const Element& a) const;
  friend AdditivePolynomial operator+(const AdditivePolynomial& f, const AdditivePolynomial& g);
  friend bool operator==(const AdditivePolynomial& f, const AdditivePolynomial& g);

  /// E.g. "g*x^2+g*x".
  std::string to_string() const;

 private:
  FiniteField field_;
  std::vector<Element> c_;
};

/// Recognizes sum c_i x^{p^i}; throws NotAdditive otherwise.
AdditivePolynomial from_general_poly(const FqPoly& g);

/// f o g.
AdditivePolynomial ore_compose(const AdditivePolynomial& f, const AdditivePolynomial& g);

struct KernelResult {
  std::vector<Element> roots;  // enumeration order
  int dimension;               // over F_p
};

/// Roots of f in K. Coefficients are carried into K by the least-root
/// embedding when the coefficient field differs from K.
KernelResult kernel(const AdditivePolynomial& f, const FiniteField& field);

struct CanonicalForm {
  Element a;
  int n;
};

/// (a, n) with f = a * (x^p - x)^{p^n}, or nullopt when the geometric kernel
/// of f is not F_p.
std::optional<CanonicalForm> canonical_form(const AdditivePolynomial& f);

/// a * (x^p - x)^{p^n} expanded.
AdditivePolynomial expand_canonical(const Element& a, int n);

struct SurjectivityResult {
  bool surjective;
  std::optional<Element> witness;  // least element outside f(K)
};
SurjectivityResult is_surjective_on(const AdditivePolynomial& f, const FiniteField& field);

/// Maps f into an extension of its coefficient field.
AdditivePolynomial embed(const AdditivePolynomial& f, const Embedding& e);

}  // namespace asf
