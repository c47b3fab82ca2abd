#pragma once

#include <string>

#include "asf/finite_field.hpp"
#include "asf/poly_fp.hpp"

namespace asf {

/// Element of F_p(s): numerator/denominator in lowest terms with a monic
/// denominator. Zero is 0/1.
class RationalFunction {
 public:
  explicit RationalFunction(std::uint32_t p);
  explicit RationalFunction(const PolyFp& numerator);
  RationalFunction(const PolyFp& numerator, const PolyFp& denominator);

  std::uint32_t characteristic() const { return num_.characteristic(); }
  const PolyFp& numerator() const { return num_; }
  const PolyFp& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the function lies in F_p (both parts constant).
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;
  RationalFunction inv() const;

  /// Evaluates at a point of any field of the same characteristic; throws
  /// DivisionByZero at a pole.
  Element eval(const Element& x) const;

  std::string to_string() const;

 private:
  PolyFp num_;
  PolyFp den_;
};

}  // namespace asf
