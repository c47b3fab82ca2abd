#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asf/finite_field.hpp"

namespace asf {

/// Truncated Laurent series over F_q with absolute precision: the
/// coefficients of t^k are known for k < precision(). Normalized so that
/// the coefficient at valuation() is nonzero; a series that vanishes to
/// its precision is "zero within precision" and reports valuation() ==
/// precision().
class LaurentSeries {
 public:
  static constexpr std::int64_t kMaxTerms = std::int64_t{1} << 22;

  /// Zero to the given precision.
  LaurentSeries(FiniteField base, std::int64_t prec);

  static LaurentSeries from_terms(const FiniteField& base, const std::map<std::int64_t, Element>& terms, std::int64_t prec);
  /// coeffs[i] multiplies t^{start+i}.
  static LaurentSeries from_coeffs(const FiniteField& base, std::int64_t start, std::vector<Element> coeffs, std::int64_t prec);
  static LaurentSeries monomial(const Element& c, std::int64_t exponent, std::int64_t prec);

  const FiniteField& base() const { return base_; }
  std::int64_t valuation() const { return val_; }
  std::int64_t precision() const { return prec_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^k; throws InsufficientPrecision for k >= precision().
  Element coeff(std::int64_t k) const;
  const Element& leading_coeff() const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y);
  friend LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y);
  friend LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y);
  friend bool operator==(const LaurentSeries& x, const LaurentSeries& y);
  LaurentSeries inv() const;

  /// x^p, exact to p * precision().
  LaurentSeries frobenius() const;
  LaurentSeries truncated(std::int64_t prec) const;

  /// Coefficient of t^0; throws NegativeValuation when v(x) < 0.
  Element residue() const;

  /// Terms in the literal grammar, e.g. "t^-2+(g+1)*t^0+t^3"; "0" when zero.
  std::string to_string() const;

 private:
  LaurentSeries(FiniteField base, std::int64_t val, std::vector<Element> coeffs, std::int64_t prec);
  void normalize();

  FiniteField base_;
  std::int64_t val_;
  std::vector<Element> coeffs_;
  std::int64_t prec_;
};

/// x^p - x.
LaurentSeries wp(const LaurentSeries& x);

struct SolveOutcome {
  enum class Tag { Solved, UnsolvableNegVal, UnsolvableResidue };

  Tag tag;
  std::optional<LaurentSeries> root;              // Solved
  std::optional<std::int64_t> negval_witness;     // UnsolvableNegVal: valuation not divisible by p
  std::optional<Element> residue_witness;         // UnsolvableResidue: residue with nonzero trace
  std::vector<std::int64_t> residual_valuations;  // v(wp(x) - a) along the lifting loop
};

std::string_view to_string(SolveOutcome::Tag tag);

/// Solves wp(x) = a in F_q((t)) to absolute precision out_prec, or returns
/// the valuation/residue obstruction that rules out a root in F_q((t)).
/// Throws InsufficientPrecision when a is known to less than out_prec.
SolveOutcome as_solve(const LaurentSeries& a, std::int64_t out_prec);

/// Z, Z[1/n] or Q.
struct ValueGroupDesc {
  enum class Kind { Integers, Localized, Rationals };
  Kind kind = Kind::Integers;
  std::uint64_t inverted = 1;  // n for Z[1/n]

  static ValueGroupDesc integers() { return {Kind::Integers, 1}; }
  static ValueGroupDesc localized(std::uint64_t n) { return {Kind::Localized, n}; }
  static ValueGroupDesc rationals() { return {Kind::Rationals, 1}; }

  std::string to_string() const;
  friend bool operator==(const ValueGroupDesc&, const ValueGroupDesc&) = default;
};

/// `Z`, `Z[1/n]` or `Q`.
ValueGroupDesc parse_value_group(std::string_view text);

struct DivisibilityResult {
  bool divisible;
  std::optional<std::string> witness;  // an element with no p-th part, e.g. "1"
};

DivisibilityResult value_group_p_divisible(const ValueGroupDesc& group, std::uint32_t p);

}  // namespace asf
