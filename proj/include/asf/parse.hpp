#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "asf/finite_field.hpp"
#include "asf/fq_poly.hpp"

namespace asf {

/// `GF(q)`, `GF(p^n)` or either followed by `/<modulus in x>`.
FiniteField parse_field(std::string_view text);

/// Element literal: polynomial in the generator g with integer coefficients.
Element parse_element(std::string_view text, const FiniteField& field);

/// Comma-separated element literals, e.g. `1,g,(g+1)`.
std::vector<Element> parse_element_list(std::string_view text, const FiniteField& field);

/// Polynomial over F_p in x with integer coefficients.
PolyFp parse_fp_poly(std::string_view text, std::uint32_t p);

/// Polynomial in x whose coefficients are element literals, e.g. `g*x^2+(g+1)*x`.
FqPoly parse_fq_poly(std::string_view text, const FiniteField& field);

/// Sum of terms `c*t^k` (k may be negative) as exponent -> coefficient.
std::map<std::int64_t, Element> parse_series_terms(std::string_view text, const FiniteField& field);

}  // namespace asf
