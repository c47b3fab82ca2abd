#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace asf {

bool is_prime(std::uint64_t n);

/// Modular inverse of a nonzero residue modulo the prime p.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// If q = p^n for a prime p, returns (p, n); otherwise (0, 0).
std::pair<std::uint32_t, int> prime_power_decompose(std::uint64_t q);

/// Dense univariate polynomial over the prime field F_p.
/// Coefficients are stored low degree first and kept trimmed.
class PolyFp {
 public:
  explicit PolyFp(std::uint32_t p = 2);
  PolyFp(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static PolyFp constant(std::uint32_t p, std::int64_t c);
  static PolyFp monomial(std::uint32_t p, int degree, std::uint32_t c = 1);
  static PolyFp x(std::uint32_t p) { return monomial(p, 1); }

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  std::uint32_t coeff(int i) const;
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  PolyFp monic() const;
  PolyFp derivative() const;
  std::uint32_t eval(std::uint32_t x) const;

  PolyFp operator-() const;
  friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator/(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator%(const PolyFp& a, const PolyFp& b);
  friend bool operator==(const PolyFp& a, const PolyFp& b) = default;

  PolyFp scaled(std::uint32_t c) const;

  /// Integer code sum c_i p^i; orders polynomials of equal degree lexicographically
  /// from the leading coefficient down.
  std::uint64_t code() const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();

  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b);

/// Monic gcd; gcd(0, 0) = 0.
PolyFp gcd(const PolyFp& a, const PolyFp& b);

/// Returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  PolyFp g, s, t;
};
ExtendedGcd extended_gcd(const PolyFp& a, const PolyFp& b);

PolyFp powmod(const PolyFp& base, std::uint64_t e, const PolyFp& mod);

/// Ben-Or: f irreducible iff gcd(x^{p^i} - x, f) = 1 for all i <= deg/2.
bool is_irreducible(const PolyFp& f);

/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible_trial_division(const PolyFp& f);

/// Monic irreducible factor of f of least degree; among several of that
/// degree, the one with the least code. Requires deg f >= 1.
PolyFp least_irreducible_factor(const PolyFp& f);

/// Lexicographically least monic irreducible of the given degree.
PolyFp least_irreducible(std::uint32_t p, int degree);

}  // namespace asf
