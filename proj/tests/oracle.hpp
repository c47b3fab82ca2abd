#pragma once
// Naive reference arithmetic, independent of the library code paths.

#include <cstdint>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

/// Remainder of a by the monic b over F_p.
inline Vec rem(Vec a, const Vec& b, std::int64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const std::int64_t c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
    trim(a);
  }
  return a;
}

inline Vec from_code(std::uint64_t code, std::int64_t p, std::size_t len) {
  Vec v(len);
  for (auto& c : v) {
    c = static_cast<std::int64_t>(code % p);
    code /= p;
  }
  return v;
}

/// Irreducible iff no monic polynomial of degree 1..n/2 divides it.
inline bool irreducible(const Vec& f, std::int64_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Vec g = from_code(code, p, d);
      g.push_back(1);
      if (rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Least monic irreducible of degree n, lower coefficients as a base-p counter.
inline Vec least_irreducible(std::int64_t p, std::size_t n) {
  for (std::uint64_t code = 0;; ++code) {
    Vec f = from_code(code, p, n);
    f.push_back(1);
    if (irreducible(f, p)) return f;
  }
}

/// F_p[x]/(modulus) on index-coded elements sum c_i p^i.
struct NaiveField {
  std::int64_t p;
  Vec modulus;
  std::size_t n;
  std::uint64_t q;

  NaiveField(std::int64_t p_, Vec m) : p(p_), modulus(std::move(m)), n(modulus.size() - 1), q(1) {
    for (std::size_t i = 0; i < n; ++i) q *= p;
  }

  Vec vec(std::uint64_t i) const { return from_code(i, p, n); }
  std::uint64_t index(Vec v) const {
    v.resize(n, 0);
    std::uint64_t r = 0;
    for (std::size_t i = n; i-- > 0;) r = r * p + mod(v[i], p);
    return r;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    Vec x = vec(a), y = vec(b);
    for (std::size_t i = 0; i < n; ++i) x[i] += y[i];
    return index(x);
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    const Vec x = vec(a), y = vec(b);
    Vec z(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) z[i + j] = mod(z[i + j] + x[i] * y[j], p);
    return index(rem(z, modulus, p));
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  std::uint64_t neg(std::uint64_t a) const {
    Vec x = vec(a);
    for (auto& c : x) c = -c;
    return index(x);
  }
  std::uint64_t wp(std::uint64_t a) const { return add(pow(a, p), neg(a)); }
  std::uint64_t trace(std::uint64_t a) const {
    std::uint64_t s = 0, x = a;
    for (std::size_t i = 0; i < n; ++i) {
      s = add(s, x);
      x = pow(x, p);
    }
    return s;
  }
};

}  // namespace oracle
