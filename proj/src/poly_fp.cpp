#include "asf/poly_fp.hpp"

#include <algorithm>
#include <random>

#include "asf/error.hpp"

namespace asf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::pair<std::uint32_t, int> prime_power_decompose(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  int n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1 || p > 0xffffffffULL) return {0, 0};
  return {static_cast<std::uint32_t>(p), n};
}

PolyFp::PolyFp(std::uint32_t p) : p_(p) {}

PolyFp::PolyFp(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

PolyFp PolyFp::constant(std::uint32_t p, std::int64_t c) {
  std::int64_t r = c % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return PolyFp(p, {static_cast<std::uint32_t>(r)});
}

PolyFp PolyFp::monomial(std::uint32_t p, int degree, std::uint32_t c) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return PolyFp(p, std::move(v));
}

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint32_t PolyFp::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

PolyFp PolyFp::scaled(std::uint32_t c) const {
  std::vector<std::uint32_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    v[i] = static_cast<std::uint32_t>(std::uint64_t{c_[i]} * c % p_);
  }
  return PolyFp(p_, std::move(v));
}

PolyFp PolyFp::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(lead(), p_));
}

PolyFp PolyFp::derivative() const {
  std::vector<std::uint32_t> v;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v.push_back(static_cast<std::uint32_t>(std::uint64_t{c_[i]} * (i % p_) % p_));
  }
  return PolyFp(p_, std::move(v));
}

std::uint32_t PolyFp::eval(std::uint32_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
  return static_cast<std::uint32_t>(acc);
}

PolyFp PolyFp::operator-() const {
  std::vector<std::uint32_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] == 0 ? 0 : p_ - c_[i];
  return PolyFp(p_, std::move(v));
}

static void check_char(const PolyFp& a, const PolyFp& b) {
  if (a.characteristic() != b.characteristic()) {
    raise(ErrorCode::ParentMismatch, "polynomials over different prime fields");
  }
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
  check_char(a, b);
  const auto p = a.p_;
  std::vector<std::uint32_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = static_cast<std::uint32_t>((std::uint64_t{a.coeff(static_cast<int>(i))} + b.coeff(static_cast<int>(i))) % p);
  }
  return PolyFp(p, std::move(v));
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) { return a + (-b); }

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  check_char(a, b);
  if (a.is_zero() || b.is_zero()) return PolyFp(a.p_);
  const auto p = a.p_;
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
    }
  }
  return PolyFp(p, std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b) {
  check_char(a, b);
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  const auto p = a.characteristic();
  if (a.degree() < b.degree()) return {PolyFp(p), a};
  std::vector<std::uint32_t> r = a.coeffs();
  const auto& d = b.coeffs();
  const int db = b.degree();
  const std::uint32_t lead_inv = inv_mod(b.lead(), p);
  std::vector<std::uint32_t> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int i = a.degree(); i >= db; --i) {
    const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{r[static_cast<std::size_t>(i)]} * lead_inv % p);
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = static_cast<std::uint32_t>((slot + std::uint64_t{p - c} * d[static_cast<std::size_t>(j)]) % p);
    }
  }
  return {PolyFp(p, std::move(q)), PolyFp(p, std::move(r))};
}

PolyFp operator/(const PolyFp& a, const PolyFp& b) { return divmod(a, b).first; }
PolyFp operator%(const PolyFp& a, const PolyFp& b) { return divmod(a, b).second; }

PolyFp gcd(const PolyFp& a, const PolyFp& b) {
  PolyFp x = a, y = b;
  while (!y.is_zero()) {
    PolyFp r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const PolyFp& a, const PolyFp& b) {
  const auto p = a.characteristic();
  PolyFp r0 = a, r1 = b;
  PolyFp s0 = PolyFp::constant(p, 1), s1(p);
  PolyFp t0(p), t1 = PolyFp::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    PolyFp s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    PolyFp t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const std::uint32_t li = inv_mod(r0.lead(), p);
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

PolyFp powmod(const PolyFp& base, std::uint64_t e, const PolyFp& mod) {
  PolyFp result = PolyFp::constant(base.characteristic(), 1) % mod;
  PolyFp b = base % mod;
  while (e > 0) {
    if (e & 1U) result = (result * b) % mod;
    e >>= 1U;
    if (e > 0) b = (b * b) % mod;
  }
  return result;
}

bool is_irreducible(const PolyFp& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const auto p = f.characteristic();
  const PolyFp x = PolyFp::x(p);
  PolyFp frob = x % f;
  for (int i = 1; i <= f.degree() / 2; ++i) {
    frob = powmod(frob, p, f);
    if (gcd(frob - x, f).degree() != 0) return false;
  }
  return true;
}

bool is_irreducible_trial_division(const PolyFp& f) {
  if (f.degree() < 1) return false;
  const auto p = f.characteristic();
  for (int d = 1; d <= f.degree() / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t rest = code;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      c.back() = 1;
      if ((f % PolyFp(p, std::move(c))).is_zero()) return false;
    }
  }
  return true;
}

namespace {

// g is monic, squarefree, and all its irreducible factors have degree k.
void split_equal_degree(const PolyFp& g, int k, std::mt19937_64& rng, std::vector<PolyFp>& out) {
  if (g.degree() <= k) {
    out.push_back(g);
    return;
  }
  const auto p = g.characteristic();
  std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
  for (;;) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(g.degree()));
    for (auto& slot : c) slot = digit(rng);
    const PolyFp u(p, std::move(c));
    if (u.degree() < 1) continue;
    PolyFp w(p);
    if (p == 2) {
      PolyFp t = u;
      w = u;
      for (int i = 1; i < k; ++i) {
        t = (t * t) % g;
        w = w + t;
      }
    } else {
      // u^((p^k-1)/2) = (u^{1+p+...+p^{k-1}})^{(p-1)/2}
      PolyFp t = u;
      PolyFp norm = u;
      for (int i = 1; i < k; ++i) {
        t = powmod(t, p, g);
        norm = (norm * t) % g;
      }
      w = powmod(norm, (p - 1) / 2, g) - PolyFp::constant(p, 1);
    }
    const PolyFp d = gcd(w, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_equal_degree(d, k, rng, out);
      split_equal_degree(g / d, k, rng, out);
      return;
    }
  }
}

}  // namespace

PolyFp least_irreducible_factor(const PolyFp& f) {
  if (f.degree() < 1) raise(ErrorCode::InvalidArgument, "least_irreducible_factor needs a nonconstant polynomial");
  const auto p = f.characteristic();
  const PolyFp m = f.monic();
  const PolyFp x = PolyFp::x(p);
  PolyFp h = x % m;
  for (int k = 1; k <= m.degree(); ++k) {
    h = powmod(h, p, m);
    const PolyFp g = gcd(h - x, m);
    if (g.degree() <= 0) continue;
    std::vector<PolyFp> factors;
    std::mt19937_64 rng(0x5eedULL);
    split_equal_degree(g, k, rng, factors);
    return *std::min_element(factors.begin(), factors.end(),
                             [](const PolyFp& a, const PolyFp& b) {
                               return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(),
                                                                   b.coeffs().rbegin(), b.coeffs().rend());
                             });
  }
  return m;
}

PolyFp least_irreducible(std::uint32_t p, int degree) {
  if (!is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p));
  if (degree < 1) raise(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  // Lower coefficients enumerated as a base-p counter, most significant first.
  std::vector<std::uint32_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  for (;;) {
    PolyFp f(p, c);
    if (is_irreducible(f)) return f;
    int i = 0;
    while (i < degree) {
      auto& slot = c[static_cast<std::size_t>(i)];
      if (++slot < p) break;
      slot = 0;
      ++i;
    }
    if (i == degree) break;
  }
  raise(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

std::uint64_t PolyFp::code() const {
  std::uint64_t code = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) code = code * p_ + *it;
  return code;
}

std::string PolyFp::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const auto c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace asf
