#include "asf/fq_poly.hpp"

#include <algorithm>
#include <random>

#include "asf/error.hpp"

namespace asf {

FqPoly::FqPoly(FiniteField field) : field_(std::move(field)) {}

FqPoly::FqPoly(FiniteField field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_) require_same_field(field_, c.field());
  trim();
}

FqPoly FqPoly::lift(const FiniteField& field, const PolyFp& f) {
  if (f.characteristic() != field.characteristic()) {
    raise(ErrorCode::ParentMismatch, "characteristic mismatch when lifting " + f.to_string());
  }
  std::vector<Element> c;
  c.reserve(f.coeffs().size());
  for (auto v : f.coeffs()) c.push_back(field.from_int(v));
  return FqPoly(field, std::move(c));
}

FqPoly FqPoly::monomial(const Element& c, int degree) {
  std::vector<Element> v(static_cast<std::size_t>(degree) + 1, c.field().zero());
  v.back() = c;
  return FqPoly(c.field(), std::move(v));
}

FqPoly FqPoly::x(const FiniteField& field) { return monomial(field.one(), 1); }

void FqPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Element FqPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return field_.zero();
  return c_[static_cast<std::size_t>(i)];
}

FqPoly FqPoly::scaled(const Element& c) const {
  std::vector<Element> v;
  v.reserve(c_.size());
  for (const auto& a : c_) v.push_back(a * c);
  return FqPoly(field_, std::move(v));
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inv());
}

FqPoly FqPoly::derivative() const {
  std::vector<Element> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i].scaled(static_cast<std::uint32_t>(i % field_.characteristic())));
  return FqPoly(field_, std::move(v));
}

Element FqPoly::eval(const Element& x) const {
  require_same_field(field_, x.field());
  Element acc = field_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

FqPoly FqPoly::operator-() const {
  std::vector<Element> v;
  v.reserve(c_.size());
  for (const auto& a : c_) v.push_back(-a);
  return FqPoly(field_, std::move(v));
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
  require_same_field(a.field_, b.field_);
  std::vector<Element> v;
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
  return FqPoly(a.field_, std::move(v));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) { return a + (-b); }

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return FqPoly(a.field_);
  std::vector<Element> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return FqPoly(a.field_, std::move(v));
}

bool operator==(const FqPoly& a, const FqPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  const auto& field = a.field();
  if (a.degree() < b.degree()) return {FqPoly(field), a};
  std::vector<Element> r = a.coeffs();
  const int db = b.degree();
  const Element lead_inv = b.lead().inv();
  std::vector<Element> q(static_cast<std::size_t>(a.degree() - db + 1), field.zero());
  for (int i = a.degree(); i >= db; --i) {
    const Element c = r[static_cast<std::size_t>(i)] * lead_inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {FqPoly(field, std::move(q)), FqPoly(field, std::move(r))};
}

FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }
FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divmod(a, b).first; }

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FqPoly powmod(const FqPoly& base, std::uint64_t e, const FqPoly& mod) {
  FqPoly result = FqPoly::monomial(base.field().one(), 0) % mod;
  FqPoly b = base % mod;
  while (e > 0) {
    if (e & 1U) result = (result * b) % mod;
    e >>= 1U;
    if (e > 0) b = (b * b) % mod;
  }
  return result;
}

FqPoly frobenius_power_of_x(const FqPoly& f, int k) {
  const auto& field = f.field();
  FqPoly h = FqPoly::x(field) % f;
  const int steps = k * field.degree();
  for (int i = 0; i < steps; ++i) h = powmod(h, field.characteristic(), f);
  return h;
}

namespace {

FqPoly random_poly(const FiniteField& field, int below_degree, std::mt19937_64& rng) {
  std::vector<Element> c;
  c.reserve(static_cast<std::size_t>(below_degree));
  for (int i = 0; i < below_degree; ++i) c.push_back(field.random(rng));
  return FqPoly(field, std::move(c));
}

// g is monic, squarefree and a product of distinct linear factors.
void split_linear(const FqPoly& g, std::mt19937_64& rng, std::vector<Element>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0));
    return;
  }
  const auto& field = g.field();
  const std::uint32_t p = field.characteristic();
  const int n = field.degree();
  for (;;) {
    FqPoly u = random_poly(field, g.degree(), rng);
    if (u.degree() < 1) continue;
    FqPoly w(field);
    if (p == 2) {
      // Absolute trace of u evaluated at every root of g.
      FqPoly t = u;
      w = u;
      for (int i = 1; i < n; ++i) {
        t = (t * t) % g;
        w = w + t;
      }
    } else {
      // u^((q-1)/2) = (u^{1+p+...+p^{n-1}})^{(p-1)/2}
      FqPoly t = u;
      FqPoly norm = u;
      for (int i = 1; i < n; ++i) {
        t = powmod(t, p, g);
        norm = (norm * t) % g;
      }
      w = powmod(norm, (p - 1) / 2, g) - FqPoly::monomial(field.one(), 0);
    }
    FqPoly d = gcd(w, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(g / d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Element> roots(const FqPoly& f) {
  if (f.is_zero()) raise(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  if (f.degree() == 0) return {};
  FqPoly m = f.monic();
  FqPoly g = gcd(frobenius_power_of_x(m, 1) - FqPoly::x(f.field()), m);
  std::vector<Element> out;
  std::mt19937_64 rng(0x5eedULL);
  split_linear(g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> roots_by_scan(const FqPoly& f) {
  if (f.is_zero()) raise(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Element> out;
  for (const auto& x : f.field().elements()) {
    if (f.eval(x).is_zero()) out.push_back(x);
  }
  return out;
}

int min_factor_degree(const FqPoly& f) {
  if (f.degree() < 1) raise(ErrorCode::InvalidArgument, "min_factor_degree needs a nonconstant polynomial");
  FqPoly m = f.monic();
  const FqPoly x = FqPoly::x(f.field());
  FqPoly h = x % m;
  const auto& field = f.field();
  for (int k = 1; k <= m.degree(); ++k) {
    for (int i = 0; i < field.degree(); ++i) h = powmod(h, field.characteristic(), m);
    if (gcd(h - x, m).degree() > 0) return k;
  }
  return m.degree();
}

std::string FqPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    std::string cs = c.to_string();
    const bool compound = cs.find('+') != std::string::npos;
    if (i == 0) {
      out += cs;
      continue;
    }
    if (!c.is_one()) out += (compound ? "(" + cs + ")" : cs) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// Embedding

Embedding Embedding::least_root(const FiniteField& source, const FiniteField& target) {
  if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0) {
    raise(ErrorCode::NoEmbedding, source.to_string() + " does not embed in " + target.to_string());
  }
  if (source == target) return identity(source);
  auto rs = roots(FqPoly::lift(target, source.modulus()));
  if (rs.empty()) raise(ErrorCode::CrossCheckFailure, "modulus has no root in an extension of matching degree");
  return Embedding(source, target, rs.front());
}

Embedding Embedding::identity(const FiniteField& field) { return Embedding(field, field, field.gen()); }

Element Embedding::operator()(const Element& x) const {
  require_same_field(source_, x.field());
  Element acc = target_.zero();
  auto c = x.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * gen_image_ + target_.from_int(c[i]);
  return acc;
}

FqPoly Embedding::operator()(const FqPoly& f) const {
  std::vector<Element> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back((*this)(a));
  return FqPoly(target_, std::move(c));
}

}  // namespace asf
