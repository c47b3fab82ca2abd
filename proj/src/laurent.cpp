#include "asf/laurent.hpp"

#include <algorithm>
#include <regex>

#include "asf/artin_schreier.hpp"
#include "asf/error.hpp"

namespace asf {

LaurentSeries::LaurentSeries(FiniteField base, std::int64_t prec) : base_(std::move(base)), val_(prec), prec_(prec) {}

LaurentSeries::LaurentSeries(FiniteField base, std::int64_t val, std::vector<Element> coeffs, std::int64_t prec)
    : base_(std::move(base)), val_(val), coeffs_(std::move(coeffs)), prec_(prec) {
  if (prec_ - val_ > kMaxTerms) raise(ErrorCode::InvalidArgument, "series has too many terms");
  normalize();
}

void LaurentSeries::normalize() {
  // Drop terms at or beyond the precision, then leading zeros.
  const std::int64_t known = std::max<std::int64_t>(0, prec_ - val_);
  if (static_cast<std::int64_t>(coeffs_.size()) > known) coeffs_.resize(static_cast<std::size_t>(known), base_.zero());
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    val_ = prec_;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  val_ += static_cast<std::int64_t>(lead);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LaurentSeries LaurentSeries::from_terms(const FiniteField& base, const std::map<std::int64_t, Element>& terms, std::int64_t prec) {
  std::map<std::int64_t, Element> kept;
  for (const auto& [k, c] : terms) {
    require_same_field(base, c.field());
    if (k < prec && !c.is_zero()) kept.emplace(k, c);
  }
  if (kept.empty()) return LaurentSeries(base, prec);
  const std::int64_t start = kept.begin()->first;
  const std::int64_t end = kept.rbegin()->first + 1;
  if (end - start > kMaxTerms) raise(ErrorCode::InvalidArgument, "series has too many terms");
  std::vector<Element> c(static_cast<std::size_t>(end - start), base.zero());
  for (const auto& [k, v] : kept) c[static_cast<std::size_t>(k - start)] = v;
  return LaurentSeries(base, start, std::move(c), prec);
}

LaurentSeries LaurentSeries::from_coeffs(const FiniteField& base, std::int64_t start, std::vector<Element> coeffs, std::int64_t prec) {
  for (const auto& c : coeffs) require_same_field(base, c.field());
  return LaurentSeries(base, start, std::move(coeffs), prec);
}

LaurentSeries LaurentSeries::monomial(const Element& c, std::int64_t exponent, std::int64_t prec) {
  return LaurentSeries(c.field(), exponent, {c}, prec);
}

Element LaurentSeries::coeff(std::int64_t k) const {
  if (k >= prec_) raise(ErrorCode::InsufficientPrecision, "coefficient of t^" + std::to_string(k) + " beyond precision");
  const std::int64_t i = k - val_;
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return base_.zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Element& LaurentSeries::leading_coeff() const {
  if (is_zero()) raise(ErrorCode::DivisionByZeroWithinPrecision, "zero series has no leading coefficient");
  return coeffs_.front();
}

LaurentSeries LaurentSeries::operator-() const {
  std::vector<Element> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(-x);
  return LaurentSeries(base_, val_, std::move(c), prec_);
}

namespace {

void require_same_base(const LaurentSeries& x, const LaurentSeries& y) {
  if (!(x.base() == y.base())) raise(ErrorCode::BaseMismatch, x.base().to_string() + " vs " + y.base().to_string());
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y) {
  require_same_base(x, y);
  const std::int64_t prec = std::min(x.prec_, y.prec_);
  const std::int64_t start = std::min(x.val_, y.val_);
  if (start >= prec) return LaurentSeries(x.base_, prec);
  std::vector<Element> c(static_cast<std::size_t>(prec - start), x.base_.zero());
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    const std::int64_t k = x.val_ + static_cast<std::int64_t>(i);
    if (k < prec) c[static_cast<std::size_t>(k - start)] += x.coeffs_[i];
  }
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) {
    const std::int64_t k = y.val_ + static_cast<std::int64_t>(i);
    if (k < prec) c[static_cast<std::size_t>(k - start)] += y.coeffs_[i];
  }
  return LaurentSeries(x.base_, start, std::move(c), prec);
}

LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y) { return x + (-y); }

LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) {
  require_same_base(x, y);
  const std::int64_t prec = std::min(x.val_ + y.prec_, y.val_ + x.prec_);
  const std::int64_t start = x.val_ + y.val_;
  if (x.is_zero() || y.is_zero() || start >= prec) return LaurentSeries(x.base_, prec);
  std::vector<Element> c(static_cast<std::size_t>(prec - start), x.base_.zero());
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < y.coeffs_.size() && i + j < c.size(); ++j) c[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return LaurentSeries(x.base_, start, std::move(c), prec);
}

bool operator==(const LaurentSeries& x, const LaurentSeries& y) {
  return x.base_ == y.base_ && x.val_ == y.val_ && x.prec_ == y.prec_ && x.coeffs_ == y.coeffs_;
}

LaurentSeries LaurentSeries::inv() const {
  if (is_zero()) raise(ErrorCode::DivisionByZeroWithinPrecision, "series vanishes to precision " + std::to_string(prec_));
  const std::int64_t rel = prec_ - val_;
  const auto n = static_cast<std::size_t>(rel);
  std::vector<Element> u(n, base_.zero());
  std::copy(coeffs_.begin(), coeffs_.end(), u.begin());
  std::vector<Element> w(n, base_.zero());
  const Element u0_inv = u[0].inv();
  w[0] = u0_inv;
  for (std::size_t k = 1; k < n; ++k) {
    Element acc = base_.zero();
    for (std::size_t i = 1; i <= k; ++i) acc += u[i] * w[k - i];
    w[k] = -(u0_inv * acc);
  }
  return LaurentSeries(base_, -val_, std::move(w), prec_ - 2 * val_);
}

LaurentSeries LaurentSeries::frobenius() const {
  const std::int64_t p = base_.characteristic();
  if (is_zero()) return LaurentSeries(base_, p * prec_);
  std::vector<Element> c((coeffs_.size() - 1) * static_cast<std::size_t>(p) + 1, base_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(p)] = coeffs_[i].frobenius();
  return LaurentSeries(base_, p * val_, std::move(c), p * prec_);
}

LaurentSeries LaurentSeries::truncated(std::int64_t prec) const {
  if (prec > prec_) raise(ErrorCode::InsufficientPrecision, "cannot raise precision by truncation");
  return LaurentSeries(base_, val_, coeffs_, prec);
}

Element LaurentSeries::residue() const {
  if (!is_zero() && val_ < 0) raise(ErrorCode::NegativeValuation, "residue of a series with valuation " + std::to_string(val_));
  return coeff(0);
}

std::string LaurentSeries::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    const std::int64_t k = val_ + static_cast<std::int64_t>(i);
    if (!c.is_one()) {
      const std::string cs = c.to_string();
      out += (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*";
    }
    out += "t^" + std::to_string(k);
  }
  return out;
}

LaurentSeries wp(const LaurentSeries& x) { return x.frobenius() - x; }

std::string_view to_string(SolveOutcome::Tag tag) {
  switch (tag) {
    case SolveOutcome::Tag::Solved: return "Solved";
    case SolveOutcome::Tag::UnsolvableNegVal: return "UnsolvableNegVal";
    case SolveOutcome::Tag::UnsolvableResidue: return "UnsolvableResidue";
  }
  return "Unknown";
}

SolveOutcome as_solve(const LaurentSeries& a, std::int64_t out_prec) {
  if (out_prec < 1) raise(ErrorCode::InvalidArgument, "output precision must be >= 1");
  if (a.precision() < out_prec) {
    raise(ErrorCode::InsufficientPrecision, "input known to t^" + std::to_string(a.precision()) + ", need t^" + std::to_string(out_prec));
  }
  const auto& base = a.base();
  const std::int64_t p = base.characteristic();
  const LaurentSeries target = a.truncated(out_prec);

  // Negative part: each leading term c^p t^{pm} is cancelled by wp(c t^m).
  LaurentSeries rest = target;
  LaurentSeries root(base, out_prec);
  while (!rest.is_zero() && rest.valuation() < 0) {
    const std::int64_t v = rest.valuation();
    if (v % p != 0) return {SolveOutcome::Tag::UnsolvableNegVal, std::nullopt, v, std::nullopt, {}};
    const LaurentSeries term = LaurentSeries::monomial(rest.leading_coeff().pth_root(), v / p, out_prec);
    rest = rest - wp(term);
    root = root + term;
  }

  // Integral part: solve on the residue field, then r -> r^p lifting.
  const Element r0 = rest.residue();
  const auto xbar = has_as_root(base, r0);
  if (!xbar) return {SolveOutcome::Tag::UnsolvableResidue, std::nullopt, std::nullopt, r0, {}};

  SolveOutcome out{SolveOutcome::Tag::Solved, std::nullopt, std::nullopt, std::nullopt, {}};
  LaurentSeries x = root + LaurentSeries::monomial(*xbar, 0, out_prec);
  LaurentSeries r = wp(x) - target;
  while (!r.is_zero()) {
    const std::int64_t v = r.valuation();
    if (!out.residual_valuations.empty() && v < p * out.residual_valuations.back()) {
      raise(ErrorCode::CrossCheckFailure, "lifting residual did not gain a factor p in valuation");
    }
    out.residual_valuations.push_back(v);
    x = x + r;
    r = wp(x) - target;
  }
  out.root = x;
  return out;
}

std::string ValueGroupDesc::to_string() const {
  switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Localized: return "Z[1/" + std::to_string(inverted) + "]";
    case Kind::Rationals: return "Q";
  }
  return "?";
}

ValueGroupDesc parse_value_group(std::string_view text) {
  static const std::regex re(R"(^\s*(?:(Z)|(Q)|Z\[\s*1\s*/\s*(\d+)\s*\])\s*$)");
  std::cmatch m;
  const std::string s(text);
  if (!std::regex_match(s.c_str(), m, re)) raise(ErrorCode::ParseError, "bad value group '" + s + "'");
  if (m[1].matched) return ValueGroupDesc::integers();
  if (m[2].matched) return ValueGroupDesc::rationals();
  const std::uint64_t n = std::stoull(m[3].str());
  if (n < 2) raise(ErrorCode::ParseError, "Z[1/n] needs n >= 2");
  return ValueGroupDesc::localized(n);
}

DivisibilityResult value_group_p_divisible(const ValueGroupDesc& group, std::uint32_t p) {
  switch (group.kind) {
    case ValueGroupDesc::Kind::Integers: return {false, "1"};
    case ValueGroupDesc::Kind::Localized:
      if (group.inverted % p == 0) return {true, std::nullopt};
      return {false, "1"};
    case ValueGroupDesc::Kind::Rationals: return {true, std::nullopt};
  }
  return {false, "1"};
}

}  // namespace asf
