#include "asf/rational_function.hpp"

#include "asf/error.hpp"

namespace asf {

namespace {

Element eval_at(const PolyFp& f, const Element& x) {
  Element acc = x.field().zero();
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + x.field().from_int(*it);
  return acc;
}

}  // namespace

RationalFunction::RationalFunction(std::uint32_t p) : num_(p), den_(PolyFp::constant(p, 1)) {}

RationalFunction::RationalFunction(const PolyFp& numerator)
    : num_(numerator), den_(PolyFp::constant(numerator.characteristic(), 1)) {}

RationalFunction::RationalFunction(const PolyFp& numerator, const PolyFp& denominator) : num_(numerator), den_(denominator) {
  if (num_.characteristic() != den_.characteristic()) raise(ErrorCode::ParentMismatch, "characteristic mismatch");
  if (den_.is_zero()) raise(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = PolyFp::constant(num_.characteristic(), 1);
    return;
  }
  PolyFp g = gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
  const std::uint32_t li = inv_mod(den_.lead(), den_.characteristic());
  num_ = num_.scaled(li);
  den_ = den_.scaled(li);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inv(); }

Element RationalFunction::eval(const Element& x) const {
  const auto& field = x.field();
  if (field.characteristic() != characteristic()) raise(ErrorCode::ParentMismatch, "characteristic mismatch");
  const Element d = eval_at(den_, x);
  if (d.is_zero()) raise(ErrorCode::DivisionByZero, "pole at " + x.to_string());
  return eval_at(num_, x) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string('s');
  return "(" + num_.to_string('s') + ")/(" + den_.to_string('s') + ")";
}

}  // namespace asf
