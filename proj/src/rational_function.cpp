#include "cfauto/rational_function.hpp"

#include "cfauto/error.hpp"

namespace cfauto {

RationalFunction::RationalFunction(FieldPtr field)
    : num_(field), den_(UniPoly::one(field)) {}

RationalFunction::RationalFunction(const UniPoly& poly)
    : num_(poly), den_(UniPoly::one(poly.field())) {}

RationalFunction::RationalFunction(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_field(*num_.field(), *den_.field());
  if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = UniPoly::one(num_.field());
    return;
  }
  const UniPoly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = poly_divrem(num_, g).first;
    den_ = poly_divrem(den_, g).first;
  }
  const Elem lead = den_.leading();
  if (lead != 1) {
    const Elem inv = num_.field()->inv(lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace cfauto
