#include "cfauto/field.hpp"

#include <array>

#include "cfauto/error.hpp"

namespace cfauto {

namespace {

// Primitive polynomials over GF(2), one per extension degree. Bit i is the
// coefficient of x^i. For s = 1 the modulus x + 1 is degenerate (products
// of bits never need reducing).
constexpr std::array<std::uint32_t, GaloisField::kMaxDegree + 1> kModuli = {
    0x0,      // unused
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

}  // namespace

std::uint32_t field_modulus(unsigned s) {
  if (s < 1 || s > GaloisField::kMaxDegree) {
    throw Error(ErrorCode::UnsupportedFieldSize,
                "extension degree " + std::to_string(s) + " not in [1, 16]");
  }
  return kModuli[s];
}

GaloisField::GaloisField(unsigned s) : s_(s), modulus_(field_modulus(s)) {}

Elem GaloisField::mul(Elem a, Elem b) const noexcept {
  if (s_ == 1) return a & b;
  std::uint32_t acc = 0;
  while (b != 0) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1u << s_)) a ^= modulus_;
  }
  return acc;
}

Elem GaloisField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1;
  while (e != 0) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZeroPoly, "inverse of zero field element");
  // a^(q-2) = a^{-1} in the multiplicative group of order q-1.
  return pow(a, order() - 2u);
}

std::string GaloisField::name() const {
  return "GF(" + std::to_string(order()) + ")";
}

FieldPtr gf2s_field(unsigned s) {
  return std::make_shared<const GaloisField>(s);
}

const FieldPtr& gf2() {
  static const FieldPtr field = std::make_shared<const GaloisField>(1);
  return field;
}

void require_same_field(const GaloisField& a, const GaloisField& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::FieldMismatch, a.name() + " vs " + b.name());
  }
}

}  // namespace cfauto
