#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace cfauto {

// An element of GF(2^s): the bit-string of its coordinates in the
// polynomial basis 1, x, ..., x^{s-1} (bit i = coefficient of x^i).
using Elem = std::uint32_t;

// GF(2^s) for 1 <= s <= 16, defined by a fixed irreducible modulus taken
// from a built-in table (see field.cpp). Immutable once built.
class GaloisField {
 public:
  static constexpr unsigned kMaxDegree = 16;

  explicit GaloisField(unsigned s);

  unsigned degree() const noexcept { return s_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t order() const noexcept { return 1u << s_; }
  bool contains(Elem a) const noexcept { return a < order(); }

  static Elem add(Elem a, Elem b) noexcept { return a ^ b; }
  Elem mul(Elem a, Elem b) const noexcept;
  Elem square(Elem a) const noexcept { return mul(a, a); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  // Throws DivisionByZeroPoly on a == 0.
  Elem inv(Elem a) const;

  std::string name() const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) noexcept {
    return a.s_ == b.s_;
  }

 private:
  unsigned s_;
  std::uint32_t modulus_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

// The modulus used for GF(2^s), as a bit mask including the leading x^s bit.
std::uint32_t field_modulus(unsigned s);

// Throws UnsupportedFieldSize when s is outside [1, 16].
FieldPtr gf2s_field(unsigned s);

// Shared GF(2) instance.
const FieldPtr& gf2();

// Throws FieldMismatch unless both fields are the same GF(2^s).
void require_same_field(const GaloisField& a, const GaloisField& b);

}  // namespace cfauto
