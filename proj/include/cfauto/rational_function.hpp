#pragma once

#include <string>

#include "cfauto/unipoly.hpp"

namespace cfauto {

// Element of F_q(t) in canonical form: gcd(num, den) = 1 and den monic.
// Canonical form is unique, so structural equality is value equality.
class RationalFunction {
 public:
  explicit RationalFunction(FieldPtr field = gf2());
  RationalFunction(const UniPoly& poly);  // NOLINT: implicit embedding
  // Throws ZeroDenominator when den == 0.
  RationalFunction(UniPoly num, UniPoly den);

  const UniPoly& num() const noexcept { return num_; }
  const UniPoly& den() const noexcept { return den_; }
  const FieldPtr& field() const noexcept { return num_.field(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }

  RationalFunction inverse() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + b;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  void canonicalize();

  UniPoly num_;
  UniPoly den_;
};

}  // namespace cfauto
