#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cfauto/field.hpp"

namespace cfauto {

// Dense univariate polynomial over GF(2^s), coefficients by ascending degree.
// The highest stored coefficient is always nonzero; the zero polynomial has
// no coefficients and degree kZeroDegree.
class UniPoly {
 public:
  static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

  explicit UniPoly(FieldPtr field = gf2());
  UniPoly(FieldPtr field, std::vector<Elem> coeffs);

  static UniPoly constant(FieldPtr field, Elem c);
  static UniPoly monomial(FieldPtr field, Elem c, std::size_t degree);
  static UniPoly one(FieldPtr field = gf2()) { return constant(std::move(field), 1); }
  static UniPoly t(FieldPtr field = gf2()) { return monomial(std::move(field), 1, 1); }

  const FieldPtr& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  // kZeroDegree for the zero polynomial.
  std::int64_t degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  Elem coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }
  Elem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::span<const Elem> coefficients() const noexcept { return coeffs_; }

  UniPoly monic() const;
  UniPoly scaled(Elem c) const;
  UniPoly shifted(std::size_t k) const;  // multiply by t^k
  UniPoly square() const;
  UniPoly pow(std::uint64_t e) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) noexcept {
    return *a.field_ == *b.field_ && a.coeffs_ == b.coeffs_;
  }

  // Terms in descending degree, e.g. "t^2+t+1"; coefficients other than 1
  // are written as integers ("3*t^2+1"). Zero renders as "0".
  std::string to_string() const;

 private:
  void trim() noexcept;

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

// a = q*b + r with deg r < deg b. Throws DivisionByZeroPoly when b == 0.
std::pair<UniPoly, UniPoly> poly_divrem(const UniPoly& a, const UniPoly& b);

// Monic gcd. gcd(0, 0) is 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

}  // namespace cfauto
