#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfauto/rational_function.hpp"

namespace cfauto {

// Truncated Laurent series in 1/t over GF(2^s):
//
//   sum_{e >= valuation} c_e t^{-e},   with c_e known exactly for e < precision.
//
// Exponents count powers of t^{-1}, so a negative valuation means positive
// powers of t are present. Stored coefficients are trimmed at both ends;
// a series whose known coefficients all vanish is "zero to precision" and
// reports valuation() == precision(). Exact series (polynomials) carry the
// precision kExact.
class LaurentSeries {
 public:
  static constexpr std::int64_t kExact = std::int64_t{1} << 60;

  explicit LaurentSeries(FieldPtr field = gf2(), std::int64_t precision = kExact);
  // coeffs[k] is the coefficient of t^{-(valuation + k)}; entries at or
  // beyond the precision are dropped.
  LaurentSeries(FieldPtr field, std::int64_t valuation, std::vector<Elem> coeffs,
                std::int64_t precision);

  static LaurentSeries from_poly(const UniPoly& p, std::int64_t precision = kExact);

  const FieldPtr& field() const noexcept { return field_; }
  std::int64_t valuation() const noexcept { return valuation_; }
  std::int64_t precision() const noexcept { return precision_; }
  bool is_exact() const noexcept { return precision_ >= kExact; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const Elem> coefficients() const noexcept { return coeffs_; }

  // Coefficient of t^{-e}. Throws PrecisionTooLow for e >= precision().
  Elem coefficient(std::int64_t e) const;

  LaurentSeries truncated(std::int64_t precision) const;

  std::string to_string(std::size_t max_terms = 8) const;

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) noexcept {
    return *a.field_ == *b.field_ && a.valuation_ == b.valuation_ &&
           a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  FieldPtr field_;
  std::int64_t valuation_;
  std::vector<Elem> coeffs_;
  std::int64_t precision_;
};

// Sum; precision min(P_a, P_b).
LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);
// Product; precision min(P_a + val_b, P_b + val_a).
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);
// Reciprocal; precision P_a - 2 val_a. Throws InvertZeroSeries on a series
// that is zero to precision, PrecisionTooLow on an exact series that is not
// a single term (its inverse has infinitely many known terms).
LaurentSeries series_invert(const LaurentSeries& a);
// Frobenius square; precision 2 P_a.
LaurentSeries series_square(const LaurentSeries& a);
// a^(2^k) by k Frobenius squarings.
LaurentSeries series_frobenius(const LaurentSeries& a, unsigned k);

// Expansion of r to precision N (N >= 1); valuation deg(den) - deg(num).
LaurentSeries series_expand(const RationalFunction& r, std::int64_t precision);

// Least e with a nonzero coefficient of t^{-e}; nullopt ("CLEAN") when the
// series is zero to its precision.
std::optional<std::int64_t> series_residual_valuation(const LaurentSeries& a);

}  // namespace cfauto
