#include "cfauto/laurent_series.hpp"

#include <algorithm>

#include "cfauto/error.hpp"

namespace cfauto {

namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  const std::int64_t s = a + b;
  return std::min(s, LaurentSeries::kExact);
}

}  // namespace

LaurentSeries::LaurentSeries(FieldPtr field, std::int64_t precision)
    : field_(std::move(field)), valuation_(precision), precision_(precision) {}

LaurentSeries::LaurentSeries(FieldPtr field, std::int64_t valuation, std::vector<Elem> coeffs,
                             std::int64_t precision)
    : field_(std::move(field)),
      valuation_(valuation),
      coeffs_(std::move(coeffs)),
      precision_(std::min(precision, kExact)) {
  normalize();
}

void LaurentSeries::normalize() {
  if (valuation_ >= precision_) {
    coeffs_.clear();
  } else if (static_cast<std::int64_t>(coeffs_.size()) > precision_ - valuation_) {
    coeffs_.resize(static_cast<std::size_t>(precision_ - valuation_));
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    valuation_ = precision_;
    return;
  }
  valuation_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

LaurentSeries LaurentSeries::from_poly(const UniPoly& p, std::int64_t precision) {
  if (p.is_zero()) return LaurentSeries(p.field(), precision);
  const auto c = p.coefficients();
  // t^k is exponent -k; highest degree first.
  std::vector<Elem> coeffs(c.rbegin(), c.rend());
  return LaurentSeries(p.field(), -p.degree(), std::move(coeffs), precision);
}

Elem LaurentSeries::coefficient(std::int64_t e) const {
  if (e >= precision_) {
    throw Error(ErrorCode::PrecisionTooLow, "coefficient of t^-" + std::to_string(e) +
                                                " requested beyond precision " +
                                                std::to_string(precision_));
  }
  if (e < valuation_ || e - valuation_ >= static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(e - valuation_)];
}

LaurentSeries LaurentSeries::truncated(std::int64_t precision) const {
  if (precision >= precision_) return *this;
  return LaurentSeries(field_, valuation_, coeffs_, precision);
}

std::string LaurentSeries::to_string(std::size_t max_terms) const {
  std::string out;
  std::size_t shown = 0;
  for (std::size_t k = 0; k < coeffs_.size() && shown < max_terms; ++k) {
    const Elem c = coeffs_[k];
    if (c == 0) continue;
    const std::int64_t e = valuation_ + static_cast<std::int64_t>(k);
    if (!out.empty()) out += " + ";
    std::string term;
    if (e == 0) {
      term = std::to_string(c);
    } else {
      if (c != 1) term = std::to_string(c) + "*";
      term += e == -1 ? "t" : "t^" + std::to_string(-e);
    }
    out += term;
    ++shown;
  }
  if (out.empty()) out = "0";
  if (!is_exact()) out += " + O(t^-" + std::to_string(precision_) + ")";
  return out;
}

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_field(*a.field(), *b.field());
  const std::int64_t prec = std::min(a.precision(), b.precision());
  if (a.is_zero()) return b.truncated(prec);
  if (b.is_zero()) return a.truncated(prec);
  const std::int64_t lo = std::min(a.valuation(), b.valuation());
  const std::int64_t hi = std::min(
      prec, std::max(a.valuation() + static_cast<std::int64_t>(a.coefficients().size()),
                     b.valuation() + static_cast<std::int64_t>(b.coefficients().size())));
  std::vector<Elem> out(static_cast<std::size_t>(std::max<std::int64_t>(hi - lo, 0)), 0);
  for (const LaurentSeries* s : {&a, &b}) {
    const auto c = s->coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
      const std::int64_t idx = s->valuation() + static_cast<std::int64_t>(k) - lo;
      if (idx >= static_cast<std::int64_t>(out.size())) break;
      out[static_cast<std::size_t>(idx)] ^= c[k];
    }
  }
  return LaurentSeries(a.field(), lo, std::move(out), prec);
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_field(*a.field(), *b.field());
  const std::int64_t prec =
      std::min(sat_add(a.precision(), b.valuation()), sat_add(b.precision(), a.valuation()));
  if (a.is_zero() || b.is_zero()) return LaurentSeries(a.field(), prec);
  const std::int64_t val = a.valuation() + b.valuation();
  const auto ac = a.coefficients();
  const auto bc = b.coefficients();
  const std::int64_t full = static_cast<std::int64_t>(ac.size() + bc.size()) - 1;
  const std::int64_t len = std::min(full, prec - val);
  if (len <= 0) return LaurentSeries(a.field(), prec);
  std::vector<Elem> out(static_cast<std::size_t>(len), 0);
  const GaloisField& f = *a.field();
  const auto n = static_cast<std::size_t>(len);
  for (std::size_t i = 0; i < ac.size() && i < n; ++i) {
    const Elem ai = ac[i];
    if (ai == 0) continue;
    const std::size_t jmax = std::min(bc.size(), n - i);
    if (f.degree() == 1) {
      for (std::size_t j = 0; j < jmax; ++j) out[i + j] ^= bc[j];
    } else {
      for (std::size_t j = 0; j < jmax; ++j) out[i + j] ^= f.mul(ai, bc[j]);
    }
  }
  return LaurentSeries(a.field(), val, std::move(out), prec);
}

LaurentSeries series_invert(const LaurentSeries& a) {
  if (a.is_zero()) throw Error(ErrorCode::InvertZeroSeries, "series is zero to precision " + std::to_string(a.precision()));
  const auto c = a.coefficients();
  const GaloisField& f = *a.field();
  const std::int64_t val = -a.valuation();
  if (a.is_exact()) {
    if (c.size() != 1) {
      throw Error(ErrorCode::PrecisionTooLow, "inverse of an exact multi-term series needs a finite precision");
    }
    return LaurentSeries(a.field(), val, {f.inv(c[0])}, LaurentSeries::kExact);
  }
  const std::int64_t prec = a.precision() - 2 * a.valuation();
  const auto len = static_cast<std::size_t>(prec - val);
  // Power-series reciprocal in x = 1/t of c_0 + c_1 x + ...
  std::vector<Elem> out(len, 0);
  const Elem lead_inv = f.inv(c[0]);
  for (std::size_t k = 0; k < len; ++k) {
    Elem acc = k == 0 ? 1 : 0;
    const std::size_t imax = std::min(k, c.size() - 1);
    for (std::size_t i = 1; i <= imax; ++i) {
      if (c[i] != 0 && out[k - i] != 0) acc ^= f.mul(c[i], out[k - i]);
    }
    out[k] = f.mul(acc, lead_inv);
  }
  return LaurentSeries(a.field(), val, std::move(out), prec);
}

LaurentSeries series_square(const LaurentSeries& a) {
  const std::int64_t prec = a.is_exact() ? LaurentSeries::kExact : 2 * a.precision();
  if (a.is_zero()) return LaurentSeries(a.field(), prec);
  const auto c = a.coefficients();
  const GaloisField& f = *a.field();
  std::vector<Elem> out(2 * c.size() - 1, 0);
  for (std::size_t k = 0; k < c.size(); ++k) out[2 * k] = f.square(c[k]);
  return LaurentSeries(a.field(), 2 * a.valuation(), std::move(out), prec);
}

LaurentSeries series_frobenius(const LaurentSeries& a, unsigned k) {
  LaurentSeries r = a;
  for (unsigned i = 0; i < k; ++i) r = series_square(r);
  return r;
}

LaurentSeries series_expand(const RationalFunction& r, std::int64_t precision) {
  if (precision < 1) throw Error(ErrorCode::PrecisionTooLow, "expansion precision must be >= 1");
  const UniPoly& num = r.num();
  const UniPoly& den = r.den();
  if (num.is_zero()) return LaurentSeries(num.field(), precision);
  const std::int64_t val = den.degree() - num.degree();
  if (val >= precision) return LaurentSeries(num.field(), precision);
  const auto len = static_cast<std::size_t>(precision - val);
  const auto nc = num.coefficients();
  const auto dc = den.coefficients();
  // Reverse both so index k is the coefficient of x^k, x = 1/t.
  std::vector<Elem> nr(nc.rbegin(), nc.rend());
  std::vector<Elem> dr(dc.rbegin(), dc.rend());
  const GaloisField& f = *num.field();
  const Elem lead_inv = f.inv(dr[0]);
  std::vector<Elem> out(len, 0);
  for (std::size_t k = 0; k < len; ++k) {
    Elem acc = k < nr.size() ? nr[k] : 0;
    const std::size_t imax = std::min(k, dr.size() - 1);
    for (std::size_t i = 1; i <= imax; ++i) {
      if (dr[i] != 0 && out[k - i] != 0) acc ^= f.mul(dr[i], out[k - i]);
    }
    out[k] = f.mul(acc, lead_inv);
  }
  return LaurentSeries(num.field(), val, std::move(out), precision);
}

std::optional<std::int64_t> series_residual_valuation(const LaurentSeries& a) {
  if (a.is_zero()) return std::nullopt;
  return a.valuation();
}

}  // namespace cfauto
