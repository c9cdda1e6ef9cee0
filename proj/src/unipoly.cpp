#include "cfauto/unipoly.hpp"

#include <algorithm>

#include "cfauto/error.hpp"

namespace cfauto {

UniPoly::UniPoly(FieldPtr field) : field_(std::move(field)) {}

UniPoly::UniPoly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) {
    if (!field_->contains(c)) {
      throw Error(ErrorCode::FieldMismatch,
                  "coefficient " + std::to_string(c) + " outside " + field_->name());
    }
  }
  trim();
}

UniPoly UniPoly::constant(FieldPtr field, Elem c) {
  return UniPoly(std::move(field), std::vector<Elem>{c});
}

UniPoly UniPoly::monomial(FieldPtr field, Elem c, std::size_t degree) {
  std::vector<Elem> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return UniPoly(std::move(field), std::move(coeffs));
}

void UniPoly::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scaled(field_->inv(leading()));
}

UniPoly UniPoly::scaled(Elem c) const {
  UniPoly r(field_);
  if (c == 0) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (Elem x : coeffs_) r.coeffs_.push_back(field_->mul(x, c));
  r.trim();
  return r;
}

UniPoly UniPoly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  UniPoly r(field_);
  r.coeffs_.assign(k, 0);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

UniPoly UniPoly::square() const {
  // Frobenius: (sum c_k t^k)^2 = sum c_k^2 t^{2k} in characteristic 2.
  UniPoly r(field_);
  if (is_zero()) return r;
  r.coeffs_.assign(2 * coeffs_.size() - 1, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[2 * k] = field_->square(coeffs_[k]);
  r.trim();
  return r;
}

UniPoly UniPoly::pow(std::uint64_t e) const {
  UniPoly result = one(field_);
  UniPoly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base.square();
  }
  return result;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  require_same_field(*a.field_, *b.field_);
  const UniPoly& longer = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const UniPoly& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  UniPoly r = longer;
  for (std::size_t k = 0; k < shorter.coeffs_.size(); ++k) r.coeffs_[k] ^= shorter.coeffs_[k];
  r.trim();
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_field(*a.field_, *b.field_);
  UniPoly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  const GaloisField& f = *a.field_;
  const std::size_t nb = b.coeffs_.size();
  if (f.degree() == 1) {
    const Elem* bp = b.coeffs_.data();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      Elem* rp = r.coeffs_.data() + i;
      for (std::size_t j = 0; j < nb; ++j) rp[j] ^= bp[j];
    }
    r.trim();
    return r;
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const Elem ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      r.coeffs_[i + j] ^= f.mul(ai, b.coeffs_[j]);
    }
  }
  r.trim();
  return r;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Elem c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += 't';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

std::pair<UniPoly, UniPoly> poly_divrem(const UniPoly& a, const UniPoly& b) {
  require_same_field(*a.field(), *b.field());
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
  const GaloisField& f = *a.field();
  if (a.degree() < b.degree()) return {UniPoly(a.field()), a};

  std::vector<Elem> rem(a.coefficients().begin(), a.coefficients().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const auto da = static_cast<std::size_t>(a.degree());
  std::vector<Elem> quot(da - db + 1, 0);
  const Elem lead_inv = f.inv(b.leading());
  const auto bc = b.coefficients();
  for (std::size_t k = da + 1; k-- > db;) {
    const Elem c = rem[k];
    if (c == 0) continue;
    const Elem q = f.mul(c, lead_inv);
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] ^= f.mul(q, bc[j]);
  }
  rem.resize(db);
  return {UniPoly(a.field(), std::move(quot)), UniPoly(a.field(), std::move(rem))};
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  require_same_field(*a.field(), *b.field());
  while (!b.is_zero()) {
    UniPoly r = poly_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace cfauto
