#include "cfauto/verification.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cfauto/continued_fraction.hpp"
#include "cfauto/error.hpp"

namespace cfauto {

namespace {

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  return poly_divrem(a * b, poly_gcd(a, b)).first;
}

// r * D as a polynomial; D must be a multiple of r's denominator.
UniPoly cleared(const RationalFunction& r, const UniPoly& D) {
  return r.num() * poly_divrem(D, r.den()).first;
}

}  // namespace

ResidualReport residual_valuation(const SpecializedEquation& eq, const BackboneSpec& spec,
                                  std::int64_t precision) {
  if (precision < 64) {
    throw Error(ErrorCode::PrecisionTooLow, "residual check needs N >= 64, got " + std::to_string(precision));
  }
  const FieldPtr& field = eq.A.field();
  UniPoly D = UniPoly::one(field);
  D = lcm(D, eq.A.den());
  for (const auto& b : eq.B) D = lcm(D, b.den());

  const UniPoly cleared_A = cleared(eq.A, D);
  std::vector<UniPoly> cleared_B;
  std::int64_t max_deg = std::max<std::int64_t>(D.degree(), cleared_A.is_zero() ? 0 : cleared_A.degree());
  for (const auto& b : eq.B) {
    cleared_B.push_back(cleared(b, D));
    if (!cleared_B.back().is_zero()) max_deg = std::max(max_deg, cleared_B.back().degree());
  }

  const std::int64_t beta_precision = precision + max_deg;
  const CfSeries cf = cf_to_series(spec, eq.assignment, beta_precision);
  if (!cf.routes_agree) {
    throw std::logic_error("convergent and partial-sum routes to beta disagree");
  }

  const unsigned d = static_cast<unsigned>(eq.d());
  LaurentSeries residual =
      series_mul(LaurentSeries::from_poly(D), series_frobenius(cf.beta, d));
  residual = series_add(residual, LaurentSeries::from_poly(cleared_A));
  LaurentSeries beta_power = cf.beta;
  for (unsigned k = 0; k < d; ++k) {
    if (k > 0) beta_power = series_square(beta_power);
    residual = series_add(residual, series_mul(LaurentSeries::from_poly(cleared_B[k]), beta_power));
  }
  if (residual.precision() < precision) {
    throw std::logic_error("residual precision " + std::to_string(residual.precision()) +
                           " fell below the target " + std::to_string(precision));
  }
  residual = residual.truncated(precision);
  return ResidualReport{series_residual_valuation(residual), precision, D.to_string()};
}

LaurentSeries gamma_series(const BackboneSpec& spec, const FieldPtr& field,
                           const std::vector<Elem>& letter_values, std::int64_t precision) {
  if (letter_values.size() != spec.alphabet()->size()) {
    throw Error(ErrorCode::SymbolUniverseMismatch, "gamma needs one field value per letter");
  }
  for (Elem v : letter_values) {
    if (!field->contains(v)) throw Error(ErrorCode::FieldMismatch, "letter value outside " + field->name());
  }
  if (precision < 1) throw Error(ErrorCode::PrecisionTooLow, "gamma precision must be >= 1");
  std::vector<Elem> coeffs(static_cast<std::size_t>(precision));
  for (std::size_t n = 0; n < coeffs.size(); ++n) coeffs[n] = letter_values[s_at(spec, n)];
  return LaurentSeries(field, 0, std::move(coeffs), precision);
}

std::int64_t RelationCertificate::deg_t() const noexcept {
  std::int64_t deg = 0;
  for (const auto& p : coeffs) {
    if (!p.is_zero()) deg = std::max(deg, p.degree());
  }
  return deg;
}

std::string RelationCertificate::to_string() const {
  std::string out;
  for (std::size_t e = coeffs.size(); e-- > 0;) {
    if (coeffs[e].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs[e].to_string() + ")";
    if (e == 1) out += "*x";
    if (e > 1) out += "*x^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

LaurentSeries relation_residual(const LaurentSeries& gamma, const std::vector<UniPoly>& coeffs) {
  const FieldPtr& field = gamma.field();
  LaurentSeries sum(field);
  LaurentSeries power = LaurentSeries::from_poly(UniPoly::one(field));
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (e > 0) power = series_mul(power, gamma);
    sum = series_add(sum, series_mul(LaurentSeries::from_poly(coeffs[e]), power));
  }
  return sum;
}

namespace {

// Reduced row echelon form in place over GF(q); returns the pivot column of
// each pivot row. Pivot rows are chosen as the first usable row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Elem>>& m, std::size_t cols, const GaloisField& f) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Elem inv = f.inv(m[row][c]);
    if (inv != 1) {
      for (auto& x : m[row]) x = f.mul(x, inv);
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Elem factor = m[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (m[row][k] != 0) m[r][k] ^= f.mul(factor, m[row][k]);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::optional<RelationCertificate> search_degree(const std::vector<LaurentSeries>& powers, unsigned deg_x,
                                                 unsigned deg_t, std::int64_t precision,
                                                 const LaurentSeries& gamma) {
  const FieldPtr& field = gamma.field();
  const GaloisField& f = *field;
  const std::size_t per_b = deg_x + 1;
  const std::size_t cols = per_b * (deg_t + 1);

  std::int64_t min_val = 0;
  for (unsigned e = 0; e <= deg_x; ++e) {
    if (!powers[e].is_zero()) min_val = std::min(min_val, powers[e].valuation());
  }
  const std::int64_t k_min = min_val - static_cast<std::int64_t>(deg_t);

  // Row k is the coefficient of t^-k; column (b, e) holds t^b gamma^e.
  std::vector<std::vector<Elem>> m;
  m.reserve(static_cast<std::size_t>(precision - k_min));
  for (std::int64_t k = k_min; k < precision; ++k) {
    std::vector<Elem> row(cols, 0);
    bool any = false;
    for (unsigned b = 0; b <= deg_t; ++b) {
      for (unsigned e = 0; e <= deg_x; ++e) {
        const Elem c = powers[e].coefficient(k + b);
        row[b * per_b + e] = c;
        any = any || c != 0;
      }
    }
    if (any) m.push_back(std::move(row));
  }

  const std::vector<std::size_t> pivots = row_reduce(m, cols, f);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> x(cols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][free];

    std::vector<UniPoly> coeffs;
    for (unsigned e = 0; e <= deg_x; ++e) {
      std::vector<Elem> c(deg_t + 1);
      for (unsigned b = 0; b <= deg_t; ++b) c[b] = x[b * per_b + e];
      coeffs.emplace_back(field, std::move(c));
    }
    const auto lowest = std::find_if(coeffs.begin(), coeffs.end(), [](const UniPoly& p) { return !p.is_zero(); });
    if (lowest == coeffs.end()) continue;
    const Elem scale = f.inv(lowest->leading());
    for (auto& p : coeffs) p = p.scaled(scale);
    while (coeffs.back().is_zero()) coeffs.pop_back();

    const LaurentSeries check = relation_residual(gamma, coeffs).truncated(2 * precision);
    if (check.precision() >= 2 * precision && check.is_zero()) {
      return RelationCertificate{field, std::move(coeffs), 2 * precision};
    }
  }
  return std::nullopt;
}

}  // namespace

RelationSearch relation_search(const LaurentSeries& gamma, unsigned max_deg_x, unsigned max_deg_t,
                               std::int64_t precision) {
  const std::int64_t needed = 2 * static_cast<std::int64_t>(max_deg_x + 1) * (max_deg_t + 1);
  if (precision < needed) {
    throw Error(ErrorCode::PrecisionTooLow, "relation search needs N >= 2(D+1)(B+1) = " + std::to_string(needed));
  }
  std::vector<LaurentSeries> powers;
  powers.push_back(LaurentSeries::from_poly(UniPoly::one(gamma.field())));
  for (unsigned e = 1; e <= max_deg_x; ++e) powers.push_back(series_mul(powers.back(), gamma));
  // The doubled re-check multiplies gamma^e by t^b, b <= B.
  for (const auto& p : powers) {
    if (p.precision() < 2 * precision + max_deg_t) {
      throw Error(ErrorCode::PrecisionTooLow,
                  "gamma known to " + std::to_string(gamma.precision()) + " terms; need " +
                      std::to_string(2 * precision + max_deg_t) + " for the doubled check");
    }
  }
  RelationSearch out{std::nullopt, max_deg_x, max_deg_t, precision};
  for (unsigned deg_x = 1; deg_x <= max_deg_x && !out.certificate; ++deg_x) {
    out.certificate = search_degree(powers, deg_x, max_deg_t, precision, gamma);
  }
  return out;
}

TwoDFA kernel_automaton(const BackboneSpec& spec) {
  const std::size_t states = spec.prefix_length() + spec.period_length();
  TwoDFA dfa{spec, {}, {}};
  for (std::size_t c = 0; c < states; ++c) {
    dfa.next.push_back(spec.canonical_index(c + 1));
    dfa.output.push_back(spec.letters()[c]);
  }
  return dfa;
}

std::size_t automaton_eval(const TwoDFA& dfa, std::uint64_t n) {
  std::size_t c = 0;
  while (n & 1u) {
    n >>= 1;
    c = dfa.next[c];
  }
  return dfa.output[c];
}

std::string TwoDFA::describe() const {
  const Alphabet& names = *spec.alphabet();
  std::string out = "states: " + std::to_string(state_count()) + " (bound l+d = " +
                    std::to_string(spec.prefix_length() + spec.period_length()) + ")\n";
  for (std::size_t c = 0; c < state_count(); ++c) {
    out += "S" + std::to_string(c) + ": bit 1 -> S" + std::to_string(next[c]) + ", bit 0 -> emit " +
           names.name(output[c]) + "\n";
  }
  return out;
}

std::size_t kernel_size_estimate(const BackboneSpec& spec, unsigned depth, std::size_t length) {
  std::set<std::vector<std::size_t>> seen;
  for (unsigned e = 0; e <= depth; ++e) {
    const std::uint64_t step = std::uint64_t{1} << e;
    for (std::uint64_t r = 0; r < step; ++r) {
      std::vector<std::size_t> seq(length);
      for (std::size_t n = 0; n < length; ++n) seq[n] = s_at(spec, step * n + r);
      seen.insert(std::move(seq));
    }
  }
  return seen.size();
}

}  // namespace cfauto
