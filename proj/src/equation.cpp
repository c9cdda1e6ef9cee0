#include "cfauto/equation.hpp"

#include "cfauto/error.hpp"

namespace cfauto {

namespace {

constexpr std::size_t kMaxPeriod = 8;

void require_derivable(const BackboneSpec& spec) {
  const std::size_t d = spec.period_length();
  if (d < 2 || d > kMaxPeriod) {
    throw Error(ErrorCode::InvalidBackbone,
                "equation derivation needs 2 <= d <= 8, got d = " + std::to_string(d));
  }
}

MultiPoly mono(const BackboneSpec& spec, Monomial m) {
  return MultiPoly::from_monomial(spec.alphabet(), std::move(m));
}

// m / u_k as a fraction; u_k = eps(0, k).
SymbolicFraction over_u(const BackboneSpec& spec, const Monomial& m, unsigned k) {
  return SymbolicFraction(mono(spec, m), mono(spec, weighted_product(spec, 0, k)));
}

std::string power_of_beta(std::uint64_t e) {
  if (e == 1) return "beta";
  return "beta^" + std::to_string(e);
}

}  // namespace

SymbolicFraction compute_z(const BackboneSpec& spec, unsigned i) {
  require_derivable(spec);
  const std::size_t l = spec.prefix_length();
  const std::size_t d = spec.period_length();
  if (i > d) throw Error(ErrorCode::InvalidIndex, "z_i needs 0 <= i <= d");
  const std::size_t last = l + d - 1;  // F = {1, ..., l+d-1}
  SymbolicFraction z(spec.alphabet());
  const Monomial one(spec.alphabet()->size());
  if (i == 0) {
    for (std::size_t k = 1; k <= last; ++k) z = z + over_u(spec, one, static_cast<unsigned>(k));
    return z;
  }
  for (std::size_t n = 1; n + i <= last; ++n) {
    z = z + over_u(spec, eps_weighted(spec, n, i), static_cast<unsigned>(n + i));
  }
  if (l == 0 && i == d) z = z + over_u(spec, eps_weighted(spec, 0, i), i);
  return z;
}

PolyMatrix build_matrix(const BackboneSpec& spec) {
  require_derivable(spec);
  const std::size_t l = spec.prefix_length();
  const std::size_t d = spec.period_length();
  PolyMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    m[i].reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
      m[i].push_back(mono(spec, eps_weighted(spec, d + l + j - i, static_cast<unsigned>(i))));
    }
  }
  return m;
}

AlgebraicEquation derive_equation(const BackboneSpec& spec, std::size_t expansion_column) {
  require_derivable(spec);
  const std::size_t l = spec.prefix_length();
  const std::size_t d = spec.period_length();
  if (expansion_column >= d) throw Error(ErrorCode::InvalidIndex, "expansion column outside M(d)");

  const PolyMatrix m = build_matrix(spec);
  MultiPoly delta = det_along_column(m, expansion_column);
  if (delta.is_zero()) {
    throw Error(ErrorCode::DegenerateDeterminant, "det M(d) vanishes for " + spec.to_string());
  }

  std::vector<SymbolicFraction> z;
  for (unsigned i = 0; i <= d; ++i) z.push_back(compute_z(spec, i));

  std::vector<std::vector<MultiPoly>> cof(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) cof[i].push_back(cofactor(m, i, j));
  }

  // beta_j = Delta(j,d)/Delta(d), Delta(j,d) = sum_i (beta^(2^i) + z_i) cof_{i,j};
  // substitute into beta^(2^d) = z_d + sum_j eps(l+j, d) beta_j.
  std::vector<MultiPoly> weights;
  for (std::size_t j = 0; j < d; ++j) weights.push_back(mono(spec, eps_weighted(spec, l + j, static_cast<unsigned>(d))));

  const SymbolicFraction delta_frac(delta);
  std::vector<SymbolicFraction> B;
  for (std::size_t k = 0; k < d; ++k) {
    MultiPoly num(spec.alphabet());
    for (std::size_t j = 0; j < d; ++j) num += weights[j] * cof[k][j];
    B.push_back(SymbolicFraction(num) / delta_frac);
  }

  SymbolicFraction constant(spec.alphabet());
  for (std::size_t j = 0; j < d; ++j) {
    SymbolicFraction c_j(spec.alphabet());
    for (std::size_t i = 0; i < d; ++i) c_j = c_j + SymbolicFraction(cof[i][j]) * z[i];
    constant = constant + SymbolicFraction(weights[j]) * c_j;
  }
  SymbolicFraction A = z[d] + constant / delta_frac;

  return AlgebraicEquation{spec, std::move(delta), std::move(A), std::move(B)};
}

SpecializedEquation specialize_equation(const AlgebraicEquation& eq, const std::vector<UniPoly>& images) {
  require_nonconstant_images(images, *eq.spec.alphabet());
  if (eq.delta.evaluate(images).is_zero()) {
    throw Error(ErrorCode::DegenerateDeterminant, "det M(d) = " + eq.delta.to_string() +
                                                      " vanishes under the assignment");
  }
  SpecializedEquation out{frac_eval(eq.A, images), {}, images};
  for (const auto& b : eq.B) out.B.push_back(frac_eval(b, images));
  return out;
}

AlgebraicEquation substitute_letters(const AlgebraicEquation& eq, const BackboneSpec& target,
                                     const std::vector<MultiPoly>& images) {
  for (const auto& img : images) require_same_alphabet(*img.alphabet(), *target.alphabet());
  AlgebraicEquation out{target, eq.delta.substitute(images), eq.A.substitute(images), {}};
  for (const auto& b : eq.B) out.B.push_back(b.substitute(images));
  return out;
}

std::vector<SymbolicFraction> alpha_polynomial(const AlgebraicEquation& eq) {
  const std::size_t top = std::size_t{1} << eq.d();
  std::vector<SymbolicFraction> coeffs(top + 1, SymbolicFraction(eq.spec.alphabet()));
  // Index by descending degree: coeffs[top - deg].
  coeffs[0] = eq.A;
  for (std::size_t k = 0; k < eq.d(); ++k) coeffs[std::size_t{1} << k] = eq.B[k];
  coeffs[top] = SymbolicFraction(MultiPoly::one(eq.spec.alphabet()));
  return coeffs;
}

std::string AlgebraicEquation::to_string() const {
  std::string out = power_of_beta(std::uint64_t{1} << d()) + " = " + A.to_string();
  for (std::size_t k = 0; k < d(); ++k) {
    out += " + (" + B[k].to_string() + ")*" + power_of_beta(std::uint64_t{1} << k);
  }
  return out;
}

std::string SpecializedEquation::to_string() const {
  std::string out = power_of_beta(std::uint64_t{1} << d()) + " = " + A.to_string();
  for (std::size_t k = 0; k < d(); ++k) {
    out += " + (" + B[k].to_string() + ")*" + power_of_beta(std::uint64_t{1} << k);
  }
  return out;
}

}  // namespace cfauto
