#pragma once

#include <string>
#include <vector>

#include "cfauto/backbone.hpp"
#include "cfauto/multipoly.hpp"
#include "cfauto/rational_function.hpp"

namespace cfauto {

// beta^(2^d) = A + sum_{k<d} B_k beta^(2^k) with coefficients in F_2(letters),
// where beta = 1 / CF(s(eps)).
struct AlgebraicEquation {
  BackboneSpec spec;
  MultiPoly delta;                   // det M(d)
  SymbolicFraction A;
  std::vector<SymbolicFraction> B;   // B_0 .. B_{d-1}

  std::size_t d() const noexcept { return B.size(); }
  // "beta^4 = A + (B_0)*beta + (B_1)*beta^2" with canonical fraction text.
  std::string to_string() const;
};

struct SpecializedEquation {
  RationalFunction A;
  std::vector<RationalFunction> B;
  std::vector<UniPoly> assignment;   // image of each alphabet letter

  std::size_t d() const noexcept { return B.size(); }
  std::string to_string() const;
};

// The finite part z_i of the i-th Frobenius power of beta = sum 1/u_n:
//   z_0 = sum_{k=1}^{l+d-1} 1/u_k,
//   z_i = sum_{n>=1, n+i<=l+d-1} eps(n,i)/u_{n+i}   (1 <= i <= d),
// plus eps(0,d)/u_d when l = 0 and i = d (the m = 1 term of E_0 that starts
// at n = 0). Throws InvalidIndex unless 0 <= i <= d, InvalidBackbone unless d >= 2.
SymbolicFraction compute_z(const BackboneSpec& spec, unsigned i);

// M(d) with m_{i,j} = eps(d + l + j - i, i); row 0 is all ones.
PolyMatrix build_matrix(const BackboneSpec& spec);

// Cramer elimination of the partial sums over E_j. Requires 2 <= d <= 8
// (InvalidBackbone); throws DegenerateDeterminant when det M(d) = 0.
// `expansion_column` selects the Laplace column used for det M(d).
AlgebraicEquation derive_equation(const BackboneSpec& spec, std::size_t expansion_column = 0);

// Evaluates every coefficient into F_q(t). Throws ConstantLetterAssignment,
// DegenerateDeterminant (det M(d) vanishes after specialization).
SpecializedEquation specialize_equation(const AlgebraicEquation& eq, const std::vector<UniPoly>& images);

// Letter-to-letter (or letter-to-polynomial) substitution into the alphabet
// of `target`, e.g. collapsing c := a.
AlgebraicEquation substitute_letters(const AlgebraicEquation& eq, const BackboneSpec& target,
                                     const std::vector<MultiPoly>& images);

// P(x) = A x^(2^d) + sum_k B_k x^(2^d - 2^k) + 1 with P(alpha) = 0;
// coefficients in descending degree (length 2^d + 1).
std::vector<SymbolicFraction> alpha_polynomial(const AlgebraicEquation& eq);

}  // namespace cfauto
