#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfauto/backbone.hpp"
#include "cfauto/equation.hpp"
#include "cfauto/laurent_series.hpp"

namespace cfauto {

struct ResidualReport {
  // nullopt: every coefficient below `checked_precision` vanishes (CLEAN).
  std::optional<std::int64_t> valuation;
  std::int64_t checked_precision;
  std::string cleared_denominator;  // common denominator D of A, B_k

  bool clean() const noexcept { return !valuation.has_value(); }
};

// Forms D*beta^(2^d) + D*A + sum_k D*B_k*beta^(2^k), with D the lcm of the
// coefficient denominators, and checks it vanishes through t^-(N-1). beta
// is evaluated with enough extra precision to absorb deg(D*coefficient).
// Throws PrecisionTooLow for N < 64.
ResidualReport residual_valuation(const SpecializedEquation& eq, const BackboneSpec& spec,
                                  std::int64_t precision);

// gamma = sum_n s_n t^-n where letter i takes the value letter_values[i].
LaurentSeries gamma_series(const BackboneSpec& spec, const FieldPtr& field,
                           const std::vector<Elem>& letter_values, std::int64_t precision);

// sum_e P_e(t) x^e over F_q(t) with sum_e P_e gamma^e = 0 through
// `verified_precision` coefficients.
struct RelationCertificate {
  FieldPtr field;
  std::vector<UniPoly> coeffs;       // P_0 .. P_deg_x
  std::int64_t verified_precision;

  std::size_t deg_x() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  std::int64_t deg_t() const noexcept;
  std::string to_string() const;     // "(P_D)*x^D + ... + (P_0)"
};

// Envelope and result of a bounded relation search.
struct RelationSearch {
  std::optional<RelationCertificate> certificate;
  unsigned max_deg_x;
  unsigned max_deg_t;
  std::int64_t precision;
};

// For D' = 1, ..., max_deg_x: solve the linear system over F_q whose
// unknowns are the coefficients of P_0..P_D' (deg <= max_deg_t) and whose
// equations kill every coefficient of sum P_e gamma^e through t^-(N-1).
// Kernel vectors are tried in a fixed order; the first one that also
// vanishes through t^-(2N-1) is normalized (lowest nonzero P_e monic) and
// returned. Throws PrecisionTooLow unless N >= 2(D+1)(B+1) and gamma is
// known far enough for the doubled check.
RelationSearch relation_search(const LaurentSeries& gamma, unsigned max_deg_x, unsigned max_deg_t,
                               std::int64_t precision);

// sum_e P_e gamma^e, for checking certificates independently.
LaurentSeries relation_residual(const LaurentSeries& gamma, const std::vector<UniPoly>& coeffs);

// Automaton for s(eps) over the binary digits of n, least significant
// first. State c (a canonical backbone index) reads a 1 and moves to
// canonical(c+1); reading a 0 emits eps_c.
struct TwoDFA {
  BackboneSpec spec;
  std::vector<std::size_t> next;    // next[c] on an odd step
  std::vector<std::size_t> output;  // symbol emitted in state c at an even position

  std::size_t state_count() const noexcept { return next.size(); }
  std::string describe() const;
};

TwoDFA kernel_automaton(const BackboneSpec& spec);
std::size_t automaton_eval(const TwoDFA& dfa, std::uint64_t n);

// Distinct sequences among n -> s(2^e n + r), 0 <= r < 2^e <= 2^depth,
// compared on their first `length` terms. A brute-force view of the 2-kernel.
std::size_t kernel_size_estimate(const BackboneSpec& spec, unsigned depth, std::size_t length);

}  // namespace cfauto
