#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cfauto/backbone.hpp"
#include "cfauto/laurent_series.hpp"

namespace cfauto {

// x_n / y_n = [s_0, ..., s_{n-1}].
template <class Ring>
struct ConvergentPair {
  Ring x;
  Ring y;
  std::size_t index;
};

// Three-term recurrence x_n = s_{n-1} x_{n-1} + x_{n-2} (likewise y_n),
// seeded so that x_1 = s_0, y_1 = 1. `one` fixes the ring's unit.
template <class Ring>
std::vector<ConvergentPair<Ring>> convergents(std::span<const Ring> partial_quotients, const Ring& one) {
  std::vector<ConvergentPair<Ring>> out;
  out.reserve(partial_quotients.size());
  const Ring zero = one + one;
  Ring x_prev = one, y_prev = zero;  // index 0
  Ring x_prev2 = zero, y_prev2 = one;  // index -1
  for (std::size_t n = 0; n < partial_quotients.size(); ++n) {
    const Ring& s = partial_quotients[n];
    Ring x = s * x_prev + x_prev2;
    Ring y = s * y_prev + y_prev2;
    x_prev2 = std::move(x_prev);
    y_prev2 = std::move(y_prev);
    x_prev = x;
    y_prev = y;
    out.push_back({std::move(x), std::move(y), n + 1});
  }
  return out;
}

// u_n / v_n = [s_0, ..., s_{2^n - 2}], the convergent closing the word W_n.
template <class Ring>
struct SpecialConvergent {
  Ring u;
  Ring v;
  unsigned level;
};

// (u_1, v_1) = (eps_0, 1) and u_{n+1} = eps_n u_n^2, v_{n+1} = eps_n u_n v_n + 1,
// with letters replaced by `images`.
template <class Ring>
std::vector<SpecialConvergent<Ring>> special_convergents_in(const BackboneSpec& spec,
                                                            const std::vector<Ring>& images,
                                                            unsigned n_max, const Ring& one) {
  std::vector<SpecialConvergent<Ring>> out;
  out.reserve(n_max);
  Ring u = images[epsilon_at(spec, 0)];
  Ring v = one;
  out.push_back({u, v, 1});
  for (unsigned n = 1; n < n_max; ++n) {
    const Ring& e = images[epsilon_at(spec, n)];
    Ring eu = e * u;
    v = eu * v + one;
    u = eu * u;
    out.push_back({u, v, n + 1});
  }
  return out;
}

// Symbolic mode: entries are polynomials in the letters. Throws
// LevelTooLarge unless 1 <= n_max <= 64.
std::vector<SpecialConvergent<MultiPoly>> special_convergents(const BackboneSpec& spec, unsigned n_max);

// Specialized mode over F_q[t]; images are indexed by alphabet symbol.
// Throws LevelTooLarge unless 1 <= n_max <= 30.
std::vector<SpecialConvergent<UniPoly>> special_convergents(const BackboneSpec& spec,
                                                            const std::vector<UniPoly>& images,
                                                            unsigned n_max);

// Images of s_0, ..., s_{count-1}.
std::vector<UniPoly> partial_quotients(const BackboneSpec& spec, const std::vector<UniPoly>& images,
                                       std::size_t count);

struct CfSeries {
  LaurentSeries alpha;          // CF(s) to the requested precision
  LaurentSeries beta;           // 1/alpha, truncated to the requested precision
  LaurentSeries beta_partial;   // sum_{n <= levels} 1/u_n, same precision
  std::size_t convergent_index; // m with alpha ~ x_m / y_m
  unsigned partial_levels;      // number of 1/u_n terms summed
  bool routes_agree;            // beta == beta_partial
};

// Evaluates alpha and beta = 1/alpha to precision N. alpha comes from the
// convergent x_m/y_m with deg y_m + deg y_{m+1} >= N (the exact error
// valuation); beta is cross-checked against partial sums of 1/u_n.
// Throws ConstantLetterAssignment, PrecisionTooLow.
CfSeries cf_to_series(const BackboneSpec& spec, const std::vector<UniPoly>& images, std::int64_t precision);

// sum_{n=1}^{levels} 1/u_n expanded to the given precision.
LaurentSeries beta_partial_sum(const BackboneSpec& spec, const std::vector<UniPoly>& images,
                               unsigned levels, std::int64_t precision);

}  // namespace cfauto
