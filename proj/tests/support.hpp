#pragma once

// Hand-rolled generators for the property tests. Every test seeds its own
// engine so failures replay exactly.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cfauto/backbone.hpp"
#include "cfauto/field.hpp"
#include "cfauto/multipoly.hpp"
#include "cfauto/unipoly.hpp"

namespace testing {

using Rng = std::mt19937_64;

inline std::uint64_t pick(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline cfauto::Elem random_elem(Rng& rng, const cfauto::GaloisField& f) {
  return static_cast<cfauto::Elem>(pick(rng, 0, f.order() - 1));
}

inline cfauto::Elem random_nonzero(Rng& rng, const cfauto::GaloisField& f) {
  return static_cast<cfauto::Elem>(pick(rng, 1, f.order() - 1));
}

// Degree exactly `degree` (nonzero leading coefficient).
inline cfauto::UniPoly random_poly_of_degree(Rng& rng, const cfauto::FieldPtr& f, std::size_t degree) {
  std::vector<cfauto::Elem> c(degree + 1);
  for (auto& x : c) x = random_elem(rng, *f);
  c.back() = random_nonzero(rng, *f);
  return cfauto::UniPoly(f, std::move(c));
}

// Possibly zero, degree at most max_degree.
inline cfauto::UniPoly random_poly(Rng& rng, const cfauto::FieldPtr& f, std::size_t max_degree) {
  std::vector<cfauto::Elem> c(pick(rng, 0, max_degree + 1));
  for (auto& x : c) x = random_elem(rng, *f);
  return cfauto::UniPoly(f, std::move(c));
}

inline cfauto::UniPoly random_nonzero_poly(Rng& rng, const cfauto::FieldPtr& f, std::size_t max_degree) {
  return random_poly_of_degree(rng, f, pick(rng, 0, max_degree));
}

// Backbone with l <= max_l, 1 <= d (or min_d) <= max_d, letters drawn from a
// pool so that repeats happen.
inline cfauto::BackboneSpec random_spec(Rng& rng, std::size_t max_l, std::size_t min_d, std::size_t max_d) {
  const std::size_t l = pick(rng, 0, max_l);
  const std::size_t d = pick(rng, min_d, max_d);
  const auto pool = cfauto::default_letter_names(l + d);
  const std::size_t distinct = pick(rng, 1, l + d);
  std::vector<std::string> prefix, period;
  for (std::size_t i = 0; i < l; ++i) prefix.push_back(pool[pick(rng, 0, distinct - 1)]);
  for (std::size_t i = 0; i < d; ++i) period.push_back(pool[pick(rng, 0, distinct - 1)]);
  return cfauto::BackboneSpec::from_names(prefix, period);
}

// Every letter gets a polynomial of degree 1..max_degree over GF(2).
inline std::vector<cfauto::UniPoly> random_images(Rng& rng, const cfauto::BackboneSpec& spec,
                                                  std::size_t max_degree) {
  std::vector<cfauto::UniPoly> images;
  for (std::size_t i = 0; i < spec.alphabet()->size(); ++i) {
    images.push_back(random_poly_of_degree(rng, cfauto::gf2(), pick(rng, 1, max_degree)));
  }
  return images;
}

inline cfauto::Monomial random_monomial(Rng& rng, std::size_t nvars, std::uint64_t max_exp) {
  std::vector<std::uint64_t> e(nvars);
  for (auto& x : e) x = pick(rng, 0, max_exp);
  return cfauto::Monomial(std::move(e));
}

inline cfauto::MultiPoly random_multipoly(Rng& rng, const cfauto::AlphabetPtr& alphabet, std::size_t max_terms,
                                          std::uint64_t max_exp) {
  std::vector<cfauto::Monomial> terms;
  const std::size_t n = pick(rng, 0, max_terms);
  for (std::size_t i = 0; i < n; ++i) terms.push_back(random_monomial(rng, alphabet->size(), max_exp));
  return cfauto::MultiPoly(alphabet, std::move(terms));
}

inline cfauto::MultiPoly random_nonzero_multipoly(Rng& rng, const cfauto::AlphabetPtr& alphabet,
                                                  std::size_t max_terms, std::uint64_t max_exp) {
  for (;;) {
    auto p = random_multipoly(rng, alphabet, max_terms, max_exp);
    if (!p.is_zero()) return p;
  }
}

// Every backbone with l <= max_l and d <= max_d whose letters are a
// restricted growth string (each new letter is the next unused one), so
// all letter-equality patterns appear once.
inline std::vector<cfauto::BackboneSpec> all_specs(std::size_t max_l, std::size_t min_d, std::size_t max_d) {
  std::vector<cfauto::BackboneSpec> out;
  for (std::size_t l = 0; l <= max_l; ++l) {
    for (std::size_t d = min_d; d <= max_d; ++d) {
      const std::size_t len = l + d;
      std::vector<std::size_t> rgs(len, 0);
      for (;;) {
        auto names = cfauto::default_letter_names(len);
        std::vector<std::string> prefix, period;
        for (std::size_t i = 0; i < len; ++i) (i < l ? prefix : period).push_back(names[rgs[i]]);
        out.push_back(cfauto::BackboneSpec::from_names(prefix, period));
        // next restricted growth string
        std::size_t i = len;
        bool advanced = false;
        while (i-- > 1) {
          std::size_t mx = 0;
          for (std::size_t k = 0; k < i; ++k) mx = std::max(mx, rgs[k]);
          if (rgs[i] <= mx) {
            ++rgs[i];
            for (std::size_t k = i + 1; k < len; ++k) rgs[k] = 0;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    }
  }
  return out;
}

}  // namespace testing
