#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfauto/multipoly.hpp"

namespace cfauto {

// An ultimately periodic letter sequence of type (l, d): a prefix of l
// letters followed by a period of d letters repeated forever. Letters are
// symbol indices into the alphabet and may repeat.
class BackboneSpec {
 public:
  // Throws InvalidBackbone unless d >= 1, letters.size() == l + d and every
  // letter indexes the alphabet.
  BackboneSpec(std::size_t prefix_length, std::size_t period_length, AlphabetPtr alphabet,
               std::vector<std::size_t> letters);

  // Letter tokens; the alphabet lists distinct names by first appearance
  // (prefix first, then period).
  static BackboneSpec from_names(const std::vector<std::string>& prefix,
                                 const std::vector<std::string>& period);

  std::size_t prefix_length() const noexcept { return l_; }
  std::size_t period_length() const noexcept { return d_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::size_t>& letters() const noexcept { return letters_; }
  std::vector<std::string> letter_names() const;

  // n for n < l, otherwise l + (n - l) mod d.
  std::size_t canonical_index(std::uint64_t n) const noexcept;

  // "a,(b,c)^inf" style rendering.
  std::string to_string() const;

  friend bool operator==(const BackboneSpec& a, const BackboneSpec& b) noexcept {
    return a.l_ == b.l_ && a.d_ == b.d_ && *a.alphabet_ == *b.alphabet_ && a.letters_ == b.letters_;
  }

 private:
  std::size_t l_;
  std::size_t d_;
  AlphabetPtr alphabet_;
  std::vector<std::size_t> letters_;
};

// Symbol index of epsilon_n.
std::size_t epsilon_at(const BackboneSpec& spec, std::uint64_t n);

// W_n as symbol indices, with W_0 empty and W_{n+1} = W_n eps_n W_n.
// Throws WordTooLarge for n > 24.
std::vector<std::size_t> word(const BackboneSpec& spec, unsigned n);

// s_n = eps_{v2(n+1)}, the n-th letter of the limit word.
std::size_t s_at(const BackboneSpec& spec, std::uint64_t n);

// First `count` letters of s(eps).
std::vector<std::size_t> s_prefix(const BackboneSpec& spec, std::size_t count);

// eps(n, i) = eps(n, i-1)^2 eps_{n+i-1}, eps(n, 0) = 1, for 0 <= i <= d.
// Throws InvalidIndex for i > d.
Monomial eps_weighted(const BackboneSpec& spec, std::uint64_t n, unsigned i);

// prod_{m < i} eps_{n+m}^{2^{i-1-m}} with no bound on i (i < 64); the same
// product as eps_weighted and, for n = 0, the monomial u_i.
Monomial weighted_product(const BackboneSpec& spec, std::uint64_t n, unsigned i);

}  // namespace cfauto
