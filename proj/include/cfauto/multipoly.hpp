#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfauto/rational_function.hpp"

namespace cfauto {

// Ordered set of letter names; a letter's position is its symbol index.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const noexcept;

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

// Conventional letter names a, b, c, ... (then e0, e1, ... past z).
std::vector<std::string> default_letter_names(std::size_t count);

// Total degrees can exceed 64 bits once exponents are near the cap.
__extension__ using DegreeSum = unsigned __int128;

// Exponent vector over an alphabet.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint64_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint64_t exp = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::uint64_t exp(std::size_t i) const noexcept { return exps_[i]; }
  std::span<const std::uint64_t> exps() const noexcept { return exps_; }
  bool is_one() const noexcept;
  DegreeSum total_degree() const noexcept;

  // Throws ExponentOverflow when an exponent would exceed 64 bits.
  Monomial operator*(const Monomial& other) const;
  Monomial squared() const;
  bool divides(const Monomial& other) const noexcept;
  // Precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  // Graded-lexicographic: higher total degree first, ties broken
  // lexicographically with symbol 0 most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept = default;

  std::string to_string(const Alphabet& alphabet) const;

 private:
  std::vector<std::uint64_t> exps_;
};

// Sparse polynomial over GF(2) in the letters of an alphabet. Coefficients
// are implicit (a monomial is present or absent); terms are kept in
// descending graded-lex order.
class MultiPoly {
 public:
  explicit MultiPoly(AlphabetPtr alphabet);
  MultiPoly(AlphabetPtr alphabet, std::vector<Monomial> terms);  // cancels duplicate pairs

  static MultiPoly zero(AlphabetPtr alphabet) { return MultiPoly(std::move(alphabet)); }
  static MultiPoly one(AlphabetPtr alphabet);
  static MultiPoly from_monomial(AlphabetPtr alphabet, Monomial m);
  static MultiPoly variable(AlphabetPtr alphabet, std::size_t index);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].is_one(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  const Monomial& leading() const { return terms_.front(); }

  // Largest monomial dividing every term (the "content").
  Monomial monomial_content() const;
  MultiPoly times(const Monomial& m) const;
  // Precondition: m divides every term.
  MultiPoly divided_by(const Monomial& m) const;
  // Frobenius: every exponent vector doubled.
  MultiPoly square() const;
  // Exact quotient when divisor divides *this, else nullopt.
  std::optional<MultiPoly> exact_divide(const MultiPoly& divisor) const;
  // Toggles one monomial (adds it when absent, removes it when present).
  MultiPoly toggled(const Monomial& m) const;

  // Ring homomorphism into another alphabet: letter i maps to images[i].
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  // Ring homomorphism into F_q[t].
  UniPoly evaluate(const std::vector<UniPoly>& images) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) noexcept {
    return *a.alphabet_ == *b.alphabet_ && a.terms_ == b.terms_;
  }

  // "a^4*b^2*c+a*b+1"; zero is "0".
  std::string to_string() const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Monomial> terms_;
};

// Throws SymbolUniverseMismatch unless both alphabets agree.
void require_same_alphabet(const Alphabet& a, const Alphabet& b);

// Element of F_2(letters). Kept reduced by common monomial content and by
// any non-monomial denominator factor that divides the numerator exactly;
// no full multivariate gcd, so equality is decided by cross-multiplication.
class SymbolicFraction {
 public:
  explicit SymbolicFraction(AlphabetPtr alphabet);
  SymbolicFraction(const MultiPoly& poly);  // NOLINT: implicit embedding
  // Throws ZeroDenominator when den == 0.
  SymbolicFraction(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }
  const AlphabetPtr& alphabet() const noexcept { return num_.alphabet(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }

  friend SymbolicFraction operator+(const SymbolicFraction& f, const SymbolicFraction& g);
  friend SymbolicFraction operator*(const SymbolicFraction& f, const SymbolicFraction& g);
  // Throws ZeroDenominator when g == 0.
  friend SymbolicFraction operator/(const SymbolicFraction& f, const SymbolicFraction& g);

  SymbolicFraction substitute(const std::vector<MultiPoly>& images) const;

  // "num" for polynomials, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  void reduce();

  MultiPoly num_;
  MultiPoly den_;
};

// f == g in F_2(letters): f.num * g.den == g.num * f.den.
bool frac_eq(const SymbolicFraction& f, const SymbolicFraction& g);

// Specialization into F_q(t). Every letter must map to a polynomial of
// degree >= 1 (ConstantLetterAssignment); a denominator that vanishes
// afterwards raises ZeroDenominatorAfterEval.
RationalFunction frac_eval(const SymbolicFraction& f, const std::vector<UniPoly>& images);
void require_nonconstant_images(const std::vector<UniPoly>& images, const Alphabet& alphabet);

// Parses the canonical rendering back: poly := term ('+' term)*,
// term := '0' | '1' | factor ('*' factor)*, factor := letter ('^' uint)?,
// fraction := poly | '(' poly ')/(' poly ')'. Throws ParseError.
MultiPoly parse_multipoly(std::string_view text, const AlphabetPtr& alphabet);
SymbolicFraction parse_fraction(std::string_view text, const AlphabetPtr& alphabet);

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Exact determinant by cofactor expansion (characteristic 2, so no signs).
// Throws NonSquareMatrix; order is limited to 16.
MultiPoly det(const PolyMatrix& m);
// Determinant of the minor with row i and column j removed.
MultiPoly cofactor(const PolyMatrix& m, std::size_t i, std::size_t j);
// sum_i m[i][j] * cofactor(m, i, j).
MultiPoly det_along_column(const PolyMatrix& m, std::size_t j);

}  // namespace cfauto
