#include "cfauto/multipoly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <unordered_map>

#include "cfauto/error.hpp"

namespace cfauto {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {}

std::optional<std::size_t> Alphabet::find(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

std::vector<std::string> default_letter_names(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
  }
  return names;
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (&a != &b && !(a == b)) {
    throw Error(ErrorCode::SymbolUniverseMismatch, "polynomials over different letter sets");
  }
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint64_t exp) {
  Monomial m(nvars);
  m.exps_.at(index) = exp;
  return m;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint64_t e) { return e == 0; });
}

DegreeSum Monomial::total_degree() const noexcept {
  DegreeSum s = 0;
  for (std::uint64_t e : exps_) s += e;
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (__builtin_add_overflow(exps_[i], other.exps_[i], &r.exps_[i])) {
      throw Error(ErrorCode::ExponentOverflow, "monomial exponent exceeds 64 bits");
    }
  }
  return r;
}

Monomial Monomial::squared() const { return *this * *this; }

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = other.exps_[i] - exps_[i];
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.exps_ <=> b.exps_;
}

std::string Monomial::to_string(const Alphabet& alphabet) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += alphabet.name(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- MultiPoly

namespace {

// Sort descending and drop pairs of equal monomials (1 + 1 = 0).
void canonicalize_terms(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end(), std::greater<>());
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(terms[i]));
    i = j;
  }
  terms = std::move(out);
}

}  // namespace

MultiPoly::MultiPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

MultiPoly::MultiPoly(AlphabetPtr alphabet, std::vector<Monomial> terms)
    : alphabet_(std::move(alphabet)), terms_(std::move(terms)) {
  for (const Monomial& m : terms_) {
    if (m.nvars() != alphabet_->size()) {
      throw Error(ErrorCode::SymbolUniverseMismatch, "monomial arity differs from alphabet size");
    }
  }
  canonicalize_terms(terms_);
}

MultiPoly MultiPoly::one(AlphabetPtr alphabet) {
  const std::size_t n = alphabet->size();
  return from_monomial(std::move(alphabet), Monomial(n));
}

MultiPoly MultiPoly::from_monomial(AlphabetPtr alphabet, Monomial m) {
  std::vector<Monomial> terms;
  terms.push_back(std::move(m));
  return MultiPoly(std::move(alphabet), std::move(terms));
}

MultiPoly MultiPoly::variable(AlphabetPtr alphabet, std::size_t index) {
  const std::size_t n = alphabet->size();
  return from_monomial(std::move(alphabet), Monomial::variable(n, index));
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return Monomial(alphabet_->size());
  Monomial g = terms_.front();
  for (const Monomial& m : terms_) g = g.gcd(m);
  return g;
}

MultiPoly MultiPoly::times(const Monomial& m) const {
  MultiPoly r(alphabet_);
  r.terms_.reserve(terms_.size());
  // Monomial orders are multiplicative, so the order is preserved.
  for (const Monomial& t : terms_) r.terms_.push_back(t * m);
  return r;
}

MultiPoly MultiPoly::divided_by(const Monomial& m) const {
  MultiPoly r(alphabet_);
  r.terms_.reserve(terms_.size());
  for (const Monomial& t : terms_) r.terms_.push_back(m.quotient_of(t));
  return r;
}

MultiPoly MultiPoly::square() const {
  MultiPoly r(alphabet_);
  r.terms_.reserve(terms_.size());
  for (const Monomial& t : terms_) r.terms_.push_back(t.squared());
  return r;
}

MultiPoly MultiPoly::toggled(const Monomial& m) const {
  return *this + from_monomial(alphabet_, m);
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require_same_alphabet(*a.alphabet_, *b.alphabet_);
  MultiPoly r(a.alphabet_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    const auto cmp = *i <=> *j;
    if (cmp > 0) {
      r.terms_.push_back(*i++);
    } else if (cmp < 0) {
      r.terms_.push_back(*j++);
    } else {
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), i, a.terms_.end());
  r.terms_.insert(r.terms_.end(), j, b.terms_.end());
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_alphabet(*a.alphabet_, *b.alphabet_);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.alphabet_);
  if (a.is_monomial()) return b.times(a.terms_.front());
  if (b.is_monomial()) return a.times(b.terms_.front());
  std::vector<Monomial> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const Monomial& x : a.terms_) {
    for (const Monomial& y : b.terms_) products.push_back(x * y);
  }
  return MultiPoly(a.alphabet_, std::move(products));
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& divisor) const {
  require_same_alphabet(*alphabet_, *divisor.alphabet_);
  if (divisor.is_zero()) throw Error(ErrorCode::ZeroDenominator, "exact division by zero polynomial");
  if (divisor.is_monomial()) {
    const Monomial& m = divisor.leading();
    for (const Monomial& t : terms_) {
      if (!m.divides(t)) return std::nullopt;
    }
    return divided_by(m);
  }
  MultiPoly remainder = *this;
  std::vector<Monomial> quotient;
  const Monomial& lead = divisor.leading();
  while (!remainder.is_zero()) {
    if (!lead.divides(remainder.leading())) return std::nullopt;
    Monomial q = lead.quotient_of(remainder.leading());
    remainder += divisor.times(q);
    quotient.push_back(std::move(q));
  }
  return MultiPoly(alphabet_, std::move(quotient));
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != alphabet_->size()) {
    throw Error(ErrorCode::SymbolUniverseMismatch, "substitution needs one image per letter");
  }
  if (images.empty()) return *this;
  const AlphabetPtr& target = images.front().alphabet();
  std::map<std::pair<std::size_t, std::uint64_t>, MultiPoly> powers;
  auto power = [&](std::size_t i, std::uint64_t e) -> const MultiPoly& {
    auto it = powers.find({i, e});
    if (it != powers.end()) return it->second;
    MultiPoly result = MultiPoly::one(target);
    MultiPoly base = images[i];
    for (std::uint64_t k = e; k != 0; k >>= 1) {
      if (k & 1u) result = result * base;
      if (k > 1) base = base.square();
    }
    return powers.emplace(std::make_pair(i, e), std::move(result)).first->second;
  };
  MultiPoly sum(target);
  for (const Monomial& t : terms_) {
    MultiPoly term = MultiPoly::one(target);
    for (std::size_t i = 0; i < t.nvars(); ++i) {
      if (t.exp(i) != 0) term = term * power(i, t.exp(i));
    }
    sum += term;
  }
  return sum;
}

UniPoly MultiPoly::evaluate(const std::vector<UniPoly>& images) const {
  if (images.size() != alphabet_->size()) {
    throw Error(ErrorCode::SymbolUniverseMismatch, "evaluation needs one image per letter");
  }
  const FieldPtr field = images.empty() ? gf2() : images.front().field();
  std::map<std::pair<std::size_t, std::uint64_t>, UniPoly> powers;
  UniPoly sum(field);
  for (const Monomial& t : terms_) {
    UniPoly term = UniPoly::one(field);
    for (std::size_t i = 0; i < t.nvars(); ++i) {
      const std::uint64_t e = t.exp(i);
      if (e == 0) continue;
      auto it = powers.find({i, e});
      if (it == powers.end()) it = powers.emplace(std::make_pair(i, e), images[i].pow(e)).first;
      term = term * it->second;
    }
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Monomial& m : terms_) {
    if (!out.empty()) out += '+';
    out += m.to_string(*alphabet_);
  }
  return out;
}

// -------------------------------------------------------- SymbolicFraction

SymbolicFraction::SymbolicFraction(AlphabetPtr alphabet)
    : num_(alphabet), den_(MultiPoly::one(alphabet)) {}

SymbolicFraction::SymbolicFraction(const MultiPoly& poly)
    : num_(poly), den_(MultiPoly::one(poly.alphabet())) {}

SymbolicFraction::SymbolicFraction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_alphabet(*num_.alphabet(), *den_.alphabet());
  if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "fraction with zero denominator");
  reduce();
}

void SymbolicFraction::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly::one(num_.alphabet());
    return;
  }
  auto strip_content = [this] {
    const Monomial g = num_.monomial_content().gcd(den_.monomial_content());
    if (!g.is_one()) {
      num_ = num_.divided_by(g);
      den_ = den_.divided_by(g);
    }
  };
  strip_content();
  // den = m * P with m monomial; cancel P when it divides the numerator.
  const Monomial m = den_.monomial_content();
  const MultiPoly cofactor = den_.divided_by(m);
  if (!cofactor.is_one()) {
    if (auto q = num_.exact_divide(cofactor)) {
      num_ = std::move(*q);
      den_ = MultiPoly::from_monomial(den_.alphabet(), m);
      strip_content();
    }
  }
}

SymbolicFraction operator+(const SymbolicFraction& f, const SymbolicFraction& g) {
  if (f.den_ == g.den_) return SymbolicFraction(f.num_ + g.num_, f.den_);
  return SymbolicFraction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

SymbolicFraction operator*(const SymbolicFraction& f, const SymbolicFraction& g) {
  return SymbolicFraction(f.num_ * g.num_, f.den_ * g.den_);
}

SymbolicFraction operator/(const SymbolicFraction& f, const SymbolicFraction& g) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero fraction");
  return SymbolicFraction(f.num_ * g.den_, f.den_ * g.num_);
}

SymbolicFraction SymbolicFraction::substitute(const std::vector<MultiPoly>& images) const {
  return SymbolicFraction(num_.substitute(images), den_.substitute(images));
}

std::string SymbolicFraction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool frac_eq(const SymbolicFraction& f, const SymbolicFraction& g) {
  require_same_alphabet(*f.alphabet(), *g.alphabet());
  return f.num() * g.den() == g.num() * f.den();
}

void require_nonconstant_images(const std::vector<UniPoly>& images, const Alphabet& alphabet) {
  if (images.size() != alphabet.size()) {
    throw Error(ErrorCode::SymbolUniverseMismatch,
                "assignment covers " + std::to_string(images.size()) + " of " +
                    std::to_string(alphabet.size()) + " letters");
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].is_zero() || images[i].degree() < 1) {
      throw Error(ErrorCode::ConstantLetterAssignment,
                  "letter " + alphabet.name(i) + " maps to constant " + images[i].to_string());
    }
  }
}

RationalFunction frac_eval(const SymbolicFraction& f, const std::vector<UniPoly>& images) {
  require_nonconstant_images(images, *f.alphabet());
  UniPoly den = f.den().evaluate(images);
  if (den.is_zero()) {
    throw Error(ErrorCode::ZeroDenominatorAfterEval, "denominator " + f.den().to_string() + " vanishes");
  }
  return RationalFunction(f.num().evaluate(images), std::move(den));
}

// ------------------------------------------------------------------ parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const AlphabetPtr& alphabet) : text_(text), alphabet_(alphabet) {}

  MultiPoly poly() {
    MultiPoly sum(alphabet_);
    sum += term();
    while (peek() == '+') {
      ++pos_;
      sum += term();
    }
    return sum;
  }

  bool at_end() const { return pos_ == text_.size(); }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::size_t pos() const { return pos_; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(pos_) + " in \"" +
                                           std::string(text_) + "\"");
  }

 private:
  MultiPoly term() {
    if (peek() == '0' || peek() == '1') {
      const char c = text_[pos_++];
      return c == '1' ? MultiPoly::one(alphabet_) : MultiPoly(alphabet_);
    }
    Monomial m(alphabet_->size());
    m = m * factor();
    while (peek() == '*') {
      ++pos_;
      m = m * factor();
    }
    return MultiPoly::from_monomial(alphabet_, std::move(m));
  }

  Monomial factor() {
    const std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected letter");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto index = alphabet_->find(name);
    if (!index) {
      pos_ = start;
      fail("unknown letter '" + std::string(name) + "'");
    }
    std::uint64_t e = 1;
    if (peek() == '^') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_++] - '0');
        if (__builtin_mul_overflow(e, 10u, &e) || __builtin_add_overflow(e, digit, &e)) {
          fail("exponent overflow");
        }
      }
    }
    return Monomial::variable(alphabet_->size(), *index, e);
  }

  std::string_view text_;
  const AlphabetPtr& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_multipoly(std::string_view text, const AlphabetPtr& alphabet) {
  PolyParser p(text, alphabet);
  MultiPoly r = p.poly();
  if (!p.at_end()) p.fail("unexpected character");
  return r;
}

SymbolicFraction parse_fraction(std::string_view text, const AlphabetPtr& alphabet) {
  PolyParser p(text, alphabet);
  if (p.peek() != '(') {
    MultiPoly r = p.poly();
    if (!p.at_end()) p.fail("unexpected character");
    return SymbolicFraction(r);
  }
  p.expect('(');
  MultiPoly num = p.poly();
  p.expect(')');
  p.expect('/');
  p.expect('(');
  MultiPoly den = p.poly();
  p.expect(')');
  if (!p.at_end()) p.fail("unexpected character");
  if (den.is_zero()) p.fail("zero denominator");
  return SymbolicFraction(std::move(num), std::move(den));
}

// ------------------------------------------------------------ determinants

namespace {

void require_square(const PolyMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) {
      throw Error(ErrorCode::NonSquareMatrix, "matrix with " + std::to_string(m.size()) +
                                                  " rows has a row of length " +
                                                  std::to_string(row.size()));
    }
  }
  if (m.size() > 16) throw Error(ErrorCode::InvalidIndex, "matrix order above 16");
}

}  // namespace

MultiPoly det(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::NonSquareMatrix, "empty matrix has no alphabet");
  // minors[mask]: determinant of rows n-|mask|.. restricted to columns in mask.
  std::unordered_map<std::uint32_t, MultiPoly> minors;
  std::function<MultiPoly(std::uint32_t)> minor = [&](std::uint32_t mask) -> MultiPoly {
    if (mask == 0) return MultiPoly::one(m[0][0].alphabet());
    if (auto it = minors.find(mask); it != minors.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    MultiPoly sum(m[0][0].alphabet());
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c)) || m[row][c].is_zero()) continue;
      sum += m[row][c] * minor(mask & ~(1u << c));
    }
    return minors.emplace(mask, sum).first->second;
  };
  return minor((1u << n) - 1u);
}

MultiPoly cofactor(const PolyMatrix& m, std::size_t i, std::size_t j) {
  require_square(m);
  const std::size_t n = m.size();
  if (i >= n || j >= n) throw Error(ErrorCode::InvalidIndex, "cofactor index outside matrix");
  if (n == 1) return MultiPoly::one(m[0][0].alphabet());
  PolyMatrix minor_matrix;
  minor_matrix.reserve(n - 1);
  for (std::size_t r = 0; r < n; ++r) {
    if (r == i) continue;
    std::vector<MultiPoly> row;
    row.reserve(n - 1);
    for (std::size_t c = 0; c < n; ++c) {
      if (c != j) row.push_back(m[r][c]);
    }
    minor_matrix.push_back(std::move(row));
  }
  return det(minor_matrix);
}

MultiPoly det_along_column(const PolyMatrix& m, std::size_t j) {
  require_square(m);
  if (m.empty() || j >= m.size()) throw Error(ErrorCode::InvalidIndex, "expansion column outside matrix");
  MultiPoly sum(m[0][0].alphabet());
  for (std::size_t i = 0; i < m.size(); ++i) sum += m[i][j] * cofactor(m, i, j);
  return sum;
}

}  // namespace cfauto
