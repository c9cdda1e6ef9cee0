#include "cfauto/backbone.hpp"

#include <bit>

#include "cfauto/error.hpp"

namespace cfauto {

BackboneSpec::BackboneSpec(std::size_t prefix_length, std::size_t period_length,
                           AlphabetPtr alphabet, std::vector<std::size_t> letters)
    : l_(prefix_length), d_(period_length), alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (d_ < 1) throw Error(ErrorCode::InvalidBackbone, "period length must be at least 1");
  if (letters_.size() != l_ + d_) {
    throw Error(ErrorCode::InvalidBackbone, "expected " + std::to_string(l_ + d_) + " letters, got " +
                                                std::to_string(letters_.size()));
  }
  for (std::size_t s : letters_) {
    if (s >= alphabet_->size()) throw Error(ErrorCode::InvalidBackbone, "letter index outside alphabet");
  }
}

BackboneSpec BackboneSpec::from_names(const std::vector<std::string>& prefix,
                                      const std::vector<std::string>& period) {
  std::vector<std::string> names;
  std::vector<std::size_t> letters;
  auto intern = [&](const std::string& token) {
    if (token.empty()) throw Error(ErrorCode::InvalidBackbone, "empty letter name");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == token) {
        letters.push_back(i);
        return;
      }
    }
    names.push_back(token);
    letters.push_back(names.size() - 1);
  };
  for (const auto& t : prefix) intern(t);
  for (const auto& t : period) intern(t);
  return BackboneSpec(prefix.size(), period.size(), make_alphabet(std::move(names)), std::move(letters));
}

std::vector<std::string> BackboneSpec::letter_names() const {
  std::vector<std::string> out;
  out.reserve(letters_.size());
  for (std::size_t s : letters_) out.push_back(alphabet_->name(s));
  return out;
}

std::size_t BackboneSpec::canonical_index(std::uint64_t n) const noexcept {
  if (n < l_) return static_cast<std::size_t>(n);
  return l_ + static_cast<std::size_t>((n - l_) % d_);
}

std::string BackboneSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < l_; ++i) out += alphabet_->name(letters_[i]) + ",";
  out += "(";
  for (std::size_t i = 0; i < d_; ++i) {
    if (i) out += ",";
    out += alphabet_->name(letters_[l_ + i]);
  }
  return out + ")^inf";
}

std::size_t epsilon_at(const BackboneSpec& spec, std::uint64_t n) {
  return spec.letters()[spec.canonical_index(n)];
}

std::vector<std::size_t> word(const BackboneSpec& spec, unsigned n) {
  if (n > 24) throw Error(ErrorCode::WordTooLarge, "W_" + std::to_string(n) + " exceeds 2^24 - 1 letters");
  std::vector<std::size_t> w;
  w.reserve((std::size_t{1} << n) - 1);
  for (unsigned k = 0; k < n; ++k) {
    const std::size_t half = w.size();
    w.push_back(epsilon_at(spec, k));
    w.insert(w.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(half));
  }
  return w;
}

std::size_t s_at(const BackboneSpec& spec, std::uint64_t n) {
  // n + 1 wraps to 0 only for n = 2^64 - 1, whose v2(2^64) = 64.
  const std::uint64_t m = n + 1;
  const unsigned v = m == 0 ? 64u : static_cast<unsigned>(std::countr_zero(m));
  return epsilon_at(spec, v);
}

std::vector<std::size_t> s_prefix(const BackboneSpec& spec, std::size_t count) {
  std::vector<std::size_t> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(s_at(spec, n));
  return out;
}

Monomial weighted_product(const BackboneSpec& spec, std::uint64_t n, unsigned i) {
  if (i >= 64) throw Error(ErrorCode::LevelTooLarge, "weighted product exponent 2^" + std::to_string(i));
  Monomial m(spec.alphabet()->size());
  for (unsigned k = 0; k < i; ++k) {
    m = m.squared() * Monomial::variable(m.nvars(), epsilon_at(spec, n + k));
  }
  return m;
}

Monomial eps_weighted(const BackboneSpec& spec, std::uint64_t n, unsigned i) {
  if (i > spec.period_length()) {
    throw Error(ErrorCode::InvalidIndex, "eps(n, i) needs i <= d = " + std::to_string(spec.period_length()));
  }
  return weighted_product(spec, n, i);
}

}  // namespace cfauto
