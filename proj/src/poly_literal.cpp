#include "cfauto/poly_literal.hpp"

#include <cctype>
#include <string>

#include "cfauto/error.hpp"

namespace cfauto {

namespace {

constexpr std::size_t kMaxLiteralDegree = 1u << 20;

}  // namespace

UniPoly parse_poly_literal(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::ParseError,
                what + " at position " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  };
  if (s.empty()) fail("empty polynomial");
  std::vector<Elem> coeffs;
  auto add_term = [&](std::size_t deg) {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
    coeffs[deg] ^= 1;
  };
  for (;;) {
    if (pos >= s.size()) fail("expected term");
    if (s[pos] == '1') {
      ++pos;
      add_term(0);
    } else if (s[pos] == 't') {
      ++pos;
      std::size_t deg = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos < s.size() && s[pos] == '-') fail("negative exponent");
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected exponent");
        deg = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          deg = deg * 10 + static_cast<std::size_t>(s[pos++] - '0');
          if (deg > kMaxLiteralDegree) fail("exponent too large");
        }
      }
      add_term(deg);
    } else {
      fail(std::string("unexpected character '") + s[pos] + "'");
    }
    if (pos == s.size()) break;
    if (s[pos] != '+') fail(std::string("expected '+' but found '") + s[pos] + "'");
    ++pos;
  }
  return UniPoly(gf2(), std::move(coeffs));
}

}  // namespace cfauto
