#include <doctest.h>

#include "cfauto/error.hpp"
#include "cfauto/poly_literal.hpp"
#include "cfauto/rational_function.hpp"
#include "cfauto/verification.hpp"
#include "support.hpp"

using namespace cfauto;
using testing::Rng;

namespace {

template <class F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("expected " << error_code_name(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

std::optional<AlgebraicEquation> try_derive(const BackboneSpec& s) {
  try {
    return derive_equation(s);
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::DegenerateDeterminant);
    return std::nullopt;
  }
}

std::optional<SpecializedEquation> try_specialize(const AlgebraicEquation& eq, const std::vector<UniPoly>& images) {
  try {
    return specialize_equation(eq, images);
  } catch (const Error& e) {
    REQUIRE((e.code() == ErrorCode::DegenerateDeterminant || e.code() == ErrorCode::ZeroDenominatorAfterEval));
    return std::nullopt;
  }
}

const BackboneSpec pd = BackboneSpec::from_names({}, {"a", "b"});

LaurentSeries period_doubling_gamma(std::int64_t N) { return gamma_series(pd, gf2(), {0, 1}, N); }

bool proportional(const std::vector<UniPoly>& x, const std::vector<UniPoly>& y) {
  if (x.size() != y.size()) return false;
  // x_i y_j = x_j y_i for all i, j
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!(x[i] * y[j] == x[j] * y[i])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("residual of the derived equation is clean") {
  Rng rng(61);
  int cases = 0;
  while (cases < 25) {
    const auto s = testing::random_spec(rng, 3, 2, 4);
    const auto eq = try_derive(s);
    if (!eq) continue;
    const auto images = testing::random_images(rng, s, 2);
    const auto spec_eq = try_specialize(*eq, images);
    if (!spec_eq) continue;
    const auto report = residual_valuation(*spec_eq, s, 256);
    REQUIRE_MESSAGE(report.clean(), s.to_string());
    REQUIRE(report.checked_precision == 256);
    ++cases;
  }
  expect_error(ErrorCode::PrecisionTooLow, [] {
    residual_valuation(specialize_equation(derive_equation(pd), {parse_poly_literal("t"), parse_poly_literal("t+1")}), pd, 63);
  });
}

TEST_CASE("every single-monomial corruption is detected") {
  const auto s = BackboneSpec::from_names({"a"}, {"b", "c"});
  const auto eq = derive_equation(s);
  const std::vector<UniPoly> images = {parse_poly_literal("t"), parse_poly_literal("t^2+1"), parse_poly_literal("t^3")};
  const std::size_t nv = s.alphabet()->size();
  std::vector<Monomial> extra = {Monomial(nv), Monomial::variable(nv, 0), Monomial::variable(nv, 2, 3)};
  auto corrupt = [&](const SymbolicFraction& f, const Monomial& m) {
    return SymbolicFraction(f.num().toggled(m), f.den());
  };
  auto expect_dirty = [&](const AlgebraicEquation& bad) {
    const auto report = residual_valuation(specialize_equation(bad, images), s, 256);
    REQUIRE_FALSE(report.clean());
  };
  for (std::size_t k = 0; k <= eq.d(); ++k) {
    const SymbolicFraction& target = k == eq.d() ? eq.A : eq.B[k];
    std::vector<Monomial> flips = target.num().terms();
    flips.insert(flips.end(), extra.begin(), extra.end());
    for (const auto& m : flips) {
      AlgebraicEquation bad = eq;
      (k == eq.d() ? bad.A : bad.B[k]) = corrupt(target, m);
      expect_dirty(bad);
    }
  }
}

TEST_CASE("gamma coefficients follow s(eps)") {
  const auto g = period_doubling_gamma(32);
  CHECK(g.precision() == 32);
  for (std::int64_t n = 0; n < 32; ++n) CHECK(g.coefficient(n) == (s_at(pd, static_cast<std::uint64_t>(n)) == 1 ? 1u : 0u));
  const auto f4 = gf2s_field(2);
  const auto g4 = gamma_series(BackboneSpec::from_names({}, {"a", "b", "c"}), f4, {1, 2, 3}, 8);
  // s = a b a c a b a a
  const std::vector<Elem> expect = {1, 2, 1, 3, 1, 2, 1, 1};
  for (std::int64_t n = 0; n < 8; ++n) CHECK(g4.coefficient(n) == expect[static_cast<std::size_t>(n)]);
  expect_error(ErrorCode::FieldMismatch, [&] { gamma_series(pd, f4, {0, 4}, 8); });
}

TEST_CASE("period-doubling relation holds far out") {
  const std::int64_t N = 2048;
  const auto g = period_doubling_gamma(N);
  const std::vector<UniPoly> P = {parse_poly_literal("t^2"), parse_poly_literal("t^3+t"), parse_poly_literal("t^2+1")};
  const auto r = relation_residual(g, P);
  CHECK(r.precision() >= N - 3);
  CHECK(series_residual_valuation(r) == std::nullopt);
}

TEST_CASE("search recovers the period-doubling relation at degree 2") {
  const auto g = period_doubling_gamma(200);
  const auto found = relation_search(g, 2, 3, 24);
  REQUIRE(found.certificate);
  const auto& c = *found.certificate;
  CHECK(c.deg_x() == 2);
  CHECK(proportional(c.coeffs, {parse_poly_literal("t^2"), parse_poly_literal("t^3+t"), parse_poly_literal("t^2+1")}));
  CHECK(c.verified_precision == 48);
  const auto r = relation_residual(g, c.coeffs);
  CHECK(series_residual_valuation(r.truncated(48)) == std::nullopt);
  // degree 1 alone is not enough
  CHECK_FALSE(relation_search(g, 1, 3, 16).certificate);
}

TEST_CASE("search recovers planted rational series") {
  Rng rng(67);
  for (int k = 0; k < 30; ++k) {
    const auto f = gf2s_field(static_cast<unsigned>(testing::pick(rng, 1, 4)));
    const auto p = testing::random_poly(rng, f, 4);
    const auto q = testing::random_nonzero_poly(rng, f, 4);
    const RationalFunction r(p, q);
    const auto g = series_expand(r, 200);
    const unsigned B = 4;
    const auto found = relation_search(g, 2, B, 2 * 3 * (B + 1));
    REQUIRE(found.certificate);
    const auto& c = *found.certificate;
    REQUIRE(c.deg_x() == 1);
    REQUIRE(proportional(c.coeffs, {r.num(), r.den()}));
    REQUIRE(series_residual_valuation(relation_residual(g, c.coeffs).truncated(c.verified_precision)) ==
            std::nullopt);
  }
}

TEST_CASE("search reports nothing for a patternless series") {
  Rng rng(71);
  std::vector<Elem> coeffs(400);
  for (auto& c : coeffs) c = static_cast<Elem>(testing::pick(rng, 0, 1));
  const LaurentSeries g(gf2(), 0, coeffs, 400);
  const auto found = relation_search(g, 2, 3, 48);
  CHECK_FALSE(found.certificate);
  CHECK(found.max_deg_x == 2);
  CHECK(found.max_deg_t == 3);
  CHECK(found.precision == 48);
  expect_error(ErrorCode::PrecisionTooLow, [&] { relation_search(g, 2, 3, 23); });
  expect_error(ErrorCode::PrecisionTooLow, [&] { relation_search(g.truncated(50), 2, 3, 48); });
}

TEST_CASE("automaton reproduces s(eps) with at most l+d states") {
  for (const auto& s : testing::all_specs(3, 1, 4)) {
    const auto dfa = kernel_automaton(s);
    REQUIRE(dfa.state_count() <= s.prefix_length() + s.period_length());
    for (std::uint64_t n = 0; n < 4096; ++n) REQUIRE(automaton_eval(dfa, n) == s_at(s, n));
  }
  const auto dfa = kernel_automaton(BackboneSpec::from_names({"a"}, {"b", "c"}));
  CHECK(dfa.describe() ==
        "states: 3 (bound l+d = 3)\n"
        "S0: bit 1 -> S1, bit 0 -> emit a\n"
        "S1: bit 1 -> S2, bit 0 -> emit b\n"
        "S2: bit 1 -> S1, bit 0 -> emit c\n");
}

TEST_CASE("brute-force 2-kernel stays finite") {
  for (const auto& s : testing::all_specs(2, 1, 3)) {
    const auto k6 = kernel_size_estimate(s, 6, 256);
    const auto k9 = kernel_size_estimate(s, 9, 256);
    REQUIRE(k6 == k9);
    REQUIRE(k9 <= s.alphabet()->size() + s.prefix_length() + s.period_length());
  }
}
