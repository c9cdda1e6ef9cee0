// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cfauto/continued_fraction.hpp"
#include "cfauto/error.hpp"
#include "cfauto/poly_literal.hpp"
#include "cfauto/reference_examples.hpp"
#include "cfauto/verification.hpp"
#include "support.hpp"

using namespace cfauto;
using testing::Rng;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

struct Failed {
  std::string why;
};

void require(bool cond, const std::string& why) {
  if (!cond) throw Failed{why};
}

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out.note = body();
  } catch (const Failed& f) {
    out = {false, f.why};
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && budget_s > 0 && secs > budget_s) {
    std::ostringstream why;
    why << "took " << secs << " s, budget " << budget_s << " s";
    out = {false, why.str()};
  }
  if (!out.ok) ++failures;
  std::printf("%s  %2d  %-52s %8.3f s  %s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.note.c_str());
  std::fflush(stdout);
}

UniPoly lit(const char* text) { return parse_poly_literal(text); }

SymbolicFraction F(const std::string& text, const AlphabetPtr& al) { return parse_fraction(text, al); }

const BackboneSpec ex1 = BackboneSpec::from_names({}, {"a", "b"});
const BackboneSpec ex2 = BackboneSpec::from_names({"a"}, {"b", "c"});
const BackboneSpec ex3 = BackboneSpec::from_names({}, {"a", "b", "c"});
const std::vector<UniPoly> abc_images = {lit("t"), lit("t^2+1"), lit("t^3+t+1")};

bool proportional(const std::vector<UniPoly>& x, const std::vector<UniPoly>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!(x[i] * y[j] == x[j] * y[i])) return false;
    }
  }
  return true;
}

std::optional<SpecializedEquation> try_build(const BackboneSpec& s, const std::vector<UniPoly>& images) {
  try {
    return specialize_equation(derive_equation(s), images);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateDeterminant || e.code() == ErrorCode::ZeroDenominatorAfterEval) {
      return std::nullopt;
    }
    throw;
  }
}

}  // namespace

int main() {
  criterion(1, "(a,b)^inf equation", 0.1, [] {
    const auto& al = ex1.alphabet();
    const auto eq = derive_equation(ex1);
    require(frac_eq(eq.A, F("1+a*b+b^2", al)), "A = " + eq.A.to_string());
    require(frac_eq(eq.B[0], F("a^2*b+a*b^2", al)), "B_0 = " + eq.B[0].to_string());
    require(frac_eq(eq.B[1], F("a*b", al)), "B_1 = " + eq.B[1].to_string());
    return eq.to_string();
  });

  criterion(2, "a,(b,c)^inf equation and c := a collapse", 0.1, [] {
    const auto& al = ex2.alphabet();
    const auto eq = derive_equation(ex2);
    require(frac_eq(eq.A, F("(b^2*c+b*c^2)/(a)", al) + F("(c^2)/(a^2)", al)), "A = " + eq.A.to_string());
    require(frac_eq(eq.B[0], F("b^2*c+b*c^2", al)), "B_0 = " + eq.B[0].to_string());
    require(frac_eq(eq.B[1], F("b*c", al)), "B_1 = " + eq.B[1].to_string());
    const auto& al1 = ex1.alphabet();
    const auto a = MultiPoly::variable(al1, 0), b = MultiPoly::variable(al1, 1);
    const auto collapsed = substitute_letters(eq, ex1, {a, b, a});
    const auto direct = derive_equation(ex1);
    require(frac_eq(collapsed.A, direct.A) && frac_eq(collapsed.B[0], direct.B[0]) &&
                frac_eq(collapsed.B[1], direct.B[1]),
            "collapse gives " + collapsed.to_string());
    return "A = " + eq.A.to_string();
  });

  criterion(3, "(a,b,c)^inf equation, residual at N = 1024", 1.0, [] {
    const auto& al = ex3.alphabet();
    const auto eq = derive_equation(ex3);
    require(eq.B[2].is_polynomial() && eq.B[2].num() == parse_multipoly("a^2*b*c+a*b^2*c+a*b*c^2", al),
            "B_2 = " + eq.B[2].to_string());
    const auto& ref = reference_examples()[2];
    const auto check = check_reference_example(ref);
    require(check.ok(), check.ok() ? "" : check.mismatches.front());
    const auto report = residual_valuation(specialize_equation(eq, abc_images), ex3, 1024);
    require(report.clean(), "residual valuation " + std::to_string(report.valuation.value_or(-1)));
    return "A, B_0, B_1, B_2 match; B_0 leading term read as a^4*b^2*c";
  });

  criterion(4, "z values of the three worked backbones", 0, [] {
    std::size_t n = 0;
    for (const auto& ex : reference_examples()) {
      const auto spec = BackboneSpec::from_names(ex.prefix, ex.period);
      for (unsigned i = 0; i < ex.z.size(); ++i) {
        const auto want = sum_fractions(ex.z[i], spec.alphabet());
        require(frac_eq(compute_z(spec, i), want),
                ex.name + " z_" + std::to_string(i) + " = " + compute_z(spec, i).to_string());
        ++n;
      }
    }
    return std::to_string(n) + " values";
  });

  criterion(5, "doubling recurrence = direct convergents", 0, [] {
    Rng rng(5005);
    for (int k = 0; k < 50; ++k) {
      const auto s = testing::random_spec(rng, 3, 1, 4);
      const auto images = testing::random_images(rng, s, 2);
      const auto special = special_convergents(s, images, 10);
      const auto conv = convergents<UniPoly>(partial_quotients(s, images, 1023), UniPoly::one());
      for (unsigned n = 1; n <= 10; ++n) {
        const auto& c = conv[(std::size_t{1} << n) - 2];
        require(special[n - 1].u == c.x && special[n - 1].v == c.y,
                s.to_string() + " level " + std::to_string(n));
      }
    }
    return "50 specs, n <= 10";
  });

  criterion(6, "residual suite, 30 cases at N = 512", 60.0, [] {
    Rng rng(6006);
    int cases = 0, skipped = 0;
    while (cases < 30) {
      const auto s = testing::random_spec(rng, 3, 2 + static_cast<std::size_t>(cases % 3), 2 + static_cast<std::size_t>(cases % 3));
      const auto images = testing::random_images(rng, s, 2);
      const auto eq = try_build(s, images);
      if (!eq) {
        ++skipped;
        continue;
      }
      const auto report = residual_valuation(*eq, s, 512);
      require(report.clean(), s.to_string() + " residual valuation " + std::to_string(*report.valuation));
      ++cases;
    }
    return "30 clean, " + std::to_string(skipped) + " degenerate draws redrawn";
  });

  criterion(7, "period-doubling relation to 4096 coefficients", 5.0, [] {
    const std::int64_t N = 4096;
    const auto gamma = gamma_series(ex1, gf2(), {0, 1}, N + 8);
    const auto r = relation_residual(gamma, {lit("t^2"), lit("t^3+t"), lit("t^2+1")});
    require(r.precision() >= N, "precision " + std::to_string(r.precision()));
    const auto v = series_residual_valuation(r.truncated(N));
    require(!v, "nonzero coefficient at t^-" + std::to_string(v.value_or(0)));
    return "(t^2+1)x^2+(t^3+t)x+t^2 vanishes";
  });

  criterion(8, "relation search finds degree 2 for (a,b)^inf", 0, [] {
    const std::int64_t N = 24;
    const auto gamma = gamma_series(ex1, gf2(), {0, 1}, 2 * N + 4);
    const auto found = relation_search(gamma, 2, 3, N);
    require(found.certificate.has_value(), "NONE");
    const auto& c = *found.certificate;
    require(c.deg_x() == 2, "minimal x-degree " + std::to_string(c.deg_x()));
    require(proportional(c.coeffs, {lit("t^2"), lit("t^3+t"), lit("t^2+1")}), c.to_string());
    require(c.verified_precision == 2 * N, "verified to " + std::to_string(c.verified_precision));
    require(!series_residual_valuation(relation_residual(gamma, c.coeffs).truncated(2 * N)), "re-check failed");
    return c.to_string();
  });

  criterion(9, "relation search for (a,b,c)^inf over GF(4)", 120.0, [] {
    const unsigned D = 4, B = 24;
    const std::int64_t N = 2 * (D + 1) * (B + 1);
    const auto f = gf2s_field(2);
    const auto gamma = gamma_series(ex3, f, {1, 2, 3}, 2 * N + B + 1);
    const auto found = relation_search(gamma, D, B, N);
    std::ostringstream note;
    if (found.certificate) {
      const auto& c = *found.certificate;
      require(!series_residual_valuation(relation_residual(gamma, c.coeffs).truncated(c.verified_precision)),
              "certificate fails re-check");
      note << "certificate deg_x " << c.deg_x() << ", deg_t " << c.deg_t() << ", verified to "
           << c.verified_precision;
    } else {
      note << "NONE within D <= " << found.max_deg_x << ", B <= " << found.max_deg_t << ", N = " << found.precision;
    }
    return note.str();
  });

  criterion(10, "closed form = word recursion = automaton, n < 2^16", 0, [] {
    const auto specs = testing::all_specs(3, 1, 4);
    for (const auto& s : specs) {
      const auto w = word(s, 17);
      const auto dfa = kernel_automaton(s);
      require(dfa.state_count() <= s.prefix_length() + s.period_length(), s.to_string() + " state count");
      for (std::uint64_t n = 0; n < (1u << 16); ++n) {
        const auto letter = s_at(s, n);
        require(letter == w[n], s.to_string() + " closed form at " + std::to_string(n));
        require(automaton_eval(dfa, n) == letter, s.to_string() + " automaton at " + std::to_string(n));
      }
    }
    return std::to_string(specs.size()) + " specs";
  });

  criterion(11, "single-monomial sabotage is always detected", 0, [] {
    struct Case {
      const BackboneSpec* spec;
      std::vector<UniPoly> images;
    };
    const std::vector<Case> cases = {{&ex1, {lit("t"), lit("t+1")}},
                                     {&ex2, {lit("t"), lit("t^2+1"), lit("t^2+t")}},
                                     {&ex3, abc_images}};
    std::size_t flips = 0;
    for (const auto& c : cases) {
      const auto eq = derive_equation(*c.spec);
      const std::size_t nv = c.spec->alphabet()->size();
      for (std::size_t k = 0; k <= eq.d(); ++k) {
        const SymbolicFraction& target = k == eq.d() ? eq.A : eq.B[k];
        std::vector<Monomial> toggles = target.num().terms();
        toggles.push_back(Monomial(nv));
        for (std::size_t v = 0; v < nv; ++v) toggles.push_back(Monomial::variable(nv, v, 2));
        for (const auto& m : toggles) {
          AlgebraicEquation bad = eq;
          (k == eq.d() ? bad.A : bad.B[k]) = SymbolicFraction(target.num().toggled(m), target.den());
          const auto report = residual_valuation(specialize_equation(bad, c.images), *c.spec, 256);
          require(!report.clean(), c.spec->to_string() + " flip of " + m.to_string(*c.spec->alphabet()) + " missed");
          ++flips;
        }
      }
    }
    return std::to_string(flips) + " corruptions detected";
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
