#include "cfauto/reference_examples.hpp"

namespace cfauto {

const std::vector<ReferenceExample>& reference_examples() {
  static const std::vector<ReferenceExample> examples = {
      {
          "type (0,2), (a,b)^inf",
          {},
          {"a", "b"},
          {{"(1)/(a)"}, {"0"}, {"1"}},
          {"a+b"},
          {"1", "a*b+b^2"},  // 1 + b(a+b)
          {{"a^2*b+a*b^2"}, {"a*b"}},
      },
      {
          "type (1,2), a,(b,c)^inf",
          {"a"},
          {"b", "c"},
          {{"(1)/(a)", "(1)/(a^2*b)"}, {"(1)/(a^2)"}, {"0"}},
          {"b+c"},
          {"(b^2*c+b*c^2)/(a)", "(c^2)/(a^2)"},  // bc(b+c)/a + c^2/a^2
          {{"b^2*c+b*c^2"}, {"b*c"}},
      },
      {
          "type (0,3), (a,b,c)^inf",
          {},
          {"a", "b", "c"},
          {{"(1)/(a)", "(1)/(a^2*b)"}, {"(1)/(a^2)"}, {"0"}, {"1"}},
          {"a^3*b+a^2*b*c", "a*b*c^2+a*c^3", "a*b^2*c+b^3*c"},  // ba^2(a+c)+ac^2(b+c)+cb^2(a+b)
          {"a^3*b^2*c+a^2*b^2*c^2+a*b^3*c^2+b^4*c^2+a*b^2*c^3+a*b*c^4+a^2*b*c+a*b^2*c+a*b*c^2+c^4+1"},
          {
              {"a^4*b^2*c+a^3*b^2*c^2+a^2*b^3*c^2+a*b^4*c^2+a^2*b^2*c^3+a^2*b*c^4"},
              {"a^3*b^2*c+a^2*b^2*c^2+a*b^3*c^2+a^2*b*c^3"},
              {"a^2*b*c+a*b^2*c+a*b*c^2"},
          },
      },
  };
  return examples;
}

SymbolicFraction sum_fractions(const FractionSum& terms, const AlphabetPtr& alphabet) {
  SymbolicFraction sum(alphabet);
  for (const auto& t : terms) sum = sum + parse_fraction(t, alphabet);
  return sum;
}

ExampleCheck check_reference_example(const ReferenceExample& example) {
  ExampleCheck check{example.name, {}};
  const BackboneSpec spec = BackboneSpec::from_names(example.prefix, example.period);
  const AlphabetPtr& alphabet = spec.alphabet();
  const AlgebraicEquation eq = derive_equation(spec);

  auto compare = [&](const std::string& label, const SymbolicFraction& got, const FractionSum& want) {
    const SymbolicFraction expected = sum_fractions(want, alphabet);
    if (!frac_eq(got, expected)) {
      check.mismatches.push_back(label + ": derived " + got.to_string() + ", expected " + expected.to_string());
    }
  };
  for (unsigned i = 0; i < example.z.size(); ++i) {
    compare("z_" + std::to_string(i), compute_z(spec, i), example.z[i]);
  }
  compare("Delta", SymbolicFraction(eq.delta), example.delta);
  compare("A", eq.A, example.A);
  for (std::size_t k = 0; k < example.B.size(); ++k) compare("B_" + std::to_string(k), eq.B[k], example.B[k]);
  return check;
}

}  // namespace cfauto
