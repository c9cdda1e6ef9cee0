#pragma once

#include <string>
#include <vector>

#include "cfauto/equation.hpp"

namespace cfauto {

// A value written as a sum of fraction literals, e.g. {"(1)/(a)", "(1)/(a^2*b)"}.
using FractionSum = std::vector<std::string>;

// Known closed forms for one backbone: z_0..z_d, det M(d), A and B_k.
struct ReferenceExample {
  std::string name;
  std::vector<std::string> prefix;
  std::vector<std::string> period;
  std::vector<FractionSum> z;
  FractionSum delta;
  FractionSum A;
  std::vector<FractionSum> B;
};

// The three worked backbones: (a,b)^inf, a,(b,c)^inf and (a,b,c)^inf.
const std::vector<ReferenceExample>& reference_examples();

struct ExampleCheck {
  std::string name;
  std::vector<std::string> mismatches;  // empty when everything matches
  bool ok() const noexcept { return mismatches.empty(); }
};

SymbolicFraction sum_fractions(const FractionSum& terms, const AlphabetPtr& alphabet);

// Derives the example afresh and compares every quantity with frac_eq.
ExampleCheck check_reference_example(const ReferenceExample& example);

}  // namespace cfauto
