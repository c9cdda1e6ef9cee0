#include "cfauto/json_io.hpp"

#include "cfauto/error.hpp"

namespace cfauto {

ordered_json equation_to_json(const AlgebraicEquation& eq) {
  ordered_json j;
  j["l"] = eq.spec.prefix_length();
  j["d"] = eq.spec.period_length();
  j["letters"] = eq.spec.letter_names();
  j["A"] = eq.A.to_string();
  ordered_json b = ordered_json::array();
  for (const auto& coeff : eq.B) b.push_back(coeff.to_string());
  j["B"] = std::move(b);
  return j;
}

AlgebraicEquation equation_from_json(const ordered_json& j) {
  try {
    const auto l = j.at("l").get<std::size_t>();
    const auto d = j.at("d").get<std::size_t>();
    const auto letters = j.at("letters").get<std::vector<std::string>>();
    if (letters.size() != l + d) throw Error(ErrorCode::ParseError, "letters length differs from l + d");
    const std::vector<std::string> prefix(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(l));
    const std::vector<std::string> period(letters.begin() + static_cast<std::ptrdiff_t>(l), letters.end());
    BackboneSpec spec = BackboneSpec::from_names(prefix, period);
    const AlphabetPtr& alphabet = spec.alphabet();
    MultiPoly delta = det(build_matrix(spec));
    SymbolicFraction A = parse_fraction(j.at("A").get<std::string>(), alphabet);
    std::vector<SymbolicFraction> B;
    for (const auto& b : j.at("B")) B.push_back(parse_fraction(b.get<std::string>(), alphabet));
    if (B.size() != d) throw Error(ErrorCode::ParseError, "expected d coefficients in B");
    return AlgebraicEquation{std::move(spec), std::move(delta), std::move(A), std::move(B)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("equation JSON: ") + e.what());
  }
}

ordered_json specialized_to_json(const SpecializedEquation& eq, const BackboneSpec& spec) {
  ordered_json j;
  j["l"] = spec.prefix_length();
  j["d"] = spec.period_length();
  ordered_json assignment = ordered_json::object();
  for (std::size_t i = 0; i < spec.alphabet()->size(); ++i) {
    assignment[spec.alphabet()->name(i)] = eq.assignment[i].to_string();
  }
  j["assignment"] = std::move(assignment);
  j["A"] = eq.A.to_string();
  ordered_json b = ordered_json::array();
  for (const auto& coeff : eq.B) b.push_back(coeff.to_string());
  j["B"] = std::move(b);
  return j;
}

ordered_json certificate_to_json(const RelationCertificate& cert) {
  ordered_json j;
  j["q"] = cert.field->order();
  j["deg_x"] = cert.deg_x();
  j["deg_t"] = cert.deg_t();
  ordered_json coeffs = ordered_json::object();
  for (std::size_t e = 0; e < cert.coeffs.size(); ++e) coeffs["P" + std::to_string(e)] = cert.coeffs[e].to_string();
  j["coeffs"] = std::move(coeffs);
  j["verified_precision"] = cert.verified_precision;
  return j;
}

}  // namespace cfauto
