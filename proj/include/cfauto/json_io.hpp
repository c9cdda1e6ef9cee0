#pragma once

#include <nlohmann/json.hpp>

#include "cfauto/equation.hpp"
#include "cfauto/verification.hpp"

namespace cfauto {

using ordered_json = nlohmann::ordered_json;

// {"l", "d", "letters", "A", "B"} with canonical fraction strings; letters
// are the names of eps_0 .. eps_{l+d-1}.
ordered_json equation_to_json(const AlgebraicEquation& eq);
// Inverse of equation_to_json; det M(d) is recomputed from the backbone.
// Throws ParseError on malformed input.
AlgebraicEquation equation_from_json(const ordered_json& j);

ordered_json specialized_to_json(const SpecializedEquation& eq, const BackboneSpec& spec);

// {"q", "deg_x", "deg_t", "coeffs": {"P0", ...}, "verified_precision"}.
ordered_json certificate_to_json(const RelationCertificate& cert);

}  // namespace cfauto
