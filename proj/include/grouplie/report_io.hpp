#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "grouplie/bessel.hpp"
#include "grouplie/char_table.hpp"
#include "grouplie/indicators.hpp"
#include "grouplie/lie.hpp"
#include "grouplie/verify.hpp"

namespace grouplie {

using Json = nlohmann::ordered_json;

/// {"conductor": m, "coeffs": ["p/q", ...]} in the power basis of Q(zeta_m).
Json scalar_to_json(const CycloScalar& x);
CycloScalar scalar_from_json(const Json& j);

/// {"conductor": m, "coeffs": {"<element>": ["p/q", ...]}}, zero coefficients omitted.
Json element_to_json(const GroupAlgebraElement& a);
GroupAlgebraElement element_from_json(const GroupTable& g, const Json& j);

Json to_json(const IndicatorReport& r);
IndicatorReport indicator_report_from_json(const Json& j);

Json to_json(const LieReport& r);
LieReport lie_report_from_json(const Json& j);

Json to_json(const CharacterTable& ct, const GroupTable& g);
Json to_json(const BesselExpansion& e);

}  // namespace grouplie
