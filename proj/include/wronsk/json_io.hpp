#pragma once

#include "wronsk/polynomial.hpp"
#include "wronsk/schur.hpp"
#include "wronsk/series.hpp"

#include <json.hpp>

namespace wronsk {

// ordered_json keeps object keys in insertion order, so serialized output is
// stable and matches the documented field order.
using Json = nlohmann::ordered_json;

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"order": N, "coeffs": [...]} with a "symbols" array only when the
/// coefficient ring has variables.  Coefficients are canonical text.
Json series_to_json(const DividedSeries& f);
DividedSeries series_from_json(const Json& j);

Json expansion_to_json(const SchurExpansion& x);
SchurExpansion expansion_from_json(const Json& j);

} // namespace wronsk
