#pragma once

#include <json.hpp>

#include "zc/etale.hpp"
#include "zc/poly.hpp"
#include "zc/rational.hpp"

namespace zc {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
/// Accepts "n", "n/d" or a JSON integer.
Rational rational_from_json(const Json& j);

/// Array of coefficient strings, lowest degree first.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"modulus": [...], "rep": [...]}
Json to_json(const AlgElement& a);
AlgElement alg_from_json(const Json& j);

}  // namespace zc
