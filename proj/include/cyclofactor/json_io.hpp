#pragma once

#include <json.hpp>

#include "cyclofactor/factorization.hpp"

namespace cyclofactor {

using Json = nlohmann::ordered_json;

/// {"field", "input", "unit"?, "factors": [{"poly", "mult", "degree", "order"}], "plan"?}
Json to_json(const Factorization& fz, bool with_plan = false);

Json plan_to_json(const factor::BinomialPlan& plan);
Json plan_to_json(const factor::CompositionPlan& plan);

/// Multiply the serialized factors back together (including the unit).
poly::Poly product_from_json(const Json& j);

}  // namespace cyclofactor
