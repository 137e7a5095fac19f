#pragma once

#include <json.hpp>

#include "avdeq/autoeq.hpp"
#include "avdeq/partners.hpp"
#include "avdeq/slope.hpp"
#include "avdeq/unitary_group.hpp"

// JSON wire formats. Exact values only: matrix entries and big integers are
// decimal strings ("-3") or fraction strings ("1/2"); plain JSON numbers are
// accepted on input for convenience. Output key order is lexicographic, so
// identical inputs produce byte-identical documents.

namespace avdeq::io {

using json = nlohmann::json;

json to_json(const IntMat& m);
json to_json(const RatMat& m);
IntMat int_mat_from_json(const json& j);
RatMat rat_mat_from_json(const json& j);

json to_json(const Poly& p);
Poly poly_from_json(const json& j);

json to_json(const VarietyModel& m);
VarietyModel model_from_json(const json& j);

// {"model": {...}, "blocks": {"x": .., "y": .., "z": .., "w": ..}}
// Scalar models accept plain integers for blocks; the E^n model also
// accepts condensed n x n blocks.
json to_json(const DoubledMap& f);
DoubledMap doubled_map_from_json(const json& j, const VarietyModel* default_model = nullptr);

json to_json(const TorsionPoint& p);
TorsionPoint point_from_json(const json& j);

json to_json(const Gamma0Element& g);

json to_json(const UtildeElement& u);
UtildeElement utilde_from_json(const json& j, const VarietyModel* default_model = nullptr);

json to_json(const AutoeqElement& a);
AutoeqElement autoeq_from_json(const json& j, const VarietyModel* default_model = nullptr);

json to_json(const SlopeClass& mu);
SlopeClass slope_from_json(const json& j, const VarietyModel* default_model = nullptr);

json to_json(const PartnerReport& r);

}  // namespace avdeq::io
