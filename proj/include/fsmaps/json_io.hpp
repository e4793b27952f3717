#pragma once

#include <json.hpp>
#include <string>

#include "fsmaps/bijection.hpp"
#include "fsmaps/dessin.hpp"
#include "fsmaps/mapcore.hpp"
#include "fsmaps/series.hpp"
#include "fsmaps/simplifier.hpp"

namespace fsmaps {

using Json = nlohmann::json;

/// {"n", "sigma0", "sigma1", "sigma2", "roots"}, images and roots 1-based.
/// Hypermaps carry "kind": "hypermap".
Json to_json(const MapData& map, bool hypermap = false);
/// Accepts the same object; "sigma2" is optional and derived when absent.
/// Throws InvalidInput on malformed input (the map itself is not validated).
MapData map_from_json(const Json& j);

/// {"n", "tau_r", "tau_b", "tau_v", "roots"}, 1-based.
Json to_json(const DessinData& dessin);
DessinData dessin_from_json(const Json& j);

/// {"fully_simple": ..., "dessin": ...}
Json to_json(const SplitResult& split, bool hypermap = false);

/// {"text": "...", "lo": e, "hi": e|null, "terms": [{"h": e, "monomial": "...", "coefficient": "p/q"}]}
Json to_json(const LaurentSeries& series);

/// One JSON object per line: {"visited": [p, q], "applied": bool, "partner": [p', q']}.
std::string audit_trail_jsonl(const SimplificationResult& result);

/// {"simple_map", "transpositions": [[[p,q],[p',q']], ...], "k"}
Json to_json(const SimplificationResult& result, bool hypermap = false);

}  // namespace fsmaps
