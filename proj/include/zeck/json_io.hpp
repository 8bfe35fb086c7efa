#pragma once

#include "zeck/decomposition.hpp"
#include "zeck/game.hpp"
#include "zeck/gaps_stats.hpp"

#include <json.hpp>

namespace zeck {

using json = nlohmann::json;

// {"n": int, "counts": [int...], "terminal": bool}
json state_to_json(const GameState& s);
// {"kind": "combine"|"split", "index": int}
json move_to_json(const Move& m);
// Throws std::invalid_argument on a malformed shape.
Move move_from_json(const json& j);

json moves_to_json(std::span<const Move> moves);

// {"x": "33", "coeffs": [1,0,3,1], "summands": 5, "text": "33 = ..."}
json decomposition_to_json(const Decomposition& d);

// Histogram as a JSON object keyed by summand count; values are decimal strings
// when they exceed 2^53.
json histogram_to_json(const SummandHistogram& hist);

json interval_stats_to_json(const IntervalStats& s);

}  // namespace zeck
