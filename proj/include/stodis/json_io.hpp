#pragma once

#include <json.hpp>

#include "stodis/batch.hpp"
#include "stodis/channel.hpp"
#include "stodis/discord.hpp"
#include "stodis/distribution.hpp"
#include "stodis/merging.hpp"
#include "stodis/minimize.hpp"
#include "stodis/polytope.hpp"
#include "stodis/stationary.hpp"

namespace stodis {

// JSON wire formats. Emitted numbers use the shortest representation that
// re-parses to the same double, so every object round-trips exactly.
//
//   state    {"dims": [dA, dB], "probs": [[...], ...]}   row-major
//   triple   {"dims": [dA, dB, dC], "probs": [[[...]]]}  A outermost
//   channel  {"dim": d, "matrix": [[...], ...]}          row = readout

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const JointDistribution& p);
JointDistribution joint_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TripartiteDistribution& t);
TripartiteDistribution tripartite_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StochasticChannel& m);
StochasticChannel channel_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DiscordReport& r);
DiscordReport discord_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StationaryFamily& f);
StationaryFamily stationary_family_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ChannelPolytope& polytope);

nlohmann::json to_json(const ChannelFamily& family);
ChannelFamily family_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MinimizationResult& r);

nlohmann::json to_json(const MergingReport& r);
nlohmann::json to_json(const batch::MergeRow& row);

}  // namespace stodis
