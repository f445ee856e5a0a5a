#pragma once

#include <nlohmann/json.hpp>

#include "proxyvote/election.hpp"
#include "proxyvote/mechanisms.hpp"
#include "proxyvote/orders.hpp"
#include "proxyvote/rules.hpp"

// Wire format: alternatives and voters are 0-based integers, a partial order is
// a sorted list of [above, below] pairs, a linear order is its ranking, best first.
namespace proxyvote {

using json = nlohmann::json;

json edges_to_json(const EdgeSet& edges);
json to_json_value(const PartialOrder& p);
json to_json_value(const LinearOrder& l);
json to_json_value(const VoterSet& s);
json to_json_value(const ProxyVoteProfile& pvp);
json to_json_value(const MechanismSpec& g);
json to_json_value(const RuleSpec& f);
json to_json_value(const GuruAssignment& gurus);

PartialOrder partial_order_from_json(const json& j, int m);
LinearOrder linear_order_from_json(const json& j);
std::vector<LinearOrder> ballots_from_json(const json& j);
// Alternatives come from "alternatives" when present, else from D.
ProxyVoteProfile profile_from_json(const json& j);
MechanismSpec mechanism_from_json(const json& j);
RuleSpec rule_from_json(const json& j);

// Integer weights are taken as-is; fractional weights are scaled by the
// smallest power of ten (up to 10^9) that makes them all integral.
std::vector<std::int64_t> normalize_weights(const json& weights);

}  // namespace proxyvote
