#include "proxyvote/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace proxyvote {

json edges_to_json(const EdgeSet& edges) {
  json out = json::array();
  for (const Edge& e : edges.edges()) out.push_back({e.above, e.below});
  return out;
}

json to_json_value(const PartialOrder& p) { return edges_to_json(p.edge_set()); }

json to_json_value(const LinearOrder& l) { return l.ranking(); }

json to_json_value(const VoterSet& s) { return s.members(); }

json to_json_value(const ProxyVoteProfile& pvp) {
  json j;
  j["alternatives"] = pvp.alternatives();
  json p = json::array(), s = json::array(), d = json::array();
  for (int i = 0; i < pvp.voters(); ++i) {
    p.push_back(to_json_value(pvp.P[i]));
    s.push_back(to_json_value(pvp.S[i]));
    d.push_back(to_json_value(pvp.D[i]));
  }
  j["P"] = std::move(p);
  j["S"] = std::move(s);
  j["D"] = std::move(d);
  return j;
}

json to_json_value(const MechanismSpec& g) {
  json j;
  j["kind"] = std::string(to_string(g.kind));
  if (g.kind == MechanismKind::Custom) j["name"] = g.custom_name;
  if (!g.dictator_map.empty()) j["dictator_map"] = g.dictator_map;
  if (g.network) {
    json edges = json::array();
    for (const auto& [u, v] : g.network->edges()) edges.push_back({u, v});
    j["network"] = std::move(edges);
  }
  return j;
}

json to_json_value(const RuleSpec& f) {
  json j;
  switch (f.kind) {
    case RuleKind::Scoring:
      j["kind"] = "scoring";
      j["weights"] = f.scoring.weights;
      j["tiebreak"] = to_json_value(f.scoring.tiebreak);
      break;
    case RuleKind::Majority:
      j["kind"] = "majority";
      break;
    case RuleKind::Median:
      j["kind"] = "median";
      j["axis"] = f.median.axis.order();
      j["phantoms"] = f.median.phantoms;
      break;
    case RuleKind::Dictator:
      j["kind"] = "dictator";
      j["voter"] = f.dictator;
      break;
    case RuleKind::Table:
      j["kind"] = "table";
      j["voters"] = f.table.voters;
      j["alternatives"] = f.table.alternatives;
      j["outcomes"] = f.table.outcomes;
      break;
  }
  return j;
}

json to_json_value(const GuruAssignment& gurus) {
  json j;
  j["guru"] = gurus.guru;
  json cast = json::array();
  for (const LinearOrder& l : gurus.cast) cast.push_back(to_json_value(l));
  j["cast"] = std::move(cast);
  j["cycle_members"] = to_json_value(gurus.cycle_members);
  return j;
}

PartialOrder partial_order_from_json(const json& j, int m) {
  std::vector<Edge> edges;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [above, below]");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return make_partial_order(edges, m);
}

LinearOrder linear_order_from_json(const json& j) {
  return LinearOrder(j.get<std::vector<int>>());
}

std::vector<LinearOrder> ballots_from_json(const json& j) {
  std::vector<LinearOrder> out;
  for (const json& b : j) out.push_back(linear_order_from_json(b));
  return out;
}

ProxyVoteProfile profile_from_json(const json& j) {
  ProxyVoteProfile pvp;
  for (const json& d : j.at("D")) pvp.D.push_back(linear_order_from_json(d));
  int m = j.contains("alternatives") ? j["alternatives"].get<int>()
          : pvp.D.empty()            ? 0
                                     : pvp.D.front().size();
  for (const json& p : j.at("P")) pvp.P.push_back(partial_order_from_json(p, m));
  for (const json& s : j.at("S")) pvp.S.push_back(linear_order_from_json(s));
  pvp.validate();
  return pvp;
}

MechanismSpec mechanism_from_json(const json& j) {
  MechanismSpec g;
  g.kind = parse_mechanism_kind(j.at("kind").get<std::string>());
  if (g.kind == MechanismKind::Custom) {
    throw MechanismError("custom mechanisms cannot be read from JSON");
  }
  if (j.contains("dictator_map")) g.dictator_map = j["dictator_map"].get<std::vector<int>>();
  if (j.contains("network")) {
    std::vector<std::pair<Voter, Voter>> edges;
    int n = 0;
    for (const json& e : j["network"]) {
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      n = std::max({n, edges.back().first + 1, edges.back().second + 1});
    }
    if (j.contains("voters")) n = j["voters"].get<int>();
    g.network = Network(n, edges);
  }
  return g;
}

std::vector<std::int64_t> normalize_weights(const json& weights) {
  std::vector<double> raw = weights.get<std::vector<double>>();
  double scale = 1;
  for (int k = 0; k <= 9; ++k, scale *= 10) {
    bool integral = true;
    for (double w : raw) {
      double s = w * scale;
      if (std::abs(s - std::round(s)) > 1e-6) integral = false;
    }
    if (integral) {
      std::vector<std::int64_t> out;
      for (double w : raw) out.push_back(std::llround(w * scale));
      return out;
    }
  }
  throw std::invalid_argument("scoring weights are not representable as exact decimals");
}

RuleSpec rule_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "scoring" || kind == "borda" || kind == "plurality") {
    LinearOrder tiebreak = linear_order_from_json(j.at("tiebreak"));
    if (kind == "borda") return RuleSpec::of(ScoringRule::borda(tiebreak.size(), tiebreak));
    if (kind == "plurality") return RuleSpec::of(ScoringRule::plurality(tiebreak.size(), tiebreak));
    ScoringRule rule;
    rule.weights = normalize_weights(j.at("weights"));
    rule.tiebreak = tiebreak;
    rule.validate();
    return RuleSpec::of(std::move(rule));
  }
  if (kind == "majority") return RuleSpec::majority();
  if (kind == "median") {
    MedianRule rule;
    rule.axis = Axis(j.at("axis").get<std::vector<int>>());
    rule.phantoms = j.at("phantoms").get<std::vector<int>>();
    return RuleSpec::of(std::move(rule));
  }
  if (kind == "dictator") return RuleSpec::dictatorship(j.value("voter", 0));
  if (kind == "table") {
    TableRule t;
    t.voters = j.at("voters").get<int>();
    t.alternatives = j.at("alternatives").get<int>();
    t.outcomes = j.at("outcomes").get<std::vector<int>>();
    return RuleSpec::of(std::move(t));
  }
  throw RuleError(RuleErrc::InvalidRule, "unknown rule kind: " + kind);
}

}  // namespace proxyvote
