#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <proxyvote/election.hpp>
#include <proxyvote/theorems.hpp>

namespace cli {

using namespace proxyvote;

namespace {

void emit(const Common& common, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (common.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(common.out);
  if (!out) throw std::runtime_error("cannot write " + common.out);
  out << text;
}

void note(const Common& common, const std::string& line) {
  if (!common.quiet) std::cerr << line << "\n";
}

std::string where(const Common& common) { return common.out.empty() ? "<stdout>" : common.out; }

std::string format_cost(double cost) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", cost);
  return buf;
}

CheckOptions check_options(const Common& common) {
  CheckOptions o;
  o.workers = common.workers;
  o.force = common.force;
  return o;
}

FindOptions find_options(const Common& common) {
  FindOptions o;
  o.workers = common.workers;
  o.force = common.force;
  return o;
}

struct ReplayLog {
  json entries = json::array();
  bool all = true;
};

// Replays every object holding an "evaluations" array; "rule" and
// "mechanism" specs are inherited from the enclosing objects.
void replay_tree(const json& node, const std::optional<Rule>& rule,
                 const std::optional<MechanismSpec>& mechanism, const std::string& path,
                 ReplayLog& log) {
  if (node.is_array()) {
    for (std::size_t k = 0; k < node.size(); ++k) {
      replay_tree(node[k], rule, mechanism, path + "/" + std::to_string(k), log);
    }
    return;
  }
  if (!node.is_object()) return;
  std::optional<Rule> f = rule;
  std::optional<MechanismSpec> g = mechanism;
  if (node.contains("rule") && node["rule"].is_object()) f.emplace(rule_from_json(node["rule"]));
  if (node.contains("mechanism") && node["mechanism"].is_object()) {
    g = mechanism_from_json(node["mechanism"]);
  }
  if (node.contains("evaluations") && node["evaluations"].is_array()) {
    const ReplayResult r = replay_witness(node, f ? &*f : nullptr, g ? &*g : nullptr);
    log.all = log.all && r.reproduced;
    log.entries.push_back({{"path", path.empty() ? "/" : path},
                           {"reproduced", r.reproduced},
                           {"evaluations", r.evaluations},
                           {"detail", r.detail}});
  }
  for (const auto& [key, value] : node.items()) {
    if (key == "evaluations") continue;
    replay_tree(value, f, g, path + "/" + key, log);
  }
}

}  // namespace

int run_command(const Common& common, const std::string& input) {
  const json doc = read_json(input);
  if (doc.contains("profile")) {
    const ProxyVoteProfile pvp = profile_from_json(doc.at("profile"));
    const MechanismSpec g = mechanism_from_json(doc.at("mechanism"));
    const Rule f(rule_from_json(doc.at("rule")));
    const ProxyOutcome outcome = run_proxy_vote(f, g, pvp);
    json out = to_json_value(outcome.gurus);
    out["winner"] = outcome.winner;
    emit(common, out);
    note(common, "winner " + std::to_string(outcome.winner));
    return 0;
  }
  ReplayLog log;
  replay_tree(doc, std::nullopt, std::nullopt, "", log);
  const bool ok = log.all && !log.entries.empty();
  emit(common, {{"reproduced", ok}, {"witnesses", log.entries}});
  for (const json& e : log.entries) {
    note(common, std::string(e["reproduced"].get<bool>() ? "REPRODUCED " : "MISMATCH   ") +
                     e["path"].get<std::string>() + " (" +
                     std::to_string(e["evaluations"].get<int>()) + " evaluations)");
  }
  if (log.entries.empty()) note(common, "no evaluations found in " + input);
  return ok ? 0 : 1;
}

int check_command(const Common& common, const RuleFlags& rule_flags, const std::string& mechanism,
                  const Bounds& bounds, const std::string& property, const std::string& expect) {
  const Property p = parse_property(property);
  std::optional<Rule> f;
  std::optional<MechanismSpec> g;
  if (needs_rule(p)) f.emplace(make_rule(rule_flags, bounds.m));
  if (needs_mechanism(p)) g = make_mechanism(mechanism);
  note(common, "cost estimate: " + format_cost(check_cost(p, bounds.n, bounds.m)) +
                   " evaluations for " + property + " at n=" + std::to_string(bounds.n) +
                   ", m=" + std::to_string(bounds.m));
  const CheckReport report = check_property(p, f ? &*f : nullptr, g ? &*g : nullptr, bounds.n,
                                            bounds.m, check_options(common));
  json doc = report.to_json();
  if (f) doc["rule"] = to_json_value(*f->spec());
  if (g) doc["mechanism"] = to_json_value(*g);
  doc["expected"] = expect;
  emit(common, doc);
  std::ostringstream row;
  row << report.property << "  " << report.subject << "  n=" << report.voters
      << "  m=" << report.alternatives << "  space=" << format_cost(report.space) << "  "
      << (report.passed ? "PASS" : "FAIL");
  note(common, row.str());
  const bool matched = report.passed == (expect == "pass");
  if (!report.passed) note(common, "witness: " + where(common) + "#/witness");
  return matched ? 0 : 1;
}

int find_command(const Common& common, const RuleFlags& rule_flags, const std::string& mechanism,
                 const Bounds& bounds, const std::string& kind_name, bool count,
                 bool single_peaked, const std::string& expect) {
  const ManipulationKind kind = parse_manipulation_kind(kind_name);
  const Rule f(make_rule(rule_flags, bounds.m));
  const bool proxy = kind == ManipulationKind::PC || kind == ManipulationKind::PM;
  std::optional<MechanismSpec> g;
  if (proxy) g = make_mechanism(mechanism);
  FindOptions options = find_options(common);
  if (single_peaked || f.median()) {
    if (f.median()) {
      options.single_peaked = f.median()->axis;
    } else {
      options.single_peaked = Axis(parse_alternatives(rule_flags.axis));
    }
  }
  note(common, "cost estimate: " + format_cost(find_cost(kind, bounds.n, bounds.m)) +
                   " evaluations for " + kind_name + " at n=" + std::to_string(bounds.n) +
                   ", m=" + std::to_string(bounds.m));

  json doc;
  bool found = false;
  bool verified = true;
  if (count) {
    const std::uint64_t total =
        count_manipulations(kind, f, g ? &*g : nullptr, bounds.n, bounds.m, options);
    found = total > 0;
    doc["count"] = total;
    note(common, kind_name + " manipulations: " + std::to_string(total));
  } else {
    std::optional<ManipulationInstance> inst;
    switch (kind) {
      case ManipulationKind::GS: inst = find_gs(f, bounds.n, bounds.m, options); break;
      case ManipulationKind::IIA: inst = find_iia(f, bounds.n, bounds.m, options); break;
      case ManipulationKind::PC: inst = find_pc(f, *g, bounds.n, bounds.m, options); break;
      case ManipulationKind::PM: inst = find_pm(f, *g, bounds.n, bounds.m, options); break;
    }
    found = inst.has_value();
    if (inst) {
      doc = inst->to_json(g ? &*g : nullptr);
      const ReplayResult r = verify_instance(*inst, f, g ? &*g : nullptr);
      verified = r.reproduced;
      doc["verified"] = r.reproduced;
      note(common, kind_name + " manipulation by voter " + std::to_string(inst->manipulator) +
                       ": winner " + std::to_string(inst->winner_truthful) + " -> " +
                       std::to_string(inst->winner_deviant));
    } else {
      note(common, "no " + kind_name + " manipulation");
    }
  }
  doc["kind"] = std::string(to_string(kind));
  doc["found"] = found;
  doc["voters"] = bounds.n;
  doc["alternatives"] = bounds.m;
  doc["rule"] = to_json_value(*f.spec());
  if (g) doc["mechanism"] = to_json_value(*g);
  if (options.single_peaked) doc["single_peaked_axis"] = options.single_peaked->order();
  doc["expected"] = expect;
  emit(common, doc);
  if (!verified) return 1;
  if (expect == "found") return found ? 0 : 1;
  if (expect == "none") return found ? 1 : 0;
  return 0;
}

int construct_command(const Common& common, const RuleFlags& rule_flags, const Bounds& bounds,
                      const std::string& what) {
  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  if (what == "thm3") {
    const RuleSpec spec = make_rule(rule_flags, 3);
    if (spec.kind != RuleKind::Scoring) throw std::invalid_argument("thm3 needs a scoring rule");
    const AdditionCounterexample ex = construct_addition_counterexample(bounds.n, spec.scoring);
    json doc = ex.to_json();
    doc["rule"] = to_json_value(spec);
    emit(common, doc);
    note(common, ex.branch + ": winner " + std::to_string(ex.winner_before) + " -> " +
                     std::to_string(ex.winner_after) + (ex.verified() ? "  PASS" : "  FAIL"));
    return ex.verified() ? 0 : 1;
  }
  if (what == "thm5") {
    const Rule f(make_rule(rule_flags, bounds.m));
    const auto iia = find_iia(f, bounds.n, bounds.m, find_options(common));
    if (!iia) {
      emit(common, {{"found", false}, {"rule", to_json_value(*f.spec())}});
      note(common, "no IIA manipulation at n=" + std::to_string(bounds.n) + "; nothing to build");
      return 1;
    }
    const ManipulationInstance pc = construct_proxy_choice_manipulation(f, *iia, check_options(common));
    const ReplayResult r = verify_instance(pc, f, &g);
    json doc = pc.to_json(&g);
    doc["iia"] = iia->to_json();
    doc["rule"] = to_json_value(*f.spec());
    doc["mechanism"] = to_json_value(g);
    doc["verified"] = r.reproduced;
    emit(common, doc);
    note(common, "pc manipulation over " + std::to_string(pc.truthful.voters()) + " voters: winner " +
                     std::to_string(pc.winner_truthful) + " -> " + std::to_string(pc.winner_deviant) +
                     (r.reproduced ? "  PASS" : "  FAIL"));
    return r.reproduced ? 0 : 1;
  }
  if (what == "thm6") {
    RuleFlags flags = rule_flags;
    flags.rule = "median";
    if (flags.axis.empty()) flags.axis = "acb";
    if (flags.phantoms.empty()) {
      flags.phantoms = "a";
      for (int k = 2; k < bounds.n; ++k) flags.phantoms += ",c";
    }
    const RuleSpec spec = make_rule(flags, 3);
    const ManipulationInstance pm = construct_single_peaked_manipulation(bounds.n, spec.median);
    const Rule f(spec);
    const ReplayResult r = verify_instance(pm, f, &g);
    json doc = pm.to_json(&g);
    doc["rule"] = to_json_value(spec);
    doc["mechanism"] = to_json_value(g);
    doc["verified"] = r.reproduced;
    emit(common, doc);
    note(common, "pm manipulation: winner " + std::to_string(pm.winner_truthful) + " -> " +
                     std::to_string(pm.winner_deviant) + (r.reproduced ? "  PASS" : "  FAIL"));
    return r.reproduced ? 0 : 1;
  }
  throw std::invalid_argument("unknown construction: " + what);
}

int verify_theorem_command(const Common& common, const std::string& id) {
  std::vector<std::string> ids = id == "all" ? theorem_ids() : std::vector<std::string>{id};
  json doc = json::array();
  bool all = true;
  for (const std::string& t : ids) {
    const TheoremReport report = verify_theorem(t, check_options(common));
    for (const RecipeCheck& c : report.checks) {
      note(common, std::string(c.passed ? "PASS " : "FAIL ") + t + "  " + c.name);
    }
    all = all && report.passed();
    doc.push_back(report.to_json());
  }
  emit(common, ids.size() == 1 ? doc.front() : doc);
  return all ? 0 : 1;
}

}  // namespace cli
