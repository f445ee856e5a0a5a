#include "proxyvote/theorems.hpp"

#include <algorithm>
#include <functional>

#include "proxyvote/enumeration.hpp"
#include "proxyvote/manipulation.hpp"

namespace proxyvote {

namespace {

constexpr Alternative kA = 0;
constexpr Alternative kB = 1;
constexpr Alternative kC = 2;

class Recipe {
 public:
  explicit Recipe(TheoremReport& report) : report_(report) {}

  // Runs body; an exception becomes a failed check carrying its message.
  void check(const std::string& name, const std::function<bool(json&)>& body) {
    RecipeCheck c;
    c.name = name;
    try {
      c.passed = body(c.detail);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail["error"] = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

 private:
  TheoremReport& report_;
};

json verdict_json(const CheckReport& r) {
  json j = {{"property", r.property}, {"verdict", r.passed ? "pass" : "fail"}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

void mechanism_characterization(Recipe& recipe, const CheckOptions& options) {
  struct Case {
    MechanismKind kind;
    // Axiom expected to fail, or none.
    std::optional<Property> fails;
  };
  const std::vector<Case> cases{
      {MechanismKind::Subset, std::nullopt},
      {MechanismKind::Triv, Property::PA},
      {MechanismKind::Univ, Property::ZR},
      {MechanismKind::SubsetLinearStrict, Property::PM},
      {MechanismKind::SubsetIfAllLinearAgree, Property::IIP},
  };
  const std::vector<Property> axioms{Property::PA, Property::IIP, Property::PM, Property::ZR};
  for (const Case& c : cases) {
    const MechanismSpec g = MechanismSpec::of(c.kind);
    std::string expectation = c.fails ? "fails exactly " + std::string(to_string(*c.fails))
                                      : std::string("passes all four");
    recipe.check(g.name() + " " + expectation + " at n=3, m=3", [&](json& detail) {
      bool as_expected = true;
      detail["mechanism"] = to_json_value(g);
      detail["results"] = json::array();
      for (Property p : axioms) {
        const CheckReport r = check_property(p, nullptr, &g, 3, 3, options);
        const bool expected_pass = !c.fails || *c.fails != p;
        as_expected = as_expected && r.passed == expected_pass;
        if (r.witness) {
          const ReplayResult replay = replay_witness(*r.witness, nullptr, &g);
          as_expected = as_expected && replay.reproduced;
        }
        detail["results"].push_back(verdict_json(r));
      }
      return as_expected;
    });
  }
}

TableRule table_from_code(unsigned code) {
  TableRule t;
  t.voters = 3;
  t.alternatives = 2;
  for (int idx = 0; idx < 8; ++idx) t.outcomes.push_back(static_cast<int>(code >> idx & 1));
  return t;
}

void may_analogue(Recipe& recipe, const CheckOptions& options) {
  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  recipe.check("all built-in mechanisms coincide at m=2, n=3", [&](json& detail) {
    std::vector<MechanismSpec> kinds;
    for (MechanismKind k :
         {MechanismKind::Triv, MechanismKind::Univ, MechanismKind::Subset, MechanismKind::Dictator,
          MechanismKind::SubsetLinearStrict, MechanismKind::SubsetIfAllLinearAgree}) {
      kinds.push_back(MechanismSpec::of(k));
    }
    const bool same = m2_unique_mechanism_check(kinds, 3, 2);
    detail["coincide"] = same;
    return same;
  });

  std::vector<unsigned> survivors;
  json tallies = {{"pv_anonymity", 0}, {"pv_neutrality", 0}, {"pvam", 0}, {"pvdm", 0}};
  recipe.check("exactly one of the 256 resolute rules at n=3, m=2 passes all four",
               [&](json& detail) {
                 for (unsigned code = 0; code < 256; ++code) {
                   const Rule f(RuleSpec::of(table_from_code(code)));
                   bool all = true;
                   for (Property p : {Property::PVAnonymity, Property::PVNeutrality,
                                      Property::PVAM, Property::PVDM}) {
                     const CheckReport r = check_property(p, &f, &g, 3, 2, options);
                     if (r.passed) {
                       tallies[std::string(to_string(p))] =
                           tallies[std::string(to_string(p))].get<int>() + 1;
                     }
                     all = all && r.passed;
                   }
                   if (all) survivors.push_back(code);
                 }
                 detail["survivors"] = survivors;
                 detail["passing_rules_per_property"] = tallies;
                 return survivors.size() == 1;
               });
  recipe.check("the surviving rule is the majority rule", [&](json& detail) {
    if (survivors.size() != 1) return false;
    const TableRule t = table_from_code(survivors.front());
    const std::vector<LinearOrder> orders = enumerate_linear_orders(2);
    bool equal = true;
    for (const LinearOrder& x : orders) {
      for (const LinearOrder& y : orders) {
        for (const LinearOrder& z : orders) {
          const std::vector<LinearOrder> profile{x, y, z};
          equal = equal && t.outcomes[TableRule::profile_index(profile)] == majority_winner(profile);
        }
      }
    }
    detail["outcomes"] = t.outcomes;
    return equal;
  });
}

void addition_counterexamples(Recipe& recipe) {
  struct Case {
    int n;
    std::vector<std::int64_t> weights;
    LinearOrder tiebreak;
  };
  const std::vector<Case> cases{
      {14, {2, 1, 0}, LinearOrder{kA, kB, kC}},
      {15, {2, 1, 0}, LinearOrder{kA, kB, kC}},
      {15, {2, 1, 0}, LinearOrder{kC, kA, kB}},
      {16, {2, 1, 0}, LinearOrder{kC, kA, kB}},
      {15, {1, 0, 0}, LinearOrder{kA, kB, kC}},
      {16, {1, 1, 0}, LinearOrder{kC, kA, kB}},
  };
  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  for (const Case& c : cases) {
    ScoringRule rule;
    rule.weights = c.weights;
    rule.tiebreak = c.tiebreak;
    const std::string name = "n=" + std::to_string(c.n) + ", weights " + json(c.weights).dump() +
                             ", tie-break " + to_string(c.tiebreak);
    recipe.check("adding a>b dethrones a: " + name, [&](json& detail) {
      const AdditionCounterexample ex = construct_addition_counterexample(c.n, rule);
      detail = ex.to_json();
      detail["rule"] = to_json_value(RuleSpec::of(rule));
      const Rule f(RuleSpec::of(rule));
      const bool flagged = pvam_violation(f, g, ex.before).has_value();
      detail["pvam_violation_found"] = flagged;
      return ex.verified() && flagged;
    });
  }
  recipe.check("scores at n=14 under Borda are (17, 8, 17) then (17, 6, 19)", [&](json& detail) {
    const AdditionCounterexample ex =
        construct_addition_counterexample(14, ScoringRule::borda(3, LinearOrder{kA, kB, kC}));
    detail["scores_before"] = ex.scores_before;
    detail["scores_after"] = ex.scores_after;
    return ex.scores_before == std::vector<std::int64_t>{17, 8, 17} &&
           ex.scores_after == std::vector<std::int64_t>{17, 6, 19};
  });
}

void proxy_choice_implies_gs(Recipe& recipe, const CheckOptions& options) {
  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  FindOptions find;
  find.workers = options.workers;
  find.force = options.force;
  const LinearOrder tiebreak{kA, kB, kC};
  for (const Rule& f : {borda_rule(3, tiebreak), plurality_rule(3, tiebreak)}) {
    recipe.check(f.name() + ": a proxy choice manipulation implies a GS manipulation at n=3, m=3",
                 [&](json& detail) {
                   detail["rule"] = to_json_value(*f.spec());
                   detail["mechanism"] = to_json_value(g);
                   const auto pc = find_pc(f, g, 3, 3, find);
                   const auto gs = find_gs(f, 3, 3, find);
                   detail["pc"] = pc ? pc->to_json(&g) : json(nullptr);
                   detail["gs"] = gs ? gs->to_json() : json(nullptr);
                   if (pc && !verify_instance(*pc, f, &g).reproduced) return false;
                   if (gs && !verify_instance(*gs, f, nullptr).reproduced) return false;
                   return !pc || gs.has_value();
                 });
  }
  recipe.check("two voters leave no proxy choice to manipulate", [&](json& detail) {
    const Rule f = borda_rule(3, tiebreak);
    const auto pc = find_pc(f, g, 2, 3, find);
    detail["pc"] = pc ? pc->to_json(&g) : json(nullptr);
    return !pc.has_value();
  });
}

void iia_implies_proxy_choice(Recipe& recipe, const CheckOptions& options) {
  const Rule f = borda_rule(3, LinearOrder{kA, kB, kC});
  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  for (int n = 1; n <= 3; ++n) {
    recipe.check(f.name() + " is invariant to uniform voter additions at n=" + std::to_string(n) +
                     ", m=3",
                 [&](json& detail) {
                   const CheckReport r = check_f_uvai(f, n, 3, options);
                   detail = verdict_json(r);
                   return r.passed;
                 });
  }
  FindOptions find;
  find.workers = options.workers;
  find.force = options.force;
  for (int n = 2; n <= 3; ++n) {
    recipe.check("an IIA manipulation at n=" + std::to_string(n) +
                     " yields a proxy choice manipulation with 6 more voters",
                 [&](json& detail) {
                   detail["rule"] = to_json_value(*f.spec());
                   detail["mechanism"] = to_json_value(g);
                   const auto iia = find_iia(f, n, 3, find);
                   detail["iia"] = iia ? iia->to_json() : json(nullptr);
                   if (!iia) return true;
                   const ManipulationInstance pc = construct_proxy_choice_manipulation(f, *iia, options);
                   detail["pc"] = pc.to_json(&g);
                   const ReplayResult replay = replay_witness(detail["pc"], &f, &g);
                   return pc.truthful.voters() == n + 6 && replay.reproduced &&
                          verify_instance(pc, f, &g).reproduced;
                 });
  }
}

void single_peaked_manipulation(Recipe& recipe, const CheckOptions& options) {
  MedianRule rule;
  rule.axis = Axis{kA, kC, kB};
  rule.phantoms = {kA, kC};
  const Rule f(RuleSpec::of(rule));
  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  recipe.check("median rule with a phantom at a is PM-manipulable at n=3", [&](json& detail) {
    const ManipulationInstance pm = construct_single_peaked_manipulation(3, rule);
    detail = pm.to_json(&g);
    detail["rule"] = to_json_value(*f.spec());
    detail["mechanism"] = to_json_value(g);
    return pm.winner_truthful == kA && pm.winner_deviant == kC && pm.sincere.prefers(kC, kA) &&
           pm.deviant.P[0] == LinearOrder({kC, kA, kB}).to_partial_order() &&
           verify_instance(pm, f, &g).reproduced;
  });
  FindOptions find;
  find.workers = options.workers;
  find.force = options.force;
  find.single_peaked = rule.axis;
  recipe.check("the same median rule is GS-strategyproof on single-peaked profiles at n=3, m=3",
               [&](json& detail) {
                 detail["rule"] = to_json_value(*f.spec());
                 const auto gs = find_gs(f, 3, 3, find);
                 detail["gs"] = gs ? gs->to_json() : json(nullptr);
                 return !gs.has_value();
               });
  recipe.check("the PM search finds a single-peaked manipulation at n=2", [&](json& detail) {
    MedianRule two = rule;
    two.phantoms = {kA};
    const Rule f2(RuleSpec::of(two));
    detail["rule"] = to_json_value(*f2.spec());
    detail["mechanism"] = to_json_value(g);
    const auto pm = find_pm(f2, g, 2, 3, find);
    detail["pm"] = pm ? pm->to_json(&g) : json(nullptr);
    return pm.has_value() && verify_instance(*pm, f2, &g).reproduced;
  });
}

}  // namespace

bool TheoremReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const RecipeCheck& c) { return c.passed; });
}

json TheoremReport::to_json() const {
  json j;
  j["theorem"] = id;
  j["statement"] = statement;
  j["verdict"] = passed() ? "pass" : "fail";
  json list = json::array();
  for (const RecipeCheck& c : checks) {
    list.push_back({{"name", c.name}, {"verdict", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  }
  j["checks"] = std::move(list);
  return j;
}

std::vector<std::string> theorem_ids() { return {"T1", "T2", "T3", "T4", "T5", "T6"}; }

TheoremReport verify_theorem(std::string_view id, const CheckOptions& options) {
  TheoremReport report;
  report.id = std::string(id);
  Recipe recipe(report);
  if (id == "T1") {
    report.statement =
        "SUBSET satisfies PA, IIP, PM and ZR, and each axiom is needed: TRIV, UNIV, "
        "SUBSET_LINEAR_STRICT and SUBSET_IF_ALL_LINEAR_AGREE each fail exactly one";
    mechanism_characterization(recipe, options);
  } else if (id == "T2") {
    report.statement =
        "with two alternatives, the majority rule is the only rule whose proxy vote is "
        "anonymous, neutral and addition and deletion monotonic";
    may_analogue(recipe, options);
  } else if (id == "T3") {
    report.statement =
        "scoring rules under SUBSET violate proxy vote addition or deletion monotonicity";
    addition_counterexamples(recipe);
  } else if (id == "T4") {
    report.statement = "proxy choice manipulability under SUBSET implies GS manipulability";
    proxy_choice_implies_gs(recipe, options);
  } else if (id == "T5") {
    report.statement =
        "IIA manipulability plus invariance to uniform voter additions implies proxy choice "
        "manipulability with m! more voters";
    iia_implies_proxy_choice(recipe, options);
  } else if (id == "T6") {
    report.statement =
        "single-peaked domains do not protect proxy votes under SUBSET from ballot "
        "misrepresentation";
    single_peaked_manipulation(recipe, options);
  } else {
    throw std::invalid_argument("unknown theorem id: " + std::string(id));
  }
  return report;
}

}  // namespace proxyvote
