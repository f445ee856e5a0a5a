#include "proxyvote/manipulation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "proxyvote/enumeration.hpp"
#include "proxyvote/parallel.hpp"

namespace proxyvote {

namespace {

constexpr std::array<std::pair<ManipulationKind, std::string_view>, 4> kKindNames{{
    {ManipulationKind::GS, "gs"},
    {ManipulationKind::IIA, "iia"},
    {ManipulationKind::PC, "pc"},
    {ManipulationKind::PM, "pm"},
}};

constexpr Alternative kA = 0;
constexpr Alternative kB = 1;
constexpr Alternative kC = 2;

struct FindSink {
  std::optional<ManipulationInstance> found;
  template <class Build>
  bool hit(Build&& build) {
    found = build();
    return true;
  }
};

struct CountSink {
  std::uint64_t count = 0;
  template <class Build>
  bool hit(Build&&) {
    ++count;
    return false;
  }
};

bool all_single_peaked(const std::vector<LinearOrder>& ballots, const std::optional<Axis>& axis) {
  return !axis || is_single_peaked(ballots, *axis);
}

// Unilateral ballot changes on linear profiles.
class BallotProbe {
 public:
  BallotProbe(const Rule& f, const std::vector<LinearOrder>& orders, bool keep_order,
              const std::optional<Axis>& axis)
      : f_(f), orders_(orders), keep_order_(keep_order), axis_(axis) {}

  template <class Sink>
  bool operator()(const std::vector<LinearOrder>& profile, Sink& sink) {
    if (!all_single_peaked(profile, axis_)) return false;
    const Alternative w = f_(profile);
    work_ = profile;
    const int n = static_cast<int>(profile.size());
    for (Voter i = 0; i < n; ++i) {
      for (const LinearOrder& l : orders_) {
        if (l == profile[i] || (axis_ && !is_single_peaked(l, *axis_))) continue;
        work_[i] = l;
        const Alternative w2 = f_(work_);
        if (profile[i].prefers(w2, w) && (!keep_order_ || l.prefers(w2, w))) {
          auto build = [&] {
            ManipulationInstance inst;
            inst.kind = keep_order_ ? ManipulationKind::IIA : ManipulationKind::GS;
            inst.manipulator = i;
            inst.sincere = profile[i].to_partial_order();
            inst.winner_truthful = w;
            inst.winner_deviant = w2;
            inst.ballots = profile;
            inst.deviant_ballots = work_;
            return inst;
          };
          if (sink.hit(build)) return true;
        }
      }
      work_[i] = profile[i];
    }
    return false;
  }

 private:
  const Rule& f_;
  const std::vector<LinearOrder>& orders_;
  bool keep_order_;
  const std::optional<Axis>& axis_;
  std::vector<LinearOrder> work_;
};

bool defaults_single_peaked(const ProxyVoteProfile& pvp, const std::optional<Axis>& axis) {
  return all_single_peaked(pvp.D, axis);
}

ManipulationInstance proxy_instance(ManipulationKind kind, const ProxyVoteProfile& pvp,
                                    const ProxyVoteProfile& deviant, Voter i, Alternative w,
                                    Alternative w2) {
  ManipulationInstance inst;
  inst.kind = kind;
  inst.manipulator = i;
  inst.sincere = pvp.P[i];
  inst.winner_truthful = w;
  inst.winner_deviant = w2;
  inst.truthful = pvp;
  inst.deviant = deviant;
  return inst;
}

// Unilateral changes of the proxy choice order. Only the chosen proxy matters,
// so deviations reaching the same proxy share one evaluation.
class ProxyChoiceProbe {
 public:
  ProxyChoiceProbe(const Rule& f, const MechanismSpec& g, const std::vector<LinearOrder>& orders,
                   const std::optional<Axis>& axis)
      : eval_(f, g), g_(g), orders_(orders), axis_(axis) {}

  template <class Sink>
  bool operator()(const ProxyVoteProfile& pvp, Sink& sink) {
    if (!defaults_single_peaked(pvp, axis_)) return false;
    const Alternative w = eval_.winner(pvp);
    base_out_ = eval_.last_graph().out;
    work_ = pvp;
    const int n = pvp.voters();
    for (Voter i = 0; i < n; ++i) {
      const PermittedSet permitted = permitted_proxies(g_, pvp.P, i);
      if (permitted.size() < 2) continue;
      cache_.assign(n, -1);
      for (const LinearOrder& s : orders_) {
        if (s == pvp.S[i]) continue;
        Voter target = i;
        for (int r = 0; r < n; ++r) {
          if (permitted.contains(s[r])) {
            target = s[r];
            break;
          }
        }
        if (target == base_out_[i]) continue;
        work_.S[i] = s;
        if (cache_[target] < 0) cache_[target] = eval_.winner(work_);
        const Alternative w2 = cache_[target];
        if (pvp.P[i].prefers(w2, w)) {
          auto build = [&] {
            return proxy_instance(ManipulationKind::PC, pvp, work_, i, w, w2);
          };
          if (sink.hit(build)) return true;
        }
      }
      work_.S[i] = pvp.S[i];
    }
    return false;
  }

 private:
  ElectionEvaluator eval_;
  const MechanismSpec& g_;
  const std::vector<LinearOrder>& orders_;
  const std::optional<Axis>& axis_;
  std::vector<Voter> base_out_;
  std::vector<int> cache_;
  ProxyVoteProfile work_;
};

// Unilateral changes of the partial ballot, default repaired when needed.
class BallotMisreportProbe {
 public:
  BallotMisreportProbe(const Rule& f, const MechanismSpec& g,
                       const std::vector<PartialOrder>& orders, const std::optional<Axis>& axis)
      : eval_(f, g), orders_(orders), axis_(axis) {}

  template <class Sink>
  bool operator()(const ProxyVoteProfile& pvp, Sink& sink) {
    if (!defaults_single_peaked(pvp, axis_)) return false;
    const Alternative w = eval_.winner(pvp);
    work_ = pvp;
    const int n = pvp.voters();
    for (Voter i = 0; i < n; ++i) {
      for (const PartialOrder& p : orders_) {
        if (p == pvp.P[i]) continue;
        const bool repaired = !extends(pvp.D[i], p);
        const LinearOrder d = repaired ? guided_extension(p, pvp.D[i]) : pvp.D[i];
        if (axis_ && !is_single_peaked(d, *axis_)) continue;
        work_.P[i] = p;
        work_.D[i] = d;
        const Alternative w2 = eval_.winner(work_);
        if (pvp.P[i].prefers(w2, w)) {
          auto build = [&] {
            ManipulationInstance inst = proxy_instance(ManipulationKind::PM, pvp, work_, i, w, w2);
            inst.default_repaired = repaired;
            return inst;
          };
          if (sink.hit(build)) return true;
        }
      }
      work_.P[i] = pvp.P[i];
      work_.D[i] = pvp.D[i];
    }
    return false;
  }

 private:
  ElectionEvaluator eval_;
  const std::vector<PartialOrder>& orders_;
  const std::optional<Axis>& axis_;
  ProxyVoteProfile work_;
};

template <class Space, class MakeProbe>
std::optional<ManipulationInstance> search_first(const Space& space, unsigned workers,
                                                 MakeProbe make) {
  return parallel_find_first<ManipulationInstance>(space.chunks(), workers, [&](std::size_t chunk) {
    auto probe = make();
    FindSink sink;
    space.walk_chunk(chunk, [&](const auto& profile) { return probe(profile, sink); });
    return std::move(sink.found);
  });
}

template <class Space, class MakeProbe>
std::uint64_t search_count(const Space& space, unsigned workers, MakeProbe make) {
  return parallel_sum(space.chunks(), workers, [&](std::size_t chunk) {
    auto probe = make();
    CountSink sink;
    space.walk_chunk(chunk, [&](const auto& profile) { return probe(profile, sink); });
    return sink.count;
  });
}

void guard_find(ManipulationKind kind, int n, int m, const FindOptions& options) {
  CheckOptions check;
  check.force = options.force;
  const bool linear_only = kind == ManipulationKind::GS || kind == ManipulationKind::IIA;
  guard_bounds(std::string("find ") + std::string(to_string(kind)), n, m, find_cost(kind, n, m),
               linear_only, check);
}

void require_rule_alternatives(int m) {
  if (m <= 2) {
    throw ManipulationError("IIA manipulation needs at least three alternatives");
  }
}

template <class Result>
Result run_search(ManipulationKind kind, const Rule& f, const MechanismSpec* g, int n, int m,
                  const FindOptions& options) {
  guard_find(kind, n, m, options);
  if (kind == ManipulationKind::IIA) require_rule_alternatives(m);
  if ((kind == ManipulationKind::PC || kind == ManipulationKind::PM) && !g) {
    throw ManipulationError("proxy vote manipulation needs a mechanism");
  }
  if (g) g->validate(n);
  auto run = [&](const auto& space, auto make) {
    if constexpr (std::is_same_v<Result, std::uint64_t>) {
      return search_count(space, options.workers, make);
    } else {
      return search_first(space, options.workers, make);
    }
  };
  switch (kind) {
    case ManipulationKind::GS:
    case ManipulationKind::IIA: {
      LinearProfileSpace space(n, m);
      const bool keep = kind == ManipulationKind::IIA;
      return run(space, [&] { return BallotProbe(f, space.orders(), keep, options.single_peaked); });
    }
    case ManipulationKind::PC: {
      ProxyProfileSpace space(n, m);
      return run(space, [&] {
        return ProxyChoiceProbe(f, *g, space.voter_orders(), options.single_peaked);
      });
    }
    case ManipulationKind::PM: {
      ProxyProfileSpace space(n, m);
      const std::vector<PartialOrder> orders = enumerate_partial_orders(m);
      return run(space,
                 [&] { return BallotMisreportProbe(f, *g, orders, options.single_peaked); });
    }
  }
  throw ManipulationError("unknown manipulation kind");
}

std::vector<int> ranking(std::initializer_list<int> r) { return r; }

LinearOrder ballot(Alternative first, Alternative second, Alternative third) {
  return LinearOrder{first, second, third};
}

}  // namespace

std::string_view to_string(ManipulationKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

ManipulationKind parse_manipulation_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& [k, n] : kKindNames) {
    if (n == lower) return k;
  }
  throw ManipulationError("unknown manipulation kind: " + std::string(name));
}

double find_cost(ManipulationKind kind, int n, int m) {
  switch (kind) {
    case ManipulationKind::GS:
    case ManipulationKind::IIA:
      return power(static_cast<double>(factorial(m)), n) * n * static_cast<double>(factorial(m));
    case ManipulationKind::PC:
      return check_cost(Property::ZR, n, m) * n * static_cast<double>(factorial(n));
    case ManipulationKind::PM:
      return check_cost(Property::ZR, n, m) * n * partial_order_count(m);
  }
  return 0;
}

std::optional<ManipulationInstance> find_gs(const Rule& f, int n, int m,
                                            const FindOptions& options) {
  return run_search<std::optional<ManipulationInstance>>(ManipulationKind::GS, f, nullptr, n, m,
                                                         options);
}

std::optional<ManipulationInstance> find_iia(const Rule& f, int n, int m,
                                             const FindOptions& options) {
  return run_search<std::optional<ManipulationInstance>>(ManipulationKind::IIA, f, nullptr, n,
                                                         m, options);
}

std::optional<ManipulationInstance> find_pc(const Rule& f, const MechanismSpec& g, int n, int m,
                                            const FindOptions& options) {
  return run_search<std::optional<ManipulationInstance>>(ManipulationKind::PC, f, &g, n, m,
                                                         options);
}

std::optional<ManipulationInstance> find_pm(const Rule& f, const MechanismSpec& g, int n, int m,
                                            const FindOptions& options) {
  return run_search<std::optional<ManipulationInstance>>(ManipulationKind::PM, f, &g, n, m,
                                                         options);
}

std::uint64_t count_manipulations(ManipulationKind kind, const Rule& f, const MechanismSpec* g,
                                  int n, int m, const FindOptions& options) {
  return run_search<std::uint64_t>(kind, f, g, n, m, options);
}

json ManipulationInstance::to_json(const MechanismSpec* g) const {
  json j;
  j["kind"] = std::string(to_string(kind));
  j["manipulator"] = manipulator;
  j["sincere"] = to_json_value(sincere);
  j["winner_truthful"] = winner_truthful;
  j["winner_deviant"] = winner_deviant;
  if (!on_proxy_profiles()) {
    j["deviation"] = {{"ballot", to_json_value(deviant_ballots[manipulator])}};
    j["evaluations"] = {rule_evaluation(ballots, winner_truthful),
                        rule_evaluation(deviant_ballots, winner_deviant)};
    return j;
  }
  if (kind == ManipulationKind::PC) {
    j["deviation"] = {{"S", to_json_value(deviant.S[manipulator])}};
  } else {
    j["deviation"] = {{"P", to_json_value(deviant.P[manipulator])},
                      {"D", to_json_value(deviant.D[manipulator])},
                      {"default_repaired", default_repaired}};
  }
  if (!g) throw ManipulationError("serializing a proxy vote instance needs its mechanism");
  j["evaluations"] = {
      proxy_evaluation(truthful, resolve_gurus(build_delegation_graph(*g, truthful), truthful),
                       winner_truthful),
      proxy_evaluation(deviant, resolve_gurus(build_delegation_graph(*g, deviant), deviant),
                       winner_deviant)};
  return j;
}

ReplayResult verify_instance(const ManipulationInstance& inst, const Rule& f,
                             const MechanismSpec* g) {
  ReplayResult r;
  auto fail = [&](const std::string& why) {
    r.reproduced = false;
    r.detail = why;
    return r;
  };
  const Voter i = inst.manipulator;
  Alternative wt = 0;
  Alternative wd = 0;
  if (!inst.on_proxy_profiles()) {
    const int n = static_cast<int>(inst.ballots.size());
    if (i < 0 || i >= n || static_cast<int>(inst.deviant_ballots.size()) != n) {
      return fail("profiles do not match the manipulator");
    }
    for (int v = 0; v < n; ++v) {
      if (v != i && inst.ballots[v] != inst.deviant_ballots[v]) {
        return fail("deviation changes another voter's ballot");
      }
    }
    if (inst.ballots[i] == inst.deviant_ballots[i]) return fail("deviation changes nothing");
    if (inst.sincere != inst.ballots[i].to_partial_order()) {
      return fail("sincere order is not the manipulator's ballot");
    }
    wt = f(inst.ballots);
    wd = f(inst.deviant_ballots);
    r.evaluations = 2;
    if (inst.kind == ManipulationKind::IIA &&
        !inst.deviant_ballots[i].prefers(inst.winner_deviant, inst.winner_truthful)) {
      return fail("deviant ballot does not keep the new winner above the old one");
    }
  } else {
    if (!g) return fail("proxy vote instance needs its mechanism");
    const ProxyVoteProfile& a = inst.truthful;
    const ProxyVoteProfile& b = inst.deviant;
    const int n = a.voters();
    if (i < 0 || i >= n || b.voters() != n) return fail("profiles do not match the manipulator");
    for (int v = 0; v < n; ++v) {
      const bool same_p = a.P[v] == b.P[v] && a.D[v] == b.D[v];
      const bool same_s = a.S[v] == b.S[v];
      if (v != i && (!same_p || !same_s)) return fail("deviation changes another voter");
      if (v == i && inst.kind == ManipulationKind::PC && (!same_p || same_s)) {
        return fail("proxy choice deviation must change exactly S_i");
      }
      if (v == i && inst.kind == ManipulationKind::PM && (a.P[v] == b.P[v] || !same_s)) {
        return fail("ballot deviation must change exactly P_i");
      }
    }
    if (inst.sincere != a.P[i]) return fail("sincere order is not the manipulator's ballot");
    wt = run_proxy_vote(f, *g, a).winner;
    wd = run_proxy_vote(f, *g, b).winner;
    r.evaluations = 2;
  }
  if (wt != inst.winner_truthful || wd != inst.winner_deviant) {
    return fail("winners (" + std::to_string(wt) + ", " + std::to_string(wd) +
                ") differ from recorded (" + std::to_string(inst.winner_truthful) + ", " +
                std::to_string(inst.winner_deviant) + ")");
  }
  if (!inst.sincere.prefers(inst.winner_deviant, inst.winner_truthful)) {
    return fail("manipulator does not prefer the deviant winner");
  }
  return r;
}

ManipulationInstance lift_gs_to_pm(const ManipulationInstance& gs, const Rule& f,
                                   const MechanismSpec& g) {
  if (gs.on_proxy_profiles()) throw ManipulationError("expected an instance on linear profiles");
  ManipulationInstance pm;
  pm.kind = ManipulationKind::PM;
  pm.manipulator = gs.manipulator;
  pm.sincere = gs.sincere;
  pm.truthful = ProxyVoteProfile::classical(gs.ballots);
  pm.deviant = ProxyVoteProfile::classical(gs.deviant_ballots);
  pm.winner_truthful = run_proxy_vote(f, g, pm.truthful).winner;
  pm.winner_deviant = run_proxy_vote(f, g, pm.deviant).winner;
  ReplayResult check = verify_instance(pm, f, &g);
  if (!check.reproduced) throw ManipulationError("lifted instance fails: " + check.detail);
  return pm;
}

json AdditionCounterexample::to_json() const {
  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  json j;
  j["branch"] = branch;
  j["voter"] = voter;
  j["edge"] = {edge.above, edge.below};
  j["expected_winners"] = {expected_before, expected_after};
  j["winners"] = {winner_before, winner_after};
  j["scores_before"] = scores_before;
  j["scores_after"] = scores_after;
  j["verified"] = verified();
  j["mechanism"] = to_json_value(g);
  j["evaluations"] = {
      proxy_evaluation(before, resolve_gurus(build_delegation_graph(g, before), before),
                       winner_before),
      proxy_evaluation(after, resolve_gurus(build_delegation_graph(g, after), after),
                       winner_after)};
  return j;
}

AdditionCounterexample construct_addition_counterexample(int n, const ScoringRule& rule) {
  rule.validate();
  if (rule.weights.size() != 3) {
    throw ManipulationError("the construction needs exactly three alternatives");
  }
  if (n < 14) throw ManipulationError("the construction needs at least 14 voters");
  const std::int64_t s1 = rule.weights[0];
  const std::int64_t s2 = rule.weights[1];
  const std::int64_t s3 = rule.weights[2];

  const LinearOrder abc = ballot(kA, kB, kC);
  const LinearOrder acb = ballot(kA, kC, kB);
  const LinearOrder bac = ballot(kB, kA, kC);
  const LinearOrder bca = ballot(kB, kC, kA);
  const LinearOrder cab = ballot(kC, kA, kB);

  AdditionCounterexample out;
  std::vector<LinearOrder> fillers;
  auto split = [&](int count) {
    for (int k = 0; k < count / 2; ++k) fillers.push_back(cab);
    for (int k = 0; k < count / 2; ++k) fillers.push_back(acb);
  };
  // Sizes below count the whole electorate, including the three gadget voters.
  auto a_over_c_even = [&](int size) {
    fillers.insert(fillers.end(), {bca, bca, acb});
    split(size - 6);
  };
  auto c_over_a_odd = [&](int size) {
    fillers.insert(fillers.end(), {bca, bca, acb, abc});
    split(size - 7);
  };
  if (rule.tiebreak.prefers(kA, kC)) {
    if (n % 2 == 0) {
      out.branch = "tie-break a>c, even n";
      a_over_c_even(n);
    } else {
      a_over_c_even(n - 1);
      if (s1 > s2 && s2 == s3) {
        out.branch = "tie-break a>c, odd n, s1>s2=s3";
        fillers.push_back(bac);
      } else {
        out.branch = "tie-break a>c, odd n, s2>s3";
        fillers.push_back(acb);
      }
    }
  } else {
    if (n % 2 == 1) {
      out.branch = "tie-break c>a, odd n";
      c_over_a_odd(n);
    } else {
      c_over_a_odd(n - 1);
      if (s1 > s2) {
        out.branch = "tie-break c>a, even n, s1>s2";
        fillers.push_back(bca);
      } else {
        out.branch = "tie-break c>a, even n, s1=s2>s3";
        fillers.push_back(acb);
      }
    }
  }

  ProxyVoteProfile& pvp = out.before;
  std::vector<int> proxy_order(n);
  std::iota(proxy_order.begin(), proxy_order.end(), 0);
  std::rotate(proxy_order.begin(), proxy_order.begin() + 1, proxy_order.begin() + 3);
  const LinearOrder identity = LinearOrder::identity(n);
  pvp.P.push_back(PartialOrder(3));
  pvp.S.push_back(LinearOrder(proxy_order));
  pvp.D.push_back(cab);
  std::vector<LinearOrder> others{bac, cab};
  others.insert(others.end(), fillers.begin(), fillers.end());
  for (const LinearOrder& l : others) {
    pvp.P.push_back(l.to_partial_order());
    pvp.S.push_back(identity);
    pvp.D.push_back(l);
  }
  out.voter = 0;
  out.edge = {kA, kB};
  out.after = replace_ballot(pvp, 0, *with_edge(pvp.P[0], out.edge)).profile;

  const Rule f(RuleSpec::of(rule));
  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  const ProxyOutcome before = run_proxy_vote(f, g, out.before);
  const ProxyOutcome after = run_proxy_vote(f, g, out.after);
  out.winner_before = before.winner;
  out.winner_after = after.winner;
  out.scores_before = scores(rule, before.gurus.cast);
  out.scores_after = scores(rule, after.gurus.cast);
  return out;
}

ManipulationInstance construct_proxy_choice_manipulation(const Rule& f,
                                                         const ManipulationInstance& iia,
                                                         const CheckOptions& options) {
  if (iia.kind != ManipulationKind::IIA) throw ManipulationError("expected an IIA instance");
  const ReplayResult replay = verify_instance(iia, f, nullptr);
  if (!replay.reproduced) {
    throw ManipulationError("not an IIA instance of this rule: " + replay.detail);
  }
  const int n = static_cast<int>(iia.ballots.size());
  const int m = iia.ballots.front().size();
  const CheckReport uvai = check_f_uvai(f, n, m, options);
  if (!uvai.passed) {
    throw ManipulationError("rule is not invariant to uniform voter additions at n=" +
                            std::to_string(n) + ", m=" + std::to_string(m));
  }

  const Voter i = iia.manipulator;
  const Alternative a = iia.winner_deviant;
  const Alternative b = iia.winner_truthful;
  const std::vector<LinearOrder> all = enumerate_linear_orders(m);
  const int total = n + static_cast<int>(all.size());
  const Voter j = n + static_cast<Voter>(linear_order_rank(iia.ballots[i]));
  const Voter k = n + static_cast<Voter>(linear_order_rank(iia.deviant_ballots[i]));

  std::vector<LinearOrder> augmented = iia.ballots;
  augmented.insert(augmented.end(), all.begin(), all.end());
  ProxyVoteProfile pvp = ProxyVoteProfile::classical(augmented);
  pvp.P[i] = make_partial_order(std::vector<Edge>{{a, b}}, m);
  pvp.D[i] = iia.ballots[i];

  auto proxy_order = [&](Voter first, Voter second) {
    std::vector<int> r{first, second};
    for (Voter v = 0; v < total; ++v) {
      if (v != first && v != second) r.push_back(v);
    }
    return LinearOrder(r);
  };
  pvp.S[i] = proxy_order(j, k);
  ProxyVoteProfile deviant = pvp;
  deviant.S[i] = proxy_order(k, j);

  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  const Alternative wt = run_proxy_vote(f, g, pvp).winner;
  const Alternative wd = run_proxy_vote(f, g, deviant).winner;
  if (wt != b || wd != a) {
    throw ManipulationError("constructed profiles elect " + std::to_string(wt) + " and " +
                            std::to_string(wd) + ", expected " + std::to_string(b) + " and " +
                            std::to_string(a));
  }
  ManipulationInstance pc = proxy_instance(ManipulationKind::PC, pvp, deviant, i, wt, wd);
  const ReplayResult check = verify_instance(pc, f, &g);
  if (!check.reproduced) throw ManipulationError("constructed instance fails: " + check.detail);
  return pc;
}

ManipulationInstance construct_single_peaked_manipulation(int n, const MedianRule& rule) {
  if (n < 2) throw ManipulationError("the construction needs at least two voters");
  const std::vector<Alternative>& axis = rule.axis.order();
  if (axis != ranking({kA, kC, kB}) && axis != ranking({kB, kC, kA})) {
    throw ManipulationError("the construction needs the axis (a, c, b)");
  }
  if (static_cast<int>(rule.phantoms.size()) != n - 1) {
    throw ManipulationError("median rule needs exactly n-1 phantoms");
  }
  if (std::find(rule.phantoms.begin(), rule.phantoms.end(), kA) == rule.phantoms.end()) {
    throw ManipulationError("the construction needs a phantom at a");
  }

  const LinearOrder sincere = ballot(kB, kC, kA);
  const LinearOrder misreport = ballot(kC, kA, kB);
  const LinearOrder fallback = ballot(kA, kC, kB);
  const PartialOrder c_over_b = make_partial_order(std::vector<Edge>{{kC, kB}}, 3);

  ProxyVoteProfile pvp;
  pvp.P.push_back(sincere.to_partial_order());
  pvp.S.push_back(LinearOrder::identity(n));
  pvp.D.push_back(sincere);
  for (Voter j = 1; j < n; ++j) {
    // Voter 0 first, then the others cyclically after j, j itself last.
    std::vector<int> order{0};
    for (int step = 1; step < n - 1; ++step) order.push_back(1 + (j - 1 + step) % (n - 1));
    order.push_back(j);
    pvp.P.push_back(c_over_b);
    pvp.S.push_back(LinearOrder(order));
    pvp.D.push_back(fallback);
  }
  ProxyVoteProfile deviant = replace_ballot(pvp, 0, misreport.to_partial_order()).profile;

  const Rule f(RuleSpec::of(rule));
  const MechanismSpec g = MechanismSpec::of(MechanismKind::Subset);
  const ProxyOutcome before = run_proxy_vote(f, g, pvp);
  const ProxyOutcome after = run_proxy_vote(f, g, deviant);
  if (before.winner != kA || after.winner != kC) {
    throw ManipulationError("constructed profiles elect " + std::to_string(before.winner) +
                            " and " + std::to_string(after.winner) + ", expected a and c");
  }
  if (!is_single_peaked(before.gurus.cast, rule.axis) ||
      !is_single_peaked(after.gurus.cast, rule.axis) || !is_single_peaked(pvp.D, rule.axis) ||
      !is_single_peaked(deviant.D, rule.axis)) {
    throw ManipulationError("constructed profiles leave the single-peaked domain");
  }
  ManipulationInstance pm =
      proxy_instance(ManipulationKind::PM, pvp, deviant, 0, before.winner, after.winner);
  const ReplayResult check = verify_instance(pm, f, &g);
  if (!check.reproduced) throw ManipulationError("constructed instance fails: " + check.detail);
  return pm;
}

}  // namespace proxyvote
