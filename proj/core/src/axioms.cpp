#include "proxyvote/axioms.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>

#include "proxyvote/enumeration.hpp"
#include "proxyvote/parallel.hpp"

namespace proxyvote {

namespace {

constexpr std::array<std::pair<Property, std::string_view>, 14> kPropertyNames{{
    {Property::FAnonymity, "f_anonymity"},
    {Property::FNeutrality, "f_neutrality"},
    {Property::WeakMonotonicity, "weak_monotonicity"},
    {Property::Uvai, "uvai"},
    {Property::GAnonymity, "g_anonymity"},
    {Property::GNeutrality, "g_neutrality"},
    {Property::PA, "pa"},
    {Property::IIP, "iip"},
    {Property::PM, "pm"},
    {Property::ZR, "zr"},
    {Property::PVAnonymity, "pv_anonymity"},
    {Property::PVNeutrality, "pv_neutrality"},
    {Property::PVAM, "pvam"},
    {Property::PVDM, "pvdm"},
}};

double partial_orders(int m) { return partial_order_count(m); }

std::vector<std::vector<int>> non_identity_permutations(int k) {
  std::vector<std::vector<int>> perms = all_permutations(k);
  perms.erase(perms.begin());
  return perms;
}

// Walks every chunk of `space` with a fresh visitor per chunk and returns the
// first witness in enumeration order.
template <class Space, class MakeVisitor>
std::optional<json> first_violation(const Space& space, unsigned workers, MakeVisitor make) {
  return parallel_find_first<json>(space.chunks(), workers, [&](std::size_t chunk) {
    auto visit = make();
    std::optional<json> found;
    space.walk_chunk(chunk, [&](const auto& profile) {
      found = visit(profile);
      return found.has_value();
    });
    return found;
  });
}

CheckReport make_report(Property p, std::string subject, int n, int m, double space,
                        std::optional<json> witness) {
  CheckReport r;
  r.property = std::string(to_string(p));
  r.subject = std::move(subject);
  r.voters = n;
  r.alternatives = m;
  r.space = space;
  r.passed = !witness.has_value();
  r.witness = std::move(witness);
  return r;
}

void guard(Property p, int n, int m, bool linear_only, const CheckOptions& options) {
  guard_bounds(to_string(p), n, m, check_cost(p, n, m), linear_only, options);
}

std::string pair_name(const Rule& f, const MechanismSpec& g) { return f.name() + " / " + g.name(); }

std::vector<int> ballots_as_ranks(const LinearOrder& l) { return l.ranking(); }

}  // namespace

std::string_view to_string(Property p) {
  for (const auto& [k, name] : kPropertyNames) {
    if (k == p) return name;
  }
  return "?";
}

Property parse_property(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::replace(lower.begin(), lower.end(), '-', '_');
  for (const auto& [k, n] : kPropertyNames) {
    if (n == lower) return k;
  }
  throw std::invalid_argument("unknown property: " + std::string(name));
}

bool needs_rule(Property p) {
  switch (p) {
    case Property::GAnonymity:
    case Property::GNeutrality:
    case Property::PA:
    case Property::IIP:
    case Property::PM:
    case Property::ZR:
      return false;
    default:
      return true;
  }
}

bool needs_mechanism(Property p) {
  switch (p) {
    case Property::FAnonymity:
    case Property::FNeutrality:
    case Property::WeakMonotonicity:
    case Property::Uvai:
      return false;
    default:
      return true;
  }
}

double check_cost(Property p, int n, int m) {
  if (n < 1 || m < 1) return 0;
  if (m > kMaxAlternatives) return HUGE_VAL;
  const double mf = static_cast<double>(factorial(std::min(m, 20)));
  const double nf = static_cast<double>(factorial(std::min(n, 20)));
  const double linear = power(mf, n);
  const double partial = power(partial_orders(m), n);
  const double proxy = power(ballot_choice_count(m), n) * power(nf, n);
  switch (p) {
    case Property::FAnonymity: return linear * nf;
    case Property::FNeutrality: return linear * mf;
    case Property::WeakMonotonicity: return linear * (1 + n);
    case Property::Uvai: return linear * 2;
    case Property::GAnonymity: return partial * nf * n;
    case Property::GNeutrality: return partial * mf * n;
    case Property::PA: return partial * n;
    case Property::IIP: return partial * n * n;
    case Property::PM: return partial * n * n;
    case Property::ZR: return proxy;
    case Property::PVAnonymity: return proxy * nf;
    case Property::PVNeutrality: return proxy * mf;
    case Property::PVAM:
    case Property::PVDM: return proxy * (1 + n * (m - 1));
  }
  return proxy;
}

void guard_bounds(std::string_view what, int n, int m, double cost, bool linear_only,
                  const CheckOptions& options) {
  if (n < 1 || m < 1) throw std::invalid_argument("need at least one voter and one alternative");
  if (options.force) return;
  const int max_voters = linear_only ? 4 : 3;
  std::ostringstream os;
  if (n > max_voters || m > 3) {
    os << what << ": n=" << n << ", m=" << m << " exceeds the default bounds n <= " << max_voters
       << ", m <= 3 (about " << cost << " evaluations)";
    throw BoundsError(os.str(), cost);
  }
  if (cost > kMaxEvaluations) {
    os << what << ": about " << cost << " evaluations exceeds " << kMaxEvaluations;
    throw BoundsError(os.str(), cost);
  }
}

json CheckReport::to_json() const {
  json j;
  j["property"] = property;
  j["subject"] = subject;
  j["voters"] = voters;
  j["alternatives"] = alternatives;
  j["space"] = space;
  j["verdict"] = passed ? "pass" : "fail";
  if (witness) j["witness"] = *witness;
  return j;
}

json rule_evaluation(std::span<const LinearOrder> ballots, Alternative winner) {
  json b = json::array();
  for (const LinearOrder& l : ballots) b.push_back(ballots_as_ranks(l));
  return {{"type", "rule"}, {"ballots", std::move(b)}, {"winner", winner}};
}

json mechanism_evaluation(std::span<const PartialOrder> profile, Voter i,
                          const PermittedSet& permitted) {
  json p = json::array();
  for (const PartialOrder& q : profile) p.push_back(to_json_value(q));
  return {{"type", "mechanism"},
          {"alternatives", profile.empty() ? 0 : profile.front().alternatives()},
          {"P", std::move(p)},
          {"voter", i},
          {"permitted", to_json_value(permitted)}};
}

json proxy_evaluation(const ProxyVoteProfile& pvp, const GuruAssignment& gurus,
                      std::optional<Alternative> winner) {
  json j = {{"type", "proxy"}, {"profile", to_json_value(pvp)}};
  json g = to_json_value(gurus);
  j["guru"] = std::move(g["guru"]);
  j["cast"] = std::move(g["cast"]);
  j["cycle_members"] = std::move(g["cycle_members"]);
  if (winner) j["winner"] = *winner;
  return j;
}

// ---------------------------------------------------------------- f checks

CheckReport check_f_anonymity(const Rule& f, int n, int m, const CheckOptions& options) {
  guard(Property::FAnonymity, n, m, true, options);
  LinearProfileSpace space(n, m);
  const auto perms = non_identity_permutations(n);
  auto witness = first_violation(space, options.workers, [&] {
    return [&, renamed = std::vector<LinearOrder>(n)](
               const std::vector<LinearOrder>& profile) mutable -> std::optional<json> {
      const Alternative w = f(profile);
      for (const auto& psi : perms) {
        for (int k = 0; k < n; ++k) renamed[psi[k]] = profile[k];
        const Alternative w2 = f(renamed);
        if (w2 != w) {
          return json{{"bijection", psi},
                      {"evaluations", {rule_evaluation(profile, w), rule_evaluation(renamed, w2)}}};
        }
      }
      return std::nullopt;
    };
  });
  return make_report(Property::FAnonymity, f.name(), n, m, space.size(), std::move(witness));
}

CheckReport check_f_neutrality(const Rule& f, int n, int m, const CheckOptions& options) {
  guard(Property::FNeutrality, n, m, true, options);
  LinearProfileSpace space(n, m);
  const auto perms = non_identity_permutations(m);
  auto witness = first_violation(space, options.workers, [&] {
    return [&, renamed = std::vector<LinearOrder>(n)](
               const std::vector<LinearOrder>& profile) mutable -> std::optional<json> {
      const Alternative w = f(profile);
      for (const auto& psi : perms) {
        for (int k = 0; k < n; ++k) renamed[k] = apply_alt_bijection(psi, profile[k]);
        const Alternative w2 = f(renamed);
        if (w2 != psi[w]) {
          return json{{"bijection", psi},
                      {"expected", psi[w]},
                      {"evaluations", {rule_evaluation(profile, w), rule_evaluation(renamed, w2)}}};
        }
      }
      return std::nullopt;
    };
  });
  return make_report(Property::FNeutrality, f.name(), n, m, space.size(), std::move(witness));
}

CheckReport check_f_weak_monotonicity(const Rule& f, int n, int m, const CheckOptions& options) {
  guard(Property::WeakMonotonicity, n, m, true, options);
  LinearProfileSpace space(n, m);
  auto witness = first_violation(space, options.workers, [&] {
    return [&, lifted = std::vector<LinearOrder>()](
               const std::vector<LinearOrder>& profile) mutable -> std::optional<json> {
      const Alternative a = f(profile);
      for (int i = 0; i < n; ++i) {
        const int pos = profile[i].position(a);
        if (pos == 0) continue;
        std::vector<int> r = profile[i].ranking();
        const Alternative b = r[pos - 1];
        std::swap(r[pos - 1], r[pos]);
        lifted = profile;
        lifted[i] = LinearOrder(r);
        const Alternative w2 = f(lifted);
        if (w2 != a) {
          return json{{"voter", i},
                      {"lifted", a},
                      {"over", b},
                      {"evaluations", {rule_evaluation(profile, a), rule_evaluation(lifted, w2)}}};
        }
      }
      return std::nullopt;
    };
  });
  return make_report(Property::WeakMonotonicity, f.name(), n, m, space.size(),
                     std::move(witness));
}

CheckReport check_f_uvai(const Rule& f, int n, int m, const CheckOptions& options) {
  guard(Property::Uvai, n, m, true, options);
  LinearProfileSpace space(n, m);
  const std::vector<LinearOrder> all = enumerate_linear_orders(m);
  auto witness = first_violation(space, options.workers, [&] {
    return [&, augmented = std::vector<LinearOrder>()](
               const std::vector<LinearOrder>& profile) mutable -> std::optional<json> {
      const Alternative w = f(profile);
      augmented = profile;
      augmented.insert(augmented.end(), all.begin(), all.end());
      const Alternative w2 = f(augmented);
      if (w2 == w) return std::nullopt;
      return json{{"evaluations", {rule_evaluation(profile, w), rule_evaluation(augmented, w2)}}};
    };
  });
  return make_report(Property::Uvai, f.name(), n, m, space.size(), std::move(witness));
}

// ---------------------------------------------------------------- g checks

CheckReport check_g_anonymity(const MechanismSpec& g, int n, int m, const CheckOptions& options) {
  guard(Property::GAnonymity, n, m, false, options);
  g.validate(n);
  PartialProfileSpace space(n, m);
  const auto perms = non_identity_permutations(n);
  auto witness = first_violation(space, options.workers, [&] {
    return [&, renamed = std::vector<PartialOrder>(n)](
               const std::vector<PartialOrder>& profile) mutable -> std::optional<json> {
      for (const auto& psi : perms) {
        for (int k = 0; k < n; ++k) renamed[psi[k]] = profile[k];
        for (Voter i = 0; i < n; ++i) {
          const PermittedSet before = permitted_proxies(g, profile, i);
          PermittedSet expected;
          for (Voter j : before.members()) expected.insert(psi[j]);
          const PermittedSet after = permitted_proxies(g, renamed, psi[i]);
          if (after != expected) {
            return json{{"bijection", psi},
                        {"voter", i},
                        {"expected", to_json_value(expected)},
                        {"evaluations",
                         {mechanism_evaluation(profile, i, before),
                          mechanism_evaluation(renamed, psi[i], after)}}};
          }
        }
      }
      return std::nullopt;
    };
  });
  return make_report(Property::GAnonymity, g.name(), n, m, space.size(), std::move(witness));
}

CheckReport check_g_neutrality(const MechanismSpec& g, int n, int m, const CheckOptions& options) {
  guard(Property::GNeutrality, n, m, false, options);
  g.validate(n);
  PartialProfileSpace space(n, m);
  const auto perms = non_identity_permutations(m);
  auto witness = first_violation(space, options.workers, [&] {
    return [&, renamed = std::vector<PartialOrder>(n)](
               const std::vector<PartialOrder>& profile) mutable -> std::optional<json> {
      for (const auto& psi : perms) {
        for (int k = 0; k < n; ++k) renamed[k] = apply_alt_bijection(psi, profile[k]);
        for (Voter i = 0; i < n; ++i) {
          const PermittedSet before = permitted_proxies(g, profile, i);
          const PermittedSet after = permitted_proxies(g, renamed, i);
          if (after != before) {
            return json{{"bijection", psi},
                        {"voter", i},
                        {"evaluations",
                         {mechanism_evaluation(profile, i, before),
                          mechanism_evaluation(renamed, i, after)}}};
          }
        }
      }
      return std::nullopt;
    };
  });
  return make_report(Property::GNeutrality, g.name(), n, m, space.size(), std::move(witness));
}

CheckReport check_pa(const MechanismSpec& g, int n, int m, const CheckOptions& options) {
  guard(Property::PA, n, m, false, options);
  g.validate(n);
  const std::vector<PartialOrder> orders = enumerate_partial_orders(m);
  const std::size_t k = orders.size();
  // Chunk (i, ballot) searches every completion for a non-empty permitted set.
  auto witness = parallel_find_first<json>(
      static_cast<std::size_t>(n) * k, options.workers, [&](std::size_t chunk) -> std::optional<json> {
        const Voter i = static_cast<Voter>(chunk / k);
        std::vector<PartialOrder> profile(n, orders.front());
        profile[i] = orders[chunk % k];
        Odometer odo(std::vector<std::size_t>(n - 1, k));
        std::optional<json> first;
        double completions = 0;
        while (true) {
          for (int slot = 0, v = 0; v < n; ++v) {
            if (v != i) profile[v] = orders[odo[slot++]];
          }
          const PermittedSet permitted = permitted_proxies(g, profile, i);
          if (!permitted.empty()) return std::nullopt;
          if (!first) first = mechanism_evaluation(profile, i, permitted);
          ++completions;
          if (n == 1 || odo.exhausted(odo.next())) break;
        }
        return json{{"voter", i},
                    {"ballot", to_json_value(orders[chunk % k])},
                    {"completions_checked", completions},
                    {"evaluations", {*first}}};
      });
  return make_report(Property::PA, g.name(), n, m, n * power(partial_orders(m), n),
                     std::move(witness));
}

CheckReport check_iip(const MechanismSpec& g, int n, int m, const CheckOptions& options) {
  guard(Property::IIP, n, m, false, options);
  g.validate(n);
  const std::vector<PartialOrder> orders = enumerate_partial_orders(m);
  const std::size_t k = orders.size();
  // Chunk (i, j, P_i, P_j) compares every completion with the first one.
  const std::size_t per_voter_pair = k * k;
  auto witness = parallel_find_first<json>(
      static_cast<std::size_t>(n) * n * per_voter_pair, options.workers,
      [&](std::size_t chunk) -> std::optional<json> {
        const Voter i = static_cast<Voter>(chunk / (n * per_voter_pair));
        const Voter j = static_cast<Voter>(chunk / per_voter_pair % n);
        if (i == j) return std::nullopt;
        std::vector<PartialOrder> profile(n, orders.front());
        profile[i] = orders[chunk % per_voter_pair / k];
        profile[j] = orders[chunk % k];
        Odometer odo(std::vector<std::size_t>(std::max(n - 2, 0), k));
        std::optional<json> reference;
        bool reference_member = false;
        while (true) {
          for (int slot = 0, v = 0; v < n; ++v) {
            if (v != i && v != j) profile[v] = orders[odo[slot++]];
          }
          const PermittedSet permitted = permitted_proxies(g, profile, i);
          if (!reference) {
            reference = mechanism_evaluation(profile, i, permitted);
            reference_member = permitted.contains(j);
          } else if (permitted.contains(j) != reference_member) {
            return json{{"voter", i},
                        {"candidate", j},
                        {"evaluations", {*reference, mechanism_evaluation(profile, i, permitted)}}};
          }
          if (n <= 2 || odo.exhausted(odo.next())) break;
        }
        return std::nullopt;
      });
  return make_report(Property::IIP, g.name(), n, m, power(partial_orders(m), n) * n * (n - 1),
                     std::move(witness));
}

CheckReport check_pm(const MechanismSpec& g, int n, int m, const CheckOptions& options) {
  guard(Property::PM, n, m, false, options);
  g.validate(n);
  PartialProfileSpace space(n, m);
  auto witness = first_violation(space, options.workers, [&] {
    return [&](const std::vector<PartialOrder>& profile) -> std::optional<json> {
      for (Voter i = 0; i < n; ++i) {
        const PermittedSet permitted = permitted_proxies(g, profile, i);
        for (Voter j : permitted.members()) {
          if (j == i) continue;
          const EdgeSet agree_j = agree(profile[i], profile[j]);
          const EdgeSet disagree_j = disagree(profile[i], profile[j]);
          for (Voter k = 0; k < n; ++k) {
            if (k == i || permitted.contains(k)) continue;
            if (agree_j.is_subset_of(agree(profile[i], profile[k])) &&
                disagree(profile[i], profile[k]).is_subset_of(disagree_j)) {
              return json{{"voter", i},
                          {"permitted", j},
                          {"excluded", k},
                          {"evaluations", {mechanism_evaluation(profile, i, permitted)}}};
            }
          }
        }
      }
      return std::nullopt;
    };
  });
  return make_report(Property::PM, g.name(), n, m, space.size(), std::move(witness));
}

CheckReport check_zr(const MechanismSpec& g, int n, int m, const CheckOptions& options) {
  guard(Property::ZR, n, m, false, options);
  g.validate(n);
  ProxyProfileSpace space(n, m);
  auto witness = first_violation(space, options.workers, [&] {
    return [&, eval = ElectionEvaluator(g)](const ProxyVoteProfile& pvp) mutable
           -> std::optional<json> {
      const GuruAssignment& gurus = eval.gurus(pvp);
      for (Voter i = 0; i < n; ++i) {
        if (!extends(gurus.cast[i], pvp.P[i])) {
          return json{{"voter", i}, {"evaluations", {proxy_evaluation(pvp, gurus, std::nullopt)}}};
        }
      }
      return std::nullopt;
    };
  });
  return make_report(Property::ZR, g.name(), n, m, space.size(), std::move(witness));
}

// ---------------------------------------------------------------- (f, g) checks

CheckReport check_pv_anonymity(const Rule& f, const MechanismSpec& g, int n, int m,
                               const CheckOptions& options) {
  guard(Property::PVAnonymity, n, m, false, options);
  g.validate(n);
  ProxyProfileSpace space(n, m);
  const auto perms = non_identity_permutations(n);
  auto witness = first_violation(space, options.workers, [&] {
    return [&, eval = ElectionEvaluator(f, g), renamed = ProxyVoteProfile()](
               const ProxyVoteProfile& pvp) mutable -> std::optional<json> {
      const Alternative w = eval.winner(pvp);
      for (const auto& psi : perms) {
        rename_voters(psi, pvp, renamed);
        const Alternative w2 = eval.winner(renamed);
        if (w2 != w) {
          const GuruAssignment after = eval.last_gurus();
          return json{{"bijection", psi},
                      {"evaluations",
                       {proxy_evaluation(pvp, eval.gurus(pvp), w),
                        proxy_evaluation(renamed, after, w2)}}};
        }
      }
      return std::nullopt;
    };
  });
  return make_report(Property::PVAnonymity, pair_name(f, g), n, m, space.size(),
                     std::move(witness));
}

CheckReport check_pv_neutrality(const Rule& f, const MechanismSpec& g, int n, int m,
                                const CheckOptions& options) {
  guard(Property::PVNeutrality, n, m, false, options);
  g.validate(n);
  ProxyProfileSpace space(n, m);
  const auto perms = non_identity_permutations(m);
  auto witness = first_violation(space, options.workers, [&] {
    return [&, eval = ElectionEvaluator(f, g), renamed = ProxyVoteProfile()](
               const ProxyVoteProfile& pvp) mutable -> std::optional<json> {
      const Alternative w = eval.winner(pvp);
      for (const auto& psi : perms) {
        rename_alternatives(psi, pvp, renamed);
        const Alternative w2 = eval.winner(renamed);
        if (w2 != psi[w]) {
          const GuruAssignment after = eval.last_gurus();
          return json{{"bijection", psi},
                      {"expected", psi[w]},
                      {"evaluations",
                       {proxy_evaluation(pvp, eval.gurus(pvp), w),
                        proxy_evaluation(renamed, after, w2)}}};
        }
      }
      return std::nullopt;
    };
  });
  return make_report(Property::PVNeutrality, pair_name(f, g), n, m, space.size(),
                     std::move(witness));
}

namespace {

enum class EdgeChange { Add, Delete };

// Tries every voter and every single-edge change favouring the current winner.
class MonotonicityProbe {
 public:
  MonotonicityProbe(const Rule& f, const MechanismSpec& g, EdgeChange change)
      : eval_(f, g), change_(change) {}

  std::optional<json> operator()(const ProxyVoteProfile& pvp) {
    const Alternative a = eval_.winner(pvp);
    const int n = pvp.voters();
    const int m = pvp.alternatives();
    work_ = pvp;
    for (Voter i = 0; i < n; ++i) {
      for (Alternative b = 0; b < m; ++b) {
        if (b == a) continue;
        const std::optional<PartialOrder> changed =
            change_ == EdgeChange::Add ? with_edge(pvp.P[i], {a, b}) : without_edge(pvp.P[i], {b, a});
        if (!changed) continue;
        work_.P[i] = *changed;
        const bool repaired = !extends(pvp.D[i], *changed);
        if (repaired) work_.D[i] = guided_extension(*changed, pvp.D[i]);
        const Alternative w2 = eval_.winner(work_);
        if (w2 != a) {
          const GuruAssignment after = eval_.last_gurus();
          json edge = change_ == EdgeChange::Add ? json{a, b} : json{b, a};
          return json{{"voter", i},
                      {"operation", change_ == EdgeChange::Add ? "add" : "delete"},
                      {"edge", std::move(edge)},
                      {"default_repaired", repaired},
                      {"evaluations",
                       {proxy_evaluation(pvp, eval_.gurus(pvp), a),
                        proxy_evaluation(work_, after, w2)}}};
        }
        work_.P[i] = pvp.P[i];
        work_.D[i] = pvp.D[i];
      }
    }
    return std::nullopt;
  }

 private:
  ElectionEvaluator eval_;
  EdgeChange change_;
  ProxyVoteProfile work_;
};

CheckReport check_monotonicity(Property p, EdgeChange change, const Rule& f,
                               const MechanismSpec& g, int n, int m, const CheckOptions& options) {
  guard(p, n, m, false, options);
  g.validate(n);
  ProxyProfileSpace space(n, m);
  auto witness = first_violation(space, options.workers,
                                 [&] { return MonotonicityProbe(f, g, change); });
  return make_report(p, pair_name(f, g), n, m, space.size(), std::move(witness));
}

}  // namespace

CheckReport check_pvam(const Rule& f, const MechanismSpec& g, int n, int m,
                       const CheckOptions& options) {
  return check_monotonicity(Property::PVAM, EdgeChange::Add, f, g, n, m, options);
}

CheckReport check_pvdm(const Rule& f, const MechanismSpec& g, int n, int m,
                       const CheckOptions& options) {
  return check_monotonicity(Property::PVDM, EdgeChange::Delete, f, g, n, m, options);
}

std::optional<json> pvam_violation(const Rule& f, const MechanismSpec& g,
                                   const ProxyVoteProfile& pvp) {
  pvp.validate();
  return MonotonicityProbe(f, g, EdgeChange::Add)(pvp);
}

std::optional<json> pvdm_violation(const Rule& f, const MechanismSpec& g,
                                   const ProxyVoteProfile& pvp) {
  pvp.validate();
  return MonotonicityProbe(f, g, EdgeChange::Delete)(pvp);
}

CheckReport check_property(Property p, const Rule* f, const MechanismSpec* g, int n, int m,
                           const CheckOptions& options) {
  if (needs_rule(p) && !f) {
    throw std::invalid_argument(std::string(to_string(p)) + " needs a rule");
  }
  if (needs_mechanism(p) && !g) {
    throw std::invalid_argument(std::string(to_string(p)) + " needs a mechanism");
  }
  switch (p) {
    case Property::FAnonymity: return check_f_anonymity(*f, n, m, options);
    case Property::FNeutrality: return check_f_neutrality(*f, n, m, options);
    case Property::WeakMonotonicity: return check_f_weak_monotonicity(*f, n, m, options);
    case Property::Uvai: return check_f_uvai(*f, n, m, options);
    case Property::GAnonymity: return check_g_anonymity(*g, n, m, options);
    case Property::GNeutrality: return check_g_neutrality(*g, n, m, options);
    case Property::PA: return check_pa(*g, n, m, options);
    case Property::IIP: return check_iip(*g, n, m, options);
    case Property::PM: return check_pm(*g, n, m, options);
    case Property::ZR: return check_zr(*g, n, m, options);
    case Property::PVAnonymity: return check_pv_anonymity(*f, *g, n, m, options);
    case Property::PVNeutrality: return check_pv_neutrality(*f, *g, n, m, options);
    case Property::PVAM: return check_pvam(*f, *g, n, m, options);
    case Property::PVDM: return check_pvdm(*f, *g, n, m, options);
  }
  throw std::invalid_argument("unknown property");
}

// ---------------------------------------------------------------- replay

ReplayResult replay_witness(const json& witness, const Rule* f, const MechanismSpec* g) {
  ReplayResult result;
  auto fail = [&](int index, const std::string& why) {
    result.reproduced = false;
    result.detail = "evaluation " + std::to_string(index) + ": " + why;
    return result;
  };
  if (!witness.contains("evaluations") || !witness["evaluations"].is_array()) {
    return fail(-1, "witness has no evaluations");
  }
  int index = 0;
  for (const json& ev : witness["evaluations"]) {
    const std::string type = ev.at("type").get<std::string>();
    if (type == "rule") {
      if (!f) return fail(index, "rule evaluation without a rule");
      const std::vector<LinearOrder> ballots = ballots_from_json(ev.at("ballots"));
      const Alternative w = (*f)(ballots);
      if (w != ev.at("winner").get<int>()) {
        return fail(index, "winner " + std::to_string(w) + " differs from recorded " +
                               ev.at("winner").dump());
      }
    } else if (type == "mechanism") {
      if (!g) return fail(index, "mechanism evaluation without a mechanism");
      const int m = ev.at("alternatives").get<int>();
      std::vector<PartialOrder> profile;
      for (const json& p : ev.at("P")) profile.push_back(partial_order_from_json(p, m));
      const Voter i = ev.at("voter").get<int>();
      const PermittedSet permitted = permitted_proxies(*g, profile, i);
      if (to_json_value(permitted) != ev.at("permitted")) {
        return fail(index, "permitted set " + to_json_value(permitted).dump() +
                               " differs from recorded " + ev.at("permitted").dump());
      }
    } else if (type == "proxy") {
      if (!g) return fail(index, "proxy evaluation without a mechanism");
      const ProxyVoteProfile pvp = profile_from_json(ev.at("profile"));
      g->validate(pvp.voters());
      const GuruAssignment gurus = resolve_gurus(build_delegation_graph(*g, pvp), pvp);
      if (json(gurus.guru) != ev.at("guru")) {
        return fail(index, "gurus " + json(gurus.guru).dump() + " differ from recorded " +
                               ev.at("guru").dump());
      }
      if (ev.contains("winner")) {
        if (!f) return fail(index, "proxy evaluation with a winner needs a rule");
        const Alternative w = (*f)(gurus.cast);
        if (w != ev["winner"].get<int>()) {
          return fail(index, "winner " + std::to_string(w) + " differs from recorded " +
                                 ev["winner"].dump());
        }
      }
    } else {
      return fail(index, "unknown evaluation type " + type);
    }
    ++index;
    ++result.evaluations;
  }
  return result;
}

}  // namespace proxyvote
