#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "proxyvote/election.hpp"
#include "proxyvote/json_io.hpp"
#include "proxyvote/mechanisms.hpp"
#include "proxyvote/rules.hpp"

namespace proxyvote {

struct CheckOptions {
  unsigned workers = 1;
  // Skip the bounds guard.
  bool force = false;
};

// Largest quantification space a check runs without `force`.
inline constexpr double kMaxEvaluations = 1e9;

class BoundsError : public std::runtime_error {
 public:
  BoundsError(const std::string& what, double cost) : std::runtime_error(what), cost_(cost) {}
  double cost() const noexcept { return cost_; }

 private:
  double cost_;
};

enum class Property {
  FAnonymity,
  FNeutrality,
  WeakMonotonicity,
  Uvai,
  GAnonymity,
  GNeutrality,
  PA,
  IIP,
  PM,
  ZR,
  PVAnonymity,
  PVNeutrality,
  PVAM,
  PVDM,
};

std::string_view to_string(Property p);
Property parse_property(std::string_view name);
bool needs_rule(Property p);
bool needs_mechanism(Property p);

// Estimated number of election or mechanism evaluations.
double check_cost(Property p, int n, int m);
// Throws BoundsError unless n <= 3 (4 for checks over linear profiles only),
// m <= 3 and the cost stays under kMaxEvaluations, or force is set.
void guard_bounds(std::string_view what, int n, int m, double cost, bool linear_only,
                  const CheckOptions& options);

struct CheckReport {
  std::string property;
  std::string subject;
  int voters = 0;
  int alternatives = 0;
  double space = 0;
  bool passed = true;
  // Present iff !passed. Always holds an "evaluations" array that replays.
  std::optional<json> witness;

  json to_json() const;
};

// Every check quantifies exhaustively; the witness of a failure is the first
// counterexample in enumeration order.
CheckReport check_f_anonymity(const Rule& f, int n, int m, const CheckOptions& options = {});
CheckReport check_f_neutrality(const Rule& f, int n, int m, const CheckOptions& options = {});
CheckReport check_f_weak_monotonicity(const Rule& f, int n, int m,
                                      const CheckOptions& options = {});
CheckReport check_f_uvai(const Rule& f, int n, int m, const CheckOptions& options = {});

CheckReport check_g_anonymity(const MechanismSpec& g, int n, int m,
                              const CheckOptions& options = {});
CheckReport check_g_neutrality(const MechanismSpec& g, int n, int m,
                               const CheckOptions& options = {});
CheckReport check_pa(const MechanismSpec& g, int n, int m, const CheckOptions& options = {});
CheckReport check_iip(const MechanismSpec& g, int n, int m, const CheckOptions& options = {});
CheckReport check_pm(const MechanismSpec& g, int n, int m, const CheckOptions& options = {});
CheckReport check_zr(const MechanismSpec& g, int n, int m, const CheckOptions& options = {});

CheckReport check_pv_anonymity(const Rule& f, const MechanismSpec& g, int n, int m,
                               const CheckOptions& options = {});
CheckReport check_pv_neutrality(const Rule& f, const MechanismSpec& g, int n, int m,
                                const CheckOptions& options = {});
CheckReport check_pvam(const Rule& f, const MechanismSpec& g, int n, int m,
                       const CheckOptions& options = {});
CheckReport check_pvdm(const Rule& f, const MechanismSpec& g, int n, int m,
                       const CheckOptions& options = {});

// Dispatches on p; f or g may be null when p does not use it.
CheckReport check_property(Property p, const Rule* f, const MechanismSpec* g, int n, int m,
                           const CheckOptions& options = {});

// Single-profile forms of the proxy vote monotonicity checks: the first
// violating (voter, edge) for this profile, as a witness, or nullopt.
std::optional<json> pvam_violation(const Rule& f, const MechanismSpec& g,
                                   const ProxyVoteProfile& pvp);
std::optional<json> pvdm_violation(const Rule& f, const MechanismSpec& g,
                                   const ProxyVoteProfile& pvp);

// Witness building blocks.
json rule_evaluation(std::span<const LinearOrder> ballots, Alternative winner);
json mechanism_evaluation(std::span<const PartialOrder> profile, Voter i,
                          const PermittedSet& permitted);
json proxy_evaluation(const ProxyVoteProfile& pvp, const GuruAssignment& gurus,
                      std::optional<Alternative> winner);

struct ReplayResult {
  bool reproduced = true;
  int evaluations = 0;
  std::string detail;
};

// Re-runs every evaluation recorded in witness["evaluations"] and compares the
// stored outcomes. Rule evaluations need f, mechanism evaluations need g, proxy
// evaluations need g and, when they record a winner, f.
ReplayResult replay_witness(const json& witness, const Rule* f, const MechanismSpec* g);

}  // namespace proxyvote
