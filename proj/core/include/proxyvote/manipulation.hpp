#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "proxyvote/axioms.hpp"
#include "proxyvote/election.hpp"
#include "proxyvote/json_io.hpp"
#include "proxyvote/rules.hpp"

namespace proxyvote {

enum class ManipulationKind { GS, IIA, PC, PM };

std::string_view to_string(ManipulationKind kind);
ManipulationKind parse_manipulation_kind(std::string_view name);

class ManipulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One voter gains by a unilateral change. GS and IIA instances live on linear
// profiles (`ballots`); PC and PM instances on proxy vote profiles.
struct ManipulationInstance {
  ManipulationKind kind = ManipulationKind::GS;
  Voter manipulator = 0;
  // The manipulator's true preferences: L_i, or P_i in a proxy vote.
  PartialOrder sincere;
  Alternative winner_truthful = 0;
  Alternative winner_deviant = 0;

  std::vector<LinearOrder> ballots;
  std::vector<LinearOrder> deviant_ballots;

  ProxyVoteProfile truthful;
  ProxyVoteProfile deviant;
  // PM: the deviant default had to be repaired to extend the deviant ballot.
  bool default_repaired = false;

  bool on_proxy_profiles() const {
    return kind == ManipulationKind::PC || kind == ManipulationKind::PM;
  }
  // Includes replayable "evaluations"; proxy evaluations need the mechanism.
  json to_json(const MechanismSpec* g = nullptr) const;
};

struct FindOptions {
  unsigned workers = 1;
  bool force = false;
  // Restricts sincere and deviant profiles (all defaults and casts for proxy
  // votes) to those single-peaked on this axis.
  std::optional<Axis> single_peaked;
};

double find_cost(ManipulationKind kind, int n, int m);

std::optional<ManipulationInstance> find_gs(const Rule& f, int n, int m,
                                            const FindOptions& options = {});
// Throws ManipulationError for m <= 2, where no deviation can keep the order.
std::optional<ManipulationInstance> find_iia(const Rule& f, int n, int m,
                                             const FindOptions& options = {});
std::optional<ManipulationInstance> find_pc(const Rule& f, const MechanismSpec& g, int n, int m,
                                            const FindOptions& options = {});
std::optional<ManipulationInstance> find_pm(const Rule& f, const MechanismSpec& g, int n, int m,
                                            const FindOptions& options = {});

// Number of (profile, voter, deviation) triples that are manipulations.
std::uint64_t count_manipulations(ManipulationKind kind, const Rule& f, const MechanismSpec* g,
                                  int n, int m, const FindOptions& options = {});

// Recomputes both elections and the preference conditions of the kind.
ReplayResult verify_instance(const ManipulationInstance& instance, const Rule& f,
                             const MechanismSpec* g);

// The all-linear proxy vote version of a GS instance: everyone votes directly,
// so the same deviation works as a ballot change.
ManipulationInstance lift_gs_to_pm(const ManipulationInstance& gs, const Rule& f,
                                   const MechanismSpec& g);

// Adding a single edge a>b to an empty ballot moves its guru from a b>a>c voter
// to a c>a>b voter and turns the scoring winner from a into c, under SUBSET.
// Alternatives are a=0, b=1, c=2; the voter is 0, the two proxies 1 and 2.
struct AdditionCounterexample {
  std::string branch;
  ProxyVoteProfile before;
  ProxyVoteProfile after;
  Voter voter = 0;
  Edge edge;
  Alternative expected_before = 0;
  Alternative expected_after = 2;
  Alternative winner_before = 0;
  Alternative winner_after = 0;
  std::vector<std::int64_t> scores_before;
  std::vector<std::int64_t> scores_after;

  bool verified() const {
    return winner_before == expected_before && winner_after == expected_after;
  }
  json to_json() const;
};

// n >= 14, three alternatives. The filler electorate depends on the parity of
// n, on whether the tie-break puts a above c, and on the shape of the weights.
AdditionCounterexample construct_addition_counterexample(int n, const ScoringRule& rule);

// From an IIA instance of a rule invariant to uniform voter additions: append
// one voter per ranking and let the manipulator, now holding only a>b, choose
// between the voters holding her old and her new ballot. Checks the invariance
// at the instance's size (guarded like the axiom checks) and the result.
ManipulationInstance construct_proxy_choice_manipulation(const Rule& f,
                                                         const ManipulationInstance& iia,
                                                         const CheckOptions& options = {});

// PM manipulation under SUBSET for a median rule on the axis (a, c, b) with a
// phantom at a. Voter 0 holds b>c>a; everyone else holds only c>b, ranks voter 0
// first and defaults to a>c>b. Reporting c>a>b makes voter 0 everyone's guru.
ManipulationInstance construct_single_peaked_manipulation(int n, const MedianRule& rule);

}  // namespace proxyvote
