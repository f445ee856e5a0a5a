#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "proxyvote/mechanisms.hpp"
#include "proxyvote/orders.hpp"
#include "proxyvote/rules.hpp"

namespace proxyvote {

class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per voter: partial ballot P_i, proxy choice order S_i over voters, and a
// default linear ballot D_i extending P_i.
struct ProxyVoteProfile {
  std::vector<PartialOrder> P;
  std::vector<LinearOrder> S;
  std::vector<LinearOrder> D;

  int voters() const { return static_cast<int>(P.size()); }
  int alternatives() const { return P.empty() ? 0 : P.front().alternatives(); }
  // Throws ProfileError on size mismatches or a default that does not extend P_i.
  void validate() const;

  // Every voter casts the given ballot; S is the identity order.
  static ProxyVoteProfile classical(std::span<const LinearOrder> ballots);

  friend bool operator==(const ProxyVoteProfile&, const ProxyVoteProfile&) = default;
};

// Functional graph: out[i] is the voter i hands her vote to (itself if voting).
struct DelegationGraph {
  std::vector<Voter> out;
};

struct GuruAssignment {
  std::vector<Voter> guru;
  std::vector<LinearOrder> cast;
  VoterSet cycle_members;
};

struct ProxyOutcome {
  Alternative winner = 0;
  DelegationGraph graph;
  GuruAssignment gurus;
};

DelegationGraph build_delegation_graph(const MechanismSpec& g, const ProxyVoteProfile& pvp);
void build_delegation_graph(const MechanismSpec& g, const ProxyVoteProfile& pvp,
                            DelegationGraph& out);

// Voters on a delegation cycle of length two or more cast their defaults
// directly; everyone else follows out-edges to the first voter who casts.
GuruAssignment resolve_gurus(const DelegationGraph& r, const ProxyVoteProfile& pvp);
void resolve_gurus(const DelegationGraph& r, const ProxyVoteProfile& pvp, GuruAssignment& out);

ProxyOutcome run_proxy_vote(const Rule& f, const MechanismSpec& g, const ProxyVoteProfile& pvp);

// Voter k is renamed psi[k]: entry psi[k] of the result holds voter k's ballot,
// default, and proxy choice order with its content renamed by psi.
void rename_voters(std::span<const int> psi, const ProxyVoteProfile& pvp, ProxyVoteProfile& out);
ProxyVoteProfile rename_voters(std::span<const int> psi, const ProxyVoteProfile& pvp);
// Alternative a is renamed psi[a] in every ballot and default; S is untouched.
void rename_alternatives(std::span<const int> psi, const ProxyVoteProfile& pvp,
                         ProxyVoteProfile& out);
ProxyVoteProfile rename_alternatives(std::span<const int> psi, const ProxyVoteProfile& pvp);

// i-variant with P_i replaced. D_i is kept when it still extends the new
// ballot and otherwise repaired to guided_extension(ballot, D_i).
struct BallotChange {
  ProxyVoteProfile profile;
  bool default_repaired = false;
};
BallotChange replace_ballot(const ProxyVoteProfile& pvp, Voter i, const PartialOrder& ballot);

// Reusable buffers for evaluating many elections without reallocating.
class ElectionEvaluator {
 public:
  ElectionEvaluator(const Rule& f, const MechanismSpec& g) : f_(&f), g_(&g) {}
  // Delegation only; winner() must not be called.
  explicit ElectionEvaluator(const MechanismSpec& g) : f_(nullptr), g_(&g) {}

  Alternative winner(const ProxyVoteProfile& pvp);
  // Runs delegation only; the result is valid until the next call.
  const GuruAssignment& gurus(const ProxyVoteProfile& pvp);
  const GuruAssignment& last_gurus() const { return gurus_; }
  const DelegationGraph& last_graph() const { return graph_; }

 private:
  const Rule* f_;
  const MechanismSpec* g_;
  DelegationGraph graph_;
  GuruAssignment gurus_;
};

}  // namespace proxyvote
