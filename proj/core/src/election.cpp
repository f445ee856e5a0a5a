#include "proxyvote/election.hpp"

#include <string>

namespace proxyvote {

void ProxyVoteProfile::validate() const {
  const int n = voters();
  if (n < 1 || n > kMaxVoters) throw ProfileError("voter count must be in [1, 64]");
  if (static_cast<int>(S.size()) != n || static_cast<int>(D.size()) != n) {
    throw ProfileError("P, S and D must have one entry per voter");
  }
  const int m = alternatives();
  for (int i = 0; i < n; ++i) {
    if (P[i].alternatives() != m) throw ProfileError("ballots over different alternative sets");
    if (S[i].size() != n) {
      throw ProfileError("proxy choice order of voter " + std::to_string(i) +
                         " does not rank every voter");
    }
    if (D[i].size() != m) {
      throw ProfileError("default vote of voter " + std::to_string(i) + " is not complete");
    }
    if (!extends(D[i], P[i])) {
      throw ProfileError("default vote of voter " + std::to_string(i) +
                         " does not extend the ballot");
    }
  }
}

ProxyVoteProfile ProxyVoteProfile::classical(std::span<const LinearOrder> ballots) {
  ProxyVoteProfile pvp;
  const int n = static_cast<int>(ballots.size());
  const LinearOrder identity = LinearOrder::identity(n);
  for (const LinearOrder& b : ballots) {
    pvp.P.push_back(b.to_partial_order());
    pvp.S.push_back(identity);
    pvp.D.push_back(b);
  }
  return pvp;
}

void build_delegation_graph(const MechanismSpec& g, const ProxyVoteProfile& pvp,
                            DelegationGraph& out) {
  const int n = pvp.voters();
  out.out.resize(n);
  for (Voter i = 0; i < n; ++i) {
    PermittedSet permitted = permitted_proxies(g, pvp.P, i);
    Voter target = i;
    if (!permitted.empty() && permitted != VoterSet::single(i)) {
      for (int rank = 0; rank < n; ++rank) {
        Voter j = pvp.S[i][rank];
        if (permitted.contains(j)) {
          target = j;
          break;
        }
      }
    }
    out.out[i] = target;
  }
}

DelegationGraph build_delegation_graph(const MechanismSpec& g, const ProxyVoteProfile& pvp) {
  DelegationGraph r;
  build_delegation_graph(g, pvp, r);
  return r;
}

void resolve_gurus(const DelegationGraph& r, const ProxyVoteProfile& pvp, GuruAssignment& out) {
  const int n = static_cast<int>(r.out.size());
  out.guru.assign(n, -1);
  out.cast.resize(n);
  out.cycle_members = VoterSet();

  // Phase 1: colour walks through the successor pointers. Entries of `guru`
  // double as walk stamps here: -1 unvisited, -(2 + start) on the active walk,
  // n for finished.
  for (Voter start = 0; start < n; ++start) {
    if (out.guru[start] != -1) continue;
    const int stamp = -(2 + start);
    Voter v = start;
    while (out.guru[v] == -1) {
      out.guru[v] = stamp;
      v = r.out[v];
    }
    if (out.guru[v] == stamp && r.out[v] != v) {
      Voter c = v;
      do {
        out.cycle_members.insert(c);
        c = r.out[c];
      } while (c != v);
    }
    for (Voter w = start; out.guru[w] == stamp; w = r.out[w]) out.guru[w] = n;
  }

  // Phase 2: every chain now ends in a voter who casts; cycle members act as
  // self-loops.
  auto casts = [&](Voter v) { return r.out[v] == v || out.cycle_members.contains(v); };
  out.guru.assign(n, -1);
  for (Voter start = 0; start < n; ++start) {
    Voter v = start;
    while (out.guru[v] == -1 && !casts(v)) v = r.out[v];
    Voter guru = out.guru[v] != -1 ? out.guru[v] : v;
    for (Voter w = start; out.guru[w] == -1; w = r.out[w]) {
      out.guru[w] = guru;
      if (w == v) break;
    }
  }
  // A linear ballot equals its only extension, so every casting voter submits
  // D_p: her ballot if linear, her default otherwise.
  for (Voter i = 0; i < n; ++i) out.cast[i] = pvp.D[out.guru[i]];
}

GuruAssignment resolve_gurus(const DelegationGraph& r, const ProxyVoteProfile& pvp) {
  GuruAssignment a;
  resolve_gurus(r, pvp, a);
  return a;
}

void rename_voters(std::span<const int> psi, const ProxyVoteProfile& pvp, ProxyVoteProfile& out) {
  const int n = pvp.voters();
  out.P.resize(n);
  out.S.resize(n);
  out.D.resize(n);
  for (Voter k = 0; k < n; ++k) {
    out.P[psi[k]] = pvp.P[k];
    out.D[psi[k]] = pvp.D[k];
    out.S[psi[k]] = rename_items(psi, pvp.S[k]);
  }
}

ProxyVoteProfile rename_voters(std::span<const int> psi, const ProxyVoteProfile& pvp) {
  ProxyVoteProfile out;
  rename_voters(psi, pvp, out);
  return out;
}

void rename_alternatives(std::span<const int> psi, const ProxyVoteProfile& pvp,
                         ProxyVoteProfile& out) {
  const int n = pvp.voters();
  out.P.resize(n);
  out.D.resize(n);
  out.S = pvp.S;
  for (Voter k = 0; k < n; ++k) {
    out.P[k] = apply_alt_bijection(psi, pvp.P[k]);
    out.D[k] = apply_alt_bijection(psi, pvp.D[k]);
  }
}

ProxyVoteProfile rename_alternatives(std::span<const int> psi, const ProxyVoteProfile& pvp) {
  ProxyVoteProfile out;
  rename_alternatives(psi, pvp, out);
  return out;
}

BallotChange replace_ballot(const ProxyVoteProfile& pvp, Voter i, const PartialOrder& ballot) {
  BallotChange change{pvp, false};
  change.profile.P[i] = ballot;
  if (!extends(pvp.D[i], ballot)) {
    change.profile.D[i] = guided_extension(ballot, pvp.D[i]);
    change.default_repaired = true;
  }
  return change;
}

ProxyOutcome run_proxy_vote(const Rule& f, const MechanismSpec& g, const ProxyVoteProfile& pvp) {
  pvp.validate();
  g.validate(pvp.voters());
  ProxyOutcome outcome;
  outcome.graph = build_delegation_graph(g, pvp);
  outcome.gurus = resolve_gurus(outcome.graph, pvp);
  outcome.winner = f(outcome.gurus.cast);
  return outcome;
}

const GuruAssignment& ElectionEvaluator::gurus(const ProxyVoteProfile& pvp) {
  build_delegation_graph(*g_, pvp, graph_);
  resolve_gurus(graph_, pvp, gurus_);
  return gurus_;
}

Alternative ElectionEvaluator::winner(const ProxyVoteProfile& pvp) {
  return (*f_)(gurus(pvp).cast);
}

}  // namespace proxyvote
