#pragma once

#include <string>
#include <utility>
#include <vector>

#include <proxyvote/election.hpp>
#include <proxyvote/mechanisms.hpp>
#include <proxyvote/orders.hpp>

#include "oracle.hpp"

namespace fixtures {

using namespace proxyvote;

// "bac" -> b > a > c
inline LinearOrder lin(const std::string& s) {
  std::vector<int> r;
  for (char c : s) r.push_back(c - 'a');
  return LinearOrder(r);
}

// {"ab", "ac"} -> {a > b, a > c}; must already be closed.
inline PartialOrder po(const std::vector<std::string>& edges, int m) {
  std::vector<Edge> e;
  for (const std::string& s : edges) e.push_back({s[0] - 'a', s[1] - 'a'});
  return make_partial_order(e, m);
}

inline std::vector<LinearOrder> ballots(const std::vector<std::string>& rankings) {
  std::vector<LinearOrder> out;
  for (const std::string& s : rankings) out.push_back(lin(s));
  return out;
}

inline oracle::Mech to_oracle(MechanismKind k) {
  switch (k) {
    case MechanismKind::Triv: return oracle::Mech::Triv;
    case MechanismKind::Univ: return oracle::Mech::Univ;
    case MechanismKind::Dictator: return oracle::Mech::Dictator;
    case MechanismKind::SubsetLinearStrict: return oracle::Mech::LinearStrict;
    case MechanismKind::SubsetIfAllLinearAgree: return oracle::Mech::AllLinearAgree;
    default: return oracle::Mech::Subset;
  }
}

inline const std::vector<MechanismKind>& builtin_kinds() {
  static const std::vector<MechanismKind> kinds{
      MechanismKind::Triv,     MechanismKind::Univ,
      MechanismKind::Subset,   MechanismKind::Dictator,
      MechanismKind::SubsetLinearStrict, MechanismKind::SubsetIfAllLinearAgree};
  return kinds;
}

struct OracleProfile {
  std::vector<oracle::Rel> P;
  std::vector<oracle::Ranking> S;
  std::vector<oracle::Ranking> D;
};

inline OracleProfile to_oracle(const ProxyVoteProfile& pvp) {
  OracleProfile o;
  for (int i = 0; i < pvp.voters(); ++i) {
    o.P.push_back(oracle::from(pvp.P[i]));
    o.S.push_back(oracle::ranking(pvp.S[i]));
    o.D.push_back(oracle::ranking(pvp.D[i]));
  }
  return o;
}

inline std::vector<oracle::Ranking> rankings(const std::vector<LinearOrder>& ls) {
  std::vector<oracle::Ranking> out;
  for (const LinearOrder& l : ls) out.push_back(oracle::ranking(l));
  return out;
}

// Everyone votes the given linear ballots and lists voters in identity order.
inline ProxyVoteProfile linear_profile(const std::vector<std::string>& rankings) {
  return ProxyVoteProfile::classical(ballots(rankings));
}

}  // namespace fixtures
