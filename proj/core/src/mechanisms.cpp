#include "proxyvote/mechanisms.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace proxyvote {

std::vector<Voter> VoterSet::members() const {
  std::vector<Voter> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

namespace {

constexpr std::array<std::pair<MechanismKind, std::string_view>, 7> kNames{{
    {MechanismKind::Triv, "TRIV"},
    {MechanismKind::Univ, "UNIV"},
    {MechanismKind::Subset, "SUBSET"},
    {MechanismKind::Dictator, "DICTATOR"},
    {MechanismKind::SubsetLinearStrict, "SUBSET_LINEAR_STRICT"},
    {MechanismKind::SubsetIfAllLinearAgree, "SUBSET_IF_ALL_LINEAR_AGREE"},
    {MechanismKind::Custom, "CUSTOM"},
}};

VoterSet others(int n, Voter i) {
  VoterSet s = VoterSet::all(n);
  s.erase(i);
  return s;
}

}  // namespace

std::string_view to_string(MechanismKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

MechanismKind parse_mechanism_kind(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  std::replace(upper.begin(), upper.end(), '-', '_');
  for (const auto& [k, n] : kNames) {
    if (n == upper) return k;
  }
  throw MechanismError("unknown mechanism kind: " + std::string(name));
}

Network::Network(int n, std::span<const std::pair<Voter, Voter>> edges)
    : adjacency_(n), edges_(edges.begin(), edges.end()) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw MechanismError("network edge outside voter range");
    }
    if (u == v) throw MechanismError("network must be irreflexive");
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
  }
}

std::string MechanismSpec::name() const {
  std::string base = kind == MechanismKind::Custom && !custom_name.empty()
                         ? custom_name
                         : std::string(to_string(kind));
  return network ? base + "+network" : base;
}

void MechanismSpec::validate(int n) const {
  if (n < 1 || n > kMaxVoters) throw MechanismError("voter count must be in [1, 64]");
  if (kind == MechanismKind::Dictator && !dictator_map.empty()) {
    if (static_cast<int>(dictator_map.size()) != n) {
      throw MechanismError("dictator_map must assign one dictator per voter");
    }
    for (int i = 0; i < n; ++i) {
      int j = dictator_map[i];
      if (j < 0 || j >= n || j == i) {
        throw MechanismError("dictator_map entries must be other voters");
      }
    }
  }
  if (kind == MechanismKind::Dictator && dictator_map.empty() && n < 2) {
    throw MechanismError("DICTATOR needs at least two voters");
  }
  if (kind == MechanismKind::Custom && !custom) {
    throw MechanismError("custom mechanism without a rule");
  }
  if (network && network->voters() != n) {
    throw MechanismError("network size does not match voter count");
  }
}

PermittedSet permitted_proxies(const MechanismSpec& g, std::span<const PartialOrder> profile,
                               Voter i) {
  int n = static_cast<int>(profile.size());
  const PartialOrder& mine = profile[i];
  if (mine.empty()) return others(n, i);
  if (mine.is_linear()) return VoterSet::single(i);

  const std::uint64_t own = mine.bits();
  VoterSet result;
  switch (g.kind) {
    case MechanismKind::Triv:
      break;
    case MechanismKind::Univ:
      result = others(n, i);
      break;
    case MechanismKind::Subset:
      for (Voter j = 0; j < n; ++j) {
        if (j != i && (own & ~profile[j].bits()) == 0) result.insert(j);
      }
      break;
    case MechanismKind::Dictator: {
      if (!g.dictator_map.empty()) {
        result = VoterSet::single(g.dictator_map.at(i));
      } else {
        if (n < 2) throw MechanismError("DICTATOR needs at least two voters");
        result = VoterSet::single((i + 1) % n);
      }
      break;
    }
    case MechanismKind::SubsetLinearStrict:
      for (Voter j = 0; j < n; ++j) {
        const PartialOrder& p = profile[j];
        if (p.is_linear() && (own & ~p.bits()) == 0 && own != p.bits()) result.insert(j);
      }
      break;
    case MechanismKind::SubsetIfAllLinearAgree: {
      bool all_agree = true;
      for (Voter j = 0; j < n && all_agree; ++j) {
        if (j != i && profile[j].is_linear() && (own & ~profile[j].bits()) != 0) {
          all_agree = false;
        }
      }
      if (all_agree) {
        for (Voter j = 0; j < n; ++j) {
          if (j != i && (own & ~profile[j].bits()) == 0) result.insert(j);
        }
      }
      break;
    }
    case MechanismKind::Custom:
      if (!g.custom) throw MechanismError("custom mechanism without a rule");
      result = g.custom(profile, i);
      result.erase(i);
      break;
  }
  if (g.network) result = result & g.network->neighbours(i);
  return result;
}

bool m2_unique_mechanism_check(std::span<const MechanismSpec> mechanisms, int n, int m) {
  if (mechanisms.size() < 2) return true;
  const std::vector<PartialOrder> orders = enumerate_partial_orders(m);
  std::vector<std::size_t> digits(n, 0);
  std::vector<PartialOrder> profile(n, orders.front());
  while (true) {
    for (int v = 0; v < n; ++v) profile[v] = orders[digits[v]];
    for (Voter i = 0; i < n; ++i) {
      PermittedSet first = permitted_proxies(mechanisms.front(), profile, i);
      for (std::size_t k = 1; k < mechanisms.size(); ++k) {
        if (permitted_proxies(mechanisms[k], profile, i) != first) return false;
      }
    }
    int v = n - 1;
    while (v >= 0 && ++digits[v] == orders.size()) digits[v--] = 0;
    if (v < 0) break;
  }
  return true;
}

}  // namespace proxyvote
