#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proxyvote/orders.hpp"

namespace proxyvote {

inline constexpr int kMaxVoters = 64;

class VoterSet {
 public:
  VoterSet() = default;
  static VoterSet from_bits(std::uint64_t bits) {
    VoterSet s;
    s.bits_ = bits;
    return s;
  }
  // {0, ..., n-1}
  static VoterSet all(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VoterSet single(Voter v) { return from_bits(std::uint64_t{1} << v); }

  bool contains(Voter v) const { return (bits_ >> v & 1) != 0; }
  void insert(Voter v) { bits_ |= std::uint64_t{1} << v; }
  void erase(Voter v) { bits_ &= ~(std::uint64_t{1} << v); }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  std::uint64_t bits() const { return bits_; }
  std::vector<Voter> members() const;

  VoterSet operator&(VoterSet o) const { return from_bits(bits_ & o.bits_); }
  VoterSet operator|(VoterSet o) const { return from_bits(bits_ | o.bits_); }
  friend bool operator==(const VoterSet&, const VoterSet&) = default;

 private:
  std::uint64_t bits_ = 0;
};

using PermittedSet = VoterSet;

enum class MechanismKind {
  Triv,
  Univ,
  Subset,
  Dictator,
  // Linear strict supersets only; the PM counterexample.
  SubsetLinearStrict,
  // SUBSET when every linear voter extends P_i, else nobody; the IIP counterexample.
  SubsetIfAllLinearAgree,
  Custom,
};

std::string_view to_string(MechanismKind kind);
// Accepts the upper-case names, case-insensitively.
MechanismKind parse_mechanism_kind(std::string_view name);

class MechanismError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Symmetric, irreflexive adjacency over voters.
class Network {
 public:
  Network() = default;
  Network(int n, std::span<const std::pair<Voter, Voter>> edges);

  VoterSet neighbours(Voter v) const { return adjacency_[v]; }
  const std::vector<std::pair<Voter, Voter>>& edges() const { return edges_; }
  int voters() const { return static_cast<int>(adjacency_.size()); }

 private:
  std::vector<VoterSet> adjacency_;
  std::vector<std::pair<Voter, Voter>> edges_;
};

// Rule for the strictly partial, non-empty case of a custom mechanism.
using CustomMechanism =
    std::function<VoterSet(std::span<const PartialOrder> profile, Voter i)>;

struct MechanismSpec {
  MechanismKind kind = MechanismKind::Subset;
  // DICTATOR: j_i per voter; empty means j_i = (i + 1) mod n.
  std::vector<Voter> dictator_map;
  std::optional<Network> network;
  CustomMechanism custom;
  std::string custom_name;

  static MechanismSpec of(MechanismKind kind) {
    MechanismSpec g;
    g.kind = kind;
    return g;
  }
  std::string name() const;
  // Throws MechanismError for a malformed dictator map or network.
  void validate(int n) const;
};

// The definitional clauses hold for every kind: an empty ballot may delegate to
// anyone else, a linear ballot only to itself, any other ballot never to itself.
PermittedSet permitted_proxies(const MechanismSpec& g, std::span<const PartialOrder> profile,
                               Voter i);

// True iff every listed mechanism yields the same permitted set on every
// profile over m alternatives and every voter.
bool m2_unique_mechanism_check(std::span<const MechanismSpec> mechanisms, int n, int m = 2);

}  // namespace proxyvote
