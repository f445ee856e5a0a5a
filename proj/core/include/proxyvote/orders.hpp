#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace proxyvote {

using Alternative = int;
using Voter = int;

// Partial orders are packed into a 64-bit relation matrix, so at most eight
// alternatives. Rankings (over alternatives or over voters) hold up to 64 items.
inline constexpr int kMaxAlternatives = 8;
inline constexpr int kMaxRankingSize = 64;

enum class OrderErrc {
  OutOfRange,
  Reflexive,
  NotClosed,
  Conflict,
  CycleDetected,
  NotPermutation,
  LimitExceeded,
};

class OrderError : public std::runtime_error {
 public:
  OrderError(OrderErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  OrderErrc code() const noexcept { return code_; }

 private:
  OrderErrc code_;
};

struct Edge {
  Alternative above = 0;
  Alternative below = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A plain set of edges over m alternatives. No closure or antisymmetry
// guarantees; used for Agree/Disagree results and raw edge input.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int m);
  EdgeSet(int m, std::span<const Edge> edges);

  static constexpr std::uint64_t bit(Alternative above, Alternative below) {
    return std::uint64_t{1} << (above * kMaxAlternatives + below);
  }
  static EdgeSet from_bits(int m, std::uint64_t bits) {
    EdgeSet s;
    s.m_ = m;
    s.bits_ = bits;
    return s;
  }

  int alternatives() const { return m_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(Alternative above, Alternative below) const {
    return (bits_ & bit(above, below)) != 0;
  }
  bool contains(Edge e) const { return contains(e.above, e.below); }
  void insert(Edge e);
  void erase(Edge e) { bits_ &= ~bit(e.above, e.below); }
  std::size_t size() const;
  bool empty() const { return bits_ == 0; }
  bool is_subset_of(const EdgeSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Sorted by (above, below).
  std::vector<Edge> edges() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  int m_ = 0;
  std::uint64_t bits_ = 0;
};

// Irreflexive, antisymmetric, transitively closed relation over m alternatives.
// Only make_partial_order, transitive_closure and the enumerators build these
// from edges; every instance satisfies the invariants.
class PartialOrder {
 public:
  PartialOrder() = default;
  explicit PartialOrder(int m);

  // Precondition: bits already encode a closed antisymmetric relation.
  static PartialOrder from_closed_bits(int m, std::uint64_t bits);

  int alternatives() const { return edges_.alternatives(); }
  const EdgeSet& edge_set() const { return edges_; }
  std::vector<Edge> edges() const { return edges_.edges(); }
  std::uint64_t bits() const { return edges_.bits(); }
  bool prefers(Alternative above, Alternative below) const {
    return edges_.contains(above, below);
  }
  bool contains(Edge e) const { return edges_.contains(e); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool is_linear() const;

  friend bool operator==(const PartialOrder&, const PartialOrder&) = default;

 private:
  EdgeSet edges_;
};

// Complete ranking, best first. Over alternatives for ballots and over voters
// for proxy choice orders.
class LinearOrder {
 public:
  LinearOrder() = default;
  // Throws OrderError(NotPermutation) unless ranking is a permutation of [0, k).
  explicit LinearOrder(std::span<const int> ranking);
  LinearOrder(std::initializer_list<int> ranking)
      : LinearOrder(std::span<const int>(ranking.begin(), ranking.size())) {}

  static LinearOrder identity(int size);

  int size() const { return size_; }
  int operator[](int position) const { return items_[position]; }
  int top() const { return items_[0]; }
  int position(int item) const;
  bool prefers(int x, int y) const { return position(x) < position(y); }
  std::vector<int> ranking() const;
  const std::uint8_t* begin() const { return items_.data(); }
  const std::uint8_t* end() const { return items_.data() + size_; }

  // Edge-set view; requires size() <= kMaxAlternatives.
  PartialOrder to_partial_order() const;
  std::uint64_t relation_bits() const;

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.size_ == b.size_ && a.items_ == b.items_;
  }

 private:
  std::array<std::uint8_t, kMaxRankingSize> items_{};
  std::uint8_t size_ = 0;
};

using PreferenceProfile = std::vector<PartialOrder>;

// Left-to-right layout of the alternatives for single-peakedness.
class Axis {
 public:
  Axis() = default;
  explicit Axis(std::span<const Alternative> order);
  Axis(std::initializer_list<Alternative> order)
      : Axis(std::span<const Alternative>(order.begin(), order.size())) {}

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<Alternative>& order() const { return order_; }
  int position(Alternative a) const { return position_[a]; }
  Alternative at(int position) const { return order_[position]; }

  friend bool operator==(const Axis& a, const Axis& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<Alternative> order_;
  std::array<int, kMaxAlternatives> position_{};
};

PartialOrder make_partial_order(std::span<const Edge> edges, int m);
PartialOrder transitive_closure(std::span<const Edge> edges, int m);

// All linear extensions in lexicographic order of their rankings.
std::vector<LinearOrder> linear_extensions(const PartialOrder& p);

// Extension of p that follows `guide` wherever p does not force otherwise:
// repeatedly emits the guide-highest alternative with no remaining p-predecessor.
// Returns guide itself whenever guide already extends p.
LinearOrder guided_extension(const PartialOrder& p, const LinearOrder& guide);

// p with one edge added or removed, when the result is still a partial order
// without further edges; nullopt otherwise (including when nothing changes).
std::optional<PartialOrder> with_edge(const PartialOrder& p, Edge e);
std::optional<PartialOrder> without_edge(const PartialOrder& p, Edge e);

bool is_subset(const PartialOrder& p, const PartialOrder& q);
bool extends(const LinearOrder& l, const PartialOrder& p);
EdgeSet agree(const PartialOrder& p, const PartialOrder& q);
EdgeSet disagree(const PartialOrder& p, const PartialOrder& q);

// psi[a] is the image of alternative a.
PartialOrder apply_alt_bijection(std::span<const int> psi, const PartialOrder& p);
LinearOrder apply_alt_bijection(std::span<const int> psi, const LinearOrder& l);
// Renames the items of a ranking; psi[x] is the image of item x.
LinearOrder rename_items(std::span<const int> psi, const LinearOrder& l);

// Entry i of the result is entry psi[i] of the input.
template <class T>
std::vector<T> permute_profile_voters(std::span<const int> psi,
                                      const std::vector<T>& profile) {
  std::vector<T> out;
  out.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) out.push_back(profile[psi[i]]);
  return out;
}

// Proxy choice profiles: entry i is S_{psi(i)} with its content renamed by psi.
std::vector<LinearOrder> permute_proxy_choices(std::span<const int> psi,
                                               const std::vector<LinearOrder>& s);

std::vector<PartialOrder> enumerate_partial_orders(int m);
std::vector<LinearOrder> enumerate_linear_orders(int m);
// Lexicographic rank of a permutation among all size()! rankings.
std::size_t linear_order_rank(const LinearOrder& l);

bool is_permutation(std::span<const int> items);
std::vector<int> inverse_permutation(std::span<const int> psi);

Alternative peak(const LinearOrder& l);
bool is_single_peaked(const LinearOrder& l, const Axis& axis);
bool is_single_peaked(std::span<const LinearOrder> profile, const Axis& axis);
// First axis in lexicographic order (an axis and its reverse count once) on
// which the profile is single-peaked.
std::optional<Axis> find_axis(std::span<const LinearOrder> profile);

std::string to_string(const PartialOrder& p);
std::string to_string(const LinearOrder& l);

}  // namespace proxyvote
