#pragma once

#include <cstdint>
#include <vector>

#include "proxyvote/election.hpp"
#include "proxyvote/orders.hpp"

namespace proxyvote {

// A partial ballot together with one of its linear extensions as default.
struct BallotChoice {
  PartialOrder ballot;
  LinearOrder default_vote;
};

// Every (P_i, D_i) pair over m alternatives: partial orders in enumeration
// order, extensions lexicographic within each.
std::vector<BallotChoice> ballot_choices(int m);

std::uint64_t factorial(int k);
// |P(A)| and the number of (ballot, default) pairs for m alternatives, m <= 8,
// without enumerating them.
double partial_order_count(int m);
double ballot_choice_count(int m);
// Saturating product for cost estimates.
double power(double base, int exponent);

// Mixed-radix counter, last digit fastest.
class Odometer {
 public:
  explicit Odometer(std::vector<std::size_t> radix)
      : radix_(std::move(radix)), digits_(radix_.size(), 0) {}

  const std::vector<std::size_t>& digits() const { return digits_; }
  std::size_t operator[](std::size_t k) const { return digits_[k]; }
  // Returns the lowest position that changed, or size() when exhausted.
  std::size_t next() {
    std::size_t k = digits_.size();
    while (k > 0) {
      --k;
      if (++digits_[k] < radix_[k]) return k;
      digits_[k] = 0;
    }
    return digits_.size();
  }
  bool exhausted(std::size_t changed) const { return changed == digits_.size(); }

 private:
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> digits_;
};

// The full quantification space of proxy vote profiles (P, S, D) for n voters
// over m alternatives, D restricted to extensions of P. Order: ballot choices
// of voters 0..n-1, then proxy choice orders of voters 0..n-1, voter 0's ballot
// choice most significant. Chunks are voter 0's ballot choices.
class ProxyProfileSpace {
 public:
  ProxyProfileSpace(int n, int m);

  int voters() const { return n_; }
  int alternatives() const { return m_; }
  const std::vector<BallotChoice>& choices() const { return choices_; }
  const std::vector<LinearOrder>& voter_orders() const { return voter_orders_; }
  std::size_t chunks() const { return choices_.size(); }
  double size() const;

  // Calls fn(pvp) for each profile of the chunk in order until fn returns true.
  // Returns whether fn stopped the walk.
  template <class Fn>
  bool walk_chunk(std::size_t chunk, Fn&& fn) const {
    ProxyVoteProfile pvp = blank();
    std::vector<std::size_t> radix;
    for (int v = 1; v < n_; ++v) radix.push_back(choices_.size());
    for (int v = 0; v < n_; ++v) radix.push_back(voter_orders_.size());
    Odometer odo(radix);
    set_choice(pvp, 0, chunk);
    std::size_t changed = 0;
    while (true) {
      for (std::size_t k = changed; k < radix.size(); ++k) {
        if (k + 1 < static_cast<std::size_t>(n_)) {
          set_choice(pvp, static_cast<int>(k) + 1, odo[k]);
        } else {
          pvp.S[k + 1 - n_] = voter_orders_[odo[k]];
        }
      }
      if (fn(static_cast<const ProxyVoteProfile&>(pvp))) return true;
      changed = odo.next();
      if (odo.exhausted(changed)) return false;
    }
  }

  ProxyVoteProfile blank() const;

 private:
  void set_choice(ProxyVoteProfile& pvp, int voter, std::size_t choice) const {
    pvp.P[voter] = choices_[choice].ballot;
    pvp.D[voter] = choices_[choice].default_vote;
  }

  int n_;
  int m_;
  std::vector<BallotChoice> choices_;
  std::vector<LinearOrder> voter_orders_;
};

// All linear profiles (m!)^n, voter 0 most significant; chunks are voter 0's ballot.
class LinearProfileSpace {
 public:
  LinearProfileSpace(int n, int m);

  int voters() const { return n_; }
  int alternatives() const { return m_; }
  const std::vector<LinearOrder>& orders() const { return orders_; }
  std::size_t chunks() const { return orders_.size(); }
  double size() const { return power(static_cast<double>(orders_.size()), n_); }

  template <class Fn>
  bool walk_chunk(std::size_t chunk, Fn&& fn) const {
    std::vector<LinearOrder> profile(n_, orders_[chunk]);
    Odometer odo(std::vector<std::size_t>(n_ - 1, orders_.size()));
    std::size_t changed = 0;
    while (true) {
      for (std::size_t k = changed; k + 1 < static_cast<std::size_t>(n_); ++k) {
        profile[k + 1] = orders_[odo[k]];
      }
      if (fn(static_cast<const std::vector<LinearOrder>&>(profile))) return true;
      if (n_ == 1) return false;
      changed = odo.next();
      if (odo.exhausted(changed)) return false;
    }
  }

 private:
  int n_;
  int m_;
  std::vector<LinearOrder> orders_;
};

// All partial preference profiles (|P(A)|)^n; chunks are voter 0's ballot.
class PartialProfileSpace {
 public:
  PartialProfileSpace(int n, int m);

  int voters() const { return n_; }
  const std::vector<PartialOrder>& orders() const { return orders_; }
  std::size_t chunks() const { return orders_.size(); }
  double size() const { return power(static_cast<double>(orders_.size()), n_); }

  template <class Fn>
  bool walk_chunk(std::size_t chunk, Fn&& fn) const {
    std::vector<PartialOrder> profile(n_, orders_[chunk]);
    Odometer odo(std::vector<std::size_t>(n_ - 1, orders_.size()));
    std::size_t changed = 0;
    while (true) {
      for (std::size_t k = changed; k + 1 < static_cast<std::size_t>(n_); ++k) {
        profile[k + 1] = orders_[odo[k]];
      }
      if (fn(static_cast<const std::vector<PartialOrder>&>(profile))) return true;
      if (n_ == 1) return false;
      changed = odo.next();
      if (odo.exhausted(changed)) return false;
    }
  }

 private:
  int n_;
  int m_;
  std::vector<PartialOrder> orders_;
};

// Permutations of [0, k) in lexicographic order, identity first.
std::vector<std::vector<int>> all_permutations(int k);

}  // namespace proxyvote
