#include "proxyvote/enumeration.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace proxyvote {

std::vector<BallotChoice> ballot_choices(int m) {
  std::vector<BallotChoice> out;
  for (const PartialOrder& p : enumerate_partial_orders(m)) {
    for (const LinearOrder& d : linear_extensions(p)) out.push_back({p, d});
  }
  return out;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

namespace {

// Labelled partial orders on m points, and those contained in one fixed linear
// order; the latter times m! counts (ballot, default) pairs.
constexpr std::array<double, 9> kPartialOrders{1, 1, 3, 19, 219, 4231, 130023, 6129859,
                                               431723379};
constexpr std::array<double, 9> kNaturalPartialOrders{1, 1, 2, 7, 40, 357, 4824, 96428, 2800472};

}  // namespace

double partial_order_count(int m) { return kPartialOrders.at(m); }

double ballot_choice_count(int m) {
  return kNaturalPartialOrders.at(m) * static_cast<double>(factorial(m));
}

double power(double base, int exponent) {
  double r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

namespace {

void require_voters(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumeration needs 1 <= n <= 8 voters");
}

}  // namespace

ProxyProfileSpace::ProxyProfileSpace(int n, int m)
    : n_(n), m_(m), choices_(ballot_choices(m)), voter_orders_() {
  require_voters(n);
  voter_orders_ = enumerate_linear_orders(n);
}

double ProxyProfileSpace::size() const {
  return power(static_cast<double>(choices_.size()), n_) *
         power(static_cast<double>(voter_orders_.size()), n_);
}

ProxyVoteProfile ProxyProfileSpace::blank() const {
  ProxyVoteProfile pvp;
  pvp.P.assign(n_, choices_.front().ballot);
  pvp.D.assign(n_, choices_.front().default_vote);
  pvp.S.assign(n_, voter_orders_.front());
  return pvp;
}

LinearProfileSpace::LinearProfileSpace(int n, int m)
    : n_(n), m_(m), orders_(enumerate_linear_orders(m)) {
  if (n < 1) throw std::invalid_argument("enumeration needs at least one voter");
}

PartialProfileSpace::PartialProfileSpace(int n, int m)
    : n_(n), m_(m), orders_(enumerate_partial_orders(m)) {
  require_voters(n);
}

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace proxyvote
