#include <set>

#include <gtest/gtest.h>

#include <proxyvote/enumeration.hpp>
#include <proxyvote/json_io.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace proxyvote;

TEST(Counts, PartialOrdersAndBallotChoices) {
  EXPECT_EQ(partial_order_count(1), 1);
  EXPECT_EQ(partial_order_count(2), 3);
  EXPECT_EQ(partial_order_count(3), 19);
  EXPECT_EQ(partial_order_count(4), 219);
  EXPECT_EQ(partial_order_count(5), 4231);
  EXPECT_EQ(ballot_choice_count(2), 4);
  EXPECT_EQ(ballot_choice_count(3), 42);
  EXPECT_EQ(factorial(5), 120u);
  EXPECT_EQ(power(2, 10), 1024);
}

TEST(Counts, BallotChoicesMatchOracle) {
  for (int m = 1; m <= 4; ++m) {
    std::size_t expected = 0;
    for (const oracle::Rel& p : oracle::partial_orders(m)) expected += oracle::extensions(p).size();
    const auto choices = ballot_choices(m);
    EXPECT_EQ(choices.size(), expected);
    EXPECT_EQ(static_cast<double>(choices.size()), ballot_choice_count(m));
    for (const BallotChoice& c : choices) EXPECT_TRUE(extends(c.default_vote, c.ballot));
  }
}

TEST(Odometer, CountsMixedRadix) {
  Odometer odo({2, 3});
  std::vector<std::vector<std::size_t>> seen{odo.digits()};
  while (!odo.exhausted(odo.next())) seen.push_back(odo.digits());
  ASSERT_EQ(seen.size(), 6u);
  EXPECT_EQ(seen[1], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(seen[3], (std::vector<std::size_t>{1, 0}));
}

TEST(ProxyProfileSpace, VisitsEveryProfileOnce) {
  const ProxyProfileSpace space(2, 2);
  EXPECT_EQ(space.size(), 4.0 * 4 * 2 * 2);
  std::set<std::string> seen;
  std::size_t total = 0;
  for (std::size_t chunk = 0; chunk < space.chunks(); ++chunk) {
    space.walk_chunk(chunk, [&](const ProxyVoteProfile& pvp) {
      EXPECT_NO_THROW(pvp.validate());
      EXPECT_EQ(pvp.P[0], space.choices()[chunk].ballot);
      seen.insert(to_json_value(pvp).dump());
      ++total;
      return false;
    });
  }
  EXPECT_EQ(total, 64u);
  EXPECT_EQ(seen.size(), 64u);
}

TEST(ProxyProfileSpace, StopsWhenAsked) {
  const ProxyProfileSpace space(3, 2);
  int visited = 0;
  EXPECT_TRUE(space.walk_chunk(0, [&](const ProxyVoteProfile&) { return ++visited == 10; }));
  EXPECT_EQ(visited, 10);
}

TEST(ProxyProfileSpace, LastVoterProxyOrderMovesFastest) {
  const ProxyProfileSpace space(2, 2);
  std::vector<ProxyVoteProfile> first;
  space.walk_chunk(0, [&](const ProxyVoteProfile& pvp) {
    first.push_back(pvp);
    return first.size() == 2;
  });
  EXPECT_EQ(first[0].S[1], space.voter_orders()[0]);
  EXPECT_EQ(first[1].S[1], space.voter_orders()[1]);
  EXPECT_EQ(first[0].S[0], first[1].S[0]);
}

TEST(LinearProfileSpace, Enumerates) {
  for (auto [n, m] : {std::pair{1, 3}, std::pair{3, 2}, std::pair{2, 3}}) {
    const LinearProfileSpace space(n, m);
    std::set<std::vector<std::vector<int>>> seen;
    for (std::size_t chunk = 0; chunk < space.chunks(); ++chunk) {
      space.walk_chunk(chunk, [&](const std::vector<LinearOrder>& profile) {
        seen.insert(fixtures::rankings(profile));
        return false;
      });
    }
    EXPECT_EQ(static_cast<double>(seen.size()), space.size());
  }
}

TEST(PartialProfileSpace, Enumerates) {
  const PartialProfileSpace space(2, 3);
  std::size_t total = 0;
  for (std::size_t chunk = 0; chunk < space.chunks(); ++chunk) {
    space.walk_chunk(chunk, [&](const std::vector<PartialOrder>&) {
      ++total;
      return false;
    });
  }
  EXPECT_EQ(total, 361u);
  EXPECT_EQ(space.size(), 361);
}

TEST(Permutations, LexicographicIdentityFirst) {
  const auto perms = all_permutations(3);
  ASSERT_EQ(perms.size(), 6u);
  EXPECT_EQ(perms.front(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(perms.back(), (std::vector<int>{2, 1, 0}));
  EXPECT_TRUE(std::is_sorted(perms.begin(), perms.end()));
}
