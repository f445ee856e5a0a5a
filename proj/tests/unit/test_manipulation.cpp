#include <gtest/gtest.h>

#include <proxyvote/manipulation.hpp>

#include "fixtures.hpp"

using namespace proxyvote;
using fixtures::lin;

namespace {

constexpr int a = 0, b = 1, c = 2;
const MechanismSpec kSubset = MechanismSpec::of(MechanismKind::Subset);

Rule median_rule(std::vector<Alternative> phantoms) {
  return Rule(RuleSpec::of(MedianRule{Axis{a, c, b}, std::move(phantoms)}));
}

void expect_gain(const ManipulationInstance& x) {
  EXPECT_TRUE(x.sincere.prefers(x.winner_deviant, x.winner_truthful));
}

}  // namespace

TEST(FindGs, BordaIsManipulable) {
  const Rule borda = borda_rule(3, lin("abc"));
  const auto x = find_gs(borda, 3, 3);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->kind, ManipulationKind::GS);
  expect_gain(*x);
  EXPECT_TRUE(verify_instance(*x, borda, nullptr).reproduced);
  EXPECT_EQ(x->deviant_ballots.size(), 3u);
  for (int v = 0; v < 3; ++v) {
    if (v != x->manipulator) EXPECT_EQ(x->deviant_ballots[v], x->ballots[v]);
  }
}

TEST(FindGs, DictatorshipAndMedianAreStrategyproof) {
  EXPECT_FALSE(find_gs(Rule(RuleSpec::dictatorship(0)), 3, 3).has_value());
  FindOptions sp;
  sp.single_peaked = Axis{a, c, b};
  EXPECT_FALSE(find_gs(median_rule({a, c}), 3, 3, sp).has_value());
  EXPECT_FALSE(find_gs(median_rule({a}), 2, 3, sp).has_value());
}

TEST(FindIia, KeepsTheRelativeOrder) {
  const Rule borda = borda_rule(3, lin("abc"));
  const auto x = find_iia(borda, 2, 3);
  ASSERT_TRUE(x.has_value());
  expect_gain(*x);
  const LinearOrder& dev = x->deviant_ballots[x->manipulator];
  EXPECT_TRUE(dev.prefers(x->winner_deviant, x->winner_truthful));
  EXPECT_TRUE(verify_instance(*x, borda, nullptr).reproduced);
  EXPECT_THROW(find_iia(majority_rule(), 3, 2), ManipulationError);
}

TEST(FindPc, NoneWithTwoVoters) {
  EXPECT_FALSE(find_pc(borda_rule(3, lin("abc")), kSubset, 2, 3).has_value());
  EXPECT_FALSE(find_pc(plurality_rule(3, lin("abc")), kSubset, 2, 3).has_value());
}

TEST(FindPm, FindsAndVerifies) {
  const Rule borda = borda_rule(3, lin("abc"));
  const auto x = find_pm(borda, kSubset, 2, 3);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->kind, ManipulationKind::PM);
  expect_gain(*x);
  EXPECT_TRUE(verify_instance(*x, borda, &kSubset).reproduced);
  EXPECT_THROW(find_pm(borda, kSubset, 4, 3), BoundsError);
}

TEST(FindPm, MedianOnSinglePeakedDomain) {
  FindOptions sp;
  sp.single_peaked = Axis{a, c, b};
  const Rule median = median_rule({a});
  const auto x = find_pm(median, kSubset, 2, 3, sp);
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(verify_instance(*x, median, &kSubset).reproduced);
  const Axis axis{a, c, b};
  for (const auto* pvp : {&x->truthful, &x->deviant}) {
    const auto out = run_proxy_vote(median, kSubset, *pvp);
    EXPECT_TRUE(is_single_peaked(out.gurus.cast, axis));
  }
}

TEST(CountManipulations, AgreesWithFinders) {
  const Rule borda = borda_rule(3, lin("abc"));
  EXPECT_GT(count_manipulations(ManipulationKind::GS, borda, nullptr, 2, 3), 0u);
  EXPECT_EQ(count_manipulations(ManipulationKind::GS, Rule(RuleSpec::dictatorship(0)), nullptr, 3, 3), 0u);
  EXPECT_EQ(count_manipulations(ManipulationKind::PC, borda, &kSubset, 2, 3), 0u);
  const auto iia = count_manipulations(ManipulationKind::IIA, borda, nullptr, 2, 3);
  const auto gs = count_manipulations(ManipulationKind::GS, borda, nullptr, 2, 3);
  EXPECT_LE(iia, gs);
  const auto one = count_manipulations(ManipulationKind::PM, borda, &kSubset, 2, 3, {.workers = 1});
  const auto four = count_manipulations(ManipulationKind::PM, borda, &kSubset, 2, 3, {.workers = 4});
  EXPECT_EQ(one, four);
  EXPECT_GT(one, 0u);
}

TEST(LiftGs, BecomesAnAllLinearPmInstance) {
  const Rule borda = borda_rule(3, lin("abc"));
  const auto gs = find_gs(borda, 3, 3);
  ASSERT_TRUE(gs.has_value());
  const ManipulationInstance pm = lift_gs_to_pm(*gs, borda, kSubset);
  EXPECT_EQ(pm.kind, ManipulationKind::PM);
  EXPECT_EQ(pm.winner_truthful, gs->winner_truthful);
  EXPECT_EQ(pm.winner_deviant, gs->winner_deviant);
  for (const PartialOrder& p : pm.truthful.P) EXPECT_TRUE(p.is_linear());
  EXPECT_TRUE(verify_instance(pm, borda, &kSubset).reproduced);
}

TEST(AdditionCounterexample, EvenBordaScores) {
  const auto x = construct_addition_counterexample(14, ScoringRule::borda(3, lin("abc")));
  EXPECT_TRUE(x.verified());
  EXPECT_EQ(x.winner_before, a);
  EXPECT_EQ(x.winner_after, c);
  EXPECT_EQ(x.scores_before, (std::vector<std::int64_t>{17, 8, 17}));
  EXPECT_EQ(x.scores_after[c], 19);
  EXPECT_EQ(x.scores_after[a], 17);
  EXPECT_EQ(x.edge.above, a);
  EXPECT_EQ(x.edge.below, b);
  EXPECT_TRUE(x.before.P[x.voter].empty());
  EXPECT_EQ(x.after.P[x.voter], fixtures::po({"ab"}, 3));
  EXPECT_EQ(static_cast<int>(x.before.voters()), 14);
  EXPECT_TRUE(pvam_violation(Rule(RuleSpec::of(ScoringRule::borda(3, lin("abc")))), kSubset, x.before));
}

TEST(AdditionCounterexample, EveryBranchVerifies) {
  struct Case {
    int n;
    std::vector<std::int64_t> weights;
    const char* tiebreak;
  };
  const std::vector<Case> cases{{14, {2, 1, 0}, "abc"}, {15, {2, 1, 0}, "abc"}, {15, {1, 0, 0}, "abc"},
                                {15, {2, 1, 0}, "cab"}, {16, {2, 1, 0}, "cab"}, {17, {5, 2, 0}, "bca"},
                                {16, {1, 1, 0}, "cab"}, {18, {3, 3, 1}, "acb"}};
  for (const Case& k : cases) {
    ScoringRule rule;
    rule.weights = k.weights;
    rule.tiebreak = lin(k.tiebreak);
    const auto x = construct_addition_counterexample(k.n, rule);
    EXPECT_TRUE(x.verified()) << k.n << " " << k.tiebreak << " " << x.branch;
    EXPECT_FALSE(x.branch.empty());
    EXPECT_EQ(x.before.voters(), k.n);
    const Rule f{RuleSpec::of(rule)};
    EXPECT_EQ(run_proxy_vote(f, kSubset, x.before).winner, a);
    EXPECT_EQ(run_proxy_vote(f, kSubset, x.after).winner, c);
    const json j = x.to_json();
    EXPECT_TRUE(replay_witness(j, &f, &kSubset).reproduced);
  }
  EXPECT_THROW(construct_addition_counterexample(13, ScoringRule::borda(3, lin("abc"))), ManipulationError);
  EXPECT_THROW(construct_addition_counterexample(14, ScoringRule::borda(4, lin("abcd"))), ManipulationError);
}

TEST(ProxyChoiceConstruction, FromAnIiaInstance) {
  const Rule borda = borda_rule(3, lin("abc"));
  const auto iia = find_iia(borda, 3, 3);
  ASSERT_TRUE(iia.has_value());
  const ManipulationInstance pc = construct_proxy_choice_manipulation(borda, *iia);
  EXPECT_EQ(pc.kind, ManipulationKind::PC);
  EXPECT_EQ(pc.truthful.voters(), 9);
  EXPECT_EQ(pc.winner_truthful, iia->winner_truthful);
  EXPECT_EQ(pc.winner_deviant, iia->winner_deviant);
  EXPECT_TRUE(pc.sincere.prefers(iia->winner_deviant, iia->winner_truthful));
  EXPECT_EQ(pc.sincere.size(), 1u);
  EXPECT_EQ(pc.truthful.P, pc.deviant.P);
  EXPECT_NE(pc.truthful.S[pc.manipulator], pc.deviant.S[pc.manipulator]);
  EXPECT_TRUE(verify_instance(pc, borda, &kSubset).reproduced);
  EXPECT_TRUE(replay_witness(pc.to_json(&kSubset), &borda, &kSubset).reproduced);
}

TEST(ProxyChoiceConstruction, RejectsNonInstances) {
  const Rule borda = borda_rule(3, lin("abc"));
  auto iia = find_iia(borda, 2, 3);
  ASSERT_TRUE(iia.has_value());
  ManipulationInstance identity = *iia;
  identity.deviant_ballots = identity.ballots;
  EXPECT_THROW(construct_proxy_choice_manipulation(borda, identity), ManipulationError);
  const Rule last(RuleSpec::dictatorship(-1));
  EXPECT_THROW(construct_proxy_choice_manipulation(last, *iia), ManipulationError);
}

TEST(SinglePeakedConstruction, MedianWithPhantomAtA) {
  const MedianRule rule{Axis{a, c, b}, {a, c}};
  const ManipulationInstance x = construct_single_peaked_manipulation(3, rule);
  EXPECT_EQ(x.kind, ManipulationKind::PM);
  EXPECT_EQ(x.winner_truthful, a);
  EXPECT_EQ(x.winner_deviant, c);
  EXPECT_EQ(x.sincere, lin("bca").to_partial_order());
  EXPECT_TRUE(x.sincere.prefers(c, a));
  EXPECT_EQ(x.deviant.P[x.manipulator], lin("cab").to_partial_order());
  const Rule f{RuleSpec::of(rule)};
  const auto before = run_proxy_vote(f, kSubset, x.truthful);
  EXPECT_EQ(before.gurus.cycle_members.size(), 2);
  for (Voter v : before.gurus.cycle_members.members()) EXPECT_EQ(before.gurus.cast[v], lin("acb"));
  EXPECT_TRUE(is_single_peaked(before.gurus.cast, rule.axis));
  EXPECT_TRUE(verify_instance(x, f, &kSubset).reproduced);
}

TEST(SinglePeakedConstruction, AcceptedByTheSinglePeakedFinderAtTwoVoters) {
  const MedianRule rule{Axis{a, c, b}, {a}};
  const ManipulationInstance x = construct_single_peaked_manipulation(2, rule);
  FindOptions sp;
  sp.single_peaked = rule.axis;
  const Rule f{RuleSpec::of(rule)};
  EXPECT_GT(count_manipulations(ManipulationKind::PM, f, &kSubset, 2, 3, sp), 0u);
  EXPECT_TRUE(verify_instance(x, f, &kSubset).reproduced);
}

TEST(SinglePeakedConstruction, Preconditions) {
  EXPECT_THROW(construct_single_peaked_manipulation(1, MedianRule{Axis{a, c, b}, {}}), ManipulationError);
  EXPECT_THROW(construct_single_peaked_manipulation(3, MedianRule{Axis{a, b, c}, {a, a}}), ManipulationError);
  EXPECT_THROW(construct_single_peaked_manipulation(3, MedianRule{Axis{a, c, b}, {c, b}}), ManipulationError);
  EXPECT_THROW(construct_single_peaked_manipulation(3, MedianRule{Axis{a, c, b}, {a}}), ManipulationError);
}

TEST(Instances, JsonCarriesEvaluations) {
  const Rule borda = borda_rule(3, lin("abc"));
  const auto gs = find_gs(borda, 2, 3);
  ASSERT_TRUE(gs.has_value());
  const json j = gs->to_json();
  EXPECT_EQ(j.at("kind"), "gs");
  EXPECT_TRUE(replay_witness(j, &borda, nullptr).reproduced);
  const auto pm = find_pm(borda, kSubset, 2, 3);
  ASSERT_TRUE(pm.has_value());
  EXPECT_THROW(pm->to_json(), ManipulationError);
  EXPECT_EQ(parse_manipulation_kind(to_string(ManipulationKind::PC)), ManipulationKind::PC);
}
