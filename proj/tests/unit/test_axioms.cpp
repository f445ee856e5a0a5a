#include <gtest/gtest.h>

#include <proxyvote/axioms.hpp>

#include "fixtures.hpp"

using namespace proxyvote;
using fixtures::lin;

namespace {

const MechanismSpec kSubset = MechanismSpec::of(MechanismKind::Subset);

void expect_replays(const CheckReport& r, const Rule* f, const MechanismSpec* g) {
  ASSERT_FALSE(r.passed) << r.property;
  ASSERT_TRUE(r.witness.has_value());
  const ReplayResult replay = replay_witness(*r.witness, f, g);
  EXPECT_TRUE(replay.reproduced) << replay.detail;
  EXPECT_GE(replay.evaluations, 1);
}

// Elects the bottom of the first ballot, so lifting the winner dethrones it.
Rule bottom_of_first() {
  return Rule("bottom-of-first", [](std::span<const LinearOrder> bs) {
    return bs.front()[bs.front().size() - 1];
  });
}

}  // namespace

TEST(RuleAxioms, Anonymity) {
  const Rule borda = borda_rule(3, lin("abc"));
  EXPECT_TRUE(check_f_anonymity(borda, 3, 3).passed);
  const Rule dictator(RuleSpec::dictatorship(0));
  const CheckReport r = check_f_anonymity(dictator, 2, 3);
  expect_replays(r, &dictator, nullptr);
  EXPECT_EQ(r.witness->at("evaluations").size(), 2u);
}

TEST(RuleAxioms, NeutralityFailsOnATie) {
  const Rule borda = borda_rule(3, lin("abc"));
  const CheckReport r = check_f_neutrality(borda, 2, 3);
  expect_replays(r, &borda, nullptr);
  EXPECT_EQ(r.witness->at("evaluations").size(), 2u);
}

TEST(RuleAxioms, WeakMonotonicity) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(check_f_weak_monotonicity(borda_rule(3, lin("abc")), n, 3).passed);
    EXPECT_TRUE(check_f_weak_monotonicity(plurality_rule(3, lin("bca")), n, 3).passed);
  }
  const Rule flip = bottom_of_first();
  expect_replays(check_f_weak_monotonicity(flip, 1, 3), &flip, nullptr);
}

TEST(RuleAxioms, UniformVoterAdditionInvariance) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(check_f_uvai(borda_rule(3, lin("abc")), n, 3).passed);
    EXPECT_TRUE(check_f_uvai(plurality_rule(3, lin("cab")), n, 3).passed);
  }
  const Rule last(RuleSpec::dictatorship(-1));
  expect_replays(check_f_uvai(last, 2, 3), &last, nullptr);
}

TEST(MechanismAxioms, AnonymityAndNeutrality) {
  EXPECT_TRUE(check_g_anonymity(kSubset, 3, 3).passed);
  EXPECT_TRUE(check_g_neutrality(kSubset, 3, 3).passed);
  const MechanismSpec triv = MechanismSpec::of(MechanismKind::Triv);
  EXPECT_TRUE(check_g_neutrality(triv, 3, 3).passed);
  const MechanismSpec dictator = MechanismSpec::of(MechanismKind::Dictator);
  expect_replays(check_g_anonymity(dictator, 3, 3), nullptr, &dictator);
}

TEST(MechanismAxioms, CounterexampleMechanismsFailTheirAxiom) {
  const MechanismSpec triv = MechanismSpec::of(MechanismKind::Triv);
  const CheckReport pa = check_pa(triv, 3, 3);
  expect_replays(pa, nullptr, &triv);

  const MechanismSpec strict = MechanismSpec::of(MechanismKind::SubsetLinearStrict);
  expect_replays(check_pm(strict, 3, 3), nullptr, &strict);

  const MechanismSpec agree = MechanismSpec::of(MechanismKind::SubsetIfAllLinearAgree);
  const CheckReport iip = check_iip(agree, 3, 3);
  expect_replays(iip, nullptr, &agree);
  EXPECT_EQ(iip.witness->at("evaluations").size(), 2u);

  EXPECT_TRUE(check_pa(kSubset, 2, 3).passed);
  EXPECT_TRUE(check_iip(kSubset, 2, 3).passed);
  EXPECT_TRUE(check_pm(kSubset, 2, 3).passed);
}

TEST(MechanismAxioms, ZeroRegret) {
  const MechanismSpec univ = MechanismSpec::of(MechanismKind::Univ);
  expect_replays(check_zr(univ, 3, 3), nullptr, &univ);
  EXPECT_TRUE(check_zr(kSubset, 2, 3).passed);
  EXPECT_TRUE(check_zr(MechanismSpec::of(MechanismKind::Triv), 2, 3).passed);
}

TEST(ProxyVoteAxioms, MajorityPassesEverythingAtTwoAlternatives) {
  const Rule majority = majority_rule();
  EXPECT_TRUE(check_pv_anonymity(majority, kSubset, 3, 2).passed);
  EXPECT_TRUE(check_pv_neutrality(majority, kSubset, 3, 2).passed);
  EXPECT_TRUE(check_pvam(majority, kSubset, 3, 2).passed);
  EXPECT_TRUE(check_pvdm(majority, kSubset, 3, 2).passed);
}

TEST(ProxyVoteAxioms, BordaWithSubset) {
  const Rule borda = borda_rule(3, lin("abc"));
  EXPECT_TRUE(check_pv_anonymity(borda, kSubset, 2, 3).passed);
  expect_replays(check_pv_neutrality(borda, kSubset, 2, 3), &borda, &kSubset);
  const CheckReport am = check_pvam(borda, kSubset, 3, 3);
  const CheckReport dm = check_pvdm(borda, kSubset, 3, 3);
  EXPECT_FALSE(am.passed && dm.passed);
  if (!am.passed) expect_replays(am, &borda, &kSubset);
  if (!dm.passed) expect_replays(dm, &borda, &kSubset);
}

TEST(ProxyVoteAxioms, SingleProfileViolation) {
  const Rule borda = borda_rule(3, lin("abc"));
  const auto linear = fixtures::linear_profile({"abc", "bca", "cab"});
  EXPECT_FALSE(pvam_violation(borda, kSubset, linear).has_value());
  EXPECT_FALSE(pvdm_violation(borda, kSubset, linear).has_value());
}

TEST(Reports, FieldsAndDeterminism) {
  const Rule borda = borda_rule(3, lin("abc"));
  const CheckReport one = check_pvdm(borda, kSubset, 3, 3, {.workers = 1});
  const CheckReport four = check_pvdm(borda, kSubset, 3, 3, {.workers = 4});
  EXPECT_EQ(one.to_json().dump(), four.to_json().dump());
  const json j = check_g_anonymity(kSubset, 2, 3).to_json();
  EXPECT_EQ(j.at("verdict"), "pass");
  EXPECT_EQ(j.at("voters"), 2);
  EXPECT_EQ(j.at("alternatives"), 3);
  EXPECT_FALSE(j.contains("witness"));
}

TEST(Bounds, GuardRefusesLargeSpaces) {
  const Rule borda = borda_rule(3, lin("abc"));
  EXPECT_THROW(check_pvam(borda, kSubset, 4, 3), BoundsError);
  EXPECT_THROW(check_zr(kSubset, 3, 4), BoundsError);
  EXPECT_NO_THROW(check_f_anonymity(borda, 4, 3));
  EXPECT_THROW(check_f_anonymity(borda, 5, 3), BoundsError);
  try {
    check_pv_anonymity(borda, kSubset, 4, 3);
    FAIL() << "expected BoundsError";
  } catch (const BoundsError& e) {
    EXPECT_GT(e.cost(), 0);
  }
  EXPECT_NO_THROW(check_f_anonymity(borda_rule(4, lin("abcd")), 2, 4, {.force = true}));
}

TEST(Properties, NamesRoundTrip) {
  for (Property p : {Property::FAnonymity, Property::FNeutrality, Property::WeakMonotonicity,
                     Property::Uvai, Property::GAnonymity, Property::GNeutrality, Property::PA,
                     Property::IIP, Property::PM, Property::ZR, Property::PVAnonymity,
                     Property::PVNeutrality, Property::PVAM, Property::PVDM}) {
    EXPECT_EQ(parse_property(to_string(p)), p);
    EXPECT_TRUE(needs_rule(p) || needs_mechanism(p));
    EXPECT_GT(check_cost(p, 2, 2), 0);
  }
  EXPECT_THROW(parse_property("fairness"), std::invalid_argument);
}

TEST(Replay, DetectsTampering) {
  const Rule borda = borda_rule(3, lin("abc"));
  const CheckReport r = check_f_neutrality(borda, 2, 3);
  ASSERT_TRUE(r.witness.has_value());
  json tampered = *r.witness;
  tampered["evaluations"][0]["winner"] = (tampered["evaluations"][0]["winner"].get<int>() + 1) % 3;
  EXPECT_FALSE(replay_witness(tampered, &borda, nullptr).reproduced);
}
