#include <gtest/gtest.h>

#include <proxyvote/theorems.hpp>

using namespace proxyvote;

TEST(VerifyTheorem, Ids) {
  EXPECT_EQ(theorem_ids(), (std::vector<std::string>{"T1", "T2", "T3", "T4", "T5", "T6"}));
  EXPECT_THROW(verify_theorem("T7"), std::invalid_argument);
}

TEST(VerifyTheorem, AdditionCounterexamples) {
  const TheoremReport r = verify_theorem("T3");
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.checks.size(), 6u);
  const json j = r.to_json();
  EXPECT_EQ(j.at("theorem"), "T3");
  EXPECT_EQ(j.at("verdict"), "pass");
  for (const json& c : j.at("checks")) EXPECT_EQ(c.at("verdict"), "pass") << c.at("name");
}

TEST(VerifyTheorem, SinglePeakedRecipe) {
  const TheoremReport r = verify_theorem("T6");
  for (const RecipeCheck& c : r.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail.dump();
  EXPECT_TRUE(r.passed());
}

TEST(VerifyTheorem, Deterministic) {
  EXPECT_EQ(verify_theorem("T3").to_json().dump(), verify_theorem("T3").to_json().dump());
}
