#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "proxyvote/orders.hpp"

namespace proxyvote {

enum class RuleErrc {
  InvalidRule,
  PreconditionViolated,
  NotSinglePeaked,
};

class RuleError : public std::runtime_error {
 public:
  RuleError(RuleErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  RuleErrc code() const noexcept { return code_; }

 private:
  RuleErrc code_;
};

// Positional scoring with exact integer weights and a fixed tie-break order.
struct ScoringRule {
  std::vector<std::int64_t> weights;
  LinearOrder tiebreak;

  static ScoringRule borda(int m, const LinearOrder& tiebreak);
  static ScoringRule plurality(int m, const LinearOrder& tiebreak);
  // Requires s_1 >= ... >= s_m >= 0, s_1 > s_m and a tie-break over m items.
  void validate() const;
};

// Median of the n voter peaks and n-1 fixed phantom peaks along the axis.
struct MedianRule {
  Axis axis;
  std::vector<Alternative> phantoms;
};

std::vector<std::int64_t> scores(const ScoringRule& rule, std::span<const LinearOrder> ballots);
Alternative scoring_winner(const ScoringRule& rule, std::span<const LinearOrder> ballots);
// m = 2 and an odd number of ballots.
Alternative majority_winner(std::span<const LinearOrder> ballots);
// Throws RuleError(NotSinglePeaked) off the single-peaked domain.
Alternative median_winner(const MedianRule& rule, std::span<const LinearOrder> ballots);

// Arbitrary resolute rule for a fixed (n, m), given as one outcome per linear
// profile. Profiles are indexed in mixed radix with voter 0 most significant
// and each ballot contributing its lexicographic rank.
struct TableRule {
  int voters = 0;
  int alternatives = 0;
  std::vector<Alternative> outcomes;

  static std::size_t profile_index(std::span<const LinearOrder> ballots);
};

enum class RuleKind { Scoring, Majority, Median, Dictator, Table };

// Serializable description of an aggregator.
struct RuleSpec {
  RuleKind kind = RuleKind::Scoring;
  ScoringRule scoring;
  MedianRule median;
  // Dictator: the ballot index whose top wins; negative counts from the end.
  int dictator = 0;
  TableRule table;

  static RuleSpec of(ScoringRule rule);
  static RuleSpec of(MedianRule rule);
  static RuleSpec majority();
  static RuleSpec dictatorship(int voter);
  static RuleSpec of(TableRule rule);
};

using ChoiceFunction = std::function<Alternative(std::span<const LinearOrder>)>;

// Resolute social choice function. Built from a RuleSpec, or from any callable
// for experiments that need no serialization.
class Rule {
 public:
  explicit Rule(RuleSpec spec);
  Rule(std::string name, ChoiceFunction fn);

  Alternative operator()(std::span<const LinearOrder> ballots) const;
  const std::string& name() const { return name_; }
  const std::optional<RuleSpec>& spec() const { return spec_; }
  const MedianRule* median() const {
    return spec_ && spec_->kind == RuleKind::Median ? &spec_->median : nullptr;
  }

 private:
  std::string name_;
  std::optional<RuleSpec> spec_;
  ChoiceFunction fn_;
};

Rule borda_rule(int m, const LinearOrder& tiebreak);
Rule plurality_rule(int m, const LinearOrder& tiebreak);
Rule majority_rule();

}  // namespace proxyvote
