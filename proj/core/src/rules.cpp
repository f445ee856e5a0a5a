#include "proxyvote/rules.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace proxyvote {

ScoringRule ScoringRule::borda(int m, const LinearOrder& tiebreak) {
  ScoringRule rule;
  for (int p = 0; p < m; ++p) rule.weights.push_back(m - 1 - p);
  rule.tiebreak = tiebreak;
  rule.validate();
  return rule;
}

ScoringRule ScoringRule::plurality(int m, const LinearOrder& tiebreak) {
  ScoringRule rule;
  rule.weights.assign(m, 0);
  rule.weights[0] = 1;
  rule.tiebreak = tiebreak;
  rule.validate();
  return rule;
}

void ScoringRule::validate() const {
  int m = static_cast<int>(weights.size());
  if (m < 1 || m > kMaxAlternatives) {
    throw RuleError(RuleErrc::InvalidRule, "scoring vector length must be in [1, 8]");
  }
  for (int p = 0; p + 1 < m; ++p) {
    if (weights[p] < weights[p + 1]) {
      throw RuleError(RuleErrc::InvalidRule, "scoring weights must be non-increasing");
    }
  }
  if (weights.back() < 0) {
    throw RuleError(RuleErrc::InvalidRule, "scoring weights must be non-negative");
  }
  if (m > 1 && weights.front() == weights.back()) {
    throw RuleError(RuleErrc::InvalidRule, "scoring vector needs s_1 > s_m");
  }
  if (tiebreak.size() != m) {
    throw RuleError(RuleErrc::InvalidRule, "tie-break must rank all alternatives");
  }
}

std::vector<std::int64_t> scores(const ScoringRule& rule, std::span<const LinearOrder> ballots) {
  std::vector<std::int64_t> s(rule.weights.size(), 0);
  for (const LinearOrder& b : ballots) {
    for (int p = 0; p < b.size(); ++p) s[b[p]] += rule.weights[p];
  }
  return s;
}

Alternative scoring_winner(const ScoringRule& rule, std::span<const LinearOrder> ballots) {
  std::array<std::int64_t, kMaxAlternatives> s{};
  const int m = static_cast<int>(rule.weights.size());
  for (const LinearOrder& b : ballots) {
    if (b.size() != m) {
      throw RuleError(RuleErrc::PreconditionViolated, "ballot length differs from m");
    }
    for (int p = 0; p < m; ++p) s[b[p]] += rule.weights[p];
  }
  Alternative best = rule.tiebreak[0];
  for (int p = 1; p < m; ++p) {
    Alternative a = rule.tiebreak[p];
    if (s[a] > s[best]) best = a;
  }
  return best;
}

Alternative majority_winner(std::span<const LinearOrder> ballots) {
  if (ballots.empty() || ballots.size() % 2 == 0) {
    throw RuleError(RuleErrc::PreconditionViolated, "majority rule needs an odd number of voters");
  }
  int first = 0;
  for (const LinearOrder& b : ballots) {
    if (b.size() != 2) {
      throw RuleError(RuleErrc::PreconditionViolated, "majority rule needs exactly two alternatives");
    }
    first += b.top() == 0;
  }
  return 2 * first > static_cast<int>(ballots.size()) ? 0 : 1;
}

Alternative median_winner(const MedianRule& rule, std::span<const LinearOrder> ballots) {
  const std::size_t n = ballots.size();
  if (n == 0 || rule.phantoms.size() + 1 != n) {
    throw RuleError(RuleErrc::PreconditionViolated, "median rule needs exactly n-1 phantoms");
  }
  std::array<int, kMaxAlternatives> count{};
  for (const LinearOrder& b : ballots) {
    if (b.size() != rule.axis.size()) {
      throw RuleError(RuleErrc::PreconditionViolated, "ballot length differs from axis");
    }
    if (!is_single_peaked(b, rule.axis)) {
      throw RuleError(RuleErrc::NotSinglePeaked, "ballot " + to_string(b) +
                                                     " is not single-peaked on the axis");
    }
    ++count[rule.axis.position(b.top())];
  }
  for (Alternative ph : rule.phantoms) ++count[rule.axis.position(ph)];
  // n-th smallest of the 2n-1 axis positions.
  std::size_t seen = 0;
  for (int pos = 0; pos < rule.axis.size(); ++pos) {
    seen += count[pos];
    if (seen >= n) return rule.axis.at(pos);
  }
  return rule.axis.at(rule.axis.size() - 1);
}

std::size_t TableRule::profile_index(std::span<const LinearOrder> ballots) {
  std::size_t index = 0;
  for (const LinearOrder& b : ballots) {
    std::size_t radix = 1;
    for (int k = 2; k <= b.size(); ++k) radix *= k;
    index = index * radix + linear_order_rank(b);
  }
  return index;
}

RuleSpec RuleSpec::of(ScoringRule rule) {
  RuleSpec s;
  s.kind = RuleKind::Scoring;
  s.scoring = std::move(rule);
  return s;
}

RuleSpec RuleSpec::of(MedianRule rule) {
  RuleSpec s;
  s.kind = RuleKind::Median;
  s.median = std::move(rule);
  return s;
}

RuleSpec RuleSpec::majority() {
  RuleSpec s;
  s.kind = RuleKind::Majority;
  return s;
}

RuleSpec RuleSpec::dictatorship(int voter) {
  RuleSpec s;
  s.kind = RuleKind::Dictator;
  s.dictator = voter;
  return s;
}

RuleSpec RuleSpec::of(TableRule rule) {
  RuleSpec s;
  s.kind = RuleKind::Table;
  s.table = std::move(rule);
  return s;
}

namespace {

std::string weights_name(const std::vector<std::int64_t>& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t p = 0; p < w.size(); ++p) os << (p ? "," : "") << w[p];
  os << ')';
  return os.str();
}

}  // namespace

Rule::Rule(RuleSpec spec) : spec_(std::move(spec)) {
  const RuleSpec& s = *spec_;
  switch (s.kind) {
    case RuleKind::Scoring: {
      s.scoring.validate();
      name_ = "scoring" + weights_name(s.scoring.weights) + " tiebreak " +
              to_string(s.scoring.tiebreak);
      fn_ = [rule = s.scoring](std::span<const LinearOrder> b) { return scoring_winner(rule, b); };
      break;
    }
    case RuleKind::Majority:
      name_ = "majority";
      fn_ = [](std::span<const LinearOrder> b) { return majority_winner(b); };
      break;
    case RuleKind::Median: {
      for (Alternative ph : s.median.phantoms) {
        if (ph < 0 || ph >= s.median.axis.size()) {
          throw RuleError(RuleErrc::InvalidRule, "phantom peak outside the axis");
        }
      }
      std::ostringstream os;
      os << "median axis ";
      for (int p = 0; p < s.median.axis.size(); ++p) os << (p ? "," : "") << s.median.axis.at(p);
      os << " phantoms ";
      for (std::size_t k = 0; k < s.median.phantoms.size(); ++k) {
        os << (k ? "," : "") << s.median.phantoms[k];
      }
      name_ = os.str();
      fn_ = [rule = s.median](std::span<const LinearOrder> b) { return median_winner(rule, b); };
      break;
    }
    case RuleKind::Dictator: {
      name_ = "dictator " + std::to_string(s.dictator);
      fn_ = [d = s.dictator](std::span<const LinearOrder> b) {
        int n = static_cast<int>(b.size());
        int idx = d < 0 ? n + d : d;
        if (idx < 0 || idx >= n) {
          throw RuleError(RuleErrc::PreconditionViolated, "dictator index out of range");
        }
        return b[idx].top();
      };
      break;
    }
    case RuleKind::Table: {
      const TableRule& t = s.table;
      std::size_t expected = 1;
      std::size_t fact = 1;
      for (int k = 2; k <= t.alternatives; ++k) fact *= k;
      for (int v = 0; v < t.voters; ++v) expected *= fact;
      if (t.outcomes.size() != expected) {
        throw RuleError(RuleErrc::InvalidRule, "table rule needs one outcome per profile");
      }
      name_ = "table";
      fn_ = [t](std::span<const LinearOrder> b) {
        if (static_cast<int>(b.size()) != t.voters) {
          throw RuleError(RuleErrc::PreconditionViolated, "table rule voter count mismatch");
        }
        return t.outcomes[TableRule::profile_index(b)];
      };
      break;
    }
  }
}

Rule::Rule(std::string name, ChoiceFunction fn) : name_(std::move(name)), fn_(std::move(fn)) {}

Alternative Rule::operator()(std::span<const LinearOrder> ballots) const { return fn_(ballots); }

Rule borda_rule(int m, const LinearOrder& tiebreak) {
  return Rule(RuleSpec::of(ScoringRule::borda(m, tiebreak)));
}

Rule plurality_rule(int m, const LinearOrder& tiebreak) {
  return Rule(RuleSpec::of(ScoringRule::plurality(m, tiebreak)));
}

Rule majority_rule() { return Rule(RuleSpec::majority()); }

}  // namespace proxyvote
