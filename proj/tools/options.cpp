#include "options.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace cli {

using namespace proxyvote;

std::vector<int> parse_alternatives(const std::string& text) {
  std::vector<int> out;
  std::string digits;
  auto flush = [&] {
    if (!digits.empty()) out.push_back(std::stoi(digits));
    digits.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
    } else if (c >= 'a' && c <= 'h') {
      flush();
      out.push_back(c - 'a');
    } else if (c == ',' || c == ' ' || c == '>') {
      flush();
    } else {
      throw std::invalid_argument("cannot read alternatives from '" + text + "'");
    }
  }
  flush();
  return out;
}

namespace {

bool looks_like_json(const std::string& text) {
  return !text.empty() && (text.front() == '{' || text.front() == '[');
}

std::optional<json> json_argument(const std::string& text) {
  if (looks_like_json(text)) return json::parse(text);
  if (text.find('.') != std::string::npos && std::filesystem::exists(text)) return read_json(text);
  return std::nullopt;
}

LinearOrder tiebreak_or_identity(const std::string& text, int m) {
  if (text.empty()) return LinearOrder::identity(m);
  return LinearOrder(parse_alternatives(text));
}

}  // namespace

RuleSpec make_rule(const RuleFlags& flags, int m) {
  if (auto j = json_argument(flags.rule)) return rule_from_json(*j);
  const std::string& kind = flags.rule;
  if (kind == "borda") return RuleSpec::of(ScoringRule::borda(m, tiebreak_or_identity(flags.tiebreak, m)));
  if (kind == "plurality") {
    return RuleSpec::of(ScoringRule::plurality(m, tiebreak_or_identity(flags.tiebreak, m)));
  }
  if (kind == "scoring") {
    ScoringRule rule;
    rule.weights = normalize_weights(json::parse("[" + flags.weights + "]"));
    rule.tiebreak = tiebreak_or_identity(flags.tiebreak, static_cast<int>(rule.weights.size()));
    rule.validate();
    return RuleSpec::of(std::move(rule));
  }
  if (kind == "majority") return RuleSpec::majority();
  if (kind == "dictator") return RuleSpec::dictatorship(flags.dictator);
  if (kind == "median") {
    MedianRule rule;
    if (flags.axis.empty()) {
      std::vector<int> order(m);
      std::iota(order.begin(), order.end(), 0);
      rule.axis = Axis(order);
    } else {
      rule.axis = Axis(parse_alternatives(flags.axis));
    }
    rule.phantoms = parse_alternatives(flags.phantoms);
    return RuleSpec::of(std::move(rule));
  }
  throw std::invalid_argument("unknown rule: " + kind);
}

MechanismSpec make_mechanism(const std::string& text) {
  if (auto j = json_argument(text)) return mechanism_from_json(*j);
  return MechanismSpec::of(parse_mechanism_kind(text));
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

}  // namespace cli
