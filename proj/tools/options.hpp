#pragma once

#include <optional>
#include <string>
#include <vector>

#include <proxyvote/axioms.hpp>
#include <proxyvote/json_io.hpp>
#include <proxyvote/manipulation.hpp>
#include <proxyvote/mechanisms.hpp>
#include <proxyvote/rules.hpp>

namespace cli {

using proxyvote::json;

struct Common {
  std::string out;
  unsigned workers = 1;
  bool force = false;
  bool quiet = false;
};

struct RuleFlags {
  std::string rule = "borda";
  std::string tiebreak;
  std::string weights;
  std::string axis;
  std::string phantoms;
  int dictator = 0;
};

struct Bounds {
  int n = 3;
  int m = 3;
};

// "abc", "a,b,c" and "0,1,2" all name alternatives 0, 1, 2.
std::vector<int> parse_alternatives(const std::string& text);

// Accepts a rule name assembled with the flags, inline JSON or a JSON file path.
proxyvote::RuleSpec make_rule(const RuleFlags& flags, int m);
proxyvote::MechanismSpec make_mechanism(const std::string& text);

json read_json(const std::string& path);

}  // namespace cli
