#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "proxyvote/axioms.hpp"
#include "proxyvote/json_io.hpp"

namespace proxyvote {

struct RecipeCheck {
  std::string name;
  bool passed = false;
  json detail;
};

struct TheoremReport {
  std::string id;
  std::string statement;
  std::vector<RecipeCheck> checks;

  bool passed() const;
  json to_json() const;
};

// Ids T1 ... T6.
std::vector<std::string> theorem_ids();

// Runs the fixed recipe for one result at desk scale. Sub-check failures and
// exceptions are recorded as failed checks, never swallowed.
TheoremReport verify_theorem(std::string_view id, const CheckOptions& options = {});

}  // namespace proxyvote
