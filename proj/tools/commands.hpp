#pragma once

#include <string>

#include "options.hpp"

namespace cli {

// Exit codes: 0 verdicts as expected, 1 unexpected verdict, 2 bad input or refused bounds.
int run_command(const Common& common, const std::string& input);
int check_command(const Common& common, const RuleFlags& rule, const std::string& mechanism,
                  const Bounds& bounds, const std::string& property, const std::string& expect);
int find_command(const Common& common, const RuleFlags& rule, const std::string& mechanism,
                 const Bounds& bounds, const std::string& kind, bool count, bool single_peaked,
                 const std::string& expect);
int construct_command(const Common& common, const RuleFlags& rule, const Bounds& bounds,
                      const std::string& what);
int verify_theorem_command(const Common& common, const std::string& id);

}  // namespace cli
