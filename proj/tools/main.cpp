#include <algorithm>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Transitive proxy voting: elections, axiom sweeps and manipulation search"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::Common common;
  common.workers = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--out", common.out, "Write the JSON result here instead of stdout");
  app.add_option("--workers", common.workers, "Parallel workers for sweeps")
      ->check(CLI::Range(1u, 1024u));
  app.add_flag("--force", common.force, "Run sweeps beyond the default bounds");
  app.add_flag("--quiet", common.quiet, "Print JSON only");

  cli::RuleFlags rule;
  cli::Bounds bounds;
  std::string mechanism = "subset";
  auto rule_options = [&](CLI::App* sub) {
    sub->add_option("--rule", rule.rule,
                    "borda | plurality | scoring | majority | median | dictator, or rule JSON");
    sub->add_option("--tiebreak", rule.tiebreak, "Tie-break order, e.g. abc");
    sub->add_option("--weights", rule.weights, "Scoring weights, e.g. 2,1,0");
    sub->add_option("--axis", rule.axis, "Single-peaked axis, e.g. acb");
    sub->add_option("--phantoms", rule.phantoms, "Median rule phantom peaks, e.g. a,c");
    sub->add_option("--dictator", rule.dictator, "Ballot index for the dictator rule");
  };
  auto bound_options = [&](CLI::App* sub) {
    sub->add_option("--n", bounds.n, "Voters")->check(CLI::Range(1, 64));
    sub->add_option("--m", bounds.m, "Alternatives")->check(CLI::Range(1, 8));
  };

  std::string input;
  auto* run = app.add_subcommand("run", "Run an election, or replay a report or witness");
  run->add_option("input", input, "Run spec {profile, mechanism, rule}, report or witness JSON")
      ->required()
      ->check(CLI::ExistingFile);

  std::string property;
  std::string expect_verdict = "pass";
  auto* check = app.add_subcommand("check", "Exhaustively check one property");
  check->add_option("--property", property, "Property name, e.g. pvam")->required();
  check->add_option("--mechanism", mechanism, "Mechanism kind or JSON");
  check->add_option("--expect", expect_verdict, "Expected verdict")
      ->check(CLI::IsMember({"pass", "fail"}));
  rule_options(check);
  bound_options(check);

  std::string kind;
  bool count = false;
  bool single_peaked = false;
  std::string expect_found = "any";
  auto* find = app.add_subcommand("find", "Search for a manipulation");
  find->add_option("--kind", kind, "gs | iia | pc | pm")->required();
  find->add_option("--mechanism", mechanism, "Mechanism kind or JSON");
  find->add_flag("--count", count, "Count every manipulation instead");
  find->add_flag("--single-peaked", single_peaked, "Restrict to profiles single-peaked on --axis");
  find->add_option("--expect", expect_found, "Expected outcome")
      ->check(CLI::IsMember({"any", "found", "none"}));
  rule_options(find);
  bound_options(find);

  std::string what;
  auto* construct = app.add_subcommand("construct", "Build an explicit counterexample");
  construct->add_option("what", what, "thm3 | thm5 | thm6")
      ->required()
      ->check(CLI::IsMember({"thm3", "thm5", "thm6"}));
  rule_options(construct);
  bound_options(construct);

  std::string theorem;
  auto* verify = app.add_subcommand("verify-theorem", "Run a fixed verification recipe");
  verify->add_option("id", theorem, "T1 ... T6 or all")
      ->required()
      ->check(CLI::IsMember({"T1", "T2", "T3", "T4", "T5", "T6", "all"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cli::run_command(common, input);
    if (*check) {
      return cli::check_command(common, rule, mechanism, bounds, property, expect_verdict);
    }
    if (*find) {
      return cli::find_command(common, rule, mechanism, bounds, kind, count, single_peaked,
                               expect_found);
    }
    if (*construct) return cli::construct_command(common, rule, bounds, what);
    if (*verify) return cli::verify_theorem_command(common, theorem);
  } catch (const proxyvote::BoundsError& e) {
    std::cerr << "refused: " << e.what() << " (pass --force to run anyway)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
