#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fuzzysched/engine.hpp"
#include "fuzzysched/error.hpp"
#include "fuzzysched/rules.hpp"

using namespace fuzzysched;

namespace {

int term_index(const LinguisticVariable& var, const std::string& term) {
  int idx = var.term_index(term);
  REQUIRE(idx >= 0);
  return idx;
}

}  // namespace

TEST_CASE("default rule base covers the full 5x5 grid") {
  RuleBase rb = default_rulebase();
  CHECK(rb.size() == 25);
  CHECK(rb.input_variables() ==
        std::vector<std::string>{"priority", "exec_time"});
  CHECK(rb.output_variable() == "new_priority");

  // Every (priority, exec_time) combination appears exactly once.
  std::set<std::pair<std::string, std::string>> combos;
  for (const FuzzyRule& rule : rb.rules()) {
    REQUIRE(rule.antecedents.size() == 2);
    CHECK(rule.antecedents[0].first == "priority");
    CHECK(rule.antecedents[1].first == "exec_time");
    combos.insert({rule.antecedents[0].second, rule.antecedents[1].second});
  }
  CHECK(combos.size() == 25);
}

TEST_CASE("default rule base spot checks") {
  RuleBase rb = default_rulebase();
  auto consequent = [&](const std::string& pp,
                        const std::string& et) -> std::string {
    for (const FuzzyRule& rule : rb.rules())
      if (rule.antecedents[0].second == pp && rule.antecedents[1].second == et)
        return rule.consequent.second;
    return "<missing>";
  };
  CHECK(consequent("very_low", "very_small") == "very_high");
  CHECK(consequent("very_high", "very_small") == "very_high");
  CHECK(consequent("medium", "small") == "high");
  CHECK(consequent("medium", "medium") == "medium");
  CHECK(consequent("low", "medium") == "low");
  CHECK(consequent("medium", "long") == "low");
  CHECK(consequent("very_low", "very_long") == "very_low");
  CHECK(consequent("very_high", "very_long") == "low");
}

TEST_CASE("rule table is monotone in both inputs") {
  Engine engine = Engine::with_defaults();
  const RuleBase& rb = engine.rules();
  const LinguisticVariable& pp = engine.priority();
  const LinguisticVariable& et = engine.exec_time();
  const LinguisticVariable& np = engine.new_priority();

  int table[5][5];
  for (const FuzzyRule& rule : rb.rules()) {
    int p = term_index(pp, rule.antecedents[0].second);
    int e = term_index(et, rule.antecedents[1].second);
    table[e][p] = term_index(np, rule.consequent.second);
  }

  for (int e = 0; e < 5; ++e)
    for (int p = 0; p + 1 < 5; ++p)
      CHECK(table[e][p] <= table[e][p + 1]);  // higher priority never hurts
  for (int p = 0; p < 5; ++p)
    for (int e = 0; e + 1 < 5; ++e)
      CHECK(table[e][p] >= table[e + 1][p]);  // longer burst never helps
}

TEST_CASE("DSL round-trip reproduces the default rule base") {
  Engine engine = Engine::with_defaults();
  RuleBase rb = default_rulebase();
  std::string dsl = rb.to_dsl();
  RuleBase reparsed = parse_rulebase(
      dsl, {engine.priority(), engine.exec_time()}, engine.new_priority());
  REQUIRE(reparsed.size() == rb.size());
  for (std::size_t i = 0; i < rb.size(); ++i) {
    CHECK(reparsed.rules()[i].antecedents == rb.rules()[i].antecedents);
    CHECK(reparsed.rules()[i].consequent == rb.rules()[i].consequent);
  }
}

TEST_CASE("rule text renders the canonical form") {
  FuzzyRule rule{{{"priority", "low"}, {"exec_time", "small"}},
                 {"new_priority", "medium"}};
  CHECK(rule.text() ==
        "IF priority IS low AND exec_time IS small THEN new_priority IS "
        "medium");
}

TEST_CASE("parser accepts comments, blank lines and loose case") {
  Engine engine = Engine::with_defaults();
  std::string dsl =
      "# leading comment\n"
      "\n"
      "if priority is low and exec_time is small then new_priority is high\n"
      "IF priority IS high THEN new_priority IS low  # trailing comment\n";
  RuleBase rb = parse_rulebase(dsl, {engine.priority(), engine.exec_time()},
                               engine.new_priority());
  REQUIRE(rb.size() == 2);
  CHECK(rb.rules()[0].consequent.second == "high");
  REQUIRE(rb.rules()[1].antecedents.size() == 1);
  CHECK(rb.rules()[1].antecedents[0] ==
        std::pair<std::string, std::string>{"priority", "high"});
}

TEST_CASE("parser reports positions") {
  Engine engine = Engine::with_defaults();
  std::vector<LinguisticVariable> inputs{engine.priority(),
                                         engine.exec_time()};
  const LinguisticVariable& out = engine.new_priority();

  auto expect_failure = [&](const std::string& dsl, const char* needle,
                            int line) {
    try {
      parse_rulebase(dsl, inputs, out);
      FAIL("expected ParseError for: " << dsl);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
      CHECK(e.line() == line);
      CHECK(e.column() > 0);
    }
  };

  expect_failure("priority IS low THEN new_priority IS low\n", "expected IF",
                 1);
  expect_failure("IF speed IS low THEN new_priority IS low\n",
                 "unknown variable 'speed'", 1);
  expect_failure("IF priority IS tiny THEN new_priority IS low\n",
                 "unknown term 'tiny'", 1);
  expect_failure("IF priority IS low new_priority IS low\n",
                 "expected AND or THEN", 1);
  expect_failure("IF priority IS low THEN priority IS low\n",
                 "consequent variable must be 'new_priority'", 1);
  expect_failure("IF priority IS low THEN new_priority IS low extra\n",
                 "unexpected trailing token 'extra'", 1);
  expect_failure("IF priority IS low AND priority IS high THEN "
                 "new_priority IS low\n",
                 "appears twice", 1);
  expect_failure("IF priority IS low THEN new_priority IS\n", "end of line",
                 1);
  expect_failure(
      "IF priority IS low THEN new_priority IS low\n"
      "# a comment\n"
      "IF priority IS low THEN new_priority IS high\n",
      "duplicate antecedents, first used on line 1", 3);
}

TEST_CASE("duplicate antecedents are order-insensitive") {
  Engine engine = Engine::with_defaults();
  std::string dsl =
      "IF priority IS low AND exec_time IS small THEN new_priority IS low\n"
      "IF exec_time IS small AND priority IS low THEN new_priority IS high\n";
  CHECK_THROWS_AS(parse_rulebase(dsl, {engine.priority(), engine.exec_time()},
                                 engine.new_priority()),
                  ParseError);
}

TEST_CASE("rule base constructor validation") {
  FuzzyRule ok{{{"a", "x"}}, {"out", "y"}};
  CHECK_THROWS_AS(RuleBase({"a", "a"}, "out", {ok}), ConfigError);
  CHECK_THROWS_AS(RuleBase({"a", "out"}, "out", {ok}), ConfigError);
  CHECK_THROWS_AS(RuleBase({"a"}, "", {ok}), ConfigError);

  FuzzyRule no_antecedents{{}, {"out", "y"}};
  CHECK_THROWS_AS(RuleBase({"a"}, "out", {no_antecedents}), ConfigError);

  FuzzyRule wrong_output{{{"a", "x"}}, {"other", "y"}};
  CHECK_THROWS_AS(RuleBase({"a"}, "out", {wrong_output}), ConfigError);

  FuzzyRule dup1{{{"a", "x"}, {"b", "y"}}, {"out", "y"}};
  FuzzyRule dup2{{{"b", "y"}, {"a", "x"}}, {"out", "z"}};
  try {
    RuleBase({"a", "b"}, "out", {dup1, dup2});
    FAIL("duplicate antecedents accepted");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("rules 1 and 2") != std::string::npos);
  }
}
