#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "fuzzysched/engine.hpp"
#include "fuzzysched/error.hpp"
#include "support/oracle.hpp"

using namespace fuzzysched;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("default variables") {
  Engine engine = Engine::with_defaults();

  const LinguisticVariable& pp = engine.priority();
  CHECK(pp.name() == "priority");
  CHECK(pp.lo() == 0.0);
  CHECK(pp.hi() == 10.0);
  REQUIRE(pp.terms().size() == 5);
  CHECK(pp.terms()[0].name == "very_low");
  CHECK(pp.terms()[4].name == "very_high");

  const LinguisticVariable& et = engine.exec_time();
  CHECK(et.lo() == 0.0);
  CHECK(et.hi() == 25.0);
  REQUIRE(et.terms().size() == 5);
  CHECK(et.terms()[0].name == "very_small");
  CHECK(et.terms()[4].name == "very_long");

  const LinguisticVariable& np = engine.new_priority();
  CHECK(np.lo() == 0.0);
  CHECK(np.hi() == 10.0);
  CHECK(engine.rules().size() == 25);
}

TEST_CASE("fuzzification spot values") {
  Engine engine = Engine::with_defaults();
  const LinguisticVariable& pp = engine.priority();

  auto at5 = pp.fuzzify(5.0);
  CHECK(at5["medium"] == 1.0);
  CHECK(at5["low"] == 0.0);
  CHECK(at5["high"] == 0.0);

  auto at375 = pp.fuzzify(3.75);
  CHECK(at375["low"] == 0.5);
  CHECK(at375["medium"] == 0.5);

  auto at0 = pp.fuzzify(0.0);
  CHECK(at0["very_low"] == 1.0);

  // Out-of-universe inputs clamp to the nearest bound.
  CHECK(pp.fuzzify(-3.0) == pp.fuzzify(0.0));
  CHECK(pp.fuzzify(42.0) == pp.fuzzify(10.0));

  auto et20 = engine.exec_time().fuzzify(20.0);
  CHECK(et20["medium"] == 0.25);
  CHECK(et20["long"] == 0.75);
  CHECK(et20["very_long"] == 0.0);
}

TEST_CASE("terms form a partition of unity") {
  Engine engine = Engine::with_defaults();
  for (const LinguisticVariable* var :
       {&engine.priority(), &engine.exec_time(), &engine.new_priority()}) {
    for (int i = 0; i <= 1000; ++i) {
      double x = var->lo() + (var->hi() - var->lo()) * i / 1000.0;
      double sum = 0.0;
      for (const Term& term : var->terms()) sum += term.mf.degree(x);
      CHECK(std::fabs(sum - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("evaluate_rule takes the minimum over antecedents") {
  FuzzyRule rule{{{"priority", "low"}, {"exec_time", "small"}},
                 {"new_priority", "medium"}};
  InputDegrees degrees{{"priority", {{"low", 0.3}}},
                       {"exec_time", {{"small", 0.8}}}};
  CHECK(evaluate_rule(rule, degrees) == 0.3);

  degrees["priority"]["low"] = 1.0;
  CHECK(evaluate_rule(rule, degrees) == 0.8);

  CHECK_THROWS_AS(evaluate_rule(rule, InputDegrees{}), ConfigError);
  InputDegrees missing_term{{"priority", {{"high", 0.5}}},
                            {"exec_time", {{"small", 0.8}}}};
  CHECK_THROWS_AS(evaluate_rule(rule, missing_term), ConfigError);
}

TEST_CASE("aggregation keeps the strongest activation per term") {
  Engine engine = Engine::with_defaults();
  const LinguisticVariable& np = engine.new_priority();

  FuzzyRule a{{{"priority", "low"}}, {"new_priority", "medium"}};
  FuzzyRule b{{{"priority", "high"}}, {"new_priority", "medium"}};
  FuzzyRule c{{{"priority", "very_low"}}, {"new_priority", "low"}};

  AggregatedOutput agg = aggregate({{a, 0.2}, {b, 0.6}, {c, 0.0}}, np);
  REQUIRE(agg.parts().size() == 1);  // zero activations are dropped
  CHECK(agg.parts()[0].level == 0.6);
  CHECK(agg.value_at(5.0) == 0.6);
  CHECK(agg.value_at(0.0) == 0.0);
  CHECK_FALSE(agg.is_zero());

  AggregatedOutput none = aggregate({{a, 0.0}}, np);
  CHECK(none.is_zero());
  CHECK_THROWS_AS((void)defuzzify_centroid(none), NoRuleFiredError);
}

TEST_CASE("aggregate_for matches the pointwise maximum of clipped terms") {
  Engine engine = Engine::with_defaults();
  AggregatedOutput agg = engine.aggregate_for(5.0, 20.0);

  // medium exec_time fires at 0.25, long at 0.75; the consequents are
  // medium and low respectively.
  REQUIRE(agg.parts().size() == 2);
  CHECK(agg.value_at(2.5) == 0.75);
  CHECK(agg.value_at(5.0) == 0.25);
  CHECK(agg.value_at(1.0) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(agg.value_at(10.0) == 0.0);
}

TEST_CASE("centroid of a single clipped term") {
  Engine engine = Engine::with_defaults();
  // One rule fires at full strength when both inputs sit on a peak.
  CHECK(engine.infer(5.0, 12.5) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(engine.infer(10.0, 25.0) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(engine.infer(0.0, 25.0) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  // The very_small burst row maps every priority to very_high.
  for (double peak : {0.0, 2.5, 5.0, 7.5, 10.0})
    CHECK(engine.infer(peak, 0.0) ==
          doctest::Approx(55.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("worked centroid value") {
  Engine engine = Engine::with_defaults();
  // Exact piecewise integration of max(min(0.75, low), min(0.25, medium))
  // over [0, 10] gives moment 1225/128 and area 95/32.
  CHECK(engine.infer(5.0, 20.0) ==
        doctest::Approx(245.0 / 76.0).epsilon(1e-12));
}

TEST_CASE("inference is continuous in the inputs") {
  Engine engine = Engine::with_defaults();
  std::mt19937 rng(7151);
  std::uniform_real_distribution<double> pp_dist(0.0, 10.0);
  std::uniform_real_distribution<double> et_dist(0.0, 25.0);
  for (int i = 0; i < 200; ++i) {
    double pp = pp_dist(rng);
    double et = et_dist(rng);
    double base = engine.infer(pp, et);
    double nudged = engine.infer(std::min(pp + 1e-6, 10.0), et);
    CHECK(std::fabs(base - nudged) < 1e-3);
  }
}

TEST_CASE("analytic centroid agrees with the Riemann oracle") {
  Engine engine = Engine::with_defaults();
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> pp_dist(0.0, 10.0);
  std::uniform_real_distribution<double> et_dist(0.0, 25.0);
  for (int i = 0; i < 100; ++i) {
    double pp = pp_dist(rng);
    double et = et_dist(rng);
    double expected = oracle::riemann_infer(pp, et);
    CHECK(std::fabs(engine.infer(pp, et) - expected) <= 1e-3);
  }
}

TEST_CASE("inference at peak points is monotone") {
  Engine engine = Engine::with_defaults();
  const double pp_peaks[] = {0.0, 2.5, 5.0, 7.5, 10.0};
  const double et_peaks[] = {0.0, 7.5, 12.5, 22.5, 25.0};
  double np[5][5];
  for (int e = 0; e < 5; ++e)
    for (int p = 0; p < 5; ++p) np[e][p] = engine.infer(pp_peaks[p], et_peaks[e]);

  for (int e = 0; e < 5; ++e)
    for (int p = 0; p + 1 < 5; ++p) CHECK(np[e][p] <= np[e][p + 1] + 1e-9);
  for (int p = 0; p < 5; ++p)
    for (int e = 0; e + 1 < 5; ++e) CHECK(np[e][p] >= np[e + 1][p] - 1e-9);
}

TEST_CASE("inputs outside the universe clamp") {
  Engine engine = Engine::with_defaults();
  CHECK(engine.infer(-5.0, 30.0) == engine.infer(0.0, 25.0));
  CHECK(engine.infer(12.0, -1.0) == engine.infer(10.0, 0.0));
}

TEST_CASE("no-rule-fired surfaces as its own error") {
  Engine engine = Engine::with_defaults().with_rules_dsl(
      "IF priority IS very_low AND exec_time IS very_long THEN new_priority "
      "IS low\n");
  CHECK(engine.infer(0.0, 25.0) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK_THROWS_AS((void)engine.infer(10.0, 0.0), NoRuleFiredError);
}

TEST_CASE("config JSON reproduces the defaults") {
  std::string text =
      read_file(std::string(FUZZYSCHED_DATA_DIR) + "/default_geometry.json");
  Engine loaded = Engine::from_config_json(text);
  Engine defaults = Engine::with_defaults();
  CHECK(loaded.priority() == defaults.priority());
  CHECK(loaded.exec_time() == defaults.exec_time());
  CHECK(loaded.new_priority() == defaults.new_priority());
  CHECK(loaded.rules().size() == 25);
  CHECK(loaded.infer(5.0, 20.0) == defaults.infer(5.0, 20.0));
}

TEST_CASE("config JSON errors") {
  CHECK_THROWS_AS(Engine::from_config_json("{ not json"), ParseError);
  CHECK_THROWS_AS(Engine::from_config_json("{}"), ConfigError);
  CHECK_THROWS_AS(Engine::from_config_json(R"({"variables": {}})"),
                  ConfigError);

  try {
    Engine::from_config_json("{\n  \"variables\": [\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() > 0);
  }
}

TEST_CASE("config JSON with a custom rules override") {
  std::string text =
      read_file(std::string(FUZZYSCHED_DATA_DIR) + "/default_geometry.json");
  std::string dsl =
      "IF priority IS very_low THEN new_priority IS very_high\n"
      "IF priority IS very_high THEN new_priority IS very_low\n";
  Engine engine = Engine::from_config_json(text, dsl);
  CHECK(engine.rules().size() == 2);
  CHECK(engine.infer(0.0, 12.5) >
        engine.infer(10.0, 12.5));  // the override inverts the ranking
}

TEST_CASE("rules referencing unknown terms are rejected at construction") {
  Engine engine = Engine::with_defaults();
  CHECK_THROWS_AS(
      engine.with_rules_dsl("IF priority IS low THEN new_priority IS huge\n"),
      ParseError);
  RuleBase bad({"priority", "exec_time"}, "new_priority",
               {FuzzyRule{{{"priority", "nope"}}, {"new_priority", "low"}}});
  CHECK_THROWS_AS(engine.with_rules(bad), ConfigError);
}
