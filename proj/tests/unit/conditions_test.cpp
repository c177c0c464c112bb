#include <gtest/gtest.h>

#include "triples.hpp"
#include "gfactor/canonical.hpp"
#include "gfactor/census.hpp"
#include "gfactor/conditions.hpp"
#include "gfactor/construct.hpp"
#include "gfactor/error.hpp"
#include "gfactor/factorization.hpp"
#include "gfactor/generators.hpp"
#include "gfactor/linalg.hpp"

namespace gfactor {
namespace {

RuleStatus status_of(const ConditionReport& r, const std::string& id) {
  for (const auto& rule : r.rules) {
    if (rule.rule_id == id) return rule.status;
  }
  ADD_FAILURE() << "rule " << id << " missing";
  return RuleStatus::inconclusive;
}

TEST(Screen, EdgeIsRuledOutByParity) {
  const ConditionReport r = screen(complete(2));
  EXPECT_TRUE(r.ruled_out());
  EXPECT_EQ(status_of(r, "R1"), RuleStatus::ruled_out);
  EXPECT_FALSE(r.trivial);
}

TEST(Screen, TreesOnSevenVertices) {
  const ConditionReport r = screen(star(7));
  EXPECT_TRUE(r.ruled_out());
  EXPECT_EQ(status_of(r, "R3"), RuleStatus::ruled_out);
  EXPECT_EQ(status_of(r, "R2"), RuleStatus::ruled_out);
}

TEST(Screen, HexagonSurvives) {
  const ConditionReport r = screen(cycle(6));
  EXPECT_EQ(r.verdict, RuleStatus::inconclusive);
  for (const auto& rule : r.rules) EXPECT_EQ(rule.status, RuleStatus::pass) << rule.rule_id;
  EXPECT_EQ(r.graph_key, canonical_key(cycle(6)));
}

TEST(Screen, EdgelessIsTrivial) {
  const ConditionReport r = screen(edgeless(4));
  EXPECT_TRUE(r.trivial);
  EXPECT_FALSE(r.ruled_out());
}

TEST(Screen, ForestWithOddComponentCount) {
  const Graph g = disjoint_union(path(3), disjoint_union(path(3), path(2)));
  EXPECT_EQ(status_of(screen(g), "R4"), RuleStatus::ruled_out);
  EXPECT_EQ(status_of(screen(matching(2)), "R4"), RuleStatus::pass);
}

TEST(EvaluateRule, Examples) {
  EXPECT_EQ(evaluate_rule("R1", complete(3)).status, RuleStatus::ruled_out);
  EXPECT_EQ(evaluate_rule("R3", cycle(6)).status, RuleStatus::pass);
  EXPECT_EQ(evaluate_rule("R2", star(5)).status, RuleStatus::ruled_out);
  EXPECT_THROW(evaluate_rule("R9", cycle(4)), ParameterError);
}

TEST(Screen, NoRuledOutGraphFactorsOnSmallOrders) {
  SearchConfig cfg;
  cfg.include_trivial = true;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      if (screen(g).ruled_out()) EXPECT_TRUE(factor_search(g, cfg).witnesses.empty());
    }
  }
}

TEST(Screen, JsonRoundTrip) {
  const ConditionReport r = screen(star(5));
  EXPECT_EQ(condition_report_from_json(to_json(r)), r);
  nlohmann::json broken = to_json(r);
  broken.erase("verdict");
  try {
    condition_report_from_json(broken);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("verdict"), std::string::npos);
  }
}

TEST(Validate, HexagonTripleHasNoViolations) {
  const Factorization f =
      Factorization::make(triples::hexagon_product(), triples::two_triangles(), triples::matching_i_to_i_plus_3());
  EXPECT_TRUE(validate_factorization(f).empty());
  const ValidationResult detailed = validate_detailed(f);
  EXPECT_EQ(detailed.outcomes.size(), assertion_ids().size());
  int applicable = 0;
  for (const auto& o : detailed.outcomes) applicable += o.applicable;
  EXPECT_GE(applicable, 5);
}

TEST(Validate, TwoSquaresTripleHasNoViolations) {
  const Factorization f = Factorization::make(triples::two_squares(), triples::square_and_two_edges(),
                                              triples::two_edges_and_square());
  EXPECT_FALSE(is_connected(f.g));
  EXPECT_TRUE(validate_factorization(f).empty());
}

TEST(Validate, FlippedBitFailsAtTheProduct) {
  IntMatrix c = triples::matching_i_to_i_plus_3();
  c(0, 4) = 1;
  c(4, 0) = 1;
  EXPECT_THROW(Factorization::make(triples::hexagon_product(), triples::two_triangles(), c), ProductMismatch);
}

TEST(Validate, ProductIsCheckedBeforeAdjacency) {
  try {
    Factorization::make(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{0, 0}, {0, 0}});
    FAIL();
  } catch (const ProductMismatch& e) {
    EXPECT_EQ(e.row(), 0);
    EXPECT_EQ(e.col(), 0);
  }
}

TEST(Validate, EveryAssertionHasAReference) {
  for (const auto& id : assertion_ids()) EXPECT_FALSE(assertion_ref(id).empty()) << id;
}

TEST(Validate, ConstructionsValidate) {
  for (int n = 3; n <= 6; ++n) {
    EXPECT_TRUE(validate_factorization(cycle_product(n)).empty()) << n;
    EXPECT_TRUE(validate_factorization(disconnected_counterexample(n)).empty()) << n;
  }
  EXPECT_TRUE(validate_factorization(doubled_graph(complete(3))).empty());
  EXPECT_TRUE(validate_factorization(doubled_graph(cycle(5))).empty());
}

TEST(Validate, ViolationJsonRoundTrip) {
  const ViolationList list{{"V1", "3", "4", assertion_ref("V1")}};
  EXPECT_EQ(violation_list_from_json(to_json(list)), list);
}

TEST(WitnessJson, RoundTrip) {
  const Factorization f = cycle_product(3);
  const RawWitness raw = witness_from_json(witness_to_json(f));
  EXPECT_EQ(raw.a, f.a);
  EXPECT_EQ(raw.b, f.b);
  EXPECT_EQ(raw.c, f.c);
  EXPECT_FALSE(raw.trivial);
  EXPECT_THROW(witness_from_json(nlohmann::json{{"a", 1}}), SchemaError);
}

}  // namespace
}  // namespace gfactor
