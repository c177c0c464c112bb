#include <gtest/gtest.h>

#include <random>

#include "triples.hpp"
#include "gfactor/canonical.hpp"
#include "gfactor/census.hpp"
#include "gfactor/construct.hpp"
#include "gfactor/error.hpp"
#include "gfactor/generators.hpp"
#include "gfactor/graph6.hpp"
#include "gfactor/linalg.hpp"
#include "gfactor/search.hpp"
#include "gfactor/spectral.hpp"
#include "oracles.hpp"

namespace gfactor {
namespace {

SearchConfig all_witnesses() {
  SearchConfig cfg;
  cfg.include_trivial = true;
  cfg.node_limit = UINT64_MAX;
  return cfg;
}

std::vector<std::string> row_strings(const std::vector<Factorization>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) {
    std::string s;
    for (const auto& r : matrix_rows(w.b)) s += r;
    s += '|';
    for (const auto& r : matrix_rows(w.c)) s += r;
    out.push_back(s);
  }
  return out;
}

TEST(Search, HexagonFactorsIntoTrianglesAndMatching) {
  const SearchResult r = factor_search(cycle(6));
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_TRUE(r.stats.exhausted);
  const FactorPair want{canonical_key(disjoint_copies(complete(3), 2)), canonical_key(matching(3))};
  const auto pairs = dedup_pairs(r.witnesses);
  EXPECT_TRUE(pairs.contains(FactorPair{std::min(want.first, want.second), std::max(want.first, want.second)}));
}

TEST(Search, WitnessesMultiplyExactly) {
  for (const auto& g : enumerate_graphs(6)) {
    for (const auto& w : factor_search(g).witnesses) {
      ASSERT_EQ(multiply(w.b, w.c), fix_labeling(g)) << encode_graph6(g);
      ASSERT_TRUE(as_adjacency(w.b));
      ASSERT_TRUE(as_adjacency(w.c));
    }
  }
}

TEST(Search, MatchesNaiveOracleUpToOrderFive) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      const SearchResult r = factor_search(g, all_witnesses());
      EXPECT_TRUE(r.stats.exhausted);
      ASSERT_EQ(row_strings(r.witnesses), row_strings(factor_naive(g))) << encode_graph6(g);
    }
  }
}

TEST(Search, DisablingAnyPruneRuleKeepsTheWitnessSet) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const auto baseline = factor_search(g, all_witnesses());
    for (int rule = 0; rule < 4; ++rule) {
      SearchConfig cfg = all_witnesses();
      bool* flags[] = {&cfg.pruning.entry, &cfg.pruning.diagonal, &cfg.pruning.degree, &cfg.pruning.component_degree};
      *flags[rule] = false;
      const auto relaxed = factor_search(g, cfg);
      ASSERT_EQ(row_strings(relaxed.witnesses), row_strings(baseline.witnesses))
          << encode_graph6(g) << " without P" << rule + 1;
      EXPECT_GE(relaxed.stats.nodes_expanded, baseline.stats.nodes_expanded);
    }
  }
}

TEST(Search, TreesHaveNoWitness) {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> seq(static_cast<std::size_t>(n - 2));
      for (auto& x : seq) x = static_cast<int>(rng() % static_cast<unsigned>(n));
      const auto r = factor_search(tree_from_pruefer(seq));
      EXPECT_TRUE(r.witnesses.empty());
      EXPECT_TRUE(r.stats.exhausted);
    }
  }
}

TEST(Search, NodeLimitGivesPartialResult) {
  SearchConfig cfg;
  cfg.node_limit = 3;
  const SearchResult r = factor_search(cycle(6), cfg);
  EXPECT_FALSE(r.stats.exhausted);
  EXPECT_LE(r.stats.nodes_expanded, 4U);
  EXPECT_EQ(is_factorizable(cycle(6), cfg).verdict, Verdict::unknown);
}

TEST(Search, OrderCap) {
  EXPECT_THROW(factor_search(cycle(8)), UnsupportedSizeError);
  EXPECT_THROW(factor_naive(cycle(6)), UnsupportedSizeError);
  EXPECT_EQ(is_factorizable(cycle(8)).verdict, Verdict::unknown);
}

TEST(Search, TrivialWitnessPolicy) {
  // Edgeless graphs of order 2 and 3 have only zero-factor witnesses.
  const auto two = factor_search(edgeless(2));
  ASSERT_FALSE(two.witnesses.empty());
  for (const auto& w : two.witnesses) EXPECT_TRUE(w.trivial);
  for (const auto& w : factor_search(edgeless(4)).witnesses) EXPECT_FALSE(w.trivial);
  for (const auto& w : factor_search(cycle(6)).witnesses) EXPECT_FALSE(w.trivial);
}

TEST(DedupPairs, EdgelessPair) {
  const auto ws = factor_search(edgeless(2), all_witnesses()).witnesses;
  EXPECT_EQ(ws.size(), 3U);
  const auto pairs = dedup_pairs(ws);
  EXPECT_EQ(pairs.size(), 2U);
  EXPECT_TRUE(dedup_pairs({}).empty());
}

TEST(Factorizable, Examples) {
  const auto c6 = is_factorizable(cycle(6));
  EXPECT_EQ(c6.verdict, Verdict::yes);
  ASSERT_TRUE(c6.witness);
  const auto k2 = is_factorizable(complete(2));
  EXPECT_EQ(k2.verdict, Verdict::no);
  EXPECT_EQ(k2.stats.nodes_expanded, 0U);
  const auto k1 = is_factorizable(Graph(1));
  EXPECT_EQ(k1.verdict, Verdict::yes);
  ASSERT_TRUE(k1.witness);
  EXPECT_TRUE(k1.witness->trivial);
}

TEST(Verdict, Strings) {
  for (Verdict v : {Verdict::yes, Verdict::no, Verdict::unknown}) EXPECT_EQ(verdict_from_string(to_string(v)), v);
  EXPECT_THROW(verdict_from_string("maybe"), ParameterError);
}

TEST(Construct, CycleProductMatchesHexagonTriple) {
  const Factorization f = cycle_product(3);
  EXPECT_EQ(f.b, triples::matching_i_to_i_plus_3());
  EXPECT_EQ(f.c, triples::two_triangles());
  EXPECT_EQ(canonical_key(f.g), canonical_key(cycle(6)));
  EXPECT_EQ(multiply(f.c, f.b), f.a);
  EXPECT_EQ(f.a, triples::hexagon_product());
}

TEST(Construct, DoubledTriangle) {
  const Factorization f = doubled_graph(complete(3));
  EXPECT_EQ(f.g, disjoint_copies(complete(3), 2));
  EXPECT_TRUE(is_connected(f.h));
  EXPECT_NEAR(lambda_max(f.h) * lambda_max(f.k), 2.0, 1e-9);
  EXPECT_THROW(doubled_graph(cycle(4)), PreconditionError);
  EXPECT_THROW(doubled_graph(matching(2)), PreconditionError);
}

TEST(Construct, DisconnectedCounterexample) {
  const Factorization f = disconnected_counterexample(3);
  EXPECT_EQ(describe(f.g), "2C6");
  EXPECT_NEAR(lambda_max(f.g), 2.0, 1e-9);
  EXPECT_NEAR(lambda_max(f.h) * lambda_max(f.k), 4.0, 1e-9);
  EXPECT_THROW(disconnected_counterexample(2), ParameterError);
}

TEST(Construct, Dispatcher) {
  EXPECT_EQ(construct(ConstructionKind::cycle_product, {4, std::nullopt}).a, cycle_product(4).a);
  EXPECT_THROW(construct(ConstructionKind::doubled_graph, {}), ParameterError);
}

}  // namespace
}  // namespace gfactor
