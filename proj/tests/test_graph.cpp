#include "optseg/graph.hpp"

#include <gtest/gtest.h>

#include <set>

#include "optseg/enumerate.hpp"
#include "optseg/random_gen.hpp"

using namespace optseg;

namespace {

// P3 path via intervals: v0=[1,1], v1=[2,2], v2=[1,2]; edges 0-2, 1-2
WeightedGraph p3(const BigInt& w0, const BigInt& w1, const BigInt& w2) {
  return build_interval_graph({{{1, 1}, w0}, {{2, 2}, w1}, {{1, 2}, w2}});
}

VertexSet vs(const WeightedGraph& g, std::vector<int> members) {
  return make_vertex_set(g, std::move(members));
}

}  // namespace

// --- build_interval_graph ---

TEST(IntervalGraph, PathFromThreeIntervals) {
  const auto g = p3(1, 1, 1);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edges, (std::vector<std::pair<int, int>>{{0, 2}, {1, 2}}));
}

TEST(IntervalGraph, SingleInterval) {
  const auto g = build_interval_graph({{{3, 7}, BigInt(-2)}});
  EXPECT_EQ(g.order(), 1);
  EXPECT_TRUE(g.edges.empty());
}

TEST(IntervalGraph, DisjointIntervals) {
  const auto g = build_interval_graph({{{1, 2}, BigInt(1)}, {{5, 6}, BigInt(1)}});
  EXPECT_EQ(g.order(), 2);
  EXPECT_TRUE(g.edges.empty());
}

TEST(IntervalGraph, EmptyFamilyAllowed) {
  EXPECT_EQ(build_interval_graph({}).order(), 0);
}

TEST(IntervalGraph, RejectsEmptyInterval) {
  EXPECT_THROW(build_interval_graph({{{3, 2}, BigInt(1)}}), DomainError);
}

TEST(IntervalGraph, EdgesMatchNaiveRecomputation) {
  Rng rng(31415);
  for (int round = 0; round < 300; ++round) {
    const auto family = random_interval_family(rng, 12);
    const auto g = build_interval_graph(family);
    std::set<std::pair<int, int>> expected;
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = 0; j < family.size(); ++j)
        if (i != j && family[i].interval.intersects(family[j].interval))
          expected.insert({static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j))});
    const std::set<std::pair<int, int>> actual(g.edges.begin(), g.edges.end());
    EXPECT_EQ(actual, expected);
    // adjacency symmetric, no self-loops
    for (int v = 0; v < g.order(); ++v)
      for (int u : g.adj[v]) {
        EXPECT_NE(u, v);
        EXPECT_TRUE(std::binary_search(g.adj[u].begin(), g.adj[u].end(), v));
      }
  }
}

// --- build_segment_graph ---

TEST(SegmentGraph, TriangularVertexCount) {
  for (int n : {1, 2, 4, 7, 12}) {
    Sequence s{std::vector<std::int64_t>(n, 0)};
    const auto g = build_segment_graph(s, Scoring::constant(1));
    EXPECT_EQ(g.order(), n * (n + 1) / 2) << "N=" << n;
  }
}

TEST(SegmentGraph, N1HasOneVertexNoEdges) {
  const auto g = build_segment_graph(Sequence{{5}}, Scoring::constant(3));
  EXPECT_EQ(g.order(), 1);
  EXPECT_TRUE(g.edges.empty());
  EXPECT_EQ(g.weights[0], -3);
}

TEST(SegmentGraph, N2PathWithNegatedScores) {
  Sequence s{{9, 9}};
  auto f = Scoring::table({{{1, 1}, 5}, {{2, 2}, 5}, {{1, 2}, 1}}, std::nullopt);
  const auto g = build_segment_graph(s, f);
  ASSERT_EQ(g.order(), 3);
  // vertex order: (1,1), (1,2), (2,2)
  ASSERT_TRUE(g.segments.has_value());
  EXPECT_EQ((*g.segments)[0], (Segment{1, 1}));
  EXPECT_EQ((*g.segments)[1], (Segment{1, 2}));
  EXPECT_EQ((*g.segments)[2], (Segment{2, 2}));
  EXPECT_EQ(g.weights[0], -5);
  EXPECT_EQ(g.weights[1], -1);
  EXPECT_EQ(g.weights[2], -5);
  EXPECT_EQ(g.edges, (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
}

TEST(SegmentGraph, EdgesAreExactlyOverlaps) {
  Sequence s{std::vector<std::int64_t>(5, 1)};
  const auto g = build_segment_graph(s, Scoring::constant(1));
  ASSERT_TRUE(g.segments.has_value());
  std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      const bool has_edge = edges.count({u, v}) == 1;
      EXPECT_EQ(has_edge, (*g.segments)[u].overlaps((*g.segments)[v]));
    }
}

// --- predicates ---

TEST(Predicates, IndependenceExamples) {
  const auto g = p3(1, 1, 1);
  EXPECT_TRUE(is_independent(g, vs(g, {})));
  EXPECT_FALSE(is_independent(g, vs(g, {0, 2})));
  EXPECT_TRUE(is_independent(g, vs(g, {0, 1})));
}

TEST(Predicates, DominationExamples) {
  const auto g = p3(1, 1, 1);
  EXPECT_TRUE(is_dominating(g, vs(g, {0, 1, 2})));
  EXPECT_FALSE(is_dominating(g, vs(g, {})));
  EXPECT_TRUE(is_dominating(g, vs(g, {2})));
}

TEST(Predicates, MaximalityAndMinimality) {
  const auto g = p3(1, 1, 1);
  EXPECT_TRUE(is_maximal_independent(g, vs(g, {0, 1})));
  EXPECT_FALSE(is_maximal_independent(g, vs(g, {0})));
  EXPECT_FALSE(is_maximal_independent(g, vs(g, {})));
  EXPECT_TRUE(is_minimal_dominating(g, vs(g, {2})));
  EXPECT_TRUE(is_minimal_dominating(g, vs(g, {0, 1})));
  EXPECT_FALSE(is_minimal_dominating(g, vs(g, {0, 1, 2})));
}

TEST(Predicates, UnknownVertexIsRangeError) {
  const auto g = p3(1, 1, 1);
  EXPECT_THROW(make_vertex_set(g, {3}), RangeError);
  VertexSet bad{{7}, BigInt(0)};  // bypasses make_vertex_set
  EXPECT_THROW(is_independent(g, bad), RangeError);
  EXPECT_THROW(is_dominating(g, bad), RangeError);
}

// --- mwids_bruteforce ---

TEST(MwidsBruteforce, P3PicksEndpoints) {
  const auto g = make_graph({BigInt(-5), BigInt(-1), BigInt(-5)}, {{0, 1}, {1, 2}});
  const auto best = mwids_bruteforce(g);
  EXPECT_EQ(best.total_weight, -10);
  EXPECT_EQ(best.members, (std::vector<int>{0, 2}));
}

TEST(MwidsBruteforce, SingleVertex) {
  const auto g = make_graph({BigInt(7)}, {});
  const auto best = mwids_bruteforce(g);
  EXPECT_EQ(best.total_weight, 7);
  EXPECT_EQ(best.members, (std::vector<int>{0}));
}

TEST(MwidsBruteforce, IsolatedVerticesAreForced) {
  const auto g = make_graph({BigInt(-3), BigInt(-4)}, {});
  const auto best = mwids_bruteforce(g);
  EXPECT_EQ(best.total_weight, -7);
  EXPECT_EQ(best.members, (std::vector<int>{0, 1}));
}

TEST(MwidsBruteforce, EmptyGraphGivesEmptySet) {
  const auto best = mwids_bruteforce(make_graph({}, {}));
  EXPECT_TRUE(best.members.empty());
  EXPECT_EQ(best.total_weight, 0);
}

TEST(MwidsBruteforce, LexicographicTieBreak) {
  // K2 with equal weights: {0} and {1} tie at -1
  const auto g = make_graph({BigInt(-1), BigInt(-1)}, {{0, 1}});
  EXPECT_EQ(mwids_bruteforce(g).members, (std::vector<int>{0}));
}

TEST(MwidsBruteforce, ResultIsIndependentDominating) {
  Rng rng(8675309);
  for (int round = 0; round < 200; ++round) {
    const auto g = random_er_graph(rng, 10);
    const auto best = mwids_bruteforce(g);
    EXPECT_TRUE(is_independent(g, best));
    EXPECT_TRUE(is_dominating(g, best));
  }
}

// --- mwids_interval ---

TEST(MwidsInterval, P3MatchesBruteforce) {
  const auto g = p3(-5, -5, -1);
  EXPECT_EQ(mwids_interval(g).total_weight, -10);
}

TEST(MwidsInterval, SegmentGraphOfTwoElements) {
  Sequence s{{9, 9}};
  auto f = Scoring::table({{{1, 1}, 5}, {{2, 2}, 5}, {{1, 2}, 1}}, std::nullopt);
  const auto g = build_segment_graph(s, f);
  const auto best = mwids_interval(g);
  EXPECT_EQ(best.total_weight, -10);
  const auto p = solution_to_segmentation(g, best);
  EXPECT_EQ(p, Segmentation({{{1, 1}, {2, 2}}}));
}

TEST(MwidsInterval, CliquePicksCheapestSingleVertex) {
  const auto g =
      build_interval_graph({{{1, 10}, BigInt(-2)}, {{2, 9}, BigInt(-9)}, {{3, 8}, BigInt(-4)}});
  const auto best = mwids_interval(g);
  EXPECT_EQ(best.total_weight, -9);
  EXPECT_EQ(best.members, (std::vector<int>{1}));
}

TEST(MwidsInterval, RequiresIntervalModel) {
  const auto g = make_graph({BigInt(1), BigInt(1)}, {{0, 1}});
  EXPECT_THROW(mwids_interval(g), ContractError);
}

TEST(MwidsInterval, EmptyGraphGivesEmptySet) {
  const auto best = mwids_interval(build_interval_graph({}));
  EXPECT_TRUE(best.members.empty());
  EXPECT_EQ(best.total_weight, 0);
}

TEST(MwidsInterval, AgreesWithBruteforceOnRandomFamilies) {
  Rng rng(271828);
  for (int round = 0; round < 500; ++round) {
    const auto family = random_interval_family(rng, 14);
    const auto g = build_interval_graph(family);
    const auto fast = mwids_interval(g);
    const auto slow = mwids_bruteforce(g);
    ASSERT_EQ(fast.total_weight, slow.total_weight) << "round " << round;
    EXPECT_TRUE(is_independent(g, fast));
    EXPECT_TRUE(is_dominating(g, fast));
    EXPECT_TRUE(is_maximal_independent(g, fast));
  }
}

TEST(MwidsInterval, DegenerateFamilies) {
  // duplicates: exactly one copy joins, plus the far vertex
  {
    const auto g = build_interval_graph(
        {{{0, 0}, BigInt(4)}, {{0, 0}, BigInt(2)}, {{1, 1}, BigInt(3)}});
    const auto best = mwids_interval(g);
    EXPECT_EQ(best.total_weight, 5);  // cheaper duplicate + [1,1]
    EXPECT_EQ(best.total_weight, mwids_bruteforce(g).total_weight);
  }
  // fully nested chain: any single interval dominates all of them
  {
    const auto g = build_interval_graph(
        {{{0, 9}, BigInt(5)}, {{1, 8}, BigInt(-2)}, {{2, 7}, BigInt(7)}, {{3, 6}, BigInt(0)}});
    const auto best = mwids_interval(g);
    EXPECT_EQ(best.total_weight, -2);
    EXPECT_EQ(best.members, (std::vector<int>{1}));
  }
  // touching endpoints overlap (closed intervals), so [0,1],[1,2] conflict
  {
    const auto g = build_interval_graph({{{0, 1}, BigInt(-1)}, {{1, 2}, BigInt(-1)}});
    EXPECT_EQ(g.edges.size(), 1u);
    EXPECT_EQ(mwids_interval(g).total_weight, -1);
  }
}

TEST(MwidsInterval, StressAgainstBruteforceWithClusteredCoordinates) {
  // tight coordinate ranges force duplicates, nestings and long cliques
  Rng rng(616263);
  for (int round = 0; round < 400; ++round) {
    const auto family = random_interval_family(rng, 13, rng.uniform(1, 6));
    const auto g = build_interval_graph(family);
    ASSERT_EQ(mwids_interval(g).total_weight, mwids_bruteforce(g).total_weight)
        << "round " << round;
  }
}

// --- solution_to_segmentation ---

TEST(SolutionMapping, WholeSequenceVertex) {
  Sequence s{{1, 2, 3}};
  const auto g = build_segment_graph(s, Scoring::constant(1));
  // vertex for (1,3) dominates everything (it overlaps every segment)
  int whole = -1;
  for (int v = 0; v < g.order(); ++v)
    if ((*g.segments)[v] == (Segment{1, 3})) whole = v;
  ASSERT_NE(whole, -1);
  const auto p = solution_to_segmentation(g, vs(g, {whole}));
  EXPECT_EQ(p, Segmentation({{{1, 3}}}));
}

TEST(SolutionMapping, RejectsNonDominatingSet) {
  Sequence s{{9, 9}};
  const auto g = build_segment_graph(s, Scoring::constant(1));
  // {(1,1)} alone leaves (2,2) undominated
  EXPECT_THROW(solution_to_segmentation(g, vs(g, {0})), ContractError);
}

TEST(SolutionMapping, RequiresProvenance) {
  const auto g = build_interval_graph({{{1, 2}, BigInt(1)}});
  EXPECT_THROW(solution_to_segmentation(g, vs(g, {0})), ContractError);
}

// --- Lemma-2-style equivalence and the reduction ---

TEST(GraphProperties, IndependentDominatingIffMaximalIndependent) {
  Rng rng(1000003);
  for (int graphs = 0; graphs < 200; ++graphs) {
    // sweep edge densities so sparse graphs (isolated vertices) and near
    // cliques both show up
    const double edge_p = 0.1 + 0.2 * (graphs % 5);
    const auto g = random_er_graph(rng, 12, edge_p);
    const int n = g.order();
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
      std::vector<int> members;
      for (int v = 0; v < n; ++v)
        if (sub >> v & 1) members.push_back(v);
      const auto set = make_vertex_set(g, std::move(members));
      const bool ind_dom = is_independent(g, set) && is_dominating(g, set);
      ASSERT_EQ(ind_dom, is_maximal_independent(g, set));
      if (ind_dom) {
        ASSERT_TRUE(is_minimal_dominating(g, set));
      }
    }
  }
}

TEST(Reduction, MwidsOfSegmentGraphSolvesSegmentation) {
  Rng rng(5550123);
  for (int round = 0; round < 500; ++round) {
    const int n = rng.uniform(1, 8);
    const Sequence s = random_sequence(rng, n);
    const Scoring f = random_table_scoring(rng, n);
    const auto brute = solve_bruteforce(s, f);
    const auto g = build_segment_graph(s, f);
    const auto best = mwids_interval(g);
    ASSERT_EQ(-best.total_weight, brute.value) << "N=" << n << " round " << round;
    const auto p = solution_to_segmentation(g, best);
    ASSERT_TRUE(validate_segmentation(s, p).ok());
    ASSERT_EQ(segmentation_value(s, p, f), -best.total_weight);
  }
}

TEST(Reduction, MaximalIndependentSetsAreSegmentations) {
  for (int n = 1; n <= 6; ++n) {
    Sequence s{std::vector<std::int64_t>(n, 0)};
    const auto g = build_segment_graph(s, Scoring::constant(1));
    std::size_t count = 0;
    for_each_maximal_independent_set(g, [&](std::uint64_t chosen) {
      ++count;
      std::vector<int> members;
      for (int v = 0; v < g.order(); ++v)
        if (chosen >> v & 1) members.push_back(v);
      const auto p = solution_to_segmentation(g, make_vertex_set(g, std::move(members)));
      EXPECT_TRUE(validate_segmentation(s, p).ok());
    });
    EXPECT_EQ(count, std::uint64_t{1} << (n - 1)) << "N=" << n;
  }
}
