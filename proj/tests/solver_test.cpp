#include <gtest/gtest.h>

#include "squarefactor/harness.hpp"
#include "squarefactor/solver.hpp"

using namespace sqf;

namespace {

void expect_factor(const Graph& g, const EvenFactor& f, int s) {
  ASSERT_EQ(f.host.edge_set(), square(g).edge_set());
  VerificationReport r = verify_factor(f.host, f, s);
  ASSERT_TRUE(r.valid()) << format_graph(g);
}

// c = 0 joined to every vertex of an S(K_{1,3}) on 1..7, with a tail 0-8-9.
Graph leaf_trivial_graph() {
  Graph g(10, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}, {0, 8}, {8, 9}});
  for (Vertex v = 1; v <= 7; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace

TEST(Solver, PathOfSeven) {
  SolverStats stats;
  EvenFactor f = solve_star_free(path_graph(7), 1, &stats);
  expect_factor(path_graph(7), f, 1);
  EXPECT_EQ(stats.path_base, 1);
}

TEST(Solver, StarWithFiveLeaves) {
  const Graph g = star_graph(5);
  EvenFactor f = solve(g, 2);
  expect_factor(g, f, 2);
  // The square is K6, so a hamiltonian cycle exists as well.
  EXPECT_EQ(square(g).edge_set(), complete_graph(6).edge_set());
  expect_factor(g, solve(g, 1), 1);
}

TEST(Solver, SubdividedStarWithLargerS) {
  const Graph g = make_star_subdivision(1);
  expect_factor(g, solve_star_free(g, 2), 2);
  try {
    solve(g, 1);
    FAIL() << "expected HypothesisViolated";
  } catch (const HypothesisViolated& e) {
    EXPECT_EQ(e.witness().center, 0);
    EXPECT_TRUE(is_induced_star(g, e.witness()));
  }
}

TEST(Solver, Figure1Violates) {
  const Graph g = figure1_graph();
  EXPECT_THROW(solve_condition(g, 1), HypothesisViolated);
  EXPECT_THROW(solve_star_free(g, 1), PreconditionError);
}

TEST(Solver, CaseGUsesMiddleBlock) {
  const Graph g = case_g_graph();
  SolverStats stats;
  EvenFactor f = solve_condition(g, 1, &stats);
  expect_factor(g, f, 1);
  EXPECT_EQ(stats.middle_blocks, 1);
  EXPECT_EQ(stats.trivial_sides + stats.nontrivial_sides, 2);
}

TEST(Solver, LeafBlockInsideNeighbourhood) {
  const Graph g = leaf_trivial_graph();
  ASSERT_FALSE(is_star_free(g, 1));
  ASSERT_TRUE(satisfies_block_condition(g, 1).holds);
  SolverStats stats;
  expect_factor(g, solve_condition(g, 1, &stats), 1);
  EXPECT_EQ(stats.leaf_trivial, 1);
}

TEST(Solver, Preconditions) {
  EXPECT_THROW(solve(path_graph(4), 0), PreconditionError);
  EXPECT_THROW(solve(path_graph(2), 1), PreconditionError);
  EXPECT_THROW(solve(Graph(3, {{0, 1}}), 1), PreconditionError);
  EXPECT_THROW(solve_star_free(Graph(70), 1), Error);
}

TEST(Solver, AllConnectedGraphsUpToSix) {
  for (int n = 3; n <= 6; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      for (int s = 1; s <= 2; ++s) {
        ASSERT_EQ(check_theorem1(g, s), "") << format_graph(g);
      }
    });
  }
}

TEST(Solver, RandomStarFreeGraphsReachEveryStep) {
  SolverStats stats;
  int solved = 0;
  for (std::uint64_t i = 0; i < 3000; ++i) {
    std::mt19937_64 rng = instance_rng(5, 0, i);
    const int s = uniform_int(rng, 1, 3);
    const int n = uniform_int(rng, 3, 22);
    Graph g = coin(rng, 0.5) ? random_degree_capped(n, 2 * s, 0.2, rng) : random_connected(n, 0.15, rng);
    if (!is_connected(g) || !is_star_free(g, s)) continue;
    EvenFactor f = solve_star_free(g, s, &stats);
    ASSERT_EQ(check_solution(g, f, s), "") << format_graph(g) << "s=" << s;
    ++solved;
  }
  EXPECT_GT(solved, 1000);
  EXPECT_GT(stats.small_base, 0);
  EXPECT_GT(stats.biconnected_base, 0);
  EXPECT_GT(stats.path_base, 0);
  EXPECT_GT(stats.cut_vertex_steps, 0);
  EXPECT_GT(stats.closed_branches, 0);
  EXPECT_GT(stats.open_branches, 0);
  EXPECT_GT(stats.pendant_neighbours, 0);
  EXPECT_GT(stats.max_cover_paths, 1);
}

TEST(Solver, RandomBlockGraphsUnderCondition) {
  SolverStats stats;
  int solved = 0;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    std::mt19937_64 rng = instance_rng(6, 0, i);
    Graph g = random_block_graph(uniform_int(rng, 7, 18), rng);
    if (is_star_free(g, 1) || !satisfies_block_condition(g, 1).holds) continue;
    EvenFactor f = solve_condition(g, 1, &stats);
    ASSERT_EQ(check_solution(g, f, 1), "") << format_graph(g);
    ++solved;
  }
  EXPECT_GT(solved, 50);
  EXPECT_GT(stats.block_only + stats.leaf_nontrivial + stats.middle_blocks, 0);
  EXPECT_GT(stats.leaf_nontrivial, 0);
  EXPECT_GT(stats.middle_blocks, 0);
}

TEST(Solver, ConditionMatchesOracleOnSmallBlockGraphs) {
  int checked = 0;
  for (std::uint64_t i = 0; i < 400 && checked < 40; ++i) {
    std::mt19937_64 rng = instance_rng(7, 0, i);
    Graph g = random_block_graph(uniform_int(rng, 8, 12), rng);
    if (is_star_free(g, 1) || !satisfies_block_condition(g, 1).holds) continue;
    ASSERT_EQ(check_theorem2(g, 1, true), "") << format_graph(g);
    ++checked;
  }
  EXPECT_GT(checked, 10);
}
