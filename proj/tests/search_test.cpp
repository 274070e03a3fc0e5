#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brute.hpp"
#include "squarefactor/harness.hpp"
#include "squarefactor/search.hpp"

using namespace sqf;

namespace {

// Exhaustive: does some edge subset of host form a [2,2s]-factor?
bool brute_factor_exists(const Graph& host, int s) {
  const std::vector<Edge> edges = host.edges();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    EdgeSet f(host.order());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((mask >> i) & 1U) f.insert(edges[i]);
    }
    if (verify_factor(host, f, s).valid()) return true;
  }
  return false;
}

// Every cyclic order of the vertices that is a hamiltonian cycle of square(g)
// and meets the incidence conditions at (y, z).
bool brute_fleischner_exists(const Graph& g, Vertex y, Vertex z) {
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != y) rest.push_back(v);
  }
  do {
    Trail c{{y}};
    c.walk.insert(c.walk.end(), rest.begin(), rest.end());
    c.walk.push_back(y);
    if (check_fleischner_cycle(g, c, y, z)) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

int brute_min_path_cover(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  int best = g.order();
  do {
    int paths = g.order() == 0 ? 0 : 1;
    for (std::size_t i = 1; i < order.size(); ++i) paths += g.adjacent(order[i - 1], order[i]) ? 0 : 1;
    best = std::min(best, paths);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

void expect_hamiltonian(const Graph& host, const Trail& c) {
  ASSERT_TRUE(c.closed());
  ASSERT_EQ(static_cast<int>(c.walk.size()), host.order() + 1);
  ASSERT_EQ(VertexSet::of(c.walk), host.vertices());
  ASSERT_EQ(trail_problem(host, c, 1), "");
}

}  // namespace

TEST(Oracle, SubdividedStarHasNoFactor) {
  EXPECT_FALSE(oracle_square_factor(make_star_subdivision(1), 1).has_value());
  EXPECT_FALSE(oracle_square_factor(make_star_subdivision(2), 2).has_value());
}

TEST(Oracle, PathOfFour) {
  auto f = oracle_square_factor(path_graph(4), 1);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(verify_factor(square(path_graph(4)), *f, 1).valid());
  // The only hamiltonian cycle of P4^2 is 0-1-3-2-0.
  EdgeSet expected(4);
  for (Edge e : std::vector<Edge>{{0, 1}, {1, 3}, {2, 3}, {0, 2}}) expected.insert(e);
  EXPECT_EQ(*f, expected);
}

TEST(Oracle, Figure1HasNoFactor) { EXPECT_FALSE(oracle_square_factor(figure1_graph(), 1).has_value()); }

TEST(Oracle, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(17);
  int positive = 0;
  int negative = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Graph host = brute::random_graph(n, 25 + static_cast<int>(rng() % 60), rng);
    if (host.size() > 15) continue;
    const int s = 1 + static_cast<int>(rng() % 2);
    auto f = oracle_factor(host, s);
    const bool exists = brute_factor_exists(host, s);
    ASSERT_EQ(f.has_value(), exists) << format_graph(host) << "s=" << s;
    if (f) {
      ASSERT_TRUE(verify_factor(host, *f, s).valid());
      ++positive;
    } else {
      ++negative;
    }
  }
  EXPECT_GT(positive, 10);
  EXPECT_GT(negative, 10);
}

TEST(Oracle, SizeCapAndBadS) {
  EXPECT_THROW(oracle_factor(complete_graph(kOracleMaxVertices + 1), 1), SizeCapError);
  EXPECT_THROW(oracle_factor(complete_graph(3), 0), PreconditionError);
}

TEST(Hamiltonian, Examples) {
  auto c = hamiltonian_cycle(complete_graph(4));
  ASSERT_TRUE(c.has_value());
  expect_hamiltonian(complete_graph(4), *c);
  EXPECT_EQ(c->front(), 0);
  EXPECT_FALSE(hamiltonian_cycle(path_graph(4)).has_value());
  EXPECT_FALSE(hamiltonian_cycle(complete_graph(2)).has_value());
  auto c5 = hamiltonian_cycle(cycle_graph(5), 2);
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(c5->front(), 2);
  // Petersen graph: no hamiltonian cycle.
  Graph petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  EXPECT_FALSE(hamiltonian_cycle(petersen).has_value());
}

TEST(Fleischner, FourCycleAdjacentPair) {
  const Graph c4 = cycle_graph(4);
  Trail c = fleischner_cycle(c4, 0, 1);
  EXPECT_TRUE(check_fleischner_cycle(c4, c, 0, 1));
  for (std::size_t i = 1; i < c.walk.size(); ++i) EXPECT_TRUE(c4.adjacent(c.walk[i - 1], c.walk[i]));
}

TEST(Fleischner, K4MinusEdgeAllPairs) {
  Graph g = complete_graph(4);
  Graph k4e(4);
  for (Edge e : g.edges()) {
    if (e != Edge{2, 3}) k4e.add_edge(e.u, e.v);
  }
  for (Vertex y = 0; y < 4; ++y) {
    for (Vertex z = 0; z < 4; ++z) {
      Trail c = fleischner_cycle(k4e, y, z);
      EXPECT_EQ(c.front(), y);
      EXPECT_TRUE(check_fleischner_cycle(k4e, c, y, z));
    }
  }
}

TEST(Fleischner, AllTwoConnectedGraphsUpToSix) {
  for (int n = 3; n <= 6; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      if (!is_biconnected(g)) return;
      for (Vertex y = 0; y < n; ++y) {
        for (Vertex z = 0; z < n; ++z) {
          Trail c = fleischner_cycle(g, y, z);
          ASSERT_TRUE(check_fleischner_cycle(g, c, y, z)) << format_graph(g) << y << ' ' << z;
        }
      }
    });
  }
}

TEST(Fleischner, SearchAgreesWithPermutationCheck) {
  // On arbitrary connected graphs the search must find a cycle exactly when one exists.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph g = brute::random_connected(n, 30 + static_cast<int>(rng() % 40), rng);
    const Vertex y = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    const Vertex z = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    auto c = detail::CycleSearch(square(g), g, y, z).run();
    ASSERT_EQ(c.has_value(), brute_fleischner_exists(g, y, z)) << format_graph(g) << y << ' ' << z;
    if (c) {
      ASSERT_TRUE(check_fleischner_cycle(g, *c, y, z));
    }
  }
}

TEST(Fleischner, CheckerRejectsBadCycles) {
  const Graph c5 = cycle_graph(5);
  // 0-2-4-1-3-0 is hamiltonian in C5^2 = K5 but uses no C5 edge at 0.
  EXPECT_FALSE(check_fleischner_cycle(c5, Trail{{0, 2, 4, 1, 3, 0}}, 0, 1));
  EXPECT_TRUE(check_fleischner_cycle(c5, Trail{{0, 1, 2, 3, 4, 0}}, 0, 1));
  EXPECT_FALSE(check_fleischner_cycle(c5, Trail{{0, 1, 2, 3, 0}}, 0, 1));
  // y and z adjacent: the edge at z must differ from the two at y.
  const Graph c4 = cycle_graph(4);
  EXPECT_TRUE(check_fleischner_cycle(c4, Trail{{0, 1, 2, 3, 0}}, 0, 1));
  Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  // Around 1 only the edge 0-1 is in the graph, and it is one of y=0's edges.
  EXPECT_FALSE(check_fleischner_cycle(paw, Trail{{0, 1, 3, 2, 0}}, 0, 1));
}

TEST(Fleischner, RequiresTwoConnected) {
  EXPECT_THROW(fleischner_cycle(path_graph(4), 0, 1), PreconditionError);
  EXPECT_THROW(fleischner_cycle(cycle_graph(4), 0, 9), PreconditionError);
}

TEST(DoublePathCover, FourCycle) {
  // c1 = 0, a1 = 1, c2 = 2, a2 = 3.
  const Graph h = cycle_graph(4);
  DoublePathCover cover = block_double_path_cover(h, 0, 2);
  ASSERT_FALSE(cover.first.empty());
  EXPECT_TRUE(h.adjacent(cover.first.front(), 0));
  EXPECT_TRUE(h.adjacent(cover.first.back(), 2));
  EXPECT_EQ(cover.second.front(), 2);
  EXPECT_EQ(cover.second.back(), 0);
  EXPECT_EQ(cover.first.size() + cover.second.size(), 4U);
}

TEST(DoublePathCover, CompleteGraph) {
  const Graph h = complete_graph(4);
  DoublePathCover cover = block_double_path_cover(h, 0, 1);
  EXPECT_EQ(cover.first.size(), 2U);
  EXPECT_EQ(cover.second, (std::vector<Vertex>{1, 0}));
}

TEST(DoublePathCover, PostconditionsOnSmallBlocks) {
  for (int n = 3; n <= 6; ++n) {
    for_each_graph(n, [&](const Graph& h) {
      if (!is_biconnected(h)) return;
      const Graph sq = square(h);
      for (Vertex c1 = 0; c1 < n; ++c1) {
        for (Vertex c2 = 0; c2 < n; ++c2) {
          if (c1 == c2) continue;
          DoublePathCover cover = block_double_path_cover(h, c1, c2);
          ASSERT_FALSE(cover.first.empty());
          ASSERT_TRUE(h.adjacent(cover.first.front(), c1));
          ASSERT_TRUE(h.adjacent(cover.first.back(), c2));
          ASSERT_EQ(cover.second.front(), c2);
          ASSERT_EQ(cover.second.back(), c1);
          VertexSet seen;
          for (const auto* path : {&cover.first, &cover.second}) {
            for (std::size_t i = 0; i < path->size(); ++i) {
              ASSERT_FALSE(seen.contains((*path)[i]));
              seen.insert((*path)[i]);
              if (i > 0) {
                ASSERT_TRUE(sq.adjacent((*path)[i - 1], (*path)[i]));
              }
            }
          }
          ASSERT_EQ(seen, h.vertices());
        }
      }
    });
  }
  EXPECT_THROW(block_double_path_cover(cycle_graph(4), 1, 1), PreconditionError);
}

TEST(PathCover, Examples) {
  EXPECT_EQ(path_cover(complete_graph(3)).size(), 1U);
  EXPECT_EQ(path_cover(Graph(3)).size(), 3U);
  auto p4 = path_cover(path_graph(4));
  ASSERT_EQ(p4.size(), 1U);
  EXPECT_EQ(p4[0].size(), 4U);
  EXPECT_TRUE(path_cover(Graph(0)).empty());
  EXPECT_THROW(path_cover(Graph(kPathCoverMaxVertices + 1)), SizeCapError);
}

TEST(PathCover, MinimumAndBoundedByAlpha) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = brute::random_graph(n, static_cast<int>(rng() % 100), rng);
    const auto cover = path_cover(g);
    ASSERT_EQ(static_cast<int>(cover.size()), brute_min_path_cover(g)) << format_graph(g);
    ASSERT_LE(static_cast<int>(cover.size()), independence_number(g));
    VertexSet seen;
    for (const auto& path : cover) {
      for (std::size_t i = 0; i < path.size(); ++i) {
        ASSERT_FALSE(seen.contains(path[i]));
        seen.insert(path[i]);
        if (i > 0) {
          ASSERT_TRUE(g.adjacent(path[i - 1], path[i]));
        }
      }
    }
    ASSERT_EQ(seen, g.vertices());
  }
}
