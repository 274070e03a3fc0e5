#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "brute.hpp"
#include "squarefactor/trails.hpp"

using namespace sqf;

namespace {

EdgeSet edges_of(int n, std::initializer_list<Edge> list) {
  EdgeSet out(n);
  for (Edge e : list) out.insert(e);
  return out;
}

// Union of random cycles of the host, XOR-ed together: always even.
EdgeSet random_even(const Graph& host, std::mt19937_64& rng) {
  EdgeSet out(host.order());
  for (int round = 0; round < 4; ++round) {
    std::vector<Vertex> walk{static_cast<Vertex>(rng() % static_cast<std::uint64_t>(host.order()))};
    for (int step = 0; step < 12; ++step) {
      VertexSet next = host.neighbors(walk.back());
      if (next.empty()) break;
      auto options = next.to_vector();
      Vertex w = options[rng() % options.size()];
      auto seen = std::find(walk.begin(), walk.end(), w);
      if (seen != walk.end() && walk.end() - seen >= 3) {
        EdgeSet cycle(host.order());
        for (auto it = seen; it + 1 != walk.end(); ++it) cycle.insert(*it, *(it + 1));
        cycle.insert(walk.back(), w);
        out ^= cycle;
        break;
      }
      if (seen == walk.end()) walk.push_back(w);
    }
  }
  return out;
}

}  // namespace

TEST(Verify, FourCycleInK4) {
  VerificationReport r = verify_factor(complete_graph(4), cycle_graph(4).edge_set(), 1);
  EXPECT_TRUE(r.valid());
}

TEST(Verify, MissingVertexIsNotSpanning) {
  EdgeSet triangle = edges_of(4, {{0, 1}, {1, 2}, {0, 2}});
  VerificationReport r = verify_factor(complete_graph(4), triangle, 1);
  EXPECT_FALSE(r.spanning);
  EXPECT_TRUE(r.connected);
  EXPECT_TRUE(r.even);
  EXPECT_TRUE(r.degree_bounded);
  EXPECT_FALSE(r.valid());
}

TEST(Verify, StarSquareWithDegreeFour) {
  // c = 0, v1..v5 = 1..5; closed trail c v1 v2 v3 c v4 v5 c.
  const Graph host = square(star_graph(5));
  Trail t{{0, 1, 2, 3, 0, 4, 5, 0}};
  auto f = trail_edge_set(t, 6);
  ASSERT_TRUE(f.has_value());
  VerificationReport r = verify_factor(host, *f, 2);
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(f->degree(0), 4);
  EXPECT_FALSE(verify_factor(host, *f, 1).degree_bounded);
}

TEST(Verify, DisconnectedAndOdd) {
  EdgeSet two = edges_of(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(verify_factor(complete_graph(6), two, 1).connected);
  EdgeSet path = edges_of(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(verify_factor(complete_graph(3), path, 1).even);
}

TEST(Verify, RejectsEdgesOutsideHost) {
  EXPECT_THROW(verify_factor(path_graph(3), complete_graph(3).edge_set(), 1), PreconditionError);
  EXPECT_THROW(verify_factor(path_graph(3), EdgeSet(4), 1), PreconditionError);
}

TEST(EvenFactorType, RejectsOddEdgeSets) {
  EXPECT_THROW(EvenFactor(path_graph(3), path_graph(3).edge_set()), PreconditionError);
  EXPECT_NO_THROW(EvenFactor(complete_graph(3), complete_graph(3).edge_set()));
}

TEST(FactorToTrail, Triangle) {
  Trail t = factor_to_trail(complete_graph(3).edge_set(), 1);
  EXPECT_EQ(t.length(), 3U);
  EXPECT_TRUE(t.closed());
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(t.visits(v), 1);
}

TEST(FactorToTrail, BowtieVisitsCenterTwice) {
  EdgeSet bowtie = edges_of(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  Trail t = factor_to_trail(bowtie, 2);
  EXPECT_EQ(t.length(), 6U);
  EXPECT_EQ(t.visits(2), 2);
  EXPECT_EQ(t.visits(0), 1);
  EXPECT_EQ(trail_problem(complete_graph(5), t, 2), "");
  EXPECT_NE(trail_problem(complete_graph(5), t, 1), "");
  EXPECT_THROW(factor_to_trail(bowtie, 1), PreconditionError);
}

TEST(FactorToTrail, CycleIsItself) {
  Trail t = factor_to_trail(cycle_graph(5).edge_set(), 1);
  EXPECT_EQ(t.walk, (std::vector<Vertex>{0, 1, 2, 3, 4, 0}));
}

TEST(FactorToTrail, RejectsBadInput) {
  EXPECT_THROW(factor_to_trail(EdgeSet(3), 1), PreconditionError);
  EXPECT_THROW(factor_to_trail(path_graph(3).edge_set(), 1), PreconditionError);
  EdgeSet two = edges_of(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_THROW(factor_to_trail(two, 1), PreconditionError);
}

TEST(TrailToFactor, RoundTrips) {
  const Graph host = complete_graph(5);
  for (const EdgeSet& f : {complete_graph(3).edge_set(), cycle_graph(5).edge_set(),
                           edges_of(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})}) {
    EdgeSet sized(5);
    for (Edge e : f.edges()) sized.insert(e);
    Trail t = factor_to_trail(sized, 2);
    EvenFactor back = trail_to_factor(t, host);
    EXPECT_EQ(back.edges, sized);
  }
  EXPECT_THROW(trail_to_factor(Trail{{0, 1, 2}}, host), PreconditionError);
  EXPECT_THROW(trail_to_factor(Trail{{0, 1, 2, 0}}, path_graph(3)), PreconditionError);
  EXPECT_THROW(trail_to_factor(Trail{{0, 1, 0}}, host), PreconditionError);
}

TEST(SymmetricDifference, Examples) {
  const Graph host = complete_graph(4);
  EvenFactor f(host, edges_of(4, {{0, 1}, {1, 2}, {0, 2}}));
  EvenFactor empty(host, EdgeSet(4));
  EXPECT_TRUE(symmetric_difference(f, f).edges.empty());
  EXPECT_EQ(symmetric_difference(f, empty).edges, f.edges);
  EvenFactor g(host, edges_of(4, {{0, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(symmetric_difference(f, g).edges, cycle_graph(4).edge_set());
  EXPECT_THROW(symmetric_difference(f, EvenFactor(complete_graph(3), EdgeSet(3))), PreconditionError);
}

TEST(SymmetricDifference, PreservesEvenness) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph host = brute::random_connected(4 + static_cast<int>(rng() % 10), 50, rng);
    EvenFactor a(host, random_even(host, rng));
    EvenFactor b(host, random_even(host, rng));
    EXPECT_TRUE(symmetric_difference(a, b).edges.odd_vertices().empty());
  }
}

TEST(Boundary, Examples) {
  EXPECT_EQ(boundary(complete_graph(4), VertexSet::single(0)).size(), 3);
  EXPECT_TRUE(boundary(complete_graph(4), VertexSet::range(4)).empty());
  EXPECT_EQ(boundary(path_graph(4), VertexSet::of({0, 1})).edges(), (std::vector<Edge>{{1, 2}}));
}

TEST(Boundary, EvenSubgraphsMeetCutsEvenly) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph host = brute::random_connected(3 + static_cast<int>(rng() % 12), 45, rng);
    EdgeSet even = random_even(host, rng);
    ASSERT_TRUE(even.odd_vertices().empty());
    for (int k = 0; k < 10; ++k) {
      VertexSet cut(rng() & host.vertices().bits());
      EXPECT_EQ((boundary(host, cut) & even).size() % 2, 0);
      EXPECT_EQ(boundary(even, cut).size() % 2, 0);
    }
  }
}

TEST(EulerTrail, OpenTrailBetweenOddVertices) {
  EdgeSet p = path_graph(4).edge_set();
  Trail t = euler_trail(p, 0);
  EXPECT_EQ(t.walk, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_THROW(euler_trail(p, 1), PreconditionError);
  Trail single = euler_trail(EdgeSet(3), 2);
  EXPECT_EQ(single.walk, (std::vector<Vertex>{2}));
}

TEST(EulerTrail, UsesEveryEdgeOnce) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph host = brute::random_connected(3 + static_cast<int>(rng() % 10), 60, rng);
    EdgeSet even = random_even(host, rng);
    if (even.empty() || !is_connected(even, VertexSet{})) continue;
    Vertex start = even.support().front();
    Trail t = euler_trail(even, start);
    ASSERT_TRUE(t.closed());
    ASSERT_EQ(trail_edge_set(t, host.order()), even);
  }
}

TEST(TrailType, VisitsAndReverse) {
  Trail t{{0, 1, 2, 0, 3, 4, 0}};
  EXPECT_EQ(t.visits(0), 2);
  EXPECT_EQ(t.visits(3), 1);
  EXPECT_EQ(t.visits(9), 0);
  EXPECT_EQ(t.reversed().walk, (std::vector<Vertex>{0, 4, 3, 0, 2, 1, 0}));
  EXPECT_EQ((Trail{{5}}).visits(5), 1);
  EXPECT_TRUE((Trail{{5}}).closed());
  EXPECT_FALSE((Trail{{1, 2}}).closed());
}

TEST(TrailProblem, Detects) {
  const Graph host = complete_graph(4);
  EXPECT_EQ(trail_problem(host, Trail{{0, 1, 2, 0}}, 1), "");
  EXPECT_NE(trail_problem(host, Trail{}, 1), "");
  EXPECT_NE(trail_problem(path_graph(4), Trail{{0, 2}}, 1), "");
  EXPECT_NE(trail_problem(host, Trail{{0, 1, 0}}, 1), "");
  EXPECT_NE(trail_problem(host, Trail{{0, 9}}, 1), "");
  EXPECT_NE(trail_problem(host, Trail{{0, 1, 2, 0, 3}}, 1), "");
  EXPECT_EQ(trail_problem(host, Trail{{0, 1, 2, 0, 3}}, 2), "");
}

TEST(Concat, SharedEndpointSplices) {
  const Graph host = complete_graph(5);
  Trail t = concat_trails(host, Trail{{0, 1, 2}}, Trail{{2, 3, 4}});
  EXPECT_EQ(t.walk, (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(Concat, ClosedThenOpenAtSameRoot) {
  const Graph host = complete_graph(5);
  Trail t = concat_trails(host, Trail{{0, 1, 2, 0}}, Trail{{0, 3, 4}});
  EXPECT_FALSE(t.closed());
  EXPECT_EQ(t.visits(0), 2);
  EXPECT_EQ(trail_problem(host, t, 2), "");
}

TEST(Concat, ConnectorEdge) {
  const Graph host = path_graph(4);
  Trail t = concat_trails(host, Trail{{0, 1}}, Trail{{2, 3}});
  EXPECT_EQ(t.walk, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_THROW(concat_trails(host, Trail{{0}}, Trail{{2, 3}}), PreconditionError);
  EXPECT_THROW(concat_trails(complete_graph(3), Trail{{0, 1}}, Trail{{1, 0}}), PreconditionError);
  EXPECT_EQ(concat_trails(host, Trail{}, Trail{{2}}).walk, (std::vector<Vertex>{2}));
}

// Two branch trails joined through a hub, then a pendant neighbour, then closed.
TEST(Concat, HubAssemblyPattern) {
  // u = 0 with branches 1-2 and 3-4 and a pendant neighbour 5.
  Graph g(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}});
  const Graph sq = square(g);
  Trail f0{{1, 2}};
  Trail f1{{3, 4}};
  Trail tour = concat_trails(sq, f0, Trail{{0}});
  tour = concat_trails(sq, tour, f1.reversed());
  tour = concat_trails(sq, tour, Trail{{5}});
  tour = concat_trails(sq, tour, Trail{{tour.front()}});
  EXPECT_EQ(tour.walk, (std::vector<Vertex>{1, 2, 0, 4, 3, 5, 1}));
  auto edges = trail_edge_set(tour, 6);
  ASSERT_TRUE(edges.has_value());
  EXPECT_TRUE(verify_factor(sq, *edges, 1).valid());
}

TEST(TextFormats, FactorAndTrail) {
  EdgeSet f = edges_of(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(format_factor(f), "factor 3\n0 1\n0 2\n1 2\n");
  std::istringstream in("# c\nfactor 3\n0 1\n\n1 2\n2 0\n");
  EXPECT_EQ(read_factor(in, 3), f);
  std::ostringstream out;
  write_trail(out, Trail{{0, 1, 2, 0}});
  EXPECT_EQ(out.str(), "0 1 2 0\n");
  std::istringstream bad("factor 2\n0 1\n");
  EXPECT_THROW(read_factor(bad, 3), ParseError);
  std::istringstream dup("factor 2\n0 1\n1 0\n");
  EXPECT_THROW(read_factor(dup, 3), ParseError);
  std::istringstream range("factor 1\n0 5\n");
  EXPECT_THROW(read_factor(range, 3), ParseError);
}
