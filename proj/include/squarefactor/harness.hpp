#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "squarefactor/extraction.hpp"
#include "squarefactor/graph.hpp"
#include "squarefactor/graph_io.hpp"
#include "squarefactor/pattern.hpp"
#include "squarefactor/search.hpp"
#include "squarefactor/solver.hpp"
#include "squarefactor/trails.hpp"

namespace sqf {

// ---------------------------------------------------------------------------
// Fixtures

/// One expected verdict for a fixture at a given s.
struct Expectation {
  enum class Kind { kStarFree, kCondition, kFactor };
  Kind kind = Kind::kFactor;
  int s = 1;
  bool value = false;
};

inline const char* to_string(Expectation::Kind k) {
  switch (k) {
    case Expectation::Kind::kStarFree:
      return "star-free";
    case Expectation::Kind::kCondition:
      return "condition";
    case Expectation::Kind::kFactor:
      return "factor";
  }
  return "?";
}

struct Fixture {
  std::string name;
  Graph graph;
  std::vector<std::string> vertex_names;
  std::vector<Expectation> expected;
};

/// Two 4-cycles-with-a-subdivided-chord core {a, b, m, c1, c2} with two pendant
/// P3s at each of c1 and c2. Ids: a=0 b=1 m=2 c1=3 c2=4 p1..q4 = 5..12.
inline Graph figure1_graph() {
  return Graph(13, {{0, 2}, {2, 1}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {3, 5}, {5, 6}, {3, 7}, {7, 8}, {4, 9}, {9, 10},
                    {4, 11}, {11, 12}});
}

inline std::vector<std::string> figure1_names() {
  return {"a", "b", "m", "c1", "c2", "p1", "q1", "p2", "q2", "p3", "q3", "p4", "q4"};
}

/// S(K_{1,3}) with arms m1-l1, m2-l2, m3-l3 at c, plus x joined to l1 and m2.
/// Ids: c=0 m1=1 l1=2 m2=3 l2=4 m3=5 l3=6 x=7.
inline Graph case_g_graph() {
  return Graph(8, {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {3, 4}, {5, 6}, {2, 7}, {7, 3}});
}

inline std::vector<Fixture> fixtures() {
  using K = Expectation::Kind;
  std::vector<Fixture> out;
  out.push_back({"figure1", figure1_graph(), figure1_names(),
                 {{K::kStarFree, 1, false}, {K::kCondition, 1, false}, {K::kFactor, 1, false}}});
  out.push_back({"case-g",
                 case_g_graph(),
                 {"c", "m1", "l1", "m2", "l2", "m3", "l3", "x"},
                 {{K::kStarFree, 1, false}, {K::kCondition, 1, true}, {K::kFactor, 1, true}}});
  out.push_back({"p7", path_graph(7), {}, {{K::kStarFree, 1, true}, {K::kFactor, 1, true}}});
  out.push_back({"star-s1",
                 make_star_subdivision(1),
                 {},
                 {{K::kStarFree, 1, false},
                  {K::kCondition, 1, false},
                  {K::kFactor, 1, false},
                  {K::kStarFree, 2, true},
                  {K::kFactor, 2, true}}});
  out.push_back({"star-s2", make_star_subdivision(2), {}, {{K::kStarFree, 2, false}, {K::kFactor, 2, false}}});
  out.push_back({"k15", star_graph(5), {}, {{K::kStarFree, 2, true}, {K::kFactor, 2, true}, {K::kFactor, 1, true}}});
  return out;
}

inline bool evaluate(const Graph& g, const Expectation& e) {
  switch (e.kind) {
    case Expectation::Kind::kStarFree:
      return is_star_free(g, e.s);
    case Expectation::Kind::kCondition:
      return static_cast<bool>(satisfies_block_condition(g, e.s));
    case Expectation::Kind::kFactor:
      return oracle_square_factor(g, e.s).has_value();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Enumeration

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Graph whose edges are the set bits of `mask`, edges ordered (0,1), (0,2), ..., (n-2,n-1).
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  EdgeSet edges(n);
  int bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.insert(u, v);
    }
  }
  return Graph(std::move(edges), [n] {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
    return labels;
  }());
}

inline constexpr int kEnumerationMaxVertices = 8;

inline std::uint64_t labeled_graph_count(int n) {
  if (n < 0 || n > kEnumerationMaxVertices) throw SizeCapError("enumeration is capped at 8 vertices");
  return std::uint64_t{1} << pair_count(n);
}

/// Calls fn on every labeled graph on n vertices, in mask order.
inline void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
  const std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(graph_from_mask(n, mask));
}

inline void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
  for_each_graph(n, [&](const Graph& g) {
    if (g.order() > 0 && is_connected(g)) fn(g);
  });
}

// ---------------------------------------------------------------------------
// Random instances

/// Independent stream for instance `index` of stream `tag` under `seed`.
inline std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline bool coin(std::mt19937_64& rng, double p) {
  if (p >= 1.0) return true;
  const auto threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0);
  return rng() < threshold;
}

inline constexpr int kRejectionBudget = 10000;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng, p)) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  if (n < 1) throw PreconditionError("random_connected: n must be positive");
  if (!(p > 0.0 && p <= 1.0)) throw PreconditionError("random_connected: edge probability must lie in (0, 1]");
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
  throw Error("random_connected: rejection budget exhausted");
}

inline Graph random_connected(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_connected(n, p, rng);
}

/// Random tree with degrees at most `cap`, plus extra edges that keep the cap.
inline Graph random_degree_capped(int n, int cap, double extra, std::mt19937_64& rng) {
  if (cap < 2 && n > 2) throw PreconditionError("random_degree_capped: cap too small");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) {
    std::vector<Vertex> open;
    for (Vertex w = 0; w < v; ++w) {
      if (g.degree(w) < cap) open.push_back(w);
    }
    g.add_edge(open[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(open.size()) - 1))], v);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v) && g.degree(u) < cap && g.degree(v) < cap && coin(rng, extra)) g.add_edge(u, v);
    }
  }
  return g;
}

/// Cycles with chords and pendant paths hung on each other at random vertices.
inline Graph random_block_graph(int n, std::mt19937_64& rng) {
  if (n < 3) throw PreconditionError("random_block_graph: n must be at least 3");
  Graph g(n);
  int used = 0;
  auto add_cycle = [&](Vertex at, int length) {
    std::vector<Vertex> ring{at};
    for (int i = 1; i < length; ++i) ring.push_back(used++);
    for (std::size_t i = 0; i < ring.size(); ++i) g.add_edge(ring[i], ring[(i + 1) % ring.size()]);
    if (length >= 4 && coin(rng, 0.5)) {
      std::size_t i = static_cast<std::size_t>(uniform_int(rng, 0, length - 1));
      std::size_t j = (i + 2) % ring.size();
      if (!g.adjacent(ring[i], ring[j])) g.add_edge(ring[i], ring[j]);
    }
  };
  int first = std::min(n, uniform_int(rng, 3, 6));
  used = 1;
  add_cycle(0, first);
  while (used < n) {
    Vertex at = uniform_int(rng, 0, used - 1);
    int room = n - used;
    if (room >= 2 && coin(rng, 0.4)) {
      add_cycle(at, std::min(room, uniform_int(rng, 2, 4)) + 1);
    } else {
      int length = std::min(room, uniform_int(rng, 1, 2));
      Vertex prev = at;
      for (int i = 0; i < length; ++i) {
        g.add_edge(prev, used);
        prev = used++;
      }
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Parallel execution

/// Worker count from SQUAREFACTOR_THREADS, else the hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("SQUAREFACTOR_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs fn(begin, end) over consecutive chunks of [0, total) on `threads`
/// workers and returns the results in chunk order.
template <class Result>
std::vector<Result> parallel_chunks(std::uint64_t total, std::uint64_t chunk, unsigned threads,
                                    const std::function<Result(std::uint64_t, std::uint64_t)>& fn) {
  const std::uint64_t chunks = chunk == 0 ? 0 : (total + chunk - 1) / chunk;
  std::vector<Result> out(static_cast<std::size_t>(chunks));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  auto work = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      try {
        out[static_cast<std::size_t>(c)] = fn(c * chunk, std::min(total, (c + 1) * chunk));
      } catch (...) {
        std::lock_guard lock(error_lock);
        if (!error) error = std::current_exception();
      }
    }
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(chunks, 1))));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct Counterexample {
  std::string note;
  Graph graph;
};

struct PropertyResult {
  std::string name;
  bool pass = true;
  std::uint64_t count = 0;  ///< instances checked
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;  ///< the first few, in canonical order
};

struct Report {
  std::vector<PropertyResult> properties;

  bool passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass; });
  }
  const PropertyResult* find(const std::string& name) const {
    for (const auto& p : properties) {
      if (p.name == name) return &p;
    }
    return nullptr;
  }
};

inline void write_report(std::ostream& out, const Report& r) {
  for (const PropertyResult& p : r.properties) {
    out << "PROPERTY " << p.name << ' ' << (p.pass ? "PASS" : "FAIL") << ' ' << p.count << '\n';
    for (const Counterexample& c : p.counterexamples) {
      out << "  # " << c.note << '\n';
      write_graph(out, c.graph, "  ");
    }
  }
}

inline std::string format_report(const Report& r) {
  std::ostringstream out;
  write_report(out, r);
  return out.str();
}

inline constexpr std::size_t kCounterexampleLimit = 5;

/// Tally for one chunk of instances.
struct Tally {
  std::uint64_t count = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;

  // `problem` empty means the instance passed.
  void record(const Graph& g, const std::string& problem) {
    ++count;
    if (problem.empty()) return;
    ++failures;
    if (counterexamples.size() < kCounterexampleLimit) counterexamples.push_back({problem, g});
  }

  void merge(Tally other) {
    count += other.count;
    failures += other.failures;
    for (auto& c : other.counterexamples) {
      if (counterexamples.size() < kCounterexampleLimit) counterexamples.push_back(std::move(c));
    }
  }
};

inline PropertyResult to_result(std::string name, const Tally& t) {
  return {std::move(name), t.failures == 0, t.count, t.failures, t.counterexamples};
}

/// Runs check on g, turning exceptions into problems.
inline std::string guarded(const std::function<std::string()>& check) {
  try {
    return check();
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

// ---------------------------------------------------------------------------
// Per-instance checks. Each returns an empty string on success.

inline std::string check_solution(const Graph& g, const EvenFactor& f, int s) {
  const Graph sq = square(g);
  if (f.host.edge_set() != sq.edge_set()) return "factor host is not the square";
  if (!verify_factor(sq, f.edges, s).valid()) return "solver output fails verification";
  return {};
}

inline std::string check_theorem1(const Graph& g, int s) {
  if (std::string p = check_solution(g, solve_star_free(g, s), s); !p.empty()) return p;
  if (!oracle_square_factor(g, s)) return "oracle finds no factor";
  return {};
}

inline std::string check_theorem2(const Graph& g, int s, bool with_oracle) {
  if (std::string p = check_solution(g, solve_condition(g, s), s); !p.empty()) return p;
  if (with_oracle && !oracle_square_factor(g, s)) return "oracle finds no factor";
  return {};
}

inline std::string check_fleischner(const Graph& g, Vertex y, Vertex z) {
  Trail c = fleischner_cycle(g, y, z);
  if (!check_fleischner_cycle(g, c, y, z)) {
    return "cycle for y=" + std::to_string(y) + " z=" + std::to_string(z) + " misses the incidence conditions";
  }
  return {};
}

inline std::string check_path_cover(const Graph& g) {
  const auto cover = path_cover(g);
  VertexSet seen;
  for (const auto& path : cover) {
    if (path.empty()) return "empty path in cover";
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (seen.contains(path[i])) return "paths overlap";
      seen.insert(path[i]);
      if (i > 0 && !g.adjacent(path[i - 1], path[i])) return "cover path uses a non-edge";
    }
  }
  if (seen != g.vertices()) return "cover misses a vertex";
  if (static_cast<int>(cover.size()) > independence_number(g)) return "cover has more paths than alpha";
  return {};
}

/// Lemma fuzz instance. Returns nullopt when the oracle finds no factor.
inline std::optional<std::pair<Graph, std::string>> lemma_instance(std::uint64_t seed, std::uint64_t index,
                                                                   PendantPath pendant) {
  const std::uint64_t tag = pendant == PendantPath::kTwoEdges ? 4 : 5;
  std::mt19937_64 rng = instance_rng(seed, tag, index);
  const int n = uniform_int(rng, pendant == PendantPath::kTwoEdges ? 1 : 2, 10);
  const int s = uniform_int(rng, 1, 2);
  const double p = 0.25 + 0.5 * static_cast<double>(uniform_int(rng, 0, 100)) / 100.0;
  Graph h = random_connected(n, p, rng);
  const Vertex x = uniform_int(rng, 0, n - 1);
  const int length = pendant == PendantPath::kTwoEdges ? 2 : 1;
  auto f = oracle_square_factor(attach_path(h, x, length), s);
  if (!f) return std::nullopt;

  std::string problem = guarded([&]() -> std::string {
    const ComponentSplit split = split_factor(h, x, *f, pendant);
    if (std::string p2 = split_problem(split, pendant); !p2.empty()) return p2;
    TrailOutcome out;
    if (pendant == PendantPath::kTwoEdges) {
      out = lemma4_extract(h, x, s, *f);
    } else {
      out = {OutcomeKind::kOpenToNeighbor, lemma5_extract(h, x, s, *f)};
    }
    return outcome_problem(h, x, s, out, pendant);
  });
  if (!problem.empty()) problem = "x=" + std::to_string(x) + " s=" + std::to_string(s) + ": " + problem;
  return std::make_pair(std::move(h), std::move(problem));
}

// ---------------------------------------------------------------------------
// Suite

struct SuiteConfig {
  std::uint64_t seed = 1;
  int max_n = 7;                ///< largest order in the exhaustive sweeps
  int fuzz_instances = 1000;    ///< oracle-positive instances per lemma
  int random_instances = 200;   ///< random graphs for the path-cover and max-degree properties
  int condition_instances = 60; ///< random non-free graphs satisfying the block condition
  std::vector<std::string> only;  ///< property names to run; empty runs all
  unsigned threads = 0;           ///< 0: worker_count()
};

inline const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{"figure1",     "stars",       "theorem1",   "theorem2",  "theoremE",
                                              "lemma4-fuzz", "lemma5-fuzz", "path-cover", "max-degree"};
  return names;
}

namespace detail {

inline constexpr std::uint64_t kChunk = 4096;

// Exhaustive sweep over all labeled graphs with 3 <= order <= max_n.
inline Tally sweep(const SuiteConfig& cfg, int min_n, const std::function<void(const Graph&, Tally&)>& visit) {
  Tally total;
  const unsigned threads = cfg.threads ? cfg.threads : worker_count();
  for (int n = min_n; n <= cfg.max_n; ++n) {
    auto parts = parallel_chunks<Tally>(labeled_graph_count(n), kChunk, threads, [&](std::uint64_t b, std::uint64_t e) {
      Tally t;
      for (std::uint64_t mask = b; mask < e; ++mask) visit(graph_from_mask(n, mask), t);
      return t;
    });
    for (auto& part : parts) total.merge(std::move(part));
  }
  return total;
}

// Indexed random instances 0..count-1.
inline Tally indexed(const SuiteConfig& cfg, std::uint64_t count,
                     const std::function<void(std::uint64_t, Tally&)>& visit) {
  const unsigned threads = cfg.threads ? cfg.threads : worker_count();
  Tally total;
  auto parts = parallel_chunks<Tally>(count, 16, threads, [&](std::uint64_t b, std::uint64_t e) {
    Tally t;
    for (std::uint64_t i = b; i < e; ++i) visit(i, t);
    return t;
  });
  for (auto& part : parts) total.merge(std::move(part));
  return total;
}

inline PropertyResult figure1_property() {
  Tally t;
  const Graph g = figure1_graph();
  t.record(g, guarded([&]() -> std::string {
    if (oracle_square_factor(g, 1)) return "oracle found a factor";
    return {};
  }));
  const std::vector<StarEmbedding> stars = find_induced_stars(g, 1);
  if (stars.empty()) t.record(g, "no induced S(K_{1,3})");
  const BlockDecomposition blocks = block_decomposition(g);
  bool witness_seen = false;
  const StarEmbedding witness{3, {{0, 2}, {5, 6}, {7, 8}}, 1};
  for (const StarEmbedding& star : stars) {
    witness_seen = witness_seen || star == witness;
    std::string problem;
    int best = max_edges_in_low_degree_block(blocks, star);
    if (!is_induced_star(g, star)) {
      problem = "reported star is not induced";
    } else if (best >= 3) {
      problem = "a star has three edges in one block of degree at most two";
    } else if (best < 2) {
      problem = "a star has fewer than two edges in every block of degree at most two";
    }
    if (!problem.empty()) problem += " (center " + std::to_string(star.center) + ")";
    t.record(g, problem);
  }
  t.record(g, witness_seen ? "" : "witness star at c1 not reported");
  t.record(g, satisfies_block_condition(g, 1) ? "block condition reported as holding" : "");
  for (const Fixture& f : fixtures()) {
    for (const Expectation& e : f.expected) {
      bool got = evaluate(f.graph, e);
      t.record(f.graph, got == e.value ? ""
                                       : f.name + ": " + to_string(e.kind) + " at s=" + std::to_string(e.s) +
                                             " expected " + (e.value ? "true" : "false"));
    }
  }
  return to_result("figure1", t);
}

inline PropertyResult stars_property() {
  Tally t;
  for (int s : {1, 2}) {
    const Graph g = make_star_subdivision(s);
    t.record(g, guarded([&]() -> std::string {
      if (is_star_free(g, s)) return "star reported free of itself";
      if (oracle_square_factor(g, s)) return "oracle found a factor at s=" + std::to_string(s);
      return {};
    }));
  }
  return to_result("stars", t);
}

inline PropertyResult theorem1_property(const SuiteConfig& cfg) {
  Tally t = sweep(cfg, 3, [](const Graph& g, Tally& tally) {
    if (!is_connected(g) || !is_star_free(g, 1)) return;
    tally.record(g, guarded([&] { return check_theorem1(g, 1); }));
  });
  return to_result("theorem1", t);
}

inline PropertyResult theorem2_property(const SuiteConfig& cfg) {
  Tally t = sweep(cfg, 3, [](const Graph& g, Tally& tally) {
    if (!is_connected(g) || !satisfies_block_condition(g, 1)) return;
    tally.record(g, guarded([&] { return check_theorem2(g, 1, true); }));
  });
  const Graph case_g = case_g_graph();
  t.record(case_g, guarded([&]() -> std::string {
    if (is_star_free(case_g, 1)) return "CASE-G is star-free";
    return check_theorem2(case_g, 1, true);
  }));
  // Non-free graphs that satisfy the condition, drawn from random block graphs.
  const int per_s = cfg.condition_instances;
  for (int s : {1, 2}) {
    std::uint64_t index = 0;
    int found = 0;
    Tally extra;
    while (found < per_s) {
      if (index > static_cast<std::uint64_t>(per_s) * 20000) {
        extra.record(Graph(0), "too few condition-satisfying non-free graphs at s=" + std::to_string(s));
        break;
      }
      std::mt19937_64 rng = instance_rng(cfg.seed, 20 + static_cast<std::uint64_t>(s), index++);
      const int n = s == 1 ? uniform_int(rng, 8, 12) : uniform_int(rng, 13, 16);
      Graph g = random_block_graph(n, rng);
      if (is_star_free(g, s) || !satisfies_block_condition(g, s)) continue;
      ++found;
      extra.record(g, guarded([&] { return check_theorem2(g, s, n <= 12); }));
    }
    t.merge(std::move(extra));
  }
  return to_result("theorem2", t);
}

inline PropertyResult theorem_e_property(const SuiteConfig& cfg) {
  Tally t = sweep(cfg, 3, [](const Graph& g, Tally& tally) {
    if (!is_biconnected(g)) return;
    for (Vertex y = 0; y < g.order(); ++y) {
      for (Vertex z = 0; z < g.order(); ++z) {
        if (y != z) tally.record(g, guarded([&] { return check_fleischner(g, y, z); }));
      }
    }
  });
  return to_result("theoremE", t);
}

inline PropertyResult lemma_property(const SuiteConfig& cfg, PendantPath pendant) {
  const std::string name = pendant == PendantPath::kTwoEdges ? "lemma4-fuzz" : "lemma5-fuzz";
  // Instances are drawn in blocks until enough have an oracle factor; the
  // prefix used is the same for every thread count.
  Tally t;
  std::uint64_t next = 0;
  const auto target = static_cast<std::uint64_t>(cfg.fuzz_instances);
  while (t.count < target) {
    if (next > target * 50) {
      t.record(Graph(0), "too few oracle-positive instances");
      break;
    }
    const std::uint64_t block = std::max<std::uint64_t>(64, target - t.count);
    const std::uint64_t base = next;
    auto parts = parallel_chunks<std::vector<std::optional<std::pair<Graph, std::string>>>>(
        block, 16, cfg.threads ? cfg.threads : worker_count(), [&](std::uint64_t b, std::uint64_t e) {
          std::vector<std::optional<std::pair<Graph, std::string>>> out;
          for (std::uint64_t i = b; i < e; ++i) out.push_back(lemma_instance(cfg.seed, base + i, pendant));
          return out;
        });
    next += block;
    for (auto& part : parts) {
      for (auto& inst : part) {
        if (inst && t.count < target) t.record(inst->first, inst->second);
      }
    }
  }
  return to_result(name, t);
}

inline PropertyResult path_cover_property(const SuiteConfig& cfg) {
  Tally t = sweep(cfg, 0, [](const Graph& g, Tally& tally) { tally.record(g, guarded([&] { return check_path_cover(g); })); });
  t.merge(indexed(cfg, static_cast<std::uint64_t>(cfg.random_instances), [&](std::uint64_t i, Tally& tally) {
    std::mt19937_64 rng = instance_rng(cfg.seed, 7, i);
    const int n = uniform_int(rng, 1, 12);
    const double p = static_cast<double>(uniform_int(rng, 5, 95)) / 100.0;
    Graph g = random_graph(n, p, rng);
    tally.record(g, guarded([&] { return check_path_cover(g); }));
  }));
  return to_result("path-cover", t);
}

inline PropertyResult max_degree_property(const SuiteConfig& cfg) {
  Tally t = indexed(cfg, static_cast<std::uint64_t>(cfg.random_instances), [&](std::uint64_t i, Tally& tally) {
    std::mt19937_64 rng = instance_rng(cfg.seed, 8, i);
    const int n = uniform_int(rng, 3, 16);
    const double extra = static_cast<double>(uniform_int(rng, 0, 60)) / 100.0;
    Graph g = random_degree_capped(n, 4, extra, rng);
    tally.record(g, guarded([&]() -> std::string {
      if (g.max_degree() > 4) return "generator exceeded the degree cap";
      return check_solution(g, solve_star_free(g, 2), 2);
    }));
  });
  return to_result("max-degree", t);
}

}  // namespace detail

inline Report run_suite(const SuiteConfig& cfg) {
  if (cfg.max_n > kEnumerationMaxVertices) throw SizeCapError("run_suite: max_n is capped at 8");
  for (const std::string& name : cfg.only) {
    if (std::find(property_names().begin(), property_names().end(), name) == property_names().end()) {
      throw PreconditionError("run_suite: unknown property " + name);
    }
  }
  auto wanted = [&](const std::string& name) {
    return cfg.only.empty() || std::find(cfg.only.begin(), cfg.only.end(), name) != cfg.only.end();
  };
  Report r;
  if (wanted("figure1")) r.properties.push_back(detail::figure1_property());
  if (wanted("stars")) r.properties.push_back(detail::stars_property());
  if (wanted("theorem1")) r.properties.push_back(detail::theorem1_property(cfg));
  if (wanted("theorem2")) r.properties.push_back(detail::theorem2_property(cfg));
  if (wanted("theoremE")) r.properties.push_back(detail::theorem_e_property(cfg));
  if (wanted("lemma4-fuzz")) r.properties.push_back(detail::lemma_property(cfg, PendantPath::kTwoEdges));
  if (wanted("lemma5-fuzz")) r.properties.push_back(detail::lemma_property(cfg, PendantPath::kEdge));
  if (wanted("path-cover")) r.properties.push_back(detail::path_cover_property(cfg));
  if (wanted("max-degree")) r.properties.push_back(detail::max_degree_property(cfg));
  return r;
}

}  // namespace sqf
