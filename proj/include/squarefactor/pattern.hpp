#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "squarefactor/graph.hpp"

namespace sqf {

/// Subdivided star S(K_{1,2s+1}) as the number of rays it has.
constexpr int star_arms(int s) { return 2 * s + 1; }

struct Arm {
  Vertex middle = 0;
  Vertex leaf = 0;

  friend auto operator<=>(const Arm&, const Arm&) = default;
};

/// An induced copy of S(K_{1,2s+1}): center, and 2s+1 arms center-middle-leaf.
/// Arms are kept sorted by middle vertex.
struct StarEmbedding {
  Vertex center = 0;
  std::vector<Arm> arms;
  int s = 1;

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const Arm& a : arms) {
      out.push_back(make_edge(center, a.middle));
      out.push_back(make_edge(a.middle, a.leaf));
    }
    return out;
  }

  VertexSet vertex_set() const {
    VertexSet out = VertexSet::single(center);
    for (const Arm& a : arms) {
      out.insert(a.middle);
      out.insert(a.leaf);
    }
    return out;
  }

  friend bool operator==(const StarEmbedding&, const StarEmbedding&) = default;
};

/// S(K_{1,2s+1}) with center 0, middles 1..2s+1, and leaf of middle i at i + 2s + 1.
inline Graph make_star_subdivision(int s) {
  if (s < 1) throw PreconditionError("make_star_subdivision: s must be positive");
  const int k = star_arms(s);
  if (2 * k + 1 > Graph::kMaxVertices) throw SizeCapError("make_star_subdivision: s too large");
  Graph g(2 * k + 1);
  for (int i = 1; i <= k; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i + k);
  }
  return g;
}

/// True iff the embedding's vertices are distinct and induce exactly its 2(2s+1) edges.
inline bool is_induced_star(const Graph& g, const StarEmbedding& e) {
  if (static_cast<int>(e.arms.size()) != star_arms(e.s)) return false;
  VertexSet vs = e.vertex_set();
  if (vs.size() != 2 * star_arms(e.s) + 1) return false;
  if (!vs.subset_of(g.vertices())) return false;
  Graph expected(g.order(), e.edges());
  for (Vertex v : vs) {
    if ((g.neighbors(v) & vs) != expected.neighbors(v)) return false;
  }
  return true;
}

namespace detail {

class StarSearch {
 public:
  StarSearch(const Graph& g, int s, std::optional<std::size_t> limit) : g_(g), s_(s), limit_(limit) {}

  std::vector<StarEmbedding> run() {
    const int k = star_arms(s_);
    for (Vertex c = 0; c < g_.order() && !full(); ++c) {
      if (g_.degree(c) < k) continue;
      center_ = c;
      arms_.clear();
      extend(g_.neighbors(c), VertexSet{}, VertexSet{});
    }
    return std::move(found_);
  }

 private:
  bool full() const { return limit_ && found_.size() >= *limit_; }

  // `candidates`: admissible middles greater than the last chosen one.
  void extend(VertexSet candidates, VertexSet middles, VertexSet leaves) {
    const int k = star_arms(s_);
    if (static_cast<int>(arms_.size()) == k) {
      found_.push_back({center_, arms_, s_});
      return;
    }
    if (static_cast<int>(arms_.size()) + candidates.size() < k) return;
    const VertexSet center_closed = g_.closed_neighborhood(center_);
    for (Vertex m : candidates) {
      if (full()) return;
      VertexSet later = VertexSet(candidates.bits() & ~((std::uint64_t{2} << m) - 1));
      if (g_.neighbors(m).intersects(middles | leaves)) continue;
      VertexSet leaf_options = g_.neighbors(m) - center_closed - leaves;
      for (Vertex l : leaf_options) {
        if (g_.neighbors(l).intersects(middles | leaves)) continue;
        arms_.push_back({m, l});
        VertexSet next_middles = middles | VertexSet::single(m);
        VertexSet next_leaves = leaves | VertexSet::single(l);
        extend(later - g_.neighbors(m) - g_.neighbors(l), next_middles, next_leaves);
        arms_.pop_back();
        if (full()) return;
      }
    }
  }

  const Graph& g_;
  int s_;
  std::optional<std::size_t> limit_;
  Vertex center_ = 0;
  std::vector<Arm> arms_;
  std::vector<StarEmbedding> found_;
};

}  // namespace detail

/// Induced copies of S(K_{1,2s+1}) in g. Centers ascend; arms are ordered by
/// middle and each copy is reported once. `limit` stops the search early.
inline std::vector<StarEmbedding> find_induced_stars(const Graph& g, int s,
                                                     std::optional<std::size_t> limit = std::nullopt) {
  if (s < 1) throw PreconditionError("find_induced_stars: s must be positive");
  return detail::StarSearch(g, s, limit).run();
}

inline bool is_star_free(const Graph& g, int s) { return find_induced_stars(g, s, 1).empty(); }

/// Largest number of the star's edges that lie in one block B with d(B) <= 2.
inline int max_edges_in_low_degree_block(const BlockDecomposition& blocks, const StarEmbedding& star) {
  int best = 0;
  const std::vector<Edge> edges = star.edges();
  for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
    if (blocks.block_degree[b] > 2) continue;
    int inside = 0;
    for (Edge e : edges) {
      if (blocks.blocks[b].contains(e.u) && blocks.blocks[b].contains(e.v)) ++inside;
    }
    best = std::max(best, inside);
  }
  return best;
}

/// First block of degree at most two holding three or more of the star's edges.
inline std::optional<std::size_t> condition_block(const Graph& g, const BlockDecomposition& blocks,
                                                  const StarEmbedding& star) {
  const std::vector<Edge> edges = star.edges();
  for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
    if (blocks.block_degree[b] > 2 || block_edge_count(g, blocks.blocks[b]) < 3) continue;
    int inside = 0;
    for (Edge e : edges) {
      if (blocks.blocks[b].contains(e.u) && blocks.blocks[b].contains(e.v)) ++inside;
    }
    if (inside >= 3) return b;
  }
  return std::nullopt;
}

struct ConditionReport {
  bool holds = true;
  std::vector<StarEmbedding> violations;

  explicit operator bool() const { return holds; }
};

/// Checks that every induced S(K_{1,2s+1}) has at least three edges inside a
/// single block of degree at most two.
inline ConditionReport satisfies_block_condition(const Graph& g, int s) {
  if (!is_connected(g)) throw PreconditionError("satisfies_block_condition: graph is disconnected");
  ConditionReport report;
  std::vector<StarEmbedding> stars = find_induced_stars(g, s);
  if (stars.empty()) return report;
  const BlockDecomposition blocks = block_decomposition(g);
  for (StarEmbedding& star : stars) {
    if (!condition_block(g, blocks, star)) {
      report.holds = false;
      report.violations.push_back(std::move(star));
    }
  }
  return report;
}

}  // namespace sqf
