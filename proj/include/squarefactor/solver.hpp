#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "squarefactor/extraction.hpp"
#include "squarefactor/graph.hpp"
#include "squarefactor/pattern.hpp"
#include "squarefactor/search.hpp"
#include "squarefactor/trails.hpp"

namespace sqf {

/// Neither hypothesis holds: g has an induced S(K_{1,2s+1}) with fewer than
/// three edges in every block of degree at most two.
class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(StarEmbedding witness)
      : Error("graph violates the block condition"), witness_(std::move(witness)) {}

  const StarEmbedding& witness() const noexcept { return witness_; }

 private:
  StarEmbedding witness_;
};

/// How often each step of the constructions ran; filled when requested.
struct SolverStats {
  int small_base = 0;          ///< order at most 6, direct search
  int biconnected_base = 0;
  int path_base = 0;
  int cut_vertex_steps = 0;
  int closed_branches = 0;     ///< branches with a closed outcome
  int open_branches = 0;       ///< branches with an open outcome
  int pendant_neighbours = 0;
  int max_cover_paths = 0;     ///< largest path cover of contracted branch ends
  int block_only = 0;          ///< selected block has degree 0
  int leaf_trivial = 0;        ///< degree-1 block inside N[c]
  int leaf_nontrivial = 0;
  int middle_blocks = 0;
  int trivial_sides = 0;
  int nontrivial_sides = 0;
};

namespace detail {

/// The subgraph of g induced by `order`, with vertex i = order[i] and labels
/// holding the ids in g.
inline Graph induced_in_order(const Graph& g, const std::vector<Vertex>& order) {
  EdgeSet edges(static_cast<int>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (g.adjacent(order[i], order[j])) edges.insert(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(std::move(edges), std::vector<int>(order.begin(), order.end()));
}

inline Graph induced_in_order(const Graph& g, VertexSet subset) { return induced_in_order(g, subset.to_vector()); }

inline Vertex local_id(const Graph& local, Vertex parent) {
  auto v = local.find_label(parent);
  if (!v) throw InternalError("vertex missing from local graph");
  return *v;
}

/// Maps a trail on a local graph back to the ids stored in its labels.
inline Trail lift(const Trail& t, const Graph& local) {
  Trail out;
  out.walk.reserve(t.walk.size());
  for (Vertex v : t.walk) out.walk.push_back(local.label(v));
  return out;
}

inline Trail oriented_from(const Trail& t, Vertex start) { return t.front() == start ? t : t.reversed(); }

/// Spanning closed s-trails of G^2, built recursively. Every recursive call is
/// on a strictly smaller graph.
class Solver {
 public:
  explicit Solver(int s, SolverStats* stats = nullptr) : s_(s), stats_(stats ? stats : &scratch_) {}

  Trail star_free(const Graph& g) {
    const int n = g.order();
    if (n <= 6) {
      ++stats_->small_base;
      return small_cycle(g);
    }
    if (is_biconnected(g)) {
      ++stats_->biconnected_base;
      return fleischner_cycle(g, 0, 0);
    }

    const BlockDecomposition blocks = block_decomposition(g);
    std::optional<Vertex> hub;
    for (Vertex v : blocks.cut_vertices) {
      if (g.degree(v) >= 3) {
        hub = v;
        break;
      }
    }
    if (!hub) {
      ++stats_->path_base;
      return path_cycle(g);
    }
    ++stats_->cut_vertex_steps;
    return assemble_at_cut_vertex(g, *hub);
  }

  Trail condition(const Graph& g) {
    if (is_star_free(g, s_)) return star_free(g);
    const std::vector<StarEmbedding> stars = find_induced_stars(g, s_, 1);
    const BlockDecomposition blocks = block_decomposition(g);
    const auto b = condition_block(g, blocks, stars.front());
    if (!b) throw InternalError("solve_condition: block condition lost during recursion");
    const VertexSet block = blocks.blocks[*b];
    const VertexSet cuts = block & blocks.cut_vertices;
    switch (blocks.block_degree[*b]) {
      case 0:
        ++stats_->block_only;
        return fleischner_cycle(g, 0, 0);
      case 1:
        return glue_leaf_block(g, block, cuts.front());
      case 2: {
        ++stats_->middle_blocks;
        VertexSet rest = cuts;
        rest.erase(cuts.front());
        return glue_middle_block(g, block, cuts.front(), rest.front());
      }
      default:
        throw InternalError("solve_condition: selected block has degree above two");
    }
  }

 private:
  void require_smaller(const Graph& sub, const Graph& g) const {
    if (sub.order() >= g.order()) throw InternalError("recursive instance is not smaller");
  }

  static Trail small_cycle(const Graph& g) {
    auto cycle = hamiltonian_cycle(square(g), 0);
    if (!cycle) throw InternalError("square of a small connected graph has no hamiltonian cycle");
    return *cycle;
  }

  // Hamiltonian cycle of P_n^2: even positions outward, odd positions back.
  static Trail path_cycle(const Graph& g) {
    Vertex end = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 1) {
        end = v;
        break;
      }
    }
    std::vector<Vertex> order{end};
    VertexSet seen = VertexSet::single(end);
    while (static_cast<int>(order.size()) < g.order()) {
      VertexSet next = g.neighbors(order.back()) - seen;
      if (next.size() != 1) throw InternalError("path_cycle: graph is not a path");
      order.push_back(next.front());
      seen.insert(next.front());
    }
    Trail t;
    for (std::size_t i = 0; i < order.size(); i += 2) t.walk.push_back(order[i]);
    for (std::size_t i = order.size() - 1 - (order.size() % 2); i < order.size(); i -= 2) {
      t.walk.push_back(order[i]);
      if (i < 2) break;
    }
    t.walk.push_back(order.front());
    return t;
  }

  // Solves the rest graph with a pendant P3 glued at x and extracts the trail
  // outcome for the rest. `glued` lists rest's vertices in order followed by the
  // two path vertices; it must be the induced subgraph of g on those vertices.
  TrailOutcome outcome_via_pendant_p3(const Graph& g, const Graph& rest, Vertex x_local,
                                      const std::vector<Vertex>& glued_order, bool use_condition) {
    Graph glued = induced_in_order(g, glued_order);
    if (glued.edge_set() != attach_path(rest, x_local, 2).edge_set()) {
      throw InternalError("glued instance is not rest x P3");
    }
    require_smaller(glued, g);
    Trail sub = use_condition ? condition(glued) : star_free(glued);
    auto f = trail_edge_set(sub, glued.order());
    TrailOutcome out = lemma4_extract(rest, x_local, s_, *f);
    out.trail = lift(out.trail, rest);
    return out;
  }

  // Induction step at a cut vertex u of degree at least three.
  Trail assemble_at_cut_vertex(const Graph& g, Vertex u) {
    const Graph sq = square(g);
    const Graph labelled = with_identity_labels(g);

    // BFS tree from u holds every edge at u; `top` names the neighbour of u
    // whose subtree contains a vertex.
    std::vector<Vertex> top(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue;
    for (Vertex w : g.neighbors(u)) {
      top[static_cast<std::size_t>(w)] = w;
      queue.push_back(w);
    }
    VertexSet seen = g.closed_neighborhood(u);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g.neighbors(v) - seen) {
        seen.insert(w);
        top[static_cast<std::size_t>(w)] = top[static_cast<std::size_t>(v)];
        queue.push_back(w);
      }
    }
    const std::vector<VertexSet> parts_of_g_minus_u = components(g, g.vertices() - VertexSet::single(u));

    struct Open {
      Vertex root;
      Vertex other;
      Trail trail;  // root ... other
    };
    std::vector<Open> open;
    std::vector<Trail> closed;  // rooted at their branch root
    std::vector<Vertex> pendants;

    for (Vertex ui : g.neighbors(u)) {
      if (g.degree(ui) == 1) {
        ++stats_->pendant_neighbours;
        pendants.push_back(ui);
        continue;
      }
      VertexSet branch;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (top[static_cast<std::size_t>(v)] == ui) branch.insert(v);
      }
      // u_i': the lowest neighbour of u outside the component of G-u holding u_i.
      std::optional<Vertex> partner;
      for (VertexSet part : parts_of_g_minus_u) {
        if (part.contains(ui)) {
          VertexSet outside = g.neighbors(u) - part;
          if (!outside.empty()) partner = outside.front();
        }
      }
      if (!partner) throw InternalError("cut vertex has all neighbours in one component");

      const Graph rest = induced_subgraph(labelled, branch);
      std::vector<Vertex> order = branch.to_vector();
      order.push_back(u);
      order.push_back(*partner);
      TrailOutcome o = outcome_via_pendant_p3(g, rest, local_id(rest, ui), order, false);
      if (o.kind == OutcomeKind::kClosedAtRoot) {
        ++stats_->closed_branches;
        closed.push_back(o.trail);
      } else {
        ++stats_->open_branches;
        open.push_back({ui, o.trail.back(), o.trail});
      }
    }

    // Contract each open branch's end pair and cover the result by few paths.
    std::vector<Vertex> pair_vertices;
    for (const Open& b : open) {
      pair_vertices.push_back(b.root);
      pair_vertices.push_back(b.other);
    }
    const Graph pair_graph = induced_subgraph(labelled, VertexSet::of(pair_vertices));
    std::vector<Edge> pairs;
    for (const Open& b : open) pairs.push_back(make_edge(local_id(pair_graph, b.root), local_id(pair_graph, b.other)));
    const Contraction contracted = contract_pairs(pair_graph, pairs);
    const auto cover = path_cover(contracted.graph);
    if (static_cast<int>(cover.size()) > 2 * s_) {
      throw InternalError("path cover of the contracted ends exceeds 2s paths");
    }
    stats_->max_cover_paths = std::max(stats_->max_cover_paths, static_cast<int>(cover.size()));

    // F_i: the open trails along one cover path, joined end to start.
    std::vector<Trail> chains;
    for (const auto& path : cover) {
      Trail chain = open[static_cast<std::size_t>(path.front())].trail;
      for (std::size_t k = 1; k < path.size(); ++k) {
        const Open& next = open[static_cast<std::size_t>(path[k])];
        Vertex exit = chain.back();
        Vertex entry = std::min(next.root, next.other);
        if (!sq.adjacent(exit, entry)) entry = std::max(next.root, next.other);
        if (!sq.adjacent(exit, entry)) throw InternalError("no square edge between consecutive branch ends");
        chain = concat_trails(sq, chain, oriented_from(next.trail, entry));
      }
      chains.push_back(std::move(chain));
    }

    // F': chains in pairs through u, the second of each pair walked backwards.
    Trail tour;
    const Trail at_u{{u}};
    if (chains.empty()) tour = at_u;
    for (std::size_t k = 0; k < chains.size(); k += 2) {
      tour = concat_trails(sq, tour, chains[k]);
      tour = concat_trails(sq, tour, at_u);
      if (k + 1 < chains.size()) tour = concat_trails(sq, tour, chains[k + 1].reversed());
    }
    // T: closed branches at their roots, then the pendant neighbours of u.
    for (const Trail& t : closed) tour = concat_trails(sq, tour, t);
    for (Vertex p : pendants) tour = concat_trails(sq, tour, Trail{{p}});
    return close_tour(sq, tour);
  }

  Trail close_tour(const Graph& sq, Trail tour) const {
    if (!tour.closed() || tour.walk.size() == 1) tour = concat_trails(sq, tour, Trail{{tour.front()}});
    return tour;
  }

  // Case d(H) = 1: H hangs off the rest R at the cut vertex c.
  Trail glue_leaf_block(const Graph& g, VertexSet block, Vertex c) {
    const Graph sq = square(g);
    const Graph labelled = with_identity_labels(g);
    const VertexSet rest_set = (g.vertices() - block) | VertexSet::single(c);
    const Graph rest = induced_subgraph(labelled, rest_set);
    const Vertex c_local = local_id(rest, c);

    if (block.subset_of(g.closed_neighborhood(c))) {
      ++stats_->leaf_trivial;
      const std::vector<Vertex> others = (block - VertexSet::single(c)).to_vector();
      std::vector<Vertex> order = rest_set.to_vector();
      order.push_back(others.front());
      Graph glued = induced_in_order(g, order);
      if (glued.edge_set() != attach_path(rest, c_local, 1).edge_set()) {
        throw InternalError("glued instance is not R x P2");
      }
      require_smaller(glued, g);
      Trail sub = condition(glued);
      Trail t = lift(lemma5_extract(rest, c_local, s_, *trail_edge_set(sub, glued.order())), rest);
      for (Vertex b : others) t = concat_trails(sq, t, Trail{{b}});
      return close_tour(sq, t);
    }

    ++stats_->leaf_nontrivial;
    const Graph h = induced_subgraph(labelled, block);
    const Vertex c_in_h = local_id(h, c);
    auto witness = nontrivial_path(h, c_in_h);
    if (!witness) throw InternalError("block is neither trivial nor nontrivial at c");
    std::vector<Vertex> order = rest_set.to_vector();
    order.push_back(h.label((*witness)[1]));
    order.push_back(h.label((*witness)[2]));
    TrailOutcome o = outcome_via_pendant_p3(g, rest, c_local, order, true);

    // Hamiltonian path of H^2 from a neighbour of c to c.
    Trail ring = lift(fleischner_cycle(h, c_in_h, (*witness)[2]), h);
    Trail to_c{{ring.walk.begin() + 1, ring.walk.end()}};
    return concat_trails(sq, o.trail, to_c);
  }

  // Trail in B^2 starting at the cut vertex c: closed at c, or ending at a
  // neighbour of c. B is the union of branches at c away from the block.
  Trail side_trail(const Graph& g, VertexSet side, Vertex c) {
    const Graph labelled = with_identity_labels(g);
    const Graph b = induced_subgraph(labelled, side);
    const Vertex c_local = local_id(b, c);
    if (!is_nontrivial_at(b, c_local)) {
      ++stats_->trivial_sides;
      VertexSet others = side - VertexSet::single(c);
      if (others.subset_of(g.neighbors(c))) {
        Trail t{{c}};
        for (Vertex v : others) t.walk.push_back(v);
        return t;
      }
      // B = P3(c) = c - b1 - b2: visit b2 first.
      Vertex b1 = (others & g.neighbors(c)).front();
      Vertex b2 = (others - VertexSet::single(b1)).front();
      return Trail{{c, b2, b1}};
    }

    ++stats_->nontrivial_sides;
    const VertexSet outside = (g.vertices() - side) | VertexSet::single(c);
    const Graph rest = induced_subgraph(labelled, outside);
    auto witness = nontrivial_path(rest, local_id(rest, c));
    if (!witness) throw InternalError("remainder is trivial at the cut vertex");
    std::vector<Vertex> order = side.to_vector();
    order.push_back(rest.label((*witness)[1]));
    order.push_back(rest.label((*witness)[2]));
    return outcome_via_pendant_p3(g, b, c_local, order, true).trail;
  }

  // Case d(H) = 2: G = (B1 c1 H) c2 B2.
  Trail glue_middle_block(const Graph& g, VertexSet block, Vertex c1, Vertex c2) {
    const Graph sq = square(g);
    auto away_from_block = [&](Vertex c) {
      VertexSet side = VertexSet::single(c);
      for (VertexSet part : components(g, g.vertices() - VertexSet::single(c))) {
        if (!part.intersects(block)) side |= part;
      }
      return side;
    };
    const Trail first_side = side_trail(g, away_from_block(c1), c1);
    const Trail second_side = side_trail(g, away_from_block(c2), c2);

    const Graph h = induced_subgraph(with_identity_labels(g), block);
    const DoublePathCover cover = block_double_path_cover(h, local_id(h, c1), local_id(h, c2));
    Trail across;
    for (Vertex v : cover.first) across.walk.push_back(h.label(v));
    Trail back;
    for (Vertex v : cover.second) back.walk.push_back(h.label(v));

    Trail tour = concat_trails(sq, first_side, across);
    tour = concat_trails(sq, tour, second_side.reversed());
    tour = concat_trails(sq, tour, back);
    return tour;
  }

  int s_;
  SolverStats scratch_;
  SolverStats* stats_;
};

inline EvenFactor finish(const Graph& g, const Trail& tour, int s, const char* who) {
  const Graph sq = square(g);
  if (std::string p = trail_problem(sq, tour, s); !p.empty()) throw InternalError(std::string(who) + ": " + p);
  if (!tour.closed() || VertexSet::of(tour.walk) != g.vertices()) {
    throw InternalError(std::string(who) + ": result is not a spanning closed trail");
  }
  auto edges = trail_edge_set(tour, g.order());
  if (!verify_factor(sq, *edges, s).valid()) throw InternalError(std::string(who) + ": result failed verification");
  return EvenFactor(sq, std::move(*edges));
}

inline void require_solvable_shape(const Graph& g, int s, const char* who) {
  if (s < 1) throw PreconditionError(std::string(who) + ": s must be positive");
  if (g.order() < 3) throw PreconditionError(std::string(who) + ": graph needs at least three vertices");
  if (!is_connected(g)) throw PreconditionError(std::string(who) + ": graph is disconnected");
}

}  // namespace detail

/// [2,2s]-factor of g^2 for a connected S(K_{1,2s+1})-free graph g on at least
/// three vertices, built by induction on a cut vertex of degree at least three.
inline EvenFactor solve_star_free(const Graph& g, int s, SolverStats* stats = nullptr) {
  detail::require_solvable_shape(g, s, "solve_star_free");
  if (!is_star_free(g, s)) throw PreconditionError("solve_star_free: graph contains an induced S(K_{1,2s+1})");
  return detail::finish(g, detail::Solver(s, stats).star_free(g), s, "solve_star_free");
}

/// [2,2s]-factor of g^2 when every induced S(K_{1,2s+1}) has three edges in one
/// block of degree at most two. Throws HypothesisViolated otherwise.
inline EvenFactor solve_condition(const Graph& g, int s, SolverStats* stats = nullptr) {
  detail::require_solvable_shape(g, s, "solve_condition");
  ConditionReport report = satisfies_block_condition(g, s);
  if (!report) throw HypothesisViolated(report.violations.front());
  return detail::finish(g, detail::Solver(s, stats).condition(g), s, "solve_condition");
}

/// Picks the star-free construction when it applies, the block-condition one otherwise.
inline EvenFactor solve(const Graph& g, int s, SolverStats* stats = nullptr) {
  detail::require_solvable_shape(g, s, "solve");
  if (is_star_free(g, s)) return solve_star_free(g, s, stats);
  return solve_condition(g, s, stats);
}

}  // namespace sqf
