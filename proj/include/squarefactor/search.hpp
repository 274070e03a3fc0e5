#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "squarefactor/graph.hpp"
#include "squarefactor/trails.hpp"

namespace sqf {

/// Exact searches in this header refuse larger inputs.
inline constexpr int kOracleMaxVertices = 16;
inline constexpr int kCycleSearchMaxVertices = 32;
inline constexpr int kPathCoverMaxVertices = 20;

// ---------------------------------------------------------------------------
// Brute-force factor oracle

namespace detail {

// Decides the edges of the host one vertex at a time. When vertex v is
// processed, every still-undecided edge at v leads to a later vertex; the search
// picks the subset to keep so that v ends with an even degree in [2, 2s].
class FactorSearch {
 public:
  FactorSearch(const Graph& host, int s) : host_(host), s_(s), n_(host.order()), chosen_(host.order()) {
    degree_.assign(static_cast<std::size_t>(n_), 0);
    undecided_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) undecided_[idx(v)] = host.neighbors(v);
    order_ = processing_order();
  }

  std::optional<EdgeSet> run() {
    if (n_ < 3) return std::nullopt;
    for (Vertex v = 0; v < n_; ++v) {
      if (host_.degree(v) < 2) return std::nullopt;
    }
    if (!is_connected(host_)) return std::nullopt;
    if (descend(0)) return chosen_;
    return std::nullopt;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  // Grow the order from the lowest-degree vertex, always taking the vertex with
  // the most already-ordered neighbours, so finished regions close up early and
  // the connectivity cut fires sooner.
  std::vector<Vertex> processing_order() const {
    std::vector<Vertex> order;
    VertexSet placed;
    while (static_cast<int>(order.size()) < n_) {
      Vertex best = -1;
      int best_links = -1;
      int best_degree = std::numeric_limits<int>::max();
      for (Vertex v : host_.vertices() - placed) {
        int links = (host_.neighbors(v) & placed).size();
        int degree = host_.degree(v);
        if (links > best_links || (links == best_links && degree < best_degree)) {
          best = v;
          best_links = links;
          best_degree = degree;
        }
      }
      placed.insert(best);
      order.push_back(best);
    }
    return order;
  }

  bool descend(std::size_t step) {
    if (step == order_.size()) return is_connected(chosen_, host_.vertices());
    const Vertex v = order_[step];
    const VertexSet open = undecided_[idx(v)];
    const int have = degree_[idx(v)];
    VertexSet room;
    for (Vertex w : open) {
      if (degree_[idx(w)] < 2 * s_) room.insert(w);
    }
    const std::vector<Vertex> options = room.to_vector();
    for (int take = 0; take <= static_cast<int>(options.size()); ++take) {
      int total = have + take;
      if (total % 2 != 0 || total < 2) continue;
      if (total > 2 * s_) break;
      std::vector<Vertex> pick;
      if (choose(step, v, open, options, 0, take, pick)) return true;
    }
    return false;
  }

  bool choose(std::size_t step, Vertex v, VertexSet open, const std::vector<Vertex>& options, std::size_t from,
              int left, std::vector<Vertex>& pick) {
    if (left == 0) return apply(step, v, open, pick);
    for (std::size_t i = from; i + static_cast<std::size_t>(left) <= options.size(); ++i) {
      pick.push_back(options[i]);
      if (choose(step, v, open, options, i + 1, left - 1, pick)) return true;
      pick.pop_back();
    }
    return false;
  }

  bool apply(std::size_t step, Vertex v, VertexSet open, const std::vector<Vertex>& pick) {
    for (Vertex w : open) {
      undecided_[idx(w)].erase(v);
    }
    undecided_[idx(v)] = VertexSet{};
    for (Vertex w : pick) {
      chosen_.insert(v, w);
      ++degree_[idx(w)];
    }
    degree_[idx(v)] += static_cast<int>(pick.size());

    bool found = feasible(step) && descend(step + 1);
    if (found) return true;

    for (Vertex w : pick) {
      chosen_.erase(v, w);
      --degree_[idx(w)];
    }
    degree_[idx(v)] -= static_cast<int>(pick.size());
    undecided_[idx(v)] = open;
    for (Vertex w : open) undecided_[idx(w)].insert(v);
    return false;
  }

  bool feasible(std::size_t step) const {
    for (std::size_t i = step + 1; i < order_.size(); ++i) {
      Vertex w = order_[i];
      int d = degree_[idx(w)];
      int open = undecided_[idx(w)].size();
      if (d > 2 * s_ || d + open < 2) return false;
      if (open == 0 && d % 2 != 0) return false;
    }
    // Chosen plus undecided edges must still connect everything.
    VertexSet seen = VertexSet::single(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex u : frontier) next |= chosen_.neighbors(u) | undecided_[idx(u)];
      next -= seen;
      seen |= next;
      frontier = next;
    }
    return seen == host_.vertices();
  }

  const Graph& host_;
  int s_;
  int n_;
  EdgeSet chosen_;
  std::vector<int> degree_;
  std::vector<VertexSet> undecided_;
  std::vector<Vertex> order_;
};

}  // namespace detail

/// Some [2,2s]-factor of `host`, or nullopt when none exists. Exhaustive, so a
/// nullopt is a proof of non-existence.
inline std::optional<EdgeSet> oracle_factor(const Graph& host, int s) {
  if (s < 1) throw PreconditionError("oracle_factor: s must be positive");
  if (host.order() > kOracleMaxVertices) {
    throw SizeCapError("oracle_factor: at most " + std::to_string(kOracleMaxVertices) + " vertices");
  }
  return detail::FactorSearch(host, s).run();
}

inline std::optional<EdgeSet> oracle_square_factor(const Graph& g, int s) { return oracle_factor(square(g), s); }

// ---------------------------------------------------------------------------
// Hamiltonian cycles

namespace detail {

// Depth-first search for a hamiltonian cycle of `host` through `anchor_y`
// whose two edges at anchor_y lie in `anchor_graph`. When z != anchor_y, z must
// additionally have a cycle edge in `anchor_graph` that does not touch anchor_y.
class CycleSearch {
 public:
  CycleSearch(const Graph& host, const Graph& anchor_graph, Vertex y, Vertex z)
      : host_(host), anchor_(anchor_graph), y_(y), z_(z), n_(host.order()) {
    path_.assign(static_cast<std::size_t>(n_), -1);
    closers_ = anchor_.neighbors(y_) & host_.neighbors(y_);
  }

  std::optional<Trail> run() {
    if (n_ < 3) return std::nullopt;
    path_[0] = y_;
    visited_ = VertexSet::single(y_);
    if (!extend(1)) return std::nullopt;
    Trail t{path_};
    t.walk.push_back(y_);
    return t;
  }

 private:
  bool z_ok(Vertex pred, Vertex succ) const {
    return (anchor_.adjacent(pred, z_) && pred != y_) || (anchor_.adjacent(z_, succ) && succ != y_);
  }

  bool extend(int depth) {
    const Vertex cur = path_[static_cast<std::size_t>(depth - 1)];
    // z was placed just before cur: its neighbours on the cycle are now known.
    if (z_ != y_ && depth >= 3 && path_[static_cast<std::size_t>(depth - 2)] == z_ &&
        !z_ok(path_[static_cast<std::size_t>(depth - 3)], cur)) {
      return false;
    }
    if (depth == n_) {
      if (!closers_.contains(cur)) return false;
      if (z_ != y_ && cur == z_ && !z_ok(path_[static_cast<std::size_t>(n_ - 2)], y_)) return false;
      return true;
    }

    const VertexSet remaining = host_.vertices() - visited_;
    if (!remaining.intersects(closers_)) return false;
    for (Vertex w : remaining) {
      VertexSet around = host_.neighbors(w) & (remaining | VertexSet::single(cur));
      if (closers_.contains(w)) around.insert(y_);
      if (around.size() < 2) return false;
    }
    if (component_of(host_, cur, remaining | VertexSet::single(cur)) != (remaining | VertexSet::single(cur))) {
      return false;
    }

    VertexSet candidates = host_.neighbors(cur) & remaining;
    if (depth == 1) candidates &= closers_;
    for (Vertex w : candidates) {
      path_[static_cast<std::size_t>(depth)] = w;
      visited_.insert(w);
      if (extend(depth + 1)) return true;
      visited_.erase(w);
    }
    path_[static_cast<std::size_t>(depth)] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& anchor_;
  Vertex y_;
  Vertex z_;
  int n_;
  VertexSet closers_;
  VertexSet visited_;
  std::vector<Vertex> path_;
};

}  // namespace detail

/// Some hamiltonian cycle of `host`, as a closed trail starting at `start`.
inline std::optional<Trail> hamiltonian_cycle(const Graph& host, Vertex start = 0) {
  if (host.order() > kCycleSearchMaxVertices) throw SizeCapError("hamiltonian_cycle: graph too large");
  if (host.order() < 3) return std::nullopt;
  return detail::CycleSearch(host, host, start, start).run();
}

/// Checks a hamiltonian cycle C of g^2 against the incidence conditions: both
/// C-edges at y are edges of g, some C-edge at z is an edge of g, and when y and
/// z are adjacent these three edges are distinct.
inline bool check_fleischner_cycle(const Graph& g, const Trail& cycle, Vertex y, Vertex z) {
  const int n = g.order();
  if (!cycle.closed() || static_cast<int>(cycle.walk.size()) != n + 1) return false;
  if (VertexSet::of(cycle.walk) != g.vertices()) return false;
  const Graph sq = square(g);
  std::vector<std::pair<Vertex, Vertex>> around(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vertex a = cycle.walk[static_cast<std::size_t>(i)];
    Vertex b = cycle.walk[static_cast<std::size_t>(i + 1)];
    if (!sq.adjacent(a, b)) return false;
    around[static_cast<std::size_t>(b)].first = a;
    around[static_cast<std::size_t>(a)].second = b;
  }
  auto [yp, yn] = around[static_cast<std::size_t>(y)];
  if (!g.adjacent(yp, y) || !g.adjacent(y, yn)) return false;
  if (y == z) return true;
  std::vector<Edge> y_edges{make_edge(yp, y), make_edge(y, yn)};
  auto [zp, zn] = around[static_cast<std::size_t>(z)];
  for (Vertex w : {zp, zn}) {
    if (!g.adjacent(w, z)) continue;
    Edge e = make_edge(w, z);
    if (!g.adjacent(y, z) || (e != y_edges[0] && e != y_edges[1])) return true;
  }
  return false;
}

/// Hamiltonian cycle C of g^2, rooted at y, with both C-edges at y in g and a
/// C-edge at z in g distinct from those two. Such a cycle always exists when g
/// is 2-connected, so a failed search throws InternalError.
inline Trail fleischner_cycle(const Graph& g, Vertex y, Vertex z) {
  g.check_vertex(y);
  g.check_vertex(z);
  if (g.order() > kCycleSearchMaxVertices) throw SizeCapError("fleischner_cycle: graph too large");
  if (!is_biconnected(g)) throw PreconditionError("fleischner_cycle: graph is not 2-connected");
  const Graph sq = square(g);
  auto cycle = detail::CycleSearch(sq, g, y, z).run();
  if (!cycle) throw InternalError("fleischner_cycle: no admissible cycle found");
  return *cycle;
}

// ---------------------------------------------------------------------------
// Two-path cover of a block

struct DoublePathCover {
  /// a1 ... a2 with a1 adjacent to c1 and a2 adjacent to c2 in the block.
  std::vector<Vertex> first;
  /// c2 ... c1.
  std::vector<Vertex> second;
};

/// Covers V(h) by two disjoint paths of h^2, read off a cycle from
/// fleischner_cycle(h, c1, c2).
inline DoublePathCover block_double_path_cover(const Graph& h, Vertex c1, Vertex c2) {
  if (c1 == c2) throw PreconditionError("block_double_path_cover: c1 and c2 must differ");
  Trail cycle = fleischner_cycle(h, c1, c2);
  std::vector<Vertex> ring(cycle.walk.begin(), cycle.walk.end() - 1);  // ring[0] == c1

  for (bool flip : {false, true}) {
    std::vector<Vertex> r = ring;
    if (flip) std::reverse(r.begin() + 1, r.end());
    auto at = std::find(r.begin(), r.end(), c2) - r.begin();
    if (at < 2) continue;
    Vertex a2 = r[static_cast<std::size_t>(at - 1)];
    if (!h.adjacent(a2, c2)) continue;
    DoublePathCover out;
    out.first.assign(r.begin() + 1, r.begin() + at);
    out.second.assign(r.begin() + at, r.end());
    out.second.push_back(c1);
    return out;
  }
  throw InternalError("block_double_path_cover: cycle does not split as required");
}

// ---------------------------------------------------------------------------
// Minimum path cover

/// Minimum number of vertex-disjoint paths covering V(g), with the paths.
/// Dynamic programming over (covered set, end of the current path).
inline std::vector<std::vector<Vertex>> path_cover(const Graph& g) {
  const int n = g.order();
  if (n > kPathCoverMaxVertices) {
    throw SizeCapError("path_cover: at most " + std::to_string(kPathCoverMaxVertices) + " vertices");
  }
  if (n == 0) return {};

  const std::size_t states = std::size_t{1} << n;
  constexpr std::uint8_t kUnset = 0xFF;
  std::vector<std::uint8_t> best(states * static_cast<std::size_t>(n), kUnset);
  std::vector<std::int8_t> parent(states * static_cast<std::size_t>(n), -1);
  auto at = [n](std::size_t mask, Vertex v) { return mask * static_cast<std::size_t>(n) + static_cast<std::size_t>(v); };

  for (Vertex v = 0; v < n; ++v) best[at(std::size_t{1} << v, v)] = 1;
  for (std::size_t mask = 1; mask < states; ++mask) {
    for (Vertex v = 0; v < n; ++v) {
      std::uint8_t c = best[at(mask, v)];
      if (c == kUnset) continue;
      const VertexSet free = VertexSet::range(n) - VertexSet(mask);
      for (Vertex w : free) {
        std::uint8_t cost = static_cast<std::uint8_t>(c + (g.adjacent(v, w) ? 0 : 1));
        std::size_t next = at(mask | (std::size_t{1} << w), w);
        if (cost < best[next]) {
          best[next] = cost;
          parent[next] = static_cast<std::int8_t>(v);
        }
      }
    }
  }

  std::size_t mask = states - 1;
  Vertex end = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (best[at(mask, v)] < best[at(mask, end)]) end = v;
  }
  // Walk back; a step whose cost went up by one started a new path.
  std::vector<std::vector<Vertex>> paths{{}};
  while (true) {
    paths.back().push_back(end);
    Vertex prev = parent[at(mask, end)];
    std::uint8_t c = best[at(mask, end)];
    mask &= ~(std::size_t{1} << end);
    if (prev < 0) break;
    if (best[at(mask, prev)] != c) paths.emplace_back();
    end = prev;
  }
  for (auto& p : paths) std::reverse(p.begin(), p.end());
  std::reverse(paths.begin(), paths.end());
  return paths;
}

}  // namespace sqf
