#pragma once

#include <optional>
#include <string>
#include <vector>

#include "squarefactor/graph.hpp"
#include "squarefactor/trails.hpp"

namespace sqf {

// Given a factor F of (HxP)^2, where P is a short path hung at x, these
// routines cut P away and repair F into a spanning s-trail of H^2.
//
// Vertex convention (see attach_path): with n = h.order(), the path is
// x - n for a pendant edge and x - n - (n+1) for a pendant P3. So y = n, z = n+1.

enum class PendantPath {
  kEdge,      ///< P = x-y
  kTwoEdges,  ///< P = x-y-z
};

enum class OutcomeKind {
  kClosedAtRoot,    ///< closed trail at x, degree of x at most 2s-2
  kOpenToNeighbor,  ///< open trail ending at a neighbour of x in h
};

struct TrailOutcome {
  OutcomeKind kind = OutcomeKind::kClosedAtRoot;
  Trail trail;
};

inline const char* to_string(OutcomeKind k) {
  return k == OutcomeKind::kClosedAtRoot ? "closed-at-root" : "open-to-neighbor";
}

/// Components K_0..K_l of F minus the path vertices, and how y attaches to them.
struct ComponentSplit {
  /// Vertex sets over h's ids. components[0] contains x, the rest ascend by lowest vertex.
  std::vector<VertexSet> components;
  /// Edges of F with both ends in h.
  EdgeSet inner;
  /// W = N_F(y) - {z}.
  VertexSet attach;
  /// W_i = W ∩ V(K_i).
  std::vector<VertexSet> attach_parts;
  /// M_i: near-perfect matchings on W_i using as few F-edges as possible.
  std::vector<std::vector<Edge>> matchings;
  /// W_i minus the vertices covered by M_i (one vertex for i = 0 with a P3, two otherwise).
  std::vector<std::vector<Vertex>> unmatched;
};

namespace detail {

struct MatchingChoice {
  std::vector<Edge> edges;
  int cost = 0;
};

// All matchings on `pool` leaving exactly `skip` vertices uncovered, keeping the
// one with fewest edges in `avoid`; ties go to the lexicographically smallest.
inline void enumerate_matchings(VertexSet pool, int skip, const EdgeSet& avoid, std::vector<Edge>& current,
                                int cost, std::optional<MatchingChoice>& best) {
  if (pool.empty()) {
    if (skip != 0) return;
    if (!best || cost < best->cost || (cost == best->cost && current < best->edges)) {
      best = MatchingChoice{current, cost};
    }
    return;
  }
  if (pool.size() < skip) return;
  Vertex v = pool.front();
  VertexSet rest = pool - VertexSet::single(v);
  for (Vertex w : rest) {
    current.push_back({v, w});
    enumerate_matchings(rest - VertexSet::single(w), skip, avoid, current, cost + (avoid.contains(v, w) ? 1 : 0),
                        best);
    current.pop_back();
  }
  if (skip > 0) enumerate_matchings(rest, skip - 1, avoid, current, cost, best);
}

inline int pendant_length(PendantPath p) { return p == PendantPath::kEdge ? 1 : 2; }

}  // namespace detail

/// Splits a factor f of (h x P)^2 around y. Does not check f; the extraction
/// routines do that first.
inline ComponentSplit split_factor(const Graph& h, Vertex x, const EdgeSet& f, PendantPath pendant) {
  const int n = h.order();
  h.check_vertex(x);
  if (f.vertex_count() != n + detail::pendant_length(pendant)) {
    throw PreconditionError("split_factor: factor has the wrong number of vertices");
  }
  const Vertex y = n;

  ComponentSplit split;
  split.inner = EdgeSet(n);
  for (Edge e : f.edges()) {
    if (e.v < n) split.inner.insert(e);
  }
  Graph inner_graph(split.inner, std::vector<int>(static_cast<std::size_t>(n), 0));
  std::vector<VertexSet> comps = components(inner_graph);
  for (VertexSet c : comps) {
    if (c.contains(x)) split.components.push_back(c);
  }
  for (VertexSet c : comps) {
    if (!c.contains(x)) split.components.push_back(c);
  }

  split.attach = f.neighbors(y) & VertexSet::range(n);
  for (std::size_t i = 0; i < split.components.size(); ++i) {
    VertexSet part = split.attach & split.components[i];
    split.attach_parts.push_back(part);
    int skip = (i == 0 && pendant == PendantPath::kTwoEdges) ? 1 : 2;
    std::optional<detail::MatchingChoice> best;
    std::vector<Edge> scratch;
    detail::enumerate_matchings(part, skip, split.inner, scratch, 0, best);
    if (!best) {
      split.matchings.emplace_back();
      split.unmatched.emplace_back();
      continue;
    }
    VertexSet left = part;
    for (Edge e : best->edges) {
      left.erase(e.u);
      left.erase(e.v);
    }
    split.matchings.push_back(best->edges);
    split.unmatched.push_back(left.to_vector());
  }
  return split;
}

/// Empty when the split satisfies its parity invariants: every W_i is non-empty,
/// and |W_i| is odd exactly for i = 0 (pendant P3) or even for all i (pendant edge).
inline std::string split_problem(const ComponentSplit& split, PendantPath pendant) {
  for (std::size_t i = 0; i < split.attach_parts.size(); ++i) {
    int size = split.attach_parts[i].size();
    if (size == 0) return "W_" + std::to_string(i) + " is empty";
    bool odd_expected = pendant == PendantPath::kTwoEdges && i == 0;
    if ((size % 2 == 1) != odd_expected) return "W_" + std::to_string(i) + " has the wrong parity";
    std::size_t skip = odd_expected ? 1 : 2;
    if (split.unmatched[i].size() != skip) return "M_" + std::to_string(i) + " leaves the wrong number uncovered";
  }
  return {};
}

/// Empty when `outcome` is a valid extraction for (h, x, s), otherwise a reason.
inline std::string outcome_problem(const Graph& h, Vertex x, int s, const TrailOutcome& outcome,
                                   PendantPath pendant = PendantPath::kTwoEdges) {
  const Graph sq = square(h);
  const Trail& t = outcome.trail;
  if (std::string p = trail_problem(sq, t, s); !p.empty()) return p;
  if (VertexSet::of(t.walk) != h.vertices()) return "trail does not span h";
  auto edges = trail_edge_set(t, h.order());
  if (outcome.kind == OutcomeKind::kClosedAtRoot) {
    if (pendant == PendantPath::kEdge) return "a pendant edge never yields a closed outcome";
    if (!t.closed() || t.front() != x) return "closed outcome is not a closed trail at x";
    if (edges->degree(x) > 2 * s - 2) return "degree of x exceeds 2s-2";
    return {};
  }
  if (t.closed()) return "open outcome is a closed trail";
  if (!h.neighbors(x).contains(t.back())) return "trail does not end at a neighbour of x";
  if (pendant == PendantPath::kTwoEdges && t.front() != x) return "trail does not start at x";
  if (pendant == PendantPath::kEdge && !h.closed_neighborhood(x).contains(t.front())) {
    return "trail does not start in N[x]";
  }
  return {};
}

namespace detail {

inline void require_factor(const Graph& h, Vertex x, int s, const EdgeSet& f, PendantPath pendant) {
  if (!is_connected(h)) throw PreconditionError("extraction: h must be connected");
  const Graph host = square(attach_path(h, x, pendant_length(pendant)));
  if (f.vertex_count() != host.order() || !f.subset_of(host.edge_set()) || !verify_factor(host, f, s).valid()) {
    throw PreconditionError("extraction: f is not a [2,2s]-factor of (h x P)^2");
  }
}

// K_i △ M_i for every i, joined by connectors u_{i-1} v_i.
inline EdgeSet repaired_edges(const ComponentSplit& split) {
  EdgeSet t = split.inner;
  for (const auto& m : split.matchings) {
    for (Edge e : m) t.toggle(e.u, e.v);
  }
  for (std::size_t i = 1; i < split.components.size(); ++i) {
    Vertex from = split.unmatched[i - 1].back();
    Vertex to = split.unmatched[i].front();
    t.insert(from, to);
  }
  return t;
}

}  // namespace detail

/// Cuts the pendant P3 x-y-z off a [2,2s]-factor f of (h x P)^2. The result is
/// either a spanning closed s-trail of h^2 at x in which x has degree at most
/// 2s-2, or a spanning s-trail of h^2 from x to a neighbour of x.
inline TrailOutcome lemma4_extract(const Graph& h, Vertex x, int s, const EdgeSet& f) {
  detail::require_factor(h, x, s, f, PendantPath::kTwoEdges);
  const ComponentSplit split = split_factor(h, x, f, PendantPath::kTwoEdges);
  if (std::string p = split_problem(split, PendantPath::kTwoEdges); !p.empty()) {
    throw InternalError("lemma4_extract: " + p);
  }

  const EdgeSet t = detail::repaired_edges(split);
  TrailOutcome out;
  const Vertex root_free = split.unmatched[0].front();
  if (split.components.size() == 1 && root_free == x) {
    out.kind = OutcomeKind::kClosedAtRoot;
  } else {
    out.kind = OutcomeKind::kOpenToNeighbor;
  }
  out.trail = euler_trail(t, x);
  if (std::string p = outcome_problem(h, x, s, out); !p.empty()) throw InternalError("lemma4_extract: " + p);
  return out;
}

/// Cuts the pendant edge x-y off a [2,2s]-factor f of (h x P)^2, giving a
/// spanning s-trail of h^2 from some x' in N[x] to some x'' in N(x).
inline Trail lemma5_extract(const Graph& h, Vertex x, int s, const EdgeSet& f) {
  detail::require_factor(h, x, s, f, PendantPath::kEdge);
  const ComponentSplit split = split_factor(h, x, f, PendantPath::kEdge);
  if (std::string p = split_problem(split, PendantPath::kEdge); !p.empty()) {
    throw InternalError("lemma5_extract: " + p);
  }

  const EdgeSet t = detail::repaired_edges(split);
  // The two odd vertices both lie in N[x]; orient the trail so x, if it is one
  // of them, comes first.
  TrailOutcome out{OutcomeKind::kOpenToNeighbor, euler_trail(t, split.unmatched.front().front())};
  if (out.trail.back() == x) out.trail = out.trail.reversed();
  if (std::string p = outcome_problem(h, x, s, out, PendantPath::kEdge); !p.empty()) {
    throw InternalError("lemma5_extract: " + p);
  }
  return out.trail;
}

}  // namespace sqf
