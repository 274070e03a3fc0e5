#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "squarefactor/error.hpp"
#include "squarefactor/vertex_set.hpp"

namespace sqf {

/// Edge subset over a fixed vertex range, stored as symmetric adjacency words.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int vertex_count) : adjacency_(static_cast<std::size_t>(vertex_count)) {}

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }

  bool contains(Vertex u, Vertex v) const { return adjacency_[idx(u)].contains(v); }
  bool contains(Edge e) const { return contains(e.u, e.v); }
  void insert(Vertex u, Vertex v) {
    adjacency_[idx(u)].insert(v);
    adjacency_[idx(v)].insert(u);
  }
  void insert(Edge e) { insert(e.u, e.v); }
  void erase(Vertex u, Vertex v) {
    adjacency_[idx(u)].erase(v);
    adjacency_[idx(v)].erase(u);
  }
  void toggle(Vertex u, Vertex v) {
    adjacency_[idx(u)] ^= VertexSet::single(v);
    adjacency_[idx(v)] ^= VertexSet::single(u);
  }

  VertexSet neighbors(Vertex v) const { return adjacency_[idx(v)]; }
  int degree(Vertex v) const { return adjacency_[idx(v)].size(); }

  int size() const {
    int twice = 0;
    for (VertexSet row : adjacency_) twice += row.size();
    return twice / 2;
  }
  bool empty() const {
    return std::all_of(adjacency_.begin(), adjacency_.end(), [](VertexSet r) { return r.empty(); });
  }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < vertex_count(); ++u) {
      for (Vertex v : adjacency_[idx(u)]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  /// Vertices incident with at least one edge.
  VertexSet support() const {
    VertexSet out;
    for (Vertex v = 0; v < vertex_count(); ++v) {
      if (!adjacency_[idx(v)].empty()) out.insert(v);
    }
    return out;
  }

  VertexSet odd_vertices() const {
    VertexSet out;
    for (Vertex v = 0; v < vertex_count(); ++v) {
      if (adjacency_[idx(v)].size() % 2 == 1) out.insert(v);
    }
    return out;
  }

  bool subset_of(const EdgeSet& other) const {
    if (other.vertex_count() != vertex_count()) return false;
    for (std::size_t i = 0; i < adjacency_.size(); ++i) {
      if (!adjacency_[i].subset_of(other.adjacency_[i])) return false;
    }
    return true;
  }

  EdgeSet& operator^=(const EdgeSet& other) {
    require_same_range(other);
    for (std::size_t i = 0; i < adjacency_.size(); ++i) adjacency_[i] ^= other.adjacency_[i];
    return *this;
  }
  EdgeSet& operator|=(const EdgeSet& other) {
    require_same_range(other);
    for (std::size_t i = 0; i < adjacency_.size(); ++i) adjacency_[i] |= other.adjacency_[i];
    return *this;
  }
  EdgeSet& operator&=(const EdgeSet& other) {
    require_same_range(other);
    for (std::size_t i = 0; i < adjacency_.size(); ++i) adjacency_[i] &= other.adjacency_[i];
    return *this;
  }
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }
  void require_same_range(const EdgeSet& other) const {
    if (other.vertex_count() != vertex_count()) {
      throw PreconditionError("edge sets over different vertex ranges");
    }
  }

  std::vector<VertexSet> adjacency_;
};

/// Simple undirected graph on vertices 0..order()-1.
///
/// Every vertex carries an integer label. Labels default to the vertex id and
/// survive induced subgraphs and gluing, so a vertex can be traced back to the
/// graph it was cut out of.
class Graph {
 public:
  static constexpr int kMaxVertices = VertexSet::kCapacity;

  Graph() = default;
  explicit Graph(int n) : edges_(check_order(n)), labels_(static_cast<std::size_t>(n)) {
    for (int v = 0; v < n; ++v) labels_[static_cast<std::size_t>(v)] = v;
  }
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (Edge e : edges) add_edge(e.u, e.v);
  }
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
  Graph(EdgeSet edges, std::vector<int> labels) : edges_(std::move(edges)), labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) != edges_.vertex_count()) {
      throw PreconditionError("label count does not match vertex count");
    }
  }

  int order() const { return edges_.vertex_count(); }
  int size() const { return edges_.size(); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  VertexSet neighbors(Vertex v) const { return edges_.neighbors(v); }
  VertexSet closed_neighborhood(Vertex v) const { return neighbors(v) | VertexSet::single(v); }
  int degree(Vertex v) const { return edges_.degree(v); }
  bool adjacent(Vertex u, Vertex v) const { return edges_.contains(u, v); }
  int max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
    return best;
  }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    edges_.insert(u, v);
  }

  const EdgeSet& edge_set() const { return edges_; }
  std::vector<Edge> edges() const { return edges_.edges(); }

  int label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& labels() const { return labels_; }
  void set_labels(std::vector<int> labels) {
    if (static_cast<int>(labels.size()) != order()) {
      throw PreconditionError("label count does not match vertex count");
    }
    labels_ = std::move(labels);
  }
  std::optional<Vertex> find_label(int label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= order()) {
      throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int check_order(int n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    if (n > kMaxVertices) {
      throw SizeCapError("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
    }
    return n;
  }

  EdgeSet edges_;
  std::vector<int> labels_;
};

// ---------------------------------------------------------------------------
// Small constructors

inline Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

/// K_{1,leaves} with the center at vertex 0.
inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// ---------------------------------------------------------------------------
// Connectivity

/// Vertices reachable from `source` without leaving `within`.
inline VertexSet component_of(const Graph& g, Vertex source, VertexSet within) {
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline VertexSet component_of(const Graph& g, Vertex source) {
  return component_of(g, source, g.vertices());
}

/// Components of g restricted to `within`, ordered by lowest vertex.
inline std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  while (!within.empty()) {
    VertexSet comp = component_of(g, within.front(), within);
    out.push_back(comp);
    within -= comp;
  }
  return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

/// The empty graph counts as connected.
inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return component_of(g, 0) == g.vertices();
}

/// Same test for the subgraph formed by an edge set, over the vertices it touches
/// plus `must_cover`.
inline bool is_connected(const EdgeSet& edges, VertexSet must_cover) {
  VertexSet span = edges.support() | must_cover;
  if (span.empty()) return true;
  VertexSet seen = VertexSet::single(span.front());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= edges.neighbors(v);
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return span.subset_of(seen);
}

/// Breadth-first distances from `source`; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next -= seen;
    for (Vertex v : next) dist[static_cast<std::size_t>(v)] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

// ---------------------------------------------------------------------------
// Square

/// G^2: u ~ v iff their distance in g is one or two. Labels are kept.
inline Graph square(const Graph& g) {
  EdgeSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet reach = g.neighbors(v);
    for (Vertex w : g.neighbors(v)) reach |= g.neighbors(w);
    reach.erase(v);
    for (Vertex w : reach) {
      if (v < w) out.insert(v, w);
    }
  }
  return Graph(std::move(out), g.labels());
}

// ---------------------------------------------------------------------------
// Blocks

struct BlockDecomposition {
  /// Vertex sets of the blocks, each the vertex set of a maximal 2-connected
  /// subgraph, a bridge, or an isolated vertex. Sorted lexicographically.
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  /// block_degree[i] = |cut_vertices ∩ blocks[i]|.
  std::vector<int> block_degree;

  /// Index of the block containing edge uv.
  std::optional<std::size_t> block_of_edge(Vertex u, Vertex v) const {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].contains(u) && blocks[i].contains(v)) return i;
    }
    return std::nullopt;
  }
};

namespace detail {

struct BlockSearch {
  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<Edge> stack;
  std::vector<VertexSet> blocks;
  int clock = 0;

  explicit BlockSearch(const Graph& graph)
      : g(graph),
        disc(static_cast<std::size_t>(graph.order()), -1),
        low(static_cast<std::size_t>(graph.order()), 0) {}

  void visit(Vertex u, Vertex parent) {
    auto ui = static_cast<std::size_t>(u);
    disc[ui] = low[ui] = clock++;
    for (Vertex v : g.neighbors(u)) {
      auto vi = static_cast<std::size_t>(v);
      if (disc[vi] == -1) {
        stack.push_back({u, v});
        visit(v, u);
        low[ui] = std::min(low[ui], low[vi]);
        if (low[vi] >= disc[ui]) {
          VertexSet block;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.insert(e.u);
            block.insert(e.v);
            if (e.u == u && e.v == v) break;
          }
          blocks.push_back(block);
        }
      } else if (v != parent && disc[vi] < disc[ui]) {
        stack.push_back({u, v});
        low[ui] = std::min(low[ui], disc[vi]);
      }
    }
  }
};

inline bool lexicographically_less(VertexSet a, VertexSet b) {
  auto av = a.to_vector();
  auto bv = b.to_vector();
  return av < bv;
}

}  // namespace detail

/// Biconnected components by the lowpoint method.
inline BlockDecomposition block_decomposition(const Graph& g) {
  detail::BlockSearch search(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (search.disc[static_cast<std::size_t>(v)] != -1) continue;
    if (g.degree(v) == 0) {
      search.blocks.push_back(VertexSet::single(v));
      search.disc[static_cast<std::size_t>(v)] = search.clock++;
      continue;
    }
    search.visit(v, -1);
  }

  BlockDecomposition out;
  out.blocks = std::move(search.blocks);
  std::sort(out.blocks.begin(), out.blocks.end(), detail::lexicographically_less);

  std::vector<int> membership(static_cast<std::size_t>(g.order()), 0);
  for (VertexSet b : out.blocks) {
    for (Vertex v : b) ++membership[static_cast<std::size_t>(v)];
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (membership[static_cast<std::size_t>(v)] >= 2) out.cut_vertices.insert(v);
  }
  for (VertexSet b : out.blocks) out.block_degree.push_back((b & out.cut_vertices).size());
  return out;
}

/// 2-connected in the usual sense: connected, at least 3 vertices, no cut vertex.
inline bool is_biconnected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return block_decomposition(g).cut_vertices.empty();
}

inline int block_edge_count(const Graph& g, VertexSet block) {
  int twice = 0;
  for (Vertex v : block) twice += (g.neighbors(v) & block).size();
  return twice / 2;
}

// ---------------------------------------------------------------------------
// Subgraphs

/// G[S] with vertices renumbered in ascending order of their old ids; labels are kept.
inline Graph induced_subgraph(const Graph& g, VertexSet subset) {
  if (!subset.subset_of(g.vertices())) throw PreconditionError("induced_subgraph: vertex out of range");
  std::vector<Vertex> old_ids = subset.to_vector();
  std::vector<int> new_id(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[static_cast<std::size_t>(old_ids[i])] = static_cast<int>(i);

  EdgeSet edges(static_cast<int>(old_ids.size()));
  std::vector<int> labels;
  labels.reserve(old_ids.size());
  for (Vertex old : old_ids) {
    labels.push_back(g.label(old));
    for (Vertex w : g.neighbors(old) & subset) {
      if (old < w) edges.insert(new_id[static_cast<std::size_t>(old)], new_id[static_cast<std::size_t>(w)]);
    }
  }
  return Graph(std::move(edges), std::move(labels));
}

/// Copy of g whose labels are its own vertex ids.
inline Graph with_identity_labels(Graph g) {
  std::vector<int> labels(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) labels[static_cast<std::size_t>(v)] = v;
  g.set_labels(std::move(labels));
  return g;
}

/// Branches of g at x: one subgraph G[V(C) ∪ {x}] per component C of g - x.
inline std::vector<Graph> branches_at(const Graph& g, Vertex x) {
  g.check_vertex(x);
  std::vector<Graph> out;
  for (VertexSet comp : components(g, g.vertices() - VertexSet::single(x))) {
    out.push_back(induced_subgraph(g, comp | VertexSet::single(x)));
  }
  if (out.empty()) out.push_back(g);
  return out;
}

/// An induced path x-y-z that is a proper induced subgraph of f, if one exists.
/// f is trivial at x exactly when this returns nothing: f is P3(x) itself or
/// lies inside the closed neighbourhood of x.
inline std::optional<std::array<Vertex, 3>> nontrivial_path(const Graph& f, Vertex x) {
  f.check_vertex(x);
  if (!is_connected(f)) throw PreconditionError("nontrivial_path: graph is disconnected");
  if (f.order() <= 3) return std::nullopt;
  VertexSet near = f.closed_neighborhood(x);
  for (Vertex z : f.vertices() - near) {
    VertexSet middles = f.neighbors(z) & f.neighbors(x);
    if (!middles.empty()) return std::array<Vertex, 3>{x, middles.front(), z};
  }
  return std::nullopt;
}

inline bool is_nontrivial_at(const Graph& f, Vertex x) { return nontrivial_path(f, x).has_value(); }

/// G1 x G2: the union of two graphs whose label sets meet exactly in `shared_label`.
/// Vertices of g1 keep their ids; the other vertices of g2 follow in order.
inline Graph glue(const Graph& g1, const Graph& g2, int shared_label) {
  std::optional<Vertex> x1 = g1.find_label(shared_label);
  std::optional<Vertex> x2 = g2.find_label(shared_label);
  if (!x1 || !x2) throw PreconditionError("glue: shared label missing from a graph");
  for (int l : g2.labels()) {
    if (l != shared_label && g1.find_label(l)) {
      throw PreconditionError("glue: graphs share more than one label");
    }
  }

  const int n = g1.order() + g2.order() - 1;
  if (n > Graph::kMaxVertices) throw SizeCapError("glue: result too large");
  std::vector<Vertex> map2(static_cast<std::size_t>(g2.order()));
  std::vector<int> labels = g1.labels();
  Vertex next = g1.order();
  for (Vertex v = 0; v < g2.order(); ++v) {
    if (v == *x2) {
      map2[static_cast<std::size_t>(v)] = *x1;
    } else {
      map2[static_cast<std::size_t>(v)] = next++;
      labels.push_back(g2.label(v));
    }
  }

  EdgeSet edges(n);
  for (Edge e : g1.edges()) edges.insert(e);
  for (Edge e : g2.edges()) {
    edges.insert(map2[static_cast<std::size_t>(e.u)], map2[static_cast<std::size_t>(e.v)]);
  }
  return Graph(std::move(edges), std::move(labels));
}

/// h with a pendant path of `length` new vertices hung at x. With n = h.order(),
/// the new path is x - n - (n+1) - ... . This is the glued graph HxP used by the
/// trail extraction routines.
inline Graph attach_path(const Graph& h, Vertex x, int length) {
  h.check_vertex(x);
  if (length < 1) throw PreconditionError("attach_path: length must be positive");
  int fresh = *std::max_element(h.labels().begin(), h.labels().end()) + 1;
  Graph path = path_graph(length + 1);
  std::vector<int> labels{h.label(x)};
  for (int i = 0; i < length; ++i) labels.push_back(fresh + i);
  path.set_labels(std::move(labels));
  return glue(h, path, h.label(x));
}

struct Contraction {
  Graph graph;
  /// members[w] lists the vertices of the original graph merged into w.
  std::vector<std::vector<Vertex>> members;
};

/// Contract each listed edge into a single vertex. Contracted vertices come
/// first, in the order of `pairs`; untouched vertices follow in ascending order.
inline Contraction contract_pairs(const Graph& g, std::span<const Edge> pairs) {
  VertexSet used;
  for (Edge e : pairs) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (!g.adjacent(e.u, e.v)) throw PreconditionError("contract_pairs: pair is not an edge");
    if (used.contains(e.u) || used.contains(e.v)) throw PreconditionError("contract_pairs: pairs overlap");
    used.insert(e.u);
    used.insert(e.v);
  }

  Contraction out;
  std::vector<int> image(static_cast<std::size_t>(g.order()), -1);
  for (const Edge& e : pairs) {
    int w = static_cast<int>(out.members.size());
    image[static_cast<std::size_t>(e.u)] = image[static_cast<std::size_t>(e.v)] = w;
    out.members.push_back({e.u, e.v});
  }
  for (Vertex v : g.vertices() - used) {
    image[static_cast<std::size_t>(v)] = static_cast<int>(out.members.size());
    out.members.push_back({v});
  }

  out.graph = Graph(static_cast<int>(out.members.size()));
  for (Edge e : g.edges()) {
    int a = image[static_cast<std::size_t>(e.u)];
    int b = image[static_cast<std::size_t>(e.v)];
    if (a != b) out.graph.add_edge(a, b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Independence number

namespace detail {

// Maximum clique in `adj` by branch and bound with a greedy colouring bound.
class MaxClique {
 public:
  explicit MaxClique(std::vector<VertexSet> adj) : adj_(std::move(adj)) {}

  int run(VertexSet candidates) {
    best_ = 0;
    expand(0, candidates);
    return best_;
  }

 private:
  void expand(int size, VertexSet candidates) {
    if (candidates.empty()) {
      best_ = std::max(best_, size);
      return;
    }
    std::vector<Vertex> order;
    std::vector<int> colour;
    VertexSet uncoloured = candidates;
    for (int c = 1; !uncoloured.empty(); ++c) {
      VertexSet available = uncoloured;
      while (!available.empty()) {
        Vertex v = available.front();
        available -= adj_[static_cast<std::size_t>(v)] | VertexSet::single(v);
        uncoloured.erase(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] <= best_) return;
      Vertex v = order[i];
      expand(size + 1, candidates & adj_[static_cast<std::size_t>(v)]);
      candidates.erase(v);
    }
  }

  std::vector<VertexSet> adj_;
  int best_ = 0;
};

}  // namespace detail

/// Exact α(g).
inline int independence_number(const Graph& g) {
  std::vector<VertexSet> complement(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    complement[static_cast<std::size_t>(v)] = g.vertices() - g.closed_neighborhood(v);
  }
  return detail::MaxClique(std::move(complement)).run(g.vertices());
}

}  // namespace sqf
