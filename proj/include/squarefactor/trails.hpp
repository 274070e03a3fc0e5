#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "squarefactor/graph.hpp"
#include "squarefactor/graph_io.hpp"

namespace sqf {

/// Even edge subset of a host graph. A [2,2s]-factor is an EvenFactor that is
/// also spanning, connected and has maximum degree at most 2s.
struct EvenFactor {
  Graph host;
  EdgeSet edges;

  EvenFactor() = default;
  EvenFactor(Graph h, EdgeSet e) : host(std::move(h)), edges(std::move(e)) {
    if (edges.vertex_count() != host.order()) throw PreconditionError("factor and host differ in order");
    if (!edges.odd_vertices().empty()) throw PreconditionError("factor has odd-degree vertices");
  }
};

/// A trail as its vertex sequence u_0 u_1 ... u_r; consecutive vertices are the
/// edges. The trail is closed when u_0 == u_r. A single vertex is the trivial
/// closed trail.
struct Trail {
  std::vector<Vertex> walk;

  bool empty() const { return walk.empty(); }
  bool closed() const { return !walk.empty() && walk.front() == walk.back(); }
  Vertex front() const { return walk.front(); }
  Vertex back() const { return walk.back(); }
  std::size_t length() const { return walk.empty() ? 0 : walk.size() - 1; }

  Trail reversed() const { return Trail{{walk.rbegin(), walk.rend()}}; }

  /// How many times the trail passes through v; the repeated end of a closed
  /// trail counts once.
  int visits(Vertex v) const {
    int n = static_cast<int>(std::count(walk.begin(), walk.end(), v));
    if (closed() && walk.size() > 1 && walk.front() == v) --n;
    return n;
  }

  friend bool operator==(const Trail&, const Trail&) = default;
};

/// Edge set of the trail over vertices 0..n-1; nullopt if an edge repeats or a
/// step stays in place.
inline std::optional<EdgeSet> trail_edge_set(const Trail& t, int n) {
  EdgeSet out(n);
  for (std::size_t i = 1; i < t.walk.size(); ++i) {
    Vertex a = t.walk[i - 1];
    Vertex b = t.walk[i];
    if (a == b || a < 0 || b < 0 || a >= n || b >= n || out.contains(a, b)) return std::nullopt;
    out.insert(a, b);
  }
  return out;
}

/// Empty string when t is an s-trail of host, otherwise the first problem found.
inline std::string trail_problem(const Graph& host, const Trail& t, int s) {
  if (t.empty()) return "empty trail";
  for (std::size_t i = 1; i < t.walk.size(); ++i) {
    Vertex a = t.walk[i - 1];
    Vertex b = t.walk[i];
    if (a < 0 || b < 0 || a >= host.order() || b >= host.order()) return "vertex out of range";
    if (!host.adjacent(a, b)) {
      return "step " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge of the host";
    }
  }
  if (!trail_edge_set(t, host.order())) return "edge used twice";
  for (Vertex v : VertexSet::of(t.walk)) {
    if (t.visits(v) > s) return "vertex " + std::to_string(v) + " visited more than " + std::to_string(s) + " times";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Verification

struct VerificationReport {
  bool spanning = false;
  bool connected = false;
  bool even = false;
  bool degree_bounded = false;

  bool valid() const { return spanning && connected && even && degree_bounded; }
};

/// Checks that `edges` is a [2,2s]-factor of g. Spanning means every vertex of g
/// meets at least one factor edge.
inline VerificationReport verify_factor(const Graph& g, const EdgeSet& edges, int s) {
  if (edges.vertex_count() != g.order()) throw PreconditionError("verify_factor: factor and host differ in order");
  if (!edges.subset_of(g.edge_set())) throw PreconditionError("verify_factor: factor uses an edge outside the host");
  VerificationReport r;
  r.spanning = g.order() > 0 && edges.support() == g.vertices();
  r.connected = is_connected(edges, VertexSet{});
  r.even = edges.odd_vertices().empty();
  r.degree_bounded = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (edges.degree(v) > 2 * s) r.degree_bounded = false;
  }
  return r;
}

inline VerificationReport verify_factor(const Graph& g, const EvenFactor& f, int s) {
  return verify_factor(g, f.edges, s);
}

// ---------------------------------------------------------------------------
// Euler tours

/// Hierholzer's algorithm on an edge set, always taking the lowest-id unused
/// edge. With no odd vertices the result is a closed trail at `start`; with odd
/// vertices {start, t} it is an open trail from start to t.
inline Trail euler_trail(const EdgeSet& edges, Vertex start) {
  VertexSet odd = edges.odd_vertices();
  if (!(odd.empty() || (odd.size() == 2 && odd.contains(start)))) {
    throw PreconditionError("euler_trail: odd vertices do not allow a trail from the start vertex");
  }
  if (!is_connected(edges, VertexSet::single(start))) throw PreconditionError("euler_trail: edge set is disconnected");

  EdgeSet remaining = edges;
  std::vector<Vertex> stack{start};
  Trail out;
  while (!stack.empty()) {
    Vertex v = stack.back();
    VertexSet next = remaining.neighbors(v);
    if (next.empty()) {
      out.walk.push_back(v);
      stack.pop_back();
    } else {
      Vertex w = next.front();
      remaining.erase(v, w);
      stack.push_back(w);
    }
  }
  std::reverse(out.walk.begin(), out.walk.end());
  return out;
}

/// Closed trail through every edge of a connected even factor, rooted at its
/// lowest vertex. Each vertex is visited degree/2 times.
inline Trail factor_to_trail(const EdgeSet& f, int s) {
  if (f.empty()) throw PreconditionError("factor_to_trail: empty factor");
  if (!f.odd_vertices().empty()) throw PreconditionError("factor_to_trail: factor is not even");
  if (!is_connected(f, VertexSet{})) throw PreconditionError("factor_to_trail: factor is disconnected");
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    if (f.degree(v) > 2 * s) throw PreconditionError("factor_to_trail: degree exceeds 2s");
  }
  return euler_trail(f, f.support().front());
}

inline Trail factor_to_trail(const EvenFactor& f, int s) { return factor_to_trail(f.edges, s); }

inline EvenFactor trail_to_factor(const Trail& t, const Graph& host) {
  if (!t.closed()) throw PreconditionError("trail_to_factor: trail is not closed");
  for (std::size_t i = 1; i < t.walk.size(); ++i) {
    if (!host.adjacent(t.walk[i - 1], t.walk[i])) throw PreconditionError("trail_to_factor: edge absent from host");
  }
  auto edges = trail_edge_set(t, host.order());
  if (!edges) throw PreconditionError("trail_to_factor: trail repeats an edge");
  return EvenFactor(host, std::move(*edges));
}

// ---------------------------------------------------------------------------
// Algebra

inline EvenFactor symmetric_difference(const EvenFactor& a, const EvenFactor& b) {
  if (a.host.edge_set() != b.host.edge_set()) throw PreconditionError("symmetric_difference: different hosts");
  return EvenFactor(a.host, a.edges ^ b.edges);
}

/// Edges of h with exactly one end in k.
inline EdgeSet boundary(const Graph& h, VertexSet k) {
  EdgeSet out(h.order());
  for (Vertex v : k & h.vertices()) {
    for (Vertex w : h.neighbors(v) - k) out.insert(v, w);
  }
  return out;
}

inline EdgeSet boundary(const EdgeSet& h, VertexSet k) {
  EdgeSet out(h.vertex_count());
  for (Vertex v : k & VertexSet::range(h.vertex_count())) {
    for (Vertex w : h.neighbors(v) - k) out.insert(v, w);
  }
  return out;
}

/// Joins two trails. If `a` ends where `b` starts the walks are spliced there;
/// otherwise the host edge from a's end to b's start is added as a connector.
/// Visit counts at the junction add up; callers check them against s.
inline Trail concat_trails(const Graph& host, const Trail& a, const Trail& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Trail out = a;
  if (a.back() == b.front()) {
    out.walk.insert(out.walk.end(), b.walk.begin() + 1, b.walk.end());
  } else {
    if (!host.adjacent(a.back(), b.front())) {
      throw PreconditionError("concat_trails: no host edge " + std::to_string(a.back()) + "-" +
                              std::to_string(b.front()));
    }
    out.walk.insert(out.walk.end(), b.walk.begin(), b.walk.end());
  }
  if (!trail_edge_set(out, host.order())) throw PreconditionError("concat_trails: joined trail repeats an edge");
  return out;
}

// ---------------------------------------------------------------------------
// Text formats

/// "factor k" followed by k lines "u v".
inline void write_factor(std::ostream& out, const EdgeSet& f) {
  out << "factor " << f.size() << '\n';
  for (Edge e : f.edges()) out << e.u << ' ' << e.v << '\n';
}

/// Vertex ids on one line; closed trails repeat the first vertex at the end.
inline void write_trail(std::ostream& out, const Trail& t) {
  for (std::size_t i = 0; i < t.walk.size(); ++i) out << (i ? " " : "") << t.walk[i];
  out << '\n';
}

inline std::string format_factor(const EdgeSet& f) {
  std::ostringstream out;
  write_factor(out, f);
  return out.str();
}

inline EdgeSet read_factor(std::istream& in, int n) {
  std::string line;
  int line_no = 0;
  std::optional<long long> expected;
  long long seen = 0;
  EdgeSet f(n);
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skip_line(line)) continue;
    std::istringstream fields(line);
    if (!expected) {
      std::string word;
      long long k = 0;
      std::string rest;
      if (!(fields >> word >> k) || word != "factor" || k < 0 || (fields >> rest)) {
        throw ParseError(line_no, "expected \"factor k\"");
      }
      expected = k;
      continue;
    }
    auto pair = detail::parse_pair(line);
    if (!pair) throw ParseError(line_no, "expected edge \"u v\"");
    auto [u, v] = *pair;
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParseError(line_no, "invalid edge");
    if (f.contains(static_cast<Vertex>(u), static_cast<Vertex>(v))) throw ParseError(line_no, "duplicate edge");
    if (++seen > *expected) throw ParseError(line_no, "more edges than announced");
    f.insert(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!expected) throw ParseError(line_no, "missing \"factor k\" header");
  if (seen != *expected) throw ParseError(line_no, "edge count does not match header");
  return f;
}

}  // namespace sqf
