#pragma once

// Graphs on at most 64 labelled vertices, stored as adjacency bitmasks.
//
// Vertices are 0-based in this API. Text formats and printed reports use
// 1-based labels (see io.hpp).

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace syzgraph {

using VertexSet = std::uint64_t;
using Count = boost::multiprecision::cpp_int;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }

constexpr VertexSet first_vertices(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int cardinality(VertexSet s) { return std::popcount(s); }

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

/// Members of `s` in increasing order.
std::vector<int> members(VertexSet s);

/// Unordered pair with u <= v; u == v is a loop.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool is_loop() const { return u == v; }
  constexpr VertexSet vertex_set() const { return singleton(u) | singleton(v); }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Loop-free graph. `vertices()` tracks which labels in [0, order()) are
/// present, so induced subgraphs keep their original labels.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  VertexSet vertices() const { return present_; }
  int vertex_count() const { return cardinality(present_); }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return contains(adj_[u], v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return cardinality(adj_[v]); }

  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  /// Throws std::out_of_range when `s` has a label outside vertices().
  SimpleGraph induced(VertexSet s) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  VertexSet present_ = 0;
  std::vector<VertexSet> adj_;
};

/// Graph that may carry loops; the generator graph of a degree-two
/// monomial ideal.
class LoopGraph {
 public:
  LoopGraph() = default;
  explicit LoopGraph(int n);
  LoopGraph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  VertexSet vertices() const { return present_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return contains(adj_[u], v); }
  bool has_loop(int v) const { return contains(loops_, v); }
  VertexSet loops() const { return loops_; }
  /// Neighbours of v, including v itself when v carries a loop.
  VertexSet neighbors(int v) const { return adj_[v]; }

  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  LoopGraph induced(VertexSet s) const;
  SimpleGraph strip_loops() const;

  friend bool operator==(const LoopGraph&, const LoopGraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  VertexSet present_ = 0;
  VertexSet loops_ = 0;
  std::vector<VertexSet> adj_;
};

/// Simple complement over distinct pairs of present vertices; loops of the
/// input are ignored.
SimpleGraph complement(const LoopGraph& g);
SimpleGraph complement(const SimpleGraph& g);

SimpleGraph induced_subgraph(const SimpleGraph& g, VertexSet s);
LoopGraph induced_subgraph(const LoopGraph& g, VertexSet s);

/// Number of connected components of the graph on its present vertices.
int component_count(const SimpleGraph& g);

/// Lexicographic breadth-first search order (first visited first).
std::vector<int> lex_bfs_order(const SimpleGraph& g);

/// Chordality via Lex-BFS: the reverse visit order must be a perfect
/// elimination ordering.
bool is_chordal(const SimpleGraph& g);

/// Chordless cycle, stored with the smallest vertex first and the smaller of
/// its two neighbours second (lexicographically least over rotations and
/// reflections).
struct InducedCycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexSet vertex_set() const;

  friend auto operator<=>(const InducedCycle&, const InducedCycle&) = default;
};

/// Canonical rotation/reflection of a cyclic vertex sequence.
InducedCycle canonical_cycle(std::vector<int> cyclic_order);

/// All chordless cycles of length r (r >= 3), sorted, each exactly once.
std::vector<InducedCycle> enumerate_induced_cycles(const SimpleGraph& g, int r);

/// Least r >= r_min for which g has a chordless r-cycle.
std::optional<int> shortest_induced_cycle_at_least(const SimpleGraph& g, int r_min);

/// Pairwise vertex-disjoint edges (loops allowed) with no edge between
/// distinct vertices of two different members. Loops on endpoints that are
/// not themselves chosen are ignored, matching the whisker picture after
/// polarization.
struct InducedMatching {
  std::vector<Edge> edges;

  VertexSet vertex_set() const;

  friend auto operator<=>(const InducedMatching&, const InducedMatching&) = default;
};

struct MatchingCount {
  Count count;
  std::vector<InducedMatching> witnesses;  // empty unless requested
};

MatchingCount count_induced_matchings(const LoopGraph& g, int k, bool want_witnesses = false);

/// Vertices are the edges of g in sorted order; two are adjacent when the
/// edges share an endpoint.
SimpleGraph edge_graph(const LoopGraph& g);

/// Longest shortest path between present vertices; nullopt when disconnected.
std::optional<int> diameter(const SimpleGraph& g);

/// Binomial coefficient; zero when k < 0 or k > n.
Count binomial(int n, int k);

/// Closed count of induced subgraphs of an n-cycle with i vertices and k
/// components: (n/k) C(i-1,k-1) C(n-i-1,k-1). Requires 0 < k <= i < n.
Count count_cycle_subgraphs(int n, int i, int k);

/// A leaf v of g lies on no chordless cycle of length >= 5 in the complement.
/// Always true; throws std::invalid_argument when v is not a leaf.
bool leaf_avoids_long_complement_cycles(const SimpleGraph& g, int v);

}  // namespace syzgraph
