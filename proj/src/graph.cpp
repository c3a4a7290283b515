#include "syzgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace syzgraph {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 64]");
}

}  // namespace

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(int n) : n_(n) {
  check_order(n);
  present_ = first_vertices(n);
  adj_.assign(n, 0);
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges) : SimpleGraph(n) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_ || !contains(present_, v))
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("simple graph cannot carry a loop");
  adj_[u] |= singleton(v);
  adj_[v] |= singleton(u);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int u : members(present_))
    for (int v : members(adj_[u] & ~first_vertices(u + 1))) out.emplace_back(u, v);
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (int u : members(present_)) twice += cardinality(adj_[u]);
  return twice / 2;
}

SimpleGraph SimpleGraph::induced(VertexSet s) const {
  if (s & ~present_) throw std::out_of_range("induced subgraph: vertex outside graph");
  SimpleGraph out(*this);
  out.present_ = s;
  for (int v = 0; v < n_; ++v) out.adj_[v] = contains(s, v) ? adj_[v] & s : 0;
  return out;
}

// ---------------------------------------------------------------------------
// LoopGraph

LoopGraph::LoopGraph(int n) : n_(n) {
  check_order(n);
  present_ = first_vertices(n);
  adj_.assign(n, 0);
}

LoopGraph::LoopGraph(int n, const std::vector<Edge>& edges) : LoopGraph(n) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

void LoopGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_ || !contains(present_, v))
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
}

void LoopGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] |= singleton(v);
  adj_[v] |= singleton(u);
  if (u == v) loops_ |= singleton(u);
}

std::vector<Edge> LoopGraph::edges() const {
  std::vector<Edge> out;
  for (int u : members(present_))
    for (int v : members(adj_[u] & ~first_vertices(u))) out.emplace_back(u, v);
  return out;
}

std::size_t LoopGraph::edge_count() const {
  std::size_t twice = 0;
  for (int u : members(present_)) twice += cardinality(adj_[u] & ~singleton(u));
  return twice / 2 + cardinality(loops_);
}

LoopGraph LoopGraph::induced(VertexSet s) const {
  if (s & ~present_) throw std::out_of_range("induced subgraph: vertex outside graph");
  LoopGraph out(*this);
  out.present_ = s;
  out.loops_ = loops_ & s;
  for (int v = 0; v < n_; ++v) out.adj_[v] = contains(s, v) ? adj_[v] & s : 0;
  return out;
}

SimpleGraph LoopGraph::strip_loops() const {
  SimpleGraph out(n_);
  out = out.induced(present_);
  for (const auto& e : edges())
    if (!e.is_loop()) out.add_edge(e.u, e.v);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <typename G>
SimpleGraph complement_impl(const G& g) {
  SimpleGraph out = SimpleGraph(g.order()).induced(g.vertices());
  const auto vs = members(g.vertices());
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.adjacent(vs[a], vs[b])) out.add_edge(vs[a], vs[b]);
  return out;
}

}  // namespace

SimpleGraph complement(const LoopGraph& g) { return complement_impl(g); }
SimpleGraph complement(const SimpleGraph& g) { return complement_impl(g); }

SimpleGraph induced_subgraph(const SimpleGraph& g, VertexSet s) { return g.induced(s); }
LoopGraph induced_subgraph(const LoopGraph& g, VertexSet s) { return g.induced(s); }

int component_count(const SimpleGraph& g) {
  int components = 0;
  VertexSet unseen = g.vertices();
  while (unseen) {
    ++components;
    VertexSet frontier = unseen & (~unseen + 1);
    VertexSet reached = frontier;
    while (frontier) {
      VertexSet next = 0;
      for (int v : members(frontier)) next |= g.neighbors(v);
      frontier = next & ~reached;
      reached |= next;
    }
    unseen &= ~reached;
  }
  return components;
}

std::vector<int> lex_bfs_order(const SimpleGraph& g) {
  const auto vs = members(g.vertices());
  const int count = static_cast<int>(vs.size());
  std::vector<std::vector<int>> label(g.order());
  std::vector<int> order;
  order.reserve(count);
  VertexSet unvisited = g.vertices();
  for (int step = 0; step < count; ++step) {
    int best = -1;
    for (int v : members(unvisited))
      if (best < 0 || label[best] < label[v]) best = v;
    order.push_back(best);
    unvisited &= ~singleton(best);
    for (int w : members(g.neighbors(best) & unvisited)) label[w].push_back(count - step);
  }
  return order;
}

bool is_chordal(const SimpleGraph& g) {
  auto elimination = lex_bfs_order(g);
  std::reverse(elimination.begin(), elimination.end());
  // Vertices after position i in the elimination order.
  VertexSet later = g.vertices();
  for (int v : elimination) {
    later &= ~singleton(v);
    const VertexSet right = g.neighbors(v) & later;
    if (!right) continue;
    int parent = -1;
    for (int u : elimination) {
      if (contains(right, u)) {
        parent = u;
        break;
      }
    }
    const VertexSet rest = right & ~singleton(parent);
    if (rest & ~g.neighbors(parent)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Chordless cycles

VertexSet InducedCycle::vertex_set() const {
  VertexSet s = 0;
  for (int v : vertices) s |= singleton(v);
  return s;
}

InducedCycle canonical_cycle(std::vector<int> cyclic_order) {
  if (cyclic_order.empty()) return {};
  auto lowest = std::min_element(cyclic_order.begin(), cyclic_order.end());
  std::rotate(cyclic_order.begin(), lowest, cyclic_order.end());
  if (cyclic_order.size() > 2 && cyclic_order.back() < cyclic_order[1])
    std::reverse(cyclic_order.begin() + 1, cyclic_order.end());
  return InducedCycle{std::move(cyclic_order)};
}

namespace {

// Visits every chordless r-cycle once, anchored at its least vertex and
// oriented so the second vertex is smaller than the last. The visitor
// returns false to stop the search.
class ChordlessCycleSearch {
 public:
  ChordlessCycleSearch(const SimpleGraph& g, int r, std::function<bool(const std::vector<int>&)> visit)
      : g_(g), r_(r), visit_(std::move(visit)) {}

  void run() {
    if (r_ < 3 || r_ > g_.vertex_count()) return;
    for (int anchor : members(g_.vertices())) {
      anchor_ = anchor;
      allowed_ = g_.vertices() & ~first_vertices(anchor + 1);
      for (int second : members(g_.neighbors(anchor) & allowed_)) {
        path_ = {anchor, second};
        if (!extend(0, singleton(second))) return;
      }
    }
  }

 private:
  // `inner` holds path vertices other than the anchor and the tail;
  // `on_path` holds all path vertices except the anchor.
  bool extend(VertexSet inner, VertexSet on_path) {
    const int tail = path_.back();
    VertexSet candidates = g_.neighbors(tail) & allowed_ & ~on_path;
    for (int w : members(candidates)) {
      if (g_.neighbors(w) & inner) continue;
      const int length = static_cast<int>(path_.size()) + 1;
      if (g_.adjacent(w, anchor_)) {
        if (length == r_ && path_[1] < w) {
          path_.push_back(w);
          const bool go_on = visit_(path_);
          path_.pop_back();
          if (!go_on) return false;
        }
        continue;
      }
      if (length < r_) {
        path_.push_back(w);
        const bool go_on = extend(inner | singleton(tail), on_path | singleton(w));
        path_.pop_back();
        if (!go_on) return false;
      }
    }
    return true;
  }

  const SimpleGraph& g_;
  int r_;
  std::function<bool(const std::vector<int>&)> visit_;
  int anchor_ = 0;
  VertexSet allowed_ = 0;
  std::vector<int> path_;
};

}  // namespace

std::vector<InducedCycle> enumerate_induced_cycles(const SimpleGraph& g, int r) {
  if (r < 3) throw std::invalid_argument("cycle length must be at least 3");
  std::vector<InducedCycle> found;
  ChordlessCycleSearch(g, r, [&](const std::vector<int>& path) {
    found.push_back(canonical_cycle(path));
    return true;
  }).run();
  std::sort(found.begin(), found.end());
  return found;
}

std::optional<int> shortest_induced_cycle_at_least(const SimpleGraph& g, int r_min) {
  if (r_min < 3) throw std::invalid_argument("cycle length must be at least 3");
  for (int r = r_min; r <= g.vertex_count(); ++r) {
    bool hit = false;
    ChordlessCycleSearch(g, r, [&](const std::vector<int>&) {
      hit = true;
      return false;
    }).run();
    if (hit) return r;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Induced matchings

VertexSet InducedMatching::vertex_set() const {
  VertexSet s = 0;
  for (const auto& e : edges) s |= e.vertex_set();
  return s;
}

MatchingCount count_induced_matchings(const LoopGraph& g, int k, bool want_witnesses) {
  if (k < 1) throw std::invalid_argument("matching size must be at least 1");
  // Inducedness only concerns edges between distinct vertices, so a loop
  // on an endpoint of a chosen edge does not spoil it.
  const std::vector<Edge> usable = g.edges();

  MatchingCount result;
  std::vector<Edge> chosen;
  const auto n = usable.size();

  auto search = [&](auto&& self, std::size_t start, VertexSet blocked) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      ++result.count;
      if (want_witnesses) result.witnesses.push_back(InducedMatching{chosen});
      return;
    }
    const auto remaining = static_cast<std::size_t>(k) - chosen.size();
    for (std::size_t idx = start; idx + remaining <= n; ++idx) {
      const Edge e = usable[idx];
      if (e.vertex_set() & blocked) continue;
      const VertexSet reach = e.vertex_set() | g.neighbors(e.u) | g.neighbors(e.v);
      chosen.push_back(e);
      self(self, idx + 1, blocked | reach);
      chosen.pop_back();
    }
  };
  search(search, 0, 0);
  return result;
}

// ---------------------------------------------------------------------------

SimpleGraph edge_graph(const LoopGraph& g) {
  const auto es = g.edges();
  if (es.size() > static_cast<std::size_t>(kMaxVertices))
    throw std::length_error("edge graph limited to 64 generators");
  SimpleGraph out(static_cast<int>(es.size()));
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b)
      if (es[a].vertex_set() & es[b].vertex_set())
        out.add_edge(static_cast<int>(a), static_cast<int>(b));
  return out;
}

std::optional<int> diameter(const SimpleGraph& g) {
  int longest = 0;
  for (int source : members(g.vertices())) {
    VertexSet reached = singleton(source);
    VertexSet frontier = reached;
    int depth = 0;
    while (true) {
      VertexSet next = 0;
      for (int v : members(frontier)) next |= g.neighbors(v);
      next &= ~reached;
      if (!next) break;
      ++depth;
      reached |= next;
      frontier = next;
    }
    if (reached != g.vertices()) return std::nullopt;
    longest = std::max(longest, depth);
  }
  return longest;
}

Count binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count c = 1;
  for (int t = 1; t <= k; ++t) c = c * (n - k + t) / t;
  return c;
}

Count count_cycle_subgraphs(int n, int i, int k) {
  if (!(0 < k && k <= i && i < n))
    throw std::invalid_argument("count_cycle_subgraphs requires 0 < k <= i < n");
  const Count numerator = Count(n) * binomial(i - 1, k - 1) * binomial(n - i - 1, k - 1);
  if (numerator % k != 0) throw std::logic_error("cycle subgraph count is not integral");
  return numerator / k;
}

bool leaf_avoids_long_complement_cycles(const SimpleGraph& g, int v) {
  if (v < 0 || v >= g.order() || !contains(g.vertices(), v) || g.degree(v) != 1)
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not a leaf");
  const SimpleGraph co = complement(g);
  for (int r = 5; r <= co.vertex_count(); ++r) {
    bool through_v = false;
    ChordlessCycleSearch(co, r, [&](const std::vector<int>& cycle) {
      through_v = std::find(cycle.begin(), cycle.end(), v) != cycle.end();
      return !through_v;
    }).run();
    if (through_v) return false;
  }
  return true;
}

}  // namespace syzgraph
