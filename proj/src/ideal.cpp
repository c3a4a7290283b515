#include "syzgraph/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace syzgraph {

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Edge> generators)
    : num_vars_(num_vars), generators_(std::move(generators)) {
  if (num_vars < 1 || num_vars > kMaxVertices)
    throw std::invalid_argument("number of variables must lie in [1, 64]");
  if (generators_.empty()) throw std::invalid_argument("ideal needs at least one generator");
  for (const auto& g : generators_)
    if (g.u < 0 || g.v >= num_vars)
      throw std::invalid_argument("generator index out of range");
  std::sort(generators_.begin(), generators_.end());
  if (std::adjacent_find(generators_.begin(), generators_.end()) != generators_.end())
    throw std::invalid_argument("duplicate generator");
}

bool MonomialIdeal::is_squarefree() const { return square_count() == 0; }

std::size_t MonomialIdeal::square_count() const {
  return std::count_if(generators_.begin(), generators_.end(),
                       [](const Edge& e) { return e.is_loop(); });
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const auto& g = generators_[k];
    if (k) out += ',';
    out += 'x' + std::to_string(g.u + 1);
    if (g.is_loop())
      out += "^2";
    else
      out += "*x" + std::to_string(g.v + 1);
  }
  return out + ')';
}

LoopGraph to_graph(const MonomialIdeal& ideal) {
  return LoopGraph(ideal.num_vars(), {ideal.generators().begin(), ideal.generators().end()});
}

MonomialIdeal from_graph(const LoopGraph& g) {
  if (g.vertices() != first_vertices(g.order()))
    throw std::invalid_argument("from_graph needs a graph on all of its labels");
  return MonomialIdeal(g.order(), g.edges());
}

MonomialIdeal squarefree_part(const MonomialIdeal& ideal) {
  std::vector<Edge> kept;
  for (const auto& g : ideal.generators())
    if (!g.is_loop()) kept.push_back(g);
  if (kept.empty()) throw std::invalid_argument("squarefree part is empty");
  return MonomialIdeal(ideal.num_vars(), std::move(kept));
}

Polarization polarize(const MonomialIdeal& ideal) {
  const int n = ideal.num_vars();
  std::vector<Edge> gens;
  std::vector<int> origin(n);
  std::iota(origin.begin(), origin.end(), 0);
  int next = n;
  // Generators are sorted, so squares appear in ascending order of index.
  for (const auto& g : ideal.generators()) {
    if (g.is_loop()) {
      gens.emplace_back(g.u, next++);
      origin.push_back(g.u);
    } else {
      gens.push_back(g);
    }
  }
  if (next > kMaxVertices) throw std::length_error("polarization exceeds 64 variables");
  return Polarization{MonomialIdeal(next, std::move(gens)), n, std::move(origin)};
}

Multidegree Multidegree::of_set(int n, VertexSet s) {
  std::vector<unsigned> e(n, 0);
  for (int v : members(s)) e.at(v) = 1;
  return Multidegree(std::move(e));
}

unsigned Multidegree::total() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0U);
}

bool Multidegree::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](unsigned e) { return e <= 1; });
}

VertexSet support(const Multidegree& s) {
  VertexSet out = 0;
  for (int v = 0; v < s.size(); ++v)
    if (s[v] > 0) out |= singleton(v);
  return out;
}

bool divides(const Edge& generator, const Multidegree& s) {
  if (generator.is_loop()) return s[generator.u] >= 2;
  return s[generator.u] >= 1 && s[generator.v] >= 1;
}

MonomialIdeal restrict_to(const MonomialIdeal& ideal, const Multidegree& s) {
  if (s.size() != ideal.num_vars())
    throw std::invalid_argument("multidegree length does not match the ring");
  std::vector<Edge> kept;
  for (const auto& g : ideal.generators())
    if (divides(g, s)) kept.push_back(g);
  if (kept.empty()) throw std::invalid_argument("no generator divides the multidegree");
  return MonomialIdeal(ideal.num_vars(), std::move(kept));
}

SimpleGraph edge_graph(const MonomialIdeal& ideal) { return edge_graph(to_graph(ideal)); }

}  // namespace syzgraph
