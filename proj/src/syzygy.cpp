#include "syzgraph/syzygy.hpp"

#include <string>

namespace syzgraph {

NonlinearClassification classify_first_nonlinear(const MonomialIdeal& ideal) {
  const LoopGraph g = to_graph(ideal);
  // Two-edge induced matchings take precedence, also when the complement has
  // induced 4-cycles through square vertices.
  auto pairs = count_induced_matchings(g, 2, true);
  if (pairs.count > 0) return FirstStepOne{std::move(pairs.count), std::move(pairs.witnesses)};

  const SimpleGraph co = complement(g);
  const auto r = shortest_induced_cycle_at_least(co, 5);
  if (!r) return LinearResolution{};

  FirstStepR out;
  out.r = *r;
  out.i3 = *r - 3;
  out.witnesses = enumerate_induced_cycles(co, *r);
  out.count = out.witnesses.size();
  for (const auto& c : out.witnesses) out.multidegrees.push_back(c.vertex_set());
  return out;
}

int predicted_i3(const NonlinearClassification& c) {
  if (std::holds_alternative<FirstStepOne>(c)) return 1;
  if (const auto* r = std::get_if<FirstStepR>(&c)) return r->i3;
  return 0;
}

Count predicted_first_nonlinear_betti(const NonlinearClassification& c) {
  if (const auto* one = std::get_if<FirstStepOne>(&c)) return one->beta14;
  if (const auto* r = std::get_if<FirstStepR>(&c)) return r->count;
  return 0;
}

bool has_linear_resolution(const MonomialIdeal& ideal) {
  return std::holds_alternative<LinearResolution>(classify_first_nonlinear(ideal));
}

LinearPresentationRoutes linear_presentation_routes(const MonomialIdeal& ideal) {
  const LoopGraph g = to_graph(ideal);
  LinearPresentationRoutes routes{};

  routes.no_two_edge_matching = count_induced_matchings(g, 2).count == 0;

  // The squarefree part is linearly presented iff the (shared) complement
  // has no chordless 4-cycle.
  bool ok = enumerate_induced_cycles(complement(g), 4).empty();
  const auto squares = members(g.loops());
  for (std::size_t a = 0; ok && a < squares.size(); ++a)
    for (std::size_t b = a + 1; ok && b < squares.size(); ++b) ok = g.adjacent(squares[a], squares[b]);
  for (const auto& e : ideal.generators()) {
    if (!ok) break;
    if (e.is_loop()) continue;
    for (int k : squares) {
      // k adjacent to itself through its loop when it is an endpoint.
      if (!g.adjacent(k, e.u) && !g.adjacent(k, e.v)) {
        ok = false;
        break;
      }
    }
  }
  routes.square_vertex_conditions = ok;

  const auto diam = diameter(edge_graph(ideal));
  routes.edge_graph_diameter_at_most_two = diam && *diam <= 2;
  return routes;
}

bool is_linearly_presented(const MonomialIdeal& ideal) {
  const auto routes = linear_presentation_routes(ideal);
  if (routes.no_two_edge_matching != routes.square_vertex_conditions ||
      routes.no_two_edge_matching != routes.edge_graph_diameter_at_most_two)
    throw InconsistentCriteria("linear presentation criteria disagree on " + ideal.to_string());
  return routes.no_two_edge_matching;
}

MonomialIdeal cycle_complement_ideal(int n) {
  if (n < 4) throw std::invalid_argument("cycle complement needs n >= 4");
  std::vector<Edge> gens;
  for (int u = 0; u < n; ++u)
    for (int v = u + 2; v < n; ++v)
      if (!(u == 0 && v == n - 1)) gens.emplace_back(u, v);
  return MonomialIdeal(n, std::move(gens));
}

BettiTable cycle_complement_betti(int n) {
  if (n < 4) throw std::invalid_argument("cycle complement needs n >= 4");
  BettiTable t;
  for (int i = 0; i <= n - 4; ++i) {
    const Count numerator = Count(n) * (i + 1) * binomial(n - 2, i + 2);
    const int denominator = n - i - 2;
    if (numerator % denominator != 0)
      throw std::logic_error("cycle complement Betti number not integral at n=" + std::to_string(n) +
                             ", i=" + std::to_string(i));
    t.set(i, i + 2, numerator / denominator);
  }
  t.set(n - 3, n, 1);
  return t;
}

Count diagonal_betti(const MonomialIdeal& ideal, int i) {
  if (i < 0) throw std::invalid_argument("step must be nonnegative");
  return count_induced_matchings(to_graph(ideal), i + 1).count;
}

int first_step_in_row(const BettiTable& t, int d) {
  int best = 0;
  for (const auto& [key, value] : t.entries()) {
    const auto [i, j] = key;
    if (i >= 1 && j - i == d && (best == 0 || i < best)) best = i;
  }
  return best;
}

ShapeReport verify_shape(const BettiTable& t) {
  ShapeReport report;
  const int m = t.regularity();
  const int p = t.max_step();
  for (int d = 3; d <= m; ++d) report.indices.push_back(first_step_in_row(t, d));
  for (std::size_t k = 0; k < report.indices.size(); ++k) {
    const int id = report.indices[k];
    if (id < 1 || id > p || (k > 0 && id <= report.indices[k - 1])) report.staircase = false;
  }
  for (const auto& [key, value] : t.entries()) {
    const auto [i, j] = key;
    if (j > 2 * (i + 1)) report.diagonal_bound = false;
    if (i == 0 && j != 2) report.initial_degree = false;
  }
  return report;
}

std::pair<Rational, Rational> binomial_identity_sides(int m, int a) {
  if (!(1 <= a && a < m)) throw std::invalid_argument("binomial identity needs 1 <= a < m");
  Rational left = 0;
  for (int k = 1; k <= a; ++k)
    left += Rational(k, k + 1) * Rational(binomial(m - a, k) * binomial(a, k));
  const Rational right = Rational(a, m - a + 1) * Rational(binomial(m, a + 1));
  return {left, right};
}

bool binomial_identity_check(int m, int a) {
  const auto [left, right] = binomial_identity_sides(m, a);
  return left == right;
}

std::vector<VertexSet> predicted_multidegrees(const MonomialIdeal& ideal) {
  const auto c = classify_first_nonlinear(ideal);
  const auto* r = std::get_if<FirstStepR>(&c);
  if (!r) throw std::logic_error("predicted multidegrees need a long-cycle classification");
  return r->multidegrees;
}

}  // namespace syzgraph
