#pragma once

// Combinatorial descriptions of the Betti diagram of a degree-two monomial
// ideal: where the first nonlinear syzygies sit and how many there are, the
// closed form for complements of cycles, and structural checks on tables.

#include "syzgraph/betti.hpp"
#include "syzgraph/graph.hpp"
#include "syzgraph/ideal.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace syzgraph {

struct LinearResolution {};

/// Two-edge induced matchings exist; beta_{1,4} is their number.
struct FirstStepOne {
  Count beta14;
  std::vector<InducedMatching> witnesses;
};

/// No two-edge induced matching; r is the shortest chordless cycle of length
/// >= 5 in the complement, i3 = r - 3, and beta_{i3,r} counts those cycles.
struct FirstStepR {
  int r = 0;
  int i3 = 0;
  Count count;
  std::vector<InducedCycle> witnesses;
  std::vector<VertexSet> multidegrees;
};

using NonlinearClassification = std::variant<LinearResolution, FirstStepOne, FirstStepR>;

NonlinearClassification classify_first_nonlinear(const MonomialIdeal& ideal);

/// i3 predicted by a classification (0 for a linear resolution).
int predicted_i3(const NonlinearClassification& c);
/// beta_{i3,i3+3} predicted by a classification (0 for a linear resolution).
Count predicted_first_nonlinear_betti(const NonlinearClassification& c);

bool has_linear_resolution(const MonomialIdeal& ideal);

/// Raised when the three linear-presentation criteria disagree.
class InconsistentCriteria : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct LinearPresentationRoutes {
  bool no_two_edge_matching;       // no induced pair of disjoint edges
  bool square_vertex_conditions;   // squarefree part plus square-vertex adjacency
  bool edge_graph_diameter_at_most_two;
};

LinearPresentationRoutes linear_presentation_routes(const MonomialIdeal& ideal);

/// Common value of the three routes; throws InconsistentCriteria otherwise.
bool is_linearly_presented(const MonomialIdeal& ideal);

/// Edge ideal whose complement graph is the cycle 1-2-...-n-1.
MonomialIdeal cycle_complement_ideal(int n);

/// beta_{i,i+2} = n (i+1)/(n-i-2) C(n-2, i+2) for 0 <= i <= n-4, and
/// beta_{n-3,n} = 1. Throws std::invalid_argument for n < 4.
BettiTable cycle_complement_betti(int n);

/// beta_{i,2(i+1)} as the number of induced matchings with i+1 edges.
Count diagonal_betti(const MonomialIdeal& ideal, int i);

struct ShapeReport {
  /// indices[d - 3] = i_d for d = 3..regularity.
  std::vector<int> indices;
  bool staircase = true;       // 1 <= i_3 < ... < i_m <= p
  bool diagonal_bound = true;  // beta_{i,j} = 0 for j > 2(i+1)
  bool initial_degree = true;  // beta_{0,j} = 0 for j != 2

  bool valid() const { return staircase && diagonal_bound && initial_degree; }
  /// i_3, or 0 when the table has no nonlinear step.
  int i3() const { return indices.empty() ? 0 : indices.front(); }
};

/// i_d is the least i >= 1 with beta_{i,i+d} != 0, or 0 when there is none.
int first_step_in_row(const BettiTable& t, int d);

ShapeReport verify_shape(const BettiTable& t);

/// Both sides of
///   sum_{k=1}^{a} k/(k+1) C(m-a,k) C(a,k) = a/(m-a+1) C(m, a+1)
/// evaluated exactly. Throws std::invalid_argument unless 1 <= a < m.
bool binomial_identity_check(int m, int a);

using Rational = boost::multiprecision::cpp_rational;

/// (left side, right side) of the identity above.
std::pair<Rational, Rational> binomial_identity_sides(int m, int a);

/// Vertex sets of the shortest long chordless complement cycles, each
/// carrying multigraded Betti number 1 at step r - 3. Throws
/// std::logic_error unless the ideal classifies as FirstStepR.
std::vector<VertexSet> predicted_multidegrees(const MonomialIdeal& ideal);

}  // namespace syzgraph
