#pragma once

// Graded and multigraded Betti numbers of degree-two monomial ideals,
// computed by brute force from Hochster's formula:
//
//   beta_{i,S} = dim H~_{|S|-i-2}( clique complex of (G_S)^c )
//
// summed over vertex subsets S of the (polarized) generator graph G.
// Ideals with squares are polarized first, which preserves graded Betti
// numbers; multigraded entries are then reported in polarized coordinates.

#include "syzgraph/graph.hpp"
#include "syzgraph/homology.hpp"
#include "syzgraph/ideal.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace syzgraph {

/// Sparse table (i, j) -> beta_{i,j}; only nonzero entries are stored.
class BettiTable {
 public:
  Count get(int i, int j) const;
  void add(int i, int j, const Count& value);
  void set(int i, int j, const Count& value);

  const std::map<std::pair<int, int>, Count>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Last column with a nonzero entry (p); -1 when empty.
  int max_step() const;
  /// Largest row label d = j - i with a nonzero entry (the regularity m).
  int regularity() const;
  /// Number of rows between 2 and regularity() inclusive.
  int row_count() const { return empty() ? 0 : regularity() - 1; }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, Count> entries_;
};

/// Sparse (i, squarefree multidegree) -> beta_{i,s}, squarefree multidegrees
/// given as vertex sets over `num_vars` variables.
class MultigradedBetti {
 public:
  MultigradedBetti(int num_vars, std::vector<int> variable_origin)
      : num_vars_(num_vars), origin_(std::move(variable_origin)) {}

  int num_vars() const { return num_vars_; }
  /// origin()[v]: the original variable behind (possibly polarized) variable v.
  const std::vector<int>& origin() const { return origin_; }

  std::uint64_t get(int i, VertexSet s) const;
  void set(int i, VertexSet s, std::uint64_t value);
  const std::map<std::pair<int, VertexSet>, std::uint64_t>& entries() const { return entries_; }

  /// Sum over multidegrees of each total degree.
  BettiTable graded() const;

 private:
  int num_vars_;
  std::vector<int> origin_;
  std::map<std::pair<int, VertexSet>, std::uint64_t> entries_;
};

inline constexpr int kDefaultVertexCap = 16;
inline constexpr int kMaxVertexCap = 30;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(int vertices, int cap);
  int vertices() const { return vertices_; }
  int cap() const { return cap_; }

 private:
  int vertices_;
  int cap_;
};

/// Reduced homology dims of the clique complex of `complement` restricted
/// to s (index k <-> degree k-1). Cones are recognised as acyclic without
/// building the complex.
std::vector<std::size_t> subset_homology(const SimpleGraph& complement, VertexSet s, const ExactField& field);

/// Simple generator graph of the polarization of `ideal`; throws
/// CapExceeded when it has more than `cap` vertices.
SimpleGraph oracle_graph(const MonomialIdeal& ideal, int cap = kDefaultVertexCap);

/// Parallel over vertex subsets (OpenMP); merge is integer addition.
BettiTable graded_betti(const MonomialIdeal& ideal, const ExactField& field, int cap = kDefaultVertexCap);

/// Single-threaded reference for graded_betti.
BettiTable graded_betti_serial(const MonomialIdeal& ideal, const ExactField& field, int cap = kDefaultVertexCap);

MultigradedBetti multigraded_betti(const MonomialIdeal& ideal, const ExactField& field, int cap = kDefaultVertexCap);

/// beta_{i,i+2} = sum over (i+2)-subsets S of (#components of (G_S)^c - 1).
/// Index i of the result is step i. Throws std::invalid_argument on an ideal
/// with squares.
std::vector<Count> linear_strand_betti(const MonomialIdeal& ideal, int cap = kDefaultVertexCap);

/// Multigraded Betti numbers of `ideal` and of its restriction to `s` agree
/// on every squarefree t dividing x^s. Requires squarefree `ideal` and `s`.
bool restriction_consistency_check(const MonomialIdeal& ideal, const Multidegree& s, const ExactField& field,
                                   int cap = kDefaultVertexCap);

}  // namespace syzgraph
