#pragma once

// Ideals generated by degree-two monomials. A generator x_u*x_v is stored as
// the Edge {u, v}; u == v is the square x_u^2.

#include "syzgraph/graph.hpp"

#include <span>
#include <string>
#include <vector>

namespace syzgraph {

class MonomialIdeal {
 public:
  /// Throws std::invalid_argument on an empty generator set, a repeated
  /// generator, or an index outside [0, num_vars).
  MonomialIdeal(int num_vars, std::vector<Edge> generators);

  int num_vars() const { return num_vars_; }
  /// Sorted ascending.
  std::span<const Edge> generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_squarefree() const;
  std::size_t square_count() const;

  /// Textual form with 1-based variables, e.g. "(x1^2,x1*x3)".
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int num_vars_;
  std::vector<Edge> generators_;
};

LoopGraph to_graph(const MonomialIdeal& ideal);
MonomialIdeal from_graph(const LoopGraph& g);

/// Drops the square generators. Throws std::invalid_argument when nothing
/// would remain.
MonomialIdeal squarefree_part(const MonomialIdeal& ideal);

/// Squarefree ideal obtained by replacing each square x_j^2 with x_j*x_{n+t},
/// fresh variables numbered in ascending order of j.
struct Polarization {
  MonomialIdeal ideal;
  int original_vars;
  /// origin[v] is the original variable that polarized variable v stands for.
  std::vector<int> origin;

  int fresh_count() const { return ideal.num_vars() - original_vars; }
};

Polarization polarize(const MonomialIdeal& ideal);

/// Exponent vector s in N^n.
class Multidegree {
 public:
  explicit Multidegree(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}
  static Multidegree of_set(int n, VertexSet s);

  int size() const { return static_cast<int>(exponents_.size()); }
  unsigned operator[](int v) const { return exponents_[v]; }
  std::span<const unsigned> exponents() const { return exponents_; }
  unsigned total() const;
  bool is_squarefree() const;

  friend bool operator==(const Multidegree&, const Multidegree&) = default;

 private:
  std::vector<unsigned> exponents_;
};

/// Indices with a positive exponent.
VertexSet support(const Multidegree& s);

bool divides(const Edge& generator, const Multidegree& s);

/// Generators dividing x^s. Throws std::invalid_argument when none does or
/// when s has the wrong length.
MonomialIdeal restrict_to(const MonomialIdeal& ideal, const Multidegree& s);

SimpleGraph edge_graph(const MonomialIdeal& ideal);

}  // namespace syzgraph
