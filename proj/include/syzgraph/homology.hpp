#pragma once

// Clique complexes and their reduced simplicial homology over an exact field.

#include "syzgraph/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace syzgraph {

/// The rationals, or GF(p) for a prime p < 2^31.
class ExactField {
 public:
  static ExactField rationals() { return ExactField(0); }
  /// Throws std::invalid_argument when p is not a prime below 2^31.
  static ExactField prime(std::uint32_t p);
  /// Accepts "q", "Q", "gf:<p>".
  static ExactField parse(std::string_view text);

  bool is_rational() const { return characteristic_ == 0; }
  std::uint32_t characteristic() const { return characteristic_; }
  /// "Q" or "GF(p)".
  std::string name() const;
  /// "q" or "gf:p", the form accepted by parse().
  std::string spec() const;

  friend bool operator==(const ExactField&, const ExactField&) = default;

 private:
  explicit ExactField(std::uint32_t c) : characteristic_(c) {}
  std::uint32_t characteristic_;
};

bool is_prime(std::uint64_t p);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Runs in checked
/// 64-bit arithmetic and restarts with big integers on overflow.
std::size_t rank_rational(const IntMatrix& m);

/// Rank over GF(p) by Gaussian elimination.
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);

std::size_t rank_over(const IntMatrix& m, const ExactField& field);

/// Faces grouped by dimension; faces_by_dim[d] holds the (d+1)-element faces
/// as vertex masks in ascending numeric order. The empty face is implicit.
struct SimplicialComplex {
  VertexSet vertices = 0;
  std::vector<std::vector<VertexSet>> faces_by_dim;

  int dimension() const { return static_cast<int>(faces_by_dim.size()) - 1; }
  std::size_t face_count(int d) const;
  bool contains_face(VertexSet face) const;
};

/// All cliques of g (flag complex on its present vertices).
SimplicialComplex clique_complex(const SimpleGraph& g);

/// Boundary map from d-faces to (d-1)-faces. The facet obtained by removing
/// the k-th smallest vertex carries sign (-1)^k. d = 0 maps onto the empty
/// face (a single row of ones).
IntMatrix boundary_matrix(const SimplicialComplex& c, int d);

/// dims[k] = dim H~_{k-1}(c; field), for k-1 = -1, 0, ..., dimension().
/// The complex with no vertices has H~_{-1} of dimension 1.
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& c, const ExactField& field);

}  // namespace syzgraph
