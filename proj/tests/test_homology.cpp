#include "doctest.h"
#include "oracles.hpp"

#include "syzgraph/homology.hpp"

#include <limits>
#include <random>

using namespace syzgraph;

namespace {

std::vector<std::vector<oracle::Rational>> as_rationals(const IntMatrix& m) {
  std::vector<std::vector<oracle::Rational>> a(m.rows(), std::vector<oracle::Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  return a;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  IntMatrix m(rows, cols);
  std::uniform_int_distribution<std::int64_t> entry(-bound, bound);
  std::uniform_int_distribution<int> sparse(0, 2);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = sparse(rng) == 0 ? 0 : entry(rng);
  // Duplicate rows to force rank deficiency.
  if (rows > 2)
    for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) - m(1, c);
  return m;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

long long reduced_euler_from_faces(const SimplicialComplex& c) {
  long long chi = -1;
  for (int d = 0; d <= c.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c.face_count(d));
  return chi;
}

long long reduced_euler_from_homology(const std::vector<std::size_t>& h) {
  long long chi = 0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    const int degree = static_cast<int>(k) - 1;
    chi += (degree % 2 == 0 ? 1 : -1) * static_cast<long long>(h[k]);
  }
  return chi;
}

}  // namespace

TEST_CASE("field parsing") {
  CHECK(ExactField::parse("q").is_rational());
  CHECK(ExactField::parse("Q").is_rational());
  CHECK(ExactField::parse("gf:2") == ExactField::prime(2));
  CHECK(ExactField::parse("gf:101").characteristic() == 101);
  CHECK(ExactField::prime(7).name() == "GF(7)");
  CHECK(ExactField::rationals().name() == "Q");
  CHECK(ExactField::parse(ExactField::prime(3).spec()) == ExactField::prime(3));
  CHECK_THROWS_AS(ExactField::parse("gf:4"), std::invalid_argument);
  CHECK_THROWS_AS(ExactField::parse("gf:"), std::invalid_argument);
  CHECK_THROWS_AS(ExactField::parse("r"), std::invalid_argument);
  CHECK_THROWS_AS(ExactField::prime(1), std::invalid_argument);
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ULL));
}

TEST_CASE("rank over the rationals") {
  IntMatrix id(3, 3);
  for (int k = 0; k < 3; ++k) id(k, k) = 1;
  CHECK(rank_rational(id) == 3);
  CHECK(rank_rational(IntMatrix(4, 2)) == 0);
  CHECK(rank_rational(IntMatrix(0, 5)) == 0);

  SUBCASE("matches fraction elimination on small entries") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
      const IntMatrix m = random_matrix(rng, 1 + trial % 9, 1 + (trial / 9) % 9, 3);
      REQUIRE(rank_rational(m) == oracle::rational_rank(as_rationals(m)));
    }
  }
  SUBCASE("matches fraction elimination when int64 overflows") {
    std::mt19937_64 rng(2);
    const std::int64_t huge = std::numeric_limits<std::int64_t>::max() / 4;
    for (int trial = 0; trial < 60; ++trial) {
      const IntMatrix m = random_matrix(rng, 3 + trial % 6, 3 + trial % 5, huge);
      REQUIRE(rank_rational(m) == oracle::rational_rank(as_rationals(m)));
    }
  }
}

TEST_CASE("rank modulo a prime") {
  IntMatrix m(2, 2);
  m(0, 0) = 1, m(0, 1) = 1, m(1, 0) = 1, m(1, 1) = -1;
  CHECK(rank_rational(m) == 2);
  CHECK(rank_mod_p(m, 2) == 1);
  CHECK(rank_mod_p(m, 3) == 2);
  CHECK(rank_over(m, ExactField::prime(2)) == 1);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = random_matrix(rng, 1 + trial % 7, 1 + trial % 8, 1);
    const std::size_t q = rank_rational(a);
    // Reduction mod p can only lose rank.
    REQUIRE(rank_mod_p(a, 2) <= q);
    REQUIRE(rank_mod_p(a, 3) <= q);
    REQUIRE(rank_mod_p(a, 2147483647) == q);
  }
}

TEST_CASE("clique complexes") {
  const SimplicialComplex k3 = clique_complex(complete_graph(3));
  CHECK(k3.dimension() == 2);
  CHECK(k3.face_count(-1) == 1);
  CHECK(k3.face_count(0) == 3);
  CHECK(k3.face_count(1) == 3);
  CHECK(k3.face_count(2) == 1);

  const SimplicialComplex c4 = clique_complex(oracle::cycle_graph(4));
  CHECK(c4.dimension() == 1);
  CHECK(c4.face_count(1) == 4);
  CHECK(c4.face_count(2) == 0);

  const SimplicialComplex iso = clique_complex(SimpleGraph(4));
  CHECK(iso.dimension() == 0);
  CHECK(iso.face_count(0) == 4);

  SUBCASE("flag property") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
      const SimpleGraph g = oracle::random_simple_graph(rng, 7, 0.5);
      const SimplicialComplex c = clique_complex(g);
      for (VertexSet s = 1; s < (VertexSet{1} << 7); ++s) {
        bool clique = true;
        for (int u : members(s))
          for (int v : members(s))
            if (u < v && !g.adjacent(u, v)) clique = false;
        REQUIRE(c.contains_face(s) == clique);
      }
    }
  }
}

TEST_CASE("boundary matrices compose to zero") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const SimplicialComplex c = clique_complex(oracle::random_simple_graph(rng, 7, 0.6));
    for (int d = 1; d <= c.dimension(); ++d) {
      const IntMatrix lo = boundary_matrix(c, d - 1);
      const IntMatrix hi = boundary_matrix(c, d);
      REQUIRE(lo.cols() == hi.rows());
      for (std::size_t r = 0; r < lo.rows(); ++r)
        for (std::size_t k = 0; k < hi.cols(); ++k) {
          std::int64_t sum = 0;
          for (std::size_t j = 0; j < lo.cols(); ++j) sum += lo(r, j) * hi(j, k);
          REQUIRE(sum == 0);
        }
    }
  }
}

TEST_CASE("reduced homology") {
  const auto q = ExactField::rationals();
  for (int n = 1; n <= 5; ++n)
    for (std::size_t h : reduced_homology_dims(clique_complex(complete_graph(n)), q)) CHECK(h == 0);

  const auto circle = reduced_homology_dims(clique_complex(oracle::cycle_graph(4)), q);
  REQUIRE(circle.size() >= 3);
  CHECK(circle[0] == 0);
  CHECK(circle[1] == 0);
  CHECK(circle[2] == 1);

  const auto points = reduced_homology_dims(clique_complex(SimpleGraph(2)), q);
  CHECK(points[1] == 1);

  const auto empty = reduced_homology_dims(clique_complex(SimpleGraph(0)), q);
  REQUIRE(!empty.empty());
  CHECK(empty[0] == 1);

  SUBCASE("octahedral sphere") {
    // Complement of a perfect matching on six vertices: the boundary of the octahedron.
    const SimpleGraph g = complement(SimpleGraph(6, {{0, 1}, {2, 3}, {4, 5}}));
    for (const auto& f : {ExactField::rationals(), ExactField::prime(2), ExactField::prime(3)}) {
      const auto h = reduced_homology_dims(clique_complex(g), f);
      for (std::size_t k = 0; k < h.size(); ++k) CHECK(h[k] == (k == 3 ? 1U : 0U));
    }
  }

  SUBCASE("Euler characteristic") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 150; ++trial) {
      const SimpleGraph g = oracle::random_simple_graph(rng, 3 + trial % 7, 0.3 + 0.4 * (trial % 3) / 2.0);
      const SimplicialComplex c = clique_complex(g);
      for (const auto& f : {ExactField::rationals(), ExactField::prime(2)}) {
        const auto h = reduced_homology_dims(c, f);
        REQUIRE(reduced_euler_from_homology(h) == reduced_euler_from_faces(c));
      }
      // Homology in degree -1 and 0 counts components, independent of the field.
      const auto h = reduced_homology_dims(c, q);
      REQUIRE(h[1] == static_cast<std::size_t>(component_count(g) - 1));
    }
  }
}
