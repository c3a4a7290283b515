#include "doctest.h"
#include "oracles.hpp"

#include "syzgraph/betti.hpp"
#include "syzgraph/syzygy.hpp"

#include <random>

using namespace syzgraph;

namespace {

BettiTable table(std::initializer_list<std::tuple<int, int, int>> entries) {
  BettiTable t;
  for (const auto& [i, j, b] : entries) t.set(i, j, b);
  return t;
}

// 1 - sum (-1)^i beta_{i,j} t^j, read off the table.
std::vector<long long> k_polynomial_of(const BettiTable& t, std::size_t length) {
  std::vector<long long> poly(length, 0);
  poly[0] = 1;
  for (const auto& [key, value] : t.entries()) {
    REQUIRE(static_cast<std::size_t>(key.second) < length);
    const long long b = static_cast<long long>(value);
    poly[key.second] += key.first % 2 == 0 ? -b : b;
  }
  return poly;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, int n, double p) {
  for (;;) {
    const LoopGraph g = oracle::random_loop_graph(rng, n, p);
    if (g.edge_count() > 0) return from_graph(g);
  }
}

const ExactField Q = ExactField::rationals();
const ExactField GF2 = ExactField::prime(2);

}  // namespace

TEST_CASE("betti table basics") {
  BettiTable t;
  CHECK(t.empty());
  CHECK(t.row_count() == 0);
  t.add(0, 2, 3);
  t.add(0, 2, 1);
  t.add(2, 5, 1);
  t.set(1, 3, 0);
  CHECK(t.get(0, 2) == 4);
  CHECK(t.get(1, 3) == 0);
  CHECK(t.entries().size() == 2);
  CHECK(t.max_step() == 2);
  CHECK(t.regularity() == 3);
  CHECK(t.row_count() == 2);
}

TEST_CASE("graded Betti numbers of small ideals") {
  SUBCASE("principal ideal") {
    CHECK(graded_betti(MonomialIdeal(2, {{0, 1}}), Q) == table({{0, 2, 1}}));
  }
  SUBCASE("worked example with a square, several fields") {
    const BettiTable expected = table({{0, 2, 6}, {1, 3, 7}, {1, 4, 1}, {2, 4, 1}, {2, 5, 3}, {3, 6, 1}});
    for (const auto& f : {Q, GF2, ExactField::prime(3)}) CHECK(graded_betti(oracle::square_example_ideal(), f) == expected);
  }
  SUBCASE("two coprime quadrics resolve by Koszul") {
    CHECK(graded_betti(MonomialIdeal(4, {{0, 2}, {1, 3}}), Q) == table({{0, 2, 2}, {1, 4, 1}}));
  }
  SUBCASE("pure square") {
    CHECK(graded_betti(MonomialIdeal(1, {{0, 0}}), Q) == table({{0, 2, 1}}));
  }
  SUBCASE("complete graph ideal on four vertices") {
    // Linear resolution of the ideal of all six squarefree quadrics: 6, 8, 3.
    const MonomialIdeal k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(graded_betti(k4, Q) == table({{0, 2, 6}, {1, 3, 8}, {2, 4, 3}}));
  }
}

TEST_CASE("graded tables agree with the Hilbert series") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 250; ++trial) {
    const MonomialIdeal ideal = random_ideal(rng, 2 + trial % 7, 0.15 + 0.7 * (trial % 5) / 4.0);
    const auto expected = oracle::k_polynomial(ideal);
    for (const auto& f : {Q, GF2}) {
      const BettiTable t = graded_betti(ideal, f);
      REQUIRE(k_polynomial_of(t, expected.size()) == expected);
    }
  }
}

TEST_CASE("table invariants on random ideals") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const MonomialIdeal ideal = random_ideal(rng, 2 + trial % 7, 0.2 + 0.6 * (trial % 4) / 3.0);
    for (const auto& f : {Q, GF2}) {
      const BettiTable t = graded_betti(ideal, f);
      REQUIRE(t.get(0, 2) == ideal.size());
      for (const auto& [key, value] : t.entries()) {
        REQUIRE(value > 0);
        REQUIRE(key.second >= key.first + 2);
        REQUIRE(key.second <= 2 * (key.first + 1));
        if (key.first == 0) REQUIRE(key.second == 2);
      }
    }
  }
}

TEST_CASE("parallel and serial kernels agree") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const MonomialIdeal ideal = random_ideal(rng, 4 + trial % 5, 0.2 + 0.6 * (trial % 4) / 3.0);
    for (const auto& f : {Q, GF2})
      REQUIRE(graded_betti(ideal, f) == graded_betti_serial(ideal, f));
  }
  const MonomialIdeal c11 = cycle_complement_ideal(11);
  CHECK(graded_betti(c11, Q) == graded_betti_serial(c11, Q));
}

TEST_CASE("multigraded Betti numbers") {
  const MonomialIdeal c5 = cycle_complement_ideal(5);
  const MultigradedBetti mg = multigraded_betti(c5, Q);
  CHECK(mg.get(2, 0b11111) == 1);
  CHECK(mg.get(0, 0b11111) == 0);
  CHECK(mg.get(1, 0b11111) == 0);
  for (int v = 0; v < 5; ++v)
    for (int i = 0; i < 4; ++i) CHECK(mg.get(i, singleton(v)) == 0);
  CHECK(mg.graded() == graded_betti(c5, Q));

  SUBCASE("squares are reported in polarized coordinates") {
    const MultigradedBetti r = multigraded_betti(oracle::square_example_ideal(), Q);
    CHECK(r.num_vars() == 6);
    CHECK(r.origin() == std::vector<int>{0, 1, 2, 3, 4, 0});
    CHECK(r.get(0, singleton(0) | singleton(5)) == 1);
  }
  SUBCASE("sum over multidegrees gives the graded table") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 100; ++trial) {
      const MonomialIdeal ideal = random_ideal(rng, 2 + trial % 7, 0.4);
      for (const auto& f : {Q, GF2}) REQUIRE(multigraded_betti(ideal, f).graded() == graded_betti(ideal, f));
    }
  }
  SUBCASE("each generator appears once at step zero") {
    const MultigradedBetti r = multigraded_betti(MonomialIdeal(4, {{0, 1}, {2, 3}}), Q);
    CHECK(r.get(0, 0b0011) == 1);
    CHECK(r.get(0, 0b1100) == 1);
    CHECK(r.get(1, 0b1111) == 1);
    CHECK(r.entries().size() == 3);
  }
}

TEST_CASE("linear strand by component counts") {
  const MonomialIdeal c5 = cycle_complement_ideal(5);
  const auto strand = linear_strand_betti(c5);
  REQUIRE(strand.size() >= 2);
  CHECK(strand[0] == 5);
  CHECK(strand[1] == 5);
  CHECK_THROWS_AS(linear_strand_betti(oracle::square_example_ideal()), std::invalid_argument);

  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    const SimpleGraph g = oracle::random_simple_graph(rng, 2 + trial % 8, 0.2 + 0.6 * (trial % 4) / 3.0);
    if (g.edge_count() == 0) continue;
    const MonomialIdeal ideal = from_graph(LoopGraph(g.order(), g.edges()));
    const auto s = linear_strand_betti(ideal);
    REQUIRE(s.at(0) == ideal.size());
    const BettiTable t = graded_betti(ideal, Q);
    for (int i = 0; i < ideal.num_vars(); ++i) {
      const Count formula = static_cast<std::size_t>(i) < s.size() ? s[i] : Count(0);
      REQUIRE(formula == t.get(i, i + 2));
    }
  }
}

TEST_CASE("restriction to a multidegree") {
  const MonomialIdeal c6 = cycle_complement_ideal(6);
  CHECK(restriction_consistency_check(c6, Multidegree::of_set(6, 0b111111), Q));
  CHECK(restriction_consistency_check(c6, Multidegree::of_set(6, 0b011111), Q));
  CHECK(restriction_consistency_check(c6, Multidegree::of_set(6, 0b000101), Q));
  CHECK_THROWS_AS(restriction_consistency_check(oracle::square_example_ideal(), Multidegree::of_set(5, 0b11111), Q),
                  std::invalid_argument);

  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 6;
    const SimpleGraph g = oracle::random_simple_graph(rng, n, 0.5);
    if (g.edge_count() == 0) continue;
    const MonomialIdeal ideal = from_graph(LoopGraph(n, g.edges()));
    const VertexSet s = rng() & first_vertices(n);
    if (induced_subgraph(g, s).edge_count() == 0) continue;
    REQUIRE(restriction_consistency_check(ideal, Multidegree::of_set(n, s), GF2));
  }
}

TEST_CASE("subset homology and the vertex cap") {
  const SimpleGraph c5 = oracle::cycle_graph(5);
  CHECK(subset_homology(c5, 0, Q) == std::vector<std::size_t>{1});
  const auto h = subset_homology(c5, c5.vertices(), Q);
  REQUIRE(h.size() >= 3);
  CHECK(h[2] == 1);

  CHECK(oracle_graph(oracle::square_example_ideal()).order() == 6);
  CHECK_THROWS_AS(oracle_graph(oracle::square_example_ideal(), 5), CapExceeded);
  CHECK_THROWS_AS(graded_betti(cycle_complement_ideal(17), Q), CapExceeded);
  CHECK_THROWS_AS(graded_betti(oracle::square_example_ideal(), Q, 1), std::invalid_argument);
  CHECK_THROWS_AS(graded_betti(oracle::square_example_ideal(), Q, kMaxVertexCap + 1), std::invalid_argument);
  try {
    graded_betti(oracle::square_example_ideal(), Q, 4);
    FAIL("cap not enforced");
  } catch (const CapExceeded& e) {
    CHECK(e.vertices() == 6);
    CHECK(e.cap() == 4);
  }
}
