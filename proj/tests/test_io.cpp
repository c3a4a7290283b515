#include "doctest.h"
#include "oracles.hpp"

#include "syzgraph/io.hpp"

#include <fstream>
#include <random>

using namespace syzgraph;

namespace {

int error_line(std::string_view text) {
  try {
    parse_ideal(text);
  } catch (const InputError& e) {
    return e.line();
  }
  return -1;
}

std::string error_message(std::string_view text) {
  try {
    parse_ideal(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(parse_ideal("graph 2\ne 1 2\n") == MonomialIdeal(2, {{0, 1}}));
  CHECK(parse_ideal("ideal 5\ng 1 1\ng 1 3\ng 3 5\ng 5 2\ng 2 4\ng 4 1\n") == oracle::square_example_ideal());
  CHECK(parse_ideal("# header comment\r\n\r\ngraph 3   # three\r\ne 3 2\r\n  e 1 1\r\n") ==
        MonomialIdeal(3, {{1, 2}, {0, 0}}));
  CHECK(parse_ideal("ideal 2\ng 2 1") == MonomialIdeal(2, {{0, 1}}));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("graph 3\ne 1 4\n") == 2);
  CHECK(error_message("graph 3\ne 1 4\n").find("index out of range") != std::string::npos);
  CHECK(error_line("graph 3\n\ne 1 2\ne 2 1\n") == 4);
  CHECK(error_line("graph 3\ne 1\n") == 2);
  CHECK(error_line("graph 3\ng 1 2\n") == 2);
  CHECK(error_line("graph 3\ne 1 x\n") == 2);
  CHECK(error_line("e 1 2\n") == 1);
  CHECK(error_line("graph 0\n") == 1);
  CHECK(error_line("graph 65\n") == 1);
  CHECK(error_line("graph 3\ngraph 3\n") == 2);
  CHECK(error_line("# nothing\n") == 0);
  CHECK(error_line("graph 3\n") == 0);
  CHECK(error_line("") == 0);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "syzgraph_test_io.txt";
  {
    std::ofstream out(path);
    out << format_ideal(oracle::square_example_ideal());
  }
  CHECK(parse_input(path) == oracle::square_example_ideal());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_input(path), InputError);
}

TEST_CASE("serialization round-trips") {
  CHECK(format_ideal(MonomialIdeal(3, {{0, 0}, {1, 2}})) == "ideal 3\ng 1 1\ng 2 3\n");
  CHECK(format_graph(MonomialIdeal(3, {{0, 0}, {1, 2}})) == "graph 3\ne 1 1\ne 2 3\n");
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const LoopGraph g = oracle::random_loop_graph(rng, 1 + trial % 12, 0.3);
    if (g.edge_count() == 0) continue;
    const MonomialIdeal ideal = from_graph(g);
    REQUIRE(parse_ideal(format_ideal(ideal)) == ideal);
    REQUIRE(parse_ideal(format_graph(ideal)) == ideal);
  }
}

TEST_CASE("diagram rendering") {
  const BettiTable t = graded_betti(oracle::square_example_ideal(), ExactField::rationals());
  CHECK(render_diagram(t) ==
        "  | 0 1 2 3\n"
        "--+--------\n"
        "2 | 6 7 1 -\n"
        "3 | - 1 3 1\n");

  BettiTable single;
  single.set(0, 2, 1);
  CHECK(render_diagram(single) ==
        "  | 0\n"
        "--+--\n"
        "2 | 1\n");

  CHECK(render_diagram(cycle_complement_betti(5)) ==
        "  | 0 1 2\n"
        "--+------\n"
        "2 | 5 5 -\n"
        "3 | - - 1\n");

  CHECK(render_diagram(cycle_complement_betti(8)) ==
        "  |  0  1  2  3  4  5\n"
        "--+------------------\n"
        "2 | 20 64 90 64 20  -\n"
        "3 |  -  -  -  -  -  1\n");
}

TEST_CASE("json carries the same numbers as the table") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const LoopGraph g = oracle::random_loop_graph(rng, 2 + trial % 7, 0.4);
    if (g.edge_count() == 0) continue;
    const BettiTable t = graded_betti(from_graph(g), ExactField::rationals());
    const nlohmann::json j = nlohmann::json::parse(to_json(t).dump());
    BettiTable back;
    for (const auto& e : j.at("entries")) back.set(e.at("i"), e.at("j"), e.at("beta").get<std::uint64_t>());
    REQUIRE(back == t);
    for (const auto& row : j.at("diagram")) {
      const int d = row.at("d");
      int i = 0;
      for (const auto& v : row.at("values")) {
        REQUIRE(t.get(i, i + d) == v.get<std::uint64_t>());
        ++i;
      }
    }
    REQUIRE(j.at("regularity") == t.regularity());
    REQUIRE(j.at("max_step") == t.max_step());
  }
  CHECK(to_json(Count(5)) == 5);
  CHECK(to_json(Count("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("classification reports") {
  const auto c = classify_first_nonlinear(oracle::square_example_ideal());
  const nlohmann::json j = to_json(c, true);
  CHECK(j.at("classification") == "FirstStepOne");
  CHECK(j.at("beta14") == 1);
  CHECK(j.at("witnesses") == nlohmann::json::parse("[[[1,1],[2,5]]]"));
  const std::string text = render_classification(c, true);
  CHECK(text.find("beta_{1,4}: 1") != std::string::npos);
  CHECK(text.find("(1,1) (2,5)") != std::string::npos);

  const auto r = classify_first_nonlinear(cycle_complement_ideal(6));
  const nlohmann::json k = to_json(r, true);
  CHECK(k.at("classification") == "FirstStepR");
  CHECK(k.at("r") == 6);
  CHECK(k.at("i3") == 3);
  CHECK(k.at("count") == 1);
  CHECK(k.at("multidegrees") == nlohmann::json::parse("[[1,2,3,4,5,6]]"));
  CHECK(k.at("witnesses") == nlohmann::json::parse("[[1,2,3,4,5,6]]"));

  CHECK(classification_name(classify_first_nonlinear(MonomialIdeal(2, {{0, 1}}))) == "LinearResolution");
  CHECK(format_vertex_set(0b10101) == "{1,3,5}");
  CHECK(format_cycle(InducedCycle{{0, 2, 4}}) == "1-3-5");
}

TEST_CASE("multigraded json") {
  const nlohmann::json j = to_json(multigraded_betti(MonomialIdeal(4, {{0, 1}, {2, 3}}), ExactField::rationals()));
  CHECK(j.at("num_vars") == 4);
  CHECK(j.at("entries").size() == 3);
  CHECK(j.at("entries")[2] == nlohmann::json::parse(R"({"i":1,"support":[1,2,3,4],"beta":1})"));
}
