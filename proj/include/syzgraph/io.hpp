#pragma once

// Text formats (1-based labels, ASCII, line oriented, '#' starts a comment,
// LF or CRLF line ends):
//
//   graph <n>          ideal <n>
//   e <u> <v>          g <i> <j>
//
// An edge-list `e u u` is a loop; a generator-list `g i i` is x_i^2.

#include "syzgraph/betti.hpp"
#include "syzgraph/ideal.hpp"
#include "syzgraph/syzygy.hpp"

#include "json.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace syzgraph {

class InputError : public std::runtime_error {
 public:
  InputError(int line, const std::string& message);
  /// 1-based line number, 0 when the error is not tied to a line.
  int line() const { return line_; }

 private:
  int line_;
};

MonomialIdeal parse_ideal(std::string_view text);
MonomialIdeal parse_input(const std::filesystem::path& path);

/// Generator-list format, generators in sorted order.
std::string format_ideal(const MonomialIdeal& ideal);
/// Edge-list format.
std::string format_graph(const MonomialIdeal& ideal);

/// Rows d = j - i from 2 to the regularity, columns 0..p, '-' for zero.
std::string render_diagram(const BettiTable& t);

nlohmann::json to_json(const Count& c);
nlohmann::json to_json(const BettiTable& t);
nlohmann::json to_json(const MultigradedBetti& b);
nlohmann::json to_json(const NonlinearClassification& c, bool with_witnesses);

std::string classification_name(const NonlinearClassification& c);
/// Human-readable analysis report (1-based labels).
std::string render_classification(const NonlinearClassification& c, bool with_witnesses);

std::string format_vertex_set(VertexSet s);
std::string format_matching(const InducedMatching& m);
std::string format_cycle(const InducedCycle& c);

}  // namespace syzgraph
