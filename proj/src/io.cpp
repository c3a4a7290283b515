#include "syzgraph/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace syzgraph {

InputError::InputError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) words.push_back(line.substr(start, pos - start));
  }
  return words;
}

int parse_int(std::string_view word, int line) {
  int value = 0;
  const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || end != word.data() + word.size())
    throw InputError(line, "expected an integer, got '" + std::string(word) + "'");
  return value;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  enum class Format { none, graph, ideal } format = Format::none;
  int n = 0;
  std::vector<Edge> gens;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (format == Format::none) {
      if (words.size() != 2 || (words[0] != "graph" && words[0] != "ideal"))
        throw InputError(line_no, "expected header 'graph <n>' or 'ideal <n>'");
      format = words[0] == "graph" ? Format::graph : Format::ideal;
      n = parse_int(words[1], line_no);
      if (n < 1 || n > kMaxVertices) throw InputError(line_no, "vertex count must lie in [1, 64]");
      continue;
    }

    const std::string_view tag = format == Format::graph ? "e" : "g";
    if (words.size() != 3 || words[0] != tag)
      throw InputError(line_no, "expected '" + std::string(tag) + " <a> <b>'");
    const int a = parse_int(words[1], line_no);
    const int b = parse_int(words[2], line_no);
    if (a < 1 || a > n || b < 1 || b > n)
      throw InputError(line_no, "index out of range 1.." + std::to_string(n));
    const Edge e(a - 1, b - 1);
    if (std::find(gens.begin(), gens.end(), e) != gens.end()) throw InputError(line_no, "duplicate generator");
    gens.push_back(e);
  }
  if (format == Format::none) throw InputError(0, "missing header");
  if (gens.empty()) throw InputError(0, "empty generator set");
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal parse_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_ideal(buffer.str());
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "ideal " + std::to_string(ideal.num_vars()) + "\n";
  for (const auto& g : ideal.generators())
    out += "g " + std::to_string(g.u + 1) + " " + std::to_string(g.v + 1) + "\n";
  return out;
}

std::string format_graph(const MonomialIdeal& ideal) {
  std::string out = "graph " + std::to_string(ideal.num_vars()) + "\n";
  for (const auto& g : ideal.generators())
    out += "e " + std::to_string(g.u + 1) + " " + std::to_string(g.v + 1) + "\n";
  return out;
}

std::string render_diagram(const BettiTable& t) {
  const int p = std::max(t.max_step(), 0);
  const int m = std::max(t.regularity(), 2);
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (int d = 2; d <= m; ++d) {
    auto& row = cells.emplace_back();
    for (int i = 0; i <= p; ++i) {
      const Count value = t.get(i, i + d);
      row.push_back(value == 0 ? "-" : value.str());
      width = std::max(width, row.back().size());
    }
  }
  for (int i = 0; i <= p; ++i) width = std::max(width, std::to_string(i).size());
  const std::size_t label_width = std::to_string(m).size();

  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  std::string out = std::string(label_width, ' ') + " |";
  for (int i = 0; i <= p; ++i) out += " " + pad(std::to_string(i), width);
  out += "\n" + std::string(label_width + 1, '-') + "+" + std::string((p + 1) * (width + 1), '-') + "\n";
  for (int d = 2; d <= m; ++d) {
    out += pad(std::to_string(d), label_width) + " |";
    for (const auto& cell : cells[d - 2]) out += " " + pad(cell, width);
    out += "\n";
  }
  return out;
}

nlohmann::json to_json(const Count& c) {
  if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

nlohmann::json to_json(const BettiTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : t.entries())
    entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", to_json(value)}});
  nlohmann::json rows = nlohmann::json::array();
  const int p = t.max_step();
  for (int d = 2; d <= t.regularity(); ++d) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i <= p; ++i) row.push_back(to_json(t.get(i, i + d)));
    rows.push_back({{"d", d}, {"values", row}});
  }
  return {{"entries", entries}, {"max_step", p}, {"regularity", t.regularity()}, {"diagram", rows}};
}

namespace {

nlohmann::json labels(VertexSet s) {
  nlohmann::json out = nlohmann::json::array();
  for (int v : members(s)) out.push_back(v + 1);
  return out;
}

}  // namespace

nlohmann::json to_json(const MultigradedBetti& b) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : b.entries())
    entries.push_back({{"i", key.first}, {"support", labels(key.second)}, {"beta", value}});
  nlohmann::json origin = nlohmann::json::array();
  for (int v : b.origin()) origin.push_back(v + 1);
  return {{"num_vars", b.num_vars()}, {"variable_origin", origin}, {"entries", entries}};
}

std::string classification_name(const NonlinearClassification& c) {
  if (std::holds_alternative<FirstStepOne>(c)) return "FirstStepOne";
  if (std::holds_alternative<FirstStepR>(c)) return "FirstStepR";
  return "LinearResolution";
}

nlohmann::json to_json(const NonlinearClassification& c, bool with_witnesses) {
  nlohmann::json out = {{"classification", classification_name(c)},
                        {"i3", predicted_i3(c)},
                        {"beta", to_json(predicted_first_nonlinear_betti(c))}};
  if (const auto* one = std::get_if<FirstStepOne>(&c)) {
    out["beta14"] = to_json(one->beta14);
    if (with_witnesses) {
      nlohmann::json ws = nlohmann::json::array();
      for (const auto& m : one->witnesses) {
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& e : m.edges) edges.push_back({e.u + 1, e.v + 1});
        ws.push_back(edges);
      }
      out["witnesses"] = ws;
    }
  } else if (const auto* r = std::get_if<FirstStepR>(&c)) {
    out["r"] = r->r;
    out["count"] = to_json(r->count);
    nlohmann::json degs = nlohmann::json::array();
    for (VertexSet s : r->multidegrees) degs.push_back(labels(s));
    out["multidegrees"] = degs;
    if (with_witnesses) {
      nlohmann::json ws = nlohmann::json::array();
      for (const auto& cyc : r->witnesses) {
        nlohmann::json vs = nlohmann::json::array();
        for (int v : cyc.vertices) vs.push_back(v + 1);
        ws.push_back(vs);
      }
      out["witnesses"] = ws;
    }
  }
  return out;
}

std::string format_vertex_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : members(s)) {
    if (!first) out += ",";
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

std::string format_matching(const InducedMatching& m) {
  std::string out;
  for (const auto& e : m.edges) {
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + ")";
  }
  return out;
}

std::string format_cycle(const InducedCycle& c) {
  std::string out;
  for (int v : c.vertices) {
    if (!out.empty()) out += "-";
    out += std::to_string(v + 1);
  }
  return out;
}

std::string render_classification(const NonlinearClassification& c, bool with_witnesses) {
  std::ostringstream out;
  const int i3 = predicted_i3(c);
  out << "classification: " << classification_name(c) << "\n";
  out << "i3: " << i3 << "\n";
  if (const auto* one = std::get_if<FirstStepOne>(&c)) {
    out << "beta_{1,4}: " << one->beta14 << "\n";
    if (with_witnesses) {
      out << "witnesses (induced pairs of disjoint edges):\n";
      for (const auto& m : one->witnesses) out << "  " << format_matching(m) << "\n";
    }
  } else if (const auto* r = std::get_if<FirstStepR>(&c)) {
    out << "r: " << r->r << "\n";
    out << "beta_{" << i3 << "," << i3 + 3 << "}: " << r->count << "\n";
    out << "multidegrees:";
    for (VertexSet s : r->multidegrees) out << " " << format_vertex_set(s);
    out << "\n";
    if (with_witnesses) {
      out << "witnesses (induced " << r->r << "-cycles of the complement):\n";
      for (const auto& cyc : r->witnesses) out << "  " << format_cycle(cyc) << "\n";
    }
  } else {
    out << "linear resolution: yes\n";
  }
  return out.str();
}

}  // namespace syzgraph
