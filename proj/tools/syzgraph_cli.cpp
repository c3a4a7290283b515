// Command-line front end: analyze, betti, cycle-ideal, verify, sweep.
//
// Exit codes: 0 success, 1 verification discrepancy, 2 input error,
// 3 vertex cap exceeded.

#include "syzgraph/betti.hpp"
#include "syzgraph/io.hpp"
#include "syzgraph/syzygy.hpp"
#include "syzgraph/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <string>

namespace {

using namespace syzgraph;

enum ExitCode : int { kOk = 0, kDiscrepancy = 1, kInputError = 2, kCapExceeded = 3 };

struct RunConfig {
  std::string input;
  std::string inline_text;
  std::string field = "q";
  bool json = false;
  bool witnesses = false;
  bool multigraded = false;
  int cap = kDefaultVertexCap;
  std::uint64_t seed = 1;
  int count = 200;
  int n_min = 4;
  int n_max = 8;
  int exhaustive_max = 5;
  int cycle_n = 0;
  std::string replay_dir;
};

MonomialIdeal load_ideal(const RunConfig& cfg) {
  if (!cfg.inline_text.empty()) {
    std::string text = cfg.inline_text;
    std::replace(text.begin(), text.end(), ';', '\n');
    return parse_ideal(text);
  }
  if (cfg.input == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return parse_ideal(text);
  }
  if (cfg.input.empty()) throw InputError(0, "no input given (path, '-' or --inline)");
  return parse_input(cfg.input);
}

int cmd_analyze(const RunConfig& cfg) {
  const MonomialIdeal ideal = load_ideal(cfg);
  const auto c = classify_first_nonlinear(ideal);
  if (cfg.json) {
    auto out = to_json(c, cfg.witnesses);
    out["ideal"] = ideal.to_string();
    out["linearly_presented"] = is_linearly_presented(ideal);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "ideal: " << ideal.to_string() << "\n" << render_classification(c, cfg.witnesses);
    std::cout << "linearly presented: " << (is_linearly_presented(ideal) ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_betti(const RunConfig& cfg) {
  const MonomialIdeal ideal = load_ideal(cfg);
  const ExactField field = ExactField::parse(cfg.field);
  const BettiTable t = graded_betti(ideal, field, cfg.cap);
  if (cfg.json) {
    nlohmann::json out = {{"ideal", ideal.to_string()}, {"field", field.name()}, {"betti", to_json(t)}};
    if (cfg.multigraded) out["multigraded"] = to_json(multigraded_betti(ideal, field, cfg.cap));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "Betti diagram of " << ideal.to_string() << " over " << field.name() << "\n" << render_diagram(t);
    if (cfg.multigraded) {
      const auto mg = multigraded_betti(ideal, field, cfg.cap);
      std::cout << "multigraded entries (step: support = value):\n";
      for (const auto& [key, value] : mg.entries())
        std::cout << "  " << key.first << ": " << format_vertex_set(key.second) << " = " << value << "\n";
    }
  }
  return kOk;
}

int cmd_cycle_ideal(const RunConfig& cfg) {
  if (cfg.cycle_n < 4) throw InputError(0, "cycle-ideal needs n >= 4");
  const MonomialIdeal ideal = cycle_complement_ideal(cfg.cycle_n);
  const BettiTable t = cycle_complement_betti(cfg.cycle_n);
  if (cfg.json) {
    nlohmann::json out = {{"n", cfg.cycle_n}, {"ideal", format_ideal(ideal)}, {"betti", to_json(t)}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "# complement of the " << cfg.cycle_n << "-cycle 1-2-...-" << cfg.cycle_n << "-1\n";
  std::cout << format_ideal(ideal);
  std::cout << "# predicted Betti diagram\n";
  const std::string diagram = render_diagram(t);
  std::size_t pos = 0;
  while (pos < diagram.size()) {
    const auto eol = diagram.find('\n', pos);
    std::cout << "# " << diagram.substr(pos, eol - pos) << "\n";
    pos = eol + 1;
  }
  return kOk;
}

std::vector<ExactField> verify_fields(const RunConfig& cfg) {
  auto fields = default_verify_fields();
  const ExactField extra = ExactField::parse(cfg.field);
  if (std::find(fields.begin(), fields.end(), extra) == fields.end()) fields.push_back(extra);
  return fields;
}

int cmd_verify(const RunConfig& cfg) {
  const MonomialIdeal ideal = load_ideal(cfg);
  const auto report = verify_ideal(ideal, verify_fields(cfg), cfg.cap);

  std::map<CheckKind, std::pair<int, int>> tally;
  for (const auto& c : report.checks) (c.passed ? tally[c.kind].first : tally[c.kind].second) += 1;

  if (cfg.json) {
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [kind, counts] : tally) checks[to_string(kind)] = counts.second == 0;
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures()) failures.push_back({{"check", to_string(f.kind)}, {"detail", f.detail}});
    nlohmann::json tables = nlohmann::json::array();
    for (const auto& [field, t] : report.tables) tables.push_back({{"field", field.name()}, {"betti", to_json(t)}});
    std::cout << nlohmann::json{{"ideal", ideal.to_string()},
                                {"passed", report.passed()},
                                {"classification", to_json(report.classification, cfg.witnesses)},
                                {"checks", checks},
                                {"failures", failures},
                                {"tables", tables}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "ideal: " << ideal.to_string() << "\n" << render_classification(report.classification, cfg.witnesses);
    for (const auto& [field, t] : report.tables) std::cout << "oracle over " << field.name() << ":\n" << render_diagram(t);
    for (const auto& [kind, counts] : tally)
      std::cout << (counts.second == 0 ? "PASS " : "FAIL ") << to_string(kind) << "\n";
    for (const auto& f : report.failures()) std::cout << "  " << to_string(f.kind) << ": " << f.detail << "\n";
    std::cout << (report.passed() ? "verify: pass\n" : "verify: FAIL\n");
  }
  return report.passed() ? kOk : kDiscrepancy;
}

int cmd_sweep(const RunConfig& cfg) {
  SweepConfig sc;
  sc.seed = cfg.seed;
  sc.count = cfg.count;
  sc.n_min = cfg.n_min;
  sc.n_max = cfg.n_max;
  sc.exhaustive_max = cfg.exhaustive_max;
  sc.cap = cfg.cap;
  sc.fields = verify_fields(cfg);
  const SweepReport report = run_sweep(sc);

  if (!cfg.replay_dir.empty() && !report.failures.empty()) {
    std::filesystem::create_directories(cfg.replay_dir);
    for (std::size_t k = 0; k < report.failures.size(); ++k) {
      std::ofstream out(std::filesystem::path(cfg.replay_dir) / ("failure_" + std::to_string(k) + ".txt"));
      out << "# " << report.failures[k].origin << "\n" << report.failures[k].ideal_text;
    }
  }

  if (cfg.json) {
    nlohmann::json tallies = nlohmann::json::object();
    for (const auto& [kind, counts] : report.tallies)
      tallies[to_string(kind)] = {{"passed", counts.first}, {"failed", counts.second}};
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures) {
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : f.failed) checks.push_back({{"check", to_string(c.kind)}, {"detail", c.detail}});
      failures.push_back({{"origin", f.origin}, {"ideal", f.ideal_text}, {"checks", checks}});
    }
    std::cout << nlohmann::json{{"seed", cfg.seed},
                                {"exhaustive", report.exhaustive},
                                {"random", report.random},
                                {"skipped", report.skipped},
                                {"first_step_r", report.first_step_r},
                                {"squarefree", report.squarefree},
                                {"passed", report.passed()},
                                {"tallies", tallies},
                                {"failures", failures}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "sweep seed=" << cfg.seed << " n=[" << cfg.n_min << "," << cfg.n_max << "] count=" << cfg.count
              << " exhaustive<=" << cfg.exhaustive_max << " cap=" << cfg.cap << "\n";
    std::cout << "instances: " << report.exhaustive << " exhaustive, " << report.random << " random, "
              << report.skipped << " skipped (cap)\n";
    std::cout << "squarefree: " << report.squarefree << ", first step at a long cycle: " << report.first_step_r << "\n";
    for (const auto& [kind, counts] : report.tallies)
      std::cout << "  " << to_string(kind) << ": " << counts.first << " passed, " << counts.second << " failed\n";
    for (const auto& f : report.failures) {
      std::cout << "FAILURE (" << f.origin << ")\n" << f.ideal_text;
      for (const auto& c : f.failed) std::cout << "  " << to_string(c.kind) << ": " << c.detail << "\n";
    }
    std::cout << (report.passed() ? "sweep: pass\n" : "sweep: FAIL\n");
  }
  return report.passed() ? kOk : kDiscrepancy;
}

void add_input(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("input", cfg.input, "Input file in edge-list or generator-list format ('-' for stdin)");
  cmd->add_option("--inline", cfg.inline_text, "Input text with ';' as line separator");
}

void add_field(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--field", cfg.field, "Coefficient field: q or gf:<p>");
}

void add_cap(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--cap", cfg.cap, "Largest polarized vertex count the oracle accepts")
      ->check(CLI::Range(2, kMaxVertexCap));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers and first nonlinear syzygies of ideals generated by quadratic monomials"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* analyze = app.add_subcommand("analyze", "Classify the first nonlinear step combinatorially");
  add_input(analyze, cfg);
  analyze->add_flag("--json", cfg.json, "Emit JSON");
  analyze->add_flag("--witnesses", cfg.witnesses, "List witnessing matchings or cycles");

  auto* betti = app.add_subcommand("betti", "Compute the Betti diagram with the homology oracle");
  add_input(betti, cfg);
  add_field(betti, cfg);
  add_cap(betti, cfg);
  betti->add_flag("--json", cfg.json, "Emit JSON");
  betti->add_flag("--multigraded", cfg.multigraded, "Also report multigraded Betti numbers");

  auto* cycle = app.add_subcommand("cycle-ideal", "Emit the ideal whose complement graph is an n-cycle");
  cycle->add_option("n", cfg.cycle_n, "Cycle length (>= 4)")->required();
  cycle->add_flag("--json", cfg.json, "Emit JSON");

  auto* verify = app.add_subcommand("verify", "Check predictions against the oracle on one ideal");
  add_input(verify, cfg);
  add_field(verify, cfg);
  add_cap(verify, cfg);
  verify->add_flag("--json", cfg.json, "Emit JSON");
  verify->add_flag("--witnesses", cfg.witnesses, "List witnessing matchings or cycles");

  auto* sweep = app.add_subcommand("sweep", "Verify on exhaustive and seeded random ideals");
  add_field(sweep, cfg);
  add_cap(sweep, cfg);
  sweep->add_option("--seed", cfg.seed, "Random seed");
  sweep->add_option("--count", cfg.count, "Number of random graphs")->check(CLI::NonNegativeNumber);
  sweep->add_option("--n-min", cfg.n_min, "Smallest vertex count")->check(CLI::Range(1, 64));
  sweep->add_option("--n-max", cfg.n_max, "Largest vertex count")->check(CLI::Range(1, 64));
  sweep->add_option("--exhaustive-max", cfg.exhaustive_max, "Enumerate every graph up to this many vertices")
      ->check(CLI::Range(0, 6));
  sweep->add_option("--replay-dir", cfg.replay_dir, "Write failing ideals here");
  sweep->add_flag("--json", cfg.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(cfg);
    if (*betti) return cmd_betti(cfg);
    if (*cycle) return cmd_cycle_ideal(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*sweep) return cmd_sweep(cfg);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
