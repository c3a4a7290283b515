#pragma once

// Cross-checks between the combinatorial predictions and the homological
// oracle, on a single ideal or on a reproducible sweep of generated ideals.

#include "syzgraph/betti.hpp"
#include "syzgraph/ideal.hpp"
#include "syzgraph/syzygy.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace syzgraph {

enum class CheckKind {
  normalization,           // beta_{0,2} = #generators, nothing else in column 0
  graded_consistency,      // multigraded entries sum to the graded table
  shape,                   // staircase of first steps, diagonal bound
  first_nonlinear,         // classification agrees with the oracle
  field_independence,      // i3 and beta_{i3,i3+3} agree across fields
  multigraded_refinement,  // nonlinear multidegrees are the predicted cycles
  diagonal_law,            // beta_{i,2(i+1)} = induced matchings of size i+1
  froberg,                 // squarefree: one row <=> chordal complement
  linear_presentation,     // three criteria agree with each other and the oracle
  linear_strand,           // component-count formula matches beta_{i,i+2}
  leaf_cycles,             // polarization whiskers avoid long complement cycles
};

std::string to_string(CheckKind kind);

struct CheckResult {
  CheckKind kind;
  bool passed;
  std::string detail;
};

struct IdealReport {
  NonlinearClassification classification;
  std::vector<std::pair<ExactField, BettiTable>> tables;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::vector<CheckResult> failures() const;
};

/// Runs the whole battery. Throws CapExceeded when the polarized ideal has
/// more than `cap` variables.
IdealReport verify_ideal(const MonomialIdeal& ideal, const std::vector<ExactField>& fields,
                         int cap = kDefaultVertexCap);

std::vector<ExactField> default_verify_fields();

struct SweepConfig {
  std::uint64_t seed = 1;
  int count = 200;
  int n_min = 4;
  int n_max = 8;
  int exhaustive_max = 5;
  int cap = kDefaultVertexCap;
  std::vector<ExactField> fields = default_verify_fields();
};

/// Every ideal on n = 1..n_max variables (every nonempty loop graph).
std::vector<MonomialIdeal> exhaustive_instances(int n_max);

/// Deterministic in (seed, count, n_min, n_max): each instance draws n
/// uniformly, then an inclusion probability, then each pair and loop.
std::vector<MonomialIdeal> random_instances(std::uint64_t seed, int count, int n_min, int n_max);

struct SweepFailure {
  std::string origin;
  std::string ideal_text;  // generator-list format, replayable
  std::vector<CheckResult> failed;
};

struct SweepReport {
  int exhaustive = 0;
  int random = 0;
  int skipped = 0;
  int first_step_r = 0;
  int squarefree = 0;
  std::map<CheckKind, std::pair<int, int>> tallies;  // kind -> (passed, failed)
  std::vector<SweepFailure> failures;

  bool passed() const { return failures.empty(); }
  int evaluated() const { return exhaustive + random; }
};

using SweepObserver = std::function<void(const MonomialIdeal&, const IdealReport&)>;

SweepReport run_sweep(const SweepConfig& config, const SweepObserver& observer = {});

}  // namespace syzgraph
