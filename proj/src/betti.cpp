#include "syzgraph/betti.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

namespace syzgraph {

Count BettiTable::get(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? Count(0) : it->second;
}

void BettiTable::add(int i, int j, const Count& value) {
  if (value == 0) return;
  entries_[{i, j}] += value;
}

void BettiTable::set(int i, int j, const Count& value) {
  if (value == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = value;
}

int BettiTable::max_step() const {
  int p = -1;
  for (const auto& [key, value] : entries_) p = std::max(p, key.first);
  return p;
}

int BettiTable::regularity() const {
  int m = 0;
  for (const auto& [key, value] : entries_) m = std::max(m, key.second - key.first);
  return m;
}

std::uint64_t MultigradedBetti::get(int i, VertexSet s) const {
  const auto it = entries_.find({i, s});
  return it == entries_.end() ? 0 : it->second;
}

void MultigradedBetti::set(int i, VertexSet s, std::uint64_t value) {
  if (value == 0)
    entries_.erase({i, s});
  else
    entries_[{i, s}] = value;
}

BettiTable MultigradedBetti::graded() const {
  BettiTable t;
  for (const auto& [key, value] : entries_) t.add(key.first, cardinality(key.second), value);
  return t;
}

CapExceeded::CapExceeded(int vertices, int cap)
    : std::runtime_error("oracle needs " + std::to_string(vertices) + " vertices after polarization, cap is " +
                         std::to_string(cap)),
      vertices_(vertices),
      cap_(cap) {}

// ---------------------------------------------------------------------------

std::vector<std::size_t> subset_homology(const SimpleGraph& complement, VertexSet s, const ExactField& field) {
  if (s == 0) return {1};
  for (int v : members(s))
    if ((complement.neighbors(v) & s) == (s & ~singleton(v)))
      return std::vector<std::size_t>(cardinality(s) + 1, 0);
  return reduced_homology_dims(clique_complex(complement.induced(s)), field);
}

SimpleGraph oracle_graph(const MonomialIdeal& ideal, int cap) {
  if (cap < 2 || cap > kMaxVertexCap)
    throw std::invalid_argument("vertex cap must lie in [2, " + std::to_string(kMaxVertexCap) + "]");
  const Polarization pol = polarize(ideal);
  if (pol.ideal.num_vars() > cap) throw CapExceeded(pol.ideal.num_vars(), cap);
  return to_graph(pol.ideal).strip_loops();
}

namespace {

// Dense accumulator indexed by (i, j), both at most the vertex count.
class Accumulator {
 public:
  explicit Accumulator(int n) : width_(n + 1), cells_(width_ * width_, 0) {}

  void record(VertexSet s, const std::vector<std::size_t>& dims) {
    const int j = cardinality(s);
    for (std::size_t k = 0; k < dims.size(); ++k) {
      // dims[k] is degree k-1, so i = j - (k - 1) - 2.
      const int i = j - static_cast<int>(k) - 1;
      if (i >= 0 && dims[k]) cells_[i * width_ + j] += dims[k];
    }
  }

  void merge(const Accumulator& other) {
    for (std::size_t x = 0; x < cells_.size(); ++x) cells_[x] += other.cells_[x];
  }

  BettiTable table() const {
    BettiTable t;
    for (int i = 0; i < width_; ++i)
      for (int j = 0; j < width_; ++j) t.add(i, j, cells_[i * width_ + j]);
    return t;
  }

 private:
  int width_;
  std::vector<std::uint64_t> cells_;
};

}  // namespace

BettiTable graded_betti(const MonomialIdeal& ideal, const ExactField& field, int cap) {
  const SimpleGraph g = oracle_graph(ideal, cap);
  const SimpleGraph co = complement(g);
  const int n = g.order();
  const auto subsets = static_cast<std::int64_t>(1) << n;
  Accumulator total(n);
#pragma omp parallel
  {
    Accumulator local(n);
#pragma omp for schedule(dynamic, 32) nowait
    for (std::int64_t mask = 0; mask < subsets; ++mask) {
      const auto s = static_cast<VertexSet>(mask);
      local.record(s, subset_homology(co, s, field));
    }
#pragma omp critical
    total.merge(local);
  }
  return total.table();
}

BettiTable graded_betti_serial(const MonomialIdeal& ideal, const ExactField& field, int cap) {
  const SimpleGraph g = oracle_graph(ideal, cap);
  const SimpleGraph co = complement(g);
  const int n = g.order();
  Accumulator total(n);
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) total.record(s, subset_homology(co, s, field));
  return total.table();
}

MultigradedBetti multigraded_betti(const MonomialIdeal& ideal, const ExactField& field, int cap) {
  const SimpleGraph g = oracle_graph(ideal, cap);
  const SimpleGraph co = complement(g);
  const int n = g.order();
  const auto subsets = static_cast<std::int64_t>(1) << n;
  std::vector<std::vector<std::size_t>> dims(subsets);
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t mask = 0; mask < subsets; ++mask)
    dims[mask] = subset_homology(co, static_cast<VertexSet>(mask), field);

  MultigradedBetti out(n, polarize(ideal).origin);
  for (std::int64_t mask = 0; mask < subsets; ++mask) {
    const auto s = static_cast<VertexSet>(mask);
    const int j = cardinality(s);
    for (std::size_t k = 0; k < dims[mask].size(); ++k) {
      const int i = j - static_cast<int>(k) - 1;
      if (i >= 0 && dims[mask][k]) out.set(i, s, dims[mask][k]);
    }
  }
  return out;
}

std::vector<Count> linear_strand_betti(const MonomialIdeal& ideal, int cap) {
  if (!ideal.is_squarefree()) throw std::invalid_argument("linear strand formula needs a squarefree ideal");
  const SimpleGraph co = complement(oracle_graph(ideal, cap));
  const int n = co.order();
  std::vector<std::uint64_t> sums(std::max(n - 1, 1), 0);
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
    const int size = cardinality(s);
    if (size < 2) continue;
    sums[size - 2] += static_cast<std::uint64_t>(component_count(co.induced(s)) - 1);
  }
  return {sums.begin(), sums.end()};
}

bool restriction_consistency_check(const MonomialIdeal& ideal, const Multidegree& s, const ExactField& field,
                                   int cap) {
  if (!ideal.is_squarefree()) throw std::invalid_argument("restriction check needs a squarefree ideal");
  if (!s.is_squarefree()) throw std::invalid_argument("restriction check needs a squarefree multidegree");
  const MonomialIdeal restricted = restrict_to(ideal, s);
  const VertexSet top = support(s);
  const auto full = multigraded_betti(ideal, field, cap);
  const auto part = multigraded_betti(restricted, field, cap);
  auto below = [&](const MultigradedBetti& b) {
    std::map<std::pair<int, VertexSet>, std::uint64_t> out;
    for (const auto& [key, value] : b.entries())
      if ((key.second & ~top) == 0) out.emplace(key, value);
    return out;
  };
  return below(full) == below(part);
}

}  // namespace syzgraph
