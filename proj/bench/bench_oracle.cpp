// Times the OpenMP oracle against the serial reference on growing inputs.
//
//   bench_oracle [max_n] [threads]

#include "syzgraph/betti.hpp"
#include "syzgraph/syzygy.hpp"
#include "syzgraph/verify.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

using namespace syzgraph;
using h_clock = std::chrono::high_resolution_clock;

namespace {

double millis(h_clock::time_point a, h_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

bool run(const std::string& label, const MonomialIdeal& ideal, const ExactField& field, int cap) {
  auto t0 = h_clock::now();
  const BettiTable serial = graded_betti_serial(ideal, field, cap);
  auto t1 = h_clock::now();
  const BettiTable parallel = graded_betti(ideal, field, cap);
  auto t2 = h_clock::now();
  const bool same = serial == parallel;
  std::cout << label << " " << field.name() << ": serial " << millis(t0, t1) << " ms, parallel " << millis(t1, t2)
            << " ms, speedup " << millis(t0, t1) / std::max(millis(t1, t2), 1e-9) << (same ? "" : "  MISMATCH")
            << std::endl;
  return same;
}

}  // namespace

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 13;
  if (argc > 2) omp_set_num_threads(std::atoi(argv[2]));
  std::cout << "threads: " << omp_get_max_threads() << "\n";

  bool ok = true;
  for (int n = 8; n <= max_n; ++n) {
    for (const auto& field : {ExactField::rationals(), ExactField::prime(2)})
      ok &= run("cycle complement n=" + std::to_string(n), cycle_complement_ideal(n), field, kMaxVertexCap);
  }
  const auto randoms = random_instances(7, 6, 6, 10);
  for (std::size_t k = 0; k < randoms.size(); ++k) {
    try {
      ok &= run("random #" + std::to_string(k), randoms[k], ExactField::rationals(), kDefaultVertexCap);
    } catch (const CapExceeded& e) {
      std::cout << "random #" << k << " skipped: " << e.what() << "\n";
    }
  }
  return ok ? 0 : 1;
}
