// Compares the serial reference runner against the OpenMP runner on the
// structural law suites and reports the speedup.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "compnet/laws.hpp"

using namespace compnet;

namespace {

double run_bundle(const CaseGenerator& gen, RunMode mode, int* failures) {
  double total = 0.0;
  for (auto& report : {check_pseudo_double_category(gen, mode),
                       check_monoidal_structure(gen, mode), check_symmetry(gen, mode)}) {
    total += report.elapsed_ms;
    *failures += static_cast<int>(report.failures.size());
  }
  return total;
}

}  // namespace

int main(int argc, char** argv) {
  CaseGenerator gen;
  gen.case_count = argc > 1 ? std::atoi(argv[1]) : 2000;
  gen.seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;

  std::printf("structural law suites, %d cases each, seed %llu\n", gen.case_count,
              static_cast<unsigned long long>(gen.seed));

  int serial_failures = 0, parallel_failures = 0;
  const double serial_ms = run_bundle(gen, RunMode::Serial, &serial_failures);
  const double parallel_ms = run_bundle(gen, RunMode::Parallel, &parallel_failures);

  std::printf("serial   : %8.1f ms  (%d failures)\n", serial_ms, serial_failures);
  std::printf("parallel : %8.1f ms  (%d failures)\n", parallel_ms, parallel_failures);
  if (parallel_ms > 0.0) std::printf("speedup  : %8.2fx\n", serial_ms / parallel_ms);
  return serial_failures + parallel_failures > 0 ? 1 : 0;
}
