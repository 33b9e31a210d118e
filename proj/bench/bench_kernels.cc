// Times the OpenMP kernels against their serial reference implementations
// and checks the outputs match. Usage: bench_kernels [maxN] (default 5).
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "qpehr/ehrhart.hh"
#include "qpehr/enumerate.hh"

#ifdef QPEHR_HAVE_OPENMP
#include <omp.h>
#endif

using namespace qpehr;

namespace {

template <class Fn>
long long timeMs(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int maxN = argc > 1 ? std::atoi(argv[1]) : 5;
  if (maxN < 1 || maxN > 6) {
    std::fprintf(stderr, "maxN must be between 1 and 6\n");
    return 2;
  }

#ifdef QPEHR_HAVE_OPENMP
  std::printf("kernels: OpenMP, %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("kernels: serial build (no OpenMP)\n");
#endif
  std::printf("%-34s %10s %10s %s\n", "kernel", "serial", "parallel", "match");

  for (int n = 4; n <= maxN; ++n) {
    std::vector<QuasiPoset> serial, parallel;
    long long tSerial = timeMs([&] { serial = enumerateLabeledSerial(n, false); });
    long long tParallel = timeMs([&] { parallel = enumerateLabeled(n, false); });
    std::printf("%-34s %8lld ms %8lld ms %s\n",
                ("labeled scan n = " + std::to_string(n)).c_str(), tSerial,
                tParallel, serial == parallel ? "yes" : "NO");
  }

  QuasiPoset probe = corolla(6);
  for (int k : {8, 12}) {
    Int serial = 0, parallel = 0;
    long long tSerial =
        timeMs([&] { serial = countMapsSerial(probe, k, CountMode::WEAK); });
    long long tParallel =
        timeMs([&] { parallel = countMaps(probe, k, CountMode::WEAK); });
    std::printf("%-34s %8lld ms %8lld ms %s\n",
                ("map count 7 vertices, k = " + std::to_string(k)).c_str(),
                tSerial, tParallel, serial == parallel ? "yes" : "NO");
  }
  return 0;
}
