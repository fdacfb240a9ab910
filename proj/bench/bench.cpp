// Serial reference vs OpenMP kernels. Prints wall times and checks that
// both sides produce the same result.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "codebounds/code_io.hpp"
#include "codebounds/search.hpp"

using namespace codebounds;

namespace {

double time_it(const std::function<void()>& f, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

// Any (7,6)_5 code of size 15.
Code kirkman_code() {
  EnumerationTask t{CodeParams(5, 7, 6), 15};
  t.mode = EnumerationMode::ExistenceOnly;
  return enumerate_codes(t).front();
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  std::printf("threads available: %d, using %d\n", omp_get_max_threads(), threads);
  omp_set_num_threads(threads);

  const Code k = kirkman_code();
  const Code k14 = k.without(0);
  kernels::ScanResult a, b;
  const double serial = time_it([&] { a = kernels::scan_words_serial(k14, 5, 6); }, 3);
  const double parallel = time_it([&] { b = kernels::scan_words_parallel(k14, 5, 6); }, 3);
  std::printf("scan [5]^7 against 14 words: serial %.4f s, openmp %.4f s, speedup %.2fx, results %s\n", serial,
              parallel, serial / parallel, a == b ? "equal" : "DIFFER");

  EnumerationTask t1{CodeParams(5, 7, 6), 15};
  t1.threads = 1;
  EnumerationTask tn = t1;
  tn.threads = threads;
  std::vector<Code> r1, rn;
  const double e1 = time_it([&] { r1 = enumerate_codes(t1); }, 1);
  const double en = time_it([&] { rn = enumerate_codes(tn); }, 1);
  std::printf("enumerate (7,6)_5 M=15: 1 thread %.2f s, %d threads %.2f s, speedup %.2fx, %zu classes, results %s\n",
              e1, threads, en, e1 / en, r1.size(), r1 == rn ? "equal" : "DIFFER");
  return a == b && r1 == rn ? 0 : 1;
}
