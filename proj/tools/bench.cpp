// Serial reference vs OpenMP kernels. Times the all-pairs BFS on circulant
// digraphs and the exhaustive oriented sweep, and verifies both routes agree
// before reporting speedup.

#include <omp.h>

#include <cstdio>

#include "chgraph/conjectures.hpp"
#include "chgraph/constructions.hpp"
#include "chgraph/counting.hpp"
#include "chgraph/transparency.hpp"

using namespace chgraph;

namespace {

template <typename F>
double time_once(F &&f) {
  const double start = omp_get_wtime();
  f();
  return omp_get_wtime() - start;
}

void bench_transparency() {
  std::printf("all-pairs BFS (transparency matrix), circulant(n, 8)\n");
  std::printf("%8s %12s %12s %9s %7s\n", "n", "serial[s]", "parallel[s]",
              "speedup", "agree");
  for (int n : {500, 1000, 2000}) {
    const Digraph g = circulant(n, 8);
    TransparencyMatrix serial(1), parallel(1);
    const double ts = time_once([&] { serial = compute_transparency_serial(g); });
    const double tp = time_once([&] { parallel = compute_transparency(g); });
    std::printf("%8d %12.4f %12.4f %8.2fx %7s\n", n, ts, tp, ts / tp,
                serial == parallel ? "yes" : "NO");
  }
}

void bench_sweep() {
  std::printf("\nexhaustive oriented sweep, Seymour predicate\n");
  std::printf("%8s %12s %12s %9s %7s\n", "n", "serial[s]", "parallel[s]",
              "speedup", "agree");
  for (int n : {4, 5}) {
    SweepSummary serial, parallel;
    const double ts =
        time_once([&] { serial = exhaustive_sweep_serial(n, Predicate::Seymour); });
    const double tp =
        time_once([&] { parallel = exhaustive_sweep(n, Predicate::Seymour); });
    const bool agree = serial.checked == parallel.checked &&
                       serial.held == parallel.held &&
                       serial.violated == parallel.violated;
    std::printf("%8d %12.4f %12.4f %8.2fx %7s\n", n, ts, tp, ts / tp,
                agree ? "yes" : "NO");
  }
}

void bench_enumeration() {
  std::printf("\ndirected-circuit enumeration (parallel over (root, step))\n");
  std::printf("%24s %12s %12s %9s %10s\n", "instance", "1 thread[s]",
              "default[s]", "speedup", "circuits");
  const int default_threads = omp_get_max_threads();
  const std::pair<const char *, Digraph> instances[] = {
      {"circulant(12,4)", circulant(12, 4)},
      {"complete n=9", complete_digraph(9)},
  };
  EnumerationOptions opt;
  for (const auto &[name, g] : instances) {
    std::size_t count1 = 0, countN = 0;
    omp_set_num_threads(1);
    const double t1 = time_once(
        [&] { count1 = enumerate_directed_cycles(g, g.n(), opt).size(); });
    omp_set_num_threads(default_threads);
    const double tn = time_once(
        [&] { countN = enumerate_directed_cycles(g, g.n(), opt).size(); });
    std::printf("%24s %12.4f %12.4f %8.2fx %10zu%s\n", name, t1, tn, t1 / tn,
                countN, count1 == countN ? "" : " MISMATCH");
  }
}

}  // namespace

int main() {
  std::printf("threads: %d\n\n", omp_get_max_threads());
  bench_transparency();
  bench_sweep();
  bench_enumeration();
  return 0;
}
