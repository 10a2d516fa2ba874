// Timing comparison between the serial reference implementations and the
// production kernels: enumeration (mask sweep vs. incremental extension),
// cycle counting (injective-walk oracle vs. DFS counter), and a verification
// sweep across worker counts. All pairs must agree exactly; timings are
// informational.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "circlab/cycles.hpp"
#include "circlab/enumerate.hpp"
#include "circlab/families.hpp"
#include "circlab/verify.hpp"

using namespace circlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void row(const char* label, double ref_s, double fast_s, bool agree) {
  std::printf("%-44s %10.3fs %10.3fs %7.1fx  %s\n", label, ref_s, fast_s,
              fast_s > 0 ? ref_s / fast_s : 0.0, agree ? "agree" : "MISMATCH");
  if (!agree) ++failures;
}

void bench_enumeration(int n_max) {
  for (int n = 5; n <= n_max; ++n) {
    auto t0 = Clock::now();
    const auto ref = naive_all_graph_keys(n);
    const double ref_s = seconds_since(t0);
    t0 = Clock::now();
    const auto fast = all_graph_keys(n);
    const double fast_s = seconds_since(t0);
    const std::string label =
        "enumerate n=" + std::to_string(n) + " (" +
        std::to_string(ref.size()) + " classes)";
    row(label.c_str(), ref_s, fast_s, ref == fast);
  }
}

void bench_cycle_counting() {
  FamilySpec spec;
  spec.family = Family::H;
  spec.n = 13;
  spec.ell = 8;
  const Graph g = build_family(spec).first;
  for (int len : {5, 6}) {
    auto t0 = Clock::now();
    const Count ref = oracle_count_cycles(g, len);
    const double ref_s = seconds_since(t0);
    t0 = Clock::now();
    const Count fast = count_cycles(g, len);
    const double fast_s = seconds_since(t0);
    const std::string label = "count " + std::to_string(len) +
                              "-cycles on H(13,8) (" + fast.str() + ")";
    row(label.c_str(), ref_s, fast_s, ref == fast);
  }
}

void bench_verify(int n_max) {
  // Warm the enumeration memo so both timings measure only the sweep.
  for (int n = 1; n <= n_max; ++n) all_graph_keys(n);

  VerifyOptions one;
  one.workers = 1;
  auto t0 = Clock::now();
  const TheoremReport r1 = verify_dirac(n_max, one);
  const double s1 = seconds_since(t0);

  VerifyOptions four;
  four.workers = 4;
  t0 = Clock::now();
  const TheoremReport r4 = verify_dirac(n_max, four);
  const double s4 = seconds_since(t0);

  const std::string label = "verify dirac n_max=" + std::to_string(n_max) +
                            " workers 1 vs 4";
  row(label.c_str(), s1, s4, r1.canonical_text() == r4.canonical_text() &&
                                 r1.verdict == "pass");
}

}  // namespace

int main(int argc, char** argv) {
  int enum_max = 7;
  int dirac_max = 8;
  if (argc > 1) enum_max = std::atoi(argv[1]);
  if (argc > 2) dirac_max = std::atoi(argv[2]);
  std::printf("%-44s %11s %11s %8s  %s\n", "benchmark", "reference",
              "production", "speedup", "check");
  bench_enumeration(enum_max);
  bench_cycle_counting();
  bench_verify(dirac_max);
  return failures == 0 ? 0 : 1;
}
