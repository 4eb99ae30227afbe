// Times the parallel span-closure scan against the straightforward serial
// reference on a small sweep of lengths, and checks they agree.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "reso/cuts.hpp"
#include "reso/oracle.hpp"

using namespace reso;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
  return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

}  // namespace

int main() {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> entry(-1, 1);
  std::printf("%4s %6s %12s %12s %8s\n", "n", "|S|", "parallel(ms)",
              "serial(ms)", "speedup");
  for (int n = 6; n <= 10; ++n) {
    std::vector<SignVector> gens;
    for (int i = 0; i < 3; ++i) {
      std::vector<int> e(n);
      for (auto& x : e) x = entry(rng);
      gens.push_back(SignVector::from_entries(e));
    }

    auto t0 = clk::now();
    std::vector<SignVector> fast = span_closure(gens, n);
    double fast_ms = ms_since(t0);

    t0 = clk::now();
    std::vector<SignVector> slow = oracle::naive_span_closure(gens, n);
    double slow_ms = ms_since(t0);

    if (fast != slow) {
      std::fprintf(stderr, "mismatch at n=%d\n", n);
      return 1;
    }
    std::printf("%4d %6zu %12.2f %12.2f %8.2f\n", n, fast.size(), fast_ms,
                slow_ms, slow_ms / fast_ms);
  }
  return 0;
}
