#pragma once

#include <optional>
#include <set>
#include <vector>

#include "reso/cuts.hpp"
#include "reso/partitions.hpp"
#include "reso/relative.hpp"

namespace reso {

enum class ComplexityMode {
  LiteralProper,       // all partitions with at least one nonsingleton block
  TranspositionsOnly,  // one block of size 2, the rest singletons
};

struct ComplexityResult {
  // absent value means "Unbounded within the class" or a strict lower
  // bound, distinguished by `exhausted`
  std::optional<int> value;
  bool exhausted = false;  // true when max_size was hit without success
  std::vector<SetPartition> witness;
  ComplexityMode mode = ComplexityMode::TranspositionsOnly;
  int search_bound = 0;
};

constexpr int kComplexityBound = 10;

// Smallest gluing set whose removal of surviving elements strictly drops
// the span of the cut, searched by increasing set size within the mode's
// candidate class.
ComplexityResult complexity(const Cut& s, ComplexityMode mode,
                            int max_size = 3,
                            std::size_t closure_cap = kClosureStateCap);

// (a_1..a_n, N+a_1..N+a_n) with a_i = 3^(i-1); when N is absent, start at
// 4*sum(a)+1 and double until the cut has the expected product shape.
NumberPartition high_complexity_family(int n,
                                       std::optional<long long> N = std::nullopt);

// Does the cut of the family weight vector consist exactly of the pairs
// (x,y) with sum(y) = 0 and x_i + y_i = 0?
bool verify_family_cut(const NumberPartition& lambda);

}  // namespace reso
