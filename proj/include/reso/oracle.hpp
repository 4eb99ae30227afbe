#pragma once

#include <optional>
#include <set>
#include <vector>

#include "reso/homotopy.hpp"
#include "reso/relative.hpp"

// Slow reference implementations, kept deliberately independent of the
// engine's algorithms.  Linked by the test suite and the benchmark only.
namespace reso::oracle {

std::vector<SignVector> naive_span_closure(const std::vector<SignVector>& v, int n);

bool naive_orbit_equal(const Cut& s, const Cut& t);

std::set<SetPartition> naive_closure(const SetPartition& pi, const Cut& s,
                                     std::size_t cap = 2000000);

std::vector<GraphPath> naive_paths(const ResonanceGraph& g);

struct Split {
  std::vector<int> left;  // 1-based coordinates
  std::vector<int> right;
  RelativeCut left_factor;
  RelativeCut right_factor;
};

// Search all coordinate bipartitions for a direct-product decomposition.
std::optional<Split> split_finder(const RelativeCut& rc);

}  // namespace reso::oracle
