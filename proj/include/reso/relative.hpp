#pragma once

#include <optional>
#include <set>
#include <vector>

#include "reso/cuts.hpp"
#include "reso/partitions.hpp"

namespace reso {

constexpr std::size_t kClosureStateCap = 200000;
constexpr int kRelativeEqualBound = 10;

/// A cut with a prescribed closed set of partitions "at infinity"; the pair
/// (S, Pi) whose orbit classes multiply under direct products.
struct RelativeCut {
  int n = 0;
  std::vector<SignVector> surviving;   // sorted, contains the origin
  std::set<SetPartition> at_infinity;  // closed w.r.t. span(surviving)
};

// Validates both defining conditions; throws InvariantError on failure.
void check_relative(const RelativeCut& rc, int bound = kDefaultScanBound);

struct FamilyClosure {
  std::set<MultisetFamily> states;
  bool complete = true;  // false when the state cap cut the search short
};

// Least family set containing `a` and closed under block merges and the
// Plus(x) -> Minus(x) block rewrite for x in S.
FamilyClosure closure_family(const MultisetFamily& a, const Cut& s,
                             std::size_t cap = kClosureStateCap);

// The genuine partitions inside the family closure.  Throws ResourceError
// if the closure could not be completed within the cap.
std::set<SetPartition> closure_partition(const SetPartition& pi, const Cut& s,
                                         std::size_t cap = kClosureStateCap);

// nu in pi-closure?  Forward BFS with early exit.
bool closure_member(const SetPartition& nu, const SetPartition& pi,
                    const Cut& s, std::size_t cap = kClosureStateCap);

bool is_closed(const std::set<SetPartition>& pi_set, const Cut& s,
               std::size_t cap = kClosureStateCap);

// The partition with nonsingleton blocks Minus(s) and Plus(s) (when of size
// >= 2) and all other elements singleton.
SetPartition associated_partition(const SignVector& s);

// Drop the elements of S whose associated partition lies in Pi.
// When validate is set, Pi is first checked to be S-closed.
std::vector<SignVector> subtract(const Cut& s, const std::set<SetPartition>& pi_set,
                                 bool validate = true,
                                 std::size_t cap = kClosureStateCap);

// Q(S, pi-closure of S): the relative cut associated to S and pi.
RelativeCut relative_from_gluing(const Cut& s, const SetPartition& pi,
                                 std::size_t cap = kClosureStateCap);

// A plain cut viewed relatively, with nothing at infinity.
RelativeCut from_cut(const Cut& s);

// sigma is a 0-based permutation of the coordinates; surviving vectors map
// by v -> v o sigma^{-1} and partitions by relabeling through sigma.
RelativeCut act_relative(const std::vector<int>& sigma, const RelativeCut& rc);

bool relative_equal(const RelativeCut& a, const RelativeCut& b,
                    int bound = kRelativeEqualBound);

RelativeCut direct_product(const RelativeCut& a, const RelativeCut& b,
                           int partition_bound = kDefaultPartitionBound);

// Substratum containment test: nu's stratum lies in the closure of pi's.
bool substratum_contained(const SetPartition& nu, const SetPartition& pi,
                          const Cut& s, std::size_t cap = kClosureStateCap);

// Does rc match the direct product of `factors` placed along
// `coordinate_split` (a partition of [n] into index sets, 1-based)?
bool verify_factorization(const RelativeCut& rc,
                          const std::vector<RelativeCut>& factors,
                          const std::vector<std::vector<int>>& coordinate_split);

}  // namespace reso
