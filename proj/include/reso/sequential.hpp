#pragma once

#include <optional>
#include <vector>

#include "reso/partitions.hpp"

namespace reso {

constexpr int kIdentityScanBound = 16;

/// One additive identity among the parts: sum over I equals sum over J,
/// with I and J disjoint 1-based index sets into the ascending part list.
struct Identity {
  std::vector<int> plus_side;
  std::vector<int> minus_side;
};

struct SequentialReport {
  bool sequential = false;
  bool strongly_sequential = false;
  bool division_chain = false;
  int mm = 1;
  std::optional<std::vector<int>> I_max;
  std::optional<Identity> witness;  // the violating identity, on failure
};

// Strict lexicographic order on index sets: compare sorted descending,
// superset beats subset on ties.
bool lex_greater(const std::vector<int>& a, const std::vector<int>& b);

int mm(const NumberPartition& lambda);

// The lex-greatest I with |I| >= 2 and sum of the I-parts equal to the top
// part, if any.
std::optional<std::vector<int>> I_max(const NumberPartition& lambda);

SequentialReport is_sequential(const NumberPartition& lambda,
                               int bound = kIdentityScanBound);

bool is_strongly_sequential(const NumberPartition& lambda,
                            int bound = kIdentityScanBound);

// Replace the parts indexed by I_max with their sum.
NumberPartition merge_I(const NumberPartition& lambda);

struct DivisionChain {
  std::vector<long long> bases;  // b_1 < ... < b_k, each dividing the next
  std::vector<long long> mults;  // m_1 ... m_k, all >= 1
};

std::optional<DivisionChain> as_division_chain(const NumberPartition& lambda);

// Full classification, honoring the containments
// division chain => strongly sequential => sequential.
SequentialReport classify(const NumberPartition& lambda,
                          int bound = kIdentityScanBound);

}  // namespace reso
