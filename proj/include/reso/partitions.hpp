#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace reso {

/// Number partition, parts stored sorted ascending.
class NumberPartition {
 public:
  explicit NumberPartition(std::vector<long long> parts);

  const std::vector<long long>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  long long part(int i) const { return parts_[i]; }  // 0-based, ascending
  long long total() const;
  std::string str() const;  // compact weight-list form, descending: "8,4,2^3,1^6"

  friend bool operator==(const NumberPartition&, const NumberPartition&) = default;
  friend auto operator<=>(const NumberPartition&, const NumberPartition&) = default;

 private:
  std::vector<long long> parts_;
};

// Weight-list grammar: comma-separated terms, term = base or base^multiplicity.
NumberPartition parse_weights(const std::string& text);
// Same grammar but preserving the written order (for ordered cut construction).
std::vector<long long> parse_weight_vector(const std::string& text);

/// Partition of [n]; blocks kept sorted internally so equality is structural.
class SetPartition {
 public:
  SetPartition(int n, std::vector<std::vector<int>> blocks);  // 1-based elements
  static SetPartition discrete(int n);

  int ground_size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int element) const;  // index into blocks()
  std::string str() const;          // "{1,2}{3}"

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// Partition of [n] with an externally meaningful order on the blocks.
class OrderedSetPartition {
 public:
  OrderedSetPartition(int n, std::vector<std::vector<int>> blocks);
  static OrderedSetPartition identity(int n);

  int ground_size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  SetPartition unorder() const;
  std::string str() const;  // "({1,2},{3})"

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// A collection of non-empty multisubsets of [n]; the intermediate states
/// of the family closure.  Blocks are sorted multisets and the family is a
/// sorted multiset of blocks, so equality is structural.
class MultisetFamily {
 public:
  MultisetFamily(int n, std::vector<std::vector<int>> blocks);
  static MultisetFamily from_partition(const SetPartition& pi);

  int ground_size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  bool is_partition() const;             // each of 1..n exactly once, blocks are sets
  SetPartition as_partition() const;     // requires is_partition()
  std::size_t total_size() const;
  std::string str() const;

  friend bool operator==(const MultisetFamily&, const MultisetFamily&) = default;
  friend auto operator<=>(const MultisetFamily&, const MultisetFamily&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

OrderedSetPartition compose(const OrderedSetPartition& pi, const OrderedSetPartition& nu);

// Restriction p_{B,A}: the non-empty traces of pi's blocks on A, in the
// original labels.
std::vector<std::vector<int>> trace_blocks(const SetPartition& pi, const std::vector<int>& a);
// Same, relabeled order-preservingly onto [|A|].
SetPartition restrict_to(const SetPartition& pi, const std::vector<int>& a);

// { pi in P(A u B) : pi|A in Pi, pi|B in Lambda } where A u B = [n] and the
// members of Pi / Lambda live on [|A|] / [|B|] via order-preserving labels.
std::vector<SetPartition> product_set(const std::vector<SetPartition>& pi_set,
                                      const std::vector<int>& a,
                                      const std::vector<SetPartition>& lambda_set,
                                      const std::vector<int>& b, int enumeration_bound = 12);

constexpr int kDefaultPartitionBound = 12;

std::vector<SetPartition> enumerate_partitions(int n, int bound = kDefaultPartitionBound);
std::vector<OrderedSetPartition> enumerate_ordered(int n, int bound = kDefaultPartitionBound);

SetPartition parse_set_partition(const std::string& text);
OrderedSetPartition parse_ordered_partition(const std::string& text);

// Relabel pi through a permutation: element e goes to sigma[e-1]+1.
SetPartition relabel(const SetPartition& pi, const std::vector<int>& sigma);

}  // namespace reso
