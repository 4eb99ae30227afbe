#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "reso/partitions.hpp"
#include "reso/sign_vector.hpp"

namespace reso {

constexpr int kDefaultScanBound = 14;  // 3^14 ~ 4.8M sign vectors

/// A set of sign vectors of common length, sorted by packed code and
/// containing the origin.  Span-closedness is the caller's contract for
/// values produced by span_closure / cut_from_weights; is_cut checks it.
class Cut {
 public:
  Cut(int n, std::vector<SignVector> elements);

  int length() const { return n_; }
  const std::vector<SignVector>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(const SignVector& v) const;
  bool is_trivial() const { return elems_.size() == 1; }

  // Coordinate permutation: image column j is the old column p[j].
  Cut reindex(const std::vector<int>& p) const;

  friend bool operator==(const Cut&, const Cut&) = default;

 private:
  int n_;
  std::vector<SignVector> elems_;
};

// span(V u {origin}) intersected with {-1,0,1}^n, by exact rational
// elimination; the 3^n membership scan runs in parallel for large n.
std::vector<SignVector> span_closure(const std::vector<SignVector>& gens, int n,
                                     int bound = kDefaultScanBound);

struct CutCheck {
  bool ok = false;
  std::string violation;  // names the offending vector when !ok
};

CutCheck check_cut(const std::vector<SignVector>& v, int n, int bound = kDefaultScanBound);

// All sign vectors orthogonal to the weight vector, in the written order
// of the weights.
Cut cut_from_weights(const std::vector<long long>& weights, int bound = kDefaultScanBound);

// Streaming variant of the orthogonality scan (no materialization).
void for_each_orthogonal(const std::vector<long long>& weights,
                         const std::function<void(const SignVector&)>& fn,
                         int bound = kDefaultScanBound);

// The induced cut pi S of Definition-2.4 type: all m-tuples extending to an
// element of S constantly on each block of pi.
Cut act(const OrderedSetPartition& pi, const Cut& s);

/// Orbit representative of a cut under coordinate permutations: the
/// element-set whose sorted code list is lexicographically least over the
/// orbit (computed level-greedily over coordinate choices).
class Resonance {
 public:
  explicit Resonance(Cut canonical) : canon_(std::move(canonical)) {}
  const Cut& cut() const { return canon_; }
  friend bool operator==(const Resonance&, const Resonance&) = default;

 private:
  Cut canon_;
};

Resonance canonical_form(const Cut& s);
bool resonance_equal(const Cut& a, const Cut& b);

// One representative per orbit of n-cuts, trivial resonance included.
std::vector<Resonance> enumerate_resonances(int n, int max_n = 5);

}  // namespace reso
