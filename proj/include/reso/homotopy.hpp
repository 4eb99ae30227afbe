#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reso/sequential.hpp"

namespace reso {

/// One wedge summand: a formal F(1)^alpha ∧ S^beta.
struct Term {
  int alpha = 0;
  int beta = 0;
  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

enum class SpaceModel { Symbolic, Circle };

/// Point, a finite wedge of terms, or an honest "the implemented theorems
/// do not decide this" answer.
class HomotopyClass {
 public:
  enum class Kind { Point, Wedge, Undetermined };

  static HomotopyClass point() { return HomotopyClass(Kind::Point, {}, ""); }
  static HomotopyClass wedge_of(std::vector<Term> terms);
  static HomotopyClass term(int alpha, int beta) { return wedge_of({{alpha, beta}}); }
  static HomotopyClass undetermined(std::string reason) {
    return HomotopyClass(Kind::Undetermined, {}, std::move(reason));
  }

  Kind kind() const { return kind_; }
  bool is_point() const { return kind_ == Kind::Point; }
  bool is_undetermined() const { return kind_ == Kind::Undetermined; }
  const std::vector<Term>& terms() const { return terms_; }
  const std::string& reason() const { return reason_; }

  friend bool operator==(const HomotopyClass&, const HomotopyClass&) = default;

 private:
  HomotopyClass(Kind k, std::vector<Term> t, std::string r)
      : kind_(k), terms_(std::move(t)), reason_(std::move(r)) {}
  Kind kind_;
  std::vector<Term> terms_;  // sorted
  std::string reason_;
};

HomotopyClass wedge(const HomotopyClass& a, const HomotopyClass& b);
HomotopyClass smash(const HomotopyClass& a, const HomotopyClass& b);
HomotopyClass susp(const HomotopyClass& a, int k = 1);

// F(1^k): a single formal circle factor for k = 1, contractible for k >= 2.
HomotopyClass ones_type(int k);

// Shape (a^k, 1^l), a >= 2, k >= 1, l >= 0.
HomotopyClass type_power_one(long long a, int k, int l);

// Shape (g^m, a^k, b^l) with g = lcm(a,b), b > a >= 2, m >= 0.
HomotopyClass type_two_primes(int m, long long a, int k, long long b, int l);

// Shape (a^k, b^l, 1^m) with b > 1 and a > b*l.
HomotopyClass type_akblm(long long a, int k, long long b, int l, int m);

// Recursion over sequential partitions; Undetermined if a subproblem is
// sequential but not strongly so.
HomotopyClass type_sequential(const NumberPartition& lambda,
                              int bound = kIdentityScanBound);

struct GraphEdge {
  int from = 0;
  int to = 0;
  long long weight = 0;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// The weighted divisibility graph of a division chain, on vertices 0..k.
struct ResonanceGraph {
  DivisionChain chain;
  std::vector<GraphEdge> edges;  // sorted by (from, to)
  int vertex_count() const { return static_cast<int>(chain.bases.size()) + 1; }
  std::string dot() const;
};

ResonanceGraph division_graph(const NumberPartition& lambda);

struct GraphPath {
  std::vector<int> vertices;  // 0 = first, k = last
  int length = 0;             // edge count
  long long weight = 0;       // sum of edge weights
};

// All directed 0 -> k paths, lexicographic in the vertex sequence.
std::vector<GraphPath> complete_paths(const ResonanceGraph& g);

HomotopyClass type_division_chain(const NumberPartition& lambda);

struct TypeAnswer {
  HomotopyClass cls = HomotopyClass::undetermined("");
  std::vector<std::string> trace;
};

// Dispatcher: strips inert parts, then routes to the most specific shape
// handler, recording each rule applied.
TypeAnswer homotopy_type(const NumberPartition& lambda,
                         SpaceModel model = SpaceModel::Circle,
                         int bound = kIdentityScanBound);

// Reduced homology ranks at the circle model: dimension -> rank.
std::map<int, int> betti(const HomotopyClass& h);

// Sphere dimensions alpha+beta, sorted.
std::vector<int> circle_dims(const HomotopyClass& h);

// "S^5 v S^8 v S^10 v S^11"; "point" for Point.
std::string render_circle(const HomotopyClass& h);

}  // namespace reso
