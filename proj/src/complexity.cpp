#include "reso/complexity.hpp"

#include <algorithm>

#include "reso/errors.hpp"
#include "reso/linalg.hpp"
#include "reso/relative.hpp"

namespace reso {

namespace {

int span_rank(const std::vector<SignVector>& v, int n) {
  RatMat rows;
  for (const auto& e : v) {
    RatVec r(n);
    for (int i = 0; i < n; ++i) r[i] = e.at(i);
    rows.push_back(std::move(r));
  }
  return rank_of(rows);
}

std::vector<SetPartition> candidate_partitions(ComplexityMode mode, int n) {
  std::vector<SetPartition> out;
  if (mode == ComplexityMode::TranspositionsOnly) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::vector<std::vector<int>> blocks{{i, j}};
        for (int e = 1; e <= n; ++e)
          if (e != i && e != j) blocks.push_back({e});
        out.push_back(SetPartition(n, std::move(blocks)));
      }
  } else {
    for (const auto& pi : enumerate_partitions(n))
      if (pi.block_count() < n) out.push_back(pi);  // discrete excluded
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ComplexityResult complexity(const Cut& s, ComplexityMode mode, int max_size,
                            std::size_t closure_cap) {
  const int n = s.length();
  if (n > kComplexityBound)
    throw ResourceError("complexity search limited to " +
                        std::to_string(kComplexityBound) + " coordinates");
  ComplexityResult res;
  res.mode = mode;
  res.search_bound = max_size;
  const int base_rank = span_rank(s.elements(), n);
  if (base_rank == 0) return res;  // trivial cut: the span can never drop

  std::vector<SetPartition> cands = candidate_partitions(mode, n);
  std::vector<std::set<SetPartition>> closures(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i)
    closures[i] = closure_partition(cands[i], s, closure_cap);

  auto drops = [&](const std::vector<std::size_t>& pick) {
    std::set<SetPartition> pi_set;
    for (std::size_t i : pick)
      pi_set.insert(closures[i].begin(), closures[i].end());
    std::vector<SignVector> surviving = subtract(s, pi_set, false);
    return span_rank(surviving, n) < base_rank;
  };

  for (int size = 1; size <= max_size; ++size) {
    if (size > static_cast<int>(cands.size())) break;
    // lexicographically first combination wins the tie-break
    std::vector<std::size_t> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      if (drops(pick)) {
        res.value = size;
        for (std::size_t i : pick) res.witness.push_back(cands[i]);
        return res;
      }
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == cands.size() - size + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int j = pos + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  res.exhausted = true;
  return res;
}

NumberPartition high_complexity_family(int n, std::optional<long long> N) {
  if (n < 1) throw ParseError("family index must be positive");
  if (n > 7) throw ResourceError("family cut verification needs 2n <= 14");
  std::vector<long long> a(n);
  long long sum = 0;
  for (int i = 0; i < n; ++i) {
    a[i] = 1;
    for (int j = 0; j < i; ++j) a[i] *= 3;
    sum += a[i];
  }
  auto build = [&](long long big) {
    std::vector<long long> parts = a;
    for (int i = 0; i < n; ++i) parts.push_back(big + a[i]);
    return NumberPartition(std::move(parts));
  };
  if (N) {
    return build(*N);
  }
  long long big = 4 * sum + 1;
  for (int tries = 0; tries < 20; ++tries, big *= 2) {
    NumberPartition cand = build(big);
    if (verify_family_cut(cand)) return cand;
  }
  throw InvariantError("no offset produced the expected product-shaped cut");
}

bool verify_family_cut(const NumberPartition& lambda) {
  const int total = lambda.size();
  if (total % 2 != 0) return false;
  const int n = total / 2;
  Cut s = cut_from_weights(lambda.parts());
  // expected: x_i + y_i = 0 for all i and sum(y) = 0
  std::size_t expected = 0;
  for (std::uint64_t idx = 0; idx < pow3(n); ++idx) {
    SignVector x = SignVector::from_index(n, idx);
    int sum = 0;
    for (int i = 0; i < n; ++i) sum += x.at(i);
    if (sum == 0) ++expected;
  }
  if (s.size() != expected) return false;
  for (const auto& e : s.elements()) {
    int ysum = 0;
    for (int i = 0; i < n; ++i) {
      if (e.at(i) + e.at(n + i) != 0) return false;
      ysum += e.at(n + i);
    }
    if (ysum != 0) return false;
  }
  return true;
}

}  // namespace reso
