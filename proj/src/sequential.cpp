#include "reso/sequential.hpp"

#include <algorithm>

#include "reso/cuts.hpp"
#include "reso/errors.hpp"

namespace reso {

bool lex_greater(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> da = a, db = b;
  std::sort(da.rbegin(), da.rend());
  std::sort(db.rbegin(), db.rend());
  for (std::size_t i = 0; i < da.size() && i < db.size(); ++i) {
    if (da[i] != db[i]) return da[i] > db[i];
  }
  return da.size() > db.size();  // superset-like prefix agreement
}

int mm(const NumberPartition& lambda) {
  const auto& p = lambda.parts();
  int count = 0;
  for (long long v : p)
    if (v == p.back()) ++count;
  return count;
}

namespace {

bool has_subset_sum(const std::vector<long long>& vals, long long target) {
  // values are positive; plain DFS with a remaining-sum prune
  std::vector<long long> suffix(vals.size() + 1, 0);
  for (int i = static_cast<int>(vals.size()) - 1; i >= 0; --i)
    suffix[i] = suffix[i + 1] + vals[i];
  auto rec = [&](auto&& self, std::size_t i, long long rem) -> bool {
    if (rem == 0) return true;
    if (i >= vals.size() || rem < 0 || rem > suffix[i]) return false;
    return self(self, i + 1, rem - vals[i]) || self(self, i + 1, rem);
  };
  return rec(rec, 0, target);
}

}  // namespace

std::optional<std::vector<int>> I_max(const NumberPartition& lambda) {
  const auto& p = lambda.parts();
  const int n = lambda.size();
  const long long top = p.back();
  std::optional<std::vector<int>> best;
  // The top part itself can never belong (all parts positive), so search
  // subsets of [n-1].
  for (std::uint64_t mask = 0; mask < (1ULL << (n - 1)); ++mask) {
    if (__builtin_popcountll(mask) < 2) continue;
    long long sum = 0;
    std::vector<int> idx;
    for (int i = 0; i < n - 1; ++i)
      if (mask & (1ULL << i)) {
        sum += p[i];
        idx.push_back(i + 1);
      }
    if (sum != top) continue;
    if (!best || lex_greater(idx, *best)) best = idx;
  }
  return best;
}

SequentialReport is_sequential(const NumberPartition& lambda, int bound) {
  SequentialReport rep;
  rep.mm = mm(lambda);
  rep.I_max = I_max(lambda);
  rep.sequential = true;
  const auto& p = lambda.parts();
  for_each_orthogonal(
      p,
      [&](const SignVector& x) {
        if (!rep.sequential || x.code() == 0) return;
        // one orientation per +/- pair: highest-index support entry positive
        int q = 0;
        for (int i = x.size() - 1; i >= 0; --i)
          if (x.at(i) != 0) {
            q = i + 1;
            break;
          }
        if (x.at(q - 1) < 0) return;
        std::vector<int> i_side = x.plus(), j_side = x.minus();
        std::vector<long long> jvals;
        for (int j : j_side) jvals.push_back(p[j - 1]);
        if (!has_subset_sum(jvals, p[q - 1])) {
          rep.sequential = false;
          rep.witness = Identity{i_side, j_side};
        }
      },
      bound);
  return rep;
}

bool is_strongly_sequential(const NumberPartition& lambda, int bound) {
  SequentialReport rep = is_sequential(lambda, bound);
  if (!rep.sequential) return false;
  if (!rep.I_max) return true;
  const auto& p = lambda.parts();
  const std::vector<int>& imax = *rep.I_max;
  int q = *std::max_element(imax.begin(), imax.end());
  std::vector<long long> vals;
  for (int i : imax)
    if (i != q) vals.push_back(p[i - 1]);
  return has_subset_sum(vals, p[q - 1]);
}

NumberPartition merge_I(const NumberPartition& lambda) {
  std::optional<std::vector<int>> imax = I_max(lambda);
  if (!imax) throw ParseError("no index set sums to the top part; nothing to merge");
  const auto& p = lambda.parts();
  std::vector<char> in(lambda.size() + 1, 0);
  for (int i : *imax) in[i] = 1;
  std::vector<long long> out;
  long long sum = 0;
  for (int i = 1; i <= lambda.size(); ++i) {
    if (in[i])
      sum += p[i - 1];
    else
      out.push_back(p[i - 1]);
  }
  out.push_back(sum);
  return NumberPartition(std::move(out));
}

std::optional<DivisionChain> as_division_chain(const NumberPartition& lambda) {
  DivisionChain dc;
  for (long long v : lambda.parts()) {
    if (!dc.bases.empty() && dc.bases.back() == v) {
      ++dc.mults.back();
      continue;
    }
    if (!dc.bases.empty() && v % dc.bases.back() != 0) return std::nullopt;
    dc.bases.push_back(v);
    dc.mults.push_back(1);
  }
  return dc;
}

SequentialReport classify(const NumberPartition& lambda, int bound) {
  SequentialReport rep = is_sequential(lambda, bound);
  rep.strongly_sequential =
      rep.sequential && (!rep.I_max || is_strongly_sequential(lambda, bound));
  rep.division_chain = as_division_chain(lambda).has_value();
  if (rep.division_chain && !rep.strongly_sequential)
    throw InvariantError("division chain failed the strong sequentiality check");
  return rep;
}

}  // namespace reso
