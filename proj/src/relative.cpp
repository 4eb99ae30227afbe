#include "reso/relative.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "reso/errors.hpp"
#include "reso/linalg.hpp"

namespace reso {

namespace {

// Apply every single closure move to `f`, feeding results to `emit`.
void expand_state(const MultisetFamily& f, const Cut& s,
                  const std::function<void(MultisetFamily)>& emit) {
  const auto& blocks = f.blocks();
  const int bc = static_cast<int>(blocks.size());
  // merges
  for (int i = 0; i < bc; ++i)
    for (int j = i + 1; j < bc; ++j) {
      std::vector<std::vector<int>> nb;
      nb.reserve(bc - 1);
      std::vector<int> merged = blocks[i];
      merged.insert(merged.end(), blocks[j].begin(), blocks[j].end());
      nb.push_back(std::move(merged));
      for (int k = 0; k < bc; ++k)
        if (k != i && k != j) nb.push_back(blocks[k]);
      emit(MultisetFamily(f.ground_size(), std::move(nb)));
    }
  // Plus(x) -> Minus(x) rewrites inside a single block
  for (const auto& x : s.elements()) {
    std::vector<int> p = x.plus(), m = x.minus();
    if (p.empty() || m.empty()) continue;
    for (int i = 0; i < bc; ++i) {
      // does blocks[i] contain every element of p (once each)?
      std::vector<int> b = blocks[i];
      bool ok = true;
      for (int e : p) {
        auto it = std::find(b.begin(), b.end(), e);
        if (it == b.end()) {
          ok = false;
          break;
        }
        b.erase(it);
      }
      if (!ok) continue;
      b.insert(b.end(), m.begin(), m.end());
      std::vector<std::vector<int>> nb = blocks;
      nb[i] = std::move(b);
      emit(MultisetFamily(f.ground_size(), std::move(nb)));
    }
  }
}

}  // namespace

FamilyClosure closure_family(const MultisetFamily& a, const Cut& s,
                             std::size_t cap) {
  if (a.ground_size() != s.length())
    throw ParseError("family ground size does not match cut length");
  FamilyClosure out;
  std::deque<MultisetFamily> queue;
  out.states.insert(a);
  queue.push_back(a);
  while (!queue.empty()) {
    MultisetFamily cur = std::move(queue.front());
    queue.pop_front();
    expand_state(cur, s, [&](MultisetFamily next) {
      if (!out.complete) return;
      if (out.states.size() >= cap) {
        out.complete = false;
        return;
      }
      auto [it, inserted] = out.states.insert(std::move(next));
      if (inserted) queue.push_back(*it);
    });
    if (!out.complete) break;
  }
  return out;
}

std::set<SetPartition> closure_partition(const SetPartition& pi, const Cut& s,
                                         std::size_t cap) {
  FamilyClosure fc = closure_family(MultisetFamily::from_partition(pi), s, cap);
  if (!fc.complete)
    throw ResourceError("closure state cap exceeded; partition set incomplete");
  std::set<SetPartition> out;
  for (const auto& f : fc.states)
    if (f.is_partition()) out.insert(f.as_partition());
  return out;
}

bool closure_member(const SetPartition& nu, const SetPartition& pi,
                    const Cut& s, std::size_t cap) {
  if (nu == pi) return true;
  std::set<MultisetFamily> seen;
  std::deque<MultisetFamily> queue;
  MultisetFamily start = MultisetFamily::from_partition(pi);
  seen.insert(start);
  queue.push_back(start);
  MultisetFamily goal = MultisetFamily::from_partition(nu);
  bool found = false;
  while (!queue.empty() && !found) {
    MultisetFamily cur = std::move(queue.front());
    queue.pop_front();
    expand_state(cur, s, [&](MultisetFamily next) {
      if (found) return;
      if (next == goal) {
        found = true;
        return;
      }
      if (seen.size() >= cap)
        throw ResourceError("closure state cap exceeded during membership query");
      auto [it, inserted] = seen.insert(std::move(next));
      if (inserted) queue.push_back(*it);
    });
  }
  return found;
}

bool is_closed(const std::set<SetPartition>& pi_set, const Cut& s,
               std::size_t cap) {
  for (const auto& pi : pi_set) {
    for (const auto& nu : closure_partition(pi, s, cap))
      if (!pi_set.count(nu)) return false;
  }
  return true;
}

SetPartition associated_partition(const SignVector& s) {
  const int n = s.size();
  std::vector<int> p = s.plus(), m = s.minus();
  std::vector<std::vector<int>> blocks;
  std::vector<char> taken(n + 1, 0);
  if (p.size() >= 2) {
    for (int e : p) taken[e] = 1;
    blocks.push_back(p);
  }
  if (m.size() >= 2) {
    for (int e : m) taken[e] = 1;
    blocks.push_back(m);
  }
  for (int e = 1; e <= n; ++e)
    if (!taken[e]) blocks.push_back({e});
  return SetPartition(n, std::move(blocks));
}

std::vector<SignVector> subtract(const Cut& s, const std::set<SetPartition>& pi_set,
                                 bool validate, std::size_t cap) {
  if (validate && !is_closed(pi_set, s, cap))
    throw InvariantError("infinity set is not closed with respect to the cut");
  std::vector<SignVector> out;
  for (const auto& e : s.elements()) {
    if (e.code() == 0) {
      out.push_back(e);  // origin always survives
      continue;
    }
    if (!pi_set.count(associated_partition(e))) out.push_back(e);
  }
  return out;
}

void check_relative(const RelativeCut& rc, int bound) {
  std::vector<SignVector> span = span_closure(rc.surviving, rc.n, bound);
  Cut full(rc.n, span);
  if (!is_closed(rc.at_infinity, full))
    throw InvariantError("infinity set is not closed w.r.t. span of survivors");
  std::vector<SignVector> expect = subtract(full, rc.at_infinity, false);
  if (expect != rc.surviving)
    throw InvariantError("surviving set is not span minus the infinity set");
}

RelativeCut relative_from_gluing(const Cut& s, const SetPartition& pi,
                                 std::size_t cap) {
  if (pi.ground_size() != s.length())
    throw ParseError("partition ground size does not match cut length");
  RelativeCut rc;
  rc.n = s.length();
  std::set<SetPartition> closed = closure_partition(pi, s, cap);
  rc.at_infinity = closed;
  rc.surviving = subtract(s, closed, false, cap);
#ifndef NDEBUG
  check_relative(rc);
#endif
  return rc;
}

RelativeCut from_cut(const Cut& s) {
  return RelativeCut{s.length(), s.elements(), {}};
}

RelativeCut act_relative(const std::vector<int>& sigma, const RelativeCut& rc) {
  const int n = rc.n;
  if (static_cast<int>(sigma.size()) != n)
    throw ParseError("permutation length mismatch");
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[sigma[i]] = i;
  RelativeCut out;
  out.n = n;
  for (const auto& v : rc.surviving) out.surviving.push_back(v.reindex(inv));
  std::sort(out.surviving.begin(), out.surviving.end());
  for (const auto& pi : rc.at_infinity) out.at_infinity.insert(relabel(pi, sigma));
  return out;
}

namespace {

std::vector<std::uint64_t> column_sig(const std::vector<SignVector>& el, int c) {
  std::vector<std::uint64_t> sig;
  sig.reserve(el.size());
  for (const auto& e : el) sig.push_back(static_cast<std::uint64_t>(e.at(c) + 1));
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

bool relative_equal(const RelativeCut& a, const RelativeCut& b, int bound) {
  if (a.n != b.n || a.surviving.size() != b.surviving.size() ||
      a.at_infinity.size() != b.at_infinity.size())
    return false;
  const int n = a.n;
  if (n > bound)
    throw ResourceError("relative equality search limited to " +
                        std::to_string(bound) + " coordinates");
  const std::size_t m = a.surviving.size();
  std::vector<std::vector<std::uint64_t>> siga(n), sigb(n);
  for (int c = 0; c < n; ++c) {
    siga[c] = column_sig(a.surviving, c);
    sigb[c] = column_sig(b.surviving, c);
  }
  // q[j] = a-coordinate landing at position j; at the leaf check partitions.
  std::vector<int> q(n, -1);
  std::vector<char> used(n, 0);
  auto leaf_ok = [&]() {
    std::vector<int> sigma(n);
    for (int j = 0; j < n; ++j) sigma[q[j]] = j;
    std::set<SetPartition> mapped;
    for (const auto& pi : a.at_infinity) mapped.insert(relabel(pi, sigma));
    return mapped == b.at_infinity;
  };
  auto rec = [&](auto&& self, int depth,
                 const std::vector<std::uint64_t>& prefa,
                 const std::vector<std::uint64_t>& prefb) -> bool {
    if (depth == n) return leaf_ok();
    std::vector<std::uint64_t> target(m);
    for (std::size_t k = 0; k < m; ++k)
      target[k] = (prefb[k] << 2) |
                  static_cast<std::uint64_t>(b.surviving[k].at(depth) + 1);
    std::vector<std::uint64_t> tsorted = target;
    std::sort(tsorted.begin(), tsorted.end());
    for (int c = 0; c < n; ++c) {
      if (used[c] || siga[c] != sigb[depth]) continue;
      std::vector<std::uint64_t> got(m);
      for (std::size_t k = 0; k < m; ++k)
        got[k] = (prefa[k] << 2) |
                 static_cast<std::uint64_t>(a.surviving[k].at(c) + 1);
      std::vector<std::uint64_t> gsorted = got;
      std::sort(gsorted.begin(), gsorted.end());
      if (gsorted != tsorted) continue;
      used[c] = 1;
      q[depth] = c;
      if (self(self, depth + 1, got, target)) return true;
      used[c] = 0;
      q[depth] = -1;
    }
    return false;
  };
  std::vector<std::uint64_t> z(m, 0);
  return rec(rec, 0, z, z);
}

RelativeCut direct_product(const RelativeCut& a, const RelativeCut& b,
                           int partition_bound) {
  const int n = a.n, m = b.n;
  RelativeCut out;
  out.n = n + m;
  for (const auto& u : a.surviving)
    for (const auto& v : b.surviving) {
      std::vector<int> e(n + m);
      for (int i = 0; i < n; ++i) e[i] = u.at(i);
      for (int i = 0; i < m; ++i) e[n + i] = v.at(i);
      out.surviving.push_back(SignVector::from_entries(e));
    }
  std::sort(out.surviving.begin(), out.surviving.end());
  std::vector<int> aset(n), bset(m);
  for (int i = 0; i < n; ++i) aset[i] = i + 1;
  for (int i = 0; i < m; ++i) bset[i] = n + i + 1;
  std::vector<SetPartition> all_a = enumerate_partitions(n, partition_bound);
  std::vector<SetPartition> all_b = enumerate_partitions(m, partition_bound);
  std::vector<SetPartition> pia(a.at_infinity.begin(), a.at_infinity.end());
  std::vector<SetPartition> lab(b.at_infinity.begin(), b.at_infinity.end());
  for (const auto& p : product_set(pia, aset, all_b, bset, partition_bound))
    out.at_infinity.insert(p);
  for (const auto& p : product_set(all_a, aset, lab, bset, partition_bound))
    out.at_infinity.insert(p);
  return out;
}

bool substratum_contained(const SetPartition& nu, const SetPartition& pi,
                          const Cut& s, std::size_t cap) {
  return closure_member(nu, pi, s, cap);
}

bool verify_factorization(const RelativeCut& rc,
                          const std::vector<RelativeCut>& factors,
                          const std::vector<std::vector<int>>& coordinate_split) {
  if (factors.empty() || factors.size() != coordinate_split.size())
    throw ParseError("factor list and coordinate split must align");
  std::vector<int> flat;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (static_cast<int>(coordinate_split[i].size()) != factors[i].n)
      throw ParseError("split part size does not match factor length");
    for (int e : coordinate_split[i]) flat.push_back(e);
  }
  std::vector<int> sorted = flat;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < rc.n; ++i)
    if (i >= static_cast<int>(sorted.size()) || sorted[i] != i + 1)
      throw ParseError("coordinate split is not a partition of the index set");
  if (static_cast<int>(flat.size()) != rc.n)
    throw ParseError("coordinate split does not cover the index set");
  RelativeCut prod = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i)
    prod = direct_product(prod, factors[i]);
  // Product coordinate k corresponds to original coordinate flat[k]-1.
  // The placement is explicit, so the comparison is literal, not up to
  // coordinate permutation.
  std::vector<int> sigma(rc.n);
  for (int k = 0; k < rc.n; ++k) sigma[k] = flat[k] - 1;
  RelativeCut placed = act_relative(sigma, prod);
  return placed.n == rc.n && placed.surviving == rc.surviving &&
         placed.at_infinity == rc.at_infinity;
}

}  // namespace reso
