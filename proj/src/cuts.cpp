#include "reso/cuts.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "reso/errors.hpp"
#include "reso/linalg.hpp"

namespace reso {

namespace {

bool mixed_or_zero(const SignVector& v) {
  bool plus = false, minus = false;
  for (int i = 0; i < v.size(); ++i) {
    if (v.at(i) > 0) plus = true;
    if (v.at(i) < 0) minus = true;
  }
  return plus == minus;  // both or neither
}

std::vector<SignVector> with_origin_sorted(std::vector<SignVector> v, int n) {
  v.push_back(SignVector::zero(n));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Cut::Cut(int n, std::vector<SignVector> elements) : n_(n) {
  for (const auto& e : elements)
    if (e.size() != n) throw ParseError("cut element of wrong length");
  elems_ = with_origin_sorted(std::move(elements), n);
}

bool Cut::contains(const SignVector& v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

Cut Cut::reindex(const std::vector<int>& p) const {
  std::vector<SignVector> out;
  out.reserve(elems_.size());
  for (const auto& e : elems_) out.push_back(e.reindex(p));
  return Cut(n_, std::move(out));
}

std::vector<SignVector> span_closure(const std::vector<SignVector>& gens, int n,
                                     int bound) {
  if (n > bound)
    throw ResourceError("span closure scan limited to " + std::to_string(bound) +
                        " coordinates");
  // x lies in span(gens) iff x is orthogonal to a basis of the complement.
  RatMat rows;
  for (const auto& g : gens) {
    RatVec r(n);
    for (int i = 0; i < n; ++i) r[i] = g.at(i);
    rows.push_back(std::move(r));
  }
  RatMat comp = nullspace(rows, n);
  std::vector<std::vector<long long>> icomp;
  for (const auto& r : comp) icomp.push_back(primitive_integer(r));

  const std::uint64_t total = pow3(n);
  std::vector<char> flag(total, 0);
  const std::int64_t itotal = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(static) if (n >= 9)
  for (std::int64_t idx = 0; idx < itotal; ++idx) {
    SignVector v = SignVector::from_index(n, static_cast<std::uint64_t>(idx));
    bool ok = true;
    for (const auto& w : icomp)
      if (v.dot(w) != 0) {
        ok = false;
        break;
      }
    flag[idx] = ok ? 1 : 0;
  }
  std::vector<SignVector> out;
  for (std::uint64_t idx = 0; idx < total; ++idx)
    if (flag[idx]) out.push_back(SignVector::from_index(n, idx));
  return out;  // from_index order is code order, so already sorted
}

CutCheck check_cut(const std::vector<SignVector>& v, int n, int bound) {
  for (const auto& e : v)
    if (e.size() != n) return {false, "element of wrong length: " + e.str()};
  for (const auto& e : v)
    if (!mixed_or_zero(e))
      return {false, "element is not mixed-sign: " + e.str()};
  std::vector<SignVector> have = with_origin_sorted(v, n);
  std::vector<SignVector> closed = span_closure(v, n, bound);
  if (have != closed) {
    for (const auto& e : closed)
      if (!std::binary_search(have.begin(), have.end(), e))
        return {false, "not span-closed, missing " + e.str()};
  }
  return {true, ""};
}

void for_each_orthogonal(const std::vector<long long>& weights,
                         const std::function<void(const SignVector&)>& fn,
                         int bound) {
  const int n = static_cast<int>(weights.size());
  if (n > bound)
    throw ResourceError("weight scan limited to " + std::to_string(bound) +
                        " coordinates");
  // suffix[i] = sum of |w_j| for j >= i, to prune unreachable partial sums
  std::vector<long long> suffix(n + 1, 0);
  for (int i = n - 1; i >= 0; --i)
    suffix[i] = suffix[i + 1] + std::llabs(weights[i]);
  std::vector<int> entries(n, 0);
  // Recurse in entry order -1,0,1 so visits come out in code order.
  auto rec = [&](auto&& self, int i, long long sum) -> void {
    if (std::llabs(sum) > suffix[i]) return;
    if (i == n) {
      if (sum == 0) fn(SignVector::from_entries(entries));
      return;
    }
    for (int e = -1; e <= 1; ++e) {
      entries[i] = e;
      self(self, i + 1, sum + e * weights[i]);
    }
    entries[i] = 0;
  };
  rec(rec, 0, 0);
}

Cut cut_from_weights(const std::vector<long long>& weights, int bound) {
  std::vector<SignVector> elems;
  for_each_orthogonal(
      weights, [&](const SignVector& v) { elems.push_back(v); }, bound);
  return Cut(static_cast<int>(weights.size()), std::move(elems));
}

Cut act(const OrderedSetPartition& pi, const Cut& s) {
  const int m = static_cast<int>(pi.blocks().size());
  if (pi.ground_size() != s.length())
    throw ParseError("partition ground set does not match cut length");
  std::vector<SignVector> out;
  std::vector<int> t(m);
  for (const auto& e : s.elements()) {
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      const auto& blk = pi.blocks()[j];
      int val = e.at(blk[0] - 1);
      for (int x : blk)
        if (e.at(x - 1) != val) {
          ok = false;
          break;
        }
      t[j] = val;
    }
    if (ok) out.push_back(SignVector::from_entries(t));
  }
  return Cut(m, std::move(out));
}

namespace {

constexpr std::size_t kCanonFrontierCap = 100000;

// Level-greedy minimization: extend coordinate injections one column at a
// time, keeping exactly the extensions whose sorted prefix-code list is
// minimal at that depth.  The final sorted code list is the orbit minimum
// because it is determined level by level.
std::vector<int> minimal_injection(const Cut& s) {
  const int n = s.length();
  const auto& el = s.elements();
  const std::size_t m = el.size();
  struct Node {
    std::vector<int> cols;               // chosen old-coordinate per level
    std::vector<std::uint64_t> prefix;   // packed prefix code per element
  };
  std::vector<Node> frontier{{{}, std::vector<std::uint64_t>(m, 0)}};
  for (int depth = 0; depth < n; ++depth) {
    std::vector<std::uint64_t> best;
    std::vector<Node> next;
    for (const auto& node : frontier) {
      for (int c = 0; c < n; ++c) {
        if (std::find(node.cols.begin(), node.cols.end(), c) !=
            node.cols.end())
          continue;
        Node cand;
        cand.cols = node.cols;
        cand.cols.push_back(c);
        cand.prefix.resize(m);
        for (std::size_t k = 0; k < m; ++k)
          cand.prefix[k] =
              (node.prefix[k] << 2) | static_cast<std::uint64_t>(el[k].at(c) + 1);
        std::vector<std::uint64_t> key = cand.prefix;
        std::sort(key.begin(), key.end());
        if (best.empty() && next.empty()) {
          best = std::move(key);
          next.push_back(std::move(cand));
        } else if (key < best) {
          best = std::move(key);
          next.clear();
          next.push_back(std::move(cand));
        } else if (key == best) {
          next.push_back(std::move(cand));
        }
      }
    }
    // Two survivors with identical per-element prefixes and the same spent
    // columns continue identically; keep one.
    std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) {
      std::vector<int> sa = a.cols, sb = b.cols;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      return std::tie(sa, a.prefix) < std::tie(sb, b.prefix);
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Node& a, const Node& b) {
                             std::vector<int> sa = a.cols, sb = b.cols;
                             std::sort(sa.begin(), sa.end());
                             std::sort(sb.begin(), sb.end());
                             return sa == sb && a.prefix == b.prefix;
                           }),
               next.end());
    if (next.size() > kCanonFrontierCap)
      throw ResourceError("canonical form search exceeded frontier cap");
    frontier = std::move(next);
  }
  return frontier.front().cols;
}

}  // namespace

Resonance canonical_form(const Cut& s) {
  if (s.length() > 24)
    throw ResourceError("canonical form limited to 24 coordinates");
  return Resonance(s.reindex(minimal_injection(s)));
}

namespace {

std::vector<std::uint64_t> column_signature(const Cut& s, int c) {
  std::vector<std::uint64_t> sig;
  sig.reserve(s.size());
  for (const auto& e : s.elements())
    sig.push_back(static_cast<std::uint64_t>(e.at(c) + 1));
  std::sort(sig.begin(), sig.end());
  return sig;
}

// Backtracking search for a coordinate permutation p with a.reindex(p) == b,
// pruning by comparing sorted prefix-code multisets at every depth.
bool orbit_match(const Cut& a, const Cut& b) {
  const int n = a.length();
  const std::size_t m = a.size();
  std::vector<std::vector<std::uint64_t>> siga(n), sigb(n);
  for (int c = 0; c < n; ++c) {
    siga[c] = column_signature(a, c);
    sigb[c] = column_signature(b, c);
  }
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int depth, const std::vector<std::uint64_t>& prefa,
                 const std::vector<std::uint64_t>& prefb) -> bool {
    if (depth == n) return true;
    // per-call buffers: deeper calls must not clobber this depth's state
    std::vector<std::uint64_t> target(m), got(m);
    for (std::size_t k = 0; k < m; ++k)
      target[k] = (prefb[k] << 2) |
                  static_cast<std::uint64_t>(b.elements()[k].at(depth) + 1);
    std::vector<std::uint64_t> tsorted = target;
    std::sort(tsorted.begin(), tsorted.end());
    for (int c = 0; c < n; ++c) {
      if (used[c] || siga[c] != sigb[depth]) continue;
      for (std::size_t k = 0; k < m; ++k)
        got[k] = (prefa[k] << 2) |
                 static_cast<std::uint64_t>(a.elements()[k].at(c) + 1);
      std::vector<std::uint64_t> gsorted = got;
      std::sort(gsorted.begin(), gsorted.end());
      if (gsorted != tsorted) continue;
      used[c] = 1;
      std::vector<std::uint64_t> na = got, nb = target;
      if (self(self, depth + 1, na, nb)) return true;
      used[c] = 0;
    }
    return false;
  };
  std::vector<std::uint64_t> z(m, 0);
  return rec(rec, 0, z, z);
}

}  // namespace

bool resonance_equal(const Cut& a, const Cut& b) {
  if (a.length() != b.length() || a.size() != b.size()) return false;
  if (a == b) return true;
  return orbit_match(a, b);
}

std::vector<Resonance> enumerate_resonances(int n, int max_n) {
  if (n > max_n)
    throw ResourceError("resonance enumeration limited to " +
                        std::to_string(max_n) + " coordinates");
  if (n < 1) throw ParseError("need at least one coordinate");
  std::vector<SignVector> mixed;
  for (std::uint64_t idx = 0; idx < pow3(n); ++idx) {
    SignVector v = SignVector::from_index(n, idx);
    if (v.code() != 0 && mixed_or_zero(v)) mixed.push_back(v);
  }
  std::map<std::string, Cut> found;
  auto key_of = [](const Cut& c) {
    std::string k;
    for (const auto& e : c.elements()) k += e.str() + ";";
    return k;
  };
  Cut trivial(n, {});
  found.emplace(key_of(trivial), trivial);
  std::vector<Cut> level{trivial};
  while (!level.empty()) {
    std::vector<Cut> next;
    for (const auto& s : level) {
      for (const auto& v : mixed) {
        if (s.contains(v)) continue;
        std::vector<SignVector> gens = s.elements();
        gens.push_back(v);
        std::vector<SignVector> closed = span_closure(gens, n);
        bool ok = true;
        for (const auto& e : closed)
          if (!mixed_or_zero(e)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        Cut canon = canonical_form(Cut(n, std::move(closed))).cut();
        auto [it, inserted] = found.emplace(key_of(canon), canon);
        if (inserted) next.push_back(it->second);
      }
    }
    level = std::move(next);
  }
  std::vector<Resonance> out;
  for (auto& [k, c] : found) out.push_back(Resonance(c));
  return out;
}

}  // namespace reso
