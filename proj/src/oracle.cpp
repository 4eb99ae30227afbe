#include "reso/oracle.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <numeric>

#include "reso/errors.hpp"

namespace reso::oracle {

namespace {

using Q = boost::rational<long long>;

// Is x a linear combination of the columns of m (n rows)?  Fresh
// elimination on the augmented system every time, on purpose.
bool solvable(const std::vector<std::vector<Q>>& cols, const std::vector<Q>& x) {
  const int n = static_cast<int>(x.size());
  const int k = static_cast<int>(cols.size());
  std::vector<std::vector<Q>> m(n, std::vector<Q>(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = cols[j][i];
    m[i][k] = x[i];
  }
  int row = 0;
  for (int col = 0; col < k && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (m[r][col].numerator() != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col].numerator() == 0) continue;
      Q f = m[r][col] / m[row][col];
      for (int c = col; c <= k; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  for (int r = 0; r < n; ++r) {
    bool all_zero = true;
    for (int c = 0; c < k; ++c)
      if (m[r][c].numerator() != 0) {
        all_zero = false;
        break;
      }
    if (all_zero && m[r][k].numerator() != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<SignVector> naive_span_closure(const std::vector<SignVector>& v, int n) {
  if (n > 10) throw ResourceError("reference closure limited to 10 coordinates");
  std::vector<std::vector<Q>> cols;
  for (const auto& g : v) {
    std::vector<Q> c(n);
    for (int i = 0; i < n; ++i) c[i] = g.at(i);
    cols.push_back(std::move(c));
  }
  std::vector<SignVector> out;
  for (std::uint64_t idx = 0; idx < pow3(n); ++idx) {
    SignVector cand = SignVector::from_index(n, idx);
    std::vector<Q> x(n);
    for (int i = 0; i < n; ++i) x[i] = cand.at(i);
    if (solvable(cols, x)) out.push_back(cand);
  }
  return out;
}

bool naive_orbit_equal(const Cut& s, const Cut& t) {
  if (s.length() != t.length()) return false;
  const int n = s.length();
  if (n > 8) throw ResourceError("reference orbit check limited to 8 coordinates");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (s.reindex(p) == t) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

namespace {

using Family = std::vector<std::vector<int>>;  // sorted blocks, sorted family

Family canon(Family f) {
  for (auto& b : f) std::sort(b.begin(), b.end());
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

std::set<SetPartition> naive_closure(const SetPartition& pi, const Cut& s,
                                     std::size_t cap) {
  std::set<Family> states;
  Family start;
  for (const auto& b : pi.blocks()) start.push_back(b);
  states.insert(canon(start));
  // plain fixpoint: keep sweeping everything until nothing new shows up
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Family> snapshot(states.begin(), states.end());
    for (const auto& f : snapshot) {
      std::vector<Family> produced;
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
          Family g;
          std::vector<int> merged = f[i];
          merged.insert(merged.end(), f[j].begin(), f[j].end());
          g.push_back(merged);
          for (std::size_t k = 0; k < f.size(); ++k)
            if (k != i && k != j) g.push_back(f[k]);
          produced.push_back(canon(g));
        }
      for (const auto& x : s.elements()) {
        std::vector<int> p = x.plus(), m = x.minus();
        if (p.empty() || m.empty()) continue;
        for (std::size_t i = 0; i < f.size(); ++i) {
          std::vector<int> b = f[i];
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
          Family g = f;
          g[i] = b;
          produced.push_back(canon(g));
        }
      }
      for (auto& g : produced) {
        if (states.insert(std::move(g)).second) changed = true;
        if (states.size() > cap)
          throw ResourceError("reference closure exceeded the state cap");
      }
    }
  }
  std::set<SetPartition> out;
  const int n = pi.ground_size();
  for (const auto& f : states) {
    std::vector<int> seen(n + 1, 0);
    bool is_part = true;
    for (const auto& b : f)
      for (int e : b)
        if (++seen[e] > 1) is_part = false;
    for (int e = 1; e <= n; ++e)
      if (seen[e] != 1) is_part = false;
    if (is_part) out.insert(SetPartition(n, f));
  }
  return out;
}

std::vector<GraphPath> naive_paths(const ResonanceGraph& g) {
  const int k = g.vertex_count() - 1;
  // breadth-first accumulation of partial paths
  std::vector<GraphPath> frontier, done;
  frontier.push_back(GraphPath{{0}, 0, 0});
  while (!frontier.empty()) {
    std::vector<GraphPath> next;
    for (const auto& p : frontier) {
      int v = p.vertices.back();
      if (v == k) {
        done.push_back(p);
        continue;
      }
      for (const auto& e : g.edges) {
        if (e.from != v) continue;
        GraphPath q = p;
        q.vertices.push_back(e.to);
        q.length += 1;
        q.weight += e.weight;
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::sort(done.begin(), done.end(),
            [](const GraphPath& a, const GraphPath& b) {
              return a.vertices < b.vertices;
            });
  return done;
}

std::optional<Split> split_finder(const RelativeCut& rc) {
  const int n = rc.n;
  if (n > 8) throw ResourceError("split search limited to 8 coordinates");
  if (n < 2) return std::nullopt;
  std::vector<SetPartition> all = enumerate_partitions(n);
  for (std::uint64_t mask = 0; mask < (1ULL << (n - 1)); ++mask) {
    // coordinate 1 always goes left; mask places coordinates 2..n
    std::vector<int> left{1}, right;
    for (int i = 2; i <= n; ++i) {
      if (mask & (1ULL << (i - 2)))
        left.push_back(i);
      else
        right.push_back(i);
    }
    if (right.empty()) continue;
    // the largest possible factor infinity sets for this bipartition
    std::set<SetPartition> bad_left, bad_right, pil, lar;
    for (const auto& rho : all) {
      SetPartition ra = restrict_to(rho, left), rb = restrict_to(rho, right);
      if (rc.at_infinity.count(rho)) {
        pil.insert(ra);
        lar.insert(rb);
      } else {
        bad_left.insert(ra);
        bad_right.insert(rb);
      }
    }
    std::set<SetPartition> pi_a, la_b;
    for (const auto& p : pil)
      if (!bad_left.count(p)) pi_a.insert(p);
    for (const auto& p : lar)
      if (!bad_right.count(p)) la_b.insert(p);
    // factor surviving sets: slices through zero on the other side
    auto slice = [&](const std::vector<int>& keep, const std::vector<int>& zero) {
      std::vector<SignVector> out;
      for (const auto& v : rc.surviving) {
        bool flat = true;
        for (int i : zero)
          if (v.at(i - 1) != 0) {
            flat = false;
            break;
          }
        if (!flat) continue;
        std::vector<int> entries;
        for (int i : keep) entries.push_back(v.at(i - 1));
        out.push_back(SignVector::from_entries(entries));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    };
    Split sp;
    sp.left = left;
    sp.right = right;
    sp.left_factor = RelativeCut{static_cast<int>(left.size()),
                                 slice(left, right), pi_a};
    sp.right_factor = RelativeCut{static_cast<int>(right.size()),
                                  slice(right, left), la_b};
    try {
      if (verify_factorization(rc, {sp.left_factor, sp.right_factor},
                               {left, right}))
        return sp;
    } catch (const ResourceError&) {
      // a candidate too large to verify is treated as no decomposition
    }
  }
  return std::nullopt;
}

}  // namespace reso::oracle
