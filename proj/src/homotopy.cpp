#include "reso/homotopy.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "reso/cuts.hpp"
#include "reso/errors.hpp"

namespace reso {

HomotopyClass HomotopyClass::wedge_of(std::vector<Term> terms) {
  if (terms.empty()) return point();
  std::sort(terms.begin(), terms.end());
  return HomotopyClass(Kind::Wedge, std::move(terms), "");
}

HomotopyClass wedge(const HomotopyClass& a, const HomotopyClass& b) {
  if (a.is_point()) return b;
  if (b.is_point()) return a;
  if (a.is_undetermined()) return a;
  if (b.is_undetermined()) return b;
  std::vector<Term> t = a.terms();
  t.insert(t.end(), b.terms().begin(), b.terms().end());
  return HomotopyClass::wedge_of(std::move(t));
}

HomotopyClass smash(const HomotopyClass& a, const HomotopyClass& b) {
  if (a.is_point() || b.is_point()) return HomotopyClass::point();
  if (a.is_undetermined()) return a;
  if (b.is_undetermined()) return b;
  std::vector<Term> t;
  for (const Term& x : a.terms())
    for (const Term& y : b.terms())
      t.push_back({x.alpha + y.alpha, x.beta + y.beta});
  return HomotopyClass::wedge_of(std::move(t));
}

HomotopyClass susp(const HomotopyClass& a, int k) {
  if (!a.terms().size()) return a;  // Point and Undetermined pass through
  std::vector<Term> t = a.terms();
  for (Term& x : t) x.beta += k;
  return HomotopyClass::wedge_of(std::move(t));
}

HomotopyClass ones_type(int k) {
  if (k < 0) throw ParseError("negative multiplicity");
  if (k == 0) return HomotopyClass::term(0, 0);
  if (k == 1) return HomotopyClass::term(1, 0);
  return HomotopyClass::point();
}

HomotopyClass type_power_one(long long a, int k, int l) {
  if (a < 2 || k < 1 || l < 0) throw ParseError("shape requires a >= 2, k >= 1");
  if (l == 0) return ones_type(k);  // no unit parts: inert power
  if (k != 1) return HomotopyClass::point();
  long long m = l / a, eps = l % a;
  if (eps >= 2) return HomotopyClass::point();
  return HomotopyClass::term(static_cast<int>(m + eps + 1), static_cast<int>(m));
}

HomotopyClass type_two_primes(int m, long long a, int k, long long b, int l) {
  if (!(b > a && a >= 2) || k < 1 || l < 1 || m < 0)
    throw ParseError("shape requires b > a >= 2 and positive counts");
  long long g = std::lcm(a, b);
  long long abar = g / a, bbar = g / b;
  long long x = k / abar, e1 = k % abar;
  long long y = l / bbar, e2 = l % bbar;
  if (m > 1 || e1 > 1 || e2 > 1) return HomotopyClass::point();
  long long beta = x + y + m - 1;
  if (beta < 0)
    // x = y = m = 0: both count groups below one period; no common multiple
    // is ever realized, so the shape carries no identity at all.
    return smash(ones_type(k >= 2 ? 2 : 1), ones_type(l >= 2 ? 2 : 1));
  return HomotopyClass::term(static_cast<int>(x + y + m + e1 + e2),
                             static_cast<int>(beta));
}

namespace {

// F(v, 1^l) for a single part v >= 2 glued to l units, any l >= 0.
HomotopyClass single_power_one(long long v, int l) {
  if (l == 0) return HomotopyClass::term(1, 0);
  return type_power_one(v, 1, l);
}

}  // namespace

HomotopyClass type_akblm(long long a, int k, long long b, int l, int m) {
  if (b <= 1 || l < 1 || k < 1 || m < 0) throw ParseError("shape requires b > 1");
  long long r = a - b * l;
  if (r < 1) throw ParseError("top part must exceed the middle block sum");
  HomotopyClass ones = ones_type(k);
  if (m < r)
    // the top part joins no identity; it splits off as a circle factor
    return smash(ones, type_power_one(b, l, m));
  HomotopyClass left = single_power_one(a, m - static_cast<int>(r));
  HomotopyClass right = type_power_one(b, l, m);
  if (l == 1 && !left.is_point() && !right.is_point()) {
    // the connectivity gap the splitting argument relies on
    int dim_left = left.terms()[0].alpha + left.terms()[0].beta;
    int dim_right = right.terms()[0].alpha + right.terms()[0].beta;
    if (dim_right <= dim_left)
      throw InvariantError("expected strict connectivity gap between subspaces");
  }
  return wedge(susp(smash(ones, left), 1), smash(ones, right));
}

namespace {

HomotopyClass seq_rec(std::vector<long long> parts, int bound);

std::map<std::vector<long long>, HomotopyClass>& seq_memo() {
  static std::map<std::vector<long long>, HomotopyClass> memo;
  return memo;
}
std::mutex seq_mutex;

HomotopyClass seq_rec_uncached(const std::vector<long long>& parts, int bound) {
  if (parts.empty()) return HomotopyClass::term(0, 0);
  if (std::all_of(parts.begin(), parts.end(), [](long long v) { return v == 1; }))
    return ones_type(static_cast<int>(parts.size()));
  NumberPartition lam(parts);
  SequentialReport rep = is_sequential(lam, bound);
  if (!rep.sequential)
    return HomotopyClass::undetermined("partition " + lam.str() +
                                       " is not sequential");
  const int n = lam.size();
  if (!rep.I_max) {
    // the top parts join no identity; split them off as unit parts
    std::vector<long long> trunc(parts.begin(), parts.end() - rep.mm);
    return smash(seq_rec(std::move(trunc), bound), ones_type(rep.mm));
  }
  if (rep.mm >= 2) return HomotopyClass::point();
  if (!is_strongly_sequential(lam, bound))
    return HomotopyClass::undetermined(
        "partition " + lam.str() +
        " is sequential but not strongly sequential; the splitting "
        "argument leaves a relative expression unresolved");
  std::vector<long long> head(parts.begin(), parts.end() - 1);
  std::vector<char> in_i(n + 1, 0);
  for (int i : *rep.I_max) in_i[i] = 1;
  std::vector<long long> mu;
  for (int i = 1; i <= n; ++i)
    if (!in_i[i]) mu.push_back(parts[i - 1]);
  HomotopyClass left = smash(ones_type(1), seq_rec(std::move(head), bound));
  HomotopyClass right =
      susp(smash(ones_type(1), seq_rec(std::move(mu), bound)), 1);
  return wedge(left, right);
}

HomotopyClass seq_rec(std::vector<long long> parts, int bound) {
  {
    std::lock_guard<std::mutex> lock(seq_mutex);
    auto it = seq_memo().find(parts);
    if (it != seq_memo().end()) return it->second;
  }
  HomotopyClass result = seq_rec_uncached(parts, bound);
  std::lock_guard<std::mutex> lock(seq_mutex);
  seq_memo().emplace(std::move(parts), result);
  return result;
}

}  // namespace

HomotopyClass type_sequential(const NumberPartition& lambda, int bound) {
  return seq_rec(lambda.parts(), bound);
}

std::string ResonanceGraph::dot() const {
  std::string out = "digraph resonance {\n  rankdir=LR;\n";
  for (int v = 0; v < vertex_count(); ++v)
    out += "  " + std::to_string(v) + ";\n";
  for (const auto& e : edges)
    out += "  " + std::to_string(e.from) + " -> " + std::to_string(e.to) +
           " [label=\"w=" + std::to_string(e.weight) + "\"];\n";
  out += "}\n";
  return out;
}

ResonanceGraph division_graph(const NumberPartition& lambda) {
  std::optional<DivisionChain> dc = as_division_chain(lambda);
  if (!dc) throw ParseError("partition is not a division chain: " + lambda.str());
  ResonanceGraph g;
  g.chain = *dc;
  const int k = static_cast<int>(dc->bases.size());
  // m_0 = 1, so the x = 0 tail term b_0(m_0 - 1) vanishes.
  for (int x = 0; x <= k - 1; ++x) {
    for (int d = 1; x + d <= k; ++d) {
      long long num = 0;
      for (int t = x + 1; t <= x + d - 1; ++t)
        num += dc->bases[t - 1] * dc->mults[t - 1];
      if (x >= 1) num += dc->bases[x - 1] * (dc->mults[x - 1] - 1);
      long long div = dc->bases[x + d - 1];
      if (num % div == 0) g.edges.push_back({x, x + d, num / div});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  return g;
}

std::vector<GraphPath> complete_paths(const ResonanceGraph& g) {
  const int k = g.vertex_count() - 1;
  std::vector<std::vector<GraphEdge>> adj(k + 1);
  for (const auto& e : g.edges) adj[e.from].push_back(e);
  std::vector<GraphPath> out;
  GraphPath cur;
  cur.vertices.push_back(0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == k) {
      out.push_back(cur);
      return;
    }
    for (const auto& e : adj[v]) {  // sorted by target: lex order on sequences
      cur.vertices.push_back(e.to);
      cur.length += 1;
      cur.weight += e.weight;
      self(self, e.to);
      cur.vertices.pop_back();
      cur.length -= 1;
      cur.weight -= e.weight;
    }
  };
  rec(rec, 0);
  return out;
}

HomotopyClass type_division_chain(const NumberPartition& lambda) {
  ResonanceGraph g = division_graph(lambda);
  if (g.chain.mults.back() >= 2) return HomotopyClass::point();
  std::vector<Term> terms;
  for (const auto& p : complete_paths(g))
    terms.push_back({static_cast<int>(p.length + p.weight),
                     static_cast<int>(p.weight)});
  return HomotopyClass::wedge_of(std::move(terms));
}

namespace {

struct ValueGroups {
  std::vector<long long> values;  // ascending distinct
  std::vector<int> counts;
};

ValueGroups group_values(const std::vector<long long>& parts) {
  ValueGroups g;
  for (long long v : parts) {
    if (!g.values.empty() && g.values.back() == v) {
      ++g.counts.back();
    } else {
      g.values.push_back(v);
      g.counts.push_back(1);
    }
  }
  return g;
}

}  // namespace

TypeAnswer homotopy_type(const NumberPartition& lambda, SpaceModel model,
                         int bound) {
  (void)model;  // the formal answer is model-independent; rendering differs
  TypeAnswer ans;
  const int n = lambda.size();
  std::vector<long long> active = lambda.parts();
  int stripped = 0;
  if (n <= bound) {
    std::vector<char> participates(n, 0);
    for_each_orthogonal(
        lambda.parts(),
        [&](const SignVector& x) {
          for (int i = 0; i < n; ++i)
            if (x.at(i) != 0) participates[i] = 1;
        },
        bound);
    std::vector<long long> kept;
    for (int i = 0; i < n; ++i) {
      if (participates[i])
        kept.push_back(lambda.part(i));
      else
        ++stripped;
    }
    if (stripped > 0) {
      active = std::move(kept);
      ans.trace.push_back("split off " + std::to_string(stripped) +
                          " part(s) joining no identity; each contributes a "
                          "circle smash factor");
    }
  } else {
    ans.trace.push_back("part count too large for the inert-part scan; no "
                        "splitting attempted");
  }

  HomotopyClass core = HomotopyClass::term(0, 0);
  if (active.empty()) {
    ans.trace.push_back("no identities at all: a single formal cell remains");
  } else {
    NumberPartition lam(active);
    ValueGroups g = group_values(active);
    std::optional<DivisionChain> dc = as_division_chain(lam);
    bool routed = false;
    if (dc) {
      core = type_division_chain(lam);
      ans.trace.push_back(
          "nested-divisor shape " + lam.str() +
          ": wedge over complete paths of the divisibility graph");
      routed = true;
      // cross-check against the closed form for (a^k, 1^l) shapes
      if (g.values.size() == 2 && g.values[0] == 1 && g.values[1] >= 2) {
        HomotopyClass alt =
            type_power_one(g.values[1], g.counts[1], g.counts[0]);
        if (alt != core)
          throw InvariantError("route disagreement on shape " + lam.str());
        ans.trace.push_back("closed form for (a^k,1^l) agrees");
      }
    } else if (g.values.size() == 2 && g.values[0] >= 2) {
      // two base values, neither dividing the other
      core = type_two_primes(0, g.values[0], g.counts[0], g.values[1],
                             g.counts[1]);
      ans.trace.push_back("two-base shape " + lam.str() +
                          ": common-multiple period counting");
      routed = true;
    } else if (g.values.size() == 3 && g.values[0] >= 2 &&
               g.values[2] == std::lcm(g.values[0], g.values[1])) {
      core = type_two_primes(g.counts[2], g.values[0], g.counts[0],
                             g.values[1], g.counts[1]);
      ans.trace.push_back("two bases plus their least common multiple " +
                          lam.str() + ": period counting");
      routed = true;
    } else if (g.values.size() == 3 && g.values[0] == 1 && g.values[1] >= 2 &&
               g.values[2] > g.values[1] * g.counts[1]) {
      core = type_akblm(g.values[2], g.counts[2], g.values[1], g.counts[1],
                        g.counts[0]);
      ans.trace.push_back("shape (a^k,b^l,1^m) with a exceeding the b-block "
                          "sum: inclusion-quotient splitting");
      routed = true;
    }
    if (!routed) {
      SequentialReport rep = classify(lam, bound);
      if (!rep.sequential) {
        Identity w = rep.witness.value_or(Identity{});
        std::string detail;
        if (rep.witness) {
          detail = " (violating identity: parts at ";
          for (int i : w.plus_side) detail += std::to_string(i) + " ";
          detail += "vs ";
          for (int i : w.minus_side) detail += std::to_string(i) + " ";
          detail += ")";
        }
        core = HomotopyClass::undetermined("partition " + lam.str() +
                                           " is not sequential" + detail);
        ans.trace.push_back("no handler applies: not sequential");
      } else {
        core = type_sequential(lam, bound);
        ans.trace.push_back("sequential recursion on " + lam.str());
      }
    }
  }
  if (stripped > 0)
    core = smash(HomotopyClass::term(stripped, 0), core);
  ans.cls = core;
  return ans;
}

std::map<int, int> betti(const HomotopyClass& h) {
  if (h.is_undetermined())
    throw ParseError("homology ranks requested for an undetermined type");
  std::map<int, int> out;
  for (const Term& t : h.terms()) out[t.alpha + t.beta] += 1;
  return out;
}

std::vector<int> circle_dims(const HomotopyClass& h) {
  if (h.is_undetermined())
    throw ParseError("sphere dimensions requested for an undetermined type");
  std::vector<int> dims;
  for (const Term& t : h.terms()) dims.push_back(t.alpha + t.beta);
  std::sort(dims.begin(), dims.end());
  return dims;
}

std::string render_circle(const HomotopyClass& h) {
  if (h.is_undetermined()) return "undetermined";
  if (h.is_point()) return "point";
  std::string out;
  for (int d : circle_dims(h)) {
    if (!out.empty()) out += " v ";
    out += "S^" + std::to_string(d);
  }
  return out;
}

}  // namespace reso
