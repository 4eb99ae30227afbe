#include "reso/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "reso/errors.hpp"

namespace reso {

Rref rref(RatMat m) {
  Rref out;
  if (m.empty()) return out;
  const int ncols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < ncols && row < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r) {
      if (m[r][col].numerator() != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    const Rat lead = m[row][col];
    for (auto& x : m[row]) x /= lead;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][col].numerator() == 0) continue;
      const Rat f = m[r][col];
      for (int c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

bool in_row_space(const Rref& basis, RatVec v) {
  for (std::size_t r = 0; r < basis.rows.size(); ++r) {
    const int p = basis.pivots[r];
    if (v[p].numerator() == 0) continue;
    const Rat f = v[p];
    for (std::size_t c = p; c < v.size(); ++c) v[c] -= f * basis.rows[r][c];
  }
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.numerator() == 0; });
}

int rank_of(const RatMat& m) { return rref(m).rank(); }

RatMat nullspace(const RatMat& rows, int ncols) {
  if (rows.empty()) {
    RatMat id(ncols, RatVec(ncols, 0));
    for (int i = 0; i < ncols; ++i) id[i][i] = 1;
    return id;
  }
  const Rref r = rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  RatMat basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(ncols, 0);
    v[f] = 1;
    for (std::size_t rr = 0; rr < r.rows.size(); ++rr) v[r.pivots[rr]] = -r.rows[rr][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<long long> primitive_integer(const RatVec& v) {
  long long denom_lcm = 1;
  for (const Rat& x : v) denom_lcm = std::lcm(denom_lcm, x.denominator());
  std::vector<long long> out;
  out.reserve(v.size());
  long long g = 0;
  for (const Rat& x : v) {
    const long long n = x.numerator() * (denom_lcm / x.denominator());
    out.push_back(n);
    g = std::gcd(g, n);
  }
  if (g > 1)
    for (auto& n : out) n /= g;
  for (const long long n : out) {
    if (n == 0) continue;
    if (n < 0)
      for (auto& m : out) m = -m;
    break;
  }
  return out;
}

namespace {

// One linear inequality sum_j coeff[j] * c_j >= rhs.
struct Ineq {
  RatVec coeff;
  Rat rhs;
};

constexpr std::size_t kFourierMotzkinCap = 200000;

}  // namespace

std::optional<std::vector<long long>> positive_row_space_vector(const RatMat& rows, int ncols) {
  const int k = static_cast<int>(rows.size());
  if (k == 0) return std::nullopt;
  // Feasibility of N^T c >= 1 where N has the given rows.
  std::vector<Ineq> sys;
  sys.reserve(ncols);
  for (int i = 0; i < ncols; ++i) {
    Ineq q;
    q.coeff.resize(k);
    for (int r = 0; r < k; ++r) q.coeff[r] = rows[r][i];
    q.rhs = 1;
    sys.push_back(std::move(q));
  }

  std::vector<std::vector<Ineq>> levels;  // system before eliminating variable v
  for (int v = k - 1; v >= 0; --v) {
    levels.push_back(sys);
    std::vector<Ineq> pos, neg, zero;
    for (auto& q : sys) {
      if (q.coeff[v].numerator() > 0)
        pos.push_back(std::move(q));
      else if (q.coeff[v].numerator() < 0)
        neg.push_back(std::move(q));
      else
        zero.push_back(std::move(q));
    }
    if (pos.size() * neg.size() + zero.size() > kFourierMotzkinCap) return std::nullopt;
    std::vector<Ineq> next = std::move(zero);
    for (const auto& p : pos) {
      for (const auto& m : neg) {
        // p gives c_v >= (p.rhs - rest_p)/p.coeff; m gives c_v <= ...
        Ineq q;
        q.coeff.resize(k);
        const Rat a = p.coeff[v];
        const Rat b = -m.coeff[v];
        for (int j = 0; j < k; ++j) q.coeff[j] = p.coeff[j] * b + m.coeff[j] * a;
        q.rhs = p.rhs * b + m.rhs * a;
        q.coeff[v] = 0;
        next.push_back(std::move(q));
      }
    }
    sys = std::move(next);
  }
  for (const auto& q : sys)
    if (q.rhs.numerator() > 0) return std::nullopt;

  // Back-substitute, tightest-bounds-first.
  RatVec c(k, 0);
  for (int v = 0; v < k; ++v) {
    const auto& level = levels[k - 1 - v];
    bool has_lo = false, has_hi = false;
    Rat lo = 0, hi = 0;
    for (const auto& q : level) {
      if (q.coeff[v].numerator() == 0) continue;
      Rat rest = q.rhs;
      for (int j = 0; j < k; ++j)
        if (j != v) rest -= q.coeff[j] * c[j];
      const Rat bound = rest / q.coeff[v];
      if (q.coeff[v].numerator() > 0) {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      } else {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      }
    }
    if (has_lo && has_hi)
      c[v] = (lo + hi) / 2;
    else if (has_lo)
      c[v] = lo;
    else if (has_hi)
      c[v] = hi;
  }

  RatVec w(ncols, 0);
  for (int i = 0; i < ncols; ++i)
    for (int r = 0; r < k; ++r) w[i] += c[r] * rows[r][i];
  for (const Rat& x : w)
    if (x.numerator() <= 0) throw InvariantError("positive_row_space_vector: infeasible sample");
  return primitive_integer(w);
}

}  // namespace reso
