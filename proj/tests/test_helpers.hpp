#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "reso/cuts.hpp"

namespace reso::testing {

inline SignVector sv(std::initializer_list<int> entries) {
  return SignVector::from_entries(std::vector<int>(entries));
}

// Builds a cut from explicit nonzero elements plus the origin.
inline Cut cut_of(int n, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<SignVector> els;
  for (const auto& r : rows) els.push_back(SignVector::from_entries(std::vector<int>(r)));
  return Cut(n, std::move(els));
}

// The seven-element 6-cut with no single-partition gluing that drops its span.
inline Cut six_cut() {
  return cut_of(6, {{1, -1, -1, 0, 1, 0},
                    {-1, 1, 1, 0, -1, 0},
                    {1, 0, -1, -1, 0, 1},
                    {-1, 0, 1, 1, 0, -1},
                    {0, 1, 0, -1, -1, 1},
                    {0, -1, 0, 1, 1, -1}});
}

inline std::vector<long long> random_weights(std::mt19937& rng, int n, long long lo,
                                             long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  std::vector<long long> w(n);
  for (auto& x : w) x = d(rng);
  return w;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace reso::testing
