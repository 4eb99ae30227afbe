#include <doctest.h>

#include <algorithm>
#include <random>

#include "reso/oracle.hpp"
#include "test_helpers.hpp"

using namespace reso;
using reso::testing::cut_of;
using reso::testing::random_permutation;
using reso::testing::random_weights;
using reso::testing::six_cut;
using reso::testing::sv;

TEST_SUITE("oracle") {

TEST_CASE("span closure matches the reference on every small generator set") {
  const int n = 3;
  // all sign vectors of length 3
  std::vector<SignVector> all;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) all.push_back(sv({a, b, c}));

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(all.size()) - 1);
  for (int iter = 0; iter < 120; ++iter) {
    std::vector<SignVector> gens;
    int count = 1 + iter % 3;
    for (int i = 0; i < count; ++i) gens.push_back(all[pick(rng)]);
    CHECK(span_closure(gens, n) == oracle::naive_span_closure(gens, n));
  }
}

TEST_CASE("span closure matches the reference on random larger sets") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-1, 1), len(4, 6), count(1, 3);
  for (int iter = 0; iter < 40; ++iter) {
    int n = len(rng);
    std::vector<SignVector> gens;
    int c = count(rng);
    for (int i = 0; i < c; ++i) {
      std::vector<int> e(n);
      for (auto& x : e) x = entry(rng);
      gens.push_back(SignVector::from_entries(e));
    }
    CHECK(span_closure(gens, n) == oracle::naive_span_closure(gens, n));
  }
}

TEST_CASE("orbit equality matches the brute-force permutation scan") {
  std::vector<Cut> cuts;
  for (const Resonance& r : enumerate_resonances(3)) cuts.push_back(r.cut());
  cuts.push_back(cut_from_weights({1, 1, 2}));
  cuts.push_back(cut_from_weights({2, 1, 1}));
  for (const Cut& a : cuts)
    for (const Cut& b : cuts)
      CHECK(resonance_equal(a, b) == oracle::naive_orbit_equal(a, b));
}

TEST_CASE("orbit equality survives random coordinate shuffles") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 3 + iter % 3;
    Cut s = cut_from_weights(random_weights(rng, n, 1, 6));
    Cut t = s.reindex(random_permutation(rng, n));
    CHECK(resonance_equal(s, t));
    CHECK(oracle::naive_orbit_equal(s, t));
  }
}

TEST_CASE("partition closure matches the reference") {
  struct Case {
    const char* weights;
    const char* seed;
  };
  for (const Case& c : {Case{"3,2,1,1,1", "{1}{2,3}{4}{5}"},
                        Case{"2,1,1", "{1}{2,3}"},
                        Case{"1,1,2", "{1,2}{3}"},
                        Case{"1,1,1,1", "{1,2}{3,4}"}}) {
    Cut s = cut_from_weights(parse_weights(c.weights).parts());
    SetPartition pi = parse_set_partition(c.seed);
    CHECK(closure_partition(pi, s) == oracle::naive_closure(pi, s));
  }
  Cut six = six_cut();
  SetPartition pi = parse_set_partition("{1,6}{2,3}{4,5}");
  CHECK(closure_partition(pi, six) == oracle::naive_closure(pi, six));
}

TEST_CASE("graph path enumeration matches the reference") {
  auto same = [](std::vector<GraphPath> a, std::vector<GraphPath> b) {
    auto key = [](const GraphPath& p) { return p.vertices; };
    auto lt = [&](const GraphPath& x, const GraphPath& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].vertices != b[i].vertices || a[i].length != b[i].length ||
          a[i].weight != b[i].weight)
        return false;
    return true;
  };
  for (const char* w : {"8,4,2^3,1^6", "4,2,1", "9,3,3,1,1", "1^5", "16,8,4,2,1"}) {
    ResonanceGraph g = division_graph(parse_weights(w));
    CHECK(same(complete_paths(g), oracle::naive_paths(g)));
  }
}

TEST_CASE("the split search finds the worked gluing factorization") {
  Cut s = cut_from_weights({2, 1, 1});
  RelativeCut rc = relative_from_gluing(s, parse_set_partition("{1}{2,3}"));
  auto split = oracle::split_finder(rc);
  REQUIRE(split.has_value());
  std::vector<std::vector<int>> sides = {split->left, split->right};
  std::sort(sides.begin(), sides.end());
  CHECK(sides == std::vector<std::vector<int>>{{1}, {2, 3}});
  CHECK(verify_factorization(rc, {split->left_factor, split->right_factor},
                             {split->left, split->right}));
}

TEST_CASE("the split search factors a glued ones-and-double cut") {
  Cut s = cut_from_weights({1, 1, 2});
  RelativeCut rc = relative_from_gluing(s, parse_set_partition("{1,2}{3}"));
  auto split = oracle::split_finder(rc);
  REQUIRE(split.has_value());
  std::vector<std::vector<int>> sides = {split->left, split->right};
  std::sort(sides.begin(), sides.end());
  CHECK(sides == std::vector<std::vector<int>>{{1, 2}, {3}});
}

TEST_CASE("the seven-element six-coordinate cut does not split") {
  CHECK_FALSE(oracle::split_finder(from_cut(six_cut())).has_value());
}

}  // TEST_SUITE
