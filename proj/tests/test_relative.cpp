#include <doctest.h>

#include <random>

#include "reso/errors.hpp"
#include "reso/relative.hpp"
#include "test_helpers.hpp"

using namespace reso;
using namespace reso::testing;

TEST_SUITE("relative") {

TEST_CASE("merge-then-rewrite reaches a non-refining partition") {
  // With weights (3,2,1,1,1), gluing {2,3} (2+1 = 3) lets {1}{2}{3,4,5}
  // enter the closure of {1}{2,3}{4}{5} even though no sequence of
  // rewrites alone gets there.
  Cut s = cut_from_weights({3, 2, 1, 1, 1});
  SetPartition pi = parse_set_partition("{1}{2,3}{4}{5}");
  auto closed = closure_partition(pi, s);
  CHECK(closed.count(parse_set_partition("{1}{2}{3,4,5}")) == 1);
  CHECK(closed.count(pi) == 1);
  CHECK(closure_member(parse_set_partition("{1}{2}{3,4,5}"), pi, s));
  // merges alone produce every coarsening
  CHECK(closed.count(parse_set_partition("{1,2,3}{4,5}")) == 1);
}

TEST_CASE("rewrites work through non-partition intermediate families") {
  // On the seven-element 6-cut, {3,4}{1,5}{2,6} is reachable from
  // {1,6}{2,3}{4,5} even though no single swap applies to it.
  Cut s = six_cut();
  SetPartition pi = parse_set_partition("{1,6}{2,3}{4,5}");
  CHECK(closure_member(parse_set_partition("{3,4}{1,5}{2,6}"), pi, s));
}

TEST_CASE("closures are closed and contain their seed") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 3 + static_cast<int>(rng() % 3);
    Cut s = cut_from_weights(random_weights(rng, n, 1, 5));
    auto parts = enumerate_partitions(n);
    const SetPartition& pi = parts[rng() % parts.size()];
    auto closed = closure_partition(pi, s);
    CHECK(closed.count(pi) == 1);
    CHECK(is_closed(closed, s));
    for (const auto& nu : closed) CHECK(closure_member(nu, pi, s));
  }
}

TEST_CASE("associated partitions pair the two supports") {
  CHECK(associated_partition(sv({1, -1, -1, 1})) == parse_set_partition("{1,4}{2,3}"));
  CHECK(associated_partition(sv({1, -1, 0})) == SetPartition::discrete(3));
  CHECK(associated_partition(SignVector::zero(3)) == SetPartition::discrete(3));
}

TEST_CASE("subtraction removes exactly the associated elements") {
  Cut s = cut_from_weights({3, 2, 1, 1, 1});
  SetPartition pi = parse_set_partition("{1}{2,3}{4}{5}");
  auto closed = closure_partition(pi, s);
  auto surviving = subtract(s, closed);
  CHECK(surviving.size() < s.size());
  CHECK(std::find(surviving.begin(), surviving.end(), SignVector::zero(5)) !=
        surviving.end());
  for (const auto& e : surviving) CHECK(closed.count(associated_partition(e)) == 0);

  // a non-closed input is rejected when validation is on
  std::set<SetPartition> open{pi};
  CHECK_THROWS_AS(subtract(s, open, true), InvariantError);
}

TEST_CASE("relative cut of a gluing validates") {
  Cut s = cut_from_weights({2, 1, 1});
  RelativeCut rc = relative_from_gluing(s, parse_set_partition("{1}{2,3}"));
  check_relative(rc);
  CHECK(rc.n == 3);
  CHECK(rc.at_infinity.count(parse_set_partition("{1}{2,3}")) == 1);
  // the deleted elements are those glued away: 2 = 1 + 1
  CHECK(rc.surviving.size() == 3);
}

TEST_CASE("worked product factorization on three coordinates") {
  // Q(cut(2,1,1), {1}{2,3}) splits off coordinate 1.
  Cut s = cut_from_weights({2, 1, 1});
  RelativeCut lhs = relative_from_gluing(s, parse_set_partition("{1}{2,3}"));
  RelativeCut point = from_cut(cut_from_weights({1}));
  RelativeCut q = relative_from_gluing(cut_from_weights({1, 1}),
                                       parse_set_partition("{1,2}"));
  RelativeCut rhs = direct_product(point, q);
  CHECK(relative_equal(lhs, rhs));
  CHECK(verify_factorization(lhs, {point, q}, {{1}, {2, 3}}));
  // and the factors do not commute coordinates away: wrong split fails
  CHECK_FALSE(verify_factorization(lhs, {q, point}, {{1, 2}, {3}}));
}

TEST_CASE("products with a trivial relative factor keep the other side") {
  RelativeCut q = relative_from_gluing(cut_from_weights({1, 1}),
                                       parse_set_partition("{1,2}"));
  RelativeCut point = from_cut(cut_from_weights({1}));
  RelativeCut prod = direct_product(q, point);
  CHECK(prod.n == 3);
  check_relative(prod);
  CHECK(verify_factorization(prod, {q, point}, {{1, 2}, {3}}));
}

TEST_CASE("coordinate permutations act coherently on relative cuts") {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 3 + static_cast<int>(rng() % 2);
    auto w = random_weights(rng, n, 1, 4);
    Cut s = cut_from_weights(w);
    auto parts = enumerate_partitions(n);
    const SetPartition& pi = parts[rng() % parts.size()];
    RelativeCut rc = relative_from_gluing(s, pi);
    auto sigma = random_permutation(rng, n);

    RelativeCut moved = act_relative(sigma, rc);
    check_relative(moved);
    // the image must equal the relative cut built from the permuted data
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[sigma[i]] = i;
    std::vector<long long> moved_w(n);
    for (int i = 0; i < n; ++i) moved_w[sigma[i]] = w[i];
    RelativeCut direct = relative_from_gluing(cut_from_weights(moved_w),
                                              relabel(pi, sigma));
    CHECK(moved.surviving == direct.surviving);
    CHECK(moved.at_infinity == direct.at_infinity);
    CHECK(relative_equal(rc, moved));
  }
}

TEST_CASE("relative equality distinguishes the infinity sets") {
  Cut s = cut_from_weights({1, 1});
  RelativeCut plain = from_cut(s);
  RelativeCut glued = relative_from_gluing(s, parse_set_partition("{1,2}"));
  CHECK(relative_equal(plain, plain));
  CHECK_FALSE(relative_equal(plain, glued));
}

TEST_CASE("substratum containment follows the closure") {
  Cut s = cut_from_weights({3, 2, 1, 1, 1});
  SetPartition pi = parse_set_partition("{1}{2,3}{4}{5}");
  CHECK(substratum_contained(parse_set_partition("{1}{2}{3,4,5}"), pi, s));
  CHECK_FALSE(substratum_contained(parse_set_partition("{1,2}{3}{4}{5}"), pi, s));
}

}  // TEST_SUITE
