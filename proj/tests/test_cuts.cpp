#include <doctest.h>

#include <algorithm>
#include <random>

#include "reso/errors.hpp"
#include "reso/symbolic.hpp"
#include "test_helpers.hpp"

using namespace reso;
using namespace reso::testing;

TEST_SUITE("cuts") {

TEST_CASE("weight cuts at two coordinates") {
  Cut equal = cut_from_weights({1, 1});
  CHECK(equal.size() == 3);
  CHECK(equal.contains(sv({1, -1})));
  CHECK(equal.contains(sv({-1, 1})));
  CHECK_FALSE(equal.is_trivial());

  Cut unequal = cut_from_weights({1, 2});
  CHECK(unequal.is_trivial());
  CHECK(unequal.size() == 1);
}

TEST_CASE("the five classes of cuts on three coordinates") {
  CHECK(cut_from_weights({1, 1, 2}).size() == 5);
  CHECK(cut_from_weights({1, 1, 1}).size() == 7);
  CHECK(cut_from_weights({2, 1, 1}) ==
        cut_of(3, {{1, -1, -1}, {-1, 1, 1}, {0, 1, -1}, {0, -1, 1}}));
  CHECK(cut_from_weights({1, 2, 4}).is_trivial());
}

TEST_CASE("span closure adds exactly the sign vectors inside the span") {
  auto closed = span_closure({sv({1, -1, 0}), sv({0, 1, -1})}, 3);
  CHECK(Cut(3, closed) == cut_from_weights({1, 1, 1}));

  // a single generator forces only the negation
  auto pair = span_closure({sv({1, -1, 0})}, 3);
  CHECK(Cut(3, pair) == cut_of(3, {{1, -1, 0}, {-1, 1, 0}}));

  // span closure is idempotent
  CHECK(Cut(3, span_closure(closed, 3)) == Cut(3, closed));
}

TEST_CASE("cut checking reports violations") {
  CHECK(check_cut(cut_from_weights({3, 2, 1, 1, 1}).elements(), 5).ok);
  CHECK(check_cut(six_cut().elements(), 6).ok);

  // not span-closed: (1,-1,0) and (0,1,-1) generate (1,0,-1) too
  auto missing = cut_of(3, {{1, -1, 0}, {-1, 1, 0}, {0, 1, -1}, {0, -1, 1}});
  auto r1 = check_cut(missing.elements(), 3);
  CHECK_FALSE(r1.ok);
  CHECK(r1.violation.find("(-1,0,1)") != std::string::npos);

  // all-positive support is not a mixed-sign vector
  auto bad_sign = std::vector<SignVector>{SignVector::zero(2), sv({1, 1}), sv({-1, -1})};
  CHECK_FALSE(check_cut(bad_sign, 2).ok);
}

TEST_CASE("orthogonality streaming matches materialized cut") {
  std::vector<long long> w{3, 2, 1, 1, 1};
  std::vector<SignVector> seen;
  for_each_orthogonal(w, [&](const SignVector& v) { seen.push_back(v); });
  Cut direct = cut_from_weights(w);
  CHECK(Cut(5, seen) == direct);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("gluing a partition of coordinates induces the summed-weight cut") {
  // ({1},{2,3}) on the 3-element cut of (1,1,2) yields the 2-coordinate cut
  // of the summed weights
  Cut t = cut_of(3, {{1, -1, -1}, {-1, 1, 1}});
  OrderedSetPartition pi = parse_ordered_partition("({1},{2,3})");
  CHECK(act(pi, t) == cut_from_weights({1, 1}));

  // the same image arises from a larger source cut
  Cut t2 = cut_of(3, {{1, -1, -1}, {-1, 1, 1}, {0, 1, -1}, {0, -1, 1}});
  CHECK(act(pi, t2) == cut_from_weights({1, 1}));

  // identity partition acts trivially
  for (const auto& w : {std::vector<long long>{1, 1, 2}, {1, 1, 1}, {3, 2, 1, 1, 1}}) {
    Cut s = cut_from_weights(w);
    CHECK(act(OrderedSetPartition::identity(s.length()), s) == s);
  }
}

TEST_CASE("gluing weights through a partition matches acting on the cut") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 50; ++iter) {
    int n = 3 + static_cast<int>(rng() % 4);  // 3..6
    auto w = random_weights(rng, n, 1, 6);
    Cut s = cut_from_weights(w);
    for (const auto& pi : enumerate_ordered(n)) {
      if (rng() % 7) continue;  // sample
      std::vector<long long> glued(pi.block_count(), 0);
      for (int b = 0; b < pi.block_count(); ++b)
        for (int e : pi.blocks()[b]) glued[b] += w[e - 1];
      CHECK(act(pi, s) == cut_from_weights(glued));
    }
  }
}

TEST_CASE("canonical forms identify permuted cuts") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 2 + static_cast<int>(rng() % 5);  // 2..6
    auto w = random_weights(rng, n, 1, 9);
    Cut s = cut_from_weights(w);
    auto p = random_permutation(rng, n);
    Cut t = s.reindex(p);
    CHECK(canonical_form(s).cut() == canonical_form(t).cut());
    CHECK(resonance_equal(s, t));
  }
  // canonicalization is idempotent
  Cut c = canonical_form(cut_from_weights({3, 2, 1, 1, 1})).cut();
  CHECK(canonical_form(c).cut() == c);
}

TEST_CASE("distinct classes are separated") {
  CHECK_FALSE(resonance_equal(cut_from_weights({1, 1, 2}), cut_from_weights({1, 1, 1})));
  CHECK_FALSE(resonance_equal(cut_from_weights({1, 1, 2}),
                              cut_of(3, {{1, -1, -1}, {-1, 1, 1}})));
  // equal sizes, different classes: 3-element cuts of different shape
  CHECK_FALSE(resonance_equal(cut_of(3, {{1, -1, 0}, {-1, 1, 0}}),
                              cut_of(3, {{1, -1, -1}, {-1, 1, 1}})));
}

TEST_CASE("resonance census at two and three coordinates") {
  auto r2 = enumerate_resonances(2);
  CHECK(r2.size() == 2);  // trivial and the equal-weight pair

  auto r3 = enumerate_resonances(3);
  CHECK(r3.size() == 5);
  int trivial = 0;
  for (const auto& r : r3) trivial += r.cut().is_trivial();
  CHECK(trivial == 1);
}

TEST_CASE("symbolic forms of the small cuts") {
  CHECK(to_symbolic(cut_from_weights({1, 1})).str() == "a,a");
  SymbolicResonance sym = to_symbolic(cut_from_weights({1, 1, 2}));
  // one free parameter: the orthogonal complement is a line
  CHECK(sym.params.size() == 1);
  CHECK(from_symbolic(sym) == cut_from_weights({1, 1, 2}));
}

TEST_CASE("parsing symbolic forms") {
  Cut s = from_symbolic(parse_symbolic("a+b,a,b"));
  CHECK(s == cut_of(3, {{1, -1, -1}, {-1, 1, 1}}));
  CHECK(from_symbolic(parse_symbolic("2a,a,a")) == cut_from_weights({2, 1, 1}));
  CHECK(from_symbolic(parse_symbolic("a,b,c")).is_trivial());

  CHECK_THROWS_AS(parse_symbolic(""), ParseError);
  CHECK_THROWS_AS(parse_symbolic("a+"), ParseError);
  CHECK_THROWS_AS(parse_symbolic("a,1"), ParseError);  // constant forms must be 0
  CHECK_THROWS_AS(parse_symbolic("a,A"), ParseError);
}

TEST_CASE("symbolic round-trip across random weight cuts") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto w = random_weights(rng, n, 1, 12);
    Cut s = cut_from_weights(w);
    CHECK(from_symbolic(to_symbolic(s)) == s);
  }
}

}  // TEST_SUITE
