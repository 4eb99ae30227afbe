#include <doctest.h>

#include <algorithm>

#include "reso/homotopy.hpp"
#include "test_helpers.hpp"

using namespace reso;

TEST_SUITE("homotopy") {

TEST_CASE("wedge, smash, and suspension algebra") {
  HomotopyClass pt = HomotopyClass::point();
  HomotopyClass c = HomotopyClass::term(1, 0);

  CHECK(wedge(pt, pt) == pt);
  CHECK(wedge(pt, c) == c);
  CHECK(smash(pt, c) == pt);
  CHECK(smash(c, c) == HomotopyClass::term(2, 0));
  CHECK(susp(pt) == pt);
  CHECK(susp(c, 3) == HomotopyClass::term(1, 3));
  CHECK(susp(HomotopyClass::term(2, 1)) == HomotopyClass::term(2, 2));

  // smash distributes over wedge
  HomotopyClass w = wedge(HomotopyClass::term(1, 1), HomotopyClass::term(2, 0));
  HomotopyClass sw = smash(c, w);
  REQUIRE(sw.terms().size() == 2);
  CHECK(sw == wedge(HomotopyClass::term(2, 1), HomotopyClass::term(3, 0)));
}

TEST_CASE("all-ones partitions give one circle factor or a point") {
  CHECK(ones_type(1) == HomotopyClass::term(1, 0));
  CHECK(ones_type(2).is_point());
  CHECK(ones_type(5).is_point());
}

TEST_CASE("one large part over a run of ones") {
  // (a, 1^l) with l = a*m + eps: eps in {0,1} suspends, eps >= 2 collapses
  CHECK(type_power_one(2, 1, 4) == HomotopyClass::term(3, 2));   // m=2, eps=0
  CHECK(type_power_one(2, 1, 5) == HomotopyClass::term(4, 2));   // m=2, eps=1
  CHECK(type_power_one(3, 1, 2).is_point());                     // eps=2
  CHECK(type_power_one(4, 1, 7).is_point());                     // eps=3
  CHECK(type_power_one(3, 1, 3) == HomotopyClass::term(2, 1));   // m=1, eps=0

  // a repeated large part always collapses
  CHECK(type_power_one(2, 2, 4).is_point());
  CHECK(type_power_one(5, 3, 11).is_point());
}

TEST_CASE("two coprime-style parts under a common multiple") {
  // (g^m, a^k, b^l), g = lcm(a,b); a=2, b=3, g=6, abar=3, bbar=2
  // k = x*abar + eps1, l = y*bbar + eps2; needs m, eps1, eps2 in {0,1}
  CHECK(type_two_primes(1, 2, 3, 3, 2) == HomotopyClass::term(3, 2));  // x=y=1
  CHECK(type_two_primes(0, 2, 4, 3, 3) == HomotopyClass::term(4, 1));  // eps1=eps2=1
  CHECK(type_two_primes(2, 2, 3, 3, 2).is_point());                    // m=2
  CHECK(type_two_primes(0, 2, 5, 3, 2).is_point());                    // eps1=2
}

TEST_CASE("division graph of the flagship partition") {
  ResonanceGraph g = division_graph(parse_weights("8,4,2^3,1^6"));
  CHECK(g.chain.bases == std::vector<long long>{1, 2, 4, 8});
  CHECK(g.chain.mults == std::vector<long long>{6, 3, 1, 1});
  CHECK(g.vertex_count() == 5);

  std::vector<GraphEdge> expected = {
      {0, 1, 0}, {0, 2, 3}, {0, 3, 3}, {0, 4, 2},
      {2, 3, 1}, {2, 4, 1}, {3, 4, 0}};
  CHECK(g.edges == expected);

  auto paths = complete_paths(g);
  REQUIRE(paths.size() == 4);
  std::vector<std::pair<int, long long>> stats;
  for (const auto& p : paths) stats.emplace_back(p.length, p.weight);
  std::sort(stats.begin(), stats.end());
  CHECK(stats == std::vector<std::pair<int, long long>>{
                     {1, 2}, {2, 3}, {2, 4}, {3, 4}});

  CHECK(g.dot().find("digraph") != std::string::npos);
}

TEST_CASE("flagship wedge of four spheres") {
  TypeAnswer ans = homotopy_type(parse_weights("8,4,2^3,1^6"));
  CHECK(render_circle(ans.cls) == "S^5 v S^8 v S^10 v S^11");
  std::map<int, int> b = betti(ans.cls);
  CHECK(b == std::map<int, int>{{5, 1}, {8, 1}, {10, 1}, {11, 1}});
  CHECK_FALSE(ans.trace.empty());
}

TEST_CASE("a doubled sphere from a small partition") {
  TypeAnswer ans = homotopy_type(parse_weights("3,2,1,1"));
  CHECK(render_circle(ans.cls) == "S^4 v S^4");
  CHECK(betti(ans.cls) == std::map<int, int>{{4, 2}});
  CHECK(circle_dims(ans.cls) == std::vector<int>{4, 4});
}

TEST_CASE("the two computation routes agree on single-base shapes") {
  // (a^k, 1^l) with k >= 2 is both a chain and a power-over-ones shape
  for (long long a : {2, 3, 5}) {
    for (int l : {1, 3, 8}) {
      for (int k : {2, 3}) {
        std::vector<long long> parts(l, 1);
        parts.insert(parts.end(), k, a);
        HomotopyClass via_chain = type_division_chain(NumberPartition(parts));
        HomotopyClass direct = type_power_one(a, k, l);
        CHECK(via_chain == direct);
        CHECK(direct.is_point());
      }
    }
  }
}

TEST_CASE("non-sequential input is reported as undetermined") {
  TypeAnswer ans = homotopy_type(parse_weights("1,5,6,10"));
  CHECK(ans.cls.is_undetermined());
  CHECK_FALSE(ans.cls.reason().empty());
  CHECK(render_circle(ans.cls) == "undetermined");
}

TEST_CASE("rendering edge cases") {
  CHECK(render_circle(HomotopyClass::point()) == "point");
  CHECK(render_circle(HomotopyClass::term(1, 0)) == "S^1");
  CHECK(betti(HomotopyClass::point()).empty());
  CHECK(circle_dims(HomotopyClass::point()).empty());
}

}  // TEST_SUITE
