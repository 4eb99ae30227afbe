#include <doctest.h>

#include "reso/complexity.hpp"
#include "reso/cuts.hpp"
#include "test_helpers.hpp"

using namespace reso;
using reso::testing::six_cut;

namespace {

// Replay a witness: glue along each partition in turn, keep the survivors,
// and report whether the final span is strictly smaller than the original.
bool witness_drops_span(const Cut& s, const std::vector<SetPartition>& witness) {
  std::vector<SignVector> current = s.elements();
  for (const SetPartition& pi : witness) {
    Cut stage(s.length(), current);
    RelativeCut rc = relative_from_gluing(stage, pi);
    current = rc.surviving;
  }
  return span_closure(current, s.length()) != s.elements();
}

}  // namespace

TEST_SUITE("complexity") {

TEST_CASE("a trivial cut has nothing to remove") {
  Cut s = cut_from_weights(parse_weights("1,2").parts());
  for (ComplexityMode mode :
       {ComplexityMode::TranspositionsOnly, ComplexityMode::LiteralProper}) {
    ComplexityResult r = complexity(s, mode);
    CHECK_FALSE(r.value.has_value());
    CHECK_FALSE(r.exhausted);
    CHECK(r.witness.empty());
  }
}

TEST_CASE("a single gluing suffices for a rigid four-part cut") {
  Cut s = cut_from_weights(parse_weights("1,3,101,103").parts());
  for (ComplexityMode mode :
       {ComplexityMode::TranspositionsOnly, ComplexityMode::LiteralProper}) {
    ComplexityResult r = complexity(s, mode);
    REQUIRE(r.value.has_value());
    CHECK(*r.value == 1);
    REQUIRE(r.witness.size() == 1);
    CHECK(witness_drops_span(s, r.witness));
  }
}

TEST_CASE("the seven-element six-coordinate cut needs two gluings") {
  Cut s = six_cut();
  for (ComplexityMode mode :
       {ComplexityMode::TranspositionsOnly, ComplexityMode::LiteralProper}) {
    ComplexityResult r = complexity(s, mode);
    REQUIRE(r.value.has_value());
    CHECK(*r.value == 2);
    CHECK(r.witness.size() == 2);
    CHECK(witness_drops_span(s, r.witness));
  }
}

TEST_CASE("the doubled geometric weight family has the expected cut shape") {
  for (int n = 1; n <= 3; ++n) {
    NumberPartition fam = high_complexity_family(n);
    CHECK(fam.size() == 2 * n);
    CHECK(verify_family_cut(fam));
  }
  // a hand-picked small offset breaks the shape
  CHECK_FALSE(verify_family_cut(high_complexity_family(2, 2)));
}

TEST_CASE("family complexity grows with the coordinate count") {
  // n = 1: the cut is trivial, no gluing set works
  ComplexityResult r1 = complexity(cut_from_weights(high_complexity_family(1).parts()),
                                   ComplexityMode::TranspositionsOnly);
  CHECK_FALSE(r1.value.has_value());
  CHECK_FALSE(r1.exhausted);

  ComplexityResult r2 = complexity(cut_from_weights(high_complexity_family(2).parts()),
                                   ComplexityMode::TranspositionsOnly);
  REQUIRE(r2.value.has_value());
  CHECK(*r2.value == 1);

  Cut s3 = cut_from_weights(high_complexity_family(3).parts());
  ComplexityResult r3 = complexity(s3, ComplexityMode::TranspositionsOnly);
  REQUIRE(r3.value.has_value());
  CHECK(*r3.value == 2);
  CHECK(witness_drops_span(s3, r3.witness));
}

TEST_CASE("allowing arbitrary proper gluings can only lower the count") {
  for (const char* w : {"1,1", "2,1,1", "1,3,101,103", "1,1,2"}) {
    Cut s = cut_from_weights(parse_weights(w).parts());
    ComplexityResult lit = complexity(s, ComplexityMode::LiteralProper);
    ComplexityResult tr = complexity(s, ComplexityMode::TranspositionsOnly);
    if (tr.value) {
      REQUIRE(lit.value.has_value());
      CHECK(*lit.value <= *tr.value);
    }
  }
}

TEST_CASE("result metadata records the search parameters") {
  Cut s = cut_from_weights(parse_weights("1,1").parts());
  ComplexityResult r = complexity(s, ComplexityMode::LiteralProper, 2);
  CHECK(r.mode == ComplexityMode::LiteralProper);
  CHECK(r.search_bound == 2);
}

}  // TEST_SUITE
