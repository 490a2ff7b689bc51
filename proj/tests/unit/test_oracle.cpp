#include "doctest.h"
#include "helpers.hpp"
#include "skeincoeff/catalog.hpp"
#include "skeincoeff/moves.hpp"
#include "skeincoeff/oracle.hpp"
#include "skeincoeff/series.hpp"

using namespace skein;
using namespace testutil;

TEST_CASE("oracle examples") {
  CHECK(oracle_L(Diagram{}) == BivariatePoly::constant(1));
  CHECK(oracle_L(parse_pd("O O")) == d_const());
  CHECK(uniqueness_check(Diagram{}).ok);
}

TEST_CASE("oracle kink relations") {
  for (const char* pd : {"O", kHopf, kTrefoil}) {
    Diagram d = parse_pd(pd);
    const BivariatePoly L = oracle_L(d);
    for (EdgeRef e : edge_refs(d)) {
      CHECK(oracle_L(r1_add(d, e, +1)) == L.shift_y(1));
      CHECK(oracle_L(r1_add(d, e, -1, KinkSide::Left)) == L.shift_y(-1));
    }
  }
}

TEST_CASE("oracle base independence") {
  for (const auto& e : catalog()) {
    Diagram d = parse_pd(e.pd);
    if (c_of(d) > 5) continue;
    KauffmanOracle oracle;
    const BivariatePoly ref = oracle.oracle_L(d);
    for (const BaseSequence& a : enumerate_bases(d, true)) CHECK(oracle.oracle_L_with_base(d, a) == ref);
  }
}

TEST_CASE("uniqueness on the catalog and random diagrams") {
  CoeffEngine engine;
  KauffmanOracle oracle;
  for (const auto& e : catalog()) CHECK_MESSAGE(uniqueness_check(parse_pd(e.pd), engine, oracle).ok, e.name);
  for (std::uint64_t s = 0; s < 100; ++s) CHECK(uniqueness_check(random_diagram(s + 31337, 6), engine, oracle).ok);
}

TEST_CASE("oracle memo and budget") {
  KauffmanOracle memo(EngineOptions{100'000'000, true});
  KauffmanOracle plain;
  for (const auto& e : catalog()) CHECK(memo.oracle_L(parse_pd(e.pd)) == plain.oracle_L(parse_pd(e.pd)));
  KauffmanOracle tiny(EngineOptions{3, false});
  CHECK_THROWS_AS(tiny.oracle_L(parse_pd(kFigure8)), BudgetExceeded);
}
