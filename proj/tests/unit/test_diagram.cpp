#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "skeincoeff/catalog.hpp"
#include "skeincoeff/diagram.hpp"
#include "skeincoeff/moves.hpp"

using namespace skein;
using namespace testutil;

TEST_CASE("parse_pd basics") {
  Diagram o = parse_pd("O");
  CHECK(c_of(o) == 0);
  CHECK(r_of(o) == 1);
  CHECK(o == Diagram{});

  Diagram kink = parse_pd(kKinkMinus);
  CHECK(c_of(kink) == 1);
  CHECK(r_of(kink) == 1);

  Diagram hopf = parse_pd(kHopf);
  CHECK(c_of(hopf) == 2);
  CHECK(r_of(hopf) == 2);
  CHECK(r_of(parse_pd("O O O")) == 3);
  CHECK(parse_pd("X[1,4,2,3], X[3,2,4,1]") == hopf);
  CHECK(parse_pd("O, O") == parse_pd("O O"));
}

TEST_CASE("parse_pd rejects bad input") {
  CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), ParseError);
  CHECK_THROWS_AS(parse_pd("X(1,1,1,2)"), ParseError);
  CHECK_THROWS_AS(parse_pd("X(1,2,2)"), ParseError);
  CHECK_THROWS_AS(parse_pd("Y(1,2,2,1)"), ParseError);
  CHECK_THROWS_AS(parse_pd("X(0,1,1,0)"), ParseError);
  CHECK_THROWS_AS(parse_pd(""), ParseError);
  // every label twice but not embeddable in the plane
  CHECK_THROWS_AS(parse_pd("X(1,2,1,2)"), ParseError);
  CHECK_THROWS_AS(parse_pd("Ox"), ParseError);
}

TEST_CASE("component counts agree with a label-level strand follower") {
  for (const auto& e : catalog()) {
    Diagram d = parse_pd(e.pd);
    CHECK_MESSAGE(r_of(d) == pd_label_components(pd_quadruples(d), d.free_loops()), e.name);
    CHECK(components(d).size() + static_cast<std::size_t>(d.free_loops()) == static_cast<std::size_t>(r_of(d)));
  }
  CHECK(pd_label_components({{1, 4, 2, 3}, {3, 2, 4, 1}}, 0) == 2);
}

TEST_CASE("delta_p") {
  Diagram kink = parse_pd(kKinkMinus);
  CHECK(delta_p(kink, 0) == 0);
  Diagram hopf = parse_pd(kHopf);
  CHECK(delta_p(hopf, 0) == 1);
  CHECK(delta_p(hopf, 1) == 1);
  Diagram trefoil = parse_pd(kTrefoil);
  for (int p = 0; p < 3; ++p) CHECK(delta_p(trefoil, p) == 0);
  CHECK_THROWS(delta_p(trefoil, 3));
}

TEST_CASE("splices") {
  Diagram kink = parse_pd(kKinkMinus);
  std::multiset<int> rs{r_of(splice(kink, 0, SpliceKind::A)), r_of(splice(kink, 0, SpliceKind::B))};
  CHECK(rs == std::multiset<int>{1, 2});
  for (SpliceKind k : {SpliceKind::A, SpliceKind::B}) CHECK(c_of(splice(kink, 0, k)) == 0);

  Diagram hopf = parse_pd(kHopf);
  for (int p = 0; p < 2; ++p)
    for (SpliceKind k : {SpliceKind::A, SpliceKind::B}) {
      Diagram s = splice(hopf, p, k);
      CHECK(c_of(s) == 1);
      CHECK(r_of(s) == 1);
      CHECK(delta_shift(hopf, p, k) == -1);
    }
  std::multiset<int> shifts{delta_shift(kink, 0, SpliceKind::A), delta_shift(kink, 0, SpliceKind::B)};
  CHECK(shifts == std::multiset<int>{0, 1});
}

TEST_CASE("crossing change, sign and writhe") {
  Diagram kp = parse_pd(kKinkPlus);
  Diagram km = parse_pd(kKinkMinus);
  Orientation o1 = Orientation::all_positive(1);
  CHECK(writhe(kp, o1) == 1);
  CHECK(writhe(kp, Orientation::parse("-")) == 1);
  CHECK(writhe(km, o1) == -1);
  CHECK(writhe(crossing_change(kp, 0), o1) == -1);
  CHECK(crossing_change(crossing_change(kp, 0), 0) == kp);

  Diagram hopf = parse_pd(kHopf);
  CHECK(r_of(crossing_change(hopf, 0)) == 2);
  CHECK(writhe(hopf, Orientation::parse("+-")) == 2);
  CHECK(writhe(hopf, Orientation::parse("++")) == -2);
  CHECK(writhe(parse_pd(kTrefoil), o1) == 3);
  CHECK(writhe(parse_pd(kFigure8), o1) == 0);
}

TEST_CASE("mirror") {
  Diagram t = parse_pd(kTrefoil);
  CHECK(mirror(mirror(t)) == t);
  CHECK(mirror(Diagram{}) == Diagram{});
  CHECK(writhe(mirror(t), Orientation::all_positive(1)) == -3);
}

TEST_CASE("disjoint union and connected sum") {
  Diagram o;
  CHECK(r_of(disjoint_union(o, o)) == 2);
  CHECK(disjoint_union(o, o) == parse_pd("O O"));
  CHECK(r_of(connected_sum(o, o, EdgeRef{}, EdgeRef{})) == 1);
  Diagram t = parse_pd(kTrefoil);
  Diagram h = parse_pd(kHopf);
  for (EdgeRef a : edge_refs(t))
    for (EdgeRef b : edge_refs(t)) {
      Diagram s = connected_sum(t, t, a, b);
      CHECK(c_of(s) == 6);
      CHECK(r_of(s) == 1);
      CHECK(satisfies_euler(s));
    }
  for (EdgeRef a : edge_refs(t))
    for (EdgeRef b : edge_refs(h)) CHECK(r_of(connected_sum(t, h, a, b)) == 2);
  CHECK(r_of(connected_sum(h, parse_pd("O O"), edge_refs(h)[0], EdgeRef{})) == 3);
}

TEST_CASE("faces and Euler") {
  CHECK(faces(parse_pd(kKinkMinus)).size() == 3);
  CHECK(faces(parse_pd(kHopf)).size() == 4);
  CHECK(faces(parse_pd(kTrefoil)).size() == 5);
  for (const auto& e : catalog()) CHECK_MESSAGE(satisfies_euler(parse_pd(e.pd)), e.name);
  for (std::uint64_t s = 0; s < 100; ++s) CHECK(satisfies_euler(random_diagram(s, 8)));
}

TEST_CASE("splice bookkeeping invariants") {
  std::vector<Diagram> ds;
  for (const auto& e : catalog()) ds.push_back(parse_pd(e.pd));
  for (std::uint64_t s = 0; s < 60; ++s) ds.push_back(random_diagram(s, 6));
  for (const Diagram& d : ds) {
    for (int p = 0; p < c_of(d); ++p) {
      const int a = delta_shift(d, p, SpliceKind::A), b = delta_shift(d, p, SpliceKind::B);
      if (delta_p(d, p) == 1) {
        CHECK(a == -1);
        CHECK(b == -1);
      } else {
        CHECK(std::multiset<int>{a, b} == std::multiset<int>{0, 1});
      }
      Diagram x = crossing_change(d, p);
      CHECK(c_of(x) == c_of(d));
      CHECK(r_of(x) == r_of(d));
      for (int q = 0; q < c_of(d); ++q) CHECK(delta_p(x, q) == delta_p(d, q));
      for (SpliceKind k : {SpliceKind::A, SpliceKind::B}) {
        Diagram s = splice(d, p, k);
        CHECK(c_of(s) == c_of(d) - 1);
        CHECK(satisfies_euler(s));
      }
      // double splices commute (crossing q > p shifts down by one after removing p)
      for (int q = p + 1; q < c_of(d); ++q)
        for (SpliceKind k : {SpliceKind::A, SpliceKind::B})
          for (SpliceKind k2 : {SpliceKind::A, SpliceKind::B})
            CHECK(r_of(splice(splice(d, p, k), q - 1, k2)) == r_of(splice(splice(d, q, k2), p, k)));
    }
  }
}

TEST_CASE("PD round trip up to relabeling") {
  for (const auto& e : catalog()) {
    Diagram d = parse_pd(e.pd);
    Diagram back = parse_pd(to_pd(d));
    CHECK(c_of(back) == c_of(d));
    CHECK(r_of(back) == r_of(d));
    CHECK(to_pd(back) == to_pd(parse_pd(to_pd(back))));
  }
  for (std::uint64_t s = 0; s < 50; ++s) {
    Diagram d = random_diagram(s, 7);
    Diagram back = parse_pd(to_pd(d));
    CHECK(c_of(back) == c_of(d));
    CHECK(r_of(back) == r_of(d));
    CHECK(faces(back).size() == faces(d).size());
  }
}
