#include "doctest.h"
#include "helpers.hpp"
#include "skeincoeff/catalog.hpp"
#include "skeincoeff/moves.hpp"
#include "skeincoeff/series.hpp"

using namespace skein;
using namespace testutil;

namespace {

// A three-crossing triangle closed into a ring: three strands pairwise crossing.
Diagram triangle_ring() {
  for (std::uint64_t s = 0; s < 500; ++s) {
    Diagram d = random_diagram(s, 5);
    if (!r3_sites(d).empty()) return d;
  }
  FAIL("no R3 site found");
  return {};
}

}  // namespace

TEST_CASE("r1_add") {
  Diagram kink = r1_add(Diagram{}, EdgeRef{}, +1);
  CHECK(c_of(kink) == 1);
  CHECK(r_of(kink) == 1);
  CHECK(L_of(kink) == L_of(parse_pd(kKinkPlus)));
  CHECK(kink_sign(kink, 0) == 1);
  for (const char* pd : {kHopf, kTrefoil}) {
    Diagram d = parse_pd(pd);
    for (int bits = 0; bits < (1 << r_of(d)); ++bits) {
      Orientation o = Orientation::all_positive(r_of(d));
      for (int i = 0; i < r_of(d); ++i) o.reversed[static_cast<std::size_t>(i)] = (bits >> i) & 1;
      for (EdgeRef e : edge_refs(d))
        for (int chir : {+1, -1})
          for (KinkSide side : {KinkSide::Left, KinkSide::Right}) {
            Diagram k = r1_add(d, e, chir, side);
            CHECK(r_of(k) == r_of(d));
            MoveOutcome out{k, {}};
            for (int p = 0; p < d.port_count(); ++p) out.port_map.push_back(p);
            CHECK(writhe(k, transport_orientation(d, o, out)) == writhe(d, o) + chir);
            CHECK(L_of(k) == L_of(d).shift_y(chir));
            CHECK(satisfies_euler(k));
          }
    }
  }
  CHECK_THROWS(r1_add(parse_pd(kTrefoil), EdgeRef{}, +1));
  CHECK_THROWS(r1_add(Diagram{}, EdgeRef{}, 0));
}

TEST_CASE("r1 add/remove are inverse") {
  for (const char* pd : {"O", kHopf, kTrefoil}) {
    Diagram d = parse_pd(pd);
    for (EdgeRef e : edge_refs(d))
      for (KinkSide side : {KinkSide::Left, KinkSide::Right}) {
        Diagram k = r1_add(d, e, -1, side);
        const int x = c_of(k) - 1;
        auto sites = r1_sites(k);
        CHECK(std::find(sites.begin(), sites.end(), x) != sites.end());
        CHECK(r1_remove(k, x) == d);
      }
  }
  CHECK_THROWS(r1_remove(parse_pd(kTrefoil), 0));
}

TEST_CASE("r2 add/remove are inverse") {
  int tried = 0;
  for (const char* pd : {"O", kHopf, kTrefoil, kFigure8}) {
    Diagram d = parse_pd(pd);
    for (const auto& f : faces(d))
      for (int d1 : f)
        for (int d2 : f) {
          if (d1 == d2 || d2 == d.mate(d1)) continue;
          for (bool over : {true, false}) {
            Diagram two = r2_add(d, d1, d2, over);
            ++tried;
            CHECK(c_of(two) == c_of(d) + 2);
            CHECK(r_of(two) == r_of(d));
            CHECK(satisfies_euler(two));
            CHECK(L_of(two) == L_of(d));
            // the new bigon is bounded by the dart joining the two new crossings
            const int p = c_of(d);
            bool removed = false;
            for (int site : r2_remove_sites(two)) {
              if (crossing_of(site) < p || crossing_of(two.mate(site)) < p) continue;
              CHECK(r2_remove(two, site) == d);
              removed = true;
            }
            CHECK(removed);
          }
        }
  }
  CHECK(tried > 0);
  Diagram t = parse_pd(kTrefoil);
  auto face = face_of_darts(t);
  for (int a = 0; a < t.port_count(); ++a)
    for (int b = 0; b < t.port_count(); ++b)
      if (face[static_cast<std::size_t>(a)] != face[static_cast<std::size_t>(b)]) CHECK_THROWS(r2_add(t, a, b, true));
}

TEST_CASE("R2 removal needs a genuine bigon") {
  // The Hopf link's bigons are alternating, so no R2 removal applies.
  CHECK(r2_remove_sites(parse_pd(kHopf)).empty());
  CHECK(r2_remove_sites(parse_pd(kTrefoil)).empty());
}

TEST_CASE("R3") {
  Diagram d = triangle_ring();
  Orientation o = Orientation::all_positive(r_of(d));
  for (int site : r3_sites(d)) {
    Diagram moved = r3_apply(d, site);
    CHECK(c_of(moved) == c_of(d));
    CHECK(r_of(moved) == r_of(d));
    CHECK(satisfies_euler(moved));
    MoveOutcome out = apply_move(d, MoveStep{MoveKind::R3, site});
    CHECK(writhe(moved, transport_orientation(d, o, out)) == writhe(d, o));
    CHECK(L_of(moved) == L_of(d));
    // the three crossings bound a triangle again; moving back restores the diagram
    std::set<int> tri;
    const auto d_faces = faces(d);
    for (int t : d_faces[static_cast<std::size_t>(face_of_darts(d)[static_cast<std::size_t>(site)])]) tri.insert(crossing_of(t));
    int back = -1;
    auto moved_faces = faces(moved);
    for (int s2 : r3_sites(moved)) {
      std::set<int> t2;
      for (int t : moved_faces[static_cast<std::size_t>(face_of_darts(moved)[static_cast<std::size_t>(s2)])]) t2.insert(crossing_of(t));
      if (t2 == tri) back = s2;
    }
    REQUIRE(back >= 0);
    CHECK(r3_apply(moved, back) == d);
  }
  for (const char* pd : {kTrefoil, kFigure8}) CHECK(r3_sites(parse_pd(pd)).empty());
  CHECK_THROWS(r3_apply(parse_pd(kTrefoil), 0));
}

TEST_CASE("random walks") {
  Diagram t = parse_pd(kTrefoil);
  WalkResult none = random_move_walk(t, 0, 1, 10);
  CHECK(none.end == t);
  CHECK(none.trace.steps.empty());

  for (std::uint64_t s = 0; s < 80; ++s) {
    Diagram start = random_diagram(s, 5);
    WalkResult w = random_move_walk(start, 15, s, 10);
    CHECK(replay(start, w.trace) == w.end);
    CHECK(random_move_walk(start, 15, s, 10).trace == w.trace);
    CHECK(c_of(w.end) <= 10);
    CHECK(satisfies_euler(w.end));
    Orientation o = Orientation::all_positive(r_of(start)), o_end = o;
    Diagram cur = start;
    for (const MoveStep& step : w.trace.steps) {
      MoveOutcome out = apply_move(cur, step);
      o_end = transport_orientation(cur, o_end, out);
      cur = out.diagram;
    }
    CHECK(L_of(w.end) == L_of(start).shift_y(r1_writhe_change(start, w.trace)));
    CHECK(F_of(w.end, o_end) == F_of(start, o));
    CHECK(writhe(w.end, o_end) == writhe(start, o) + r1_writhe_change(start, w.trace));
  }
}

TEST_CASE("walks from O with R1 and R2 only keep F") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    std::mt19937_64 rng(s);
    Diagram d;
    Orientation o = Orientation::all_positive(1);
    for (int i = 0; i < 6; ++i) {
      MoveStep step;
      if (rng() % 2 || c_of(d) == 0) {
        auto refs = edge_refs(d);
        step = {rng() % 2 ? MoveKind::R1Plus : MoveKind::R1Minus, refs[rng() % refs.size()].port, static_cast<int>(rng() % 2)};
      } else {
        auto fs = faces(d);
        const auto& f = fs[rng() % fs.size()];
        int d1 = f[rng() % f.size()], d2 = f[rng() % f.size()];
        if (d1 == d2 || d2 == d.mate(d1)) continue;
        step = {MoveKind::R2Add, d1, d2, static_cast<int>(rng() % 2)};
      }
      MoveOutcome out = apply_move(d, step);
      o = transport_orientation(d, o, out);
      d = out.diagram;
    }
    CHECK(F_of(d, o) == BivariatePoly::constant(1));
  }
}

TEST_CASE("random_diagram is deterministic and varied") {
  std::set<int> cs, rs;
  for (std::uint64_t s = 0; s < 200; ++s) {
    Diagram d = random_diagram(s, 6);
    CHECK(d == random_diagram(s, 6));
    CHECK(c_of(d) >= 1);
    CHECK(c_of(d) <= 6);
    cs.insert(c_of(d));
    rs.insert(r_of(d));
  }
  CHECK(cs.size() == 6);
  CHECK(rs.size() >= 3);
  CHECK(move_kind_from_string(to_string(MoveKind::R2Remove)) == MoveKind::R2Remove);
  CHECK_THROWS(move_kind_from_string("R4"));
}
