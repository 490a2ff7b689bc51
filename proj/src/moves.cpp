#include "skeincoeff/moves.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

namespace skein {

namespace {

constexpr std::array<int, 4> kStraightThrough{2, 3, 0, 1};

std::vector<int> identity_map(const Diagram& d) {
  std::vector<int> m(static_cast<std::size_t>(d.port_count()));
  std::iota(m.begin(), m.end(), 0);
  return m;
}

struct Builder {
  std::vector<int> mates;
  std::vector<Strand> over;
  int loops;

  explicit Builder(const Diagram& d) : mates(d.mates()), over(d.over_strands()), loops(d.free_loops()) {}
  int add_crossing(Strand o) {
    over.push_back(o);
    mates.resize(mates.size() + 4, -1);
    return static_cast<int>(over.size()) - 1;
  }
  void join(int a, int b) {
    mates[static_cast<std::size_t>(a)] = b;
    mates[static_cast<std::size_t>(b)] = a;
  }
  Diagram build() && { return Diagram(std::move(mates), std::move(over), loops); }
};

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Plus: return "R1+";
    case MoveKind::R1Minus: return "R1-";
    case MoveKind::R1Remove: return "R1-remove";
    case MoveKind::R2Add: return "R2-add";
    case MoveKind::R2Remove: return "R2-remove";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (MoveKind k : {MoveKind::R1Plus, MoveKind::R1Minus, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown move kind '" + s + "'");
}

// ----------------------------------------------------------------------- R1

Diagram r1_add(const Diagram& d, EdgeRef e, int chirality, KinkSide side) {
  if (chirality != 1 && chirality != -1) throw std::invalid_argument("r1_add: chirality must be +1 or -1");
  Builder b(d);
  const int x = b.add_crossing(Strand::V);
  b.join(port_of(x, 0), port_of(x, 1));
  if (e.port == EdgeRef::kLoop) {
    if (d.free_loops() == 0) throw std::invalid_argument("r1_add: no free loop");
    b.join(port_of(x, 2), port_of(x, 3));
    --b.loops;
  } else {
    d.check_port(e.port);
    const int tail = e.port;
    const int head = d.mate(e.port);
    if (side == KinkSide::Right) {
      b.join(tail, port_of(x, 3));
      b.join(port_of(x, 2), head);
    } else {
      b.join(tail, port_of(x, 2));
      b.join(port_of(x, 3), head);
    }
  }
  Diagram out = std::move(b).build();
  if (kink_sign(out, x) != chirality) out = crossing_change(out, x);
  return out;
}

int kink_sign(const Diagram& d, int crossing) {
  return sign_of(d, crossing, Orientation::all_positive(r_of(d)));
}

std::vector<int> r1_sites(const Diagram& d) {
  std::vector<int> out;
  for (int x = 0; x < d.crossing_count(); ++x)
    for (int s = 0; s < 4; ++s)
      if (d.mate(port_of(x, s)) == port_of(x, (s + 1) % 4)) {
        out.push_back(x);
        break;
      }
  return out;
}

Diagram r1_remove(const Diagram& d, int crossing) {
  d.check_crossing(crossing);
  auto sites = r1_sites(d);
  if (std::find(sites.begin(), sites.end(), crossing) == sites.end())
    throw std::invalid_argument("r1_remove: crossing " + std::to_string(crossing) + " is not a kink");
  return detail::excise(d, {crossing}, {kStraightThrough}).diagram;
}

// ----------------------------------------------------------------------- R2

std::vector<int> face_of_darts(const Diagram& d) {
  std::vector<int> out(static_cast<std::size_t>(d.port_count()), -1);
  auto fs = faces(d);
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (int dart : fs[f]) out[static_cast<std::size_t>(dart)] = static_cast<int>(f);
  return out;
}

Diagram r2_add(const Diagram& d, int dart1, int dart2, bool first_over) {
  d.check_port(dart1);
  d.check_port(dart2);
  if (dart1 == dart2 || dart2 == d.mate(dart1)) throw std::invalid_argument("r2_add: darts must lie on distinct edges");
  auto face = face_of_darts(d);
  if (face[static_cast<std::size_t>(dart1)] != face[static_cast<std::size_t>(dart2)])
    throw std::invalid_argument("r2_add: darts do not share a face");
  const int x1 = dart1, y1 = d.mate(dart1), x2 = dart2, y2 = d.mate(dart2);
  Builder b(d);
  // dart1's strand runs through slots 1/3 of both new crossings, dart2's through 0/2
  const Strand o = first_over ? Strand::V : Strand::U;
  const int p = b.add_crossing(o);
  const int q = b.add_crossing(o);
  b.join(port_of(p, 1), x1);
  b.join(port_of(p, 3), port_of(q, 3));
  b.join(port_of(p, 0), port_of(q, 2));
  b.join(port_of(p, 2), y2);
  b.join(port_of(q, 0), x2);
  b.join(port_of(q, 1), y1);
  return std::move(b).build();
}

std::vector<int> r2_remove_sites(const Diagram& d) {
  std::vector<int> out;
  for (const auto& f : faces(d)) {
    if (f.size() != 2) continue;
    const int t0 = f[0];
    const int t1 = f[1];
    if (crossing_of(t0) == crossing_of(t1)) continue;
    if (d.is_over_port(t0) == d.is_over_port(d.mate(t0)) && d.is_over_port(t1) == d.is_over_port(d.mate(t1)))
      out.push_back(std::min(t0, t1));
  }
  return out;
}

Diagram r2_remove(const Diagram& d, int bigon_dart) {
  auto sites = r2_remove_sites(d);
  auto face = face_of_darts(d);
  d.check_port(bigon_dart);
  auto it = std::find_if(sites.begin(), sites.end(), [&](int s) {
    return face[static_cast<std::size_t>(s)] == face[static_cast<std::size_t>(bigon_dart)];
  });
  if (it == sites.end()) throw std::invalid_argument("r2_remove: dart is not on a removable bigon");
  return detail::excise(d, {crossing_of(bigon_dart), crossing_of(d.mate(bigon_dart))}, {kStraightThrough, kStraightThrough})
      .diagram;
}

// ----------------------------------------------------------------------- R3

namespace {

struct TriangleLine {
  int inner_a, inner_b;  // the triangle edge
  int outer_a, outer_b;  // opposite ports on the same strands
  int ext_a, ext_b;      // where the outer ports lead
};

bool triangle_lines(const Diagram& d, const std::vector<int>& face, std::array<TriangleLine, 3>& lines) {
  if (face.size() != 3) return false;
  std::set<int> crossings;
  for (int t : face) crossings.insert(crossing_of(t));
  if (crossings.size() != 3) return false;
  std::set<int> own;
  for (int x : crossings)
    for (int s = 0; s < 4; ++s) own.insert(port_of(x, s));
  bool some_strand_on_top = false;
  for (std::size_t k = 0; k < 3; ++k) {
    TriangleLine& l = lines[k];
    l.inner_a = face[k];
    l.inner_b = d.mate(face[k]);
    l.outer_a = opposite(l.inner_a);
    l.outer_b = opposite(l.inner_b);
    l.ext_a = d.mate(l.outer_a);
    l.ext_b = d.mate(l.outer_b);
    if (own.count(l.ext_a) || own.count(l.ext_b)) return false;
    if (d.is_over_port(l.inner_a) && d.is_over_port(l.inner_b)) some_strand_on_top = true;
  }
  return some_strand_on_top;
}

}  // namespace

std::vector<int> r3_sites(const Diagram& d) {
  std::vector<int> out;
  std::array<TriangleLine, 3> lines;
  for (const auto& f : faces(d))
    if (triangle_lines(d, f, lines)) out.push_back(*std::min_element(f.begin(), f.end()));
  return out;
}

Diagram r3_apply(const Diagram& d, int triangle_dart) {
  d.check_port(triangle_dart);
  auto fs = faces(d);
  auto face = face_of_darts(d);
  const auto& f = fs[static_cast<std::size_t>(face[static_cast<std::size_t>(triangle_dart)])];
  std::array<TriangleLine, 3> lines;
  if (!triangle_lines(d, f, lines)) throw std::invalid_argument("r3_apply: dart is not on an applicable triangle");
  // Each strand slides to the other side of the opposite crossing: the crossings keep their
  // slot layout and over/under data, and each strand meets its two crossings in reverse order.
  Builder b(d);
  for (const TriangleLine& l : lines) {
    b.join(l.inner_b, l.ext_a);
    b.join(l.outer_b, l.outer_a);
    b.join(l.inner_a, l.ext_b);
  }
  return std::move(b).build();
}

// ----------------------------------------------------------- step plumbing

MoveOutcome apply_move(const Diagram& d, const MoveStep& step) {
  switch (step.kind) {
    case MoveKind::R1Plus:
    case MoveKind::R1Minus: {
      int chirality = step.kind == MoveKind::R1Plus ? 1 : -1;
      KinkSide side = step.b == 0 ? KinkSide::Left : KinkSide::Right;
      return {r1_add(d, EdgeRef{step.a}, chirality, side), identity_map(d)};
    }
    case MoveKind::R1Remove: {
      d.check_crossing(step.a);
      auto sites = r1_sites(d);
      if (std::find(sites.begin(), sites.end(), step.a) == sites.end()) throw std::invalid_argument("R1-remove: not a kink");
      auto ex = detail::excise(d, {step.a}, {kStraightThrough});
      return {std::move(ex.diagram), std::move(ex.port_map)};
    }
    case MoveKind::R2Add:
      return {r2_add(d, step.a, step.b, step.flag != 0), identity_map(d)};
    case MoveKind::R2Remove: {
      Diagram checked = r2_remove(d, step.a);
      auto ex = detail::excise(d, {crossing_of(step.a), crossing_of(d.mate(step.a))}, {kStraightThrough, kStraightThrough});
      return {std::move(ex.diagram), std::move(ex.port_map)};
    }
    case MoveKind::R3:
      return {r3_apply(d, step.a), identity_map(d)};
  }
  throw std::logic_error("apply_move: unhandled move kind");
}

Diagram replay(const Diagram& start, const MoveTrace& trace) {
  Diagram d = start;
  for (const MoveStep& s : trace.steps) d = apply_move(d, s).diagram;
  return d;
}

int r1_writhe_change(const Diagram& start, const MoveTrace& trace) {
  int net = 0;
  Diagram d = start;
  for (const MoveStep& s : trace.steps) {
    if (s.kind == MoveKind::R1Plus) ++net;
    if (s.kind == MoveKind::R1Minus) --net;
    if (s.kind == MoveKind::R1Remove) net -= kink_sign(d, s.a);
    d = apply_move(d, s).diagram;
  }
  return net;
}

Orientation transport_orientation(const Diagram& before, const Orientation& o, const MoveOutcome& moved) {
  ComponentMap old_cm = component_map(before);
  ComponentMap new_cm = component_map(moved.diagram);
  Orientation out = Orientation::all_positive(new_cm.count());
  std::vector<bool> set(static_cast<std::size_t>(new_cm.count()), false);
  for (int p = 0; p < before.port_count(); ++p) {
    int q = moved.port_map[static_cast<std::size_t>(p)];
    if (q < 0) continue;
    auto comp = static_cast<std::size_t>(new_cm.component_of[static_cast<std::size_t>(q)]);
    if (set[comp]) continue;
    set[comp] = true;
    out.reversed[comp] = new_cm.canonical_entry[static_cast<std::size_t>(q)] != old_cm.is_entry(p, o);
  }
  return out;
}

// ------------------------------------------------------------------- random

namespace {

// Candidate step of the given kind at a random site, or nothing.
bool random_step(const Diagram& d, MoveKind kind, int max_c, std::mt19937_64& rng, MoveStep& step) {
  step = MoveStep{kind, -1, -1, 0};
  const int c = d.crossing_count();
  switch (kind) {
    case MoveKind::R1Plus:
    case MoveKind::R1Minus: {
      if (c + 1 > max_c) return false;
      auto refs = edge_refs(d);
      step.a = refs[pick(rng, refs.size())].port;
      step.b = static_cast<int>(pick(rng, 2));
      return true;
    }
    case MoveKind::R1Remove: {
      auto sites = r1_sites(d);
      if (sites.empty()) return false;
      step.a = sites[pick(rng, sites.size())];
      return true;
    }
    case MoveKind::R2Add: {
      if (c + 2 > max_c || c == 0) return false;
      auto fs = faces(d);
      std::vector<std::size_t> usable;
      for (std::size_t i = 0; i < fs.size(); ++i)
        if (fs[i].size() >= 2) usable.push_back(i);
      if (usable.empty()) return false;
      const auto& f = fs[usable[pick(rng, usable.size())]];
      int d1 = f[pick(rng, f.size())];
      int d2 = f[pick(rng, f.size())];
      if (d1 == d2 || d2 == d.mate(d1)) return false;
      step.a = d1;
      step.b = d2;
      step.flag = static_cast<int>(pick(rng, 2));
      return true;
    }
    case MoveKind::R2Remove: {
      auto sites = r2_remove_sites(d);
      if (sites.empty()) return false;
      step.a = sites[pick(rng, sites.size())];
      return true;
    }
    case MoveKind::R3: {
      auto sites = r3_sites(d);
      if (sites.empty()) return false;
      step.a = sites[pick(rng, sites.size())];
      return true;
    }
  }
  return false;
}

constexpr std::array<MoveKind, 6> kAllMoves{MoveKind::R1Plus, MoveKind::R1Minus, MoveKind::R1Remove,
                                            MoveKind::R2Add,  MoveKind::R2Remove, MoveKind::R3};

}  // namespace

WalkResult random_move_walk(const Diagram& d, int steps, std::uint64_t seed, int max_c) {
  if (steps < 0) throw std::invalid_argument("random_move_walk: steps must be >= 0");
  std::mt19937_64 rng(seed);
  WalkResult w{d, {}};
  for (int i = 0; i < steps; ++i) {
    MoveKind kind = kAllMoves[pick(rng, kAllMoves.size())];
    MoveStep step;
    if (!random_step(w.end, kind, max_c, rng, step)) continue;
    w.end = apply_move(w.end, step).diagram;
    w.trace.steps.push_back(step);
  }
  return w;
}

Diagram random_diagram(std::uint64_t seed, int max_c) {
  if (max_c < 1) throw std::invalid_argument("random_diagram: max_c must be >= 1");
  std::mt19937_64 rng(seed);
  const int target = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(max_c)));
  const int splices = static_cast<int>(pick(rng, 3));
  const int grow_to = target + splices;
  Diagram d;
  int guard = 0;
  while (d.crossing_count() < grow_to && guard++ < 1000) {
    MoveKind kind;
    auto roll = pick(rng, 10);
    if (roll < 3 || d.crossing_count() == 0)
      kind = pick(rng, 2) ? MoveKind::R1Plus : MoveKind::R1Minus;
    else if (roll < 9)
      kind = MoveKind::R2Add;
    else
      kind = MoveKind::R3;
    MoveStep step;
    if (random_step(d, kind, grow_to, rng, step)) d = apply_move(d, step).diagram;
  }
  for (int x = 0; x < d.crossing_count(); ++x)
    if (pick(rng, 2)) d = crossing_change(d, x);
  for (int i = 0; i < splices && d.crossing_count() > target; ++i) {
    int x = static_cast<int>(pick(rng, static_cast<std::uint64_t>(d.crossing_count())));
    d = splice(d, x, pick(rng, 2) ? SpliceKind::A : SpliceKind::B);
  }
  if (pick(rng, 8) == 0) d = disjoint_union(d, Diagram{});
  return d;
}

}  // namespace skein
