#pragma once

// Reidemeister moves on combinatorial diagrams, site detection, and seeded random walks.
//
// Sites are addressed by darts (a dart is named by the port it leaves). New crossings are
// appended; removed crossings are compacted away, so site data refers to the diagram the
// step is applied to.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skeincoeff/diagram.hpp"

namespace skein {

enum class MoveKind { R1Plus, R1Minus, R1Remove, R2Add, R2Remove, R3 };

/// Which face of the dart receives the new monogon.
enum class KinkSide { Left, Right };

std::string to_string(MoveKind kind);
MoveKind move_kind_from_string(const std::string& s);

/// R1Plus/R1Minus: a = dart (or EdgeRef::kLoop), b = side (0 left, 1 right).
/// R1Remove: a = kink crossing. R2Add: a, b = darts, flag = 1 when a's strand goes over.
/// R2Remove: a = dart on the bigon face. R3: a = dart on the triangle face.
struct MoveStep {
  MoveKind kind = MoveKind::R1Plus;
  int a = -1;
  int b = -1;
  int flag = 0;

  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

struct MoveTrace {
  std::vector<MoveStep> steps;

  friend bool operator==(const MoveTrace&, const MoveTrace&) = default;
};

struct MoveOutcome {
  Diagram diagram;
  std::vector<int> port_map;  // old port -> new port, -1 if removed
};

/// Inserts a kink of sign `chirality` (+1 / -1) on the edge `e`.
Diagram r1_add(const Diagram& d, EdgeRef e, int chirality, KinkSide side = KinkSide::Right);
/// Crossings where two adjacent slots are joined by an edge.
std::vector<int> r1_sites(const Diagram& d);
Diagram r1_remove(const Diagram& d, int crossing);
/// Sign of the kink at `crossing` (independent of orientation).
int kink_sign(const Diagram& d, int crossing);

/// Pushes a finger of dart1's edge across dart2's edge; both darts must lie on one face.
Diagram r2_add(const Diagram& d, int dart1, int dart2, bool first_over);
/// Face id of every dart.
std::vector<int> face_of_darts(const Diagram& d);
/// One dart per bigon face whose two edges are over at both ends and under at both ends.
std::vector<int> r2_remove_sites(const Diagram& d);
Diagram r2_remove(const Diagram& d, int bigon_dart);

/// One dart per triangular face with three distinct crossings on which one strand passes
/// over both others and whose outer ends lead away from the triangle.
std::vector<int> r3_sites(const Diagram& d);
Diagram r3_apply(const Diagram& d, int triangle_dart);

/// Applies one step; throws std::invalid_argument if the site does not admit it.
MoveOutcome apply_move(const Diagram& d, const MoveStep& step);
Diagram replay(const Diagram& start, const MoveTrace& trace);
/// Net writhe change contributed by the R1 steps of `trace` (R2 and R3 contribute none).
int r1_writhe_change(const Diagram& start, const MoveTrace& trace);

/// Carries an orientation across a move so that surviving ports keep their direction.
Orientation transport_orientation(const Diagram& before, const Orientation& o, const MoveOutcome& moved);

struct WalkResult {
  Diagram end;
  MoveTrace trace;
};

/// Seeded random sequence of `steps` move picks, never exceeding `max_c` crossings.
/// Picks that have no applicable site are skipped.
WalkResult random_move_walk(const Diagram& d, int steps, std::uint64_t seed, int max_c);

/// A seeded random planar diagram with 1..max_c crossings, grown from the unknot by R1, R2
/// and R3 moves, then randomized by crossing changes and splices.
Diagram random_diagram(std::uint64_t seed, int max_c);

}  // namespace skein
