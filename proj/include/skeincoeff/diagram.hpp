#pragma once

// Combinatorial unoriented link diagrams.
//
// A diagram with c crossings has 4c ports. Port 4*i + s is slot s of crossing i;
// the slots of a crossing are numbered 0..3 counterclockwise. Slots {0, 2} carry
// strand U and slots {1, 3} carry strand V; a strand passes straight through its
// crossing, so the port opposite to p is p ^ 2. Every port is joined to exactly
// one other port by an edge (`mate`). Crossing-free circles are only counted.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skein {

enum class Strand : std::uint8_t { U = 0, V = 1 };

/// A splices slots 0-1 and 2-3; B splices 0-3 and 1-2.
enum class SpliceKind : std::uint8_t { A, B };

constexpr int port_of(int crossing, int slot) { return 4 * crossing + slot; }
constexpr int crossing_of(int port) { return port / 4; }
constexpr int slot_of(int port) { return port % 4; }
constexpr int opposite(int port) { return port ^ 2; }
constexpr Strand strand_of_slot(int slot) { return slot % 2 == 0 ? Strand::U : Strand::V; }
constexpr Strand other(Strand s) { return s == Strand::U ? Strand::V : Strand::U; }

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Diagram {
 public:
  /// The zero-crossing unknot O.
  Diagram() = default;
  /// Validates that `mates` is a fixed-point-free involution on 4 * over.size() ports
  /// and that the diagram has at least one component. Throws std::invalid_argument.
  Diagram(std::vector<int> mates, std::vector<Strand> over, int free_loops);

  /// O^r, r >= 1.
  static Diagram unlink(int r);

  int crossing_count() const { return static_cast<int>(over_.size()); }
  int port_count() const { return static_cast<int>(mates_.size()); }
  int free_loops() const { return free_loops_; }
  int mate(int port) const { return mates_[static_cast<std::size_t>(port)]; }
  Strand over(int crossing) const { return over_[static_cast<std::size_t>(crossing)]; }
  Strand under(int crossing) const { return other(over(crossing)); }
  bool is_over_port(int port) const { return strand_of_slot(slot_of(port)) == over(crossing_of(port)); }
  const std::vector<int>& mates() const { return mates_; }
  const std::vector<Strand>& over_strands() const { return over_; }

  /// Throws std::out_of_range for an unknown crossing id.
  void check_crossing(int crossing) const;
  void check_port(int port) const;

  /// Compact exact encoding, used as a cache key.
  std::string key() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<int> mates_;
  std::vector<Strand> over_;
  int free_loops_ = 1;
};

/// Per-component traversal direction relative to the canonical traversal.
struct Orientation {
  std::vector<bool> reversed;

  static Orientation all_positive(int components) { return {std::vector<bool>(static_cast<std::size_t>(components), false)}; }
  /// "+-+" style, one character per component.
  static Orientation parse(std::string_view signs);
  std::string str() const;
};

/// A closed component with crossings, as the cyclic sequence of ports visited by
/// its canonical traversal: entry, exit, entry, exit, ... The canonical traversal
/// starts by entering the component's lowest port.
struct Component {
  std::vector<int> ports;
};

struct ComponentMap {
  std::vector<Component> closed;
  std::vector<int> component_of;        // per port
  std::vector<bool> canonical_entry;    // per port
  int free_loops = 0;

  int count() const { return static_cast<int>(closed.size()) + free_loops; }
  /// True when `port` is entered (rather than left) when its component is traversed in direction `o`.
  bool is_entry(int port, const Orientation& o) const;
};

ComponentMap component_map(const Diagram& d);
std::vector<Component> components(const Diagram& d);
int r_of(const Diagram& d);
int c_of(const Diagram& d);

/// 0 if both strands at p lie on one component, 1 otherwise.
int delta_p(const Diagram& d, int p);
Diagram splice(const Diagram& d, int p, SpliceKind kind);
/// r(splice(d, p, kind)) - r(d)
int delta_shift(const Diagram& d, int p, SpliceKind kind);
Diagram crossing_change(const Diagram& d, int p);
Diagram mirror(const Diagram& d);

/// +1 or -1. A crossing is positive when the over-strand direction, turned a quarter
/// counterclockwise, gives the under-strand direction (right-hand rule).
int sign_of(const Diagram& d, int p, const Orientation& o);
int writhe(const Diagram& d, const Orientation& o);

/// Selects an edge: the dart leaving `port`, or a free loop when port == kLoop.
struct EdgeRef {
  static constexpr int kLoop = -1;
  int port = kLoop;
};

/// All edge choices: one EdgeRef per dart, plus one for a free loop if any.
std::vector<EdgeRef> edge_refs(const Diagram& d);

Diagram disjoint_union(const Diagram& a, const Diagram& b);
/// Cuts the edge at `ea` in `a` and at `eb` in `b` and reconnects across so that the
/// direction of dart `ea` continues into dart `eb`.
Diagram connected_sum(const Diagram& a, const Diagram& b, EdgeRef ea, EdgeRef eb);

/// Face boundaries from the rotation system. Each face is a cycle of darts (identified by
/// the port they leave); the face lies to the right of each of its darts.
std::vector<std::vector<int>> faces(const Diagram& d);
/// Connected pieces of the 4-valent graph, as lists of crossing ids (free loops excluded).
std::vector<std::vector<int>> pieces(const Diagram& d);
/// V - E + F == 2 on every connected piece.
bool satisfies_euler(const Diagram& d);

/// Parses a PD line: tokens "X(a,b,c,d)" listing ports counterclockwise with the under-strand
/// through entries 1 and 3, and "O" for a crossing-free circle. Throws ParseError.
Diagram parse_pd(std::string_view text);
/// PD text with edges relabeled 1..E; parse_pd(to_pd(d)) equals d up to relabeling.
std::string to_pd(const Diagram& d);
/// Quadruples in to_pd's labeling.
std::vector<std::vector<int>> pd_quadruples(const Diagram& d);

namespace detail {

struct Excision {
  Diagram diagram;
  std::vector<int> port_map;  // old port -> new port, -1 if removed
};

/// Removes `crossings`; `through[k][s]` is the slot that slot s of crossings[k] connects to
/// once the crossing is gone. Closed circles left behind become free loops.
Excision excise(const Diagram& d, const std::vector<int>& crossings, const std::vector<std::array<int, 4>>& through);

}  // namespace detail

}  // namespace skein
