#pragma once

// Base-point sequences, first-encounter data and warping degree.
//
// A base point sits on an edge just before the port it leads into, so a based
// direction on a component is fully described by that entry port. Components are
// traversed one after another in sequence order, each once from its base point.

#include <compare>
#include <vector>

#include "skeincoeff/diagram.hpp"

namespace skein {

struct BaseEntry {
  int component = 0;
  int entry_port = -1;  // -1 on a free loop

  friend bool operator==(const BaseEntry&, const BaseEntry&) = default;
};

struct BaseSequence {
  std::vector<BaseEntry> entries;

  friend bool operator==(const BaseSequence&, const BaseSequence&) = default;
};

struct Complexity {
  int crossings = 0;
  int warping = 0;

  friend auto operator<=>(const Complexity&, const Complexity&) = default;
};

/// Throws std::invalid_argument unless `a` names every component exactly once with an entry
/// port on that component.
void validate_base(const Diagram& d, const ComponentMap& cm, const BaseSequence& a);

/// Entry ports in the order the based traversal meets them.
std::vector<int> traversal_entries(const Diagram& d, const BaseSequence& a);

/// Per crossing, the strand whose port the based traversal reaches first.
std::vector<Strand> first_encounter_order(const Diagram& d, const BaseSequence& a);

/// Crossings first met on their under-strand, ordered by when the traversal first meets them.
std::vector<int> warping_set(const Diagram& d, const BaseSequence& a);
int warping_degree(const Diagram& d, const BaseSequence& a);
bool is_monotone(const Diagram& d, const BaseSequence& a);
Complexity complexity(const Diagram& d, const BaseSequence& a);

/// Orientation in which every component is traversed in its base direction.
Orientation induced_orientation(const Diagram& d, const BaseSequence& a);

/// Components in id order, each entered at its lowest port (the canonical direction).
BaseSequence canonical_base(const Diagram& d);

/// Every (entry port) choice per component, components in id order. With
/// `permute_components` each choice is repeated for every ordering of the components.
std::vector<BaseSequence> enumerate_bases(const Diagram& d, bool permute_components = false);

}  // namespace skein
