#include "skeincoeff/warping.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skein {

void validate_base(const Diagram& d, const ComponentMap& cm, const BaseSequence& a) {
  const int r = cm.count();
  if (static_cast<int>(a.entries.size()) != r)
    throw std::invalid_argument("base sequence has " + std::to_string(a.entries.size()) + " entries for " + std::to_string(r) +
                                " components");
  std::vector<bool> used(static_cast<std::size_t>(r), false);
  const int closed = static_cast<int>(cm.closed.size());
  for (const BaseEntry& e : a.entries) {
    if (e.component < 0 || e.component >= r) throw std::invalid_argument("base sequence: unknown component");
    if (used[static_cast<std::size_t>(e.component)]) throw std::invalid_argument("base sequence: component listed twice");
    used[static_cast<std::size_t>(e.component)] = true;
    if (e.component < closed) {
      if (e.entry_port < 0 || e.entry_port >= d.port_count() ||
          cm.component_of[static_cast<std::size_t>(e.entry_port)] != e.component)
        throw std::invalid_argument("base sequence: entry port not on its component");
    } else if (e.entry_port != -1) {
      throw std::invalid_argument("base sequence: free loops take entry port -1");
    }
  }
}

std::vector<int> traversal_entries(const Diagram& d, const BaseSequence& a) {
  validate_base(d, component_map(d), a);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(2 * d.crossing_count()));
  for (const BaseEntry& e : a.entries) {
    if (e.entry_port < 0) continue;
    int port = e.entry_port;
    do {
      out.push_back(port);
      port = d.mate(opposite(port));
    } while (port != e.entry_port);
  }
  return out;
}

namespace {

// First-met entry port per crossing, and the crossings in first-met order.
struct FirstMeetings {
  std::vector<int> port;
  std::vector<int> order;
};

FirstMeetings first_meetings(const Diagram& d, const BaseSequence& a) {
  FirstMeetings fm;
  fm.port.assign(static_cast<std::size_t>(d.crossing_count()), -1);
  for (int p : traversal_entries(d, a)) {
    int x = crossing_of(p);
    if (fm.port[static_cast<std::size_t>(x)] == -1) {
      fm.port[static_cast<std::size_t>(x)] = p;
      fm.order.push_back(x);
    }
  }
  return fm;
}

}  // namespace

std::vector<Strand> first_encounter_order(const Diagram& d, const BaseSequence& a) {
  FirstMeetings fm = first_meetings(d, a);
  std::vector<Strand> out;
  for (int p : fm.port) out.push_back(strand_of_slot(slot_of(p)));
  return out;
}

std::vector<int> warping_set(const Diagram& d, const BaseSequence& a) {
  FirstMeetings fm = first_meetings(d, a);
  std::vector<int> out;
  for (int x : fm.order)
    if (!d.is_over_port(fm.port[static_cast<std::size_t>(x)])) out.push_back(x);
  return out;
}

int warping_degree(const Diagram& d, const BaseSequence& a) { return static_cast<int>(warping_set(d, a).size()); }

bool is_monotone(const Diagram& d, const BaseSequence& a) { return warping_degree(d, a) == 0; }

Complexity complexity(const Diagram& d, const BaseSequence& a) { return {d.crossing_count(), warping_degree(d, a)}; }

Orientation induced_orientation(const Diagram& d, const BaseSequence& a) {
  ComponentMap cm = component_map(d);
  validate_base(d, cm, a);
  Orientation o = Orientation::all_positive(cm.count());
  for (const BaseEntry& e : a.entries)
    if (e.entry_port >= 0) o.reversed[static_cast<std::size_t>(e.component)] = !cm.canonical_entry[static_cast<std::size_t>(e.entry_port)];
  return o;
}

BaseSequence canonical_base(const Diagram& d) {
  ComponentMap cm = component_map(d);
  BaseSequence a;
  for (std::size_t i = 0; i < cm.closed.size(); ++i) a.entries.push_back({static_cast<int>(i), cm.closed[i].ports.front()});
  for (int k = 0; k < cm.free_loops; ++k) a.entries.push_back({static_cast<int>(cm.closed.size()) + k, -1});
  return a;
}

std::vector<BaseSequence> enumerate_bases(const Diagram& d, bool permute_components) {
  ComponentMap cm = component_map(d);
  const int r = cm.count();
  std::vector<std::vector<int>> choices(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < cm.closed.size(); ++i) {
    // every port is the entry port of exactly one direction
    choices[i] = cm.closed[i].ports;
    std::sort(choices[i].begin(), choices[i].end());
  }
  for (int k = static_cast<int>(cm.closed.size()); k < r; ++k) choices[static_cast<std::size_t>(k)] = {-1};

  std::vector<std::vector<int>> picks{{}};
  for (const auto& options : choices) {
    std::vector<std::vector<int>> grown;
    for (const auto& prefix : picks)
      for (int port : options) {
        auto next = prefix;
        next.push_back(port);
        grown.push_back(std::move(next));
      }
    picks = std::move(grown);
  }

  std::vector<int> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), 0);
  std::vector<BaseSequence> out;
  do {
    for (const auto& pick : picks) {
      BaseSequence a;
      for (int comp : order) a.entries.push_back({comp, pick[static_cast<std::size_t>(comp)]});
      out.push_back(std::move(a));
    }
  } while (permute_components && std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace skein
