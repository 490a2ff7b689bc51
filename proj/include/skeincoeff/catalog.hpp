#pragma once

// Built-in diagrams with checkable properties.

#include <optional>
#include <string>
#include <vector>

#include "skeincoeff/coeff_engine.hpp"
#include "skeincoeff/diagram.hpp"

namespace skein {

struct CatalogEntry {
  std::string name;
  std::string pd;
  /// "r=N", "c=N", "knot", "amphichiral", "chiral", "split", "L=<bivariate>".
  std::vector<std::string> tags;
};

const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> find_catalog_entry(const std::string& name);
Diagram catalog_diagram(const std::string& name);

/// Runs the check behind one tag; unknown tags are failures.
CheckReport check_tag(const Diagram& d, const std::string& tag, CoeffEngine& engine);
/// All tags of an entry (parsing included).
CheckReport check_entry(const CatalogEntry& e, CoeffEngine& engine);

}  // namespace skein
