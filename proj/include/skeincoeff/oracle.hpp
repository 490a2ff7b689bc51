#pragma once

// Whole-polynomial skein recursion for L. It never touches coefficient indices, so it
// serves as an independent check on the coefficient engine.

#include <cstdint>
#include <string>
#include <unordered_map>

#include "skeincoeff/coeff_engine.hpp"
#include "skeincoeff/diagram.hpp"
#include "skeincoeff/laurent.hpp"
#include "skeincoeff/warping.hpp"

namespace skein {

class KauffmanOracle {
 public:
  explicit KauffmanOracle(EngineOptions options = {}) : options_(options) {}

  BivariatePoly oracle_L(const Diagram& d);
  /// Same recursion, with `a` used for the top-level monotone test and its crossing-change chain.
  BivariatePoly oracle_L_with_base(const Diagram& d, const BaseSequence& a);

  std::uint64_t nodes() const { return nodes_; }

 private:
  BivariatePoly compute(const Diagram& d, const BaseSequence& a, bool canonical);

  EngineOptions options_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::string, BivariatePoly> cache_;
};

BivariatePoly oracle_L(const Diagram& d);

/// L_of(d) == oracle_L(d).
CheckReport uniqueness_check(const Diagram& d, CoeffEngine& engine, KauffmanOracle& oracle);
CheckReport uniqueness_check(const Diagram& d);

}  // namespace skein
