#pragma once

// Property suites: per-diagram verification and the numbered acceptance criteria.

#include <cstdint>
#include <string>
#include <vector>

#include "skeincoeff/coeff_engine.hpp"
#include "skeincoeff/diagram.hpp"

namespace skein {

struct NamedCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct DiagramReport {
  std::vector<NamedCheck> checks;
  bool ok() const;
};

/// Skein identities at every crossing, base independence, support bounds, oracle
/// agreement, mirror property, and product laws against kink+ and the Hopf link.
/// Base enumeration is capped at `max_bases` per diagram (evenly sampled beyond that).
DiagramReport verify_diagram(const Diagram& d, CoeffEngine& engine, std::size_t max_bases = 256);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool ok = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  int random_identity_diagrams = 200;  // criterion 2, c <= 6
  int random_base_diagrams = 100;      // criterion 3, c <= 5
  int walks = 500;                     // criterion 4
  int walk_steps = 10;
  int walk_max_c = 10;
  int random_oracle_diagrams = 100;    // criterion 5, c <= 6
  std::uint64_t budget = 100'000'000;
};

/// Runs one criterion (1..8); the time limit is part of the verdict.
CriterionResult run_criterion(int id, const SuiteOptions& options = {});
/// Criteria 2..8 in order.
std::vector<CriterionResult> run_property_suite(const SuiteOptions& options = {});

}  // namespace skein
