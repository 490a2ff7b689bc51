#pragma once

// Coefficient polynomials alpha_n(D; y) by induction on (crossings, warping degree).
//
// A monotone based diagram gets the closed form y^w (-1)^n C(r-1, n) (y + y^-1)^(r-n-1).
// Otherwise, at a warping crossing p,
//
//   alpha_n(D) = -alpha_n(D') + alpha_{n + dA - 1}(D_A) + alpha_{n + dB - 1}(D_B)
//
// where D' is D with p changed (same base sequence, one warping crossing fewer), D_A and
// D_B are the two splices at p (fresh canonical bases), and dA, dB are the component
// count changes of the splices.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "skeincoeff/diagram.hpp"
#include "skeincoeff/laurent.hpp"
#include "skeincoeff/warping.hpp"

namespace skein {

/// n -> alpha_n with zero entries omitted; lookups outside the support return 0.
class CoeffTable {
 public:
  const LaurentPoly& at(int n) const;
  void set(int n, LaurentPoly value);
  void add(int n, const LaurentPoly& value);
  bool empty() const { return entries_.empty(); }
  const std::map<int, LaurentPoly>& entries() const { return entries_; }
  /// Every entry multiplied by y^k.
  CoeffTable shifted_y(int k) const;

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;

 private:
  std::map<int, LaurentPoly> entries_;
};

/// (min n, max n) of the nonzero entries, nullopt for an all-zero table.
std::optional<std::pair<int, int>> support_bounds(const CoeffTable& t);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t budget, int crossings)
      : std::runtime_error("recursion budget of " + std::to_string(budget) + " nodes exceeded on a diagram with " +
                           std::to_string(crossings) + " crossings"),
        budget_(budget),
        crossings_(crossings) {}
  std::uint64_t budget() const { return budget_; }
  int crossings() const { return crossings_; }

 private:
  std::uint64_t budget_;
  int crossings_;
};

struct EngineOptions {
  std::uint64_t budget = 100'000'000;
  /// Cache tables of canonically based sub-diagrams, keyed by exact diagram encoding.
  bool memoize = false;
};

struct EngineStats {
  std::uint64_t nodes = 0;
  std::uint64_t monotone_leaves = 0;
  /// Monotone leaves whose diagram has more than one piece (split, including free loops).
  std::uint64_t split_monotone_leaves = 0;
  std::uint64_t cache_hits = 0;
  /// Every table computed (sub-diagrams included) is checked against [0, c + r - 1].
  std::uint64_t tables = 0;
  std::uint64_t below_zero = 0;
  std::uint64_t above_bound = 0;
};

class CoeffEngine {
 public:
  explicit CoeffEngine(EngineOptions options = {}) : options_(options) {}

  CoeffTable alpha_table(const Diagram& d);
  CoeffTable alpha_table_with_base(const Diagram& d, const BaseSequence& a);
  /// One expansion step at the given warping crossing of (d, a), sub-terms by the usual recursion.
  CoeffTable expand_at(const Diagram& d, const BaseSequence& a, int warping_crossing);

  const EngineStats& stats() const { return stats_; }
  const EngineOptions& options() const { return options_; }

 private:
  CoeffTable compute(const Diagram& d, const BaseSequence& a, bool canonical);
  CoeffTable expand(const Diagram& d, const BaseSequence& a, int p, bool canonical);
  void charge(const Diagram& d);

  EngineOptions options_;
  EngineStats stats_;
  std::unordered_map<std::string, CoeffTable> cache_;
};

CoeffTable alpha_table(const Diagram& d);
CoeffTable alpha_table_with_base(const Diagram& d, const BaseSequence& a);

/// Closed form for a monotone diagram of writhe w with r components.
CoeffTable monotone_table(int w, int r);

struct CheckReport {
  bool ok = true;
  std::string detail;
};

/// alpha_n(D) + alpha_n(D') == alpha_{n+dA-1}(D_A) + alpha_{n+dB-1}(D_B) for all n.
CheckReport skein_check(const Diagram& d, int p, CoeffEngine& engine);
CheckReport skein_check(const Diagram& d, int p);

}  // namespace skein
