#include "skeincoeff/coeff_engine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace skein {

const LaurentPoly& CoeffTable::at(int n) const {
  static const LaurentPoly zero;
  auto it = entries_.find(n);
  return it == entries_.end() ? zero : it->second;
}

void CoeffTable::set(int n, LaurentPoly value) {
  if (value.is_zero())
    entries_.erase(n);
  else
    entries_[n] = std::move(value);
}

void CoeffTable::add(int n, const LaurentPoly& value) {
  if (value.is_zero()) return;
  set(n, at(n) + value);
}

CoeffTable CoeffTable::shifted_y(int k) const {
  CoeffTable out;
  for (const auto& [n, v] : entries_) out.entries_.emplace(n, v.shifted(k));
  return out;
}

std::optional<std::pair<int, int>> support_bounds(const CoeffTable& t) {
  if (t.empty()) return std::nullopt;
  return std::make_pair(t.entries().begin()->first, t.entries().rbegin()->first);
}

CoeffTable monotone_table(int w, int r) {
  CoeffTable t;
  for (int n = 0; n <= r - 1; ++n) t.set(n, pow_binom(w, n, r));
  return t;
}

// ----------------------------------------------------------------- engine

void CoeffEngine::charge(const Diagram& d) {
  if (++stats_.nodes > options_.budget) throw BudgetExceeded(options_.budget, d.crossing_count());
}

CoeffTable CoeffEngine::alpha_table(const Diagram& d) { return compute(d, canonical_base(d), true); }

CoeffTable CoeffEngine::alpha_table_with_base(const Diagram& d, const BaseSequence& a) {
  validate_base(d, component_map(d), a);
  return compute(d, a, a == canonical_base(d));
}

CoeffTable CoeffEngine::expand_at(const Diagram& d, const BaseSequence& a, int warping_crossing) {
  auto ws = warping_set(d, a);
  if (std::find(ws.begin(), ws.end(), warping_crossing) == ws.end())
    throw std::invalid_argument("expand_at: crossing " + std::to_string(warping_crossing) + " is not a warping crossing");
  charge(d);
  return expand(d, a, warping_crossing, false);
}

CoeffTable CoeffEngine::compute(const Diagram& d, const BaseSequence& a, bool canonical) {
  charge(d);
  std::string key;
  if (canonical && options_.memoize) {
    key = d.key();
    if (auto it = cache_.find(key); it != cache_.end()) {
      ++stats_.cache_hits;
      return it->second;
    }
  }
  CoeffTable result;
  std::vector<int> ws = warping_set(d, a);
  if (ws.empty()) {
    ++stats_.monotone_leaves;
    if (pieces(d).size() + static_cast<std::size_t>(d.free_loops()) > 1) ++stats_.split_monotone_leaves;
    result = monotone_table(writhe(d, induced_orientation(d, a)), r_of(d));
  } else {
    result = expand(d, a, ws.front(), canonical);
  }
  ++stats_.tables;
  if (auto b = support_bounds(result)) {
    if (b->first < 0) ++stats_.below_zero;
    if (b->second > d.crossing_count() + r_of(d) - 1) ++stats_.above_bound;
  }
  if (canonical && options_.memoize) cache_.emplace(std::move(key), result);
  return result;
}

CoeffTable CoeffEngine::expand(const Diagram& d, const BaseSequence& a, int p, bool canonical) {
  CoeffTable out;
  // the crossing change keeps the port structure, so `a` stays valid (and canonical)
  CoeffTable changed = compute(crossing_change(d, p), a, canonical);
  for (const auto& [n, v] : changed.entries()) out.add(n, -v);
  const int r = r_of(d);
  for (SpliceKind kind : {SpliceKind::A, SpliceKind::B}) {
    Diagram s = splice(d, p, kind);
    const int shift = r_of(s) - r;
    CoeffTable sub = compute(s, canonical_base(s), true);
    for (const auto& [m, v] : sub.entries()) out.add(m - shift + 1, v);
  }
  return out;
}

CoeffTable alpha_table(const Diagram& d) {
  CoeffEngine engine;
  return engine.alpha_table(d);
}

CoeffTable alpha_table_with_base(const Diagram& d, const BaseSequence& a) {
  CoeffEngine engine;
  return engine.alpha_table_with_base(d, a);
}

// ------------------------------------------------------------- skein check

CheckReport skein_check(const Diagram& d, int p, CoeffEngine& engine) {
  d.check_crossing(p);
  CoeffTable lhs = engine.alpha_table(d);
  const CoeffTable changed = engine.alpha_table(crossing_change(d, p));
  for (const auto& [n, v] : changed.entries()) lhs.add(n, v);
  CoeffTable rhs;
  const int r = r_of(d);
  for (SpliceKind kind : {SpliceKind::A, SpliceKind::B}) {
    Diagram s = splice(d, p, kind);
    const int shift = r_of(s) - r;
    const CoeffTable t = engine.alpha_table(s);
    for (const auto& [m, v] : t.entries()) rhs.add(m - shift + 1, v);
  }
  CheckReport report;
  if (lhs == rhs) return report;
  report.ok = false;
  std::set<int> ns;
  for (const auto& [n, v] : lhs.entries()) ns.insert(n);
  for (const auto& [n, v] : rhs.entries()) ns.insert(n);
  std::ostringstream os;
  os << "skein identity fails at crossing " << p << ":";
  for (int n : ns)
    if (lhs.at(n) != rhs.at(n)) os << " n=" << n << " lhs=" << lhs.at(n).str() << " rhs=" << rhs.at(n).str() << ";";
  report.detail = os.str();
  return report;
}

CheckReport skein_check(const Diagram& d, int p) {
  CoeffEngine engine;
  return skein_check(d, p, engine);
}

}  // namespace skein
