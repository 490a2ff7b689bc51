#include "skeincoeff/oracle.hpp"

#include "skeincoeff/series.hpp"

namespace skein {

BivariatePoly KauffmanOracle::oracle_L(const Diagram& d) { return compute(d, canonical_base(d), true); }

BivariatePoly KauffmanOracle::oracle_L_with_base(const Diagram& d, const BaseSequence& a) {
  validate_base(d, component_map(d), a);
  return compute(d, a, a == canonical_base(d));
}

BivariatePoly KauffmanOracle::compute(const Diagram& d, const BaseSequence& a, bool canonical) {
  if (++nodes_ > options_.budget) throw BudgetExceeded(options_.budget, d.crossing_count());
  std::string key;
  if (canonical && options_.memoize) {
    key = d.key();
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  BivariatePoly result;
  std::vector<int> ws = warping_set(d, a);
  if (ws.empty()) {
    // monotone: a stacked unlink of descending components, L = y^w d^(r-1)
    result = d_const().pow(r_of(d) - 1).shift_y(writhe(d, induced_orientation(d, a)));
  } else {
    const int p = ws.front();
    Diagram sa = splice(d, p, SpliceKind::A);
    Diagram sb = splice(d, p, SpliceKind::B);
    result = (compute(sa, canonical_base(sa), true) + compute(sb, canonical_base(sb), true)).shift_z(1) -
             compute(crossing_change(d, p), a, canonical);
  }
  if (canonical && options_.memoize) cache_.emplace(std::move(key), result);
  return result;
}

BivariatePoly oracle_L(const Diagram& d) {
  KauffmanOracle oracle;
  return oracle.oracle_L(d);
}

CheckReport uniqueness_check(const Diagram& d, CoeffEngine& engine, KauffmanOracle& oracle) {
  BivariatePoly from_coeffs = L_of(d, engine);
  BivariatePoly from_oracle = oracle.oracle_L(d);
  CheckReport report;
  if (from_coeffs != from_oracle) {
    report.ok = false;
    report.detail = "coefficient series " + from_coeffs.str() + " != oracle " + from_oracle.str();
  } else if (from_coeffs.at_y_one() != from_oracle.at_y_one()) {
    report.ok = false;
    report.detail = "y = 1 specializations differ";
  }
  return report;
}

CheckReport uniqueness_check(const Diagram& d) {
  CoeffEngine engine;
  KauffmanOracle oracle;
  return uniqueness_check(d, engine, oracle);
}

}  // namespace skein
