#include "skeincoeff/series.hpp"

#include <sstream>

namespace skein {

BivariatePoly d_const() {
  return BivariatePoly::monomial(1, 1, -1) + BivariatePoly::monomial(1, -1, -1) - BivariatePoly::constant(1);
}

BivariatePoly series_from_table(const CoeffTable& t, int r) {
  BivariatePoly L;
  for (const auto& [n, v] : t.entries()) L.set_z_coeff(n + 1 - r, v);
  return L;
}

LaurentPoly alpha_from_series(const BivariatePoly& L, int n, int r) { return L.z_coeff(n + 1 - r); }

BivariatePoly L_of(const Diagram& d, CoeffEngine& engine) { return series_from_table(engine.alpha_table(d), r_of(d)); }

BivariatePoly L_of(const Diagram& d) {
  CoeffEngine engine;
  return L_of(d, engine);
}

BivariatePoly F_of(const Diagram& d, const Orientation& o, CoeffEngine& engine) {
  return L_of(d, engine).shift_y(-writhe(d, o));
}

BivariatePoly F_of(const Diagram& d, const Orientation& o) {
  CoeffEngine engine;
  return F_of(d, o, engine);
}

CheckReport check_product_laws(const Diagram& a, const Diagram& b, CoeffEngine& engine) {
  CheckReport report;
  const BivariatePoly product = L_of(a, engine) * L_of(b, engine);
  for (EdgeRef ea : edge_refs(a)) {
    for (EdgeRef eb : edge_refs(b)) {
      BivariatePoly sum = L_of(connected_sum(a, b, ea, eb), engine);
      if (sum != product) {
        std::ostringstream os;
        os << "connected sum at edges (" << ea.port << ", " << eb.port << "): " << sum.str() << " != " << product.str();
        report.ok = false;
        report.detail = os.str();
        return report;
      }
    }
  }
  BivariatePoly split = L_of(disjoint_union(a, b), engine);
  if (split != d_const() * product) {
    report.ok = false;
    report.detail = "disjoint union: " + split.str() + " != " + (d_const() * product).str();
  }
  return report;
}

CheckReport check_L_skein(const Diagram& d, int p, CoeffEngine& engine) {
  d.check_crossing(p);
  BivariatePoly lhs = L_of(d, engine) + L_of(crossing_change(d, p), engine);
  BivariatePoly rhs = (L_of(splice(d, p, SpliceKind::A), engine) + L_of(splice(d, p, SpliceKind::B), engine)).shift_z(1);
  CheckReport report;
  if (lhs != rhs) {
    report.ok = false;
    report.detail = "L skein fails at crossing " + std::to_string(p) + ": " + lhs.str() + " != " + rhs.str();
  }
  return report;
}

}  // namespace skein
