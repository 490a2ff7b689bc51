#pragma once

// Generating series of the coefficient table: L_D = z^(1-r) sum_n alpha_n z^n and the
// writhe-normalized F_D = y^(-w) L_D.

#include "skeincoeff/coeff_engine.hpp"
#include "skeincoeff/diagram.hpp"
#include "skeincoeff/laurent.hpp"

namespace skein {

/// z^-1 (y + y^-1) - 1, the factor picked up by a disjoint union.
BivariatePoly d_const();

BivariatePoly series_from_table(const CoeffTable& t, int r);
/// Coefficient of z^(n+1-r) in L, i.e. alpha_n.
LaurentPoly alpha_from_series(const BivariatePoly& L, int n, int r);

BivariatePoly L_of(const Diagram& d, CoeffEngine& engine);
BivariatePoly L_of(const Diagram& d);
BivariatePoly F_of(const Diagram& d, const Orientation& o, CoeffEngine& engine);
BivariatePoly F_of(const Diagram& d, const Orientation& o);

/// L_{D#D2} == L_D L_D2 for every pair of summing edges, and L_{D u D2} == d L_D L_D2.
CheckReport check_product_laws(const Diagram& a, const Diagram& b, CoeffEngine& engine);

/// L_{D+} + L_{D-} == z (L_{D_A} + L_{D_B}) at crossing p.
CheckReport check_L_skein(const Diagram& d, int p, CoeffEngine& engine);

}  // namespace skein
