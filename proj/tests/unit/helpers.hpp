#pragma once

#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "skeincoeff/diagram.hpp"
#include "skeincoeff/laurent.hpp"

namespace testutil {

inline const char* const kTrefoil = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
inline const char* const kFigure8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
inline const char* const kHopf = "X(1,4,2,3) X(3,2,4,1)";
inline const char* const kKinkMinus = "X(1,2,2,1)";
inline const char* const kKinkPlus = "X(1,1,2,2)";

// Components straight from PD labels: each quadruple glues labels a~c and b~d.
inline int pd_label_components(const std::vector<std::vector<int>>& quads, int free_loops) {
  std::map<int, int> parent;
  auto find = [&](int x) {
    if (!parent.count(x)) parent[x] = x;
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& q : quads) {
    parent[find(q[0])] = find(q[2]);
    parent[find(q[1])] = find(q[3]);
  }
  int roots = 0;
  for (auto& [k, v] : parent)
    if (find(k) == k) ++roots;
  return roots + free_loops;
}

inline skein::LaurentPoly random_laurent(std::mt19937_64& rng, int span = 4, int mag = 5) {
  skein::LaurentPoly p;
  int terms = static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i) {
    int e = static_cast<int>(rng() % (2 * span + 1)) - span;
    skein::Coeff c = static_cast<skein::Coeff>(rng() % (2 * mag + 1)) - mag;
    p += skein::LaurentPoly::monomial(c, e);
  }
  return p;
}

inline skein::BivariatePoly random_bivariate(std::mt19937_64& rng) {
  skein::BivariatePoly p;
  int terms = static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i)
    p += skein::BivariatePoly::monomial(static_cast<skein::Coeff>(rng() % 7) - 3, static_cast<int>(rng() % 7) - 3,
                                        static_cast<int>(rng() % 5) - 2);
  return p;
}

// Kauffman bracket by a full state sum, as a Laurent polynomial in A (stored in y's slot),
// normalised so that a single circle is 1. The A-smoothing at a crossing joins the slots on
// the counterclockwise side of the over-strand.
inline skein::LaurentPoly bracket(const skein::Diagram& d) {
  using skein::LaurentPoly;
  const int c = d.crossing_count();
  const LaurentPoly loop = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  LaurentPoly total;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
    std::vector<int> parent(static_cast<std::size_t>(d.port_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    for (int p = 0; p < d.port_count(); ++p) unite(p, d.mate(p));
    int a_count = 0;
    for (int x = 0; x < c; ++x) {
      const bool use_a = (state >> x) & 1;
      a_count += use_a;
      const bool v_over = d.over(x) == skein::Strand::V;
      // A pairs (0,1),(2,3) when V is over, (1,2),(3,0) when U is over; B is the other one.
      const bool pair01 = use_a == v_over;
      if (pair01) {
        unite(4 * x, 4 * x + 1);
        unite(4 * x + 2, 4 * x + 3);
      } else {
        unite(4 * x + 1, 4 * x + 2);
        unite(4 * x + 3, 4 * x);
      }
    }
    int loops = d.free_loops();
    for (int p = 0; p < d.port_count(); ++p)
      if (find(p) == p) ++loops;
    total += LaurentPoly::monomial(1, a_count - (c - a_count)) * loop.pow(loops - 1);
  }
  return total;
}

// Substitutes y = -A^3, z = A + A^-1 into sum_n alpha_n z^n (the series times z^(r-1)).
inline skein::LaurentPoly eval_at_bracket_point(const skein::BivariatePoly& L, int r) {
  using skein::LaurentPoly;
  const LaurentPoly z = LaurentPoly::y_plus_inverse();
  LaurentPoly out;
  for (const auto& [k, coeff] : L.parts()) {
    LaurentPoly y_part;
    for (auto [e, c] : coeff.terms()) y_part += LaurentPoly::monomial((e % 2 != 0) ? -c : c, 3 * e);
    out += y_part * z.pow(k + r - 1);
  }
  return out;
}

inline std::complex<double> eval_complex(const skein::LaurentPoly& p, std::complex<double> x) {
  std::complex<double> v = 0;
  for (auto [e, c] : p.terms()) v += static_cast<double>(c) * std::pow(x, e);
  return v;
}

}  // namespace testutil
