#pragma once

// Exact integer Laurent polynomials in y, and in (y, z).
//
// Coefficients are int64 with checked arithmetic: any overflow throws
// std::overflow_error instead of wrapping.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skein {

using Coeff = std::int64_t;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/// Integer Laurent polynomial in one variable y.
///
/// Stored densely from the lowest to the highest nonzero exponent, so two
/// equal polynomials always have identical representations.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(Coeff c);
  static LaurentPoly monomial(Coeff c, int exponent);
  /// y + y^-1
  static LaurentPoly y_plus_inverse();

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Coeff coeff(int exponent) const;
  std::size_t term_count() const;
  /// Nonzero terms as (exponent, coefficient), exponent ascending.
  std::vector<std::pair<int, Coeff>> terms() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(int k) const;
  /// Multiply by y^k.
  LaurentPoly shifted(int k) const;
  /// y -> y^-1
  LaurentPoly inverted() const;
  /// Value at y = 1.
  Coeff at_one() const;

  /// Canonical text, exponents ascending: "y^-2 - 1 + 3*y". Zero is "0".
  std::string str() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void trim();

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

/// Integer Laurent polynomial in y and z, stored as z-exponent -> LaurentPoly in y.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  /// Embeds a polynomial in y as the z^0 part.
  explicit BivariatePoly(const LaurentPoly& p);

  static BivariatePoly constant(Coeff c);
  static BivariatePoly monomial(Coeff c, int y_exponent, int z_exponent);
  static BivariatePoly z();

  bool is_zero() const { return parts_.empty(); }
  /// Coefficient of z^k as a polynomial in y.
  LaurentPoly z_coeff(int k) const;
  void set_z_coeff(int k, LaurentPoly p);
  int min_z() const;
  int max_z() const;
  const std::map<int, LaurentPoly>& parts() const { return parts_; }
  std::size_t term_count() const;

  BivariatePoly operator-() const;
  BivariatePoly& operator+=(const BivariatePoly& other);
  BivariatePoly& operator-=(const BivariatePoly& other);
  BivariatePoly& operator*=(const BivariatePoly& other);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(BivariatePoly a, const BivariatePoly& b) { return a *= b; }
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  BivariatePoly pow(int k) const;
  /// Multiply by z^k.
  BivariatePoly shift_z(int k) const;
  /// Multiply by y^k.
  BivariatePoly shift_y(int k) const;
  /// y -> y^-1, z untouched.
  BivariatePoly subst_y_inverse() const;
  /// Substitute y = 1, leaving a Laurent polynomial in z (returned in the LaurentPoly type).
  LaurentPoly at_y_one() const;

  /// Terms "c*y^a*z^b" sorted by (b, a). Zero is "0".
  std::string str() const;
  static BivariatePoly parse(std::string_view text);

 private:
  std::map<int, LaurentPoly> parts_;
};

BivariatePoly shift_z(const BivariatePoly& p, int k);
BivariatePoly subst_y_inverse(const BivariatePoly& p);

/// y^w (-1)^n C(r-1, n) (y + y^-1)^(r-n-1); zero unless 0 <= n <= r-1. Requires r >= 1.
LaurentPoly pow_binom(int w, int n, int r);

/// C(n, k) with overflow checking; zero outside 0 <= k <= n.
Coeff binomial(int n, int k);

}  // namespace skein
