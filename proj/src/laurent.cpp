#include "skeincoeff/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace skein {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow in addition");
  return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow in multiplication");
  return out;
}

namespace {

struct Term {
  Coeff coeff;
  int y = 0;
  int z = 0;
};

// Writes one monomial with its sign handled by the caller.
void write_monomial(std::ostream& os, std::uint64_t magnitude, int y, int z) {
  std::vector<std::string> factors;
  if (magnitude != 1 || (y == 0 && z == 0)) factors.push_back(std::to_string(magnitude));
  auto var = [&](char name, int e) {
    if (e == 0) return;
    std::string s(1, name);
    if (e != 1) s += "^" + std::to_string(e);
    factors.push_back(std::move(s));
  };
  var('y', y);
  var('z', z);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << '*';
    os << factors[i];
  }
}

std::string write_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    bool negative = t.coeff < 0;
    if (i == 0) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    auto magnitude = static_cast<std::uint64_t>(t.coeff);
    if (negative) magnitude = 0 - magnitude;
    write_monomial(os, magnitude, t.y, t.z);
  }
  return os.str();
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : s_(text) {}

  std::vector<Term> parse() {
    std::vector<Term> out;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_ws();
      out.push_back(term(sign));
      first = false;
    }
    return out;
  }

 private:
  Term term(int sign) {
    Term t{sign, 0, 0};
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coeff = checked_mul(t.coeff, integer());
      } else if (pos_ < s_.size() && (peek() == 'y' || peek() == 'z')) {
        char v = s_[pos_++];
        int e = 1;
        skip_ws();
        if (pos_ < s_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          int esign = 1;
          if (pos_ < s_.size() && (peek() == '-' || peek() == '+')) {
            esign = peek() == '-' ? -1 : 1;
            ++pos_;
          }
          Coeff mag = integer();
          if (mag > (1 << 24)) fail("exponent too large");
          e = esign * static_cast<int>(mag);
        }
        (v == 'y' ? t.y : t.z) += e;
      } else {
        fail("expected coefficient or variable");
      }
      have_factor = true;
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    return t;
  }

  Coeff integer() {
    std::size_t start = pos_;
    Coeff v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = checked_add(checked_mul(v, 10), s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(Coeff c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::y_plus_inverse() { return monomial(1, 1) + monomial(1, -1); }

Coeff LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; }));
}

std::vector<std::pair<int, Coeff>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Coeff>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
  low_ += static_cast<int>(first);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (Coeff& c : out.coeffs_) c = checked_mul(c, -1);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  int lo = std::min(low_, other.low_);
  int hi = std::max(max_exponent(), other.max_exponent());
  std::vector<Coeff> sum(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    Coeff& slot = sum[static_cast<std::size_t>(other.low_ - lo) + i];
    slot = checked_add(slot, other.coeffs_[i]);
  }
  low_ = lo;
  coeffs_ = std::move(sum);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  if (is_zero() || other.is_zero()) return *this = LaurentPoly{};
  std::vector<Coeff> prod(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      prod[i + j] = checked_add(prod[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
  }
  low_ += other.low_;
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
  LaurentPoly result = constant(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out;
  if (is_zero()) return out;
  out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  out.low_ = -max_exponent();
  return out;
}

Coeff LaurentPoly::at_one() const {
  Coeff s = 0;
  for (Coeff c : coeffs_) s = checked_add(s, c);
  return s;
}

std::string LaurentPoly::str() const {
  std::vector<Term> terms;
  for (auto [e, c] : this->terms()) terms.push_back({c, e, 0});
  return write_terms(terms);
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentPoly out;
  for (const Term& t : TermParser(text).parse()) {
    if (t.z != 0) throw std::invalid_argument("polynomial parse error: unexpected variable z");
    out += monomial(t.coeff, t.y);
  }
  return out;
}

// -------------------------------------------------------------- BivariatePoly

BivariatePoly::BivariatePoly(const LaurentPoly& p) {
  if (!p.is_zero()) parts_.emplace(0, p);
}

BivariatePoly BivariatePoly::constant(Coeff c) { return BivariatePoly(LaurentPoly::constant(c)); }

BivariatePoly BivariatePoly::monomial(Coeff c, int y_exponent, int z_exponent) {
  BivariatePoly p;
  p.set_z_coeff(z_exponent, LaurentPoly::monomial(c, y_exponent));
  return p;
}

BivariatePoly BivariatePoly::z() { return monomial(1, 0, 1); }

LaurentPoly BivariatePoly::z_coeff(int k) const {
  auto it = parts_.find(k);
  return it == parts_.end() ? LaurentPoly{} : it->second;
}

void BivariatePoly::set_z_coeff(int k, LaurentPoly p) {
  if (p.is_zero())
    parts_.erase(k);
  else
    parts_[k] = std::move(p);
}

int BivariatePoly::min_z() const {
  if (is_zero()) throw std::logic_error("min_z of zero polynomial");
  return parts_.begin()->first;
}

int BivariatePoly::max_z() const {
  if (is_zero()) throw std::logic_error("max_z of zero polynomial");
  return parts_.rbegin()->first;
}

std::size_t BivariatePoly::term_count() const {
  std::size_t n = 0;
  for (const auto& [k, p] : parts_) n += p.term_count();
  return n;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly out;
  for (const auto& [k, p] : parts_) out.parts_.emplace(k, -p);
  return out;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  for (const auto& [k, p] : other.parts_) set_z_coeff(k, z_coeff(k) + p);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& other) { return *this += -other; }

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& other) {
  std::map<int, LaurentPoly> prod;
  for (const auto& [i, p] : parts_)
    for (const auto& [j, q] : other.parts_) prod[i + j] += p * q;
  parts_.clear();
  for (auto& [k, p] : prod)
    if (!p.is_zero()) parts_.emplace(k, std::move(p));
  return *this;
}

BivariatePoly BivariatePoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("BivariatePoly::pow: negative exponent");
  BivariatePoly result = constant(1);
  for (int i = 0; i < k; ++i) result *= *this;
  return result;
}

BivariatePoly BivariatePoly::shift_z(int k) const {
  BivariatePoly out;
  for (const auto& [i, p] : parts_) out.parts_.emplace(i + k, p);
  return out;
}

BivariatePoly BivariatePoly::shift_y(int k) const {
  BivariatePoly out;
  for (const auto& [i, p] : parts_) out.parts_.emplace(i, p.shifted(k));
  return out;
}

BivariatePoly BivariatePoly::subst_y_inverse() const {
  BivariatePoly out;
  for (const auto& [i, p] : parts_) out.parts_.emplace(i, p.inverted());
  return out;
}

LaurentPoly BivariatePoly::at_y_one() const {
  LaurentPoly out;
  for (const auto& [i, p] : parts_) out += LaurentPoly::monomial(p.at_one(), i);
  return out;
}

std::string BivariatePoly::str() const {
  std::vector<Term> terms;
  for (const auto& [zexp, p] : parts_)
    for (auto [yexp, c] : p.terms()) terms.push_back({c, yexp, zexp});
  return write_terms(terms);
}

BivariatePoly BivariatePoly::parse(std::string_view text) {
  BivariatePoly out;
  for (const Term& t : TermParser(text).parse()) out += monomial(t.coeff, t.y, t.z);
  return out;
}

BivariatePoly shift_z(const BivariatePoly& p, int k) { return p.shift_z(k); }
BivariatePoly subst_y_inverse(const BivariatePoly& p) { return p.subst_y_inverse(); }

// ------------------------------------------------------------------ formulas

Coeff binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Coeff c = 1;
  for (int i = 1; i <= k; ++i) {
    // c * (n - k + i) is divisible by i at every step
    c = checked_mul(c, n - k + i) / i;
  }
  return c;
}

LaurentPoly pow_binom(int w, int n, int r) {
  if (r < 1) throw std::invalid_argument("pow_binom: r must be >= 1");
  if (n < 0 || n > r - 1) return {};
  Coeff sign = (n % 2 == 0) ? 1 : -1;
  return LaurentPoly::monomial(checked_mul(sign, binomial(r - 1, n)), w) * LaurentPoly::y_plus_inverse().pow(r - n - 1);
}

}  // namespace skein
