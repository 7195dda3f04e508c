#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dvr/scalar.hpp"

namespace dvr {

/// Dense univariate polynomial over F_p or Q (see Scalar).
///
/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial has an empty coefficient vector and equality is
/// componentwise.
class Poly {
 public:
  explicit Poly(unsigned long modulus = 0) : modulus_(modulus) {}
  Poly(std::vector<Scalar> coeffs, unsigned long modulus)
      : modulus_(modulus), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
      if (c.modulus() != modulus_) throw std::invalid_argument("coefficient over wrong field");
    trim();
  }

  static Poly constant(const Scalar& c) { return Poly({c}, c.modulus()); }
  static Poly monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar(c.modulus()));
    v[degree] = c;
    return Poly(std::move(v), c.modulus());
  }

  unsigned long modulus() const { return modulus_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(modulus_); }
  Scalar leading() const { return is_zero() ? Scalar(modulus_) : coeffs_.back(); }

  /// Largest k with t^k dividing this polynomial. Requires a nonzero polynomial.
  std::size_t order() const {
    if (is_zero()) throw DomainError("order of the zero polynomial");
    std::size_t k = 0;
    while (coeffs_[k].is_zero()) ++k;
    return k;
  }

  Scalar at_zero() const { return coeff(0); }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
  }

  /// Divides by t^k; requires k <= order().
  Poly shift_down(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    if (k > order()) throw DomainError("polynomial not divisible by requested power of t");
    return Poly(std::vector<Scalar>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()), modulus_);
  }

  /// Multiplies by t^k.
  Poly shift_up(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    std::vector<Scalar> c(k, Scalar(modulus_));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(c), modulus_);
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_same(a, b);
    std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(a.modulus_));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(out), a.modulus_);
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.modulus_);
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(a.modulus_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out), a.modulus_);
  }
  friend Poly operator*(const Poly& a, const Scalar& s) {
    if (s.modulus() != a.modulus_) throw std::invalid_argument("scalar over wrong field");
    std::vector<Scalar> out = a.coeffs_;
    for (auto& c : out) c *= s;
    return Poly(std::move(out), a.modulus_);
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
  }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Scalar> rem = a.coeffs_;
    std::vector<Scalar> quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0,
                             Scalar(a.modulus_));
    const Scalar lead_inv = b.leading().inverse();
    const std::size_t bn = b.coeffs_.size();
    for (std::size_t top = rem.size(); top >= bn; --top) {
      const Scalar& lead = rem[top - 1];
      if (lead.is_zero()) continue;
      const std::size_t shift = top - bn;
      const Scalar c = lead * lead_inv;
      for (std::size_t i = 0; i + 1 < bn; ++i)
        if (!b.coeffs_[i].is_zero()) rem[shift + i] -= c * b.coeffs_[i];
      rem[top - 1] = Scalar(a.modulus_);
      quot[shift] = c;
    }
    return {Poly(std::move(quot), a.modulus_), Poly(std::move(rem), a.modulus_)};
  }

  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b) {
    check_same(a, b);
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // gcd(t^i A, t^j B) = t^min(i,j) gcd(A, B) with A(0), B(0) != 0; elements
    // here are mostly pi^k times a small unit, so this removes most of the work.
    const std::size_t k = std::min(a.order(), b.order());
    a = a.shift_down(a.order());
    b = b.shift_down(b.order());
    Poly g = a.modulus_ == 0 ? rational_gcd(a, b) : euclid_gcd(std::move(a), std::move(b));
    return g.shift_up(k);
  }

  /// Human-readable form, highest degree first: "t^2+2*t", "-1/2*t+3".
  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Scalar& c = coeffs_[k];
      if (c.is_zero()) continue;
      std::string cs = c.str();
      bool negative = !cs.empty() && cs[0] == '-';
      if (negative) cs.erase(0, 1);
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? '-' : '+';
      }
      // A leading "-t" is spelled "-1*t" so the output stays inside the
      // element grammar, where a sign must precede a numeric coefficient.
      const bool spell_one = first && negative;
      first = false;
      if (k == 0) {
        out += cs;
        continue;
      }
      if (cs != "1" || spell_one) out += cs + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  using IntPoly = std::vector<mpz_class>;

  // Integer multiple of p with content 1 (low degree first).
  static IntPoly primitive_part(const Poly& p) {
    mpz_class den = 1;
    for (const auto& c : p.coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.value().get_den_mpz_t());
    IntPoly out;
    for (const auto& c : p.coeffs_) out.push_back(mpz_class(c.value() * den));
    strip_content(out);
    return out;
  }

  static void strip_content(IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
      for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }

  static Poly euclid_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // lc(b)^k * a mod b over Z, for deg a >= deg b.
  static IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const mpz_class& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
      const mpz_class la = a.back();
      const std::size_t shift = a.size() - b.size();
      for (auto& c : a) c *= lb;
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
  }

  // Primitive remainder sequence over Z; coefficients stay near the size of
  // the inputs instead of growing as in Euclid over Q.
  static Poly rational_gcd(const Poly& a, const Poly& b) {
    IntPoly x = primitive_part(a), y = primitive_part(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
      IntPoly r = pseudo_remainder(std::move(x), y);
      strip_content(r);
      x = std::move(y);
      y = std::move(r);
    }
    std::vector<Scalar> c;
    for (const auto& v : x) c.emplace_back(mpq_class(v), 0UL);
    return Poly(std::move(c), 0).monic();
  }

  static void check_same(const Poly& a, const Poly& b) {
    if (a.modulus_ != b.modulus_) throw std::invalid_argument("polynomials over different fields");
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  unsigned long modulus_ = 0;
  std::vector<Scalar> coeffs_;
};

}  // namespace dvr
