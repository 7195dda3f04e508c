#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "dvr/errors.hpp"

namespace dvr {

/// An element of a prime field F_p or of Q, chosen at runtime by the
/// modulus (0 means Q).
///
/// Values are kept canonical: over F_p the stored rational is an integer in
/// [0, p), over Q it is a reduced fraction with positive denominator. Two
/// scalars over the same field are equal iff their stored values are equal.
///
/// This type doubles as the coefficient ring of t-adic polynomials and as
/// the residue field of every supported valuation.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(unsigned long modulus) : modulus_(modulus) {
    if (modulus_ != 0) rep_ = 0UL;
  }
  Scalar(const mpq_class& value, unsigned long modulus) : modulus_(modulus) { assign(value); }
  Scalar(long value, unsigned long modulus) : modulus_(modulus) {
    if (modulus_ == 0) {
      rep_ = mpq_class(value);
      return;
    }
    const long m = static_cast<long>(modulus_);
    rep_ = static_cast<unsigned long>(((value % m) + m) % m);
  }

  unsigned long modulus() const { return modulus_; }
  mpq_class value() const { return modulus_ == 0 ? q() : mpq_class(r()); }

  bool is_zero() const { return modulus_ == 0 ? sgn(q()) == 0 : r() == 0; }
  bool is_one() const { return modulus_ == 0 ? q() == 1 : r() == 1; }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (modulus_ == 0) return Scalar(mpq_class(1 / q()), 0);
    mpz_class inv;
    const mpz_class a(r()), p(modulus_);
    mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return from_residue(mpz_get_ui(inv.get_mpz_t()), modulus_);
  }

  Scalar operator-() const {
    if (modulus_ != 0) return from_residue(r() == 0 ? 0 : modulus_ - r(), modulus_);
    return Scalar(mpq_class(-q()), modulus_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (a.modulus_ != 0) return from_residue((a.r() + b.r()) % a.modulus_, a.modulus_);
    return Scalar(mpq_class(a.q() + b.q()), a.modulus_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (a.modulus_ != 0) return from_residue((a.r() + a.modulus_ - b.r()) % a.modulus_, a.modulus_);
    return Scalar(mpq_class(a.q() - b.q()), a.modulus_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (a.modulus_ != 0) {
      const auto prod = static_cast<unsigned __int128>(a.r()) * b.r();
      return from_residue(static_cast<unsigned long>(prod % a.modulus_), a.modulus_);
    }
    return Scalar(mpq_class(a.q() * b.q()), a.modulus_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.modulus_ == b.modulus_ && a.rep_ == b.rep_; }

  /// "3", "-1/2"; over F_p always the representative in [0, p).
  std::string str() const { return modulus_ == 0 ? q().get_str() : std::to_string(r()); }

 private:
  static Scalar from_residue(unsigned long r, unsigned long modulus) {
    Scalar out;
    out.modulus_ = modulus;
    out.rep_ = r;
    return out;
  }

  const mpq_class& q() const { return std::get<mpq_class>(rep_); }
  unsigned long r() const { return std::get<unsigned long>(rep_); }

  static void check_same(const Scalar& a, const Scalar& b) {
    if (a.modulus_ != b.modulus_) throw std::invalid_argument("scalars over different fields");
  }

  void assign(mpq_class value) {
    value.canonicalize();
    if (modulus_ == 0) {
      rep_ = std::move(value);
      return;
    }
    mpz_class p(modulus_);
    mpz_class num = value.get_num();
    mpz_class den = value.get_den();
    mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    mpz_fdiv_r(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    if (den == 0) throw DivisionByZero("denominator vanishes modulo " + p.get_str());
    if (den != 1) {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      num *= inv;
      mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    }
    rep_ = mpz_get_ui(num.get_mpz_t());
  }

  // Over F_p an integer in [0, p); over Q a canonical fraction.
  std::variant<mpq_class, unsigned long> rep_{mpq_class(0)};
  unsigned long modulus_ = 0;
};

}  // namespace dvr
