#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "dvr/errors.hpp"
#include "dvr/field_spec.hpp"
#include "dvr/poly.hpp"
#include "dvr/scalar.hpp"

namespace dvr {

/// A reduced fraction of polynomials num/den with gcd(num, den) = 1 and den
/// monic. Zero is 0/1.
class RationalFunction {
 public:
  explicit RationalFunction(unsigned long modulus = 0)
      : num_(modulus), den_(Poly::constant(Scalar(1L, modulus))) {}

  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("division by the zero polynomial");
    canonicalize();
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  unsigned long modulus() const { return num_.modulus(); }
  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = Poly::constant(Scalar(1L, num_.modulus()));
      return;
    }
    const Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
    const Scalar lead_inv = den_.leading().inverse();
    if (!lead_inv.is_one()) {
      num_ = num_ * lead_inv;
      den_ = den_ * lead_inv;
    }
  }

  Poly num_;
  Poly den_;
};

/// An exact element of one of the supported fields: Q (padic specs) or
/// F_p(t) / Q(t) (tadic specs).
///
/// The representation is canonical, so == is structural equality. Binary
/// operations require both operands to carry the same FieldSpec.
class FieldElement {
 public:
  using Rep = std::variant<mpq_class, RationalFunction>;

  explicit FieldElement(const FieldSpec& spec) : spec_(spec), rep_(zero_rep(spec)) {}

  FieldElement(const FieldSpec& spec, mpq_class q) : spec_(spec), rep_(mpq_class(0)) {
    if (spec.is_padic()) {
      q.canonicalize();
      rep_ = std::move(q);
    } else {
      rep_ = RationalFunction(Poly::constant(Scalar(q, spec.coeff_modulus())),
                              Poly::constant(Scalar(1L, spec.coeff_modulus())));
    }
  }

  FieldElement(const FieldSpec& spec, RationalFunction f) : spec_(spec), rep_(std::move(f)) {
    if (!spec.is_tadic() || std::get<RationalFunction>(rep_).modulus() != spec.coeff_modulus())
      throw std::invalid_argument("rational function does not belong to " + spec.str());
  }

  static FieldElement zero(const FieldSpec& spec) { return FieldElement(spec); }
  static FieldElement one(const FieldSpec& spec) { return FieldElement(spec, mpq_class(1)); }
  static FieldElement integer(const FieldSpec& spec, long n) { return FieldElement(spec, mpq_class(n)); }
  /// The variable t itself; only meaningful for tadic specs.
  static FieldElement variable(const FieldSpec& spec) {
    if (!spec.is_tadic()) throw DomainError("the variable t exists only in tadic fields");
    const auto p = spec.coeff_modulus();
    return FieldElement(spec, RationalFunction(Poly::monomial(Scalar(1L, p), 1), Poly::constant(Scalar(1L, p))));
  }

  const FieldSpec& spec() const { return spec_; }
  const Rep& rep() const { return rep_; }
  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
  const RationalFunction& function() const { return std::get<RationalFunction>(rep_); }

  bool is_zero() const {
    return std::visit([](const auto& r) { return is_zero_rep(r); }, rep_);
  }

  FieldElement operator-() const {
    return std::visit([this](const auto& r) { return FieldElement(spec_, negate(r)); }, rep_);
  }

  FieldElement inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (spec_.is_padic()) return FieldElement(spec_, mpq_class(1 / rational()));
    return FieldElement(spec_, RationalFunction(function().den(), function().num()));
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    if (a.spec_.is_padic()) return FieldElement(a.spec_, mpq_class(a.rational() + b.rational()));
    const auto& f = a.function();
    const auto& g = b.function();
    return FieldElement(a.spec_, RationalFunction(f.num() * g.den() + g.num() * f.den(), f.den() * g.den()));
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    if (a.spec_.is_padic()) return FieldElement(a.spec_, mpq_class(a.rational() * b.rational()));
    const auto& f = a.function();
    const auto& g = b.function();
    return FieldElement(a.spec_, RationalFunction(f.num() * g.num(), f.den() * g.den()));
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return a * b.inverse();
  }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.spec_ == b.spec_ && a.rep_ == b.rep_;
  }

  /// Grammar-conformant text: "2/3", "0", "t^2+2*t", "t^2/(t+1)", "(t+1)/(t+2)".
  std::string str() const {
    if (spec_.is_padic()) return rational().get_str();
    const auto& f = function();
    if (f.den().is_one()) return f.num().str();
    std::string num = f.num().str();
    const bool single_term =
        std::count_if(f.num().coeffs().begin(), f.num().coeffs().end(), [](const Scalar& c) { return !c.is_zero(); }) == 1;
    if (!single_term) num = "(" + num + ")";
    return num + "/(" + f.den().str() + ")";
  }

 private:
  static Rep zero_rep(const FieldSpec& spec) {
    if (spec.is_padic()) return mpq_class(0);
    return RationalFunction(spec.coeff_modulus());
  }
  static bool is_zero_rep(const mpq_class& q) { return sgn(q) == 0; }
  static bool is_zero_rep(const RationalFunction& f) { return f.is_zero(); }
  static mpq_class negate(const mpq_class& q) { return -q; }
  static RationalFunction negate(const RationalFunction& f) { return RationalFunction(-f.num(), f.den()); }

  static void check_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.spec_ == b.spec_))
      throw std::invalid_argument("elements of different fields: " + a.spec_.str() + " vs " + b.spec_.str());
  }

  FieldSpec spec_;
  Rep rep_;
};

namespace detail {

/// Recursive-descent reader for the element grammar:
///
///   rational := ['-'] digits ['/' digits]
///   poly     := term (('+'|'-') term)*
///   term     := coeff | coeff '*' 't' ['^' exp] | 't' ['^' exp]
///   ratfunc  := poly | '(' poly ')' '/' '(' poly ')' | poly '/' '(' poly ')'
///
/// A leading '-' is accepted before any first term. Whitespace is ignored.
class ElementReader {
 public:
  ElementReader(std::string_view text, const FieldSpec& spec) : spec_(spec) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  FieldElement read() {
    if (text_.empty()) fail("empty element");
    FieldElement result = spec_.is_padic() ? FieldElement(spec_, read_signed_rational()) : read_ratfunc();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  static constexpr std::size_t kMaxExponent = 100000;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + text_ + "' as " + spec_.str() + " element at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  void expect(char c) {
    if (!at(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  mpz_class read_digits() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(text_.substr(start, pos_ - start));
  }

  mpq_class read_unsigned_rational() {
    mpz_class num = read_digits();
    mpz_class den = 1;
    // '/' belongs to the rational only when digits follow; "2/(t+1)" divides.
    if (at('/') && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      den = read_digits();
      if (den == 0) throw DivisionByZero("zero denominator in '" + text_ + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  mpq_class read_signed_rational() {
    const bool negative = at('-');
    if (negative) ++pos_;
    mpq_class q = read_unsigned_rational();
    return negative ? mpq_class(-q) : q;
  }

  std::size_t read_exponent() {
    if (!at('^')) return 1;
    ++pos_;
    const mpz_class e = read_digits();
    if (e > kMaxExponent) fail("exponent too large");
    return e.get_ui();
  }

  Poly read_term() {
    const unsigned long p = spec_.coeff_modulus();
    if (at_digit()) {
      const Scalar c(read_unsigned_rational(), p);
      if (!at('*')) return Poly::constant(c);
      ++pos_;
      if (!at('t')) fail("expected 't' after '*'");
      ++pos_;
      return Poly::monomial(c, read_exponent());
    }
    if (at('t')) {
      ++pos_;
      return Poly::monomial(Scalar(1L, p), read_exponent());
    }
    fail("expected a term");
  }

  Poly read_poly() {
    bool negative = at('-');
    if (negative) ++pos_;
    Poly acc(spec_.coeff_modulus());
    for (;;) {
      Poly term = read_term();
      acc = negative ? acc - term : acc + term;
      if (at('+') || at('-')) {
        negative = at('-');
        ++pos_;
        continue;
      }
      return acc;
    }
  }

  Poly read_parenthesized() {
    expect('(');
    Poly p = read_poly();
    expect(')');
    return p;
  }

  FieldElement read_ratfunc() {
    const unsigned long p = spec_.coeff_modulus();
    Poly num = at('(') ? read_parenthesized() : read_poly();
    Poly den = Poly::constant(Scalar(1L, p));
    if (at('/')) {
      ++pos_;
      den = read_parenthesized();
    }
    return FieldElement(spec_, RationalFunction(std::move(num), std::move(den)));
  }

  std::string text_;
  std::size_t pos_ = 0;
  FieldSpec spec_;
};

}  // namespace detail

inline FieldElement parse_element(std::string_view text, const FieldSpec& spec) {
  return detail::ElementReader(text, spec).read();
}

inline std::string format_element(const FieldElement& a) { return a.str(); }

enum class ArithOp { add, sub, mul, div, neg, inv };

inline ArithOp parse_arith_op(std::string_view name) {
  if (name == "add") return ArithOp::add;
  if (name == "sub") return ArithOp::sub;
  if (name == "mul") return ArithOp::mul;
  if (name == "div") return ArithOp::div;
  if (name == "neg") return ArithOp::neg;
  if (name == "inv") return ArithOp::inv;
  throw ParseError("unknown arithmetic op '" + std::string(name) + "'");
}

inline bool is_binary(ArithOp op) { return op != ArithOp::neg && op != ArithOp::inv; }

/// Dispatches one field operation; b is required exactly for binary ops.
inline FieldElement field_arith(ArithOp op, const FieldElement& a, const FieldElement* b = nullptr) {
  if (is_binary(op) && b == nullptr) throw std::invalid_argument("binary operation needs two operands");
  switch (op) {
    case ArithOp::add: return a + *b;
    case ArithOp::sub: return a - *b;
    case ArithOp::mul: return a * *b;
    case ArithOp::div: return a / *b;
    case ArithOp::neg: return -a;
    case ArithOp::inv: return a.inverse();
  }
  throw std::logic_error("unreachable");
}

}  // namespace dvr
