#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dvr/element.hpp"
#include "dvr/errors.hpp"
#include "dvr/poly.hpp"
#include "dvr/valued_field.hpp"

namespace dvr {

/// An element of gr(R) = R_0/R_1 + R_1/R_2 + ...
///
/// The degree-n component is stored through the chart R_n/R_{n+1} -> R/m,
/// a + R_{n+1} |-> residue(a / pi^n), so the coordinates depend on the chosen
/// uniformizer. Only nonzero coordinates are kept.
class GradedElement {
 public:
  explicit GradedElement(unsigned long residue_modulus) : modulus_(residue_modulus) {}

  static GradedElement homogeneous(long degree, const ResidueElem& c) {
    GradedElement g(c.modulus());
    g.add_term(degree, c);
    return g;
  }

  unsigned long modulus() const { return modulus_; }
  const std::map<long, ResidueElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const { return terms_.size() == 1; }

  /// Degree of a homogeneous element.
  long degree() const {
    if (!is_homogeneous()) throw DomainError("degree of a non-homogeneous graded element");
    return terms_.begin()->first;
  }

  ResidueElem coeff(long degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? ResidueElem(modulus_) : it->second;
  }

  friend GradedElement operator+(const GradedElement& u, const GradedElement& v) {
    check_same(u, v);
    GradedElement out = u;
    for (const auto& [d, c] : v.terms_) out.add_term(d, c);
    return out;
  }

  /// Convolution: (a + R_{n+1})(b + R_{m+1}) = ab + R_{n+m+1} on homogeneous
  /// pieces, extended bilinearly.
  friend GradedElement operator*(const GradedElement& u, const GradedElement& v) {
    check_same(u, v);
    GradedElement out(u.modulus_);
    for (const auto& [du, cu] : u.terms_)
      for (const auto& [dv, cv] : v.terms_) out.add_term(du + dv, cu * cv);
    return out;
  }

  friend bool operator==(const GradedElement&, const GradedElement&) = default;

  /// "c0 + c1*T + c2*T^2", ascending degree; "0" for zero.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [d, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str();
      if (d >= 1) out += "*T";
      if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
  }

 private:
  static void check_same(const GradedElement& u, const GradedElement& v) {
    if (u.modulus_ != v.modulus_) throw std::invalid_argument("graded elements over different residue fields");
  }

  void add_term(long degree, const ResidueElem& c) {
    if (degree < 0) throw DomainError("gr(R) has no negative degrees");
    if (c.modulus() != modulus_) throw std::invalid_argument("coefficient over wrong residue field");
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(degree, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  unsigned long modulus_;
  std::map<long, ResidueElem> terms_;
};

enum class GrOp { add, mul };

inline GradedElement gr_arith(GrOp op, const GradedElement& u, const GradedElement& v) {
  return op == GrOp::add ? u + v : u * v;
}

/// Leading form of x in gr(R): degree v(x), coordinate residue(x / pi^v(x)).
/// Zero has no leading form.
inline GradedElement symbol(const ValuationSpec& spec, const FieldElement& x) {
  if (x.is_zero()) throw DomainError("the symbol of 0 is undefined");
  const long n = valuation(spec, x).value();
  if (n < 0) throw DomainError("symbol of " + x.str() + " which is not in R");
  return GradedElement::homogeneous(n, residue(spec, x * uniformizer_power(spec, -n)));
}

/// gr(R) is the polynomial ring over R/m in one variable T of degree 1.
inline Poly gr_to_poly(const GradedElement& u) {
  Poly out(u.modulus());
  for (const auto& [d, c] : u.terms()) out = out + Poly::monomial(c, static_cast<std::size_t>(d));
  return out;
}

inline GradedElement poly_to_gr(const Poly& p) {
  GradedElement out(p.modulus());
  const auto& c = p.coeffs();
  for (std::size_t d = 0; d < c.size(); ++d)
    if (!c[d].is_zero()) out = out + GradedElement::homogeneous(static_cast<long>(d), c[d]);
  return out;
}

}  // namespace dvr
