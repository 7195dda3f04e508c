#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dvr/element.hpp"
#include "dvr/errors.hpp"
#include "dvr/valued_field.hpp"

namespace dvr {

/// A fractional ideal of the valuation ring: zero, or pi^e * R for e in Z.
/// Every fractional ideal of a DVR has this form, so the exponent is a
/// complete invariant.
class FracIdeal {
 public:
  static FracIdeal zero(const ValuationSpec& spec) { return FracIdeal(spec, std::nullopt); }
  static FracIdeal power(const ValuationSpec& spec, long e) { return FracIdeal(spec, e); }
  static FracIdeal whole_ring(const ValuationSpec& spec) { return FracIdeal(spec, 0); }

  const ValuationSpec& spec() const { return spec_; }
  bool is_zero() const { return !exponent_; }
  /// Requires a nonzero ideal.
  long exponent() const {
    if (!exponent_) throw DomainError("the zero ideal has no exponent");
    return *exponent_;
  }
  bool is_integral() const { return !exponent_ || *exponent_ >= 0; }

  bool contains(const FieldElement& x) const {
    const ExtInt v = valuation(spec_, x);
    if (!exponent_) return v.is_infinite();
    return v >= ExtInt(*exponent_);
  }

  /// I subset of J.
  bool subset_of(const FracIdeal& j) const {
    if (!exponent_) return true;
    if (!j.exponent_) return false;
    return *exponent_ >= *j.exponent_;
  }

  /// "pi^e*R" or "0".
  std::string str() const { return exponent_ ? "pi^" + std::to_string(*exponent_) + "*R" : "0"; }

  friend bool operator==(const FracIdeal&, const FracIdeal&) = default;

 private:
  FracIdeal(const ValuationSpec& spec, std::optional<long> e) : spec_(spec), exponent_(e) {}

  ValuationSpec spec_;
  std::optional<long> exponent_;
};

inline FracIdeal ideal_from_generators(const ValuationSpec& spec, std::span<const FieldElement> gens) {
  std::optional<long> e;
  for (const auto& g : gens) {
    const ExtInt v = valuation(spec, g);
    if (v.is_infinite()) continue;
    if (!e || v.value() < *e) e = v.value();
  }
  return e ? FracIdeal::power(spec, *e) : FracIdeal::zero(spec);
}

enum class IdealOp { product, sum, intersect };

inline FracIdeal ideal_op(IdealOp op, const FracIdeal& i, const FracIdeal& j) {
  if (!(i.spec() == j.spec())) throw std::invalid_argument("ideals of different rings");
  const auto& spec = i.spec();
  switch (op) {
    case IdealOp::product:
      if (i.is_zero() || j.is_zero()) return FracIdeal::zero(spec);
      return FracIdeal::power(spec, i.exponent() + j.exponent());
    case IdealOp::sum:
      if (i.is_zero()) return j;
      if (j.is_zero()) return i;
      return FracIdeal::power(spec, std::min(i.exponent(), j.exponent()));
    case IdealOp::intersect:
      if (i.is_zero() || j.is_zero()) return FracIdeal::zero(spec);
      return FracIdeal::power(spec, std::max(i.exponent(), j.exponent()));
  }
  throw std::logic_error("unreachable");
}

/// The inverse pi^-e * R; the zero ideal is not invertible.
inline FracIdeal ideal_inverse(const FracIdeal& i) {
  if (i.is_zero()) throw DomainError("the zero ideal is not invertible");
  FracIdeal inv = FracIdeal::power(i.spec(), -i.exponent());
  if (!(ideal_op(IdealOp::product, i, inv) == FracIdeal::whole_ring(i.spec())))
    throw std::logic_error("inverse check failed for " + i.str());
  return inv;
}

/// Some a != 0 in R with a * I inside R: pi^max(0, -e), or 1 for the zero ideal.
inline FieldElement denominator_witness(const FracIdeal& i) {
  const auto& spec = i.spec();
  if (i.is_zero()) return FieldElement::one(spec.field());
  const FieldElement a = uniformizer_power(spec, std::max(0L, -i.exponent()));
  const FieldElement scaled_generator = a * uniformizer_power(spec, i.exponent());
  if (!in_valuation_ring(spec, scaled_generator))
    throw std::logic_error("denominator witness failed for " + i.str());
  return a;
}

/// n with I = m^n, for nonzero integral I.
inline long as_power_of_m(const FracIdeal& i) {
  if (i.is_zero()) throw DomainError("the zero ideal is not a power of m");
  if (i.exponent() < 0) throw DomainError(i.str() + " is not contained in R");
  return i.exponent();
}

}  // namespace dvr
