#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "dvr/element.hpp"
#include "dvr/errors.hpp"
#include "dvr/ext_int.hpp"
#include "dvr/field_spec.hpp"
#include "dvr/report.hpp"
#include "dvr/rng.hpp"
#include "dvr/scalar.hpp"

namespace dvr {

enum class ResidueKind { prime_field, rationals };

/// Residue-field values: F_p for padic:p and tadic:p, Q for tadic:0.
using ResidueElem = Scalar;

/// A field together with its discrete valuation.
///
/// padic:p uses v_p on Q with uniformizer p; tadic:* uses ord_t on the
/// rational function field with uniformizer t. The valuation ring
/// R = {x : v(x) >= 0} and its maximal ideal m = {x : v(x) >= 1} = pi*R are
/// implicit in the predicates below.
class ValuationSpec {
 public:
  explicit ValuationSpec(FieldSpec field) : field_(field) {}
  static ValuationSpec parse(std::string_view text) { return ValuationSpec(FieldSpec::parse(text)); }

  const FieldSpec& field() const { return field_; }

  FieldElement uniformizer() const {
    if (field_.is_padic()) return FieldElement::integer(field_, static_cast<long>(field_.param()));
    return FieldElement::variable(field_);
  }

  ResidueKind residue_kind() const {
    return residue_modulus() == 0 ? ResidueKind::rationals : ResidueKind::prime_field;
  }
  /// p for F_p, 0 for Q.
  unsigned long residue_modulus() const { return field_.param(); }
  std::string residue_name() const {
    return residue_kind() == ResidueKind::rationals ? "Q" : "F_" + std::to_string(field_.param());
  }

  friend bool operator==(const ValuationSpec&, const ValuationSpec&) = default;

 private:
  FieldSpec field_;
};

namespace detail {

inline void check_field(const ValuationSpec& spec, const FieldElement& x) {
  if (!(spec.field() == x.spec()))
    throw std::invalid_argument("element of " + x.spec().str() + " used with " + spec.field().str());
}

/// Multiplicity of the prime p in a nonzero integer, by repeated exact division.
inline long count_factor(mpz_class n, unsigned long p) {
  long k = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++k;
  }
  return k;
}

}  // namespace detail

/// v(x); v(0) is infinity.
inline ExtInt valuation(const ValuationSpec& spec, const FieldElement& x) {
  detail::check_field(spec, x);
  if (x.is_zero()) return ExtInt::infinity();
  if (spec.field().is_padic()) {
    const auto p = spec.field().param();
    return detail::count_factor(x.rational().get_num(), p) - detail::count_factor(x.rational().get_den(), p);
  }
  const auto& f = x.function();
  return static_cast<long>(f.num().order()) - static_cast<long>(f.den().order());
}

/// pi^n for any integer n.
inline FieldElement uniformizer_power(const ValuationSpec& spec, long n) {
  const auto& field = spec.field();
  const unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  FieldElement power(field);
  if (field.is_padic()) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), field.param(), k);
    power = FieldElement(field, mpq_class(q));
  } else {
    const auto p = field.coeff_modulus();
    power = FieldElement(field, RationalFunction(Poly::monomial(Scalar(1L, p), k), Poly::constant(Scalar(1L, p))));
  }
  return n < 0 ? power.inverse() : power;
}

inline bool in_valuation_ring(const ValuationSpec& spec, const FieldElement& x) {
  return valuation(spec, x) >= ExtInt(0);
}

/// Reduction R -> R/m. Throws DomainError when v(x) < 0.
inline ResidueElem residue(const ValuationSpec& spec, const FieldElement& x) {
  if (!in_valuation_ring(spec, x))
    throw DomainError("residue of " + x.str() + " which has negative valuation");
  const auto modulus = spec.residue_modulus();
  if (spec.field().is_padic()) return ResidueElem(x.rational(), modulus);
  // v(x) >= 0 and the fraction is reduced, so t does not divide den.
  const auto& f = x.function();
  return f.num().at_zero() / f.den().at_zero();
}

/// Random sampling of field elements, stratified by valuation.
///
/// A sample is pi^k * u where u is a random unit of R built from small
/// numerators and denominators coprime to pi.
namespace sampling {

inline constexpr long kUnitHeight = 60;
inline constexpr long kValuationRange = 6;

namespace detail {

inline long integer_coprime_to(unsigned long p, Rng& rng) {
  for (;;) {
    const long n = rng.uniform(1, kUnitHeight);
    if (static_cast<unsigned long>(n) % p != 0) return n;
  }
}

inline Scalar random_coefficient(unsigned long modulus, bool nonzero, Rng& rng) {
  for (;;) {
    Scalar c = modulus == 0 ? Scalar(mpq_class(rng.uniform(-4, 4), rng.uniform(1, 3)), 0)
                            : Scalar(rng.uniform(0, static_cast<long>(modulus) - 1), modulus);
    if (!nonzero || !c.is_zero()) return c;
  }
}

/// Polynomial of degree <= 2 with nonzero constant term.
inline Poly random_unit_poly(unsigned long modulus, Rng& rng) {
  std::vector<Scalar> c;
  c.push_back(random_coefficient(modulus, true, rng));
  const long degree = rng.uniform(0, 2);
  for (long i = 0; i < degree; ++i) c.push_back(random_coefficient(modulus, false, rng));
  return Poly(std::move(c), modulus);
}

}  // namespace detail

inline FieldElement random_unit(const ValuationSpec& spec, Rng& rng) {
  const auto& field = spec.field();
  if (field.is_padic()) {
    const auto p = field.param();
    const long num = detail::integer_coprime_to(p, rng);
    const long den = detail::integer_coprime_to(p, rng);
    mpq_class q(rng.chance(1, 2) ? -num : num, den);
    return FieldElement(field, q);
  }
  const auto m = field.coeff_modulus();
  return FieldElement(field, RationalFunction(detail::random_unit_poly(m, rng), detail::random_unit_poly(m, rng)));
}

inline FieldElement random_with_valuation(const ValuationSpec& spec, long k, Rng& rng) {
  const FieldElement u = random_unit(spec, rng);
  if (spec.field().is_padic()) return uniformizer_power(spec, k) * u;
  // Units have nonzero constant terms, so t^k only shifts one side.
  const auto& f = u.function();
  const auto shift = static_cast<std::size_t>(k < 0 ? -k : k);
  return FieldElement(spec.field(), k >= 0 ? RationalFunction(f.num().shift_up(shift), f.den())
                                           : RationalFunction(f.num(), f.den().shift_up(shift)));
}

/// Nonzero element of K with valuation uniform in [-6, 6].
inline FieldElement random_element(const ValuationSpec& spec, Rng& rng) {
  return random_with_valuation(spec, rng.uniform(-kValuationRange, kValuationRange), rng);
}

/// Nonzero element of R with valuation uniform in [0, 6].
inline FieldElement random_integral(const ValuationSpec& spec, Rng& rng) {
  return random_with_valuation(spec, rng.uniform(0, kValuationRange), rng);
}

/// Element of R_n (v >= n); zero with probability 1/32.
inline FieldElement random_level_member(const ValuationSpec& spec, long n, Rng& rng) {
  if (rng.chance(1, 32)) return FieldElement::zero(spec.field());
  return random_with_valuation(spec, n + rng.uniform(0, kValuationRange), rng);
}

}  // namespace sampling

/// Randomized check of the discrete valuation axioms:
///   multiplicative     v(ab) = v(a) + v(b)
///   ultrametric        v(a+b) >= min(v(a), v(b))
///   ultrametric-sharp  v(a+b) = min(v(a), v(b)) whenever v(a) != v(b)
///   surjective         v(pi^n) = n for n in [-20, 20]
/// Every eighth pair is (a, -a) so the v(0) = infinity branch is exercised.
inline CheckReport check_valuation_axioms(const ValuationSpec& spec, std::uint64_t seed, long samples) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  Rng rng(seed);
  CheckReport report;
  auto& mult = report.add("multiplicative");
  auto& ultra = report.add("ultrametric");
  auto& sharp = report.add("ultrametric-sharp");
  auto& surj = report.add("surjective");

  for (long i = 0; i < samples; ++i) {
    const FieldElement a = sampling::random_element(spec, rng);
    const FieldElement b = i % 8 == 7 ? -a : sampling::random_element(spec, rng);
    const auto pair = [&] { return a.str() + "," + b.str(); };
    const ExtInt va = valuation(spec, a);
    const ExtInt vb = valuation(spec, b);
    const ExtInt vsum = valuation(spec, a + b);
    mult.record(valuation(spec, a * b) == va + vb, pair);
    ultra.record(vsum >= min(va, vb), pair);
    if (va != vb) sharp.record(vsum == min(va, vb), pair);
  }
  for (long n = -20; n <= 20; ++n)
    surj.record(valuation(spec, uniformizer_power(spec, n)) == ExtInt(n), [&] { return "pi^" + std::to_string(n); });
  return report;
}

}  // namespace dvr
