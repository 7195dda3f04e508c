#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dvr/element.hpp"
#include "dvr/errors.hpp"
#include "dvr/ext_int.hpp"
#include "dvr/report.hpp"
#include "dvr/rng.hpp"
#include "dvr/valued_field.hpp"

namespace dvr {

/// The filtration function f : R -> Z u {inf} induced by the valuation:
/// f(x) = v(x), so f(1) = 0 and f(0) = inf. Derived sets:
///
///   A_g   = {x : f(x) >= g}
///   A_+   = {x : f(x) > 0}
///   (f)^g = {x : exists n > 0 with g <= f(x^n)}
///   (f)_g = {x : exists n > 0 with g  = f(x^n)}
///
/// (f)^g and (f)_g are implemented with their literal meaning. Because
/// f(x^n) = n*f(x), each has a closed form; the power enumeration below is
/// kept as an independent route to the same answer.
class FiltFn {
 public:
  explicit FiltFn(ValuationSpec spec) : spec_(spec) {}
  const ValuationSpec& spec() const { return spec_; }

 private:
  ValuationSpec spec_;
};

inline ExtInt f_value(const FiltFn& ff, const FieldElement& x) {
  const ExtInt v = valuation(ff.spec(), x);
  if (v < ExtInt(0)) throw DomainError("f is defined on R only; " + x.str() + " is not in R");
  return v;
}

/// x in A_g.
inline bool level_set_member(const FiltFn& ff, const FieldElement& x, long g) { return f_value(ff, x) >= ExtInt(g); }

namespace detail {

/// (f)^g for g in Z u {inf}, closed form.
inline bool upper_closed(const ExtInt& fx, const ExtInt& g) {
  if (g.is_infinite()) return fx.is_infinite();  // x^n = 0 only for x = 0
  if (g <= ExtInt(0)) return true;               // n = 1 already works
  return fx >= ExtInt(1);
}

/// (f)_g for finite g, closed form.
inline bool lower_closed(const ExtInt& fx, long g) {
  if (fx.is_infinite()) return false;
  const long k = fx.value();
  if (k == 0) return g == 0;
  return g >= 1 && g % k == 0;
}

}  // namespace detail

/// x in (f)^g for g >= 1. Equals m for every finite g.
inline bool upper_member(const FiltFn& ff, const FieldElement& x, long g) {
  if (g < 1) throw DomainError("(f)^g needs g >= 1");
  return detail::upper_closed(f_value(ff, x), g);
}

/// x in (f)_g for g >= 0.
inline bool lower_member(const FiltFn& ff, const FieldElement& x, long g) {
  if (g < 0) throw DomainError("(f)_g needs g >= 0");
  return detail::lower_closed(f_value(ff, x), g);
}

/// f(x^n) for n = 1..count, computed from the actual powers of x.
class PowerProfile {
 public:
  PowerProfile(const FiltFn& ff, const FieldElement& x, long count) {
    f_value(ff, x);
    FieldElement power = x;
    for (long n = 1; n <= count; ++n) {
      values_.push_back(valuation(ff.spec(), power));
      if (n < count) power *= x;
    }
  }

  /// Exists n in the profile with g <= f(x^n).
  bool reaches(const ExtInt& g) const {
    for (const auto& v : values_)
      if (g <= v) return true;
    return false;
  }
  /// Exists n in the profile with g = f(x^n).
  bool hits(long g) const {
    for (const auto& v : values_)
      if (v == ExtInt(g)) return true;
    return false;
  }
  /// Exists n in the profile with f(x^n) > 0, i.e. x in the radical of A_+.
  bool enters_positive_part() const { return reaches(ExtInt(1)); }

 private:
  std::vector<ExtInt> values_;
};

/// Enumeration route for (f)^g: n <= g suffices when g >= 1.
inline bool upper_member_by_powers(const FiltFn& ff, const FieldElement& x, long g) {
  if (g < 1) throw DomainError("(f)^g needs g >= 1");
  return PowerProfile(ff, x, g).reaches(g);
}

/// Enumeration route for (f)_g: n <= max(g, 1) suffices.
inline bool lower_member_by_powers(const FiltFn& ff, const FieldElement& x, long g) {
  if (g < 0) throw DomainError("(f)_g needs g >= 0");
  return PowerProfile(ff, x, std::max(g, 1L)).hits(g);
}

/// The primes of R: (0) and m.
enum class SpecPrime { zero_ideal, maximal_ideal };

inline std::string to_string(SpecPrime p) { return p == SpecPrime::zero_ideal ? "(0)" : "m"; }

inline bool prime_contains(const FiltFn& ff, SpecPrime p, const FieldElement& x) {
  const ExtInt fx = f_value(ff, x);
  return p == SpecPrime::zero_ideal ? fx.is_infinite() : fx >= ExtInt(1);
}

inline std::vector<SpecPrime> spec_f(const FiltFn&) { return {SpecPrime::zero_ideal, SpecPrime::maximal_ideal}; }

/// Elements used to compare subsets of R: pi, 1, pi^2, 0 first (so reported
/// witnesses are the simplest available), then pi^k * u for k in 0..10 and a
/// few fixed units u.
inline std::vector<FieldElement> probe_elements(const FiltFn& ff) {
  const auto& spec = ff.spec();
  const FieldElement one = FieldElement::one(spec.field());
  const FieldElement pi = spec.uniformizer();
  std::vector<FieldElement> out{pi, one, pi * pi, FieldElement::zero(spec.field())};
  const std::vector<FieldElement> units{one, -one, one + pi};
  for (long k = 0; k <= 10; ++k)
    for (const auto& u : units) out.push_back(uniformizer_power(spec, k) * u);
  return out;
}

/// Probes followed by `samples` random elements of R whose valuations cover
/// {0, ..., 10} and inf.
inline std::vector<FieldElement> stratified_sample(const FiltFn& ff, std::uint64_t seed, long samples) {
  Rng rng(seed);
  std::vector<FieldElement> out = probe_elements(ff);
  for (long i = 0; i < samples; ++i) {
    const long k = rng.uniform(0, 11);
    out.push_back(k == 11 ? FieldElement::zero(ff.spec().field())
                          : sampling::random_with_valuation(ff.spec(), k, rng));
  }
  return out;
}

/// Branchedness decided by the criterion P = (f)^g for some finite g >= 1. Set equality is decided on the probe
/// elements for g in 1..max_g.
inline bool branched(const FiltFn& ff, SpecPrime p, long max_g = 10) {
  const auto probes = probe_elements(ff);
  for (long g = 1; g <= max_g; ++g) {
    bool equal = true;
    for (const auto& x : probes)
      if (upper_member(ff, x, g) != prime_contains(ff, p, x)) {
        equal = false;
        break;
      }
    if (equal) return true;
  }
  return false;
}

/// Direct reading of the union definition: P is branched unless it is the
/// union of the primes of spec_f strictly inside P. With no such primes the
/// union is empty, so (0) comes out branched here; see branched() for the
/// criterion used operationally.
inline bool branched_by_union(const FiltFn& ff, SpecPrime p) {
  std::vector<SpecPrime> smaller;
  for (SpecPrime q : spec_f(ff))
    if (q == SpecPrime::zero_ideal && p == SpecPrime::maximal_ideal) smaller.push_back(q);
  for (const auto& x : probe_elements(ff)) {
    if (!prime_contains(ff, p, x)) continue;
    bool covered = false;
    for (SpecPrime q : smaller) covered = covered || prime_contains(ff, q, x);
    if (!covered) return true;
  }
  return false;
}

namespace detail {

struct ClauseScan {
  explicit ClauseScan(std::string id) { result.id = std::move(id); }
  ClauseResult result;
  void violate(const FieldElement& x) {
    if (result.status == ClauseStatus::pass) {
      result.status = ClauseStatus::fail_literal;
      result.witness = x.str();
    }
  }
};

}  // namespace detail

/// Evaluates the inclusions among the (f)^g, (f)_g and sqrt(A_+) on a
/// stratified sample, using the power-enumeration route for membership:
///
///   i         (f)_0 = sqrt(A_+)
///   ii        (f)^inf = 0
///   iii       (f)_g in (f)^g                  (g in 1..10)
///   iv-upper  g <= h  =>  (f)^h in (f)^g       (g, h in 1..10)
///   iv-lower  g <= h  =>  (f)_h in (f)_g       (g, h in 0..10)
///
/// Under the literal definitions clauses i and iv-lower do not hold for a
/// DVR; they are reported as FAIL-LITERAL with a witness element.
inline StatusReport lemma32_report(const FiltFn& ff, std::uint64_t seed, long samples) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  constexpr long kMaxG = 10;
  detail::ClauseScan radical("i"), infinite("ii"), lower_in_upper("iii"), upper_mono("iv-upper"),
      lower_mono("iv-lower");

  for (const auto& x : stratified_sample(ff, seed, samples)) {
    const PowerProfile prof(ff, x, kMaxG);
    if (prof.hits(0) != prof.enters_positive_part()) radical.violate(x);
    if (prof.reaches(ExtInt::infinity()) != x.is_zero()) infinite.violate(x);
    for (long g = 1; g <= kMaxG; ++g)
      if (prof.hits(g) && !prof.reaches(g)) lower_in_upper.violate(x);
    for (long g = 1; g <= kMaxG; ++g)
      for (long h = g; h <= kMaxG; ++h)
        if (prof.reaches(h) && !prof.reaches(g)) upper_mono.violate(x);
    for (long g = 0; g <= kMaxG; ++g)
      for (long h = g; h <= kMaxG; ++h)
        if (prof.hits(h) && !prof.hits(g)) lower_mono.violate(x);
  }
  return {{radical.result, infinite.result, lower_in_upper.result, upper_mono.result, lower_mono.result}};
}

/// For x in R with 0 < f(x) < inf, checks
///   smallest-prime  (f)^{f(x)} is m, the smallest prime containing x
///   largest-prime   (f)_{f(x)} is (0), the largest prime avoiding x
/// on probes plus `samples` random elements. The second clause fails under
/// the literal definition and is reported as FAIL-LITERAL with a witness.
inline StatusReport prop36_check(const FiltFn& ff, const FieldElement& x, std::uint64_t seed = 0,
                                 long samples = 100) {
  const ExtInt fx = f_value(ff, x);
  if (fx.is_infinite() || fx.value() <= 0)
    throw DomainError("prop36 needs 0 < f(x) < inf, got f(" + x.str() + ") = " + fx.str());
  const long g = fx.value();

  // Smallest prime containing x, found by scanning spec_f in inclusion order.
  std::optional<SpecPrime> smallest;
  for (SpecPrime p : spec_f(ff))
    if (prime_contains(ff, p, x)) {
      smallest = p;
      break;
    }
  // Largest prime avoiding x, scanning in reverse.
  std::optional<SpecPrime> largest;
  const auto primes = spec_f(ff);
  for (auto it = primes.rbegin(); it != primes.rend(); ++it)
    if (!prime_contains(ff, *it, x)) {
      largest = *it;
      break;
    }

  detail::ClauseScan upper("smallest-prime"), lower("largest-prime");
  if (!smallest || !upper_member_by_powers(ff, x, g)) upper.violate(x);
  for (const auto& y : stratified_sample(ff, seed, samples)) {
    const PowerProfile prof(ff, y, g);
    if (smallest && prof.reaches(g) != prime_contains(ff, *smallest, y)) upper.violate(y);
    if (!largest || prof.hits(g) != prime_contains(ff, *largest, y)) lower.violate(y);
  }
  return {{upper.result, lower.result}};
}

}  // namespace dvr
