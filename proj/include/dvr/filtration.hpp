#pragma once

#include <cstdint>
#include <optional>
#include <span>
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

/// x in R_n = {x : v(x) >= n}. Any integer n is accepted; zero lies in
/// every level.
inline bool level_member(const ValuationSpec& spec, const FieldElement& x, long n) {
  return valuation(spec, x) >= ExtInt(n);
}

/// Randomized check that R_0 = R >= R_1 >= ... is a ring filtration made of
/// ideals, over levels 0..max_level:
///   descending      x in R_{n+1}  =>  x in R_n
///   ideal-sum       x, y in R_n   =>  x + y in R_n
///   ideal-multiple  r in R, x in R_n  =>  r*x in R_n
///   product         a in R_n, b in R_m  =>  a*b in R_{n+m}
/// `samples` trials are drawn per level (and per level pair for product).
inline CheckReport check_filtration_axioms(const ValuationSpec& spec, std::uint64_t seed, long samples,
                                           long max_level) {
  if (max_level < 1) throw std::invalid_argument("max_level must be >= 1");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  Rng rng(seed);
  CheckReport report;
  auto& descending = report.add("descending");
  auto& ideal_sum = report.add("ideal-sum");
  auto& ideal_multiple = report.add("ideal-multiple");
  auto& product = report.add("product");

  for (long n = 0; n <= max_level; ++n) {
    for (long i = 0; i < samples; ++i) {
      const FieldElement x = sampling::random_level_member(spec, n + 1, rng);
      descending.record(level_member(spec, x, n), [&] { return x.str() + ",n=" + std::to_string(n); });

      const FieldElement y = sampling::random_level_member(spec, n, rng);
      const FieldElement z = sampling::random_level_member(spec, n, rng);
      ideal_sum.record(level_member(spec, y + z, n), [&] { return y.str() + "," + z.str(); });

      const FieldElement r = sampling::random_level_member(spec, 0, rng);
      ideal_multiple.record(level_member(spec, r * y, n), [&] { return r.str() + "," + y.str(); });
    }
  }
  for (long n = 0; n <= max_level; ++n) {
    for (long m = 0; m <= max_level; ++m) {
      for (long i = 0; i < samples; ++i) {
        const FieldElement a = sampling::random_level_member(spec, n, rng);
        const FieldElement b = sampling::random_level_member(spec, m, rng);
        product.record(level_member(spec, a * b, n + m), [&] { return a.str() + "," + b.str(); });
      }
    }
  }
  return report;
}

/// A factorization c = a * b with a in R_n and b in R_m.
struct StrongSplit {
  FieldElement c;
  FieldElement a;
  FieldElement b;

  std::string str() const { return c.str() + " = " + a.str() + " * " + b.str(); }
};

/// Witnesses R_{n+m} = R_n * R_m: returns (pi^n, c / pi^n).
inline StrongSplit strong_split(const ValuationSpec& spec, const FieldElement& c, long n, long m) {
  if (n < 0 || m < 0) throw DomainError("strong_split needs nonnegative levels");
  if (c.is_zero()) throw DomainError("strong_split of zero");
  if (!level_member(spec, c, n + m))
    throw DomainError(c.str() + " is not in level " + std::to_string(n + m));
  const FieldElement a = uniformizer_power(spec, n);
  return {c, a, c * uniformizer_power(spec, -n)};
}

/// x = pi^n * r with r in R.
struct AdicWitness {
  FieldElement x;
  FieldElement r;
};

struct AdicCheck {
  CheckReport report;
  std::vector<AdicWitness> witnesses;
};

/// Randomized check that the m-adic filtration agrees with the valuation
/// filtration at level n:
///   power-in-level  products of n elements of m lie in R_n
///   level-in-power  each sampled x in R_n factors as pi^n * r with r in R
inline AdicCheck adic_vs_valuation(const ValuationSpec& spec, long n, std::uint64_t seed, long samples) {
  if (n < 0) throw std::invalid_argument("level must be >= 0");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  Rng rng(seed);
  AdicCheck out;
  auto& power_in_level = out.report.add("power-in-level");
  auto& level_in_power = out.report.add("level-in-power");
  const FieldElement pi_n = uniformizer_power(spec, n);
  const FieldElement pi_neg_n = uniformizer_power(spec, -n);

  for (long i = 0; i < samples; ++i) {
    FieldElement prod = FieldElement::one(spec.field());
    for (long k = 0; k < n; ++k) prod *= sampling::random_level_member(spec, 1, rng);
    power_in_level.record(level_member(spec, prod, n), [&] { return prod.str(); });

    const FieldElement x = sampling::random_level_member(spec, n, rng);
    const FieldElement r = x * pi_neg_n;
    const bool ok = in_valuation_ring(spec, r) && pi_n * r == x;
    level_in_power.record(ok, [&] { return x.str() + "," + r.str(); });
    out.witnesses.push_back({x, r});
  }
  return out;
}

/// The ideal generated by `generators` is (pi^e) with e the least valuation;
/// nullopt stands for the zero ideal.
inline std::optional<long> principal_generator(const ValuationSpec& spec, std::span<const FieldElement> generators) {
  std::optional<long> e;
  for (const auto& g : generators) {
    const ExtInt v = valuation(spec, g);
    if (v < ExtInt(0)) throw DomainError("generator " + g.str() + " is not in R");
    if (v.is_infinite()) continue;
    if (!e || v.value() < *e) e = v.value();
  }
  return e;
}

}  // namespace dvr
