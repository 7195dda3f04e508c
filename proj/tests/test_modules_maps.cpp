#include <gtest/gtest.h>

#include <vector>

#include "test_support.hpp"

namespace dvr {
namespace {

using testing::el;
using testing::kAllFields;
using testing::random_filtered_map;
using testing::random_integral_matrix;
using testing::vs;

// Rank over the residue field on plain vectors, separate from Matrix's rank().
std::size_t oracle_rank(std::vector<std::vector<Scalar>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = m[r][c].inverse();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar q = m[i][c] * inv;
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = m[i][k] - q * m[r][k];
    }
    ++r;
  }
  return r;
}

// gr(f) in degree n, built from the images of the basis pi^(n - s_j) e_j of
// M_n / M_{n+1} and read in the basis pi^(n - t_i) of N_n / N_{n+1}.
// Returns one column per source coordinate present in degree n.
std::vector<std::vector<Scalar>> graded_piece(const FilteredMap& f, long n) {
  const auto& spec = f.spec();
  const auto& s = f.source().shifts();
  const auto& t = f.target().shifts();
  const Scalar zero(0, spec.residue_modulus());
  std::vector<std::size_t> present_rows;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (n >= t[i]) present_rows.push_back(i);
  std::vector<std::vector<Scalar>> piece(present_rows.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (n < s[j]) continue;
    ElementVector basis(s.size(), FieldElement::zero(spec.field()));
    basis[j] = uniformizer_power(spec, n - s[j]);
    const ElementVector y = f.apply(basis);
    for (std::size_t k = 0; k < present_rows.size(); ++k) {
      const std::size_t i = present_rows[k];
      // y_i must lie in N_n; its class in degree n.
      EXPECT_GE(valuation(spec, y[i]), ExtInt(std::max(0L, n - t[i])));
      piece[k].push_back(residue(spec, y[i] * uniformizer_power(spec, t[i] - n)));
    }
  }
  return piece;
}

// gr(f) injective in every degree, checked degree by degree up to a bound
// past which every coordinate is present.
bool gr_injective_by_degrees(const FilteredMap& f) {
  long lo = 0, hi = 0;
  for (long x : f.source().shifts()) lo = std::min(lo, x), hi = std::max(hi, x);
  for (long x : f.target().shifts()) lo = std::min(lo, x), hi = std::max(hi, x);
  for (long n = lo - 2; n <= hi + 2; ++n) {
    std::size_t present = 0;
    for (long x : f.source().shifts()) present += n >= x ? 1 : 0;
    if (present == 0) continue;
    if (oracle_rank(graded_piece(f, n)) != present) return false;
  }
  return true;
}

// Determinant by Laplace expansion along the first row.
FieldElement laplace_det(const ElementMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  FieldElement det = a.zero();
  for (std::size_t c = 0; c < n; ++c) {
    ElementMatrix minor(n - 1, n - 1, a.zero());
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = a(i, j);
    const FieldElement term = a(0, c) * laplace_det(minor);
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

TEST(FilteredModule, MembershipAndEscape) {
  const auto spec = vs("padic:2");
  const FilteredFreeModule m(spec, {0, 1});
  const ElementVector x{el("0", "padic:2"), el("2", "padic:2")};
  EXPECT_EQ(escape_level(m, x), 3);
  EXPECT_TRUE(m.contains(x, 2));
  EXPECT_FALSE(m.contains(x, 3));
  const ElementVector frac{el("1/2", "padic:2"), el("0", "padic:2")};
  EXPECT_FALSE(m.contains(frac, -5));
  EXPECT_THROW(escape_level(m, ElementVector(2, FieldElement::zero(spec.field()))), DomainError);
  EXPECT_THROW(escape_level(m, ElementVector(3, FieldElement::zero(spec.field()))), std::invalid_argument);
  EXPECT_THROW(FilteredFreeModule(spec, {}), std::invalid_argument);
}

TEST(FilteredModule, LevelsDescendAndEscapeIsExact) {
  for (const char* f : kAllFields) {
    const auto spec = vs(f);
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<long> shifts(static_cast<std::size_t>(rng.uniform(1, 4)));
      for (auto& s : shifts) s = rng.uniform(-3, 3);
      const FilteredFreeModule m(spec, shifts);
      ElementVector x(shifts.size(), FieldElement::zero(spec.field()));
      for (auto& c : x)
        if (rng.chance(2, 3)) c = sampling::random_integral(spec, rng);
      if (std::all_of(x.begin(), x.end(), [](const FieldElement& c) { return c.is_zero(); })) continue;
      const long e = escape_level(m, x);
      ASSERT_FALSE(m.contains(x, e));
      ASSERT_TRUE(m.contains(x, e - 1));
      for (long n = -5; n < e; ++n) ASSERT_TRUE(m.contains(x, n));
    }
  }
}

TEST(Compatibility, Examples) {
  const auto spec = vs("padic:2");
  const auto one = parse_matrix("1", spec.field());
  try {
    make_filtered_map(FilteredFreeModule(spec, {1}), FilteredFreeModule(spec, {0}), one);
    FAIL() << "expected CompatibilityError";
  } catch (const CompatibilityError& e) {
    EXPECT_EQ(e.row(), 0u);
    EXPECT_EQ(e.col(), 0u);
  }
  EXPECT_NO_THROW(make_filtered_map(FilteredFreeModule(spec, {0}), FilteredFreeModule(spec, {1}), one));
  EXPECT_NO_THROW(make_filtered_map(FilteredFreeModule(spec, {1}), FilteredFreeModule(spec, {0}),
                                    parse_matrix("2", spec.field())));
  // Entries must lie in R even when the shifts would allow negative valuation.
  EXPECT_THROW(make_filtered_map(FilteredFreeModule(spec, {0}), FilteredFreeModule(spec, {3}),
                                 parse_matrix("1/2", spec.field())),
               CompatibilityError);
  EXPECT_THROW(make_filtered_map(FilteredFreeModule(spec, {0, 0}), FilteredFreeModule(spec, {0}), one),
               std::invalid_argument);
}

TEST(Compatibility, ValidMapsSendLevelsIntoLevels) {
  const auto spec = vs("tadic:3");
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const FilteredMap f = random_filtered_map(spec, rng);
    for (long n = -3; n <= 6; ++n) {
      ElementVector x(f.source().rank(), FieldElement::zero(spec.field()));
      for (std::size_t j = 0; j < x.size(); ++j)
        x[j] = sampling::random_level_member(spec, std::max(0L, n - f.source().shifts()[j]), rng);
      ASSERT_TRUE(f.source().contains(x, n));
      ASSERT_TRUE(f.target().contains(f.apply(x), n));
    }
  }
}

TEST(LeadingMatrix, PiIsInjectiveButNotGrInjective) {
  const auto spec = vs("padic:3");
  const FilteredMap f = make_filtered_map(FilteredFreeModule(spec, {0}), FilteredFreeModule(spec, {0}),
                                          parse_matrix("3", spec.field()));
  EXPECT_EQ(format_leading_matrix(leading_matrix(f)), "0");
  EXPECT_FALSE(gr_injective(f));
  EXPECT_TRUE(map_injective(f));
  EXPECT_FALSE(gr_injective_by_degrees(f));
}

TEST(LeadingMatrix, ShiftedIdentityIsGrInjective) {
  const auto spec = vs("tadic:0");
  const FilteredMap f = make_filtered_map(FilteredFreeModule(spec, {1, 0}), FilteredFreeModule(spec, {0, 0}),
                                          parse_matrix("t,0;0,1", spec.field()));
  EXPECT_EQ(format_leading_matrix(leading_matrix(f)), "1,0;0,1");
  EXPECT_TRUE(gr_injective(f));
  EXPECT_TRUE(map_injective(f));
}

class PerField : public ::testing::TestWithParam<const char*> {};

TEST_P(PerField, GrInjectiveMatchesDegreeByDegreeOracle) {
  const auto spec = vs(GetParam());
  Rng rng(77);
  int injective = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const FilteredMap f = random_filtered_map(spec, rng, 3);
    const bool gr = gr_injective(f);
    ASSERT_EQ(gr, gr_injective_by_degrees(f)) << format_element_matrix(f.matrix());
    if (gr) {
      ++injective;
      ASSERT_TRUE(map_injective(f)) << format_element_matrix(f.matrix());
    }
  }
  EXPECT_GT(injective, 0);
}

TEST_P(PerField, MapInjectiveMatchesFieldRank) {
  const auto spec = vs(GetParam());
  Rng rng(78);
  for (int trial = 0; trial < 200; ++trial) {
    const FilteredMap f = random_filtered_map(spec, rng);
    ASSERT_EQ(map_injective(f), rank(f.matrix()) == f.source().rank());
  }
}

TEST_P(PerField, SmithFormProperties) {
  const auto spec = vs(GetParam());
  const FieldElement one = FieldElement::one(spec.field());
  Rng rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto cols = trial % 2 == 0 ? rows : static_cast<std::size_t>(rng.uniform(1, 4));
    const ElementMatrix a = random_integral_matrix(spec, rows, cols, rng);
    const SmithForm s = snf(spec, a);
    ASSERT_EQ(s.u * a * s.v, s.d);
    ASSERT_EQ(valuation(spec, laplace_det(s.u)), ExtInt(0));
    ASSERT_EQ(valuation(spec, laplace_det(s.v)), ExtInt(0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < rows; ++k) ASSERT_TRUE(in_valuation_ring(spec, s.u(i, k)));
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < cols; ++k) ASSERT_TRUE(in_valuation_ring(spec, s.v(j, k)));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) {
          ASSERT_TRUE(s.d(i, j).is_zero());
        }
    for (std::size_t k = 0; k < s.exponents.size(); ++k) {
      ASSERT_EQ(s.d(k, k), uniformizer_power(spec, s.exponents[k]));
      if (k > 0) {
        ASSERT_LE(s.exponents[k - 1], s.exponents[k]);
      }
    }
    for (std::size_t k = s.exponents.size(); k < std::min(rows, cols); ++k) ASSERT_TRUE(s.d(k, k).is_zero());
    ASSERT_EQ(s.exponents.size(), rank(a));

    ExtInt min_entry = ExtInt::infinity();
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) min_entry = min(min_entry, valuation(spec, a(i, j)));
    if (!s.exponents.empty()) {
      ASSERT_EQ(ExtInt(s.exponents[0]), min_entry);
    }

    if (rows == cols) {
      const FieldElement det = laplace_det(a);
      ASSERT_EQ(det, determinant(a, one));
      if (!det.is_zero()) {
        long sum = 0;
        for (long e : s.exponents) sum += e;
        ASSERT_EQ(ExtInt(sum), valuation(spec, det));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, PerField, ::testing::ValuesIn(kAllFields));

TEST(Snf, Example) {
  const auto spec = vs("padic:2");
  const SmithForm s = snf(spec, parse_matrix("2,4;0,8", spec.field()));
  EXPECT_EQ(format_element_matrix(s.d), "2,0;0,8");
  EXPECT_EQ(s.exponents, (std::vector<long>{1, 3}));
  EXPECT_THROW(snf(spec, parse_matrix("1/2", spec.field())), DomainError);
  const SmithForm z = snf(spec, parse_matrix("0,0;0,0", spec.field()));
  EXPECT_TRUE(z.exponents.empty());
}

TEST(Parsing, MatricesVectorsShifts) {
  const auto field = FieldSpec::tadic(3);
  const ElementMatrix m = parse_matrix("t,1;0,t^2+1", field);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(format_element_matrix(m), "t,1;0,t^2+1");
  EXPECT_THROW(parse_matrix("1,2;3", field), ParseError);
  EXPECT_THROW(parse_matrix("1,,2", field), ParseError);
  EXPECT_EQ(parse_vector("1,t", field).size(), 2u);
  EXPECT_EQ(parse_shifts("0,-2,3"), (std::vector<long>{0, -2, 3}));
  EXPECT_THROW(parse_shifts("0,x"), ParseError);
  EXPECT_THROW(parse_shifts(""), ParseError);
}

}  // namespace
}  // namespace dvr
