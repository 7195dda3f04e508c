#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dvr/element.hpp"
#include "dvr/errors.hpp"
#include "dvr/ext_int.hpp"
#include "dvr/matrix.hpp"
#include "dvr/valued_field.hpp"

namespace dvr {

using ElementVector = std::vector<FieldElement>;
using ElementMatrix = Matrix<FieldElement>;
/// gr(f) in the residue charts of the graded pieces.
using LeadingMatrix = Matrix<ResidueElem>;

/// R^rank filtered by M_n = R_{n - s_1} + ... + R_{n - s_rank}, where R_k = R
/// for k <= 0. Shifts may be negative.
class FilteredFreeModule {
 public:
  FilteredFreeModule(ValuationSpec spec, std::vector<long> shifts) : spec_(spec), shifts_(std::move(shifts)) {
    if (shifts_.empty()) throw std::invalid_argument("filtered module needs rank >= 1");
  }

  const ValuationSpec& spec() const { return spec_; }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<long>& shifts() const { return shifts_; }

  /// x in M_n. Coordinates outside R are never members.
  bool contains(std::span<const FieldElement> x, long n) const {
    check_size(x);
    for (std::size_t j = 0; j < x.size(); ++j) {
      const ExtInt v = valuation(spec_, x[j]);
      if (v < ExtInt(0) || v < ExtInt(n - shifts_[j])) return false;
    }
    return true;
  }

  void check_size(std::span<const FieldElement> x) const {
    if (x.size() != rank())
      throw std::invalid_argument("vector of length " + std::to_string(x.size()) + " for rank " +
                                  std::to_string(rank()));
  }

 private:
  ValuationSpec spec_;
  std::vector<long> shifts_;
};

/// Smallest n with x outside M_n: min_j (v(x_j) + s_j) + 1 over nonzero
/// coordinates. Its existence for every x != 0 is the separatedness of M.
inline long escape_level(const FilteredFreeModule& module, std::span<const FieldElement> x) {
  module.check_size(x);
  std::optional<long> lowest;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_zero()) continue;
    const long v = valuation(module.spec(), x[j]).value();
    if (v < 0) throw DomainError("coordinate " + x[j].str() + " is not in R");
    const long level = v + module.shifts()[j];
    if (!lowest || level < *lowest) lowest = level;
  }
  if (!lowest) throw DomainError("escape level of the zero vector");
  return *lowest + 1;
}

/// Raised by make_filtered_map for the first entry breaking f(M_n) in N_n.
class CompatibilityError : public DomainError {
 public:
  CompatibilityError(std::size_t row, std::size_t col, const std::string& what)
      : DomainError(what), row_(row), col_(col) {}
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Least valuation an entry A_ij may have: the map must send R into R and
/// M_n into N_n, which for e_j in M_{s_j} means v(A_ij) >= s_j - t_i.
inline long required_valuation(long source_shift, long target_shift) {
  return std::max(0L, source_shift - target_shift);
}

/// f : M -> N given by a target.rank() x source.rank() matrix, column j being
/// the image of the j-th basis vector.
class FilteredMap {
 public:
  const FilteredFreeModule& source() const { return source_; }
  const FilteredFreeModule& target() const { return target_; }
  const ElementMatrix& matrix() const { return matrix_; }
  const ValuationSpec& spec() const { return source_.spec(); }

  ElementVector apply(std::span<const FieldElement> x) const {
    source_.check_size(x);
    ElementVector y(matrix_.rows(), matrix_.zero());
    for (std::size_t i = 0; i < matrix_.rows(); ++i)
      for (std::size_t j = 0; j < matrix_.cols(); ++j) y[i] += matrix_(i, j) * x[j];
    return y;
  }

 private:
  FilteredMap(FilteredFreeModule source, FilteredFreeModule target, ElementMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}
  friend FilteredMap make_filtered_map(FilteredFreeModule, FilteredFreeModule, ElementMatrix);

  FilteredFreeModule source_;
  FilteredFreeModule target_;
  ElementMatrix matrix_;
};

/// Validates compatibility entrywise (indices in the error are 0-based).
inline FilteredMap make_filtered_map(FilteredFreeModule source, FilteredFreeModule target, ElementMatrix matrix) {
  if (!(source.spec() == target.spec())) throw std::invalid_argument("modules over different rings");
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
    throw std::invalid_argument("matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                                " but the map needs " + std::to_string(target.rank()) + "x" +
                                std::to_string(source.rank()));
  const auto& spec = source.spec();
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      const long need = required_valuation(source.shifts()[j], target.shifts()[i]);
      const ExtInt v = valuation(spec, matrix(i, j));
      if (v < ExtInt(need))
        throw CompatibilityError(i, j,
                                 "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                     matrix(i, j).str() + " has valuation " + v.str() + " < " + std::to_string(need));
    }
  return FilteredMap(std::move(source), std::move(target), std::move(matrix));
}

/// Entry (i, j) is residue(A_ij / pi^(s_j - t_i)) when v(A_ij) = s_j - t_i,
/// and 0 otherwise.
inline LeadingMatrix leading_matrix(const FilteredMap& f) {
  const auto& spec = f.spec();
  const auto& a = f.matrix();
  LeadingMatrix out(a.rows(), a.cols(), ResidueElem(spec.residue_modulus()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const long gap = f.source().shifts()[j] - f.target().shifts()[i];
      if (valuation(spec, a(i, j)) == ExtInt(gap))
        out(i, j) = residue(spec, a(i, j) * uniformizer_power(spec, -gap));
    }
  return out;
}

/// gr(f) is injective iff its leading matrix has full column rank.
///
/// In degree n, gr(M)_n has a coordinate for each j with s_j <= n. A nonzero
/// leading entry in column j forces t_i = s_j - v(A_ij) <= s_j, so each
/// degree sees whole columns of the leading matrix and the rank condition
/// over all degrees collapses to the full matrix.
inline bool gr_injective(const FilteredMap& f) { return rank(leading_matrix(f)) == f.source().rank(); }

/// U * A * V = D with U, V invertible over R and D = diag(pi^e_1, ..., 0, ...).
struct SmithForm {
  ElementMatrix u;
  ElementMatrix d;
  ElementMatrix v;
  std::vector<long> exponents;  // e_1 <= e_2 <= ... for the nonzero diagonal
};

/// Smith normal form over R. Each step moves the first entry of least
/// valuation (row-major within the remaining block) to the pivot, scales
/// it to a pure power of pi and clears its row and column.
inline SmithForm snf(const ValuationSpec& spec, const ElementMatrix& a) {
  const FieldElement zero = FieldElement::zero(spec.field());
  const FieldElement one = FieldElement::one(spec.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!in_valuation_ring(spec, a(i, j))) throw DomainError("snf entry " + a(i, j).str() + " is not in R");

  SmithForm out{ElementMatrix::identity(a.rows(), zero, one), a, ElementMatrix::identity(a.cols(), zero, one), {}};
  auto& d = out.d;
  for (std::size_t k = 0; k < std::min(d.rows(), d.cols()); ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> at;
    ExtInt best = ExtInt::infinity();
    for (std::size_t i = k; i < d.rows(); ++i)
      for (std::size_t j = k; j < d.cols(); ++j) {
        const ExtInt v = valuation(spec, d(i, j));
        if (v < best) {
          best = v;
          at = {i, j};
        }
      }
    if (!at) break;

    d.swap_rows(k, at->first);
    out.u.swap_rows(k, at->first);
    d.swap_cols(k, at->second);
    out.v.swap_cols(k, at->second);

    const long e = best.value();
    const FieldElement unit_inv = (d(k, k) * uniformizer_power(spec, -e)).inverse();
    d.scale_row(k, unit_inv);
    out.u.scale_row(k, unit_inv);

    const FieldElement pivot_inv = d(k, k).inverse();
    for (std::size_t i = k + 1; i < d.rows(); ++i) {
      if (d(i, k).is_zero()) continue;
      const FieldElement q = d(i, k) * pivot_inv;
      d.sub_row(i, k, q);
      out.u.sub_row(i, k, q);
    }
    for (std::size_t j = k + 1; j < d.cols(); ++j) {
      if (d(k, j).is_zero()) continue;
      const FieldElement q = d(k, j) * pivot_inv;
      d.sub_col(j, k, q);
      out.v.sub_col(j, k, q);
    }
    out.exponents.push_back(e);
  }
  return out;
}

/// f is injective iff A has full column rank over K, read off the SNF.
inline bool map_injective(const FilteredMap& f) {
  return snf(f.spec(), f.matrix()).exponents.size() == f.source().rank();
}

/// Rows separated by ';', entries by ',', each entry in the element grammar.
inline ElementMatrix parse_matrix(std::string_view text, const FieldSpec& spec) {
  std::vector<std::vector<FieldElement>> rows;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(';', start);
    const std::string_view row = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    std::vector<FieldElement> entries;
    std::size_t s = 0;
    for (;;) {
      const std::size_t e = row.find(',', s);
      entries.push_back(parse_element(row.substr(s, e == std::string_view::npos ? row.npos : e - s), spec));
      if (e == std::string_view::npos) break;
      s = e + 1;
    }
    if (!rows.empty() && entries.size() != rows.front().size())
      throw ParseError("matrix rows have different lengths in '" + std::string(text) + "'");
    rows.push_back(std::move(entries));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return ElementMatrix(std::move(rows), FieldElement::zero(spec));
}

inline ElementVector parse_vector(std::string_view text, const FieldSpec& spec) {
  ElementVector out;
  std::size_t s = 0;
  for (;;) {
    const std::size_t e = text.find(',', s);
    out.push_back(parse_element(text.substr(s, e == std::string_view::npos ? text.npos : e - s), spec));
    if (e == std::string_view::npos) return out;
    s = e + 1;
  }
}

/// Comma-separated integers, e.g. "0,1,-2".
inline std::vector<long> parse_shifts(std::string_view text) {
  std::vector<long> out;
  std::size_t s = 0;
  for (;;) {
    const std::size_t e = text.find(',', s);
    const std::string_view item = text.substr(s, e == std::string_view::npos ? text.npos : e - s);
    long v = 0;
    const auto* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(item.data(), last, v);
    if (item.empty() || ec != std::errc() || ptr != last) throw ParseError("bad shift '" + std::string(item) + "'");
    out.push_back(v);
    if (e == std::string_view::npos) return out;
    s = e + 1;
  }
}

inline std::string format_element_matrix(const ElementMatrix& m) {
  return format_matrix(m, [](const FieldElement& x) { return x.str(); });
}

inline std::string format_leading_matrix(const LeadingMatrix& m) {
  return format_matrix(m, [](const ResidueElem& x) { return x.str(); });
}

}  // namespace dvr
