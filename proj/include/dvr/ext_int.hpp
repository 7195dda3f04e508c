#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace dvr {

/// An integer or +infinity. Infinity absorbs addition and dominates every
/// integer; it is a distinct state, never a sentinel value.
class ExtInt {
 public:
  constexpr ExtInt(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr ExtInt infinity() { return ExtInt(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }

  long value() const {
    if (!value_) throw std::domain_error("infinite ExtInt has no integer value");
    return *value_;
  }

  friend constexpr ExtInt operator+(const ExtInt& a, const ExtInt& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtInt(*a.value_ + *b.value_);
  }

  friend constexpr bool operator==(const ExtInt&, const ExtInt&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
  }

  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

 private:
  constexpr ExtInt() = default;
  std::optional<long> value_;
};

inline ExtInt min(const ExtInt& a, const ExtInt& b) { return b < a ? b : a; }

}  // namespace dvr
