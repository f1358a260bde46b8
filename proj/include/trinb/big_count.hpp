#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace trinb {

/// Exact nonnegative integer of unbounded size, used for all counts.
class BigCount {
 public:
  using Raw = boost::multiprecision::cpp_int;

  BigCount() = default;
  BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigCount(Raw v);

  static BigCount parse(std::string_view decimal);

  const Raw& raw() const { return value_; }

  BigCount& operator+=(const BigCount& o);
  BigCount& operator*=(const BigCount& o);
  /// Requires o <= *this.
  BigCount& operator-=(const BigCount& o);

  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
  friend BigCount operator-(BigCount a, const BigCount& b) { return a -= b; }

  /// Exact quotient; throws Error when the division leaves a remainder.
  BigCount divide_exact(const BigCount& divisor) const;

  friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b);

  bool fits_u64() const;
  std::uint64_t to_u64() const;

  std::string to_string() const;
  std::size_t digits() const;

  /// "3.76527E+51" style: `significant` digits, round half up.
  std::string to_scientific(int significant = 6) const;

 private:
  Raw value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigCount& c);

/// How a ratio num/den is rendered as a decimal string. All modes round half
/// up on the exact rational value.
struct RatioFormat {
  enum class Mode {
    fixed,        // `digits` fractional digits, trailing zeros kept
    significant,  // `digits` significant digits, trailing zeros stripped
    scientific,   // d.ddddE-xx with `digits` significant digits
  };
  Mode mode = Mode::fixed;
  int digits = 9;
};

std::string render_ratio(const BigCount& num, const BigCount& den, RatioFormat fmt);

/// Strips trailing fractional zeros (and a dangling '.') so that "0.088062900"
/// and "0.0880629" compare equal. Leaves scientific strings untouched.
std::string normalize_decimal(std::string_view s);

}  // namespace trinb
