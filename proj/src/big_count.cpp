#include "trinb/big_count.hpp"

#include <algorithm>
#include <limits>
#include <cctype>
#include <ostream>

#include "trinb/error.hpp"

namespace trinb {

namespace {

using Raw = BigCount::Raw;

Raw pow10(int k) {
  Raw r = 1;
  for (int i = 0; i < k; ++i) r *= 10;
  return r;
}

// q = round_half_up(num / den), both positive.
Raw divide_round(const Raw& num, const Raw& den) {
  Raw q = num / den;
  Raw rem = num - q * den;
  if (2 * rem >= den) ++q;
  return q;
}

std::string exponent_suffix(int e) {
  std::string s = e < 0 ? "E-" : "E+";
  int a = e < 0 ? -e : e;
  if (a < 10) s += '0';
  s += std::to_string(a);
  return s;
}

// Place a decimal point so that `frac` digits follow it.
std::string with_point(const std::string& digits, int frac) {
  if (frac <= 0) return digits;
  std::string d = digits;
  if (static_cast<int>(d.size()) <= frac) d.insert(0, static_cast<std::size_t>(frac) + 1 - d.size(), '0');
  d.insert(d.size() - static_cast<std::size_t>(frac), ".");
  return d;
}

// floor(log10(num/den)) for num, den > 0.
int decimal_exponent(const Raw& num, const Raw& den) {
  int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
  // Adjust so that den*10^e <= num < den*10^(e+1).
  auto scaled_le = [&](int k) {
    // den * 10^k <= num ?
    if (k >= 0) return den * pow10(k) <= num;
    return den <= num * pow10(-k);
  };
  while (!scaled_le(e)) --e;
  while (scaled_le(e + 1)) ++e;
  return e;
}

}  // namespace

BigCount::BigCount(Raw v) : value_(std::move(v)) {
  if (value_ < 0) throw Error("BigCount cannot be negative");
}

BigCount BigCount::parse(std::string_view decimal) {
  if (decimal.empty() || !std::all_of(decimal.begin(), decimal.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("not a nonnegative decimal integer: '" + std::string(decimal) + "'");
  return BigCount(Raw(std::string(decimal)));
}

BigCount& BigCount::operator+=(const BigCount& o) {
  value_ += o.value_;
  return *this;
}

BigCount& BigCount::operator*=(const BigCount& o) {
  value_ *= o.value_;
  return *this;
}

BigCount& BigCount::operator-=(const BigCount& o) {
  if (o.value_ > value_) throw Error("BigCount subtraction would go negative");
  value_ -= o.value_;
  return *this;
}

BigCount BigCount::divide_exact(const BigCount& divisor) const {
  if (divisor.value_ == 0) throw Error("division by zero");
  Raw q = value_ / divisor.value_;
  if (q * divisor.value_ != value_)
    throw Error("inexact division: " + to_string() + " / " + divisor.to_string());
  return BigCount(std::move(q));
}

std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool BigCount::fits_u64() const { return value_ <= Raw(std::numeric_limits<std::uint64_t>::max()); }

std::uint64_t BigCount::to_u64() const {
  if (!fits_u64()) throw Error("count does not fit in 64 bits: " + to_string());
  return value_.convert_to<std::uint64_t>();
}

std::string BigCount::to_string() const { return value_.str(); }

std::size_t BigCount::digits() const { return value_.str().size(); }

std::string BigCount::to_scientific(int significant) const {
  if (value_ == 0) return "0" + exponent_suffix(0);
  return render_ratio(*this, BigCount(1), {RatioFormat::Mode::scientific, significant});
}

std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.to_string(); }

std::string render_ratio(const BigCount& num_c, const BigCount& den_c, RatioFormat fmt) {
  const Raw& num = num_c.raw();
  const Raw& den = den_c.raw();
  if (den == 0) throw Error("ratio with zero denominator");
  if (fmt.digits < 0 || (fmt.mode != RatioFormat::Mode::fixed && fmt.digits < 1))
    throw Error("invalid ratio precision");

  if (num == 0) {
    if (fmt.mode == RatioFormat::Mode::fixed) return with_point(std::string(static_cast<std::size_t>(fmt.digits) + 1, '0'), fmt.digits);
    if (fmt.mode == RatioFormat::Mode::scientific) return with_point(std::string(static_cast<std::size_t>(fmt.digits), '0'), fmt.digits - 1) + exponent_suffix(0);
    return "0";
  }

  switch (fmt.mode) {
    case RatioFormat::Mode::fixed: {
      Raw q = divide_round(num * pow10(fmt.digits), den);
      return with_point(q.str(), fmt.digits);
    }
    case RatioFormat::Mode::significant: {
      int e = decimal_exponent(num, den);
      int frac = fmt.digits - 1 - e;
      std::string s;
      if (frac >= 0) {
        s = with_point(divide_round(num * pow10(frac), den).str(), frac);
      } else {
        Raw q = divide_round(num, den * pow10(-frac));
        s = (q * pow10(-frac)).str();
      }
      return normalize_decimal(s);
    }
    case RatioFormat::Mode::scientific: {
      int e = decimal_exponent(num, den);
      int shift = fmt.digits - 1 - e;
      Raw mant = shift >= 0 ? divide_round(num * pow10(shift), den) : divide_round(num, den * pow10(-shift));
      if (mant >= pow10(fmt.digits)) {
        mant /= 10;
        ++e;
      }
      return with_point(mant.str(), fmt.digits - 1) + exponent_suffix(e);
    }
  }
  return {};
}

std::string normalize_decimal(std::string_view s) {
  std::string out(s);
  if (out.find_first_of("eE") != std::string::npos) return out;
  auto dot = out.find('.');
  if (dot == std::string::npos) return out;
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

}  // namespace trinb
