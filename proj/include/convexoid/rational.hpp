#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace convexoid {

using Rational = boost::rational<std::int64_t>;

/// A rational number extended with -inf and +inf.
///
/// Finite values are kept in boost's canonical reduced form, and the payload
/// of an infinity is always zero, so defaulted equality is structural.
class ExtRational {
 public:
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };

  constexpr ExtRational() = default;
  ExtRational(Rational value) : kind_(Kind::finite), value_(value) {}  // NOLINT
  ExtRational(std::int64_t value) : kind_(Kind::finite), value_(value) {}  // NOLINT
  ExtRational(int value) : kind_(Kind::finite), value_(value) {}  // NOLINT
  ExtRational(std::int64_t num, std::int64_t den) : kind_(Kind::finite), value_(num, den) {}

  static ExtRational neg_inf() { return ExtRational(Kind::neg_inf); }
  static ExtRational pos_inf() { return ExtRational(Kind::pos_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }

  const Rational& value() const {
    if (!is_finite()) throw std::logic_error("ExtRational::value() on an infinity");
    return value_;
  }

  friend bool operator==(const ExtRational&, const ExtRational&) = default;

  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (!a.is_finite() || a.value_ == b.value_) return std::strong_ordering::equal;
    return a.value_ < b.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  explicit ExtRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::finite;
  Rational value_{0};
};

inline ExtRational operator-(const ExtRational& a) {
  switch (a.kind()) {
    case ExtRational::Kind::neg_inf: return ExtRational::pos_inf();
    case ExtRational::Kind::pos_inf: return ExtRational::neg_inf();
    default: return ExtRational(-a.value());
  }
}

inline ExtRational abs(const ExtRational& a) { return a < ExtRational(0) ? -a : a; }

// Sum where +inf absorbs -inf: (+inf) + (-inf) = +inf.
inline ExtRational add_upper(const ExtRational& a, const ExtRational& b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtRational::pos_inf();
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtRational::neg_inf();
  return ExtRational(a.value() + b.value());
}

// Product with 0 * (+-inf) = 0, the usual convention for pairings.
inline ExtRational mul_zero_absorbing(const ExtRational& a, const ExtRational& b) {
  const ExtRational zero(0);
  if (a == zero || b == zero) return zero;
  if (a.is_finite() && b.is_finite()) return ExtRational(a.value() * b.value());
  const bool negative = (a < zero) != (b < zero);
  return negative ? ExtRational::neg_inf() : ExtRational::pos_inf();
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::string to_string(const ExtRational& a) {
  switch (a.kind()) {
    case ExtRational::Kind::neg_inf: return "-inf";
    case ExtRational::Kind::pos_inf: return "+inf";
    default: return to_string(a.value());
  }
}

inline std::ostream& operator<<(std::ostream& os, const ExtRational& a) { return os << to_string(a); }

namespace detail {

inline std::int64_t parse_int64(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t out = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses "-inf", "+inf" (or "inf"), an integer "n", or a fraction "p/q".
inline ExtRational parse_ext_rational(std::string_view text) {
  const std::string_view s = detail::trim(text);
  if (s == "-inf") return ExtRational::neg_inf();
  if (s == "+inf" || s == "inf") return ExtRational::pos_inf();
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return ExtRational(detail::parse_int64(s, text));
  const auto num = detail::parse_int64(s.substr(0, slash), text);
  const auto den = detail::parse_int64(s.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return ExtRational(num, den);
}

}  // namespace convexoid
