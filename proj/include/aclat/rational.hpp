#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace aclat {

/// Exact reduced fraction over 64-bit integers. Arithmetic that would not fit
/// throws RationalOverflow instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_dyadic() const noexcept { return (den_ & (den_ - 1)) == 0; }
  bool in_unit_interval() const noexcept { return num_ >= 0 && num_ <= den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  /// Accepts "p", "p/q" and "-p/q"; nullopt on malformed input or q = 0.
  static std::optional<Rational> parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational midpoint(const Rational& a, const Rational& b);
/// (a.num + b.num) / (a.den + b.den)
Rational mediant(const Rational& a, const Rational& b);

}  // namespace aclat
