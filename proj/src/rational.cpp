#include "aclat/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "aclat/error.hpp"

namespace aclat {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < -std::numeric_limits<std::int64_t>::max())
    throw Error(ErrorKind::RationalOverflow, "intermediate value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational reduce(Wide num, Wide den) {
  if (den == 0) throw Error(ErrorKind::RationalOverflow, "division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw Error(ErrorKind::RationalOverflow, "zero denominator");
  if (num_ == std::numeric_limits<std::int64_t>::min() || den_ == std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::RationalOverflow, "value out of range");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return reduce(Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return reduce(Wide{a.num_} * b.den_ - Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return reduce(Wide{a.num_} * b.num_, Wide{a.den_} * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return reduce(Wide{a.num_} * b.den_, Wide{a.den_} * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto read = [](std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
  };
  std::int64_t num = 0, den = 1;
  const auto slash = text.find('/');
  if (!read(text.substr(0, slash), num)) return std::nullopt;
  if (slash != std::string_view::npos && !read(text.substr(slash + 1), den)) return std::nullopt;
  if (den == 0) return std::nullopt;
  try {
    return Rational(num, den);
  } catch (const Error&) {
    return std::nullopt;
  }
}

Rational midpoint(const Rational& a, const Rational& b) {
  return reduce(Wide{a.num()} * b.den() + Wide{b.num()} * a.den(), Wide{2} * a.den() * b.den());
}

Rational mediant(const Rational& a, const Rational& b) {
  return reduce(Wide{a.num()} + b.num(), Wide{a.den()} + b.den());
}

}  // namespace aclat
