#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace minorstar {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always kept normalized: gcd(num, den) == 1 and den > 0. Every arithmetic
/// operation is overflow-checked and throws std::overflow_error instead of
/// wrapping, so a result is either exact or absent.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit from integer
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }

  [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
  [[nodiscard]] constexpr bool is_negative() const { return num_ < 0; }
  [[nodiscard]] constexpr bool is_positive() const { return num_ > 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t da = a.den_ / g;
    const std::int64_t db = b.den_ / g;
    return from_parts(add(mul(a.num_, db), mul(b.num_, da)), mul(a.den_, db));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const std::int64_t s1 = g1 == 0 ? 1 : g1;
    const std::int64_t s2 = g2 == 0 ? 1 : g2;
    return from_parts(mul(a.num_ / s1, b.num_ / s2), mul(a.den_ / s2, b.den_ / s1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * Rational(b.den_, b.num_);
  }
  Rational operator-() const {
    if (num_ == INT64_MIN) throw std::overflow_error("rational negation overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // den > 0 on both sides, so cross-multiplication preserves order.
    return mul(a.num_, b.den_) <=> mul(b.num_, a.den_);
  }

  /// "p/q" with q printed even when it is 1.
  [[nodiscard]] std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Accepts "p", "p/q" or "-p/q".
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    auto to_int = [&](std::string_view part) {
      if (part.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      std::size_t used = 0;
      const std::string s(part);
      long long v = 0;
      try {
        v = std::stoll(s, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      }
      if (used != s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      return static_cast<std::int64_t>(v);
    };
    if (slash == std::string_view::npos) return Rational(to_int(text));
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational multiplication overflow");
    return r;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational addition overflow");
    return r;
  }
  static Rational from_parts(std::int64_t n, std::int64_t d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
  }
  void normalize() {
    if (den_ < 0) {
      if (num_ == INT64_MIN || den_ == INT64_MIN) throw std::overflow_error("rational sign overflow");
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace minorstar
