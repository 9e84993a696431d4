#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace delcode {

// Exact rational with 64-bit numerator/denominator in lowest terms (den > 0).
// Intermediate products use 128 bits; results that do not fit throw.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT: implicit from integers is intended
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "p/r", an integer, or a finite decimal such as "0.45".
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  std::int64_t floor() const noexcept;
  std::int64_t ceil() const noexcept;
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  long double to_long_double() const noexcept {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }
  std::string str() const;

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

 private:
  static Rational from128(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace delcode
