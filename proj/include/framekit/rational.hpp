#pragma once

#include <cstdint>
#include <numeric>

#include "framekit/error.hpp"

namespace framekit {

// Exact fraction over int64 with overflow-checked arithmetic. The design
// weights and their normalization identities are evaluated here before any
// conversion to floating point.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) fail(errc::invalid_argument, "rational with zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(static_cast<__int128>(a.num) * b.den +
                            static_cast<__int128>(b.num) * a.den),
                    checked(static_cast<__int128>(a.den) * b.den));
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num, b.den);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked(static_cast<__int128>(a.num) * b.num),
                    checked(static_cast<__int128>(a.den) * b.den));
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) fail(errc::invalid_argument, "rational division by zero");
    return a * Rational(b.den, b.num);
  }

 private:
  static std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) fail(errc::overflow, "rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
  }
};

}  // namespace framekit
