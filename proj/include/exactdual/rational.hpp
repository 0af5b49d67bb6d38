#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exactdual {

using Integer = mpz_class;

/// Exact rational number kept in canonical form: the denominator is strictly
/// positive, the sign lives on the numerator and gcd(|num|, den) = 1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const Integer& value) : num_(value), den_(1) {}

  /// Reduced n/d. A zero denominator yields 0, mirroring the inverse-of-zero
  /// convention so every operation stays total.
  static Rat make(Integer n, Integer d);

  /// Accepts "n", "n/d", "-n/d" with optional surrounding whitespace.
  /// Unreduced input is normalized; "n/0" is rejected.
  static Rat parse(std::string_view text);

  [[nodiscard]] const Integer& num() const { return num_; }
  [[nodiscard]] const Integer& den() const { return den_; }

  [[nodiscard]] int sign() const { return sgn(num_); }
  [[nodiscard]] bool is_zero() const { return num_ == 0; }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }

  [[nodiscard]] Rat inverse() const;
  [[nodiscard]] Rat pow(unsigned long exponent) const;
  [[nodiscard]] Rat abs() const;

  /// "num/den", with "/den" omitted when den = 1.
  [[nodiscard]] std::string str() const;

  /// Decimal rendering rounded half away from zero to `digits` fractional
  /// digits. Trailing zeros are kept so the width is stable.
  [[nodiscard]] std::string to_decimal(int digits = 6) const;

  [[nodiscard]] double to_double() const;

  Rat& operator+=(const Rat& other);
  Rat& operator-=(const Rat& other);
  Rat& operator*=(const Rat& other);
  Rat& operator/=(const Rat& other);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a);

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  struct Raw {};
  Rat(Raw, Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat mk_rat(const Integer& n, const Integer& d) { return Rat::make(n, d); }

/// Nonnegative rational, used as an LP weight.
class NNRat {
 public:
  NNRat() = default;
  explicit NNRat(Rat value) : value_(std::move(value)) {
    if (value_.sign() < 0) {
      throw std::domain_error("NNRat: negative value " + value_.str());
    }
  }
  NNRat(long value) : NNRat(Rat(value)) {}  // NOLINT(google-explicit-constructor)

  [[nodiscard]] const Rat& value() const { return value_; }
  [[nodiscard]] bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const NNRat&, const NNRat&) = default;

 private:
  Rat value_;
};

}  // namespace exactdual
