#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace exchg {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper around GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }
  explicit Rational(mpq_class&& value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const { return value_.get_str(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_), Canonical{}); }

  Rational& operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
  }
  Rational& operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
  }
  Rational& operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
  }
  Rational& operator/=(const Rational& other);

  /// this += a * b and this -= a * b without a temporary Rational.
  Rational& add_product(const Rational& a, const Rational& b);
  Rational& sub_product(const Rational& a, const Rational& b);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct Canonical {};
  Rational(mpq_class&& value, Canonical) : value_(std::move(value)) {}

  mpq_class value_;
};

Rational abs(const Rational& r);

}  // namespace exchg
