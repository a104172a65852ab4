#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace factorlab {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
///
/// Monoid elements are nonnegative; polynomial coefficients may be negative,
/// so the type itself is signed and callers that need Q+ validate the sign.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: integers convert freely
  Rational(const mpz_class& value) : value_(value) {}  // NOLINT
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "n" or "n/d" (optionally with a leading '-'). Rejects
  /// malformed text, a zero denominator and fractions not in lowest terms.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  mpz_class floor() const;
  Rational reciprocal() const;

  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  mpq_class value_;
};

mpz_class lcm(const mpz_class& a, const mpz_class& b);

/// Largest v with p^v dividing the rational q, i.e. q = p^v * a/b with
/// p coprime to a and b. Requires q != 0 and p prime.
long padic_valuation(const Rational& q, std::uint64_t p);

bool is_prime(std::uint64_t p);

}  // namespace factorlab
