#include "factorlab/rational.hpp"

#include <cctype>
#include <ostream>

#include "factorlab/error.hpp"

namespace factorlab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw invalid_argument("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text))
    throw parse_error("malformed rational '" + std::string(text) + "'");

  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1 && !(num == 0 && den == 1))
    throw parse_error("rational '" + std::string(text) + "' is not in lowest terms");
  if (negative) {
    if (num == 0) throw parse_error("malformed rational '" + std::string(text) + "'");
    num = -num;
  }
  return Rational(num, den);
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw invalid_argument("reciprocal of zero");
  return Rational(den(), num());
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw invalid_argument("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
    if (d > 1'000'000) {
      mpz_class big(std::to_string(p), 10);
      return mpz_probab_prime_p(big.get_mpz_t(), 40) != 0;
    }
  }
  return true;
}

long padic_valuation(const Rational& q, std::uint64_t p) {
  if (q.is_zero()) throw invalid_argument("valuation of zero is undefined");
  if (!is_prime(p)) throw invalid_argument("valuation base " + std::to_string(p) + " is not prime");
  mpz_class prime(std::to_string(p), 10);
  mpz_class scratch;
  mpz_class num = abs(q.num());
  long up = static_cast<long>(mpz_remove(scratch.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t()));
  long down = static_cast<long>(mpz_remove(scratch.get_mpz_t(), q.den().get_mpz_t(), prime.get_mpz_t()));
  return up - down;
}

}  // namespace factorlab
