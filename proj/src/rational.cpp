#include "fockent/rational.hpp"

#include "fockent/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fockent {

namespace {

double log_of(const BigInt& x) {
  // x > 0. Keep the top 64 bits and account for the rest as a power of two.
  const auto bits = static_cast<long>(boost::multiprecision::msb(x)) + 1;
  if (bits <= 64) return std::log(x.convert_to<double>());
  const long shift = bits - 64;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

}  // namespace

Rational::Rational(const BigInt& integer) : value_(integer) {
  if (integer < 0) throw ValidationError("negative value in nonnegative rational");
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw ValidationError("zero denominator");
  if (numerator < 0 || denominator < 0) throw ValidationError("negative value in nonnegative rational");
  value_ = Raw(numerator, denominator);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValidationError("division by zero rational");
  value_ /= o.value_;
  return *this;
}

double Rational::to_double() const {
  if (is_zero()) return 0.0;
  const BigInt num = numerator();
  const BigInt den = denominator();
  // Scale so the integer quotient carries ~70 significant bits, then undo the
  // scale with ldexp; avoids overflow when num and den are both huge.
  const long num_bits = static_cast<long>(boost::multiprecision::msb(num)) + 1;
  const long den_bits = static_cast<long>(boost::multiprecision::msb(den)) + 1;
  const long shift = 70 - (num_bits - den_bits);
  BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt((num >> -shift) / den);
  return std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
}

double Rational::log() const {
  if (is_zero()) return -INFINITY;
  return log_of(numerator()) - log_of(denominator());
}

std::string Rational::to_string() const {
  const BigInt den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

BigInt falling_factorial(unsigned a, unsigned k) {
  if (k > a) {
    throw ValidationError("falling factorial " + std::to_string(a) + "!/(" + std::to_string(a) +
                          "-" + std::to_string(k) + ")! has k > a");
  }
  BigInt result = 1;
  for (unsigned j = a - k + 1; j <= a; ++j) result *= j;
  return result;
}

BigInt factorial(unsigned n) { return falling_factorial(n, n); }

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

}  // namespace fockent
