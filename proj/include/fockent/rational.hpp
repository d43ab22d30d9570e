#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fockent {

using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative rational number in lowest terms.
///
/// Factorial ratios such as (n-m)!/n! and n_H!/(n_H-m+k)! individually leave
/// the range of double at n ~ 120 while their products are probabilities, so
/// every analytic Fock-state quantity is carried in this type and converted to
/// floating point only at the output boundary.
class Rational {
 public:
  Rational() = default;
  Rational(unsigned long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& integer);
  Rational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const { return value_ == 0; }
  double to_double() const;
  // Natural log; finite for nonzero values even when to_double() would under/overflow.
  double log() const;
  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

 private:
  using Raw = boost::multiprecision::cpp_rational;
  explicit Rational(Raw raw) : value_(std::move(raw)) {}
  Raw value_{0};
};

/// a!/(a-k)! exactly. Throws ValidationError when k > a.
BigInt falling_factorial(unsigned a, unsigned k);

/// n! exactly.
BigInt factorial(unsigned n);

/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

}  // namespace fockent
