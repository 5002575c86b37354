#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "markov12/integer.hpp"

namespace markov12 {

// Always stored in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer num, Integer den);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

 private:
  void normalize();

  Integer num_;
  Integer den_;
};

Rational pow(const Rational& base, long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace markov12
