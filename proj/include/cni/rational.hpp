#pragma once

#include <gmpxx.h>

#include <string>

namespace cni {

// GMP keeps mpq_class canonical (positive denominator, reduced) after every
// arithmetic operation; values built from a numerator/denominator pair must
// go through make_rational.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// a + b*i with exact rational parts. Used to evaluate expressions at
/// concrete point configurations.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b);
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b);
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b);
  /// Throws DivisionByZero when b is zero.
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b);
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

ComplexRational pow(const ComplexRational& base, unsigned exponent);
std::string to_string(const ComplexRational& z);

}  // namespace cni
