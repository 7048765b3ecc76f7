#include "cni/rational.hpp"

#include "cni/errors.hpp"

namespace cni {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
  if (b.is_zero()) throw DivisionByZero("complex division by zero");
  Rational norm = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

ComplexRational pow(const ComplexRational& base, unsigned exponent) {
  ComplexRational result(1);
  ComplexRational square = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent != 0) square = square * square;
  }
  return result;
}

std::string to_string(const ComplexRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string s = to_string(z.re);
  s += z.im < 0 ? "-" : "+";
  s += to_string(Rational(abs(z.im)));
  s += "*i";
  return s;
}

}  // namespace cni
