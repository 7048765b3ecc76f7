#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace cni {

/// Upper bound on the number of variables of one variable table.
inline constexpr std::size_t kMaxVariables = 64;

/// Power product of the variables of a table. Exponents are stored densely
/// (one slot per table variable) so comparisons and divisibility tests run
/// without allocation; support() gives the sparse view.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);

  static Monomial variable(std::size_t nvars, std::size_t var, Exponent exponent = 1);

  std::size_t nvars() const { return nvars_; }
  Exponent exponent(std::size_t var) const { return exps_[var]; }
  void set_exponent(std::size_t var, Exponent e);

  /// Sum of the exponents.
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// (variable, exponent) pairs with nonzero exponent, by increasing index.
  std::vector<std::pair<std::size_t, Exponent>> support() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b);

  const Exponent* data() const { return exps_.data(); }

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint32_t nvars_ = 0;
};

/// Degree-reverse-lexicographic comparison in table order (variable 0 is the
/// largest). Fixes the storage order of polynomial terms.
int canonical_compare(const Monomial& a, const Monomial& b);

}  // namespace cni
