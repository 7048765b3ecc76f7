#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cni/polynomial.hpp"
#include "cni/rational.hpp"
#include "cni/var_table.hpp"

namespace cni {

/// Immutable expression tree over point symbols and rational constants.
/// Subtrees are shared, so copies are cheap.
class RationalExpr {
 public:
  enum class Kind { Const, PointRef, Add, Sub, Mul, Div, Pow };

  RationalExpr();  // the constant 0

  static RationalExpr constant(const Rational& value);
  static RationalExpr point(std::size_t var);

  /// Throws DivisionByZero when the denominator is the constant 0.
  friend RationalExpr operator/(const RationalExpr& num, const RationalExpr& den);
  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  /// Encoded as 0 - a.
  RationalExpr operator-() const;
  friend RationalExpr pow(const RationalExpr& base, unsigned exponent);

  Kind kind() const;
  const Rational& value() const;  // Const
  std::size_t var() const;        // PointRef
  const RationalExpr& lhs() const;
  const RationalExpr& rhs() const;
  const RationalExpr& base() const { return lhs(); }
  unsigned exponent() const;      // Pow
  bool is_negation() const;       // Sub(Const 0, x)

  /// Point variables referenced, sorted and unique.
  std::vector<std::size_t> points() const;
  bool references(std::size_t var) const;

  RationalExpr substitute(std::size_t var, const RationalExpr& replacement) const;

  /// Throws DivisionByZero when a denominator evaluates to zero.
  ComplexRational evaluate(std::span<const ComplexRational> values) const;

  /// Infix text with minimal parentheses that still reparses to the same
  /// tree, e.g. "(B-A)/(B-D)/((B-D)/(B-C))".
  std::string to_string(const VarTable& vars) const;

  friend bool operator==(const RationalExpr& a, const RationalExpr& b);

 private:
  struct Node;
  explicit RationalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static RationalExpr binary(Kind kind, const RationalExpr& a, const RationalExpr& b);
  void print(const VarTable& vars, std::string& out) const;
  int precedence() const;

  std::shared_ptr<const Node> node_;
};

/// e = num / den with the denominator of every Div node recorded once.
struct NormalizedExpr {
  Polynomial num;
  Polynomial den;
  /// Denominator polynomials of Div nodes, first occurrence kept, duplicates
  /// (up to a nonzero scalar) dropped. Constant factors are omitted.
  std::vector<Polynomial> denominator_factors;
};

/// Clears denominators bottom-up: a/(b/c) gives numerator a*c, denominator b,
/// and both b and c as factors. Points map to the same-index variables of
/// vars. Throws DivisionByZero for a denominator normalizing to zero.
NormalizedExpr expr_normalize(const RationalExpr& e, const VarTablePtr& vars);

/// Adds f to factors unless an associate is already present or f is constant.
void add_denominator_factor(std::vector<Polynomial>& factors, const Polynomial& f);

}  // namespace cni
