#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cni/monomial.hpp"
#include "cni/monomial_order.hpp"
#include "cni/rational.hpp"
#include "cni/var_table.hpp"

namespace cni {

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted descending by canonical_compare with no zero
/// coefficients, so equal polynomials have equal term vectors. The zero
/// polynomial has no terms. All values are immutable once built.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarTablePtr vars);

  static Polynomial constant(VarTablePtr vars, const Rational& c);
  static Polynomial variable(VarTablePtr vars, std::size_t var);
  static Polynomial variable(VarTablePtr vars, std::string_view name);
  /// Sums like monomials and drops zeros; input order is irrelevant.
  static Polynomial from_terms(VarTablePtr vars, std::vector<Term> terms);

  const VarTablePtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  std::optional<Rational> constant_value() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool contains(std::size_t var) const { return degree_in(var) > 0; }
  /// Variables that occur, by increasing index.
  std::vector<std::size_t> variables() const;

  /// Greatest term under ord. The polynomial must be nonzero.
  const Term& leading_term(const MonomialOrder& ord) const;
  const Monomial& leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).monomial; }
  const Rational& leading_coeff(const MonomialOrder& ord) const { return leading_term(ord).coeff; }

  /// Coefficient of var^exponent, as a polynomial free of var.
  Polynomial coefficient(std::size_t var, unsigned exponent) const;
  /// Replace var by value everywhere.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;

  /// Divide by the leading coefficient under ord.
  Polynomial monic(const MonomialOrder& ord) const;
  /// Integer coefficients with gcd 1 and a positive leading coefficient
  /// under ord. Associates (nonzero scalar multiples) share this form.
  Polynomial primitive(const MonomialOrder& ord) const;

  ComplexRational evaluate(std::span<const ComplexRational> values) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Rational& c, const Polynomial& f);
  friend Polynomial operator*(const Polynomial& f, const Monomial& m);

  friend bool operator==(const Polynomial& f, const Polynomial& g);

  /// CAS-style text, "r1*r-r1-4*r": terms descending under ord, explicit
  /// "*" between factors, "^" for powers.
  std::string to_string(const MonomialOrder& ord) const;
  /// Same, in storage (canonical) order.
  std::string to_string() const;

 private:
  Polynomial(VarTablePtr vars, std::vector<Term> sorted_terms, bool);
  void check_same_table(const Polynomial& other) const;

  VarTablePtr vars_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& f, unsigned exponent);

/// Exact arithmetic dispatcher: add, sub and mul take a polynomial operand,
/// pow takes an exponent.
enum class PolyOp { Add, Sub, Mul };
Polynomial poly_arith(PolyOp op, const Polynomial& f, const Polynomial& g);

/// CAS-style rendering of a monomial with a coefficient, e.g. "-4*r".
std::string term_to_string(const VarTable& vars, const Monomial& m, const Rational& c, bool leading);

/// True when f and g differ by a nonzero rational factor.
bool associates(const Polynomial& f, const Polynomial& g);

}  // namespace cni
