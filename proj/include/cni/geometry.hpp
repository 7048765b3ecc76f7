#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cni/polynomial.hpp"
#include "cni/rational_expr.hpp"
#include "cni/var_table.hpp"

namespace cni {

enum class PredicateKind { Collinear, Parallel, Perpendicular, Equidistant, AngleEqual, Concyclic };

/// A geometric relation over point indices. Build through the named
/// constructors, which reject degenerate argument lists.
struct Predicate {
  PredicateKind kind = PredicateKind::Collinear;
  std::vector<std::size_t> args;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

Predicate collinear(std::size_t p, std::size_t q, std::size_t r);
Predicate parallel(std::size_t p, std::size_t q, std::size_t r, std::size_t s);
Predicate perpendicular(std::size_t p, std::size_t q, std::size_t r, std::size_t s);
/// |OP| = |OQ|, read off the base angles of the isosceles triangle OPQ.
Predicate equidistant(std::size_t o, std::size_t p, std::size_t q);
/// Angle P1 Q1 R1 equals angle P2 Q2 R2 (vertices Q1, Q2).
Predicate angle_equal(std::size_t p1, std::size_t q1, std::size_t r1, std::size_t p2, std::size_t q2,
                      std::size_t r2);
Predicate concyclic(std::size_t a, std::size_t b, std::size_t c, std::size_t d);

/// Validates arity and distinctness; throws ConstructionError.
Predicate make_predicate(PredicateKind kind, std::vector<std::size_t> args);

std::size_t predicate_arity(PredicateKind kind);
/// DSL keyword: "collinear", "parallel", "perpendicular", "equidist",
/// "angle_eq", "concyclic".
const char* predicate_keyword(PredicateKind kind);
std::optional<PredicateKind> predicate_from_keyword(std::string_view word);

/// Expressions that are all real exactly when the predicate holds (up to
/// the degenerate cases noted by predicate_caveat).
std::vector<RationalExpr> predicate_exprs(const Predicate& p);

/// Short statement of the relation, e.g. "EF ∥ GH". LaTeX variant uses
/// math-mode macros.
std::string describe_predicate(const Predicate& p, const VarTable& points, bool latex = false);

/// What a proof of this predicate actually establishes when that is weaker
/// than the predicate itself; empty otherwise.
std::string predicate_caveat(PredicateKind kind);

enum class DeclarationKind { Midpoint, Barycenter, Parallelogram4 };

struct Declaration {
  DeclarationKind kind = DeclarationKind::Midpoint;
  std::vector<std::size_t> args;

  friend bool operator==(const Declaration&, const Declaration&) = default;
};

std::size_t declaration_arity(DeclarationKind kind);
const char* declaration_keyword(DeclarationKind kind);
std::optional<DeclarationKind> declaration_from_keyword(std::string_view word);

/// midpoint (P+Q)/2, barycenter (P+Q+R)/3, parallelogram4 P+R-Q (the
/// vertex opposite Q).
RationalExpr declarative_expr(const Declaration& d);

/// X := definition. `sugar` remembers the named form it came from.
struct DeclarativeStep {
  std::size_t point = 0;
  RationalExpr definition;
  std::optional<Declaration> sugar;
  std::size_t line = 0;

  /// Structural; source lines are ignored.
  friend bool operator==(const DeclarativeStep& a, const DeclarativeStep& b) {
    return a.point == b.point && a.definition == b.definition && a.sugar == b.sugar;
  }
};

/// Each relation must be real. `source` is the predicate the relations were
/// generated from, if any.
struct RelationalStep {
  std::vector<RationalExpr> relations;
  /// The relations before declarations were inlined; empty when nothing
  /// was inlined.
  std::vector<RationalExpr> originals;
  std::optional<Predicate> source;
  std::size_t line = 0;

  friend bool operator==(const RelationalStep& a, const RelationalStep& b) {
    return a.relations == b.relations && a.originals == b.originals && a.source == b.source;
  }
};

using ConstructionStep = std::variant<DeclarativeStep, RelationalStep>;

struct Thesis {
  RationalExpr expr;
  std::optional<RationalExpr> original;
  std::optional<Predicate> source;
  std::size_t line = 0;

  friend bool operator==(const Thesis& a, const Thesis& b) {
    return a.expr == b.expr && a.original == b.original && a.source == b.source;
  }
};

/// Points, construction steps and one thesis. Points are numbered in
/// creation order; every step may only mention points created before it.
class Construction {
 public:
  Construction();

  std::size_t add_free_point(const std::string& name);
  /// Throws ConstructionError when the definition mentions a point that does
  /// not exist yet.
  std::size_t add_declared_point(const std::string& name, const RationalExpr& definition,
                                 std::optional<Declaration> sugar = std::nullopt, std::size_t line = 0);
  std::size_t add_declared_point(const std::string& name, const Declaration& d, std::size_t line = 0);

  void assume(const Predicate& p, std::size_t line = 0);
  /// A raw relation, real by hypothesis.
  void assume_real(const RationalExpr& e, std::size_t line = 0);
  void prove(const Predicate& p, std::size_t line = 0);
  void prove_real(const RationalExpr& e, std::size_t line = 0);

  /// Table of point names; indices are point ids.
  const VarTablePtr& points() const { return points_; }
  std::size_t point(const std::string& name) const;
  const std::vector<std::size_t>& free_points() const { return free_points_; }
  const std::vector<ConstructionStep>& steps() const { return steps_; }
  const std::optional<Thesis>& thesis() const { return thesis_; }
  bool is_declared(std::size_t point) const;

  /// Declarations inlined by substitute_declaratives, in construction order.
  const std::vector<DeclarativeStep>& inlined() const { return inlined_; }

  friend bool operator==(const Construction& a, const Construction& b);

 private:
  friend Construction substitute_declaratives(const Construction& c);
  void check_refs(const RationalExpr& e, std::size_t limit) const;

  std::size_t add_point(const std::string& name);

  VarTablePtr points_;
  std::vector<std::size_t> free_points_;
  std::vector<ConstructionStep> steps_;
  std::optional<Thesis> thesis_;
  std::vector<DeclarativeStep> inlined_;
};

/// Inlines every declarative point into later definitions, relations and the
/// thesis; the result has only relational steps over free points.
Construction substitute_declaratives(const Construction& c);

/// One slack variable and the relation it stands for.
struct Slack {
  std::size_t var = 0;
  std::string name;
  /// As written, over possibly declared points.
  RationalExpr original;
  /// After inlining declarations; only free points remain.
  RationalExpr substituted;
  std::optional<Predicate> source;
  bool thesis = false;
};

struct FixedCoordinate {
  std::size_t point = 0;
  Rational value;
};

/// Polynomials whose elimination ideal equals that of a PolynomialSystem,
/// in a form cheaper to eliminate: denominators are given as saturation
/// factors instead of a Rabinowitsch polynomial.
struct EliminationInput {
  std::vector<Polynomial> polys;
  std::vector<Polynomial> saturate_by;
  std::vector<std::size_t> eliminate_vars;
};

/// Variables are the construction's points (same indices), then u when any
/// denominator exists, then r1, r2, ... for the hypotheses and r for the
/// thesis.
struct PolynomialSystem {
  VarTablePtr vars;
  /// One cleared polynomial per slack, thesis last.
  std::vector<Polynomial> hypothesis_polys;
  /// u * (product of denominator_factors) - 1.
  std::optional<Polynomial> rabinowitsch_poly;
  std::vector<Polynomial> denominator_factors;
  std::vector<std::size_t> eliminate_vars;
  std::vector<std::size_t> keep_vars;
  std::size_t thesis_var = 0;
  /// In table order: r1, r2, ..., r.
  std::vector<Slack> slacks;
  /// Declarations as "E:=(A+B)/2".
  std::vector<std::string> declarations;
  std::vector<FixedCoordinate> fixed;
  /// Set by fix_coordinates when the relations are affine invariant: the
  /// unfixed system, saturated additionally by the difference of the two
  /// fixed points, has the same elimination ideal and is far cheaper.
  std::optional<EliminationInput> equivalent;

  /// All polynomials, Rabinowitsch last.
  std::vector<Polynomial> generators() const;
  /// What the prover eliminates: `equivalent` when set, else the
  /// hypothesis polynomials saturated by the denominator factors.
  EliminationInput elimination_input() const;
  const Slack& thesis_slack() const { return slacks.back(); }
};

/// Clears e_i - r_i for every relation and e - r for the thesis; collects
/// and deduplicates denominators. Declaratives must already be inlined.
/// Throws ConstructionError without a thesis, DivisionByZero for an
/// identically zero denominator.
PolynomialSystem build_system(const Construction& c);

enum class FixMode { ZeroOne, MinusOneOne, Off };

/// Substitutes the first two free points by 0, 1 (or -1, 1). With fewer free
/// points, fixes those available.
PolynomialSystem fix_coordinates(const PolynomialSystem& sys, const Construction& c, FixMode mode);

/// True when e(a*z+b) = e(z) identically for a != 0.
bool affine_invariant(const RationalExpr& e, const VarTablePtr& vars);
/// True when e(z+b) = e(z) identically.
bool translation_invariant(const RationalExpr& e, const VarTablePtr& vars);

}  // namespace cni
