#include "cni/geometry.hpp"

#include <algorithm>
#include <set>

#include "cni/errors.hpp"

namespace cni {

namespace {

struct PredicateInfo {
  PredicateKind kind;
  const char* keyword;
  std::size_t arity;
};

constexpr PredicateInfo kPredicates[] = {
    {PredicateKind::Collinear, "collinear", 3},   {PredicateKind::Parallel, "parallel", 4},
    {PredicateKind::Perpendicular, "perpendicular", 4}, {PredicateKind::Equidistant, "equidist", 3},
    {PredicateKind::AngleEqual, "angle_eq", 6},  {PredicateKind::Concyclic, "concyclic", 4},
};

struct DeclarationInfo {
  DeclarationKind kind;
  const char* keyword;
  std::size_t arity;
};

constexpr DeclarationInfo kDeclarations[] = {
    {DeclarationKind::Midpoint, "midpoint", 2},
    {DeclarationKind::Barycenter, "barycenter", 3},
    {DeclarationKind::Parallelogram4, "parallelogram4", 3},
};

const PredicateInfo& info(PredicateKind k) {
  for (const auto& p : kPredicates)
    if (p.kind == k) return p;
  throw Error("unknown predicate kind");
}

const DeclarationInfo& info(DeclarationKind k) {
  for (const auto& d : kDeclarations)
    if (d.kind == k) return d;
  throw Error("unknown declaration kind");
}

void require_distinct(const std::vector<std::size_t>& a, std::initializer_list<std::pair<int, int>> pairs,
                      PredicateKind k) {
  for (auto [i, j] : pairs)
    if (a[i] == a[j])
      throw ConstructionError(std::string(info(k).keyword) + ": arguments " + std::to_string(i + 1) +
                              " and " + std::to_string(j + 1) + " must be different points");
}

void require_pairwise_distinct(const std::vector<std::size_t>& a, PredicateKind k) {
  std::set<std::size_t> seen(a.begin(), a.end());
  if (seen.size() != a.size())
    throw ConstructionError(std::string(info(k).keyword) + ": arguments must be pairwise different points");
}

RationalExpr P(std::size_t i) { return RationalExpr::point(i); }

}  // namespace

Predicate make_predicate(PredicateKind kind, std::vector<std::size_t> args) {
  if (args.size() != info(kind).arity)
    throw ConstructionError(std::string(info(kind).keyword) + " takes " + std::to_string(info(kind).arity) +
                            " points");
  switch (kind) {
    case PredicateKind::Collinear:
    case PredicateKind::Equidistant:
    case PredicateKind::Concyclic:
      require_pairwise_distinct(args, kind);
      break;
    case PredicateKind::Parallel:
    case PredicateKind::Perpendicular:
      require_distinct(args, {{0, 1}, {2, 3}}, kind);
      break;
    case PredicateKind::AngleEqual:
      require_distinct(args, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}, kind);
      break;
  }
  return Predicate{kind, std::move(args)};
}

Predicate collinear(std::size_t p, std::size_t q, std::size_t r) {
  return make_predicate(PredicateKind::Collinear, {p, q, r});
}
Predicate parallel(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  return make_predicate(PredicateKind::Parallel, {p, q, r, s});
}
Predicate perpendicular(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  return make_predicate(PredicateKind::Perpendicular, {p, q, r, s});
}
Predicate equidistant(std::size_t o, std::size_t p, std::size_t q) {
  return make_predicate(PredicateKind::Equidistant, {o, p, q});
}
Predicate angle_equal(std::size_t p1, std::size_t q1, std::size_t r1, std::size_t p2, std::size_t q2,
                      std::size_t r2) {
  return make_predicate(PredicateKind::AngleEqual, {p1, q1, r1, p2, q2, r2});
}
Predicate concyclic(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return make_predicate(PredicateKind::Concyclic, {a, b, c, d});
}

std::size_t predicate_arity(PredicateKind kind) { return info(kind).arity; }
const char* predicate_keyword(PredicateKind kind) { return info(kind).keyword; }

std::optional<PredicateKind> predicate_from_keyword(std::string_view word) {
  for (const auto& p : kPredicates)
    if (word == p.keyword) return p.kind;
  return std::nullopt;
}

std::vector<RationalExpr> predicate_exprs(const Predicate& p) {
  const auto& a = p.args;
  switch (p.kind) {
    case PredicateKind::Collinear:
      return {(P(a[0]) - P(a[1])) / (P(a[1]) - P(a[2]))};
    case PredicateKind::Parallel:
      return {(P(a[0]) - P(a[1])) / (P(a[2]) - P(a[3]))};
    case PredicateKind::Perpendicular:
      return {pow((P(a[0]) - P(a[1])) / (P(a[2]) - P(a[3])), 2)};
    case PredicateKind::Equidistant: {
      auto O = P(a[0]), A = P(a[1]), C = P(a[2]);
      return {((A - C) / (A - O)) / ((C - O) / (C - A))};
    }
    case PredicateKind::AngleEqual:
      return {((P(a[1]) - P(a[0])) / (P(a[1]) - P(a[2]))) / ((P(a[4]) - P(a[3])) / (P(a[4]) - P(a[5])))};
    case PredicateKind::Concyclic: {
      auto A = P(a[0]), B = P(a[1]), C = P(a[2]), D = P(a[3]);
      return {((A - C) * (B - D)) / ((A - D) * (B - C))};
    }
  }
  return {};
}

std::string describe_predicate(const Predicate& p, const VarTable& points, bool latex) {
  auto n = [&](std::size_t i) { return points.name(p.args[i]); };
  auto list = [&]() {
    std::string s;
    for (std::size_t i = 0; i < p.args.size(); ++i) s += (i ? ", " : "") + n(i);
    return s;
  };
  switch (p.kind) {
    case PredicateKind::Collinear:
      return list() + " are collinear";
    case PredicateKind::Parallel:
      return n(0) + n(1) + (latex ? " $\\parallel$ " : " ∥ ") + n(2) + n(3);
    case PredicateKind::Perpendicular:
      return n(0) + n(1) + (latex ? " $\\perp$ " : " ⊥ ") + n(2) + n(3);
    case PredicateKind::Equidistant:
      return n(0) + n(1) + " = " + n(0) + n(2);
    case PredicateKind::AngleEqual: {
      std::string angle = latex ? "$\\angle$" : "∠";
      return angle + n(0) + n(1) + n(2) + " = " + angle + n(3) + n(4) + n(5);
    }
    case PredicateKind::Concyclic:
      return list() + " are concyclic";
  }
  return {};
}

std::string predicate_caveat(PredicateKind kind) {
  switch (kind) {
    case PredicateKind::Perpendicular:
      return "The squared direction ratio is real for perpendicular and for parallel lines alike, so "
             "only \"perpendicular or parallel\" is established.";
    case PredicateKind::Equidistant:
      return "Equal distances are encoded by equal base angles of an isosceles triangle; the encoding "
             "also holds when the three points are collinear.";
    case PredicateKind::Concyclic:
      return "The cross-ratio is real for four concyclic points and also for four collinear points.";
    default:
      return {};
  }
}

std::size_t declaration_arity(DeclarationKind kind) { return info(kind).arity; }
const char* declaration_keyword(DeclarationKind kind) { return info(kind).keyword; }

std::optional<DeclarationKind> declaration_from_keyword(std::string_view word) {
  for (const auto& d : kDeclarations)
    if (word == d.keyword) return d.kind;
  return std::nullopt;
}

RationalExpr declarative_expr(const Declaration& d) {
  if (d.args.size() != info(d.kind).arity)
    throw ConstructionError(std::string(info(d.kind).keyword) + " takes " +
                            std::to_string(info(d.kind).arity) + " points");
  const auto& a = d.args;
  switch (d.kind) {
    case DeclarationKind::Midpoint:
      return (P(a[0]) + P(a[1])) / RationalExpr::constant(2);
    case DeclarationKind::Barycenter:
      return (P(a[0]) + P(a[1]) + P(a[2])) / RationalExpr::constant(3);
    case DeclarationKind::Parallelogram4:
      return P(a[0]) + P(a[2]) - P(a[1]);
  }
  return {};
}

Construction::Construction() : points_(std::make_shared<VarTable>()) {}

std::size_t Construction::add_point(const std::string& name) {
  auto t = std::make_shared<VarTable>(*points_);
  if (t->index_of(name)) throw ConstructionError("point " + name + " is already defined");
  std::size_t id = t->add(name, VarKind::PointVar);
  points_ = std::move(t);
  return id;
}

std::size_t Construction::add_free_point(const std::string& name) {
  std::size_t id = add_point(name);
  free_points_.push_back(id);
  return id;
}

void Construction::check_refs(const RationalExpr& e, std::size_t limit) const {
  for (std::size_t p : e.points())
    if (p >= limit) throw ConstructionError("reference to a point that is not defined yet");
}

std::size_t Construction::add_declared_point(const std::string& name, const RationalExpr& definition,
                                             std::optional<Declaration> sugar, std::size_t line) {
  check_refs(definition, points_->size());
  std::size_t id = add_point(name);
  steps_.push_back(DeclarativeStep{id, definition, std::move(sugar), line});
  return id;
}

std::size_t Construction::add_declared_point(const std::string& name, const Declaration& d, std::size_t line) {
  return add_declared_point(name, declarative_expr(d), d, line);
}

void Construction::assume(const Predicate& p, std::size_t line) {
  auto exprs = predicate_exprs(p);
  for (const auto& e : exprs) check_refs(e, points_->size());
  steps_.push_back(RelationalStep{std::move(exprs), {}, p, line});
}

void Construction::assume_real(const RationalExpr& e, std::size_t line) {
  check_refs(e, points_->size());
  steps_.push_back(RelationalStep{{e}, {}, std::nullopt, line});
}

void Construction::prove(const Predicate& p, std::size_t line) {
  if (thesis_) throw ConstructionError("a construction has exactly one thesis");
  auto exprs = predicate_exprs(p);
  if (exprs.size() != 1) throw ConstructionError("a thesis must be a single expression");
  check_refs(exprs.front(), points_->size());
  thesis_ = Thesis{exprs.front(), std::nullopt, p, line};
}

void Construction::prove_real(const RationalExpr& e, std::size_t line) {
  if (thesis_) throw ConstructionError("a construction has exactly one thesis");
  check_refs(e, points_->size());
  thesis_ = Thesis{e, std::nullopt, std::nullopt, line};
}

std::size_t Construction::point(const std::string& name) const {
  auto i = points_->index_of(name);
  if (!i) throw ConstructionError("unknown point " + name);
  return *i;
}

bool Construction::is_declared(std::size_t point) const {
  return std::find(free_points_.begin(), free_points_.end(), point) == free_points_.end();
}

bool operator==(const Construction& a, const Construction& b) {
  return *a.points_ == *b.points_ && a.free_points_ == b.free_points_ && a.steps_ == b.steps_ &&
         a.thesis_ == b.thesis_ && a.inlined_ == b.inlined_;
}

Construction substitute_declaratives(const Construction& c) {
  Construction out;
  out.points_ = c.points_;
  out.free_points_ = c.free_points_;
  out.inlined_ = c.inlined_;

  std::vector<std::pair<std::size_t, RationalExpr>> defs;
  auto inline_all = [&](RationalExpr e) {
    for (const auto& [p, d] : defs) e = e.substitute(p, d);
    return e;
  };
  for (const auto& step : c.steps_) {
    if (const auto* d = std::get_if<DeclarativeStep>(&step)) {
      defs.emplace_back(d->point, inline_all(d->definition));
      out.inlined_.push_back(*d);
      continue;
    }
    RelationalStep r = std::get<RelationalStep>(step);
    std::vector<RationalExpr> subst;
    for (const auto& e : r.relations) subst.push_back(inline_all(e));
    if (subst != r.relations && r.originals.empty()) r.originals = r.relations;
    r.relations = std::move(subst);
    out.steps_.push_back(std::move(r));
  }
  if (c.thesis_) {
    Thesis t = *c.thesis_;
    RationalExpr e = inline_all(t.expr);
    if (!(e == t.expr) && !t.original) t.original = t.expr;
    t.expr = e;
    out.thesis_ = std::move(t);
  }
  return out;
}

std::vector<Polynomial> PolynomialSystem::generators() const {
  std::vector<Polynomial> out = hypothesis_polys;
  if (rabinowitsch_poly) out.push_back(*rabinowitsch_poly);
  return out;
}

EliminationInput PolynomialSystem::elimination_input() const {
  if (equivalent) return *equivalent;
  return {hypothesis_polys, denominator_factors, eliminate_vars};
}

PolynomialSystem build_system(const Construction& c) {
  for (const auto& step : c.steps())
    if (std::holds_alternative<DeclarativeStep>(step))
      throw ConstructionError("declarative steps must be inlined before building the system");
  if (!c.thesis()) throw ConstructionError("missing thesis");

  PolynomialSystem sys;
  for (const auto& step : c.steps()) {
    const auto& r = std::get<RelationalStep>(step);
    for (std::size_t i = 0; i < r.relations.size(); ++i) {
      Slack s;
      s.original = r.originals.empty() ? r.relations[i] : r.originals[i];
      s.substituted = r.relations[i];
      s.source = r.source;
      sys.slacks.push_back(std::move(s));
    }
  }
  {
    Slack s;
    s.original = c.thesis()->original ? *c.thesis()->original : c.thesis()->expr;
    s.substituted = c.thesis()->expr;
    s.source = c.thesis()->source;
    s.thesis = true;
    sys.slacks.push_back(std::move(s));
  }

  // Denominators decide whether u exists, so normalize once over the points.
  std::vector<Polynomial> factors;
  for (const auto& s : sys.slacks) {
    auto n = expr_normalize(s.substituted, c.points());
    for (const auto& f : n.denominator_factors) add_denominator_factor(factors, f);
  }

  auto table = std::make_shared<VarTable>(*c.points());
  std::optional<std::size_t> u;
  try {
    if (!factors.empty()) u = table->add("u", VarKind::Rabinowitsch);
    for (std::size_t i = 0; i + 1 < sys.slacks.size(); ++i) {
      sys.slacks[i].name = "r" + std::to_string(i + 1);
      sys.slacks[i].var = table->add(sys.slacks[i].name, VarKind::RealSlack);
    }
    sys.slacks.back().name = "r";
    sys.slacks.back().var = table->add("r", VarKind::RealSlack);
  } catch (const Error& e) {
    throw ConstructionError(std::string("point names clash with reserved variables: ") + e.what());
  }
  sys.vars = table;
  sys.thesis_var = sys.slacks.back().var;

  for (const auto& s : sys.slacks) {
    auto n = expr_normalize(s.substituted, sys.vars);
    sys.hypothesis_polys.push_back(n.num - Polynomial::variable(sys.vars, s.var) * n.den);
    for (const auto& f : n.denominator_factors) add_denominator_factor(sys.denominator_factors, f);
  }
  if (u) {
    Polynomial prod = Polynomial::constant(sys.vars, 1);
    for (const auto& f : sys.denominator_factors) prod = prod * f;
    sys.rabinowitsch_poly = prod * Polynomial::variable(sys.vars, *u) - Polynomial::constant(sys.vars, 1);
  }

  sys.eliminate_vars = c.free_points();
  if (u) sys.eliminate_vars.push_back(*u);
  for (const auto& s : sys.slacks) sys.keep_vars.push_back(s.var);
  std::sort(sys.keep_vars.begin(), sys.keep_vars.end());

  for (const auto& d : c.inlined())
    sys.declarations.push_back(c.points()->name(d.point) + ":=" + d.definition.to_string(*c.points()));
  return sys;
}

namespace {

// Checks e(a*z+b) == e(z) with fresh symbols a and b (a fixed to 1 for pure
// translations).
bool invariant_under(const RationalExpr& e, const VarTablePtr& vars, bool scale) {
  auto t = std::make_shared<VarTable>(*vars);
  std::size_t a = t->add("#a", VarKind::PointVar);
  std::size_t b = t->add("#b", VarKind::PointVar);
  VarTablePtr ext = t;
  auto n = expr_normalize(e, ext);
  Polynomial num = n.num, den = n.den;
  Polynomial A = scale ? Polynomial::variable(ext, a) : Polynomial::constant(ext, 1);
  Polynomial B = Polynomial::variable(ext, b);
  for (std::size_t p : e.points()) {
    Polynomial image = A * Polynomial::variable(ext, p) + B;
    num = num.substitute(p, image);
    den = den.substitute(p, image);
  }
  return num * n.den == n.num * den;
}

}  // namespace

bool affine_invariant(const RationalExpr& e, const VarTablePtr& vars) { return invariant_under(e, vars, true); }

bool translation_invariant(const RationalExpr& e, const VarTablePtr& vars) {
  return invariant_under(e, vars, false);
}

PolynomialSystem fix_coordinates(const PolynomialSystem& sys, const Construction& c, FixMode mode) {
  if (mode == FixMode::Off) return sys;
  if (!sys.fixed.empty()) throw Error("coordinates are already fixed");

  std::vector<Rational> values = mode == FixMode::ZeroOne ? std::vector<Rational>{0, 1}
                                                           : std::vector<Rational>{-1, 1};
  PolynomialSystem out = sys;
  out.equivalent.reset();
  std::size_t count = std::min<std::size_t>(2, c.free_points().size());
  for (std::size_t i = 0; i < count; ++i) out.fixed.push_back({c.free_points()[i], values[i]});
  if (out.fixed.empty()) return out;

  auto apply = [&](Polynomial f) {
    for (const auto& fx : out.fixed) f = f.substitute(fx.point, Polynomial::constant(sys.vars, fx.value));
    return f;
  };
  for (auto& p : out.hypothesis_polys) p = apply(p);
  out.denominator_factors.clear();
  for (const auto& f : sys.denominator_factors) {
    Polynomial g = apply(f);
    if (g.is_zero())
      throw ConstructionError("fixing coordinates makes the denominator " + f.to_string() + " vanish");
    add_denominator_factor(out.denominator_factors, g);
  }
  if (sys.rabinowitsch_poly) {
    auto u = sys.vars->rabinowitsch();
    Polynomial prod = Polynomial::constant(sys.vars, 1);
    for (const auto& f : out.denominator_factors) prod = prod * f;
    out.rabinowitsch_poly = prod * Polynomial::variable(sys.vars, *u) - Polynomial::constant(sys.vars, 1);
  }
  std::erase_if(out.eliminate_vars, [&](std::size_t v) {
    return std::any_of(out.fixed.begin(), out.fixed.end(), [&](const FixedCoordinate& f) { return f.point == v; });
  });

  bool two = out.fixed.size() == 2;
  bool invariant = std::all_of(sys.slacks.begin(), sys.slacks.end(), [&](const Slack& s) {
    return two ? affine_invariant(s.substituted, c.points()) : translation_invariant(s.substituted, c.points());
  });
  if (invariant) {
    EliminationInput eq = sys.elimination_input();
    if (two) {
      Polynomial d = Polynomial::variable(sys.vars, out.fixed[0].point) -
                     Polynomial::variable(sys.vars, out.fixed[1].point);
      add_denominator_factor(eq.saturate_by, d);
    }
    out.equivalent = std::move(eq);
  }
  return out;
}

}  // namespace cni
