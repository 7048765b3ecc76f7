#include "cni/rational_expr.hpp"

#include <algorithm>

#include "cni/errors.hpp"

namespace cni {

struct RationalExpr::Node {
  Kind kind = Kind::Const;
  Rational value;
  std::size_t var = 0;
  unsigned exponent = 0;
  RationalExpr lhs_expr{nullptr};
  RationalExpr rhs_expr{nullptr};
};

namespace {

// Printing precedences. Negation sits between products and powers.
constexpr int kSum = 1;
constexpr int kProduct = 2;
constexpr int kNegation = 3;
constexpr int kPower = 4;
constexpr int kAtom = 5;

bool is_plain_integer(const Rational& q) { return q.get_den() == 1 && q >= 0; }

}  // namespace

RationalExpr::RationalExpr() : RationalExpr(constant(0)) {}

RationalExpr RationalExpr::constant(const Rational& value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = value;
  return RationalExpr(std::move(n));
}

RationalExpr RationalExpr::point(std::size_t var) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::PointRef;
  n->var = var;
  return RationalExpr(std::move(n));
}

RationalExpr RationalExpr::binary(Kind kind, const RationalExpr& a, const RationalExpr& b) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs_expr = a;
  n->rhs_expr = b;
  return RationalExpr(std::move(n));
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  return RationalExpr::binary(RationalExpr::Kind::Add, a, b);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
  return RationalExpr::binary(RationalExpr::Kind::Sub, a, b);
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  return RationalExpr::binary(RationalExpr::Kind::Mul, a, b);
}

RationalExpr operator/(const RationalExpr& num, const RationalExpr& den) {
  if (den.kind() == RationalExpr::Kind::Const && den.value() == 0)
    throw DivisionByZero("division by the constant 0");
  return RationalExpr::binary(RationalExpr::Kind::Div, num, den);
}

RationalExpr RationalExpr::operator-() const { return constant(0) - *this; }

RationalExpr pow(const RationalExpr& base, unsigned exponent) {
  auto n = std::make_shared<RationalExpr::Node>();
  n->kind = RationalExpr::Kind::Pow;
  n->lhs_expr = base;
  n->exponent = exponent;
  return RationalExpr(std::move(n));
}

RationalExpr::Kind RationalExpr::kind() const { return node_->kind; }
const Rational& RationalExpr::value() const { return node_->value; }
std::size_t RationalExpr::var() const { return node_->var; }
const RationalExpr& RationalExpr::lhs() const { return node_->lhs_expr; }
const RationalExpr& RationalExpr::rhs() const { return node_->rhs_expr; }
unsigned RationalExpr::exponent() const { return node_->exponent; }

bool RationalExpr::is_negation() const {
  return kind() == Kind::Sub && lhs().kind() == Kind::Const && lhs().value() == 0;
}

std::vector<std::size_t> RationalExpr::points() const {
  std::vector<std::size_t> out;
  std::vector<const RationalExpr*> stack{this};
  while (!stack.empty()) {
    const RationalExpr* e = stack.back();
    stack.pop_back();
    switch (e->kind()) {
      case Kind::Const:
        break;
      case Kind::PointRef:
        out.push_back(e->var());
        break;
      case Kind::Pow:
        stack.push_back(&e->lhs());
        break;
      default:
        stack.push_back(&e->lhs());
        stack.push_back(&e->rhs());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool RationalExpr::references(std::size_t var) const {
  auto p = points();
  return std::binary_search(p.begin(), p.end(), var);
}

RationalExpr RationalExpr::substitute(std::size_t var, const RationalExpr& replacement) const {
  switch (kind()) {
    case Kind::Const:
      return *this;
    case Kind::PointRef:
      return node_->var == var ? replacement : *this;
    case Kind::Pow:
      return pow(lhs().substitute(var, replacement), exponent());
    default:
      return binary(kind(), lhs().substitute(var, replacement), rhs().substitute(var, replacement));
  }
}

ComplexRational RationalExpr::evaluate(std::span<const ComplexRational> values) const {
  switch (kind()) {
    case Kind::Const:
      return ComplexRational(value());
    case Kind::PointRef:
      if (var() >= values.size()) throw Error("no value for point variable");
      return values[var()];
    case Kind::Add:
      return lhs().evaluate(values) + rhs().evaluate(values);
    case Kind::Sub:
      return lhs().evaluate(values) - rhs().evaluate(values);
    case Kind::Mul:
      return lhs().evaluate(values) * rhs().evaluate(values);
    case Kind::Div:
      return lhs().evaluate(values) / rhs().evaluate(values);
    case Kind::Pow:
      return pow(lhs().evaluate(values), exponent());
  }
  return {};
}

int RationalExpr::precedence() const {
  switch (kind()) {
    case Kind::Const:
      return is_plain_integer(value()) ? kAtom : kNegation;
    case Kind::PointRef:
      return kAtom;
    case Kind::Add:
      return kSum;
    case Kind::Sub:
      return is_negation() ? kNegation : kSum;
    case Kind::Mul:
    case Kind::Div:
      return kProduct;
    case Kind::Pow:
      return kPower;
  }
  return kAtom;
}

void RationalExpr::print(const VarTable& vars, std::string& out) const {
  auto child = [&](const RationalExpr& c, bool parens) {
    if (parens) out += '(';
    c.print(vars, out);
    if (parens) out += ')';
  };
  switch (kind()) {
    case Kind::Const:
      if (is_plain_integer(value()))
        out += cni::to_string(value());
      else
        out += "(" + cni::to_string(value()) + ")";
      return;
    case Kind::PointRef:
      out += vars.name(var());
      return;
    case Kind::Pow:
      child(lhs(), lhs().precedence() < kAtom);
      out += "^" + std::to_string(exponent());
      return;
    default:
      break;
  }
  if (is_negation()) {
    out += '-';
    child(rhs(), rhs().precedence() < kPower);
    return;
  }
  int p = precedence();
  char op = kind() == Kind::Add ? '+' : kind() == Kind::Sub ? '-' : kind() == Kind::Mul ? '*' : '/';
  child(lhs(), lhs().precedence() < p);
  out += op;
  // Right operands keep their own grouping; negations are always wrapped.
  child(rhs(), rhs().precedence() <= p || rhs().is_negation());
}

std::string RationalExpr::to_string(const VarTable& vars) const {
  std::string out;
  print(vars, out);
  return out;
}

bool operator==(const RationalExpr& a, const RationalExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RationalExpr::Kind::Const:
      return a.value() == b.value();
    case RationalExpr::Kind::PointRef:
      return a.var() == b.var();
    case RationalExpr::Kind::Pow:
      return a.exponent() == b.exponent() && a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

void add_denominator_factor(std::vector<Polynomial>& factors, const Polynomial& f) {
  if (f.is_constant()) return;
  for (const auto& g : factors)
    if (associates(f, g)) return;
  factors.push_back(f);
}

namespace {

NormalizedExpr normalize(const RationalExpr& e, const VarTablePtr& vars) {
  using Kind = RationalExpr::Kind;
  auto one = Polynomial::constant(vars, 1);
  switch (e.kind()) {
    case Kind::Const:
      return {Polynomial::constant(vars, e.value()), one, {}};
    case Kind::PointRef:
      return {Polynomial::variable(vars, e.var()), one, {}};
    case Kind::Pow: {
      auto b = normalize(e.lhs(), vars);
      return {pow(b.num, e.exponent()), pow(b.den, e.exponent()), std::move(b.denominator_factors)};
    }
    default:
      break;
  }
  auto l = normalize(e.lhs(), vars);
  auto r = normalize(e.rhs(), vars);
  NormalizedExpr out{Polynomial(vars), Polynomial(vars), std::move(l.denominator_factors)};
  for (const auto& f : r.denominator_factors) add_denominator_factor(out.denominator_factors, f);
  switch (e.kind()) {
    case Kind::Add:
    case Kind::Sub: {
      bool add = e.kind() == Kind::Add;
      if (l.den == r.den) {
        out.num = add ? l.num + r.num : l.num - r.num;
        out.den = l.den;
      } else {
        out.num = add ? l.num * r.den + r.num * l.den : l.num * r.den - r.num * l.den;
        out.den = l.den * r.den;
      }
      break;
    }
    case Kind::Mul:
      out.num = l.num * r.num;
      out.den = l.den * r.den;
      break;
    case Kind::Div:
      if (r.num.is_zero()) throw DivisionByZero("denominator " + e.rhs().to_string(*vars) + " is identically zero");
      add_denominator_factor(out.denominator_factors, r.num);
      out.num = l.num * r.den;
      out.den = l.den * r.num;
      break;
    default:
      break;
  }
  return out;
}

}  // namespace

NormalizedExpr expr_normalize(const RationalExpr& e, const VarTablePtr& vars) {
  for (std::size_t p : e.points())
    if (!vars || p >= vars->size()) throw Error("expression references an unknown variable");
  return normalize(e, vars);
}

}  // namespace cni
