#include "cni/polynomial.hpp"

#include <algorithm>

#include "cni/errors.hpp"

namespace cni {

namespace {

bool term_greater(const Term& a, const Term& b) {
  return canonical_compare(a.monomial, b.monomial) > 0;
}

// Sorts and merges like monomials, dropping zero coefficients.
std::vector<Term> normalize_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

std::vector<Term> merge_terms(const std::vector<Term>& f, const std::vector<Term>& g, bool negate_g) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < f.size() || j < g.size()) {
    int c;
    if (i == f.size())
      c = -1;
    else if (j == g.size())
      c = 1;
    else
      c = canonical_compare(f[i].monomial, g[j].monomial);
    if (c > 0) {
      out.push_back(f[i++]);
    } else if (c < 0) {
      out.push_back(g[j]);
      if (negate_g) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational s = negate_g ? Rational(f[i].coeff - g[j].coeff) : Rational(f[i].coeff + g[j].coeff);
      if (s != 0) out.push_back({f[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw Error("polynomial without a variable table");
}

Polynomial::Polynomial(VarTablePtr vars, std::vector<Term> sorted_terms, bool)
    : vars_(std::move(vars)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(VarTablePtr vars, const Rational& c) {
  Polynomial p(std::move(vars));
  if (c != 0) p.terms_.push_back({Monomial(p.nvars()), c});
  return p;
}

Polynomial Polynomial::variable(VarTablePtr vars, std::size_t var) {
  Polynomial p(std::move(vars));
  if (var >= p.nvars()) throw Error("variable index out of range");
  p.terms_.push_back({Monomial::variable(p.nvars(), var), Rational(1)});
  return p;
}

Polynomial Polynomial::variable(VarTablePtr vars, std::string_view name) {
  auto idx = vars ? vars->index_of(name) : std::nullopt;
  if (!idx) throw Error("unknown variable '" + std::string(name) + "'");
  return variable(std::move(vars), *idx);
}

Polynomial Polynomial::from_terms(VarTablePtr vars, std::vector<Term> terms) {
  Polynomial p(std::move(vars));
  for (const auto& t : terms)
    if (t.monomial.nvars() != p.nvars()) throw Error("monomial size does not match table");
  p.terms_ = normalize_terms(std::move(terms));
  return p;
}

std::optional<Rational> Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].monomial.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

std::uint32_t Polynomial::total_degree() const {
  // Canonical order is graded, so the first term has the largest degree.
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max<std::uint32_t>(d, t.monomial.exponent(var));
  return d;
}

std::vector<std::size_t> Polynomial::variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars(); ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (ord.compare(t.monomial, best->monomial) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::coefficient(std::size_t var, unsigned exponent) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial.exponent(var) != exponent) continue;
    Monomial m = t.monomial;
    m.set_exponent(var, 0);
    out.push_back({m, t.coeff});
  }
  return from_terms(vars_, std::move(out));
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  check_same_table(value);
  std::uint32_t d = degree_in(var);
  if (d == 0) return *this;
  std::vector<Polynomial> powers{constant(vars_, 1)};
  for (std::uint32_t k = 1; k <= d; ++k) powers.push_back(powers.back() * value);
  Polynomial out(vars_);
  for (const auto& t : terms_) {
    Monomial rest = t.monomial;
    unsigned e = rest.exponent(var);
    rest.set_exponent(var, 0);
    out = out + (t.coeff * (powers[e] * rest));
  }
  return out;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coeff(ord);
  return inv * *this;
}

Polynomial Polynomial::primitive(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : terms_) {
    num_gcd = gcd(num_gcd, t.coeff.get_num());
    den_lcm = lcm(den_lcm, t.coeff.get_den());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading_coeff(ord) < 0) scale = -scale;
  return scale * *this;
}

ComplexRational Polynomial::evaluate(std::span<const ComplexRational> values) const {
  if (values.size() != nvars()) throw Error("evaluation needs one value per variable");
  ComplexRational sum;
  for (const auto& t : terms_) {
    ComplexRational prod(t.coeff);
    for (const auto& [v, e] : t.monomial.support()) prod = prod * pow(values[v], e);
    sum = sum + prod;
  }
  return sum;
}

void Polynomial::check_same_table(const Polynomial& other) const {
  if (!same_table(vars_, other.vars_)) throw VarTableMismatch();
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff = -x.coeff;
  return Polynomial(vars_, std::move(t), true);
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  f.check_same_table(g);
  return Polynomial(f.vars_, merge_terms(f.terms_, g.terms_, false), true);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  f.check_same_table(g);
  return Polynomial(f.vars_, merge_terms(f.terms_, g.terms_, true), true);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_same_table(g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.vars_);
  std::vector<Term> prod;
  prod.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) prod.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  return Polynomial(f.vars_, normalize_terms(std::move(prod)), true);
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
  if (c == 0) return Polynomial(f.vars_);
  std::vector<Term> t = f.terms_;
  for (auto& x : t) x.coeff *= c;
  return Polynomial(f.vars_, std::move(t), true);
}

Polynomial operator*(const Polynomial& f, const Monomial& m) {
  // Multiplying by a monomial preserves canonical order.
  std::vector<Term> t = f.terms_;
  for (auto& x : t) x.monomial = x.monomial * m;
  return Polynomial(f.vars_, std::move(t), true);
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return same_table(f.vars_, g.vars_) && f.terms_ == g.terms_;
}

Polynomial pow(const Polynomial& f, unsigned exponent) {
  Polynomial result = Polynomial::constant(f.vars(), 1);
  Polynomial square = f;
  while (exponent != 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent != 0) square = square * square;
  }
  return result;
}

Polynomial poly_arith(PolyOp op, const Polynomial& f, const Polynomial& g) {
  switch (op) {
    case PolyOp::Add:
      return f + g;
    case PolyOp::Sub:
      return f - g;
    case PolyOp::Mul:
      return f * g;
  }
  return f;
}

std::string term_to_string(const VarTable& vars, const Monomial& m, const Rational& c, bool leading) {
  std::string s;
  Rational mag = abs(c);
  if (c < 0)
    s += "-";
  else if (!leading)
    s += "+";
  if (m.is_one()) return s + to_string(mag);
  if (mag != 1) s += to_string(mag) + "*";
  bool first = true;
  for (const auto& [v, e] : m.support()) {
    if (!first) s += "*";
    first = false;
    s += vars.name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string Polynomial::to_string(const MonomialOrder& ord) const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Term* a, const Term* b) {
    return ord.compare(a->monomial, b->monomial) > 0;
  });
  std::string s;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    s += term_to_string(*vars_, sorted[i]->monomial, sorted[i]->coeff, i == 0);
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    s += term_to_string(*vars_, terms_[i].monomial, terms_[i].coeff, i == 0);
  return s;
}

bool associates(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  auto ord = MonomialOrder::grevlex(f.nvars());
  return f.primitive(ord) == g.primitive(ord);
}

}  // namespace cni
