#pragma once

// Shared fixtures for the test binaries: seeded generators, an exact complex
// evaluator written independently of the library, and loaders for the
// sample programs.

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cni/dsl.hpp"
#include "cni/groebner.hpp"
#include "cni/polynomial.hpp"
#include "cni/prover.hpp"
#include "cni/rational_expr.hpp"

#ifndef CNI_SAMPLES_DIR
#error "CNI_SAMPLES_DIR must point at the samples directory"
#endif

namespace cni::test {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }
  Rational rational(int span = 9) {
    int den = uniform(1, 5);
    return make_rational(uniform(-span, span), den);
  }
  Rational nonzero_rational(int span = 9) {
    for (;;) {
      Rational q = rational(span);
      if (q != 0) return q;
    }
  }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform(0, static_cast<int>(xs.size()) - 1))];
  }

 private:
  std::mt19937_64 gen_;
};

inline Monomial random_monomial(Rng& rng, std::size_t nvars, unsigned max_degree) {
  Monomial m(nvars);
  unsigned budget = static_cast<unsigned>(rng.uniform(0, static_cast<int>(max_degree)));
  while (budget > 0) {
    std::size_t v = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(nvars) - 1));
    m.set_exponent(v, static_cast<Monomial::Exponent>(m.exponent(v) + 1));
    --budget;
  }
  return m;
}

/// Up to max_terms terms of total degree <= max_degree, small coefficients.
inline Polynomial random_poly(Rng& rng, const VarTablePtr& vars, unsigned max_degree, int max_terms,
                              int span = 5) {
  std::vector<Term> terms;
  int n = rng.uniform(1, max_terms);
  for (int i = 0; i < n; ++i)
    terms.push_back({random_monomial(rng, vars->size(), max_degree), Rational(rng.uniform(-span, span))});
  return Polynomial::from_terms(vars, std::move(terms));
}

inline Polynomial random_nonzero_poly(Rng& rng, const VarTablePtr& vars, unsigned max_degree, int max_terms) {
  for (;;) {
    Polynomial p = random_poly(rng, vars, max_degree, max_terms);
    if (!p.is_zero()) return p;
  }
}

/// Gaussian rationals, kept apart from ComplexRational on purpose.
struct Gauss {
  mpq_class re = 0;
  mpq_class im = 0;

  friend Gauss operator+(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gauss operator-(const Gauss& a, const Gauss& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gauss operator*(const Gauss& a, const Gauss& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gauss operator/(const Gauss& a, const Gauss& b) {
    mpq_class n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  bool zero() const { return re == 0 && im == 0; }
  friend bool operator==(const Gauss&, const Gauss&) = default;
};

/// Walks the tree through its public accessors only.
inline Gauss eval(const RationalExpr& e, const std::vector<Gauss>& at) {
  using K = RationalExpr::Kind;
  switch (e.kind()) {
    case K::Const: return {e.value(), 0};
    case K::PointRef: return at.at(e.var());
    case K::Add: return eval(e.lhs(), at) + eval(e.rhs(), at);
    case K::Sub: return eval(e.lhs(), at) - eval(e.rhs(), at);
    case K::Mul: return eval(e.lhs(), at) * eval(e.rhs(), at);
    case K::Div: return eval(e.lhs(), at) / eval(e.rhs(), at);
    case K::Pow: {
      Gauss acc{1, 0};
      Gauss b = eval(e.base(), at);
      for (unsigned i = 0; i < e.exponent(); ++i) acc = acc * b;
      return acc;
    }
  }
  return {};
}

inline Gauss eval(const Polynomial& p, const std::vector<Gauss>& at) {
  Gauss sum;
  for (const auto& t : p.terms()) {
    Gauss prod{t.coeff, 0};
    for (auto [v, e] : t.monomial.support())
      for (unsigned i = 0; i < e; ++i) prod = prod * at.at(v);
    sum = sum + prod;
  }
  return sum;
}

inline std::vector<Gauss> random_points(Rng& rng, std::size_t n) {
  std::vector<Gauss> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({rng.rational(), rng.rational()});
  return pts;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string sample_path(const std::string& name) { return std::string(CNI_SAMPLES_DIR) + "/" + name; }
inline std::string sample_text(const std::string& name) { return read_text(sample_path(name)); }
inline Construction sample(const std::string& name) { return parse_program(sample_text(name)); }

/// The five worked examples in their usual order.
inline const std::vector<std::string>& worked_examples() {
  static const std::vector<std::string> names = {"thales_converse.cni", "thales_midpoint.cni", "medians.cni",
                                                 "varignon.cni", "angle_bisectors.cni"};
  return names;
}

inline Polynomial poly(const std::string& text, const VarTablePtr& vars) { return parse_polynomial(text, vars); }

inline Polynomial var(const VarTablePtr& vars, const std::string& name) { return Polynomial::variable(vars, name); }

/// Table of the elimination result's polynomials.
inline const VarTablePtr& table_of(const EliminationResult& I) { return I.generators.front().vars(); }

inline std::vector<std::string> strings(const std::vector<Polynomial>& ps, const MonomialOrder& ord) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(ord));
  return out;
}

}  // namespace cni::test
