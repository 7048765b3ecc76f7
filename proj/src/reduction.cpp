#include "cni/reduction.hpp"

#include <algorithm>

#include "cni/errors.hpp"
#include "ordered_poly.hpp"

namespace cni {
namespace detail {

Terms to_ordered(const Polynomial& f, const MonomialOrder& ord) {
  if (f.nvars() != ord.nvars()) throw Error("monomial order does not match the variable table");
  Terms t = f.terms();
  std::stable_sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.monomial, b.monomial) > 0;
  });
  return t;
}

Polynomial from_ordered(const VarTablePtr& vars, Terms terms) {
  return Polynomial::from_terms(vars, std::move(terms));
}

Terms sub_scaled(const Terms& p, std::size_t from, const Rational& c, const Monomial& m,
                 const Terms& g, const MonomialOrder& ord, bool skip_lead) {
  Terms out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from + (skip_lead ? 1 : 0);
  std::size_t j = skip_lead ? 1 : 0;
  Monomial gm;
  bool have_gm = false;
  while (i < p.size() || j < g.size()) {
    if (j < g.size() && !have_gm) {
      gm = g[j].monomial * m;
      have_gm = true;
    }
    int cmp;
    if (i == p.size())
      cmp = -1;
    else if (j == g.size())
      cmp = 1;
    else
      cmp = ord.compare(p[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -(c * g[j].coeff)});
      ++j;
      have_gm = false;
    } else {
      Rational s = p[i].coeff - c * g[j].coeff;
      if (s != 0) out.push_back({gm, std::move(s)});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

void make_monic(Terms& p) {
  if (p.empty() || p.front().coeff == 1) return;
  Rational inv = 1 / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

Terms reduce(Terms p, const std::vector<const Terms*>& divisors, const MonomialOrder& ord,
             BudgetGuard* guard, SugarTrack* sugar) {
  Terms rem;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Term& lt = p[pos];
    const Terms* hit = nullptr;
    std::size_t k = 0;
    for (; k < divisors.size(); ++k) {
      if (divisors[k]->front().monomial.divides(lt.monomial)) {
        hit = divisors[k];
        break;
      }
    }
    if (hit == nullptr) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    if (guard) guard->tick();
    Rational c = lt.coeff / hit->front().coeff;
    Monomial m = lt.monomial / hit->front().monomial;
    if (sugar && sugar->divisor_sugar)
      sugar->sugar = std::max(sugar->sugar, m.degree() + (*sugar->divisor_sugar)[k]);
    p = sub_scaled(p, pos, c, m, *hit, ord, true);
    pos = 0;
  }
  return rem;
}

}  // namespace detail

Division divide(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& ord) {
  using namespace detail;
  std::vector<Terms> divisors;
  for (const auto& g : G) divisors.push_back(to_ordered(g, ord));

  std::vector<Terms> quotients(G.size());
  Terms p = to_ordered(f, ord);
  Terms rem;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Term& lt = p[pos];
    std::size_t k = 0;
    for (; k < divisors.size(); ++k)
      if (!divisors[k].empty() && divisors[k].front().monomial.divides(lt.monomial)) break;
    if (k == divisors.size()) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    Rational c = lt.coeff / divisors[k].front().coeff;
    Monomial m = lt.monomial / divisors[k].front().monomial;
    quotients[k].push_back({m, c});
    p = sub_scaled(p, pos, c, m, divisors[k], ord, true);
    pos = 0;
  }

  Division out{{}, from_ordered(f.vars(), std::move(rem))};
  for (auto& q : quotients) out.quotients.push_back(from_ordered(f.vars(), std::move(q)));
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& ord) {
  using namespace detail;
  std::vector<Terms> ordered;
  for (const auto& g : G) {
    if (!same_table(f.vars(), g.vars())) throw VarTableMismatch();
    if (!g.is_zero()) ordered.push_back(to_ordered(g, ord));
  }
  std::vector<const Terms*> divisors;
  for (const auto& t : ordered) divisors.push_back(&t);
  return from_ordered(f.vars(), reduce(to_ordered(f, ord), divisors, ord, nullptr));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw Error("s-polynomial of a zero polynomial");
  const Term& lf = f.leading_term(ord);
  const Term& lg = g.leading_term(ord);
  Monomial L = lcm(lf.monomial, lg.monomial);
  Polynomial a = (1 / lf.coeff) * (f * (L / lf.monomial));
  Polynomial b = (1 / lg.coeff) * (g * (L / lg.monomial));
  return a - b;
}

}  // namespace cni
