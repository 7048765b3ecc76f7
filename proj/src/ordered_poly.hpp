#pragma once

// Polynomials as term vectors sorted descending under an arbitrary monomial
// order. Shared by division and the Buchberger loop.

#include <vector>

#include "cni/budget.hpp"
#include "cni/monomial_order.hpp"
#include "cni/polynomial.hpp"

namespace cni::detail {

using Terms = std::vector<Term>;

Terms to_ordered(const Polynomial& f, const MonomialOrder& ord);
Polynomial from_ordered(const VarTablePtr& vars, Terms terms);

/// p[from..] - c * m * g, where g is sorted under ord. When skip_lead is
/// set the leading term of g is assumed to cancel p[from] and both are
/// dropped.
Terms sub_scaled(const Terms& p, std::size_t from, const Rational& c, const Monomial& m,
                 const Terms& g, const MonomialOrder& ord, bool skip_lead);

void make_monic(Terms& p);

/// Sugar bookkeeping for reduce(): divisor_sugar parallels the divisor
/// list; sugar is raised to deg(m) + sugar(g) for every step p -= c*m*g.
struct SugarTrack {
  const std::vector<std::uint32_t>* divisor_sugar = nullptr;
  std::uint32_t sugar = 0;
};

/// Full reduction of p by the listed divisors (each nonzero, sorted under
/// ord). Picks the first divisor whose leading monomial divides the term.
Terms reduce(Terms p, const std::vector<const Terms*>& divisors, const MonomialOrder& ord,
             BudgetGuard* guard, SugarTrack* sugar = nullptr);

}  // namespace cni::detail
