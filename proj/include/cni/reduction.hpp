#pragma once

#include <span>
#include <vector>

#include "cni/budget.hpp"
#include "cni/monomial_order.hpp"
#include "cni/polynomial.hpp"

namespace cni {

/// Result of multivariate division: f = sum(quotients[i] * G[i]) + remainder.
struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Full multivariate division of f by G under ord. No monomial of the
/// remainder is divisible by a leading monomial of G. The first divisor (in
/// list order) whose leading monomial divides the current term is used.
Division divide(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& ord);

/// Remainder of divide(). Zero polynomials in G are ignored.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& ord);

/// (L/lt(f))*f - (L/lt(g))*g with L = lcm of the leading monomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

}  // namespace cni
