#pragma once

#include <string>
#include <string_view>

#include "cni/geometry.hpp"
#include "cni/polynomial.hpp"

namespace cni {

/// Parses a construction program:
///
///     # comment
///     point A, B, C
///     O := midpoint(A, B)          # also barycenter(..), parallelogram4(..)
///     X := (A + 2*B)/3             # any rational expression of earlier points
///     assume equidist(O, A, C)
///     assume real((A-O)/(O-B))     # a raw relation
///     prove perpendicular(A, C, C, B)
///
/// Throws ParseError (1-based line and column of the offending token) for
/// malformed input, and UnsupportedStep with code "niu" for an unknown
/// predicate or function, "nfiu" for a wrong argument count, "rn0u" for a
/// point-equality thesis.
Construction parse_program(std::string_view source);

/// Prints a construction so that parse_program gives it back.
std::string print_program(const Construction& c);

/// Infix expression over the names of vars: + - * / ^ (non-negative integer
/// exponent), integer literals, parentheses. Throws ParseError.
RationalExpr parse_expression(std::string_view text, const VarTable& vars);

/// Parses a polynomial printed by Polynomial::to_string. Throws ParseError
/// when the text is not a polynomial over vars.
Polynomial parse_polynomial(std::string_view text, const VarTablePtr& vars);

/// r, u and r followed by digits name algebraic variables and cannot be
/// used for points.
bool is_reserved_name(std::string_view name);

}  // namespace cni
