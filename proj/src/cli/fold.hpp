#pragma once

#include "euclid/func_expr.hpp"

namespace euclid::cli {

/// Value of a function expression without x. Throws DomainError and
/// DivisionByZero from the real operations, and Unsupported for x or for
/// dirichlet at a point of unknown rationality.
calculus::SymReal fold(const calculus::FuncExpr& f);

}  // namespace euclid::cli
