#pragma once

#include <vector>

#include "euclid/func_expr.hpp"
#include "generators.hpp"

namespace euclid::testing {

using Poly = std::vector<Rational>;

inline Poly random_poly(Rng& rng, long max_degree) {
  Poly p(static_cast<std::size_t>(uniform(rng, 0, max_degree)) + 1);
  for (auto& c : p) c = small_rational(rng);
  return p;
}

/// Builds Σ cₖ·x^k as an expression tree, skipping zero terms.
inline calculus::FuncExpr poly_expr(const Poly& p) {
  using calculus::FuncExpr;
  FuncExpr f = FuncExpr::constant(p.empty() ? Rational() : p[0]);
  for (std::size_t k = 1; k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    const FuncExpr xk = k == 1 ? FuncExpr::x() : FuncExpr::x().pow(static_cast<long>(k));
    f = f + FuncExpr::constant(p[k]) * xk;
  }
  return f;
}

inline Rational horner(const Poly& p, const Rational& x) {
  Rational r;
  for (std::size_t k = p.size(); k-- > 0;) r = r * x + p[k];
  return r;
}

inline Poly formal_derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
  return d;
}

inline Poly antiderivative(const Poly& p) {
  Poly a{Rational()};
  for (std::size_t k = 0; k < p.size(); ++k) a.push_back(p[k] / Rational(static_cast<long>(k + 1)));
  return a;
}

/// Compositions of sin, cos, exp, log(1 + x²) and polynomials; analytic on ℝ.
inline calculus::FuncExpr random_analytic(Rng& rng, int depth) {
  using calculus::FuncExpr;
  if (depth == 0) return poly_expr(random_poly(rng, 3));
  const FuncExpr inner = random_analytic(rng, depth - 1);
  switch (uniform(rng, 0, 5)) {
    case 0: return calculus::sin(inner);
    case 1: return calculus::cos(inner);
    case 2: return calculus::exp(inner / FuncExpr::constant(Rational(8)));
    case 3: return calculus::log(FuncExpr::constant(1) + inner.pow(2));
    case 4: return inner * random_analytic(rng, depth - 1);
    default: return inner + random_analytic(rng, depth - 1);
  }
}

}  // namespace euclid::testing
