#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "euclid/error.hpp"
#include "euclid/expansion.hpp"
#include "euclid/func_expr.hpp"
#include "euclid/number.hpp"
#include "euclid/symreal.hpp"

namespace euclid::calculus {

class NotPolynomial : public Error {
 public:
  explicit NotPolynomial(const std::string& what) : Error("not-polynomial", what) {}
};

class NotGridPoint : public Error {
 public:
  explicit NotGridPoint(const std::string& what) : Error("not-grid-point", what) {}
};

/// A center that is not a uniquely determined real, e.g. ctr(sin(α^2)).
struct Indeterminate {
  std::string expression;
  std::string reason;
};

struct DerivResult {
  std::variant<SymReal, Indeterminate> v;

  bool is_value() const { return std::holds_alternative<SymReal>(v); }
  const SymReal& value() const { return std::get<SymReal>(v); }
  const Indeterminate& indeterminate() const { return std::get<Indeterminate>(v); }
  std::string str() const;
};

/// Same real value, or identical indeterminate expressions.
bool same_result(const DerivResult& a, const DerivResult& b);

/// f(x₀); at a removable singularity the common finite center of
/// f(x₀ ± η). Throws Pole otherwise.
SymReal value_at(const FuncExpr& f, const SymReal& x0);

/// ctr((f(x₀+η) − f(x₀))/η).
DerivResult d_plus(const FuncExpr& f, const SymReal& x0, long order = 4);
/// ctr((f(x₀) − f(x₀−η))/η).
DerivResult d_minus(const FuncExpr& f, const SymReal& x0, long order = 4);
/// ctr((f(x₀+η) − f(x₀−η))/(2η)).
DerivResult d_mean(const FuncExpr& f, const SymReal& x0, long order = 4);
/// d_plus on the uniform α-grid; throws NotGridPoint for irrational x₀.
DerivResult grid_d_plus(const FuncExpr& f, const SymReal& x0, long order = 4);

struct Derivability {
  /// D f(x₀) = D⁺f(x₀) and both are reals.
  bool derivable;
  /// D f(x₀) and D⁺f(x₀) are the identical indeterminate expression.
  bool indeterminate;
  explicit operator bool() const { return derivable; }
};

Derivability is_derivable(const FuncExpr& f, const SymReal& x0);

struct Differentiability {
  bool differentiable;
  /// df(x₀)[t] = slope·t when differentiable.
  std::optional<SymReal> slope;
  std::string reason;
  explicit operator bool() const { return differentiable; }
};

/// f(x₀+ε) = f(x₀) + c·ε + o(ε) with one real c for both signs of ε and
/// for rational and irrational x₀+ε.
Differentiability is_differentiable(const FuncExpr& f, const SymReal& x0);

/// Bernoulli number with B₁ = −1/2.
Rational bernoulli(unsigned long n);

/// Σ_{k=0}^{n−1} k^m as a polynomial identity evaluated at n.
EuclideanNumber power_sum_below(unsigned long m, const EuclideanNumber& n);

/// Σ_{k=1}^{upper} p(k) for p given by rational coefficients p₀..p_d.
/// `upper` is a nonnegative integer or a positive monomial; otherwise
/// throws Unsupported.
EuclideanNumber hyperfinite_sum(const std::vector<Rational>& p, const EuclideanNumber& upper);
/// Same with the term as an expression in the index (written x). Throws
/// Unsupported unless it is a polynomial with rational coefficients.
EuclideanNumber hyperfinite_sum(const FuncExpr& term, const EuclideanNumber& upper);

struct EIntegral {
  EuclideanNumber euclidean;
  Rational real_part;
};

/// Σ_{k=0}^{α−1} f(a + k·h)·h with h = (b−a)·η on the uniform α-grid.
/// Throws NotPolynomial unless f is a polynomial with rational coefficients
/// and DomainError unless a < b.
EIntegral e_integral(const FuncExpr& f, const Rational& a, const Rational& b);

struct NumericIntegral {
  double value;
  unsigned long steps;
};

/// Left-endpoint sum with n uniform steps in double precision (compensated
/// summation). First-order accurate for smooth f.
NumericIntegral e_integral_numeric(const FuncExpr& f, const SymReal& a, const SymReal& b, unsigned long n);

}  // namespace euclid::calculus
