#pragma once

#include <map>
#include <string>

#include "euclid/error.hpp"
#include "euclid/func_expr.hpp"
#include "euclid/symreal.hpp"

namespace euclid::calculus {

class Pole : public Error {
 public:
  explicit Pole(const std::string& what) : Error("pole", what) {}
};

/// A quantity on the infinitesimal point whose sign, vanishing or
/// rationality the expansion cannot decide, e.g. the sign of sin(α^2).
class Unresolvable : public Error {
 public:
  Unresolvable(std::string expression, const std::string& what)
      : Error("indeterminate", what), expression_(std::move(expression)) {}
  const std::string& expression() const { return expression_; }

 private:
  std::string expression_;
};

/// Size class of an opaque symbol: sin(α^2) is bounded, log(η) is
/// logarithmically infinite, exp(α) exceeds every power of α.
enum class Growth { bounded, logarithmic, huge };

/// Symbol standing for a value fixed only by the underlying model, such as
/// sin(α^2). Identified by its label.
struct Opaque {
  std::string label;
  Growth growth;
  friend auto operator<=>(const Opaque&, const Opaque&) = default;
};

/// Series coefficient: a polynomial in opaque symbols over SymReal.
class Coeff {
 public:
  using OpaqueProduct = std::map<Opaque, long>;

  Coeff() = default;
  Coeff(const SymReal& s);  // NOLINT(implicit)
  static Coeff opaque(Opaque o);

  const std::map<OpaqueProduct, SymReal>& terms() const { return terms_; }

  /// No opaque symbols.
  bool is_pure() const;
  /// Precondition: is_pure().
  SymReal pure() const;
  bool contains(Growth g) const;
  bool is_structurally_zero() const { return terms_.empty(); }
  /// Every SymReal coefficient tests zero.
  bool is_zero() const;

  /// Expanded monomials for linear_text, each optionally multiplied by
  /// `extra` (an atom such as "η^2").
  std::vector<std::pair<Rational, std::string>> monomials(const std::string& extra) const;
  std::string str() const;

  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a);

  friend bool structurally_equal(const Coeff& a, const Coeff& b);

 private:
  void add_term(const OpaqueProduct& p, const SymReal& c);

  std::map<OpaqueProduct, SymReal> terms_;
};

/// Truncated Laurent series in η: Σ cₖ·η^k + O(η^order).
struct InfinitesimalSeries {
  std::map<long, Coeff> terms;
  long order = 0;
  /// No tail was discarded.
  bool exact = false;

  /// Terms of increasing power, negative powers shown as α^k, e.g.
  /// "α^2 + 1 − (1/6)·η^2 + O(η^4)".
  std::string str() const;
};

/// Terms with powers ≤ 0 rendered in α, e.g. "α^2 + 3"; used for opaque
/// labels and indeterminate centers.
std::string alpha_text(const std::map<long, Coeff>& terms);

enum class Direction { plus, minus };

/// The point x₀ + side·η with side ∈ {−1, 0, 1}. `point` is the
/// rationality assumed for that point (dirichlet resolves through it).
struct Probe {
  SymReal x0;
  int side = 0;
  Rationality point = Rationality::unknown;
};

/// Probe on the uniform α-grid: x₀ ± η is rational exactly when x₀ is.
Probe grid_probe(const SymReal& x0, int side);

/// Expansion of f at the probe, correct through η^(order−1). Throws Pole,
/// DomainError, or Unresolvable.
InfinitesimalSeries expand(const FuncExpr& f, const Probe& p, long order);
InfinitesimalSeries expand(const FuncExpr& f, const SymReal& x0, Direction d, long order = 4);

}  // namespace euclid::calculus
