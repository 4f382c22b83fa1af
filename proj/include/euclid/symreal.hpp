#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "euclid/error.hpp"
#include "euclid/rational.hpp"

namespace euclid::calculus {

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

class NumericEvaluation : public Error {
 public:
  explicit NumericEvaluation(const std::string& what)
      : Error("numeric-evaluation", what) {}
};

enum class Rationality { rational, irrational, unknown };

/// Digits used by numeric zero and sign tests. Defaults to 50; the zero
/// threshold is 10^-(digits − 10).
int default_digits();
void set_default_digits(int digits);

class SymReal;

struct Atom {
  enum class Kind { pi, sqrt, sin, cos, exp, log, recip };
  Kind kind;
  /// Squarefree radicand > 1 of a sqrt atom.
  Integer radicand;
  /// Argument of sin/cos/exp/log, or the denominator of recip.
  std::shared_ptr<const SymReal> arg;
};

bool operator==(const Atom& a, const Atom& b);
std::strong_ordering operator<=>(const Atom& a, const Atom& b);

/// Real constant: a rational-coefficient sum of products of atoms π, √k,
/// sin/cos/exp/log(S) and 1/S.
///
/// Normalization merges √a·√b, folds √k² into the coefficient, merges exp
/// factors and evaluates sin/cos at integer and half-integer multiples of
/// π, so every pure-rational value is structurally a single constant term.
/// Other zero tests fall back to MPFR evaluation.
class SymReal {
 public:
  using Product = std::map<Atom, long>;

  SymReal() = default;
  SymReal(const Rational& r);  // NOLINT(implicit)
  template <std::integral I>
  SymReal(I n) : SymReal(Rational(n)) {}  // NOLINT(implicit)

  static SymReal pi();
  static SymReal e();
  /// Throws DomainError for negative q.
  static SymReal sqrt(const Rational& q);
  static SymReal sin(const SymReal& s);
  static SymReal cos(const SymReal& s);
  static SymReal exp(const SymReal& s);
  /// Throws DomainError unless s > 0.
  static SymReal log(const SymReal& s);

  const std::map<Product, Rational>& terms() const { return terms_; }

  bool is_rational() const;
  /// Precondition: is_rational().
  Rational rational() const;
  std::optional<Rational> as_rational() const;
  Rationality rationality() const;

  struct SignInfo {
    int sign;
    bool exact;
  };
  SignInfo sign_info() const;
  int sign() const { return sign_info().sign; }
  bool is_zero() const { return sign() == 0; }
  bool is_structurally_zero() const { return terms_.empty(); }

  /// Throws DivisionByZero when the value is zero.
  SymReal inverse() const;
  SymReal pow(long k) const;

  double to_double() const;
  /// Decimal approximation with `digits` significant digits.
  std::string decimal(int digits) const;
  std::string str() const;

  SymReal& operator+=(const SymReal& o);
  SymReal& operator-=(const SymReal& o);
  SymReal& operator*=(const SymReal& o);
  SymReal& operator/=(const SymReal& o) { return *this *= o.inverse(); }

  friend SymReal operator+(SymReal a, const SymReal& b) { return a += b; }
  friend SymReal operator-(SymReal a, const SymReal& b) { return a -= b; }
  friend SymReal operator*(SymReal a, const SymReal& b) { return a *= b; }
  friend SymReal operator/(SymReal a, const SymReal& b) { return a /= b; }
  friend SymReal operator-(const SymReal& a);

  /// Value equality: exact for rational differences, numeric otherwise.
  friend bool operator==(const SymReal& a, const SymReal& b) { return (a - b).is_zero(); }
  /// Structural order, used for canonical keys.
  friend std::strong_ordering structural_compare(const SymReal& a, const SymReal& b);
  friend bool structurally_equal(const SymReal& a, const SymReal& b) {
    return a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const SymReal& s) { return os << s.str(); }

 private:
  static SymReal from_atom(Atom a, long exponent = 1);
  void add_term(const Product& p, const Rational& c);
  const Atom* single_atom() const;

  std::map<Product, Rational> terms_;
};

/// Atom product as text, e.g. "π^2·√3"; empty for the empty product.
std::string product_text(const SymReal::Product& p);

}  // namespace euclid::calculus
