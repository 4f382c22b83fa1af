#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "euclid/rational.hpp"
#include "euclid/series.hpp"

namespace euclid {

/// Exact element of the computable Euclidean fragment: a fraction num/den of
/// finite-support series in α and 2^α with rational coefficients.
///
/// Canonical form: den's leading term is 1·x^(0,0). When den divides num
/// exactly the fraction collapses to a series (den == 1). No other
/// cancellation is attempted, so equality is decided by cross-multiplication.
class EuclideanNumber {
 public:
  EuclideanNumber() = default;
  EuclideanNumber(const Rational& r) : num_(r), den_(Rational(1)) {}  // NOLINT
  template <std::integral I>
  EuclideanNumber(I n) : EuclideanNumber(Rational(n)) {}  // NOLINT
  explicit EuclideanNumber(SeriesPoly p) : num_(std::move(p)), den_(Rational(1)) {}
  /// Throws DivisionByZero when den is zero.
  EuclideanNumber(SeriesPoly num, SeriesPoly den);

  static EuclideanNumber monomial(const Exponent& e, const Rational& c = 1);
  /// α = num(ℕ⁺).
  static EuclideanNumber alpha();
  /// η = 1/α.
  static EuclideanNumber eta();
  /// ω = num(ℕ) = α + 1.
  static EuclideanNumber omega();
  /// 2^α = num(℘_fin(ℕ⁺)).
  static EuclideanNumber two_pow_alpha();

  const SeriesPoly& numerator() const { return num_; }
  const SeriesPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// den == 1.
  bool is_series() const { return den_.is_constant(); }
  bool is_monomial() const { return is_series() && num_.is_monomial(); }
  bool is_rational() const { return is_series() && num_.is_constant(); }
  /// Precondition: is_rational().
  Rational to_rational() const { return num_.coefficient(Exponent::zero()); }

  /// -1, 0 or +1.
  int sign() const { return is_zero() ? 0 : num_.lead().coefficient.sign(); }
  /// lead(num) − lead(den); precondition: nonzero.
  Exponent degree() const { return num_.lead().exponent; }

  EuclideanNumber& operator+=(const EuclideanNumber& o);
  EuclideanNumber& operator-=(const EuclideanNumber& o);
  EuclideanNumber& operator*=(const EuclideanNumber& o);
  EuclideanNumber& operator/=(const EuclideanNumber& o);

  friend EuclideanNumber operator+(EuclideanNumber a, const EuclideanNumber& b) { return a += b; }
  friend EuclideanNumber operator-(EuclideanNumber a, const EuclideanNumber& b) { return a -= b; }
  friend EuclideanNumber operator*(EuclideanNumber a, const EuclideanNumber& b) { return a *= b; }
  friend EuclideanNumber operator/(EuclideanNumber a, const EuclideanNumber& b) { return a /= b; }
  friend EuclideanNumber operator-(const EuclideanNumber& a);

  friend bool operator==(const EuclideanNumber& a, const EuclideanNumber& b);
  friend std::strong_ordering operator<=>(const EuclideanNumber& a,
                                          const EuclideanNumber& b);

  friend std::ostream& operator<<(std::ostream& os, const EuclideanNumber& x);

 private:
  void canonicalize();

  SeriesPoly num_;
  SeriesPoly den_{Rational(1)};
};

enum class Ordering { less, equal, greater };

enum class Kind { zero, infinitesimal, finite, infinite };
enum class Sign { negative, zero, positive };

/// kind ∈ {zero, infinitesimal-nonzero, finite-noninfinitesimal, infinite}.
struct NumberClass {
  Kind kind;
  Sign sign;
  friend bool operator==(const NumberClass&, const NumberClass&) = default;
};

std::string to_string(Kind k);
std::string to_string(Sign s);
std::string to_string(Ordering o);

EuclideanNumber add(const EuclideanNumber& a, const EuclideanNumber& b);
EuclideanNumber mul(const EuclideanNumber& a, const EuclideanNumber& b);
/// Throws DivisionByZero when b == 0.
EuclideanNumber div(const EuclideanNumber& a, const EuclideanNumber& b);
Ordering compare(const EuclideanNumber& a, const EuclideanNumber& b);
NumberClass classify(const EuclideanNumber& a);

inline bool is_infinitesimal(const EuclideanNumber& a) {
  const Kind k = classify(a).kind;
  return k == Kind::zero || k == Kind::infinitesimal;
}
/// Finite in the broad sense: bounded by some natural number.
inline bool is_finite(const EuclideanNumber& a) {
  return classify(a).kind != Kind::infinite;
}

/// Terms of the expansion of `a` with exponent >= cutoff, computed by
/// exponent-decreasing long division. Throws Unsupported if more than
/// `max_terms` terms lie above the cutoff (possible only when a 2^α power
/// in the numerator meets lower α powers in the denominator).
SeriesPoly expansion(const EuclideanNumber& a, const Exponent& cutoff,
                     std::size_t max_terms = 100000);

/// Center: the part of the expansion with exponent >= (0,0).
EuclideanNumber ctr(const EuclideanNumber& a);
/// Standard part of a finite number. Throws NotFinite for infinite input.
Rational st(const EuclideanNumber& a);

bool same_monad(const EuclideanNumber& a, const EuclideanNumber& b);
bool same_galaxy(const EuclideanNumber& a, const EuclideanNumber& b);

/// Exact integer power; negative k on zero throws DivisionByZero.
EuclideanNumber pow(const EuclideanNumber& a, long k);
/// k-th root of a monomial with positive coefficient whose rational root
/// exists. Throws Unsupported otherwise.
EuclideanNumber monomial_root(const Monomial& m, unsigned long k);
/// monomial_root applied to a number that is a single monomial.
EuclideanNumber root(const EuclideanNumber& a, unsigned long k);
/// a^(p/q) for a monomial a (a^(p/q) = root(a, q)^p).
EuclideanNumber rational_power(const EuclideanNumber& a, const Rational& e);

}  // namespace euclid
