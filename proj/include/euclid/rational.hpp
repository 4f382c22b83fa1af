#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace euclid {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// so two equal rationals always have identical numerator and denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : q_(static_cast<long>(n)) {}  // NOLINT(implicit)

  Rational(const Integer& n) : q_(n) {}  // NOLINT(implicit)

  /// Throws DivisionByZero when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const;
  /// Throws DivisionByZero for zero.
  Rational inverse() const;
  /// Exact k-th root when one exists in Q (negative values only for odd k).
  std::optional<Rational> exact_root(unsigned long k) const;
  /// Largest integer not above the value.
  Integer floor() const;

  double to_double() const { return q_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Always "p/q", including integers ("3/1").
  std::string fraction_str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(mpq_class q);

  mpq_class q_;
};

/// Binomial coefficient C(n, k) as an exact integer.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace euclid
