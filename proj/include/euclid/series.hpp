#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "euclid/rational.hpp"

namespace euclid {

/// Growth exponent of a monomial (2^α)^e2a · α^ea. Ordered lexicographically
/// with the 2^α power first, so 2^α dominates every power of α.
struct Exponent {
  Rational e2a;
  Rational ea;

  static Exponent zero() { return {}; }
  static Exponent alpha(Rational k) { return {Rational(0), std::move(k)}; }

  bool is_zero() const { return e2a.is_zero() && ea.is_zero(); }

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    return {a.e2a + b.e2a, a.ea + b.ea};
  }
  friend Exponent operator-(const Exponent& a, const Exponent& b) {
    return {a.e2a - b.e2a, a.ea - b.ea};
  }
  friend Exponent operator-(const Exponent& a) { return {-a.e2a, -a.ea}; }
  Exponent scaled(const Rational& k) const { return {e2a * k, ea * k}; }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent&,
                                          const Exponent&) = default;
};

struct Monomial {
  Exponent exponent;
  Rational coefficient;  // nonzero
};

/// Finite-support series Σ c·(2^α)^e2a·α^ea with rational coefficients.
/// Terms are kept in strictly decreasing exponent order; zero coefficients
/// are never stored.
class SeriesPoly {
 public:
  using TermMap = std::map<Exponent, Rational, std::greater<>>;

  SeriesPoly() = default;
  explicit SeriesPoly(const Rational& c);
  static SeriesPoly monomial(const Exponent& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Highest-exponent term; precondition: nonzero.
  Monomial lead() const;
  /// Lowest-exponent term; precondition: nonzero.
  Monomial trail() const;
  Rational coefficient(const Exponent& e) const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Adds c·x^e in place, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  SeriesPoly& operator+=(const SeriesPoly& o);
  SeriesPoly& operator-=(const SeriesPoly& o);
  friend SeriesPoly operator+(SeriesPoly a, const SeriesPoly& b) {
    return a += b;
  }
  friend SeriesPoly operator-(SeriesPoly a, const SeriesPoly& b) {
    return a -= b;
  }
  friend SeriesPoly operator-(const SeriesPoly& a);
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);

  /// Multiplies by the monomial c·x^e.
  SeriesPoly times(const Exponent& e, const Rational& c) const;

  /// Terms with exponent >= cutoff.
  SeriesPoly truncated_below(const Exponent& cutoff) const;

  friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;

 private:
  TermMap terms_;
};

/// Exact quotient num/den when den divides num in the monomial group ring,
/// found by leading-term long division within `max_steps` steps.
std::optional<SeriesPoly> exact_quotient(const SeriesPoly& num,
                                         const SeriesPoly& den,
                                         std::size_t max_steps = 512);

}  // namespace euclid
