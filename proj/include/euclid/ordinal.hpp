#pragma once

#include <compare>
#include <string>
#include <vector>

#include "euclid/error.hpp"
#include "euclid/number.hpp"

namespace euclid::ordinals {

class UnsupportedOrdinal : public Error {
 public:
  explicit UnsupportedOrdinal(const std::string& what)
      : Error("unsupported-ordinal", what) {}
};

class InvalidOrdinal : public Error {
 public:
  explicit InvalidOrdinal(const std::string& what)
      : Error("invalid-ordinal", what) {}
};

struct OrdinalTerm;

/// Ordinal below ε₀ in Cantor normal form: ω^e₁·c₁ + ... + ω^eₙ·cₙ with
/// e₁ > ... > eₙ and every cᵢ ≥ 1. The empty sum is 0.
class Ordinal {
 public:
  Ordinal() = default;
  Ordinal(const Integer& n);
  Ordinal(long n) : Ordinal(Integer(n)) {}

  static Ordinal omega();
  static Ordinal omega_pow(const Ordinal& exponent, const Integer& coefficient = 1);
  /// Throws InvalidOrdinal unless exponents strictly decrease and
  /// coefficients are positive.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  /// Value of a finite ordinal.
  Integer finite_value() const;

  /// "w^2*3 + w*2 + 1"; compound exponents are parenthesized, "w^(w + 1)".
  std::string str() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  Integer coefficient;
};

Ordering ord_compare(const Ordinal& a, const Ordinal& b);

/// Hessenberg natural sum: merge, adding coefficients of equal exponents.
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);

/// Hessenberg natural product: ω^p·m ⊗ ω^q·n = ω^(p⊕q)·mn, distributed.
Ordinal natural_prod(const Ordinal& a, const Ordinal& b);

/// ω^k·c ↦ c·(α+1)^k. Throws UnsupportedOrdinal for a ≥ ω^ω.
EuclideanNumber to_numerosity(const Ordinal& a);

}  // namespace euclid::ordinals
