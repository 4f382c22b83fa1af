#include "euclid/ordinal.hpp"

#include <algorithm>
#include <map>

namespace euclid::ordinals {

Ordinal::Ordinal(const Integer& n) {
  if (n < 0) throw InvalidOrdinal("negative ordinal " + n.get_str());
  if (n > 0) terms_.push_back({Ordinal(), n});
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent, const Integer& coefficient) {
  return from_terms({{exponent, coefficient}});
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient <= 0) throw InvalidOrdinal("coefficients must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw InvalidOrdinal("exponents must strictly decrease");
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Integer Ordinal::finite_value() const {
  if (!is_finite()) throw InvalidOrdinal("ordinal " + str() + " is not finite");
  return terms_.empty() ? Integer(0) : terms_[0].coefficient;
}

std::string Ordinal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (e.is_zero()) {
      out += c.get_str();
      continue;
    }
    out += "w";
    if (!(e == Ordinal(1))) {
      const bool simple = e.is_finite();
      out += simple ? "^" + e.str() : "^(" + e.str() + ")";
    }
    if (c != 1) out += "*" + c.get_str();
  }
  return out;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (auto c = x.exponent <=> y.exponent; c != 0) return c;
    if (x.coefficient != y.coefficient)
      return x.coefficient < y.coefficient ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Ordering ord_compare(const Ordinal& a, const Ordinal& b) {
  const auto c = a <=> b;
  if (c < 0) return Ordering::less;
  if (c > 0) return Ordering::greater;
  return Ordering::equal;
}

namespace {

using TermMap = std::map<Ordinal, Integer, std::greater<>>;

Ordinal from_map(const TermMap& m) {
  std::vector<OrdinalTerm> terms;
  terms.reserve(m.size());
  for (const auto& [e, c] : m) terms.push_back({e, c});
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  TermMap m;
  for (const auto& t : a.terms()) m[t.exponent] += t.coefficient;
  for (const auto& t : b.terms()) m[t.exponent] += t.coefficient;
  return from_map(m);
}

Ordinal natural_prod(const Ordinal& a, const Ordinal& b) {
  TermMap m;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms())
      m[natural_sum(x.exponent, y.exponent)] += x.coefficient * y.coefficient;
  return from_map(m);
}

EuclideanNumber to_numerosity(const Ordinal& a) {
  const EuclideanNumber w = EuclideanNumber::omega();
  EuclideanNumber r;
  for (const auto& [e, c] : a.terms()) {
    if (!e.is_finite())
      throw UnsupportedOrdinal("no numerosity value for " + a.str() + " (at least w^w)");
    const Integer k = e.finite_value();
    if (!k.fits_slong_p()) throw UnsupportedOrdinal("exponent too large in " + a.str());
    r += Rational(c) * pow(w, k.get_si());
  }
  return r;
}

}  // namespace euclid::ordinals
