#include "euclid/calculus.hpp"

#include <cmath>

#include "euclid/error.hpp"

namespace euclid::calculus {

namespace {

// Rendering of the non-infinitesimal part of a quotient, plus any term
// carrying a huge symbol.
std::string center_text(const InfinitesimalSeries& q) {
  InfinitesimalSeries shown;
  shown.exact = true;
  for (const auto& [k, c] : q.terms)
    if (k <= 0 || c.contains(Growth::huge)) shown.terms.emplace(k, c);
  return "ctr(" + shown.str() + ")";
}

DerivResult center_of(const InfinitesimalSeries& q) {
  bool negative = false;
  bool negative_pure = true;
  bool huge = false;
  for (const auto& [k, c] : q.terms) {
    if (c.contains(Growth::huge)) huge = true;
    if (k < 0) {
      negative = true;
      negative_pure = negative_pure && c.is_pure();
    }
  }
  if (huge || (negative && negative_pure)) return {Indeterminate{center_text(q), "center is infinite"}};
  if (negative) return {Indeterminate{center_text(q), "center depends on the ultrafilter"}};
  const auto it = q.terms.find(0);
  if (it == q.terms.end()) return {SymReal()};
  const Coeff& c0 = it->second;
  if (c0.contains(Growth::logarithmic)) return {Indeterminate{center_text(q), "center is infinite"}};
  if (!c0.is_pure()) return {Indeterminate{"ctr(" + c0.str() + ")", "center depends on the ultrafilter"}};
  return {c0.pure()};
}

// (Σ cₖ ηᵏ) / (factor·η)
InfinitesimalSeries divide_by_eta(std::map<long, Coeff> terms, const Rational& factor, long order, bool exact) {
  InfinitesimalSeries q;
  q.order = order - 1;
  q.exact = exact;
  const Coeff inv(SymReal(factor.inverse()));
  for (auto& [k, c] : terms)
    if (!c.is_structurally_zero()) q.terms.emplace(k - 1, c * inv);
  return q;
}

void subtract_at_zero(std::map<long, Coeff>& terms, const SymReal& v) {
  Coeff& slot = terms[0];
  slot -= Coeff(v);
  if (slot.is_structurally_zero()) terms.erase(0);
}

Indeterminate from_unresolvable(const Unresolvable& e) {
  return Indeterminate{"ctr(" + e.expression() + ")", e.what()};
}

DerivResult one_sided(const FuncExpr& f, const SymReal& x0, int side, long order) {
  const long n = std::max(order, 2L);
  try {
    const SymReal f0 = value_at(f, x0);
    const InfinitesimalSeries s = expand(f, grid_probe(x0, side), n);
    auto terms = s.terms;
    subtract_at_zero(terms, f0);
    return center_of(divide_by_eta(std::move(terms), Rational(side), n, s.exact));
  } catch (const Unresolvable& e) {
    return {from_unresolvable(e)};
  }
}

}  // namespace

std::string DerivResult::str() const {
  return is_value() ? value().str() : indeterminate().expression;
}

bool same_result(const DerivResult& a, const DerivResult& b) {
  if (a.is_value() && b.is_value()) return a.value() == b.value();
  if (!a.is_value() && !b.is_value()) return a.indeterminate().expression == b.indeterminate().expression;
  return false;
}

SymReal value_at(const FuncExpr& f, const SymReal& x0) {
  try {
    const InfinitesimalSeries s = expand(f, Probe{x0, 0, x0.rationality()}, 1);
    const auto it = s.terms.find(0);
    if (it == s.terms.end()) return SymReal();
    if (!it->second.is_pure()) throw Unresolvable(it->second.str(), "value at the point is not a real");
    return it->second.pure();
  } catch (const Pole&) {
    const InfinitesimalSeries right = expand(f, grid_probe(x0, 1), 1);
    const InfinitesimalSeries left = expand(f, grid_probe(x0, -1), 1);
    const auto finite_center = [](const InfinitesimalSeries& s) -> std::optional<SymReal> {
      for (const auto& [k, c] : s.terms)
        if (k < 0 || !c.is_pure()) return std::nullopt;
      const auto it = s.terms.find(0);
      return it == s.terms.end() ? SymReal() : it->second.pure();
    };
    const auto r = finite_center(right);
    const auto l = finite_center(left);
    if (r && l && *r == *l) return *r;
    throw Pole(f.str() + " has a pole at " + x0.str());
  }
}

DerivResult d_plus(const FuncExpr& f, const SymReal& x0, long order) { return one_sided(f, x0, 1, order); }

DerivResult d_minus(const FuncExpr& f, const SymReal& x0, long order) { return one_sided(f, x0, -1, order); }

DerivResult d_mean(const FuncExpr& f, const SymReal& x0, long order) {
  const long n = std::max(order, 2L);
  try {
    const InfinitesimalSeries right = expand(f, grid_probe(x0, 1), n);
    const InfinitesimalSeries left = expand(f, grid_probe(x0, -1), n);
    auto terms = right.terms;
    for (const auto& [k, c] : left.terms) {
      Coeff& slot = terms[k];
      slot -= c;
      if (slot.is_structurally_zero()) terms.erase(k);
    }
    return center_of(divide_by_eta(std::move(terms), 2, n, right.exact && left.exact));
  } catch (const Unresolvable& e) {
    return {from_unresolvable(e)};
  }
}

DerivResult grid_d_plus(const FuncExpr& f, const SymReal& x0, long order) {
  if (!x0.is_rational()) throw NotGridPoint(x0.str() + " is not a point of the uniform rational grid");
  return d_plus(f, x0, order);
}

Derivability is_derivable(const FuncExpr& f, const SymReal& x0) {
  const DerivResult mean = d_mean(f, x0);
  const DerivResult plus = d_plus(f, x0);
  if (!same_result(mean, plus)) return {false, false};
  return {plus.is_value(), !plus.is_value()};
}

Differentiability is_differentiable(const FuncExpr& f, const SymReal& x0) {
  const SymReal f0 = value_at(f, x0);
  std::optional<SymReal> slope;
  for (const int side : {1, -1}) {
    for (const Rationality point : {Rationality::rational, Rationality::irrational}) {
      InfinitesimalSeries s;
      try {
        s = expand(f, Probe{x0, side, point}, 3);
      } catch (const Unresolvable& e) {
        return {false, std::nullopt, std::string("expansion undetermined: ") + e.what()};
      }
      SymReal value;
      SymReal linear;
      for (const auto& [k, c] : s.terms) {
        if (k < 0) return {false, std::nullopt, "f is unbounded near the point"};
        if (c.contains(Growth::huge)) return {false, std::nullopt, "f grows faster than any power near the point"};
        if (k == 0) {
          if (!c.is_pure()) return {false, std::nullopt, "f(x0+ε) has no real center"};
          value = c.pure();
        } else if (k == 1) {
          if (!c.is_pure()) return {false, std::nullopt, "the first-order term " + c.str() + " is not a real multiple of ε"};
          linear = c.pure();
        }
      }
      if (!(value == f0)) return {false, std::nullopt, "f(x0+ε) does not approach f(x0)"};
      const SymReal c = side > 0 ? linear : -linear;
      if (slope && !(*slope == c)) return {false, std::nullopt, "the linear part differs between cases"};
      slope = c;
    }
  }
  return {true, slope, ""};
}

namespace {

std::vector<Rational> bernoulli_table(unsigned long n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned long m = 1; m <= n; ++m) {
    Rational s;
    for (unsigned long k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * b[k];
    b[m] = -s / Rational(static_cast<long>(m + 1));
  }
  return b;
}

void check_upper(const EuclideanNumber& upper) {
  if (upper.is_rational()) {
    const Rational q = upper.to_rational();
    if (q.is_integer() && q.sign() >= 0) return;
  } else if (upper.is_monomial() && upper.sign() > 0) {
    return;
  }
  throw Unsupported("upper bound must be a nonnegative integer or a positive monomial");
}

std::vector<Rational> rational_coefficients(const std::vector<SymReal>& p) {
  std::vector<Rational> out;
  out.reserve(p.size());
  for (const auto& c : p) {
    const auto q = c.as_rational();
    if (!q) return {};
    out.push_back(*q);
  }
  return out;
}

}  // namespace

Rational bernoulli(unsigned long n) { return bernoulli_table(n)[n]; }

EuclideanNumber power_sum_below(unsigned long m, const EuclideanNumber& n) {
  const auto b = bernoulli_table(m);
  EuclideanNumber s;
  for (unsigned long j = 0; j <= m; ++j)
    s += Rational(binomial(m + 1, j)) * b[j] * pow(n, static_cast<long>(m + 1 - j));
  return s / Rational(static_cast<long>(m + 1));
}

EuclideanNumber hyperfinite_sum(const std::vector<Rational>& p, const EuclideanNumber& upper) {
  check_upper(upper);
  EuclideanNumber s;
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (p[m].is_zero()) continue;
    // Σ_{k=1}^{N} k^m = Σ_{k=0}^{N−1} k^m + N^m − 0^m
    EuclideanNumber part = power_sum_below(m, upper) + pow(upper, static_cast<long>(m));
    if (m == 0) part -= 1;
    s += p[m] * part;
  }
  return s;
}

EuclideanNumber hyperfinite_sum(const FuncExpr& term, const EuclideanNumber& upper) {
  const auto poly = as_polynomial(term);
  if (!poly) throw Unsupported("summand " + term.str() + " is not a polynomial in the index");
  const auto coeffs = rational_coefficients(*poly);
  if (coeffs.size() != poly->size()) throw Unsupported("summand " + term.str() + " has irrational coefficients");
  return hyperfinite_sum(coeffs, upper);
}

EIntegral e_integral(const FuncExpr& f, const Rational& a, const Rational& b) {
  if (!(a < b)) throw DomainError("integration bounds must satisfy a < b");
  const auto poly = as_polynomial(f);
  if (!poly) throw NotPolynomial(f.str() + " is not a polynomial");
  const auto c = rational_coefficients(*poly);
  if (c.size() != poly->size()) throw NotPolynomial(f.str() + " has irrational coefficients");

  const EuclideanNumber h = (b - a) * EuclideanNumber::eta();
  const EuclideanNumber alpha = EuclideanNumber::alpha();
  // f(a + k·h) = Σᵢ dᵢ kⁱ with dᵢ = Σ_{j≥i} c_j C(j,i) a^(j−i) hⁱ
  EuclideanNumber sum;
  for (std::size_t i = 0; i < c.size(); ++i) {
    EuclideanNumber d;
    Rational a_pow = 1;
    for (std::size_t j = i; j < c.size(); ++j) {
      d += c[j] * Rational(binomial(j, i)) * a_pow;
      a_pow *= a;
    }
    if (d.is_zero()) continue;
    sum += d * pow(h, static_cast<long>(i)) * power_sum_below(i, alpha);
  }
  const EuclideanNumber value = sum * h;
  return {value, st(value)};
}

NumericIntegral e_integral_numeric(const FuncExpr& f, const SymReal& a, const SymReal& b, unsigned long n) {
  if (n == 0) throw DomainError("step count must be positive");
  if ((b - a).sign() <= 0) throw DomainError("integration bounds must satisfy a < b");
  const NumericFunction fn(f);
  const double lo = a.to_double();
  const double width = (b - a).to_double();
  const Rationality ra = a.rationality();
  const Rationality rb = b.rationality();
  const auto point_rationality = [&](unsigned long k) {
    using enum Rationality;
    if (ra == rational && rb == rational) return rational;
    if (ra == rational && rb == irrational) return k == 0 ? rational : irrational;
    if (ra == irrational && rb == rational) return irrational;
    return unknown;
  };
  // Neumaier summation over the fixed grid order.
  double sum = 0;
  double comp = 0;
  for (unsigned long k = 0; k < n; ++k) {
    const double x = lo + width * (static_cast<double>(k) / static_cast<double>(n));
    const double v = fn(x, point_rationality(k)).value;
    const double t = sum + v;
    comp += std::fabs(sum) >= std::fabs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return {((sum + comp) / static_cast<double>(n)) * width, n};
}

}  // namespace euclid::calculus
