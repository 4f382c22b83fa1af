#include "euclid/number.hpp"

#include <map>

#include "euclid/error.hpp"
#include "euclid/render.hpp"

namespace euclid {

EuclideanNumber::EuclideanNumber(SeriesPoly num, SeriesPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void EuclideanNumber::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = SeriesPoly(Rational(1));
    return;
  }
  const Monomial d = den_.lead();
  const Exponent shift = -d.exponent;
  const Rational scale = d.coefficient.inverse();
  if (!(d.exponent.is_zero() && d.coefficient == 1)) {
    num_ = num_.times(shift, scale);
    den_ = den_.times(shift, scale);
  }
  if (!den_.is_constant()) {
    if (auto q = exact_quotient(num_, den_)) {
      num_ = std::move(*q);
      den_ = SeriesPoly(Rational(1));
    }
  }
}

EuclideanNumber EuclideanNumber::monomial(const Exponent& e, const Rational& c) {
  return EuclideanNumber(SeriesPoly::monomial(e, c));
}

EuclideanNumber EuclideanNumber::alpha() { return monomial(Exponent::alpha(1)); }
EuclideanNumber EuclideanNumber::eta() { return monomial(Exponent::alpha(-1)); }
EuclideanNumber EuclideanNumber::omega() { return alpha() + 1; }
EuclideanNumber EuclideanNumber::two_pow_alpha() {
  return monomial(Exponent{Rational(1), Rational(0)});
}

EuclideanNumber& EuclideanNumber::operator+=(const EuclideanNumber& o) {
  if (is_series() && o.is_series()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

EuclideanNumber& EuclideanNumber::operator-=(const EuclideanNumber& o) {
  return *this += -o;
}

EuclideanNumber& EuclideanNumber::operator*=(const EuclideanNumber& o) {
  num_ = num_ * o.num_;
  if (!o.is_series()) den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

EuclideanNumber& EuclideanNumber::operator/=(const EuclideanNumber& o) {
  if (o.is_zero()) throw DivisionByZero();
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

EuclideanNumber operator-(const EuclideanNumber& a) {
  EuclideanNumber r = a;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const EuclideanNumber& a, const EuclideanNumber& b) {
  if (a.is_series() && b.is_series()) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::strong_ordering operator<=>(const EuclideanNumber& a,
                                 const EuclideanNumber& b) {
  // Both denominators have leading coefficient 1, hence are positive.
  const SeriesPoly diff = a.num_ * b.den_ - b.num_ * a.den_;
  if (diff.is_zero()) return std::strong_ordering::equal;
  return diff.lead().coefficient.sign() < 0 ? std::strong_ordering::less
                                            : std::strong_ordering::greater;
}

std::ostream& operator<<(std::ostream& os, const EuclideanNumber& x) {
  return os << to_text(x);
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::zero: return "zero";
    case Kind::infinitesimal: return "infinitesimal-nonzero";
    case Kind::finite: return "finite-noninfinitesimal";
    case Kind::infinite: return "infinite";
  }
  return "?";
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
  }
  return "?";
}

EuclideanNumber add(const EuclideanNumber& a, const EuclideanNumber& b) { return a + b; }
EuclideanNumber mul(const EuclideanNumber& a, const EuclideanNumber& b) { return a * b; }
EuclideanNumber div(const EuclideanNumber& a, const EuclideanNumber& b) { return a / b; }

Ordering compare(const EuclideanNumber& a, const EuclideanNumber& b) {
  const auto c = a <=> b;
  if (c < 0) return Ordering::less;
  if (c > 0) return Ordering::greater;
  return Ordering::equal;
}

NumberClass classify(const EuclideanNumber& a) {
  if (a.is_zero()) return {Kind::zero, Sign::zero};
  const Sign s = a.sign() < 0 ? Sign::negative : Sign::positive;
  const Exponent d = a.degree();
  if (d > Exponent::zero()) return {Kind::infinite, s};
  if (d < Exponent::zero()) return {Kind::infinitesimal, s};
  return {Kind::finite, s};
}

SeriesPoly expansion(const EuclideanNumber& a, const Exponent& cutoff,
                     std::size_t max_terms) {
  if (a.is_series()) return a.numerator().truncated_below(cutoff);
  // den's lead is 1·x^(0,0), so each quotient term is the remainder's lead.
  const SeriesPoly& den = a.denominator();
  SeriesPoly out;
  SeriesPoly rem = a.numerator();
  std::size_t produced = 0;
  while (!rem.is_zero()) {
    const Monomial r = rem.lead();
    if (r.exponent < cutoff) break;
    if (++produced > max_terms)
      throw Unsupported("expansion above the cutoff exceeds " +
                        std::to_string(max_terms) + " terms");
    out.add_term(r.exponent, r.coefficient);
    rem -= den.times(r.exponent, r.coefficient);
  }
  return out;
}

namespace {

/// Terms of num/den with exponent >= (0,0) where den has only 2^α-exponent 0
/// terms and leading term 1. Exponents of the remainder descend through a
/// discrete lattice in α, so the division terminates.
SeriesPoly center_of_alpha_layer(SeriesPoly rem, const SeriesPoly& den) {
  SeriesPoly out;
  while (!rem.is_zero()) {
    const Monomial r = rem.lead();
    if (r.exponent < Exponent::zero()) break;
    out.add_term(r.exponent, r.coefficient);
    rem -= den.times(r.exponent, r.coefficient);
  }
  return out;
}

SeriesPoly layers_at_least(const SeriesPoly& p, const Rational& e2a) {
  SeriesPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e.e2a < e2a) break;
    out.add_term(e, c);
  }
  return out;
}

SeriesPoly nonnegative_layers(const SeriesPoly& p) { return layers_at_least(p, 0); }

}  // namespace

// Write den = top + rest, where top collects den's terms with 2^α-exponent 0
// (den's lead is x^(0,0)) and rest has only negative 2^α-exponents. Then
// 1/den = Σ_{k≤K} (−rest)^k/top^(k+1) + (infinitesimal), once K is large
// enough that (rest/top)^(K+1) pushes every numerator term below 2^α-exponent
// 0. The resulting fraction over top^(K+1) splits into 2^α layers: positive
// layers lie wholly above (0,0), negative ones wholly below, and the
// 0-layer is a rational function of α whose center long division finds.
EuclideanNumber ctr(const EuclideanNumber& a) {
  if (a.is_series()) return EuclideanNumber(a.numerator().truncated_below(Exponent::zero()));
  const SeriesPoly& num = a.numerator();
  const SeriesPoly& den = a.denominator();
  if (num.lead().exponent.e2a.sign() < 0) return EuclideanNumber();

  SeriesPoly top;
  SeriesPoly rest;
  for (const auto& [e, c] : den.terms()) (e.e2a.is_zero() ? top : rest).add_term(e, c);

  SeriesPoly t_num = num;
  SeriesPoly t_den = top;
  if (!rest.is_zero()) {
    // rest's lead has the largest (least negative) 2^α-exponent.
    const Rational gap = -rest.lead().exponent.e2a;
    const unsigned long K = (num.lead().exponent.e2a / gap).floor().get_ui();
    const SeriesPoly neg_rest = -rest;
    // Σ_{k=0}^{K} num·(−rest)^k·top^(K−k), built Horner-style. Multiplying by
    // top keeps 2^α layers, so negative layers can be dropped as they appear.
    SeriesPoly acc = nonnegative_layers(num);
    SeriesPoly rest_power(Rational(1));
    for (unsigned long k = 1; k <= K; ++k) {
      rest_power = layers_at_least(rest_power * neg_rest, -num.lead().exponent.e2a);
      acc = acc * top + nonnegative_layers(num * rest_power);
    }
    SeriesPoly top_power(Rational(1));
    for (unsigned long k = 0; k <= K; ++k) top_power = top_power * top;
    t_num = acc;
    t_den = top_power;
  }

  SeriesPoly zero_layer;
  std::map<Rational, SeriesPoly, std::greater<>> upper_layers;
  for (const auto& [e, c] : t_num.terms()) {
    const int s = e.e2a.sign();
    if (s > 0)
      upper_layers[e.e2a].add_term(e, c);
    else if (s == 0)
      zero_layer.add_term(e, c);
  }
  EuclideanNumber result(center_of_alpha_layer(std::move(zero_layer), t_den));
  for (auto& [layer, p] : upper_layers) result += EuclideanNumber(std::move(p), t_den);
  return result;
}

Rational st(const EuclideanNumber& a) {
  if (classify(a).kind == Kind::infinite)
    throw NotFinite("st of an infinite number: " + to_text(a));
  return ctr(a).to_rational();
}

bool same_monad(const EuclideanNumber& a, const EuclideanNumber& b) {
  return is_infinitesimal(a - b);
}

bool same_galaxy(const EuclideanNumber& a, const EuclideanNumber& b) {
  return is_finite(a - b);
}

EuclideanNumber pow(const EuclideanNumber& a, long k) {
  if (k < 0) {
    if (a.is_zero()) throw DivisionByZero("negative power of zero");
    return EuclideanNumber(1) / pow(a, -k);
  }
  EuclideanNumber result(1);
  EuclideanNumber base = a;
  unsigned long e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

EuclideanNumber monomial_root(const Monomial& m, unsigned long k) {
  if (k == 0) throw Unsupported("zeroth root");
  if (m.coefficient.sign() <= 0)
    throw Unsupported("root of a monomial with non-positive coefficient");
  auto c = m.coefficient.exact_root(k);
  if (!c)
    throw Unsupported("coefficient " + m.coefficient.str() +
                      " has no rational " + std::to_string(k) + "-th root");
  return EuclideanNumber::monomial(m.exponent.scaled(Rational(1) / Rational(k)),
                                   *c);
}

EuclideanNumber root(const EuclideanNumber& a, unsigned long k) {
  if (!a.is_monomial())
    throw Unsupported("root of a non-monomial: " + to_text(a));
  return monomial_root(a.numerator().lead(), k);
}

EuclideanNumber rational_power(const EuclideanNumber& a, const Rational& e) {
  if (e.is_integer()) return pow(a, e.numerator().get_si());
  const EuclideanNumber r = root(a, e.denominator().get_ui());
  return pow(r, e.numerator().get_si());
}

}  // namespace euclid
