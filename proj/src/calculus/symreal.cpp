#include "euclid/symreal.hpp"

#include <atomic>
#include <cmath>
#include <vector>

#include "euclid/render.hpp"
#include "mpfr_value.hpp"

namespace euclid::calculus {

namespace {

std::atomic<int> g_digits{50};

constexpr const char* kDot = "·";

mpfr_prec_t bits_for(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873622)) + 64;
}

SymReal::Product multiply_products(const SymReal::Product& a, const SymReal::Product& b) {
  SymReal::Product r = a;
  for (const auto& [atom, e] : b) r[atom] += e;
  return r;
}

Rational integer_power(const Integer& k, long e) {
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

long floor_div2(long e) { return e >= 0 ? e / 2 : -((-e + 1) / 2); }

// Folds √k powers into the coefficient, merges the remaining square roots
// and the exp factors, and drops zero exponents.
SymReal::Product normalize(Rational& coef, const SymReal::Product& p) {
  SymReal::Product out;
  Integer radicand = 1;
  SymReal exp_arg;
  bool has_exp = false;
  for (const auto& [atom, e] : p) {
    if (e == 0) continue;
    switch (atom.kind) {
      case Atom::Kind::sqrt: {
        const long q = floor_div2(e);
        coef *= integer_power(atom.radicand, q);
        if (e - 2 * q == 1) {
          Integer g;
          mpz_gcd(g.get_mpz_t(), radicand.get_mpz_t(), atom.radicand.get_mpz_t());
          coef *= Rational(g);
          radicand = radicand * atom.radicand / (g * g);
        }
        break;
      }
      case Atom::Kind::exp:
        exp_arg += SymReal(Rational(e)) * *atom.arg;
        has_exp = true;
        break;
      default:
        out.emplace(atom, e);
    }
  }
  if (radicand > 1) out.emplace(Atom{Atom::Kind::sqrt, radicand, nullptr}, 1);
  if (has_exp && !exp_arg.is_structurally_zero())
    out.emplace(Atom{Atom::Kind::exp, 0, std::make_shared<const SymReal>(exp_arg)}, 1);
  return out;
}

// Squarefree decomposition n = s²·m by trial division; a remainder beyond
// the trial bound is only checked for being a perfect square.
std::pair<Integer, Integer> squarefree_split(Integer n) {
  Integer square = 1;
  Integer free = 1;
  for (unsigned long p = 2; p < 100000 && Integer(p) * p <= n; ++p) {
    unsigned count = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++count;
    }
    for (unsigned i = 0; i + 1 < count; i += 2) square *= p;
    if (count % 2 == 1) free *= p;
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      square *= r;
    } else {
      free *= n;
    }
  }
  return {square, free};
}

void evaluate(const SymReal& s, Mpfr& out);

void evaluate_atom(const Atom& a, Mpfr& out) {
  switch (a.kind) {
    case Atom::Kind::pi:
      mpfr_const_pi(out.get(), MPFR_RNDN);
      return;
    case Atom::Kind::sqrt:
      mpfr_set_z(out.get(), a.radicand.get_mpz_t(), MPFR_RNDN);
      mpfr_sqrt(out.get(), out.get(), MPFR_RNDN);
      return;
    default:
      break;
  }
  evaluate(*a.arg, out);
  switch (a.kind) {
    case Atom::Kind::sin: mpfr_sin(out.get(), out.get(), MPFR_RNDN); break;
    case Atom::Kind::cos: mpfr_cos(out.get(), out.get(), MPFR_RNDN); break;
    case Atom::Kind::exp: mpfr_exp(out.get(), out.get(), MPFR_RNDN); break;
    case Atom::Kind::log: mpfr_log(out.get(), out.get(), MPFR_RNDN); break;
    case Atom::Kind::recip:
      if (mpfr_zero_p(out.get())) throw NumericEvaluation("reciprocal of a numerically zero value");
      mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
      break;
    default: break;
  }
}

void evaluate(const SymReal& s, Mpfr& out) {
  mpfr_set_zero(out.get(), 1);
  Mpfr term(out.prec());
  Mpfr factor(out.prec());
  for (const auto& [product, c] : s.terms()) {
    mpfr_set_q(term.get(), c.raw().get_mpq_t(), MPFR_RNDN);
    for (const auto& [atom, e] : product) {
      evaluate_atom(atom, factor);
      mpfr_pow_si(factor.get(), factor.get(), e, MPFR_RNDN);
      mpfr_mul(term.get(), term.get(), factor.get(), MPFR_RNDN);
    }
    mpfr_add(out.get(), out.get(), term.get(), MPFR_RNDN);
  }
}

bool is_transcendental_atom(const Atom& a) {
  if (a.kind == Atom::Kind::pi) return true;
  if (!a.arg || !a.arg->is_rational()) return false;
  const Rational q = a.arg->rational();
  switch (a.kind) {
    case Atom::Kind::sin:
    case Atom::Kind::exp: return !q.is_zero();
    case Atom::Kind::cos: return !q.is_zero();
    case Atom::Kind::log: return q != 1;
    default: return false;
  }
}

std::string atom_text(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::pi: return "π";
    case Atom::Kind::sqrt: return "√" + a.radicand.get_str();
    case Atom::Kind::sin: return "sin(" + a.arg->str() + ")";
    case Atom::Kind::cos: return "cos(" + a.arg->str() + ")";
    case Atom::Kind::exp:
      if (a.arg->is_rational() && a.arg->rational() == 1) return "e";
      return "exp(" + a.arg->str() + ")";
    case Atom::Kind::log: return "log(" + a.arg->str() + ")";
    case Atom::Kind::recip: return "(" + a.arg->str() + ")";
  }
  return "?";
}

}  // namespace

std::string product_text(const SymReal::Product& p) {
  std::string num;
  std::string den;
  for (const auto& [atom, e] : p) {
    std::string t = atom_text(atom);
    if (atom.kind == Atom::Kind::recip) {
      if (e != 1) t += "^" + std::to_string(e);
      den += den.empty() ? t : kDot + t;
      continue;
    }
    if (e != 1) t += e > 0 ? "^" + std::to_string(e) : "^(" + std::to_string(e) + ")";
    num += num.empty() ? t : kDot + t;
  }
  if (den.empty()) return num;
  return (num.empty() ? "1" : num) + "/" + den;
}

int default_digits() { return g_digits.load(); }
void set_default_digits(int digits) { g_digits.store(digits < 10 ? 10 : digits); }

bool operator==(const Atom& a, const Atom& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (const int c = cmp(a.radicand, b.radicand); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (!a.arg || !b.arg) return (a.arg != nullptr) <=> (b.arg != nullptr);
  return structural_compare(*a.arg, *b.arg);
}

std::strong_ordering structural_compare(const SymReal& a, const SymReal& b) {
  return a.terms_ <=> b.terms_;
}

SymReal::SymReal(const Rational& r) {
  if (!r.is_zero()) terms_.emplace(Product{}, r);
}

SymReal SymReal::from_atom(Atom a, long exponent) {
  SymReal s;
  s.add_term(Product{{std::move(a), exponent}}, 1);
  return s;
}

void SymReal::add_term(const Product& p, const Rational& c) {
  Rational coef = c;
  const Product n = normalize(coef, p);
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.emplace(n, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Atom* SymReal::single_atom() const {
  if (terms_.size() != 1) return nullptr;
  const auto& [p, c] = *terms_.begin();
  if (c != 1 || p.size() != 1 || p.begin()->second != 1) return nullptr;
  return &p.begin()->first;
}

SymReal SymReal::pi() { return from_atom(Atom{Atom::Kind::pi, 0, nullptr}); }

SymReal SymReal::e() { return exp(SymReal(1)); }

SymReal SymReal::sqrt(const Rational& q) {
  if (q.sign() < 0) throw DomainError("square root of negative " + q.str());
  if (q.is_zero()) return SymReal();
  // √(p/r) = √(p·r)/r
  const auto [square, free] = squarefree_split(q.numerator() * q.denominator());
  const Rational coef = Rational(square) / Rational(q.denominator());
  if (free == 1) return SymReal(coef);
  SymReal s;
  s.add_term(Product{{Atom{Atom::Kind::sqrt, free, nullptr}, 1}}, coef);
  return s;
}

namespace {

// q with s = q·π, when s is a rational multiple of π.
std::optional<Rational> pi_multiple(const SymReal& s) {
  if (s.terms().size() != 1) return std::nullopt;
  const auto& [p, c] = *s.terms().begin();
  if (p.size() != 1 || p.begin()->first.kind != Atom::Kind::pi || p.begin()->second != 1)
    return std::nullopt;
  return c;
}

bool is_odd(const Integer& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

}  // namespace

SymReal SymReal::sin(const SymReal& s) {
  if (s.is_structurally_zero()) return SymReal();
  if (const auto q = pi_multiple(s)) {
    if (q->is_integer()) return SymReal();
    if ((*q * 2).is_integer()) return SymReal(is_odd(q->floor()) ? -1 : 1);
  }
  return from_atom(Atom{Atom::Kind::sin, 0, std::make_shared<const SymReal>(s)});
}

SymReal SymReal::cos(const SymReal& s) {
  if (s.is_structurally_zero()) return SymReal(1);
  if (const auto q = pi_multiple(s)) {
    if (q->is_integer()) return SymReal(is_odd(q->numerator()) ? -1 : 1);
    if ((*q * 2).is_integer()) return SymReal();
  }
  return from_atom(Atom{Atom::Kind::cos, 0, std::make_shared<const SymReal>(s)});
}

SymReal SymReal::exp(const SymReal& s) {
  if (s.is_structurally_zero()) return SymReal(1);
  if (const Atom* a = s.single_atom(); a && a->kind == Atom::Kind::log) return *a->arg;
  return from_atom(Atom{Atom::Kind::exp, 0, std::make_shared<const SymReal>(s)});
}

SymReal SymReal::log(const SymReal& s) {
  if (s.sign() <= 0) throw DomainError("logarithm of non-positive " + s.str());
  if (s.is_rational() && s.rational() == 1) return SymReal();
  if (const Atom* a = s.single_atom(); a && a->kind == Atom::Kind::exp) return *a->arg;
  return from_atom(Atom{Atom::Kind::log, 0, std::make_shared<const SymReal>(s)});
}

bool SymReal::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational SymReal::rational() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::optional<Rational> SymReal::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return rational();
}

Rationality SymReal::rationality() const {
  if (is_rational()) return Rationality::rational;
  std::vector<const Product*> nonconstant;
  for (const auto& [p, c] : terms_)
    if (!p.empty()) nonconstant.push_back(&p);
  // A nonconstant Laurent polynomial in π alone is transcendental, and so is
  // a combination of distinct e^q with rational q ≠ 0 (Lindemann).
  const auto only = [&](auto pred) {
    for (const Product* p : nonconstant)
      for (const auto& [atom, e] : *p)
        if (!pred(atom)) return false;
    return true;
  };
  if (only([](const Atom& a) { return a.kind == Atom::Kind::pi; })) return Rationality::irrational;
  if (only([](const Atom& a) {
        return a.kind == Atom::Kind::exp && a.arg->is_rational() && !a.arg->rational().is_zero();
      }))
    return Rationality::irrational;
  if (nonconstant.size() == 1 && nonconstant[0]->size() == 1) {
    const Atom& a = nonconstant[0]->begin()->first;
    if (a.kind == Atom::Kind::sqrt || is_transcendental_atom(a)) return Rationality::irrational;
  }
  return Rationality::unknown;
}

SymReal::SignInfo SymReal::sign_info() const {
  if (is_rational()) return {rational().sign(), true};
  const int digits = default_digits();
  Mpfr v(bits_for(digits));
  evaluate(*this, v);
  Mpfr threshold(64);
  mpfr_set_ui(threshold.get(), 10, MPFR_RNDN);
  mpfr_pow_si(threshold.get(), threshold.get(), -(digits - 10), MPFR_RNDN);
  if (mpfr_cmpabs(v.get(), threshold.get()) < 0) return {0, false};
  return {mpfr_sgn(v.get()), false};
}

SymReal SymReal::inverse() const {
  if (is_zero()) throw DivisionByZero("reciprocal of zero value " + str());
  if (terms_.size() == 1) {
    const auto& [p, c] = *terms_.begin();
    Product inv;
    SymReal recip_part(1);
    for (const auto& [atom, e] : p) {
      if (atom.kind == Atom::Kind::recip)
        recip_part *= atom.arg->pow(e);
      else
        inv.emplace(atom, -e);
    }
    SymReal r;
    r.add_term(inv, c.inverse());
    return r * recip_part;
  }
  // (q + r√k)⁻¹ = (q − r√k)/(q² − r²k)
  if (terms_.size() == 2 && terms_.begin()->first.empty()) {
    const auto& [p, r] = *std::next(terms_.begin());
    if (p.size() == 1 && p.begin()->first.kind == Atom::Kind::sqrt) {
      const Rational q = terms_.begin()->second;
      const Rational k(p.begin()->first.radicand);
      SymReal conj(q);
      conj.add_term(p, -r);
      return conj * SymReal((q * q - r * r * k).inverse());
    }
  }
  const Rational lead = terms_.begin()->second;
  const SymReal normalized = *this * SymReal(lead.inverse());
  return SymReal(lead.inverse()) *
         from_atom(Atom{Atom::Kind::recip, 0, std::make_shared<const SymReal>(normalized)});
}

SymReal SymReal::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  SymReal result(1);
  SymReal base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

double SymReal::to_double() const {
  if (is_rational()) return rational().to_double();
  Mpfr v(128);
  evaluate(*this, v);
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

std::string SymReal::decimal(int digits) const {
  Mpfr v(bits_for(digits));
  evaluate(*this, v);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string SymReal::str() const {
  std::vector<std::pair<Rational, std::string>> parts;
  const Rational* constant = nullptr;
  for (const auto& [p, c] : terms_) {
    if (p.empty())
      constant = &c;
    else
      parts.emplace_back(c, product_text(p));
  }
  if (constant) parts.emplace_back(*constant, "");
  return linear_text(parts);
}

SymReal& SymReal::operator+=(const SymReal& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

SymReal& SymReal::operator-=(const SymReal& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

SymReal& SymReal::operator*=(const SymReal& o) {
  SymReal r;
  for (const auto& [p, c] : terms_)
    for (const auto& [q, d] : o.terms_) r.add_term(multiply_products(p, q), c * d);
  return *this = std::move(r);
}

SymReal operator-(const SymReal& a) {
  SymReal r;
  for (const auto& [p, c] : a.terms_) r.terms_.emplace(p, -c);
  return r;
}

}  // namespace euclid::calculus
