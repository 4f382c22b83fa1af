#include "euclid/rational.hpp"

#include <stdexcept>

#include "euclid/error.hpp"

namespace euclid {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  return out.set_str(std::string(s[0] == '+' ? s.substr(1) : s), 10) == 0;
}

}  // namespace

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num))
      throw std::invalid_argument("not a rational: " + std::string(text));
  } else {
    if (!parse_integer(text.substr(0, slash), num) ||
        !parse_integer(text.substr(slash + 1), den))
      throw std::invalid_argument("not a rational: " + std::string(text));
  }
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / q_);
}

std::optional<Rational> Rational::exact_root(unsigned long k) const {
  if (k == 0) return std::nullopt;
  if (k == 1) return *this;
  if (sign() < 0 && k % 2 == 0) return std::nullopt;
  Integer num = q_.get_num();
  const bool negative = num < 0;
  if (negative) num = -num;
  Integer rn;
  Integer rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), q_.get_den_mpz_t(), k) == 0)
    return std::nullopt;
  if (negative) rn = -rn;
  return Rational(rn, rd);
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::fraction_str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace euclid
