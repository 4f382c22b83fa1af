#include "euclid/series.hpp"

#include <cassert>

namespace euclid {

SeriesPoly::SeriesPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponent::zero(), c);
}

SeriesPoly SeriesPoly::monomial(const Exponent& e, const Rational& c) {
  SeriesPoly p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

Monomial SeriesPoly::lead() const {
  assert(!terms_.empty());
  const auto& [e, c] = *terms_.begin();
  return {e, c};
}

Monomial SeriesPoly::trail() const {
  assert(!terms_.empty());
  const auto& [e, c] = *terms_.rbegin();
  return {e, c};
}

Rational SeriesPoly::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool SeriesPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

void SeriesPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SeriesPoly& SeriesPoly::operator+=(const SeriesPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SeriesPoly& SeriesPoly::operator-=(const SeriesPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SeriesPoly operator-(const SeriesPoly& a) {
  SeriesPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

SeriesPoly SeriesPoly::times(const Exponent& e, const Rational& c) const {
  SeriesPoly r;
  if (c.is_zero()) return r;
  for (const auto& [te, tc] : terms_) r.terms_.emplace_hint(r.terms_.end(), te + e, tc * c);
  return r;
}

SeriesPoly SeriesPoly::truncated_below(const Exponent& cutoff) const {
  SeriesPoly r;
  for (const auto& [e, c] : terms_) {
    if (e < cutoff) break;
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

namespace {

// Smallest α-exponent among the terms in the top 2^α layer.
Rational top_layer_trail(const SeriesPoly& p) {
  const Rational& layer = p.terms().begin()->first.e2a;
  Rational t = p.terms().begin()->first.ea;
  for (const auto& [e, c] : p.terms()) {
    if (e.e2a != layer) break;
    t = e.ea;
  }
  return t;
}

}  // namespace

std::optional<SeriesPoly> exact_quotient(const SeriesPoly& num,
                                         const SeriesPoly& den,
                                         std::size_t max_steps) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return SeriesPoly();
  // In a group ring over a totally ordered group, lead and trail of a product
  // are the sums of the factors' leads and trails.
  const Exponent floor = num.trail().exponent - den.trail().exponent;
  const Monomial d = den.lead();
  const Rational inv = d.coefficient.inverse();
  const Rational den_top_trail = top_layer_trail(den);
  SeriesPoly quotient;
  SeriesPoly rem = num;
  for (std::size_t step = 0; !rem.is_zero(); ++step) {
    if (step == max_steps) return std::nullopt;
    const Monomial r = rem.lead();
    const Exponent e = r.exponent - d.exponent;
    if (e < floor) return std::nullopt;
    // The top layer of rem must be a multiple of the top layer of den.
    if (e.ea < top_layer_trail(rem) - den_top_trail) return std::nullopt;
    const Rational c = r.coefficient * inv;
    quotient.add_term(e, c);
    rem -= den.times(e, c);
  }
  return quotient;
}

}  // namespace euclid
