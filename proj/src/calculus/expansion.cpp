#include "euclid/expansion.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <optional>

#include "euclid/render.hpp"
#include "rationality.hpp"

namespace euclid::calculus {

// ---------------------------------------------------------------- Coeff

Coeff::Coeff(const SymReal& s) {
  if (!s.is_structurally_zero()) terms_.emplace(OpaqueProduct{}, s);
}

Coeff Coeff::opaque(Opaque o) {
  Coeff c;
  c.terms_.emplace(OpaqueProduct{{std::move(o), 1}}, SymReal(1));
  return c;
}

bool Coeff::is_pure() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

SymReal Coeff::pure() const { return terms_.empty() ? SymReal() : terms_.begin()->second; }

bool Coeff::contains(Growth g) const {
  for (const auto& [p, c] : terms_)
    for (const auto& [o, e] : p)
      if (o.growth == g) return true;
  return false;
}

bool Coeff::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_zero(); });
}

namespace {

constexpr const char* kDot = "·";

std::string opaque_text(const Coeff::OpaqueProduct& p) {
  std::string out;
  for (const auto& [o, e] : p) {
    if (!out.empty()) out += kDot;
    out += o.label;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string join_atoms(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += kDot;
    out += p;
  }
  return out;
}

}  // namespace

std::vector<std::pair<Rational, std::string>> Coeff::monomials(const std::string& extra) const {
  std::vector<std::pair<Rational, std::string>> out;
  for (const auto& [op, sym] : terms_) {
    const std::string o = opaque_text(op);
    const Rational* constant = nullptr;
    for (const auto& [sp, q] : sym.terms()) {
      if (sp.empty())
        constant = &q;
      else
        out.emplace_back(q, join_atoms({product_text(sp), o, extra}));
    }
    if (constant) out.emplace_back(*constant, join_atoms({o, extra}));
  }
  return out;
}

std::string Coeff::str() const { return linear_text(monomials("")); }

void Coeff::add_term(const OpaqueProduct& p, const SymReal& c) {
  if (c.is_structurally_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_structurally_zero()) terms_.erase(it);
  }
}

Coeff& Coeff::operator+=(const Coeff& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

Coeff operator*(const Coeff& a, const Coeff& b) {
  Coeff r;
  for (const auto& [p, c] : a.terms_)
    for (const auto& [q, d] : b.terms_) {
      Coeff::OpaqueProduct m = p;
      for (const auto& [o, e] : q) {
        if ((m[o] += e) == 0) m.erase(o);
      }
      r.add_term(m, c * d);
    }
  return r;
}

Coeff operator-(const Coeff& a) {
  Coeff r;
  for (const auto& [p, c] : a.terms_) r.terms_.emplace(p, -c);
  return r;
}

bool structurally_equal(const Coeff& a, const Coeff& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || !structurally_equal(i->second, j->second)) return false;
  return true;
}

// ---------------------------------------------------------------- text

namespace {

std::string power_atom(long k) {
  if (k == 0) return "";
  if (k < 0) return k == -1 ? "α" : "α^" + std::to_string(-k);
  return k == 1 ? "η" : "η^" + std::to_string(k);
}

}  // namespace

std::string alpha_text(const std::map<long, Coeff>& terms) {
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& [k, c] : terms) {
    if (k > 0) break;
    for (auto& m : c.monomials(power_atom(k))) parts.push_back(std::move(m));
  }
  return linear_text(parts);
}

std::string InfinitesimalSeries::str() const {
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& [k, c] : terms)
    for (auto& m : c.monomials(power_atom(k))) parts.push_back(std::move(m));
  if (exact) return linear_text(parts);
  const std::string tail = "O(" + (order == 0 ? std::string("1") : power_atom(order)) + ")";
  if (parts.empty()) return tail;
  return linear_text(parts) + " + " + tail;
}

// ---------------------------------------------------------------- series

namespace {

constexpr long kExact = std::numeric_limits<long>::max();

// Raised when the working order is too low to decide a leading term.
struct NeedMore {};

using Terms = std::map<long, Coeff>;

struct Series {
  Terms t;
  long order = kExact;
};

long shifted(long order, long k) { return order == kExact ? kExact : order + k; }

void put(Terms& t, long k, const Coeff& c) {
  if (c.is_structurally_zero()) return;
  auto [it, inserted] = t.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_structurally_zero()) t.erase(it);
  }
}

void truncate(Series& s, long n) {
  s.order = std::min(s.order, n);
  if (s.order != kExact) s.t.erase(s.t.lower_bound(s.order), s.t.end());
}

bool is_exact_zero(const Series& s) { return s.t.empty() && s.order == kExact; }

Series constant(const Coeff& c) {
  Series s;
  put(s.t, 0, c);
  return s;
}

Series add(const Series& a, const Series& b, int sign = 1) {
  Series r;
  r.order = std::min(a.order, b.order);
  for (const auto& [k, c] : a.t)
    if (k < r.order) put(r.t, k, c);
  for (const auto& [k, c] : b.t)
    if (k < r.order) put(r.t, k, sign > 0 ? c : -c);
  return r;
}

long low(const Series& s) { return s.t.empty() ? s.order : s.t.begin()->first; }

Series mul(const Series& a, const Series& b) {
  if (is_exact_zero(a) || is_exact_zero(b)) return {};
  Series r;
  r.order = std::min(shifted(a.order, low(b)), shifted(b.order, low(a)));
  for (const auto& [i, c] : a.t)
    for (const auto& [j, d] : b.t)
      if (i + j < r.order) put(r.t, i + j, c * d);
  return r;
}

Series scale(const Series& a, const Coeff& c) { return mul(a, constant(c)); }

Series shift(const Series& a, long k) {
  Series r;
  r.order = shifted(a.order, k);
  for (const auto& [i, c] : a.t) r.t.emplace(i + k, c);
  return r;
}

struct Lead {
  long power;
  Coeff c;
};

// First numerically nonzero term; nullopt for an exact zero.
std::optional<Lead> leading(const Series& s) {
  for (const auto& [k, c] : s.t)
    if (!c.is_zero()) return Lead{k, c};
  if (s.order == kExact) return std::nullopt;
  throw NeedMore{};
}

// s = c·t^v·(1 + r); returns r, with relative order.
Series unit_part(const Series& s, const Lead& lead, const SymReal& cinv) {
  Series r;
  r.order = shifted(s.order, -lead.power);
  for (const auto& [k, c] : s.t)
    if (k > lead.power && k - lead.power < r.order) put(r.t, k - lead.power, c * Coeff(cinv));
  return r;
}

Coeff rational_coeff(const Rational& q) { return Coeff(SymReal(q)); }

Rational inverse_factorial(long k) {
  Integer f = 1;
  for (long i = 2; i <= k; ++i) f *= i;
  return Rational(Integer(1), f);
}

// ---------------------------------------------------------------- engine

class Engine {
 public:
  Engine(const Probe& p, long working_order) : probe_(p), w_(working_order) {}

  struct Value {
    Series s;
    Rationality r;
  };

  Value eval(const FuncExpr& f);

 private:
  using Op = FuncExpr::Op;

  // Σ a(k)·h^k for h of positive valuation, through relative order `target`.
  Series taylor(const std::function<Coeff(long)>& a, const Series& h, long target) const;
  Series inverse(const Series& s) const;
  Series power(const Series& s, long n) const;

  struct Split {
    Terms infinite;  // powers < 0, nonzero
    Coeff c0;
    Series h;        // powers > 0
  };
  Split split(const Series& u) const;

  Value trig(const Value& u, bool is_sin) const;
  Value exponential(const Value& u) const;
  Value logarithm(const Value& u) const;
  Value absolute(const Value& u, bool sign_only) const;

  const Probe& probe_;
  long w_;
};

Series Engine::taylor(const std::function<Coeff(long)>& a, const Series& h, long target) const {
  Series sum = constant(a(0));
  if (is_exact_zero(h)) return sum;
  const long cap = std::min(target, h.order);
  Series hp = constant(rational_coeff(1));
  for (long k = 1; k < cap; ++k) {
    hp = mul(hp, h);
    truncate(hp, cap);
    if (hp.t.empty()) break;
    const Coeff ak = a(k);
    if (!ak.is_structurally_zero()) sum = add(sum, scale(hp, ak));
  }
  truncate(sum, cap);
  return sum;
}

Series Engine::inverse(const Series& s) const {
  const auto lead = leading(s);
  if (!lead) throw Pole("division by zero at the expansion point");
  if (!lead->c.is_pure())
    throw Unresolvable("1/(" + lead->c.str() + ")", "the leading coefficient " + lead->c.str() + " may vanish");
  const SymReal cinv = lead->c.pure().inverse();
  const Series r = unit_part(s, *lead, cinv);
  // 1/(1+r) = Σ (−r)^k
  const Series neg_r = scale(r, rational_coeff(-1));
  const Series g = taylor([](long) { return rational_coeff(1); }, neg_r, shifted(w_, lead->power));
  return shift(scale(g, Coeff(cinv)), -lead->power);
}

Series Engine::power(const Series& s, long n) const {
  if (n < 0) return power(inverse(s), -n);
  Series result = constant(rational_coeff(1));
  Series base = s;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

Engine::Split Engine::split(const Series& u) const {
  if (u.order <= 0) throw NeedMore{};
  Split out;
  out.h.order = u.order;
  for (const auto& [k, c] : u.t) {
    if (k < 0) {
      if (!c.is_zero()) out.infinite.emplace(k, c);
    } else if (k == 0) {
      out.c0 = c;
    } else {
      out.h.t.emplace(k, c);
    }
  }
  return out;
}

Engine::Value Engine::trig(const Value& u, bool is_sin) const {
  const Split sp = split(u.s);
  Coeff sq;
  Coeff cq;
  if (sp.infinite.empty() && sp.c0.is_pure()) {
    sq = SymReal::sin(sp.c0.pure());
    cq = SymReal::cos(sp.c0.pure());
  } else {
    Terms q = sp.infinite;
    put(q, 0, sp.c0);
    const std::string label = sp.infinite.empty() ? sp.c0.str() : alpha_text(q);
    sq = Coeff::opaque({"sin(" + label + ")", Growth::bounded});
    cq = Coeff::opaque({"cos(" + label + ")", Growth::bounded});
  }
  // Derivative cycles of sin and cos at Q.
  const std::array<Coeff, 4> cycle = is_sin ? std::array<Coeff, 4>{sq, cq, -sq, -cq}
                                            : std::array<Coeff, 4>{cq, -sq, -cq, sq};
  const Series s = taylor([&](long k) { return cycle[static_cast<std::size_t>(k % 4)] * rational_coeff(inverse_factorial(k)); },
                          sp.h, w_);
  const bool zero_arg = is_exact_zero(u.s);
  return {s, rationality::transcendental(u.r, zero_arg)};
}

Engine::Value Engine::exponential(const Value& u) const {
  const Split sp = split(u.s);
  Coeff eq;
  if (sp.infinite.empty()) {
    if (sp.c0.is_pure()) {
      eq = SymReal::exp(sp.c0.pure());
    } else {
      if (sp.c0.contains(Growth::huge) || sp.c0.contains(Growth::logarithmic))
        throw Unresolvable("exp(" + sp.c0.str() + ")", "exponential of an unbounded quantity");
      eq = Coeff::opaque({"exp(" + sp.c0.str() + ")", Growth::bounded});
    }
  } else {
    const Coeff& top = sp.infinite.begin()->second;
    if (!top.is_pure()) throw Unresolvable("sign(" + top.str() + ")", "sign of an opaque coefficient");
    if (top.pure().sign() < 0) {
      // Smaller than every power of η.
      Series zero;
      zero.order = w_;
      return {zero, Rationality::unknown};
    }
    Terms q = sp.infinite;
    put(q, 0, sp.c0);
    eq = Coeff::opaque({"exp(" + alpha_text(q) + ")", Growth::huge});
  }
  const Series s = taylor([&](long k) { return eq * rational_coeff(inverse_factorial(k)); }, sp.h, w_);
  return {s, rationality::transcendental(u.r, is_exact_zero(u.s))};
}

Engine::Value Engine::logarithm(const Value& u) const {
  const auto lead = leading(u.s);
  if (!lead) throw Pole("logarithm of zero");
  if (!lead->c.is_pure()) throw Unresolvable("sign(" + lead->c.str() + ")", "sign of an opaque coefficient");
  const SymReal c = lead->c.pure();
  if (c.sign() < 0) throw DomainError("logarithm of a negative value");
  const Series r = unit_part(u.s, *lead, c.inverse());
  Coeff base = SymReal::log(c);
  if (lead->power != 0)
    base += rational_coeff(lead->power) * Coeff::opaque({"log(η)", Growth::logarithmic});
  // log(1+r) = Σ (−1)^(k+1) r^k / k
  const Series s = taylor(
      [&](long k) {
        if (k == 0) return base;
        return rational_coeff(Rational(Integer(k % 2 == 1 ? 1 : -1), Integer(k)));
      },
      r, w_);
  const bool at_one = u.s.t.size() == 1 && u.s.order == kExact && lead->power == 0 && c.is_rational() &&
                      c.rational() == 1;
  return {s, rationality::transcendental(u.r, at_one)};
}

Engine::Value Engine::absolute(const Value& u, bool sign_only) const {
  const auto lead = leading(u.s);
  if (!lead) return {Series{}, Rationality::rational};
  if (!lead->c.is_pure()) throw Unresolvable("sign(" + lead->c.str() + ")", "sign of an opaque coefficient");
  const int sg = lead->c.pure().sign();
  if (sign_only) return {constant(rational_coeff(sg)), Rationality::rational};
  return {sg < 0 ? scale(u.s, rational_coeff(-1)) : u.s, u.r};
}

Engine::Value Engine::eval(const FuncExpr& f) {
  switch (f.op()) {
    case Op::var: {
      Series s = constant(probe_.x0);
      put(s.t, 1, rational_coeff(probe_.side));
      return {s, probe_.point};
    }
    case Op::constant: return {constant(f.value()), f.value().rationality()};
    case Op::add:
    case Op::sub: {
      const Value a = eval(f.lhs());
      const Value b = eval(f.rhs());
      return {add(a.s, b.s, f.op() == Op::add ? 1 : -1), rationality::add(a.r, b.r)};
    }
    case Op::mul: {
      const Value a = eval(f.lhs());
      const Value b = eval(f.rhs());
      return {mul(a.s, b.s), rationality::mul(a.r, is_exact_zero(a.s), b.r, is_exact_zero(b.s))};
    }
    case Op::div: {
      const Value a = eval(f.lhs());
      const Value b = eval(f.rhs());
      return {mul(a.s, inverse(b.s)), rationality::div(a.r, is_exact_zero(a.s), b.r)};
    }
    case Op::neg: {
      const Value a = eval(f.lhs());
      return {scale(a.s, rational_coeff(-1)), a.r};
    }
    case Op::pow: {
      const Value a = eval(f.lhs());
      return {power(a.s, f.exponent()), rationality::pow(a.r, f.exponent())};
    }
    case Op::sin: return trig(eval(f.lhs()), true);
    case Op::cos: return trig(eval(f.lhs()), false);
    case Op::exp: return exponential(eval(f.lhs()));
    case Op::log: return logarithm(eval(f.lhs()));
    case Op::abs: return absolute(eval(f.lhs()), false);
    case Op::sign: return absolute(eval(f.lhs()), true);
    case Op::dirichlet: {
      const Value a = eval(f.lhs());
      if (a.r == Rationality::unknown)
        throw Unresolvable(f.str(), "rationality of " + f.lhs().str() + " at the point is undetermined");
      return {constant(rational_coeff(a.r == Rationality::rational ? 1 : 0)), Rationality::rational};
    }
  }
  return {};
}

}  // namespace

Probe grid_probe(const SymReal& x0, int side) { return Probe{x0, side, x0.rationality()}; }

InfinitesimalSeries expand(const FuncExpr& f, const Probe& p, long order) {
  long w = std::max(order, 1L);
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      const Series s = Engine(p, w).eval(f).s;
      if (s.order >= order) {
        InfinitesimalSeries out;
        out.order = order;
        out.exact = s.order == kExact && (s.t.empty() || s.t.rbegin()->first < order);
        for (const auto& [k, c] : s.t)
          if (k < order && !c.is_zero()) out.terms.emplace(k, c);
        return out;
      }
      w += order - s.order + 2;
    } catch (const NeedMore&) {
      w = 2 * w + 2;
    }
  }
  throw Unresolvable(f.str(), "expansion of " + f.str() + " does not reach order " + std::to_string(order));
}

InfinitesimalSeries expand(const FuncExpr& f, const SymReal& x0, Direction d, long order) {
  return expand(f, grid_probe(x0, d == Direction::plus ? 1 : -1), order);
}

}  // namespace euclid::calculus
