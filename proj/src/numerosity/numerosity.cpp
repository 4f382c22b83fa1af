#include "euclid/numerosity.hpp"

#include <optional>

#include "euclid/render.hpp"

namespace euclid::sets {

using Kind = SetExpr::Kind;

// ---------------------------------------------------------------------------
// Construction and printing

SetExpr SetExpr::make(Node n) { return SetExpr(std::make_shared<const Node>(std::move(n))); }

SetExpr SetExpr::empty() { return make({Kind::empty}); }

SetExpr SetExpr::finite(std::vector<Integer> labels) {
  Node n{Kind::finite};
  for (auto& l : labels)
    if (!n.labels.insert(l).second)
      throw InvalidSet("duplicate label " + l.get_str() + " in finite set");
  return make(std::move(n));
}

SetExpr SetExpr::nplus() { return make({Kind::nplus}); }
SetExpr SetExpr::naturals() { return make({Kind::naturals}); }
SetExpr SetExpr::integers() { return make({Kind::integers}); }
SetExpr SetExpr::rationals() { return make({Kind::rationals}); }

SetExpr SetExpr::q_interval(const Rational& q) {
  Node n{Kind::q_interval};
  n.q = q;
  return make(std::move(n));
}

SetExpr SetExpr::multiples_of(long k) {
  if (k < 1) throw InvalidSet("mult(k) needs k >= 1");
  Node n{Kind::multiples};
  n.k = k;
  return make(std::move(n));
}

SetExpr SetExpr::kth_powers(long k) {
  if (k < 1) throw InvalidSet("pow_k(k) needs k >= 1");
  Node n{Kind::kth_powers};
  n.k = k;
  return make(std::move(n));
}

SetExpr SetExpr::pfin_nplus() { return make({Kind::pfin}); }

SetExpr SetExpr::tagged(std::string label) {
  Node n{Kind::tagged};
  n.tag = std::move(label);
  return make(std::move(n));
}

SetExpr SetExpr::disjoint_union(const SetExpr& a, const SetExpr& b) {
  Node n{Kind::disjoint_union};
  n.left = std::make_shared<const SetExpr>(a);
  n.right = std::make_shared<const SetExpr>(b);
  return make(std::move(n));
}

SetExpr SetExpr::product(const SetExpr& a, const SetExpr& b) {
  Node n{Kind::product};
  n.left = std::make_shared<const SetExpr>(a);
  n.right = std::make_shared<const SetExpr>(b);
  return make(std::move(n));
}

SetExpr SetExpr::product_singleton(const SetExpr& a, std::string label) {
  Node n{Kind::product_singleton};
  n.left = std::make_shared<const SetExpr>(a);
  n.tag = std::move(label);
  return make(std::move(n));
}

std::string SetExpr::str() const {
  switch (kind()) {
    case Kind::empty: return "{}";
    case Kind::finite: {
      std::string s = "{";
      bool first = true;
      for (const auto& l : labels()) {
        if (!first) s += ",";
        s += l.get_str();
        first = false;
      }
      return s + "}";
    }
    case Kind::nplus: return "N+";
    case Kind::naturals: return "N";
    case Kind::integers: return "Z";
    case Kind::rationals: return "Q";
    case Kind::q_interval: return "Q(" + q().str() + "," + (q() + 1).str() + "]";
    case Kind::multiples: return "mult(" + std::to_string(k()) + ")";
    case Kind::kth_powers: return "pow_k(" + std::to_string(k()) + ")";
    case Kind::pfin: return "Pfin(N+)";
    case Kind::tagged: return "tag(" + tag() + ")";
    case Kind::disjoint_union: return "(" + left().str() + " (+) " + right().str() + ")";
    case Kind::product: return "(" + left().str() + " x " + right().str() + ")";
    case Kind::product_singleton: return "(" + left().str() + " x tag(" + tag() + "))";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Membership

namespace {

bool is_perfect_power(const Integer& n, long k) {
  if (n < 1) return false;
  return mpz_root(Integer().get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k)) != 0;
}

bool number_in(const SetExpr& a, const Rational& r) {
  switch (a.kind()) {
    case Kind::finite: return r.is_integer() && a.labels().count(r.numerator()) > 0;
    case Kind::nplus: return r.is_integer() && r.sign() > 0;
    case Kind::naturals: return r.is_integer() && r.sign() >= 0;
    case Kind::integers: return r.is_integer();
    case Kind::rationals: return true;
    case Kind::q_interval: return a.q() < r && r <= a.q() + 1;
    case Kind::multiples:
      return r.is_integer() && r.sign() > 0 &&
             mpz_divisible_ui_p(r.numerator().get_mpz_t(), static_cast<unsigned long>(a.k())) != 0;
    case Kind::kth_powers: return r.is_integer() && is_perfect_power(r.numerator(), a.k());
    default: return false;
  }
}

bool is_number_atom(Kind k) {
  switch (k) {
    case Kind::finite:
    case Kind::nplus:
    case Kind::naturals:
    case Kind::integers:
    case Kind::rationals:
    case Kind::q_interval:
    case Kind::multiples:
    case Kind::kth_powers: return true;
    default: return false;
  }
}

bool is_product_like(Kind k) { return k == Kind::product || k == Kind::product_singleton; }

}  // namespace

bool contains(const SetExpr& a, const Element& x) {
  switch (a.kind()) {
    case Kind::empty: return false;
    case Kind::pfin:
      if (const auto* s = std::get_if<FinSubset>(&x.value)) {
        for (const auto& m : s->members)
          if (m < 1) return false;
        return true;
      }
      return false;
    case Kind::tagged:
      if (const auto* t = std::get_if<Tag>(&x.value)) return t->label == a.tag();
      return false;
    case Kind::disjoint_union: return contains(a.left(), x) || contains(a.right(), x);
    case Kind::product:
      if (const auto* p = std::get_if<Pair>(&x.value))
        return contains(a.left(), *p->first) && contains(a.right(), *p->second);
      return false;
    case Kind::product_singleton:
      if (const auto* p = std::get_if<Pair>(&x.value)) {
        const auto* t = std::get_if<Tag>(&p->second->value);
        return t && t->label == a.tag() && contains(a.left(), *p->first);
      }
      return false;
    default:
      if (const auto* r = std::get_if<Rational>(&x.value)) return number_in(a, *r);
      return false;
  }
}

// ---------------------------------------------------------------------------
// Three-valued analysis

namespace {

Truth both(Truth a, Truth b) {
  if (a == Truth::no || b == Truth::no) return Truth::no;
  if (a == Truth::yes && b == Truth::yes) return Truth::yes;
  return Truth::unknown;
}

Truth either(Truth a, Truth b) {
  if (a == Truth::yes || b == Truth::yes) return Truth::yes;
  if (a == Truth::no && b == Truth::no) return Truth::no;
  return Truth::unknown;
}

Truth from_bool(bool b) { return b ? Truth::yes : Truth::no; }

ElementPtr element(Element e) { return std::make_shared<const Element>(std::move(e)); }

/// A finite sample of members of `a`, used to refute containment.
std::vector<ElementPtr> samples(const SetExpr& a, int budget) {
  std::vector<ElementPtr> out;
  auto num = [&](const Rational& r) { out.push_back(element({r})); };
  switch (a.kind()) {
    case Kind::empty: break;
    case Kind::finite:
      for (const auto& l : a.labels()) num(Rational(l));
      break;
    case Kind::nplus:
      for (long i = 1; i <= 24; ++i) num(i);
      break;
    case Kind::naturals:
      for (long i = 0; i <= 24; ++i) num(i);
      break;
    case Kind::integers:
      for (long i = -24; i <= 24; ++i) num(i);
      break;
    case Kind::rationals:
      for (long i = -12; i <= 12; ++i)
        for (long d = 1; d <= 4; ++d) num(Rational(Integer(i), Integer(d)));
      break;
    case Kind::q_interval:
      for (long d = 1; d <= 6; ++d)
        for (long j = 1; j <= d; ++j) num(a.q() + Rational(Integer(j), Integer(d)));
      break;
    case Kind::multiples:
      for (long i = 1; i <= 24; ++i) num(Rational(i * a.k()));
      break;
    case Kind::kth_powers:
      for (long i = 1; i <= 12; ++i) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(a.k()));
        num(Rational(p));
      }
      break;
    case Kind::pfin:
      for (unsigned mask = 0; mask < 16; ++mask) {
        FinSubset s;
        for (unsigned b = 0; b < 4; ++b)
          if (mask & (1U << b)) s.members.insert(Integer(b + 1));
        out.push_back(element({s}));
      }
      break;
    case Kind::tagged: out.push_back(element({Tag{a.tag()}})); break;
    case Kind::disjoint_union: {
      out = samples(a.left(), budget / 2);
      auto r = samples(a.right(), budget / 2);
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    case Kind::product:
    case Kind::product_singleton: {
      const auto first = samples(a.left(), 12);
      const auto second = a.kind() == Kind::product
                              ? samples(a.right(), 12)
                              : std::vector<ElementPtr>{element({Tag{a.tag()}})};
      for (const auto& x : first)
        for (const auto& y : second) out.push_back(element({Pair{x, y}}));
      break;
    }
  }
  if (static_cast<int>(out.size()) > budget) out.resize(static_cast<std::size_t>(budget));
  return out;
}

/// Containment between infinite number atoms, decided by their structure.
Truth atom_subset(const SetExpr& a, const SetExpr& b) {
  const Kind ka = a.kind();
  const Kind kb = b.kind();
  if (kb == Kind::rationals) return Truth::yes;
  if (ka == Kind::rationals) return Truth::no;
  if (ka == Kind::q_interval) return from_bool(kb == Kind::q_interval && a.q() == b.q());
  // a is now a set of integers unbounded above (or ℤ).
  if (kb == Kind::q_interval) return Truth::no;
  if (kb == Kind::integers) return Truth::yes;
  if (ka == Kind::integers) return Truth::no;
  if (kb == Kind::naturals) return Truth::yes;
  if (ka == Kind::naturals) return Truth::no;
  // Both are subsets of ℕ⁺; ℕ⁺ = mult(1) = pow_k(1).
  auto as_mult = [](const SetExpr& s) -> long {
    if (s.kind() == Kind::nplus) return 1;
    if (s.kind() == Kind::multiples) return s.k();
    return s.k() == 1 ? 1 : 0;
  };
  auto as_pow = [](const SetExpr& s) -> long {
    if (s.kind() == Kind::nplus) return 1;
    if (s.kind() == Kind::kth_powers) return s.k();
    return s.k() == 1 ? 1 : 0;
  };
  const long bm = as_mult(b);
  const long bp = as_pow(b);
  if (bm == 1) return Truth::yes;
  if (const long am = as_mult(a); am != 0 && bm != 0) return from_bool(am % bm == 0);
  if (const long ap = as_pow(a); ap != 0 && bp != 0) return from_bool(ap % bp == 0);
  // A non-trivial power set against non-trivial multiples, or vice versa:
  // 1 is a k-th power but no proper multiple, and m·p (p a large prime) is
  // no proper power.
  return Truth::no;
}

/// a \ b when it is a provably finite set of integers.
std::optional<std::set<Integer>> finite_difference(const SetExpr& a, const SetExpr& b) {
  if (is_subset(a, b) == Truth::yes) return std::set<Integer>{};
  if (a.kind() == Kind::finite) {
    std::set<Integer> out;
    for (const auto& l : a.labels())
      if (!number_in(b, Rational(l))) out.insert(l);
    return out;
  }
  if (a.kind() == Kind::naturals && is_subset(SetExpr::nplus(), b) == Truth::yes)
    return number_in(b, Rational(0)) ? std::set<Integer>{} : std::set<Integer>{Integer(0)};
  return std::nullopt;
}

Truth refuted_by_sample(const SetExpr& a, const SetExpr& b) {
  for (const auto& x : samples(a, 2000))
    if (!contains(b, *x)) return Truth::no;
  return Truth::unknown;
}

}  // namespace

Truth is_empty(const SetExpr& a) {
  switch (a.kind()) {
    case Kind::empty: return Truth::yes;
    case Kind::finite: return from_bool(a.labels().empty());
    case Kind::disjoint_union: return both(is_empty(a.left()), is_empty(a.right()));
    case Kind::product: return either(is_empty(a.left()), is_empty(a.right()));
    case Kind::product_singleton: return is_empty(a.left());
    default: return Truth::no;
  }
}

Truth is_subset(const SetExpr& a, const SetExpr& b) {
  const Truth a_empty = is_empty(a);
  if (a_empty == Truth::yes) return Truth::yes;
  const Kind ka = a.kind();
  const Kind kb = b.kind();

  if (ka == Kind::disjoint_union) return both(is_subset(a.left(), b), is_subset(a.right(), b));
  if (ka == Kind::finite) {
    for (const auto& l : a.labels())
      if (!contains(b, Element{Rational(l)})) return Truth::no;
    return Truth::yes;
  }
  if (ka == Kind::tagged) return from_bool(contains(b, Element{Tag{a.tag()}}));

  if (kb == Kind::disjoint_union) {
    const Truth l = is_subset(a, b.left());
    const Truth r = is_subset(a, b.right());
    if (l == Truth::yes || r == Truth::yes) return Truth::yes;
    if (is_number_atom(ka)) {
      if (auto d = finite_difference(a, b.left()); d && is_subset(SetExpr::finite({d->begin(), d->end()}), b.right()) == Truth::yes)
        return Truth::yes;
      if (auto d = finite_difference(a, b.right()); d && is_subset(SetExpr::finite({d->begin(), d->end()}), b.left()) == Truth::yes)
        return Truth::yes;
    }
    return refuted_by_sample(a, b);
  }

  if (is_product_like(ka)) {
    if (!is_product_like(kb)) return a_empty == Truth::no ? Truth::no : Truth::unknown;
    const SetExpr a2 = ka == Kind::product ? a.right() : SetExpr::tagged(a.tag());
    const SetExpr b2 = kb == Kind::product ? b.right() : SetExpr::tagged(b.tag());
    const Truth parts = both(is_subset(a.left(), b.left()), is_subset(a2, b2));
    // For nonempty factors, A1×A2 ⊆ B1×B2 exactly when both factors nest.
    if (parts == Truth::yes || a_empty == Truth::no) return parts;
    return Truth::unknown;
  }

  if (ka == Kind::pfin) return from_bool(kb == Kind::pfin);
  // a is an infinite number atom.
  if (kb == Kind::finite || kb == Kind::empty) return Truth::no;
  if (!is_number_atom(kb)) return Truth::no;
  return atom_subset(a, b);
}

Truth are_disjoint(const SetExpr& a, const SetExpr& b) {
  if (is_empty(a) == Truth::yes || is_empty(b) == Truth::yes) return Truth::yes;
  const Kind ka = a.kind();
  const Kind kb = b.kind();
  if (ka == Kind::disjoint_union) return both(are_disjoint(a.left(), b), are_disjoint(a.right(), b));
  if (kb == Kind::disjoint_union) return both(are_disjoint(a, b.left()), are_disjoint(a, b.right()));
  if (ka == Kind::finite) {
    for (const auto& l : a.labels())
      if (contains(b, Element{Rational(l)})) return Truth::no;
    return Truth::yes;
  }
  if (kb == Kind::finite) return are_disjoint(b, a);
  if (ka == Kind::tagged) return from_bool(!contains(b, Element{Tag{a.tag()}}));
  if (kb == Kind::tagged) return are_disjoint(b, a);

  if (is_product_like(ka) || is_product_like(kb)) {
    if (!(is_product_like(ka) && is_product_like(kb))) return Truth::yes;
    const SetExpr a2 = ka == Kind::product ? a.right() : SetExpr::tagged(a.tag());
    const SetExpr b2 = kb == Kind::product ? b.right() : SetExpr::tagged(b.tag());
    const Truth d = either(are_disjoint(a.left(), b.left()), are_disjoint(a2, b2));
    // Both nonempty here; if neither factor pair is disjoint a common pair exists.
    return d;
  }
  if (ka == Kind::pfin || kb == Kind::pfin) return from_bool(ka != kb);

  // Two infinite number atoms.
  if (ka == Kind::rationals || kb == Kind::rationals) return Truth::no;
  if (ka == Kind::q_interval && kb == Kind::q_interval)
    return from_bool((a.q() - b.q()).abs() >= 1);
  if (ka == Kind::q_interval || kb == Kind::q_interval) {
    const SetExpr& iv = ka == Kind::q_interval ? a : b;
    const SetExpr& other = ka == Kind::q_interval ? b : a;
    // (q, q+1] holds exactly one integer.
    return from_bool(!number_in(other, Rational(Integer(iv.q().floor() + 1))));
  }
  // Infinite integer atoms all share arbitrarily large members (e.g. k^j).
  return Truth::no;
}

std::string to_string(SubsetVerdict v) {
  switch (v) {
    case SubsetVerdict::strict_subset: return "strict-subset";
    case SubsetVerdict::equal: return "equal";
    case SubsetVerdict::superset_strict: return "superset-strict";
    case SubsetVerdict::incomparable: return "incomparable";
    case SubsetVerdict::unknown: return "unknown";
  }
  return "?";
}

SubsetVerdict subset_check(const SetExpr& a, const SetExpr& b) {
  const Truth sub = is_subset(a, b);
  const Truth sup = is_subset(b, a);
  if (sub == Truth::yes && sup == Truth::yes) return SubsetVerdict::equal;
  if (sub == Truth::yes && sup == Truth::no) return SubsetVerdict::strict_subset;
  if (sub == Truth::no && sup == Truth::yes) return SubsetVerdict::superset_strict;
  if (sub == Truth::no && sup == Truth::no) return SubsetVerdict::incomparable;
  return SubsetVerdict::unknown;
}

// ---------------------------------------------------------------------------
// Numerosity

EuclideanNumber numerosity(const SetExpr& a) {
  const EuclideanNumber alpha = EuclideanNumber::alpha();
  switch (a.kind()) {
    case Kind::empty: return 0;
    case Kind::finite: return Rational(Integer(static_cast<unsigned long>(a.labels().size())));
    case Kind::tagged: return 1;
    case Kind::nplus: return alpha;
    // ℕ = ℕ⁺ ⊎ {0}
    case Kind::naturals: return alpha + 1;
    case Kind::integers: return 2 * alpha + 1;
    case Kind::rationals: return 2 * alpha * alpha + 1;
    case Kind::q_interval: return alpha;
    case Kind::multiples: return alpha / a.k();
    case Kind::kth_powers: return root(alpha, static_cast<unsigned long>(a.k()));
    case Kind::pfin: return EuclideanNumber::two_pow_alpha();
    case Kind::disjoint_union: {
      const Truth d = are_disjoint(a.left(), a.right());
      if (d != Truth::yes)
        throw DisjointnessError(a.left().str() + " and " + a.right().str() +
                                (d == Truth::no ? " intersect" : " are not provably disjoint"));
      return numerosity(a.left()) + numerosity(a.right());
    }
    case Kind::product: return numerosity(a.left()) * numerosity(a.right());
    case Kind::product_singleton: return numerosity(a.left());
  }
  return 0;
}

}  // namespace euclid::sets
