#include "euclid/cli.hpp"
#include "euclid/render.hpp"

namespace euclid::cli {

struct NumExpr::Node {
  Op op;
  Rational value;
  std::string name;
  std::optional<NumExpr> lhs, rhs;
  std::optional<sets::SetExpr> set;
  std::optional<ordinals::Ordinal> ordinal;
  std::optional<SeqExpr> sequence;
};

namespace {

// b^e for an exponent that is not a rational: only 2^(c·α) exists.
EuclideanNumber exponential(const EuclideanNumber& b, const EuclideanNumber& e) {
  const bool base_two = b.is_rational() && b.to_rational() == Rational(2);
  if (base_two && e.is_monomial() && e.degree() == Exponent::alpha(Rational(1))) {
    const Rational c = e.numerator().lead().coefficient;
    return EuclideanNumber::monomial(Exponent{c, Rational()});
  }
  throw Unsupported("power with exponent " + to_text(e) + " is not in the fragment; only 2^(c·α) is");
}

EuclideanNumber power(const EuclideanNumber& b, const EuclideanNumber& e) {
  if (!e.is_rational()) return exponential(b, e);
  const Rational q = e.to_rational();
  if (!q.is_integer()) return rational_power(b, q);
  const Integer k = q.numerator();
  if (!k.fits_slong_p()) throw Unsupported("exponent " + q.str() + " is too large");
  return pow(b, k.get_si());
}

const char* op_name(NumExpr::Op op) {
  using Op = NumExpr::Op;
  switch (op) {
    case Op::add: return "add";
    case Op::sub: return "sub";
    case Op::mul: return "mul";
    case Op::div: return "div";
    case Op::neg: return "neg";
    case Op::pow: return "pow";
    case Op::num: return "num";
    case Op::ord2num: return "ord2num";
    case Op::st: return "st";
    case Op::ctr: return "ctr";
    case Op::alim: return "alim";
    default: return "?";
  }
}

}  // namespace

NumExpr::Op NumExpr::op() const { return node_->op; }

NumExpr NumExpr::literal(const Rational& q) {
  return NumExpr(std::make_shared<const Node>(Node{Op::literal, q, {}, {}, {}, {}, {}, {}}));
}

NumExpr NumExpr::atom(Op op) { return NumExpr(std::make_shared<const Node>(Node{op, {}, {}, {}, {}, {}, {}, {}})); }

NumExpr NumExpr::name(std::string n) {
  return NumExpr(std::make_shared<const Node>(Node{Op::name, {}, std::move(n), {}, {}, {}, {}, {}}));
}

NumExpr NumExpr::unary(Op op, const NumExpr& a) {
  return NumExpr(std::make_shared<const Node>(Node{op, {}, {}, a, {}, {}, {}, {}}));
}

NumExpr NumExpr::binary(Op op, const NumExpr& a, const NumExpr& b) {
  return NumExpr(std::make_shared<const Node>(Node{op, {}, {}, a, b, {}, {}, {}}));
}

NumExpr NumExpr::of_set(const sets::SetExpr& s) {
  return NumExpr(std::make_shared<const Node>(Node{Op::num, {}, {}, {}, {}, s, {}, {}}));
}

NumExpr NumExpr::of_ordinal(const ordinals::Ordinal& o) {
  return NumExpr(std::make_shared<const Node>(Node{Op::ord2num, {}, {}, {}, {}, {}, o, {}}));
}

NumExpr NumExpr::of_sequence(const SeqExpr& s) {
  return NumExpr(std::make_shared<const Node>(Node{Op::alim, {}, {}, {}, {}, {}, {}, s}));
}

EuclideanNumber NumExpr::evaluate(const Bindings& env) const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::literal: return n.value;
    case Op::alpha: return EuclideanNumber::alpha();
    case Op::eta: return EuclideanNumber::eta();
    case Op::omega: return EuclideanNumber::omega();
    case Op::name: {
      const auto it = env.find(n.name);
      if (it == env.end()) throw UnboundName(n.name);
      return it->second;
    }
    case Op::add: return n.lhs->evaluate(env) + n.rhs->evaluate(env);
    case Op::sub: return n.lhs->evaluate(env) - n.rhs->evaluate(env);
    case Op::mul: return n.lhs->evaluate(env) * n.rhs->evaluate(env);
    case Op::div: return div(n.lhs->evaluate(env), n.rhs->evaluate(env));
    case Op::neg: return -n.lhs->evaluate(env);
    case Op::pow: return power(n.lhs->evaluate(env), n.rhs->evaluate(env));
    case Op::num: return sets::numerosity(*n.set);
    case Op::ord2num: return ordinals::to_numerosity(*n.ordinal);
    case Op::st: return st(n.lhs->evaluate(env));
    case Op::ctr: return ctr(n.lhs->evaluate(env));
    case Op::alim: return alpha_limit(*n.sequence);
  }
  return {};
}

std::string NumExpr::str() const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::literal: return n.value.str();
    case Op::alpha: return "α";
    case Op::eta: return "η";
    case Op::omega: return "ω";
    case Op::name: return n.name;
    case Op::num: return "num(" + n.set->str() + ")";
    case Op::ord2num: return "ord2num(" + n.ordinal->str() + ")";
    case Op::alim: return "alim(" + n.sequence->str() + ")";
    case Op::neg:
    case Op::st:
    case Op::ctr: return std::string(op_name(n.op)) + "(" + n.lhs->str() + ")";
    default: return std::string(op_name(n.op)) + "(" + n.lhs->str() + "," + n.rhs->str() + ")";
  }
}

}  // namespace euclid::cli
