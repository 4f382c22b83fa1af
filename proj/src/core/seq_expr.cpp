#include "euclid/seq_expr.hpp"

#include "euclid/error.hpp"

namespace euclid {

SeqExpr SeqExpr::make(Op op, const SeqExpr* a, const SeqExpr* b) {
  auto node = std::make_shared<Node>();
  node->op = op;
  if (a) node->lhs = a->node_;
  if (b) node->rhs = b->node_;
  return SeqExpr(std::move(node));
}

SeqExpr SeqExpr::constant(const Rational& c) {
  auto node = std::make_shared<Node>();
  node->op = Op::constant;
  node->value = c;
  return SeqExpr(std::move(node));
}

SeqExpr SeqExpr::n() { return make(Op::var, nullptr, nullptr); }

SeqExpr operator+(const SeqExpr& a, const SeqExpr& b) { return SeqExpr::make(SeqExpr::Op::add, &a, &b); }
SeqExpr operator-(const SeqExpr& a, const SeqExpr& b) { return SeqExpr::make(SeqExpr::Op::sub, &a, &b); }
SeqExpr operator*(const SeqExpr& a, const SeqExpr& b) { return SeqExpr::make(SeqExpr::Op::mul, &a, &b); }
SeqExpr operator/(const SeqExpr& a, const SeqExpr& b) { return SeqExpr::make(SeqExpr::Op::div, &a, &b); }
SeqExpr operator-(const SeqExpr& a) { return SeqExpr::make(SeqExpr::Op::neg, &a, nullptr); }

SeqExpr SeqExpr::pow(long k) const {
  auto node = std::make_shared<Node>();
  node->op = Op::pow;
  node->exponent = k;
  node->lhs = node_;
  return SeqExpr(std::move(node));
}

EuclideanNumber SeqExpr::limit(const Node& node) {
  switch (node.op) {
    case Op::constant: return node.value;
    case Op::var: return EuclideanNumber::alpha();
    case Op::add: return limit(*node.lhs) + limit(*node.rhs);
    case Op::sub: return limit(*node.lhs) - limit(*node.rhs);
    case Op::mul: return limit(*node.lhs) * limit(*node.rhs);
    case Op::neg: return -limit(*node.lhs);
    case Op::div: {
      const EuclideanNumber den = limit(*node.rhs);
      if (den.is_zero())
        throw ZeroDenominator("denominator " + print(*node.rhs) +
                              " is identically zero");
      return limit(*node.lhs) / den;
    }
    case Op::pow: {
      const EuclideanNumber base = limit(*node.lhs);
      if (node.exponent < 0 && base.is_zero())
        throw ZeroDenominator("negative power of " + print(*node.lhs) +
                              ", which is identically zero");
      return euclid::pow(base, node.exponent);
    }
  }
  return {};
}

std::optional<Rational> SeqExpr::eval(const Node& node, const Integer& n) {
  auto binary = [&](auto f) -> std::optional<Rational> {
    auto a = eval(*node.lhs, n);
    auto b = eval(*node.rhs, n);
    if (!a || !b) return std::nullopt;
    return f(*a, *b);
  };
  switch (node.op) {
    case Op::constant: return node.value;
    case Op::var: return Rational(n);
    case Op::add: return binary([](auto& a, auto& b) { return std::optional(a + b); });
    case Op::sub: return binary([](auto& a, auto& b) { return std::optional(a - b); });
    case Op::mul: return binary([](auto& a, auto& b) { return std::optional(a * b); });
    case Op::div:
      return binary([](auto& a, auto& b) -> std::optional<Rational> {
        if (b.is_zero()) return std::nullopt;
        return a / b;
      });
    case Op::neg: {
      auto a = eval(*node.lhs, n);
      if (!a) return std::nullopt;
      return -*a;
    }
    case Op::pow: {
      auto a = eval(*node.lhs, n);
      if (!a) return std::nullopt;
      if (node.exponent < 0 && a->is_zero()) return std::nullopt;
      Rational r = 1;
      const long e = node.exponent < 0 ? -node.exponent : node.exponent;
      for (long i = 0; i < e; ++i) r *= *a;
      return node.exponent < 0 ? r.inverse() : r;
    }
  }
  return std::nullopt;
}

std::string SeqExpr::print(const Node& node) {
  switch (node.op) {
    case Op::constant:
      return node.value.sign() < 0 || !node.value.is_integer()
                 ? "(" + node.value.str() + ")"
                 : node.value.str();
    case Op::var: return "n";
    case Op::add: return "(" + print(*node.lhs) + " + " + print(*node.rhs) + ")";
    case Op::sub: return "(" + print(*node.lhs) + " - " + print(*node.rhs) + ")";
    case Op::mul: return "(" + print(*node.lhs) + "*" + print(*node.rhs) + ")";
    case Op::div: return "(" + print(*node.lhs) + "/" + print(*node.rhs) + ")";
    case Op::neg: return "(-" + print(*node.lhs) + ")";
    case Op::pow:
      return "(" + print(*node.lhs) + ")^" +
             (node.exponent < 0 ? "(" + std::to_string(node.exponent) + ")"
                                : std::to_string(node.exponent));
  }
  return "?";
}

std::string SeqExpr::str() const { return print(*node_); }

std::optional<Rational> SeqExpr::at(const Integer& n) const { return eval(*node_, n); }

EuclideanNumber alpha_limit(const SeqExpr& s) { return SeqExpr::limit(*s.node_); }

}  // namespace euclid
