#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "euclid/symreal.hpp"

namespace euclid::calculus {

/// Expression in the single variable x. Immutable; copies share nodes.
class FuncExpr {
 public:
  enum class Op {
    var,
    constant,
    add,
    sub,
    mul,
    div,
    neg,
    pow,
    sin,
    cos,
    exp,
    log,
    abs,
    sign,
    dirichlet,
  };

  static FuncExpr x();
  static FuncExpr constant(const SymReal& c);
  /// `fn` is one of sin, cos, exp, log, abs, sign, dirichlet.
  static FuncExpr apply(Op fn, const FuncExpr& arg);

  FuncExpr pow(long k) const;

  friend FuncExpr operator+(const FuncExpr& a, const FuncExpr& b);
  friend FuncExpr operator-(const FuncExpr& a, const FuncExpr& b);
  friend FuncExpr operator*(const FuncExpr& a, const FuncExpr& b);
  friend FuncExpr operator/(const FuncExpr& a, const FuncExpr& b);
  friend FuncExpr operator-(const FuncExpr& a);

  Op op() const { return node_->op; }
  const SymReal& value() const { return node_->value; }
  long exponent() const { return node_->exponent; }
  /// Operand of unary nodes and left operand of binary nodes.
  const FuncExpr& lhs() const { return *node_->lhs; }
  const FuncExpr& rhs() const { return *node_->rhs; }

  /// Parser syntax, e.g. "x*sin(1/x^2)".
  std::string str() const;

 private:
  struct Node {
    Op op;
    SymReal value;
    long exponent = 0;
    std::shared_ptr<const FuncExpr> lhs, rhs;
  };
  explicit FuncExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static FuncExpr make(Node n);

  std::shared_ptr<const Node> node_;
};

FuncExpr sin(const FuncExpr& f);
FuncExpr cos(const FuncExpr& f);
FuncExpr exp(const FuncExpr& f);
FuncExpr log(const FuncExpr& f);
FuncExpr abs(const FuncExpr& f);
FuncExpr sign(const FuncExpr& f);
FuncExpr dirichlet(const FuncExpr& f);

/// Coefficients c₀..cₙ when f is a polynomial in x (constant divisors
/// allowed), else nullopt.
std::optional<std::vector<SymReal>> as_polynomial(const FuncExpr& f);

/// Double-precision evaluator with rationality tracking for dirichlet.
class NumericFunction {
 public:
  explicit NumericFunction(const FuncExpr& f);

  struct Point {
    double value;
    Rationality rationality;
  };
  /// Throws NumericEvaluation on a pole, a domain error, or dirichlet at a
  /// point of unknown rationality.
  Point operator()(double x, Rationality x_rationality) const;

 private:
  struct Instr {
    FuncExpr::Op op;
    double constant = 0;
    Rationality constant_rationality = Rationality::unknown;
    bool constant_zero = false;
    long exponent = 0;
    int lhs = -1, rhs = -1;
  };
  int compile(const FuncExpr& f);

  std::vector<Instr> code_;
  int root_ = -1;
};

}  // namespace euclid::calculus
