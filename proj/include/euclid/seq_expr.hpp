#pragma once

#include <memory>
#include <optional>
#include <string>

#include "euclid/number.hpp"

namespace euclid {

/// Closed-form expression in one integer variable n: rational constants, n,
/// + − × ÷ and integer powers. Immutable; subtrees are shared.
class SeqExpr {
 public:
  enum class Op { constant, var, add, sub, mul, div, neg, pow };

  static SeqExpr constant(const Rational& c);
  static SeqExpr n();

  friend SeqExpr operator+(const SeqExpr& a, const SeqExpr& b);
  friend SeqExpr operator-(const SeqExpr& a, const SeqExpr& b);
  friend SeqExpr operator*(const SeqExpr& a, const SeqExpr& b);
  friend SeqExpr operator/(const SeqExpr& a, const SeqExpr& b);
  friend SeqExpr operator-(const SeqExpr& a);
  SeqExpr pow(long k) const;

  Op op() const { return node_->op; }
  std::string str() const;

  /// Value at a concrete integer; nullopt when a denominator vanishes there.
  std::optional<Rational> at(const Integer& n) const;

 private:
  struct Node {
    Op op;
    Rational value;  // constant
    long exponent = 0;  // pow
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit SeqExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static SeqExpr make(Op op, const SeqExpr* a, const SeqExpr* b);

  friend EuclideanNumber alpha_limit(const SeqExpr& s);
  static EuclideanNumber limit(const Node& node);
  static std::optional<Rational> eval(const Node& node, const Integer& n);
  static std::string print(const Node& node);

  std::shared_ptr<const Node> node_;
};

/// α-limit of a closed-form sequence: the exact value of s(α).
/// Throws ZeroDenominator when a denominator becomes identically zero.
EuclideanNumber alpha_limit(const SeqExpr& s);

}  // namespace euclid
