#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "euclid/error.hpp"
#include "euclid/number.hpp"

namespace euclid::sets {

class DisjointnessError : public Error {
 public:
  explicit DisjointnessError(const std::string& what)
      : Error("disjointness", what) {}
};

class InvalidSet : public Error {
 public:
  explicit InvalidSet(const std::string& what) : Error("invalid-set", what) {}
};

/// Symbolic set in a decidable algebra of atoms and combinators.
///
/// Number atoms are sets of rationals: Finite (integer labels), ℕ⁺, ℕ, ℤ, ℚ,
/// (q, q+1] ∩ ℚ, the multiples {k, 2k, ...} and the k-th powers
/// {1, 2^k, 3^k, ...}. The remaining atoms live in separate sorts: ℘_fin(ℕ⁺)
/// holds finite sets of positive integers, Tagged(b) is the singleton {b}
/// of an opaque label, and products hold ordered pairs.
class SetExpr {
 public:
  enum class Kind {
    empty,
    finite,
    nplus,
    naturals,
    integers,
    rationals,
    q_interval,
    multiples,
    kth_powers,
    pfin,
    tagged,
    disjoint_union,
    product,
    product_singleton,
  };

  static SetExpr empty();
  /// Throws InvalidSet on duplicate labels.
  static SetExpr finite(std::vector<Integer> labels);
  static SetExpr nplus();
  static SetExpr naturals();
  static SetExpr integers();
  static SetExpr rationals();
  /// (q, q+1] ∩ ℚ.
  static SetExpr q_interval(const Rational& q);
  /// {k, 2k, 3k, ...}; throws InvalidSet for k < 1.
  static SetExpr multiples_of(long k);
  /// {1, 2^k, 3^k, ...}; throws InvalidSet for k < 1.
  static SetExpr kth_powers(long k);
  static SetExpr pfin_nplus();
  static SetExpr tagged(std::string label);
  static SetExpr disjoint_union(const SetExpr& a, const SetExpr& b);
  static SetExpr product(const SetExpr& a, const SetExpr& b);
  /// A × {b} for a tag label b.
  static SetExpr product_singleton(const SetExpr& a, std::string label);

  Kind kind() const { return node_->kind; }
  const std::set<Integer>& labels() const { return node_->labels; }
  const Rational& q() const { return node_->q; }
  long k() const { return node_->k; }
  const std::string& tag() const { return node_->tag; }
  const SetExpr& left() const { return *node_->left; }
  const SetExpr& right() const { return *node_->right; }

  /// Surface syntax, e.g. "(Z x mult(3)) (+) {1,2}".
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::set<Integer> labels{};
    Rational q{};
    long k = 0;
    std::string tag{};
    std::shared_ptr<const SetExpr> left{}, right{};
  };
  explicit SetExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static SetExpr make(Node n);

  std::shared_ptr<const Node> node_;
};

/// Elements of the universe the set algebra talks about.
struct Element;
using ElementPtr = std::shared_ptr<const Element>;
struct Tag {
  std::string label;
};
struct FinSubset {
  std::set<Integer> members;
};
struct Pair {
  ElementPtr first, second;
};
struct Element {
  std::variant<Rational, FinSubset, Tag, Pair> value;
};

bool contains(const SetExpr& a, const Element& x);

/// Three-valued truth for syntactic set analysis.
enum class Truth { no, yes, unknown };

Truth is_empty(const SetExpr& a);
Truth is_subset(const SetExpr& a, const SetExpr& b);
Truth are_disjoint(const SetExpr& a, const SetExpr& b);

enum class SubsetVerdict { strict_subset, equal, superset_strict, incomparable, unknown };
std::string to_string(SubsetVerdict v);

SubsetVerdict subset_check(const SetExpr& a, const SetExpr& b);

/// Numerosity of a set expression. Disjoint unions whose operands are not
/// provably disjoint raise DisjointnessError.
EuclideanNumber numerosity(const SetExpr& a);

}  // namespace euclid::sets
