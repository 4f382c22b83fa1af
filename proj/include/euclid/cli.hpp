#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "euclid/error.hpp"
#include "euclid/func_expr.hpp"
#include "euclid/number.hpp"
#include "euclid/numerosity.hpp"
#include "euclid/ordinal.hpp"
#include "euclid/seq_expr.hpp"

namespace euclid::cli {

/// Malformed input. `column` counts code points from 1.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t column, std::string expected, const std::string& found);
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t column_;
  std::string expected_;
};

class UnboundName : public Error {
 public:
  explicit UnboundName(const std::string& name) : Error("unbound-name", "no binding named " + name) {}
};

using Bindings = std::map<std::string, EuclideanNumber>;

/// Number expression, evaluated only at execution time.
class NumExpr {
 public:
  enum class Op { literal, alpha, eta, omega, name, add, sub, mul, div, neg, pow, num, ord2num, st, ctr, alim };

  static NumExpr literal(const Rational& q);
  static NumExpr atom(Op op);
  static NumExpr name(std::string n);
  static NumExpr unary(Op op, const NumExpr& a);
  static NumExpr binary(Op op, const NumExpr& a, const NumExpr& b);
  static NumExpr of_set(const sets::SetExpr& s);
  static NumExpr of_ordinal(const ordinals::Ordinal& o);
  static NumExpr of_sequence(const SeqExpr& s);

  Op op() const;

  /// Throws the originating module's errors and UnboundName.
  EuclideanNumber evaluate(const Bindings& env) const;
  /// Operator form, e.g. "div(add(mul(2,α),1),α)".
  std::string str() const;

 private:
  struct Node;
  explicit NumExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class DerivKind { plus, minus, mean, grid };

struct Command {
  enum class Kind { eval, num, ord, ord2num, deriv, integ, integ_num, sum, classify, st, ctr, alim, let };

  Kind kind = Kind::eval;
  std::optional<NumExpr> number;
  std::optional<sets::SetExpr> set;
  std::optional<ordinals::Ordinal> ordinal;
  std::optional<calculus::FuncExpr> function;
  std::optional<SeqExpr> sequence;
  DerivKind deriv = DerivKind::plus;
  /// Evaluation point of deriv, bounds of integ and integ_num.
  std::vector<calculus::SymReal> points;
  unsigned long steps = 0;
  /// Binding target of let.
  std::string name;

  /// Canonical operator form, e.g. "deriv(mean,abs(x),0)".
  std::string str() const;
};

std::string command_name(Command::Kind k);

/// Parses one input line. Accepts `cmd(args)` and `cmd args`, `deriv KIND f
/// at p`, `let name = expr`, and a bare number expression as eval.
/// Identifiers bound in `env` are valid number atoms.
Command parse(std::string_view line, const Bindings& env = {});

struct Options {
  /// Series truncation order of derivative expansions.
  long order = 4;
  /// Significant digits of numeric SymReal tests.
  int precision = 50;
  /// Grid steps when integ falls back to the numeric path.
  unsigned long numeric_steps = 1000000;
};

struct Result {
  Command::Kind kind;
  std::string text;
  /// Set for results that are Euclidean numbers.
  std::optional<EuclideanNumber> number;
  std::optional<std::string> real_part;
  /// Subset of exact, numeric, indeterminate.
  std::vector<std::string> flags;

  /// One-line JSON record with kind, text, terms, denominator_terms,
  /// real_part and flags.
  std::string structured() const;
};

/// Command interpreter holding `let` bindings.
class Session {
 public:
  explicit Session(Options opts = {});

  Result execute(const Command& c);
  Result run(std::string_view line) { return execute(parse(line, bindings_)); }

  const Bindings& bindings() const { return bindings_; }

 private:
  Options opts_;
  Bindings bindings_;
};

enum ExitCode { kOk = 0, kDomainError = 1, kSyntaxError = 2 };

}  // namespace euclid::cli
