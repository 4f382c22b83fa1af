#include <set>

#include "euclid/cli.hpp"
#include "fold.hpp"
#include "lexer.hpp"

namespace euclid::cli {

SyntaxError::SyntaxError(std::size_t column, std::string expected, const std::string& found)
    : Error("syntax", "column " + std::to_string(column) + ": expected " + expected + ", found " +
                          (found.empty() ? "end of input" : "'" + found + "'")),
      column_(column),
      expected_(std::move(expected)) {}

std::string command_name(Command::Kind k) {
  using K = Command::Kind;
  switch (k) {
    case K::eval: return "eval";
    case K::num: return "num";
    case K::ord: return "ord";
    case K::ord2num: return "ord2num";
    case K::deriv: return "deriv";
    case K::integ: return "integ";
    case K::integ_num: return "integ_num";
    case K::sum: return "sum";
    case K::classify: return "classify";
    case K::st: return "st";
    case K::ctr: return "ctr";
    case K::alim: return "alim";
    case K::let: return "let";
  }
  return "?";
}

namespace {

using calculus::FuncExpr;
using calculus::SymReal;
using sets::SetExpr;
using ordinals::Ordinal;

const std::map<std::string, Command::Kind> kCommands = {
    {"eval", Command::Kind::eval},         {"num", Command::Kind::num},
    {"ord", Command::Kind::ord},           {"ord2num", Command::Kind::ord2num},
    {"deriv", Command::Kind::deriv},       {"integ", Command::Kind::integ},
    {"integ_num", Command::Kind::integ_num}, {"sum", Command::Kind::sum},
    {"classify", Command::Kind::classify}, {"st", Command::Kind::st},
    {"ctr", Command::Kind::ctr},           {"alim", Command::Kind::alim},
};

const std::set<std::string> kReserved = {
    "alpha", "eta", "omega", "w", "pi", "e", "sqrt", "sin", "cos", "exp", "log", "abs", "sign", "dirichlet",
    "dirichletQ", "x", "k", "n", "N", "Z", "Q", "mult", "pow_k", "Pfin", "tag", "empty", "at", "let",
};

const std::map<std::string, FuncExpr::Op> kFunctions = {
    {"sin", FuncExpr::Op::sin},   {"cos", FuncExpr::Op::cos},       {"exp", FuncExpr::Op::exp},
    {"log", FuncExpr::Op::log},   {"abs", FuncExpr::Op::abs},       {"sign", FuncExpr::Op::sign},
    {"dirichlet", FuncExpr::Op::dirichlet}, {"dirichletQ", FuncExpr::Op::dirichlet},
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Bindings& env) : t_(std::move(tokens)), env_(env) {}

  Command line();

 private:
  const Token& peek(std::size_t ahead = 0) const { return t_[std::min(i_ + ahead, t_.size() - 1)]; }
  const Token& next() { return t_[i_ < t_.size() - 1 ? i_++ : i_]; }
  bool at_sym(std::string_view s) const { return peek().type == Token::Type::sym && peek().text == s; }
  bool at_ident(std::string_view s) const { return peek().type == Token::Type::ident && peek().text == s; }
  bool accept(std::string_view s) {
    if (!at_sym(s)) return false;
    ++i_;
    return true;
  }
  [[noreturn]] void fail(const std::string& expected) const { throw SyntaxError(peek().column, expected, peek().text); }
  void expect(std::string_view s) {
    if (!accept(s)) fail("'" + std::string(s) + "'");
  }
  void expect_ident(std::string_view s) {
    if (!at_ident(s)) fail("'" + std::string(s) + "'");
    ++i_;
  }
  void expect_end() {
    if (peek().type != Token::Type::end) fail("end of input");
  }

  // Index of the ')' matching the '(' at i_, or npos.
  std::size_t matching_paren() const;
  void arguments(Command& c);
  void separator();

  Integer integer();
  Rational literal();
  Rational rational();
  Rational signed_rational();
  long small_integer(long lo);
  long signed_exponent();

  NumExpr number();
  NumExpr number_term();
  NumExpr number_unary();
  NumExpr number_power();
  NumExpr number_atom();

  SetExpr set();
  SetExpr set_product();
  SetExpr set_atom();

  Ordinal ordinal();
  Ordinal ordinal_term();
  Ordinal ordinal_power();
  Ordinal ordinal_atom();

  SeqExpr sequence();
  SeqExpr sequence_term();
  SeqExpr sequence_unary();
  SeqExpr sequence_atom();

  FuncExpr function(const std::set<std::string>& vars);
  FuncExpr function_term(const std::set<std::string>& vars);
  FuncExpr function_unary(const std::set<std::string>& vars);
  FuncExpr function_power(const std::set<std::string>& vars);
  FuncExpr function_atom(const std::set<std::string>& vars);
  SymReal constant();

  std::vector<Token> t_;
  std::size_t i_ = 0;
  const Bindings& env_;
};

std::size_t Parser::matching_paren() const {
  int depth = 0;
  for (std::size_t j = i_; j < t_.size(); ++j) {
    if (t_[j].type != Token::Type::sym) continue;
    if (t_[j].text == "(") ++depth;
    if (t_[j].text == ")" && --depth == 0) return j;
  }
  return std::string::npos;
}

Command Parser::line() {
  Command c;
  if (peek().type == Token::Type::end) fail("a command or expression");
  if (at_ident("let")) {
    next();
    if (peek().type != Token::Type::ident) fail("a name");
    c.kind = Command::Kind::let;
    c.name = next().text;
    if (kReserved.contains(c.name) || kCommands.contains(c.name)) throw SyntaxError(t_[i_ - 1].column, "an unreserved name", c.name);
    expect("=");
    c.number = number();
    expect_end();
    return c;
  }
  const auto cmd = peek().type == Token::Type::ident ? kCommands.find(peek().text) : kCommands.end();
  if (cmd == kCommands.end()) {
    c.number = number();
    expect_end();
    return c;
  }
  c.kind = cmd->second;
  const bool nestable = c.kind == Command::Kind::num || c.kind == Command::Kind::ord2num ||
                        c.kind == Command::Kind::st || c.kind == Command::Kind::ctr || c.kind == Command::Kind::alim;
  if (peek(1).type == Token::Type::sym && peek(1).text == "(") {
    const std::size_t save = i_;
    ++i_;
    const std::size_t close = matching_paren();
    if (close == t_.size() - 2) {
      ++i_;
      arguments(c);
      expect(")");
      expect_end();
      return c;
    }
    if (nestable) {
      // e.g. st(x) + 1 is an expression; alim (n+1)/n is a command
      i_ = save;
      try {
        Command e;
        e.number = number();
        expect_end();
        return e;
      } catch (const SyntaxError& as_expression) {
        i_ = save;
        try {
          next();
          arguments(c);
          expect_end();
          return c;
        } catch (const SyntaxError& as_command) {
          if (as_command.column() > as_expression.column()) throw;
          throw as_expression;
        }
      }
    }
    i_ = save;
  }
  next();
  arguments(c);
  expect_end();
  return c;
}

void Parser::separator() {
  if (!accept(",")) fail("','");
}

void Parser::arguments(Command& c) {
  using K = Command::Kind;
  static const std::set<std::string> x_only = {"x"};
  static const std::set<std::string> index_vars = {"k", "n", "x"};
  switch (c.kind) {
    case K::eval:
    case K::classify:
    case K::st:
    case K::ctr: c.number = number(); return;
    case K::num: c.set = set(); return;
    case K::ord:
    case K::ord2num: c.ordinal = ordinal(); return;
    case K::alim: c.sequence = sequence(); return;
    case K::deriv: {
      static const std::map<std::string, DerivKind> kinds = {
          {"plus", DerivKind::plus}, {"minus", DerivKind::minus}, {"mean", DerivKind::mean}, {"grid", DerivKind::grid}};
      const auto it = peek().type == Token::Type::ident ? kinds.find(peek().text) : kinds.end();
      if (it == kinds.end()) fail("plus, minus, mean or grid");
      c.deriv = it->second;
      next();
      accept(",");
      c.function = function(x_only);
      if (!accept(",")) expect_ident("at");
      c.points.push_back(constant());
      return;
    }
    case K::integ:
    case K::integ_num:
      c.function = function(x_only);
      separator();
      c.points.push_back(constant());
      separator();
      c.points.push_back(constant());
      if (c.kind == K::integ_num && accept(",")) {
        const Integer n = integer();
        if (n < 1 || !n.fits_ulong_p()) throw SyntaxError(t_[i_ - 1].column, "a positive step count", n.get_str());
        c.steps = n.get_ui();
      }
      return;
    case K::sum:
      c.function = function(index_vars);
      separator();
      c.number = number();
      return;
    case K::let: return;
  }
}

Integer Parser::integer() {
  if (peek().type != Token::Type::number || peek().text.find('.') != std::string::npos) fail("an integer");
  return Integer(next().text);
}

// Integer or decimal literal.
Rational Parser::literal() {
  if (peek().type != Token::Type::number) fail("a number");
  const std::string text = next().text;
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(Integer(text));
  Integer scale = 1;
  for (std::size_t j = dot + 1; j < text.size(); ++j) scale *= 10;
  return Rational(Integer(text.substr(0, dot) + text.substr(dot + 1)), scale);
}

// Literal or p/q.
Rational Parser::rational() {
  Rational r = literal();
  if (at_sym("/") && peek(1).type == Token::Type::number) {
    next();
    const std::size_t col = peek().column;
    const Rational d = literal();
    if (d.is_zero()) throw SyntaxError(col, "a nonzero denominator", "0");
    r /= d;
  }
  return r;
}

Rational Parser::signed_rational() {
  if (accept("-")) return -rational();
  accept("+");
  return rational();
}

long Parser::small_integer(long lo) {
  const std::size_t col = peek().column;
  const Integer n = integer();
  if (n < lo || !n.fits_slong_p()) throw SyntaxError(col, "an integer ≥ " + std::to_string(lo), n.get_str());
  return n.get_si();
}

long Parser::signed_exponent() {
  const bool paren = accept("(");
  const bool negative = accept("-");
  const std::size_t col = peek().column;
  const Integer n = integer();
  if (!n.fits_slong_p()) throw SyntaxError(col, "a machine-size exponent", n.get_str());
  if (paren && !accept(")")) fail("an integer exponent");
  return negative ? -n.get_si() : n.get_si();
}

// ---------------------------------------------------------------- numbers

NumExpr Parser::number() {
  NumExpr r = number_term();
  for (;;) {
    if (accept("+"))
      r = NumExpr::binary(NumExpr::Op::add, r, number_term());
    else if (accept("-"))
      r = NumExpr::binary(NumExpr::Op::sub, r, number_term());
    else
      return r;
  }
}

NumExpr Parser::number_term() {
  NumExpr r = number_unary();
  for (;;) {
    if (accept("*") || accept("×"))
      r = NumExpr::binary(NumExpr::Op::mul, r, number_unary());
    else if (accept("/"))
      r = NumExpr::binary(NumExpr::Op::div, r, number_unary());
    else
      return r;
  }
}

NumExpr Parser::number_unary() {
  if (accept("-")) return NumExpr::unary(NumExpr::Op::neg, number_unary());
  if (accept("+")) return number_unary();
  return number_power();
}

NumExpr Parser::number_power() {
  const NumExpr base = number_atom();
  if (!accept("^")) return base;
  return NumExpr::binary(NumExpr::Op::pow, base, number_unary());
}

NumExpr Parser::number_atom() {
  const Token& tok = peek();
  if (tok.type == Token::Type::number) return NumExpr::literal(literal());
  if (accept("(")) {
    const NumExpr inner = number();
    expect(")");
    return inner;
  }
  if (tok.type != Token::Type::ident) fail("a number");
  const std::string name = tok.text;
  if (name == "alpha") return next(), NumExpr::atom(NumExpr::Op::alpha);
  if (name == "eta") return next(), NumExpr::atom(NumExpr::Op::eta);
  if (name == "omega") return next(), NumExpr::atom(NumExpr::Op::omega);
  if (name == "num" || name == "ord2num" || name == "st" || name == "ctr" || name == "alim") {
    next();
    expect("(");
    NumExpr r = NumExpr::literal(0);
    if (name == "num")
      r = NumExpr::of_set(set());
    else if (name == "ord2num")
      r = NumExpr::of_ordinal(ordinal());
    else if (name == "alim")
      r = NumExpr::of_sequence(sequence());
    else
      r = NumExpr::unary(name == "st" ? NumExpr::Op::st : NumExpr::Op::ctr, number());
    expect(")");
    return r;
  }
  if (env_.contains(name)) return next(), NumExpr::name(name);
  fail("a number");
}

// ---------------------------------------------------------------- sets

SetExpr Parser::set() {
  SetExpr r = set_product();
  while (accept("(+)")) r = SetExpr::disjoint_union(r, set_product());
  return r;
}

SetExpr Parser::set_product() {
  SetExpr r = set_atom();
  for (;;) {
    if (!accept("×")) {
      if (!at_ident("x")) return r;
      next();
    }
    if (!at_ident("tag")) {
      r = SetExpr::product(r, set_atom());
      continue;
    }
    next();
    expect("(");
    if (peek().type != Token::Type::ident && peek().type != Token::Type::number) fail("a tag label");
    r = SetExpr::product_singleton(r, next().text);
    expect(")");
  }
}

SetExpr Parser::set_atom() {
  if (accept("(")) {
    const SetExpr inner = set();
    expect(")");
    return inner;
  }
  if (accept("{")) {
    std::vector<Integer> labels;
    if (!accept("}")) {
      do {
        const bool negative = accept("-");
        const Integer v = integer();
        labels.push_back(negative ? Integer(-v) : v);
      } while (accept(","));
      expect("}");
    }
    return labels.empty() ? SetExpr::empty() : SetExpr::finite(std::move(labels));
  }
  if (peek().type != Token::Type::ident) fail("a set");
  const std::string name = next().text;
  if (name == "N") return accept("+") ? SetExpr::nplus() : SetExpr::naturals();
  if (name == "Z") return SetExpr::integers();
  if (name == "empty") return SetExpr::empty();
  if (name == "Q") {
    if (!accept("(")) return SetExpr::rationals();
    const Rational lo = signed_rational();
    expect(",");
    const std::size_t col = peek().column;
    const Rational hi = signed_rational();
    expect("]");
    if (hi != lo + 1) throw SyntaxError(col, "the upper end " + (lo + 1).str(), hi.str());
    return SetExpr::q_interval(lo);
  }
  if (name == "mult" || name == "pow_k") {
    expect("(");
    const long k = small_integer(1);
    expect(")");
    return name == "mult" ? SetExpr::multiples_of(k) : SetExpr::kth_powers(k);
  }
  if (name == "Pfin") {
    expect("(");
    expect_ident("N");
    expect("+");
    expect(")");
    return SetExpr::pfin_nplus();
  }
  if (name == "tag") {
    expect("(");
    if (peek().type != Token::Type::ident && peek().type != Token::Type::number) fail("a tag label");
    const std::string label = next().text;
    expect(")");
    return SetExpr::tagged(label);
  }
  --i_;
  fail("a set");
}

// ---------------------------------------------------------------- ordinals

Ordinal Parser::ordinal() {
  Ordinal r = ordinal_term();
  while (accept("+")) r = ordinals::natural_sum(r, ordinal_term());
  return r;
}

Ordinal Parser::ordinal_term() {
  Ordinal r = ordinal_power();
  while (accept("*") || accept("×")) r = ordinals::natural_prod(r, ordinal_power());
  return r;
}

Ordinal Parser::ordinal_power() {
  const bool is_omega = at_ident("w") || at_ident("omega");
  const Ordinal base = ordinal_atom();
  if (!accept("^")) return base;
  const std::size_t col = peek().column;
  const Ordinal e = ordinal_atom();
  if (is_omega) return Ordinal::omega_pow(e);
  if (!e.is_finite() || !e.finite_value().fits_ulong_p())
    throw ordinals::UnsupportedOrdinal("column " + std::to_string(col) + ": only ω takes an infinite exponent");
  Ordinal r = 1;
  for (unsigned long j = 0; j < e.finite_value().get_ui(); ++j) r = ordinals::natural_prod(r, base);
  return r;
}

Ordinal Parser::ordinal_atom() {
  if (peek().type == Token::Type::number) return Ordinal(integer());
  if (at_ident("w") || at_ident("omega")) {
    next();
    return Ordinal::omega();
  }
  if (accept("(")) {
    const Ordinal inner = ordinal();
    expect(")");
    return inner;
  }
  fail("an ordinal");
}

// ---------------------------------------------------------------- sequences

SeqExpr Parser::sequence() {
  SeqExpr r = sequence_term();
  for (;;) {
    if (accept("+"))
      r = r + sequence_term();
    else if (accept("-"))
      r = r - sequence_term();
    else
      return r;
  }
}

SeqExpr Parser::sequence_term() {
  SeqExpr r = sequence_unary();
  for (;;) {
    if (accept("*") || accept("×"))
      r = r * sequence_unary();
    else if (accept("/"))
      r = r / sequence_unary();
    else
      return r;
  }
}

SeqExpr Parser::sequence_unary() {
  if (accept("-")) return -sequence_unary();
  SeqExpr base = sequence_atom();
  if (accept("^")) base = base.pow(signed_exponent());
  return base;
}

SeqExpr Parser::sequence_atom() {
  if (peek().type == Token::Type::number) return SeqExpr::constant(literal());
  if (at_ident("n")) {
    next();
    return SeqExpr::n();
  }
  if (accept("(")) {
    const SeqExpr inner = sequence();
    expect(")");
    return inner;
  }
  fail("a sequence term in n");
}

// ---------------------------------------------------------------- functions

FuncExpr Parser::function(const std::set<std::string>& vars) {
  FuncExpr r = function_term(vars);
  for (;;) {
    if (accept("+"))
      r = r + function_term(vars);
    else if (accept("-"))
      r = r - function_term(vars);
    else
      return r;
  }
}

FuncExpr Parser::function_term(const std::set<std::string>& vars) {
  FuncExpr r = function_unary(vars);
  for (;;) {
    if (accept("*") || accept("×"))
      r = r * function_unary(vars);
    else if (accept("/"))
      r = r / function_unary(vars);
    else
      return r;
  }
}

FuncExpr Parser::function_unary(const std::set<std::string>& vars) {
  if (accept("-")) return -function_unary(vars);
  if (accept("+")) return function_unary(vars);
  return function_power(vars);
}

FuncExpr Parser::function_power(const std::set<std::string>& vars) {
  const FuncExpr base = function_atom(vars);
  if (!accept("^")) return base;
  return base.pow(signed_exponent());
}

FuncExpr Parser::function_atom(const std::set<std::string>& vars) {
  if (peek().type == Token::Type::number) return FuncExpr::constant(literal());
  if (accept("(")) {
    const FuncExpr inner = function(vars);
    expect(")");
    return inner;
  }
  if (peek().type != Token::Type::ident) fail("a function of x");
  const std::string name = peek().text;
  if (vars.contains(name)) return next(), FuncExpr::x();
  if (name == "pi") return next(), FuncExpr::constant(SymReal::pi());
  if (name == "e") return next(), FuncExpr::constant(SymReal::e());
  if (name == "sqrt") {
    next();
    expect("(");
    const std::size_t col = peek().column;
    const FuncExpr arg = function(vars);
    expect(")");
    const auto q = fold(arg).as_rational();
    if (!q) throw SyntaxError(col, "a rational constant under sqrt", arg.str());
    return FuncExpr::constant(SymReal::sqrt(*q));
  }
  const auto fn = kFunctions.find(name);
  if (fn == kFunctions.end()) fail(vars.empty() ? "a real constant" : "a function of x");
  next();
  expect("(");
  const FuncExpr arg = function(vars);
  expect(")");
  return FuncExpr::apply(fn->second, arg);
}

SymReal Parser::constant() { return fold(function({})); }

}  // namespace

std::string Command::str() const {
  using K = Kind;
  std::string args;
  switch (kind) {
    case K::eval:
    case K::classify:
    case K::st:
    case K::ctr: args = number->str(); break;
    case K::num: args = set->str(); break;
    case K::ord:
    case K::ord2num: args = ordinal->str(); break;
    case K::alim: args = sequence->str(); break;
    case K::deriv: {
      static const char* names[] = {"plus", "minus", "mean", "grid"};
      args = std::string(names[static_cast<int>(deriv)]) + "," + function->str() + "," + points[0].str();
      break;
    }
    case K::integ:
    case K::integ_num:
      args = function->str() + "," + points[0].str() + "," + points[1].str();
      if (steps) args += "," + std::to_string(steps);
      break;
    case K::sum: args = function->str() + "," + number->str(); break;
    case K::let: return "let(" + name + "," + number->str() + ")";
  }
  return command_name(kind) + "(" + args + ")";
}

Command parse(std::string_view line, const Bindings& env) { return Parser(tokenize(line), env).line(); }

}  // namespace euclid::cli
