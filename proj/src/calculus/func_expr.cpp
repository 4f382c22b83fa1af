#include "euclid/func_expr.hpp"

#include <cmath>

#include "rationality.hpp"

namespace euclid::calculus {

namespace {

using Op = FuncExpr::Op;

const char* function_name(Op op) {
  switch (op) {
    case Op::sin: return "sin";
    case Op::cos: return "cos";
    case Op::exp: return "exp";
    case Op::log: return "log";
    case Op::abs: return "abs";
    case Op::sign: return "sign";
    case Op::dirichlet: return "dirichlet";
    default: return "?";
  }
}

bool is_function(Op op) {
  switch (op) {
    case Op::sin:
    case Op::cos:
    case Op::exp:
    case Op::log:
    case Op::abs:
    case Op::sign:
    case Op::dirichlet: return true;
    default: return false;
  }
}

// Binding strength used for parenthesization.
int precedence(const FuncExpr& f) {
  switch (f.op()) {
    case Op::add:
    case Op::sub: return 1;
    case Op::mul:
    case Op::div: return 2;
    case Op::neg: return 3;
    case Op::pow: return 4;
    case Op::constant: {
      const auto q = f.value().as_rational();
      if (q && q->is_integer() && q->sign() >= 0) return 5;
      return 0;
    }
    default: return 5;
  }
}

std::string wrap(const FuncExpr& f, int min_prec) {
  const std::string s = f.str();
  return precedence(f) < min_prec ? "(" + s + ")" : s;
}

using Poly = std::vector<SymReal>;

Poly poly_add(const Poly& a, const Poly& b, int sign) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign > 0 ? b[i] : -b[i];
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void trim(Poly& p) {
  while (!p.empty() && p.back().is_structurally_zero()) p.pop_back();
}

}  // namespace

FuncExpr FuncExpr::make(Node n) { return FuncExpr(std::make_shared<const Node>(std::move(n))); }

FuncExpr FuncExpr::x() { return make({Op::var, {}, 0, nullptr, nullptr}); }

FuncExpr FuncExpr::constant(const SymReal& c) { return make({Op::constant, c, 0, nullptr, nullptr}); }

FuncExpr FuncExpr::apply(Op fn, const FuncExpr& arg) {
  if (!is_function(fn)) throw std::invalid_argument("not a function symbol");
  return make({fn, {}, 0, std::make_shared<const FuncExpr>(arg), nullptr});
}

FuncExpr FuncExpr::pow(long k) const {
  return make({Op::pow, {}, k, std::make_shared<const FuncExpr>(*this), nullptr});
}

FuncExpr operator+(const FuncExpr& a, const FuncExpr& b) {
  return FuncExpr::make({Op::add, {}, 0, std::make_shared<const FuncExpr>(a), std::make_shared<const FuncExpr>(b)});
}

FuncExpr operator-(const FuncExpr& a, const FuncExpr& b) {
  return FuncExpr::make({Op::sub, {}, 0, std::make_shared<const FuncExpr>(a), std::make_shared<const FuncExpr>(b)});
}

FuncExpr operator*(const FuncExpr& a, const FuncExpr& b) {
  return FuncExpr::make({Op::mul, {}, 0, std::make_shared<const FuncExpr>(a), std::make_shared<const FuncExpr>(b)});
}

FuncExpr operator/(const FuncExpr& a, const FuncExpr& b) {
  return FuncExpr::make({Op::div, {}, 0, std::make_shared<const FuncExpr>(a), std::make_shared<const FuncExpr>(b)});
}

FuncExpr operator-(const FuncExpr& a) {
  return FuncExpr::make({Op::neg, {}, 0, std::make_shared<const FuncExpr>(a), nullptr});
}

std::string FuncExpr::str() const {
  switch (op()) {
    case Op::var: return "x";
    case Op::constant: return value().str();
    case Op::add: return lhs().str() + " + " + wrap(rhs(), 2);
    case Op::sub: return lhs().str() + " - " + wrap(rhs(), 2);
    case Op::mul: return wrap(lhs(), 2) + "*" + wrap(rhs(), 3);
    case Op::div: return wrap(lhs(), 2) + "/" + wrap(rhs(), 3);
    case Op::neg: return "-" + wrap(lhs(), 3);
    case Op::pow: {
      const std::string e = exponent() < 0 ? "(" + std::to_string(exponent()) + ")"
                                           : std::to_string(exponent());
      return wrap(lhs(), 5) + "^" + e;
    }
    default: return std::string(function_name(op())) + "(" + lhs().str() + ")";
  }
}

FuncExpr sin(const FuncExpr& f) { return FuncExpr::apply(Op::sin, f); }
FuncExpr cos(const FuncExpr& f) { return FuncExpr::apply(Op::cos, f); }
FuncExpr exp(const FuncExpr& f) { return FuncExpr::apply(Op::exp, f); }
FuncExpr log(const FuncExpr& f) { return FuncExpr::apply(Op::log, f); }
FuncExpr abs(const FuncExpr& f) { return FuncExpr::apply(Op::abs, f); }
FuncExpr sign(const FuncExpr& f) { return FuncExpr::apply(Op::sign, f); }
FuncExpr dirichlet(const FuncExpr& f) { return FuncExpr::apply(Op::dirichlet, f); }

std::optional<std::vector<SymReal>> as_polynomial(const FuncExpr& f) {
  std::optional<Poly> r;
  switch (f.op()) {
    case Op::var: r = Poly{SymReal(), SymReal(1)}; break;
    case Op::constant: r = Poly{f.value()}; break;
    case Op::add:
    case Op::sub: {
      const auto a = as_polynomial(f.lhs());
      const auto b = as_polynomial(f.rhs());
      if (a && b) r = poly_add(*a, *b, f.op() == Op::add ? 1 : -1);
      break;
    }
    case Op::mul: {
      const auto a = as_polynomial(f.lhs());
      const auto b = as_polynomial(f.rhs());
      if (a && b) r = poly_mul(*a, *b);
      break;
    }
    case Op::div: {
      const auto a = as_polynomial(f.lhs());
      auto b = as_polynomial(f.rhs());
      if (!a || !b) break;
      trim(*b);
      if (b->size() != 1 || b->front().is_zero()) break;
      const SymReal inv = b->front().inverse();
      r = *a;
      for (auto& c : *r) c *= inv;
      break;
    }
    case Op::neg: {
      r = as_polynomial(f.lhs());
      if (r)
        for (auto& c : *r) c = -c;
      break;
    }
    case Op::pow: {
      if (f.exponent() < 0) break;
      const auto a = as_polynomial(f.lhs());
      if (!a) break;
      Poly acc{SymReal(1)};
      for (long i = 0; i < f.exponent(); ++i) acc = poly_mul(acc, *a);
      r = acc;
      break;
    }
    default: break;
  }
  if (r) trim(*r);
  return r;
}

NumericFunction::NumericFunction(const FuncExpr& f) { root_ = compile(f); }

int NumericFunction::compile(const FuncExpr& f) {
  Instr in{f.op()};
  switch (f.op()) {
    case Op::var: break;
    case Op::constant:
      in.constant = f.value().to_double();
      in.constant_rationality = f.value().rationality();
      in.constant_zero = f.value().is_structurally_zero();
      break;
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div:
      in.lhs = compile(f.lhs());
      in.rhs = compile(f.rhs());
      break;
    case Op::pow:
      in.exponent = f.exponent();
      in.lhs = compile(f.lhs());
      break;
    default: in.lhs = compile(f.lhs());
  }
  code_.push_back(in);
  return static_cast<int>(code_.size()) - 1;
}

NumericFunction::Point NumericFunction::operator()(double x, Rationality xr) const {
  std::vector<Point> v(code_.size());
  for (std::size_t i = 0; i < code_.size(); ++i) {
    const Instr& in = code_[i];
    const Point a = in.lhs >= 0 ? v[static_cast<std::size_t>(in.lhs)] : Point{0, Rationality::unknown};
    const Point b = in.rhs >= 0 ? v[static_cast<std::size_t>(in.rhs)] : Point{0, Rationality::unknown};
    const bool az = a.value == 0.0 && a.rationality == Rationality::rational;
    const bool bz = b.value == 0.0 && b.rationality == Rationality::rational;
    Point r{0, Rationality::unknown};
    switch (in.op) {
      case Op::var: r = {x, xr}; break;
      case Op::constant: r = {in.constant, in.constant_rationality}; break;
      case Op::add: r = {a.value + b.value, rationality::add(a.rationality, b.rationality)}; break;
      case Op::sub: r = {a.value - b.value, rationality::add(a.rationality, b.rationality)}; break;
      case Op::mul:
        r = {a.value * b.value, rationality::mul(a.rationality, az, b.rationality, bz)};
        break;
      case Op::div:
        if (b.value == 0.0) throw NumericEvaluation("division by zero at x = " + std::to_string(x));
        r = {a.value / b.value, rationality::div(a.rationality, az, b.rationality)};
        break;
      case Op::neg: r = {-a.value, a.rationality}; break;
      case Op::pow:
        if (a.value == 0.0 && in.exponent < 0)
          throw NumericEvaluation("pole at x = " + std::to_string(x));
        r = {std::pow(a.value, static_cast<double>(in.exponent)), rationality::pow(a.rationality, in.exponent)};
        break;
      case Op::sin: r = {std::sin(a.value), rationality::transcendental(a.rationality, az)}; break;
      case Op::cos: r = {std::cos(a.value), rationality::transcendental(a.rationality, az)}; break;
      case Op::exp: r = {std::exp(a.value), rationality::transcendental(a.rationality, az)}; break;
      case Op::log:
        if (a.value <= 0.0) throw NumericEvaluation("logarithm of non-positive value at x = " + std::to_string(x));
        r = {std::log(a.value),
             rationality::transcendental(a.rationality, a.value == 1.0 && a.rationality == Rationality::rational)};
        break;
      case Op::abs: r = {std::fabs(a.value), a.rationality}; break;
      case Op::sign:
        r = {static_cast<double>((a.value > 0) - (a.value < 0)), Rationality::rational};
        break;
      case Op::dirichlet:
        if (a.rationality == Rationality::unknown)
          throw NumericEvaluation("dirichlet at a point of unknown rationality");
        r = {a.rationality == Rationality::rational ? 1.0 : 0.0, Rationality::rational};
        break;
    }
    if (!std::isfinite(r.value)) throw NumericEvaluation("non-finite value at x = " + std::to_string(x));
    v[i] = r;
  }
  return v[static_cast<std::size_t>(root_)];
}

}  // namespace euclid::calculus
