#include "fold.hpp"

#include "euclid/error.hpp"

namespace euclid::cli {

using calculus::FuncExpr;
using calculus::Rationality;
using calculus::SymReal;

SymReal fold(const FuncExpr& f) {
  using Op = FuncExpr::Op;
  switch (f.op()) {
    case Op::var: throw Unsupported("expected a constant, found x");
    case Op::constant: return f.value();
    case Op::add: return fold(f.lhs()) + fold(f.rhs());
    case Op::sub: return fold(f.lhs()) - fold(f.rhs());
    case Op::mul: return fold(f.lhs()) * fold(f.rhs());
    case Op::div: return fold(f.lhs()) / fold(f.rhs());
    case Op::neg: return -fold(f.lhs());
    case Op::pow: return fold(f.lhs()).pow(f.exponent());
    case Op::sin: return SymReal::sin(fold(f.lhs()));
    case Op::cos: return SymReal::cos(fold(f.lhs()));
    case Op::exp: return SymReal::exp(fold(f.lhs()));
    case Op::log: return SymReal::log(fold(f.lhs()));
    case Op::abs: {
      const SymReal v = fold(f.lhs());
      return v.sign() < 0 ? -v : v;
    }
    case Op::sign: return SymReal(fold(f.lhs()).sign());
    case Op::dirichlet: {
      const SymReal v = fold(f.lhs());
      switch (v.rationality()) {
        case Rationality::rational: return SymReal(1);
        case Rationality::irrational: return SymReal();
        case Rationality::unknown: break;
      }
      throw Unsupported("rationality of " + v.str() + " is not decided");
    }
  }
  return {};
}

}  // namespace euclid::cli
