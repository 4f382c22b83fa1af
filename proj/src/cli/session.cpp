#include <cstdio>

#include "json.hpp"

#include "euclid/calculus.hpp"
#include "euclid/cli.hpp"
#include "euclid/render.hpp"

namespace euclid::cli {

namespace {

using calculus::SymReal;

constexpr const char* kGap = "   ";

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

Result number_result(Command::Kind kind, const EuclideanNumber& x, std::string text) {
  Result r{kind, std::move(text), x, std::nullopt, {"exact"}};
  if (is_finite(x)) r.real_part = st(x).str();
  return r;
}

Result number_result(Command::Kind kind, const EuclideanNumber& x) {
  return number_result(kind, x, to_text(x));
}

std::string symreal_text(const SymReal& v) {
  if (v.is_rational()) return v.str();
  return v.str() + kGap + "[≈ " + v.decimal(16) + "]";
}

Result deriv(const Command& c, long order) {
  using calculus::DerivResult;
  const SymReal& x0 = c.points.at(0);
  DerivResult d;
  switch (c.deriv) {
    case DerivKind::plus: d = calculus::d_plus(*c.function, x0, order); break;
    case DerivKind::minus: d = calculus::d_minus(*c.function, x0, order); break;
    case DerivKind::mean: d = calculus::d_mean(*c.function, x0, order); break;
    case DerivKind::grid: d = calculus::grid_d_plus(*c.function, x0, order); break;
  }
  if (!d.is_value()) {
    const auto& ind = d.indeterminate();
    return {c.kind, ind.expression + kGap + "[indeterminate: " + ind.reason + "]", std::nullopt, std::nullopt,
            {"indeterminate"}};
  }
  const SymReal& v = d.value();
  Result r{c.kind, symreal_text(v), std::nullopt, v.str(), {"exact"}};
  if (const auto q = v.as_rational()) r.number = EuclideanNumber(*q);
  return r;
}

Result numeric_integral(const Command& c, unsigned long steps) {
  const auto v = calculus::e_integral_numeric(*c.function, c.points.at(0), c.points.at(1), steps);
  const std::string text = decimal(v.value);
  return {c.kind, text + kGap + "[numeric: " + std::to_string(v.steps) + " steps]", std::nullopt, text, {"numeric"}};
}

Result integral(const Command& c, unsigned long steps) {
  const auto a = c.points.at(0).as_rational();
  const auto b = c.points.at(1).as_rational();
  if (a && b) {
    try {
      const calculus::EIntegral r = calculus::e_integral(*c.function, *a, *b);
      return number_result(c.kind, r.euclidean,
                           to_text(r.euclidean) + kGap + "[real part: " + r.real_part.str() + "]");
    } catch (const calculus::NotPolynomial&) {
    }
  }
  return numeric_integral(c, steps);
}

nlohmann::json triples(const SeriesPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : term_triples(p)) out.push_back({t[0], t[1], t[2]});
  return out;
}

}  // namespace

std::string Result::structured() const {
  nlohmann::json j;
  j["kind"] = command_name(kind);
  j["text"] = text;
  j["terms"] = number ? triples(number->numerator()) : nlohmann::json::array();
  j["denominator_terms"] = number ? triples(number->denominator()) : nlohmann::json::array();
  j["real_part"] = real_part ? nlohmann::json(*real_part) : nlohmann::json(nullptr);
  j["flags"] = flags;
  return j.dump();
}

Session::Session(Options opts) : opts_(opts) { calculus::set_default_digits(opts_.precision); }

Result Session::execute(const Command& c) {
  using K = Command::Kind;
  switch (c.kind) {
    case K::eval:
    case K::num:
    case K::ord2num:
    case K::alim:
    case K::ctr:
    case K::st: {
      EuclideanNumber x;
      if (c.kind == K::num)
        x = sets::numerosity(*c.set);
      else if (c.kind == K::ord2num)
        x = ordinals::to_numerosity(*c.ordinal);
      else if (c.kind == K::alim)
        x = alpha_limit(*c.sequence);
      else
        x = c.number->evaluate(bindings_);
      if (c.kind == K::ctr) x = ctr(x);
      if (c.kind == K::st) x = st(x);
      return number_result(c.kind, x);
    }
    case K::ord: return {c.kind, c.ordinal->str(), std::nullopt, std::nullopt, {"exact"}};
    case K::classify: {
      const EuclideanNumber x = c.number->evaluate(bindings_);
      const NumberClass k = classify(x);
      return number_result(c.kind, x, to_string(k.kind) + ", " + to_string(k.sign));
    }
    case K::deriv: return deriv(c, opts_.order);
    case K::integ: return integral(c, opts_.numeric_steps);
    case K::integ_num: return numeric_integral(c, c.steps ? c.steps : opts_.numeric_steps);
    case K::sum: return number_result(c.kind, calculus::hyperfinite_sum(*c.function, c.number->evaluate(bindings_)));
    case K::let: {
      const EuclideanNumber x = c.number->evaluate(bindings_);
      bindings_.insert_or_assign(c.name, x);
      return number_result(c.kind, x, c.name + " = " + to_text(x));
    }
  }
  return {c.kind, "", std::nullopt, std::nullopt, {}};
}

}  // namespace euclid::cli
