#include "doctest.h"

#include <cmath>

#include "calculus_generators.hpp"
#include "euclid/cli.hpp"
#include "euclid/render.hpp"
#include "ordinal_generators.hpp"
#include "set_generators.hpp"

using namespace euclid;
using namespace euclid::cli;
using euclid::testing::Rng;

namespace {

std::string out(const std::string& line) {
  Session s;
  return s.run(line).text;
}

EuclideanNumber value(Session& s, const std::string& line) {
  const Result r = s.run(line);
  REQUIRE(r.number);
  return *r.number;
}

Rational parse_fraction(const std::string& s) { return Rational::parse(s); }

// Rebuilds a number from its structured record.
EuclideanNumber from_triples(const std::vector<std::array<std::string, 3>>& t) {
  SeriesPoly p;
  for (const auto& [e2a, ea, c] : t) p.add_term(Exponent{parse_fraction(e2a), parse_fraction(ea)}, parse_fraction(c));
  return EuclideanNumber(p);
}

}  // namespace

TEST_CASE("parse examples") {
  const Command num = parse("num(Z)");
  CHECK(num.kind == Command::Kind::num);
  CHECK(num.set->kind() == sets::SetExpr::Kind::integers);
  CHECK(num.str() == "num(Z)");

  const Command st = parse("st((2*alpha+1)/alpha)");
  CHECK(st.kind == Command::Kind::st);
  CHECK(st.str() == "st(div(add(mul(2,α),1),α))");

  const Command d = parse("deriv mean abs(x) at 0");
  CHECK(d.kind == Command::Kind::deriv);
  CHECK(d.deriv == DerivKind::mean);
  CHECK(d.str() == "deriv(mean,abs(x),0)");
  CHECK(parse("deriv(mean, abs(x), 0)").str() == d.str());

  CHECK(parse("integ x^2, 0, 1").str() == "integ(x^2,0,1)");
  CHECK(parse("alpha + 1").kind == Command::Kind::eval);
  CHECK(parse("st(alpha) + 1").kind == Command::Kind::eval);
  CHECK(parse("alim (n^2 - 1)/(n + 1)").kind == Command::Kind::alim);
  CHECK(parse("num (Z x Z) (+) tag(b)").kind == Command::Kind::num);
  CHECK(parse("eval (1 + alpha)*2").str() == "eval(mul(add(1,α),2))");
  CHECK(parse("α·η − 1").str() == "eval(sub(mul(α,η),1))");
  CHECK(parse("sum(k^2, alpha)").str() == "sum(x^2,α)");
}

TEST_CASE("execution goldens") {
  CHECK(out("num(Q)") == "2·α^2 + 1");
  CHECK(out("eval(alpha*eta)") == "1");
  CHECK(out("integ(x^2, 0, 1)") == "1/3 − (1/2)·η + (1/6)·η^2   [real part: 1/3]");
  CHECK(out("num ℚ") == "2·α^2 + 1");
  CHECK(out("num(Z)") == "2·α + 1");
  CHECK(out("num(N)") == "α + 1");
  CHECK(out("num(Pfin(N+))") == "2^α");
  CHECK(out("num(pow_k(2))") == "α^(1/2)");
  CHECK(out("num(Q(0,1])") == "α");
  CHECK(out("num(mult(7))") == "(1/7)·α");
  CHECK(out("num(Z x Z)") == "4·α^2 + 4·α + 1");
  CHECK(out("num({1,2,3} (+) mult(5) x tag(b))") == "(1/5)·α + 3");
  CHECK(out("ord(1 + w)") == "w + 1");
  CHECK(out("ord((w+1)*(w+1))") == "w^2 + w*2 + 1");
  CHECK(out("ord w^(w+1)*2") == "w^(w + 1)*2");
  CHECK(out("ord2num(w)") == "α + 1");
  CHECK(out("alim((n^2+1)/n)") == "α + η");
  CHECK(out("alim(n+1) - omega") == "0");
  CHECK(out("sum(k, alpha)") == "(1/2)·α^2 + (1/2)·α");
  CHECK(out("sum(k^3, 10)") == "3025");
  CHECK(out("classify(3 + eta)") == "finite-noninfinitesimal, positive");
  CHECK(out("classify(omega)") == "infinite, positive");
  CHECK(out("ctr(alpha + 1/2 + eta)") == "α + 1/2");
  CHECK(out("st(3 + 5*eta - eta^2)") == "3");
  CHECK(out("eval 2^alpha * 2^alpha") == "(2^α)^2");
  CHECK(out("eval alpha^(1/2) * alpha^(1/2)") == "α");
  CHECK(out("eval 1/(1 + eta)") == "(1)/(1 + η)");
  CHECK(out("deriv plus x^2 at 3") == "6");
  CHECK(out("deriv minus abs(x) at 0") == "−1");
  CHECK(out("deriv plus dirichlet(x) at sqrt(2)") == "0");
  CHECK(out("deriv plus x*sin(1/x^2) at 0") == "ctr(sin(α^2))   [indeterminate: center depends on the ultrafilter]");
  CHECK(out("deriv(grid, x^2, 1)") == "2");
  CHECK(out("integ(7, 0, 3)") == "21   [real part: 21]");
  CHECK(out("integ_num(1, 0, 3, 10)") == "3   [numeric: 10 steps]");
}

TEST_CASE("domain errors carry the module error name") {
  Session s;
  const auto name_of = [&](const std::string& line) -> std::string {
    try {
      s.run(line);
    } catch (const SyntaxError&) {
      return "syntax?";
    } catch (const Error& e) {
      return e.name();
    }
    return "none";
  };
  CHECK(name_of("eval 1/0") == "division-by-zero");
  CHECK(name_of("st(alpha)") == "not-finite");
  CHECK(name_of("ord2num(w^w)") == "unsupported-ordinal");
  CHECK(name_of("num({1} (+) N)") == "disjointness");
  CHECK(name_of("num(mult(0))") == "syntax?");
  CHECK(name_of("eval y + 1") == "syntax?");
  CHECK(name_of("deriv grid x at sqrt(2)") == "not-grid-point");
  CHECK(name_of("integ_num(1/x, -1, 1, 2)") == "numeric-evaluation");
  CHECK(name_of("eval 3^alpha") == "unsupported");
  CHECK(name_of("sum(sin(k), 3)") == "unsupported");
}

TEST_CASE("syntax errors report column and expectation") {
  const auto err = [](const std::string& line) {
    try {
      parse(line);
    } catch (const SyntaxError& e) {
      return std::make_pair(e.column(), e.expected());
    }
    FAIL("no syntax error for ", line);
    return std::make_pair(std::size_t{0}, std::string());
  };
  CHECK(err("eval 1 +") == std::make_pair(std::size_t{9}, std::string("a number")));
  CHECK(err("num(Z") == std::make_pair(std::size_t{6}, std::string("')'")));
  CHECK(err("num(Z x)").first == 8);
  CHECK(err("deriv sideways x at 0").second == "plus, minus, mean or grid");
  CHECK(err("deriv plus x^2 0").second == "'at'");
  CHECK(err("α $ 2").first == 3);
  CHECK(err("").second == "a command or expression");
  CHECK(err("num(Q(0,2])").second == "the upper end 1");
  CHECK(err("let alpha = 1").second == "an unreserved name");
  CHECK(err("deriv plus x^(1/2) at 1").second == "an integer exponent");
}

TEST_CASE("let bindings") {
  Session s;
  CHECK(s.run("let y = alpha + 1").text == "y = α + 1");
  CHECK(s.run("y*y").text == "α^2 + 2·α + 1");
  CHECK(s.run("let y = y - 1").text == "y = α");
  CHECK(s.run("classify(y)").text == "infinite, positive");
  CHECK(s.bindings().size() == 1);
}

TEST_CASE("structured output") {
  Session s;
  CHECK(s.run("integ(x^2, 0, 1)").structured() ==
        R"({"denominator_terms":[["0/1","0/1","1/1"]],"flags":["exact"],"kind":"integ","real_part":"1/3",)"
        R"("terms":[["0/1","0/1","1/3"],["0/1","-1/1","-1/2"],["0/1","-2/1","1/6"]],)"
        R"("text":"1/3 − (1/2)·η + (1/6)·η^2   [real part: 1/3]"})");
  const std::string ind = s.run("deriv plus x*sin(1/x^2) at 0").structured();
  CHECK(ind.find(R"("flags":["indeterminate"])") != std::string::npos);
  CHECK(ind.find(R"("real_part":null)") != std::string::npos);
  CHECK(s.run("integ(sin(x), 0, pi)").structured().find(R"("flags":["numeric"])") != std::string::npos);
}

TEST_CASE("property: number renderings parse back to the same number") {
  Rng rng(81);
  Session s;
  for (int i = 0; i < 300; ++i) {
    const EuclideanNumber x = testing::random_number(rng);
    const Result r = s.run("eval " + to_text(x));
    INFO(to_text(x));
    REQUIRE(r.number);
    CHECK(*r.number == x);
    if (x.is_series()) CHECK(from_triples(term_triples(r.number->numerator())) == x);
  }
}

TEST_CASE("property: set, ordinal and function renderings parse back") {
  Rng rng(82);
  Session s;
  for (int i = 0; i < 200; ++i) {
    const sets::SetExpr a = testing::random_set(rng, 3);
    INFO(a.str());
    EuclideanNumber expected;
    try {
      expected = sets::numerosity(a);
    } catch (const Error&) {
      continue;
    }
    CHECK(value(s, "num(" + a.str() + ")") == expected);
  }
  for (int i = 0; i < 200; ++i) {
    const ordinals::Ordinal o = testing::from_coeffs(testing::random_ordinal_coeffs(rng));
    CHECK(s.run("ord " + o.str()).text == o.str());
  }
  for (int i = 0; i < 100; ++i) {
    const calculus::FuncExpr f = testing::random_analytic(rng, 2);
    const Command c = parse("deriv plus " + f.str() + " at 0");
    INFO(f.str());
    const calculus::NumericFunction before(f);
    const calculus::NumericFunction after(*c.function);
    for (double x : {-1.25, 0.0, 0.5, 2.0}) {
      const double u = before(x, calculus::Rationality::rational).value;
      const double v = after(x, calculus::Rationality::rational).value;
      CHECK(std::abs(u - v) <= 1e-12 * std::max(1.0, std::abs(u)));
    }
  }
}

TEST_CASE("property: identical input gives identical output") {
  const std::vector<std::string> lines = {"num(Q x Z)", "integ(x^3 - x, -1, 2)", "deriv mean sin(x)*exp(x) at 1/2",
                                          "alim((n^3 - 1)/(n + 1))", "integ(sin(x), 0, 1)"};
  for (const auto& line : lines) {
    Session a;
    Session b;
    const Result ra = a.run(line);
    const Result rb = b.run(line);
    CHECK(ra.text == rb.text);
    CHECK(ra.structured() == rb.structured());
  }
}
