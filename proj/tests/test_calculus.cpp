#include "doctest.h"

#include <chrono>
#include <cmath>

#include "calculus_generators.hpp"
#include "euclid/calculus.hpp"
#include "euclid/render.hpp"

using namespace euclid;
using namespace euclid::calculus;
using euclid::testing::Poly;
using euclid::testing::Rng;

namespace {

const FuncExpr X = FuncExpr::x();
const EuclideanNumber A = EuclideanNumber::alpha();
const EuclideanNumber H = EuclideanNumber::eta();

FuncExpr c(const Rational& q) { return FuncExpr::constant(q); }
Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

SymReal coeff_at(const InfinitesimalSeries& s, long k) {
  const auto it = s.terms.find(k);
  if (it == s.terms.end()) return SymReal();
  REQUIRE(it->second.is_pure());
  return it->second.pure();
}

bool is_value(const DerivResult& r, const SymReal& v) { return r.is_value() && r.value() == v; }

// Akiyama–Tanigawa; yields B₁ = +1/2.
Rational akiyama_tanigawa(unsigned long n) {
  std::vector<Rational> a(n + 1);
  for (unsigned long m = 0; m <= n; ++m) {
    a[m] = q(1, static_cast<long>(m + 1));
    for (unsigned long j = m; j >= 1; --j) a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
  }
  return a[0];
}

}  // namespace

TEST_CASE("symreal normalization") {
  CHECK(SymReal::sqrt(8).str() == "2·√2");
  CHECK(SymReal::sqrt(2) * SymReal::sqrt(2) == SymReal(2));
  CHECK((SymReal::sqrt(2) * SymReal::sqrt(2)).is_rational());
  CHECK(SymReal::sin(SymReal::pi()).is_structurally_zero());
  CHECK(SymReal::cos(SymReal::pi()) == SymReal(-1));
  CHECK(SymReal::exp(SymReal::log(3)) == SymReal(3));
  CHECK(SymReal::exp(1) * SymReal::exp(2) == SymReal::exp(3));
  CHECK((SymReal::pi() - SymReal::pi()).is_structurally_zero());
  CHECK((1 + SymReal::sqrt(2)).inverse() == SymReal::sqrt(2) - 1);
  CHECK(SymReal::pi().rationality() == Rationality::irrational);
  CHECK(SymReal(q(1, 3)).rationality() == Rationality::rational);
  CHECK(SymReal::pi().sign() == 1);
  CHECK(std::abs(SymReal::pi().to_double() - M_PI) < 1e-15);
  CHECK_THROWS_AS(SymReal::sqrt(-1), DomainError);
  CHECK_THROWS_AS(SymReal::log(0), DomainError);
  CHECK_THROWS_AS(SymReal().inverse(), DivisionByZero);
}

TEST_CASE("symreal numeric zero test uses the configured precision") {
  // sin²+cos² is not folded structurally.
  const SymReal s = SymReal::sin(1);
  const SymReal k = SymReal::cos(1);
  const SymReal z = s * s + k * k - 1;
  CHECK_FALSE(z.is_structurally_zero());
  CHECK(z.is_zero());
  CHECK_FALSE(z.sign_info().exact);
  CHECK(SymReal(q(1, 7)).sign_info().exact);
}

TEST_CASE("function text round trip syntax") {
  CHECK((X * sin(c(1) / X.pow(2))).str() == "x*sin(1/x^2)");
  CHECK((c(q(1, 2)) * X).str() == "(1/2)*x");
  CHECK(as_polynomial(sin(X)) == std::nullopt);
  const auto p = as_polynomial((X + c(1)).pow(2));
  REQUIRE(p);
  REQUIRE(p->size() == 3);
  CHECK((*p)[1] == SymReal(2));
}

TEST_CASE("expand examples") {
  const SymReal x0(3);
  const auto sq = expand(X.pow(2), x0, Direction::plus, 3);
  CHECK(coeff_at(sq, 0) == SymReal(9));
  CHECK(coeff_at(sq, 1) == SymReal(6));
  CHECK(coeff_at(sq, 2) == SymReal(1));
  CHECK(sq.terms.size() == 3);

  const auto ab = expand(abs(X), SymReal(0), Direction::minus, 2);
  CHECK(ab.terms.size() == 1);
  CHECK(coeff_at(ab, 1) == SymReal(1));
  CHECK(ab.str() == "η");

  const auto sn = expand(sin(X), SymReal(0), Direction::plus, 4);
  CHECK(sn.terms.size() == 2);
  CHECK(coeff_at(sn, 1) == SymReal(1));
  CHECK(coeff_at(sn, 3) == SymReal(q(-1, 6)));
  CHECK(sn.order == 4);
  CHECK(sn.str() == "η − (1/6)·η^3 + O(η^4)");

  CHECK_THROWS_AS(expand(c(1) / X, Probe{SymReal(0), 0, Rationality::rational}, 2), Pole);
  CHECK_THROWS_AS(value_at(c(1) / X, SymReal(0)), Pole);
  CHECK_THROWS_AS(value_at(log(X), SymReal(-1)), DomainError);
}

TEST_CASE("expansion near a pole and at infinite arguments") {
  const auto inv = expand(c(1) / X, SymReal(0), Direction::plus, 2);
  CHECK(coeff_at(inv, -1) == SymReal(1));
  CHECK(inv.str().rfind("α", 0) == 0);
  const auto osc = expand(X * sin(c(1) / X.pow(2)), SymReal(0), Direction::plus, 3);
  REQUIRE(osc.terms.count(1));
  CHECK(osc.terms.at(1).str() == "sin(α^2)");
}

TEST_CASE("removable singularity takes the common limit") {
  CHECK(value_at(sin(X) / X, SymReal(0)) == SymReal(1));
  CHECK_THROWS_AS(value_at(c(1) / X, SymReal(0)), Pole);
}

TEST_CASE("derivative examples") {
  for (long v : {-3, 0, 2, 7}) CHECK(is_value(d_plus(X.pow(2), v), 2 * v));
  CHECK(is_value(d_plus(X.pow(2), SymReal::sqrt(2)), 2 * SymReal::sqrt(2)));

  CHECK(is_value(d_plus(abs(X), 0), 1));
  CHECK(is_value(d_minus(abs(X), 0), -1));
  CHECK(is_value(d_mean(abs(X), 0), 0));

  CHECK(is_value(d_plus(dirichlet(X), q(1, 2)), 0));
  CHECK(is_value(d_plus(dirichlet(X), SymReal::sqrt(2)), 0));

  const FuncExpr osc = X * sin(c(1) / X.pow(2));
  const DerivResult plus = d_plus(osc, 0);
  const DerivResult minus = d_minus(osc, 0);
  REQUIRE_FALSE(plus.is_value());
  REQUIRE_FALSE(minus.is_value());
  CHECK(plus.indeterminate().expression == "ctr(sin(α^2))");
  CHECK(minus.indeterminate().expression == plus.indeterminate().expression);
  CHECK(same_result(plus, minus));

  CHECK(is_value(d_plus(sin(X), 0), 1));
  CHECK(is_value(d_plus(exp(X), 0), 1));
  CHECK(is_value(d_plus(cos(X), SymReal::pi()), 0));
  CHECK(is_value(d_plus(log(X), 2), q(1, 2)));
  CHECK(is_value(d_plus(c(1) / X, 2), q(-1, 4)));
  CHECK(d_plus(sign(X), 0).indeterminate().reason == "center is infinite");
}

TEST_CASE("derivability") {
  for (long v : {-2, 0, 5}) CHECK(is_derivable(X.pow(2), v).derivable);
  const Derivability ab = is_derivable(abs(X), 0);
  CHECK_FALSE(ab.derivable);
  CHECK_FALSE(ab.indeterminate);
  CHECK(is_derivable(dirichlet(X), q(1, 3)).derivable);
  CHECK(is_derivable(dirichlet(X), SymReal::sqrt(2)).derivable);

  const Derivability osc = is_derivable(X * sin(c(1) / X.pow(2)), 0);
  CHECK_FALSE(osc.derivable);
  CHECK(osc.indeterminate);
}

TEST_CASE("differentiability") {
  for (long v : {-1, 0, 4}) {
    const auto d = is_differentiable(X.pow(3), v);
    REQUIRE(d.differentiable);
    CHECK(*d.slope == SymReal(3 * v * v));
  }
  CHECK_FALSE(is_differentiable(abs(X), 0).differentiable);
  CHECK(is_differentiable(abs(X), 1).differentiable);
  CHECK_FALSE(is_differentiable(X * sin(c(1) / X.pow(2)), 0).differentiable);
  CHECK_FALSE(is_differentiable(dirichlet(X), q(1, 3)).differentiable);
  CHECK(is_differentiable(sin(X), SymReal::pi()).slope.value() == SymReal(-1));
}

TEST_CASE("grid derivative") {
  CHECK(is_value(grid_d_plus(X.pow(2), 1), 2));
  CHECK(is_value(grid_d_plus(c(5), q(2, 3)), 0));
  CHECK(is_value(grid_d_plus(abs(X), 0), 1));
  CHECK_THROWS_AS(grid_d_plus(X, SymReal::sqrt(2)), NotGridPoint);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == q(-1, 2));
  CHECK(bernoulli(2) == q(1, 6));
  CHECK(bernoulli(12) == q(-691, 2730));
  for (unsigned long n = 0; n <= 20; ++n) {
    const Rational oracle = n == 1 ? -akiyama_tanigawa(n) : akiyama_tanigawa(n);
    CHECK(bernoulli(n) == oracle);
  }
}

TEST_CASE("hyperfinite sums") {
  CHECK(hyperfinite_sum(Poly{1}, A) == A);
  CHECK(hyperfinite_sum(Poly{0, 1}, A) == A * (A + 1) / 2);
  CHECK(hyperfinite_sum(Poly{0, 0, 1}, A) == A * (A + 1) * (2 * A + 1) / 6);
  CHECK(hyperfinite_sum(X.pow(2), A) == A * (A + 1) * (2 * A + 1) / 6);
  CHECK(hyperfinite_sum(Poly{1}, 0).is_zero());
  CHECK_THROWS_AS(hyperfinite_sum(sin(X), A), Unsupported);
  CHECK_THROWS_AS(hyperfinite_sum(Poly{1}, A + 1), Unsupported);
  CHECK_THROWS_AS(hyperfinite_sum(Poly{1}, -3), Unsupported);

  for (unsigned long m = 0; m <= 6; ++m) {
    Poly p(m + 1);
    p[m] = 1;
    Rational direct;
    for (long n = 1; n <= 50; ++n) {
      Rational km = 1;
      for (unsigned long i = 0; i < m; ++i) km *= Rational(n);
      direct += km;
      CHECK(hyperfinite_sum(p, n) == direct);
    }
  }
}

TEST_CASE("e-integral examples") {
  const EIntegral sq = e_integral(X.pow(2), 0, 1);
  CHECK(sq.euclidean == q(1, 3) - q(1, 2) * H + q(1, 6) * H * H);
  CHECK(sq.real_part == q(1, 3));
  CHECK(to_text(sq.euclidean) == "1/3 − (1/2)·η + (1/6)·η^2");

  const EIntegral lin = e_integral(X, 0, 1);
  CHECK(lin.euclidean == q(1, 2) - q(1, 2) * H);
  CHECK(lin.real_part == q(1, 2));

  const EIntegral k = e_integral(c(q(7, 3)), q(-1, 2), 4);
  CHECK(k.euclidean == EuclideanNumber(q(7, 3) * q(9, 2)));
  CHECK(k.euclidean.is_rational());

  CHECK_THROWS_AS(e_integral(sin(X), 0, 1), NotPolynomial);
  CHECK_THROWS_AS(e_integral(X, 1, 1), DomainError);
}

TEST_CASE("numeric e-integral") {
  const auto start = std::chrono::steady_clock::now();
  const NumericIntegral s = e_integral_numeric(sin(X), 0, SymReal::pi(), 1000000);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(std::abs(s.value - 2.0) < 1e-4);
  CHECK(seconds < 5.0);

  CHECK(std::abs(e_integral_numeric(X.pow(2), 0, 1, 10000).value - 1.0 / 3.0) < 1e-3);
  for (unsigned long n : {1ul, 7ul, 1000ul}) {
    CHECK(e_integral_numeric(c(1), q(-1, 4), 3, n).value == 3.25);
    CHECK(e_integral_numeric(c(1), 0, 1, n).value == 1.0);
  }
  CHECK_THROWS_AS(e_integral_numeric(c(1) / X, -1, 1, 2), NumericEvaluation);
  CHECK(e_integral_numeric(dirichlet(X), 0, 1, 10).value == 1.0);
}

TEST_CASE("property: right derivative of a polynomial is its formal derivative") {
  Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    const Poly p = testing::random_poly(rng, 8);
    const Rational x0 = testing::small_rational(rng);
    const DerivResult d = d_plus(testing::poly_expr(p), x0);
    REQUIRE(d.is_value());
    CHECK(d.value() == SymReal(testing::horner(testing::formal_derivative(p), x0)));
  }
}

TEST_CASE("property: mean derivative is linear") {
  Rng rng(72);
  for (int i = 0; i < 100; ++i) {
    const FuncExpr f = testing::random_analytic(rng, 1);
    const FuncExpr g = testing::random_analytic(rng, 1);
    const Rational c1 = testing::small_rational(rng);
    const Rational c2 = testing::small_rational(rng);
    const Rational x0 = testing::small_rational(rng);
    const DerivResult lhs = d_mean(c(c1) * f + c(c2) * g, x0);
    const DerivResult df = d_mean(f, x0);
    const DerivResult dg = d_mean(g, x0);
    if (!lhs.is_value() || !df.is_value() || !dg.is_value()) continue;
    CHECK(lhs.value() == c1 * df.value() + c2 * dg.value());
  }
}

TEST_CASE("property: mean derivative vanishes at the vertex of a concave quadratic") {
  Rng rng(73);
  for (int i = 0; i < 100; ++i) {
    const Rational p = testing::small_rational(rng, true);
    const Rational lead = p.sign() > 0 ? -p : p;
    const Rational v = testing::small_rational(rng);
    const Rational top = testing::small_rational(rng);
    const FuncExpr f = c(lead) * (X - c(v)).pow(2) + c(top);
    CHECK(is_value(d_mean(f, v), 0));
    CHECK(is_value(d_plus(f, v), 0));
  }
}

TEST_CASE("property: mean value point of a cubic") {
  Rng rng(74);
  for (int i = 0; i < 20; ++i) {
    Poly p = testing::random_poly(rng, 3);
    p.resize(4);
    if (p[3].is_zero()) p[3] = 1;
    Rational a = testing::small_rational(rng);
    Rational b = a + Rational(Integer(testing::uniform(rng, 1, 12)), Integer(testing::uniform(rng, 1, 4)));
    const FuncExpr f = testing::poly_expr(p);
    const Rational slope = (testing::horner(p, b) - testing::horner(p, a)) / (b - a);
    const auto g = [&](const Rational& x) {
      const DerivResult d = d_mean(f, x);
      REQUIRE(d.is_value());
      return d.value().rational() - slope;
    };
    // Bracket a sign change on a fine grid, then bisect exactly.
    const long pieces = 256;
    std::optional<std::pair<Rational, Rational>> bracket;
    Rational prev = a;
    int prev_sign = g(a).sign();
    for (long k = 1; k <= pieces && !bracket; ++k) {
      const Rational x = a + (b - a) * Rational(Integer(k), Integer(pieces));
      const int s = g(x).sign();
      if (s == 0 && k < pieces) bracket = {{x, x}};
      else if (s != prev_sign) bracket = {{prev, x}};
      prev = x;
      prev_sign = s;
    }
    REQUIRE(bracket);
    auto [lo, hi] = *bracket;
    const int lo_sign = g(lo).sign();
    while (Rational(hi - lo).to_double() > 1e-12) {
      const Rational mid = (lo + hi) / 2;
      if (g(mid).sign() == lo_sign) lo = mid;
      else hi = mid;
    }
    CHECK(a < lo);
    CHECK(hi < b);
    CHECK(std::abs(g((lo + hi) / 2).to_double()) < 1e-9);
  }
}

TEST_CASE("property: analytic functions are differentiable") {
  Rng rng(75);
  for (int i = 0; i < 60; ++i) {
    const FuncExpr f = testing::random_analytic(rng, 2);
    const Rational x0 = testing::small_rational(rng);
    const Differentiability d = is_differentiable(f, x0);
    INFO(f.str(), " at ", x0);
    CHECK(d.differentiable);
    const DerivResult plus = d_plus(f, x0);
    if (d.differentiable && plus.is_value()) CHECK(*d.slope == plus.value());
  }
}

TEST_CASE("property: e-integral is additive at standard level") {
  Rng rng(76);
  for (int i = 0; i < 100; ++i) {
    const FuncExpr f = testing::poly_expr(testing::random_poly(rng, 5));
    const Rational a = testing::small_rational(rng);
    const Rational m = a + Rational(Integer(testing::uniform(rng, 1, 5)), Integer(testing::uniform(rng, 1, 3)));
    const Rational b = m + Rational(Integer(testing::uniform(rng, 1, 5)), Integer(testing::uniform(rng, 1, 3)));
    CHECK(e_integral(f, a, b).real_part == e_integral(f, a, m).real_part + e_integral(f, m, b).real_part);
  }
}

TEST_CASE("property: real part of the e-integral is the antiderivative difference") {
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const Poly p = testing::random_poly(rng, 6);
    const Rational a = testing::small_rational(rng);
    const Rational b = a + Rational(Integer(testing::uniform(rng, 1, 9)), Integer(testing::uniform(rng, 1, 4)));
    const Poly big = testing::antiderivative(p);
    const EIntegral r = e_integral(testing::poly_expr(p), a, b);
    CHECK(r.real_part == testing::horner(big, b) - testing::horner(big, a));
    CHECK(is_infinitesimal(r.euclidean - r.real_part));
  }
}
