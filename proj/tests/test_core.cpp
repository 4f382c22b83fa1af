#include "doctest.h"

#include "euclid/error.hpp"
#include "euclid/number.hpp"
#include "euclid/render.hpp"
#include "euclid/seq_expr.hpp"
#include "generators.hpp"

using namespace euclid;
using euclid::testing::Rng;

namespace {

const EuclideanNumber A = EuclideanNumber::alpha();
const EuclideanNumber H = EuclideanNumber::eta();

SeriesPoly series_of(std::initializer_list<std::pair<long, Rational>> alpha_terms) {
  SeriesPoly p;
  for (const auto& [k, c] : alpha_terms) p.add_term(Exponent::alpha(k), c);
  return p;
}

}  // namespace

TEST_CASE("rational canonical form") {
  const Rational r(Integer(6), Integer(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(3).fraction_str() == "3/1");
  CHECK(Rational::parse("-10/4") == Rational(Integer(-5), Integer(2)));
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DivisionByZero);
  CHECK(Rational(Integer(27), Integer(8)).exact_root(3) == Rational(Integer(3), Integer(2)));
  CHECK_FALSE(Rational(2).exact_root(2).has_value());
  CHECK(Rational(Integer(-7), Integer(2)).floor() == -4);
}

TEST_CASE("add") {
  CHECK(A + 1 == EuclideanNumber::omega());
  const EuclideanNumber xi = A / 3 + H;
  CHECK(xi + 0 == xi);
  CHECK((A + H) + (A - H) == 2 * A);
}

TEST_CASE("mul") {
  const EuclideanNumber sqrt_alpha = EuclideanNumber::monomial(Exponent::alpha(Rational(Integer(1), Integer(2))));
  CHECK(sqrt_alpha * sqrt_alpha == A);
  CHECK((A + 1) * (A + 1) == A * A + 2 * A + 1);
  CHECK(A * H == 1);
}

TEST_CASE("div") {
  CHECK(A / 2 == EuclideanNumber::monomial(Exponent::alpha(1), Rational(Integer(1), Integer(2))));
  const EuclideanNumber xi = A * A - H;
  CHECK(xi / 1 == xi);
  CHECK_THROWS_AS(xi / 0, DivisionByZero);

  // Long-division oracle: (1 + η)(1 − η + η²) = 1 + η³, so the first three
  // expansion terms of 1/(1+η) are 1, −η, η².
  const EuclideanNumber inv = 1 / (1 + H);
  CHECK_FALSE(inv.is_series());
  CHECK((1 + H) * (1 - H + H * H) - 1 == H * H * H);
  CHECK(expansion(inv, Exponent::alpha(-2)) == series_of({{0, 1}, {-1, -1}, {-2, 1}}));
  CHECK(ctr(inv) == 1);
  CHECK(inv * (1 + H) == 1);
}

TEST_CASE("exact quotients collapse to series") {
  const EuclideanNumber x = (A * A - 1) / (A + 1);
  CHECK(x.is_series());
  CHECK(x == A - 1);
  const EuclideanNumber y = (A * A * A + 1) / (A + 1);
  CHECK(y == A * A - A + 1);

  // Across 2^α layers: divisible and non-divisible cases both stop early.
  const EuclideanNumber t = EuclideanNumber::two_pow_alpha();
  const SeriesPoly den = (t + A).numerator();
  CHECK(exact_quotient(((t + A) * (t - 1 + H)).numerator(), den, 50) == (t - 1 + H).numerator());
  CHECK_FALSE(exact_quotient((t * A + 1).numerator(), den, 1000000));
  CHECK_FALSE(exact_quotient((A * A + 1 / t).numerator(), (A + 1).numerator(), 1000000));
  CHECK_FALSE(((t * A + 1) / (t + A)).is_series());
}

TEST_CASE("compare") {
  CHECK(compare(H, Rational(Integer(1), Integer(1000000))) == Ordering::less);
  Integer googol;
  mpz_ui_pow_ui(googol.get_mpz_t(), 10, 100);
  CHECK(compare(A, Rational(googol)) == Ordering::greater);
  CHECK(compare(EuclideanNumber::two_pow_alpha(), pow(A, 1000)) == Ordering::greater);
  CHECK(compare(A / (A + 1), 1) == Ordering::less);
  CHECK(compare(-A, -A) == Ordering::equal);
}

TEST_CASE("classify") {
  CHECK(classify(H * H + H) == NumberClass{Kind::infinitesimal, Sign::positive});
  CHECK(classify(3 + H) == NumberClass{Kind::finite, Sign::positive});
  CHECK(classify(EuclideanNumber::omega()) == NumberClass{Kind::infinite, Sign::positive});
  CHECK(classify(EuclideanNumber()) == NumberClass{Kind::zero, Sign::zero});
  CHECK(classify(-1 / (A + 1)) == NumberClass{Kind::infinitesimal, Sign::negative});
  CHECK(classify(1 / EuclideanNumber::two_pow_alpha()).kind == Kind::infinitesimal);
}

TEST_CASE("st") {
  CHECK(st(3 + 5 * H - H * H) == 3);
  // (2α+1)/α = 2 + η
  CHECK(st((2 * A + 1) / A) == 2);
  CHECK(st((2 * A + 1) / (A - 7)) == 2);
  CHECK_THROWS_AS(st(A), NotFinite);
}

TEST_CASE("ctr") {
  CHECK(ctr(A + Rational(Integer(1), Integer(2)) + H) == A + Rational(Integer(1), Integer(2)));
  // α² = (α+1)(α−1) + 1
  CHECK((A + 1) * (A - 1) + 1 == A * A);
  CHECK(ctr(A * A / (A + 1)) == A - 1);
  const EuclideanNumber f = (3 * A + 4) / (A + 2);
  CHECK(ctr(f) == st(f));
}

TEST_CASE("expansion with infinitely many terms above the cutoff is refused") {
  // (2^α)²/(1+η) has infinitely many terms above exponent (0,0).
  const EuclideanNumber t = EuclideanNumber::two_pow_alpha();
  CHECK_THROWS_AS(expansion(t * t / (1 + H), Exponent::zero(), 200), Unsupported);
}

TEST_CASE("monads and galaxies") {
  CHECK(same_monad(1, 1 + H));
  CHECK_FALSE(same_monad(A, A + 1));
  CHECK(same_galaxy(A, A + 1));
  CHECK_FALSE(same_galaxy(A, 2 * A));
}

TEST_CASE("alpha_limit") {
  const SeqExpr n = SeqExpr::n();
  const SeqExpr one = SeqExpr::constant(1);
  CHECK(alpha_limit(n) == A);
  CHECK(alpha_limit(n + one) == EuclideanNumber::omega());
  CHECK(alpha_limit((n.pow(2) + one) / n) == A + H);
  CHECK_THROWS_AS(alpha_limit(one / (n - n)), ZeroDenominator);
  CHECK((n.pow(2) / (n - one)).at(Integer(3)) == Rational(Integer(9), Integer(2)));
  CHECK_FALSE((one / (n - one)).at(Integer(1)).has_value());
}

TEST_CASE("pow and monomial_root") {
  CHECK(pow(A + 7, 0) == 1);
  CHECK(pow(A + 1, 2) == A * A + 2 * A + 1);
  CHECK(pow(A, -2) == H * H);
  CHECK_THROWS_AS(pow(EuclideanNumber(), -1), DivisionByZero);
  const EuclideanNumber r = monomial_root({Exponent::alpha(1), Rational(1)}, 2);
  CHECK(r == EuclideanNumber::monomial(Exponent::alpha(Rational(Integer(1), Integer(2)))));
  CHECK(r * r == A);
  for (unsigned long k = 1; k <= 7; ++k) CHECK(pow(root(A, k), static_cast<long>(k)) == A);
  CHECK(root(4 * A * A, 2) == 2 * A);
  CHECK_THROWS_AS(root(A + 1, 2), Unsupported);
  CHECK_THROWS_AS(root(2 * A, 2), Unsupported);
  CHECK_THROWS_AS(root(-A, 3), Unsupported);
}

TEST_CASE("text rendering") {
  CHECK(to_text(2 * A * A + 1) == "2·α^2 + 1");
  CHECK(to_text(Rational(Integer(1), Integer(3)) - H / 2 + H * H / 6) ==
        "1/3 − (1/2)·η + (1/6)·η^2");
  CHECK(to_text(-A) == "−α");
  CHECK(to_text(EuclideanNumber::two_pow_alpha() * A - 3) == "2^α·α − 3");
  CHECK(to_text(1 / EuclideanNumber::two_pow_alpha()) == "(2^α)^(-1)");
  CHECK(to_text(root(A, 2)) == "α^(1/2)");
  CHECK(to_text(1 / (1 + H)) == "(1)/(1 + η)");
  CHECK(to_text(EuclideanNumber()) == "0");
  const auto triples = term_triples((2 * A + 1).numerator());
  REQUIRE(triples.size() == 2);
  CHECK(triples[0] == std::array<std::string, 3>{"0/1", "1/1", "2/1"});
}

TEST_CASE("field and order properties on random samples") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = testing::random_number(rng);
    const auto b = testing::random_number(rng);
    const auto c = testing::random_number(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    if (a < b) {
      CHECK(a + c < b + c);
      if (c > 0) CHECK(a * c < b * c);
    }
  }
}

TEST_CASE("center properties on random samples") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = testing::random_number(rng);
    const auto b = testing::random_number(rng);
    CHECK(ctr(ctr(a)) == ctr(a));
    CHECK(ctr(a + b) == ctr(a) + ctr(b));
    CHECK(is_infinitesimal(a - ctr(a)));
  }
}

TEST_CASE("alpha_limit is a homomorphism and preserves nonvanishing") {
  Rng rng(3);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const SeqExpr s = testing::random_seq(rng, 3);
    const SeqExpr t = testing::random_seq(rng, 3);
    EuclideanNumber ls;
    EuclideanNumber lt;
    try {
      ls = alpha_limit(s);
      lt = alpha_limit(t);
    } catch (const ZeroDenominator&) {
      continue;
    }
    ++checked;
    CHECK(alpha_limit(s + t) == ls + lt);
    CHECK(alpha_limit(s - t) == ls - lt);
    CHECK(alpha_limit(s * t) == ls * lt);
    if (!lt.is_zero()) CHECK(alpha_limit(s / t) == ls / lt);
    bool never_zero = true;
    for (long n = 1; n <= 40 && never_zero; ++n) {
      const auto v = s.at(Integer(n));
      never_zero = v && !v->is_zero();
    }
    if (never_zero) CHECK_FALSE(ls.is_zero());
  }
  CHECK(checked > 100);
}

TEST_CASE("ctr across 2^α layers") {
  const EuclideanNumber t = EuclideanNumber::two_pow_alpha();
  // Every expansion term of (2^α)²/(1+η) lies above (0,0): the center is the
  // number itself even though its expansion is infinite.
  const EuclideanNumber x = t * t / (1 + H);
  CHECK(ctr(x) == x);
  // Terms in the 2^α-exponent 0 layer are divided out; the 2^-α layer drops.
  CHECK(ctr((A * A + 1 / t) / (A + 1)) == A - 1);
  // 1/(1 + 2^-α): 1 − 2^-α + ..., center 1.
  CHECK(ctr(1 / (1 + 1 / t)) == 1);
  // Mixed layers: whatever ctr discards must be infinitesimal.
  const EuclideanNumber y = (t + A) / (1 + A / t);
  CHECK(is_infinitesimal(y - ctr(y)));
  CHECK(ctr(ctr(y)) == ctr(y));
}
