#include <doctest.h>

#include "diffalg/errors.hpp"
#include "diffalg/parser.hpp"
#include "diffalg/partial_fractions.hpp"
#include "diffalg/ratfunc.hpp"
#include "testutil.hpp"

using namespace diffalg;

TEST_CASE("derive: power rule and constants") {
    RatFunc x = RatFunc::x();
    CHECK(derive(x * x) == RatFunc(Rational(2)) * x);
    CHECK(derive(RatFunc(Rational(17, 3))).is_zero());
    CHECK(derive(RatFunc()).is_zero());
}

TEST_CASE("derive 1/(4x): quotient rule checked by re-multiplying") {
    RatFunc f = parse_ratfunc("1/(4*x)");
    RatFunc g = parse_ratfunc("4*x");
    // f*g = 1, so 0 = f'*g + f*g' and the oracle value is -f*g'/g.
    CHECK(f * g == RatFunc(Rational(1)));
    RatFunc oracle = -f * derive(g) / g;
    CHECK(oracle == parse_ratfunc("-1/(4*x^2)"));
    CHECK(derive(f) == oracle);
    CHECK(derive(f) * g + f * derive(g) == RatFunc());
}

TEST_CASE("derive is a derivation: Leibniz and linearity, exact") {
    auto rng = testutil::make_rng(11);
    for (int t = 0; t < 150; ++t) {
        RatFunc f = testutil::random_ratfunc(rng);
        RatFunc g = testutil::random_ratfunc(rng);
        CHECK(derive(f * g) == derive(f) * g + f * derive(g));
        CHECK(derive(f + g) == derive(f) + derive(g));
    }
}

TEST_CASE("kernel of the derivation is exactly Q") {
    auto rng = testutil::make_rng(13);
    for (int t = 0; t < 100; ++t) {
        RatFunc f = testutil::random_ratfunc(rng);
        CHECK(derive(f).is_zero() == f.is_constant());
    }
}

TEST_CASE("normal-form uniqueness") {
    RatFunc f(Polynomial::x().pow(2) - Polynomial::one(), Polynomial::linear(Rational(1)));
    CHECK(f == parse_ratfunc("x+1"));
    // denominators come out monic
    RatFunc g = parse_ratfunc("1/(2*x+2)");
    CHECK(g.den().leading() == 1);
    CHECK(g * parse_ratfunc("2*x+2") == RatFunc(Rational(1)));
}

TEST_CASE("parser: paper entry 1/(4*x)") {
    RatFunc f = parse_ratfunc("1/(4*x)");
    CHECK(f.num() == Polynomial(Rational(1, 4)));
    CHECK(f.den() == Polynomial::x());
}

TEST_CASE("parser: zero, cancellation, grammar corners") {
    CHECK(parse_ratfunc("0").is_zero());
    CHECK(parse_ratfunc("(x^2-1)/(x-1)") == parse_ratfunc("x+1"));
    // cross-multiplication check of the cancellation
    CHECK(parse_ratfunc("(x^2-1)/(x-1)") * parse_ratfunc("x-1") == parse_ratfunc("x^2-1"));
    CHECK(parse_ratfunc("-x^2 + 1/2") == RatFunc(Polynomial({Rational(1, 2), Rational(0), Rational(-1)})));
    CHECK(parse_ratfunc("x^-2") == RatFunc(Polynomial::one(), Polynomial::x().pow(2)));
    CHECK(parse_ratfunc("2/4") == RatFunc(Rational(1, 2)));
    CHECK(parse_ratfunc(" ( x + 1 ) * ( x - 1 ) ") == parse_ratfunc("x^2 - 1"));
}

TEST_CASE("parser: syntax errors carry byte offsets") {
    CHECK_THROWS_AS(parse_ratfunc("1/(4*y)"), SyntaxError);
    try {
        parse_ratfunc("1/(4*y)");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_ratfunc(""), SyntaxError);
    CHECK_THROWS_AS(parse_ratfunc("x +"), SyntaxError);
    CHECK_THROWS_AS(parse_ratfunc("(x"), SyntaxError);
    CHECK_THROWS_AS(parse_ratfunc("x^(1/2)"), SyntaxError); // rational mode: integer exponents only
    CHECK_THROWS_AS(parse_ratfunc("exp(x)"), SyntaxError);
    CHECK_THROWS_AS(parse_ratfunc("1/0"), DivisionByZero);
    CHECK_THROWS_AS(parse_ratfunc("1/(x - x)"), DivisionByZero);
}

TEST_CASE("parse-render round trip on normal forms") {
    auto rng = testutil::make_rng(17);
    for (int t = 0; t < 150; ++t) {
        RatFunc f = testutil::random_ratfunc(rng);
        CHECK(parse_ratfunc(f.to_string()) == f);
    }
}

TEST_CASE("partial fractions: 1/(x^2 - x)") {
    RatFunc f = parse_ratfunc("1/(x^2 - x)");
    PartialFraction pf = partial_fractions(f);
    CHECK(pf.poly.is_zero());
    REQUIRE(pf.terms.size() == 2);
    CHECK(pf.terms[0].location == 0);
    CHECK(pf.terms[0].order == 1);
    CHECK(pf.terms[0].coeff == Rational(-1));
    CHECK(pf.terms[1].location == 1);
    CHECK(pf.terms[1].order == 1);
    CHECK(pf.terms[1].coeff == Rational(1));
    CHECK(pf.resum() == f);
}

TEST_CASE("partial fractions: already decomposed 3/x + 1/x^2") {
    PartialFraction pf = partial_fractions(parse_ratfunc("3/x + 1/x^2"));
    CHECK(pf.order_at(Rational(0)) == 2);
    CHECK(pf.residue_at(Rational(0)) == Rational(3));
    REQUIRE(pf.terms.size() == 2);
    CHECK(pf.terms[1].coeff == Rational(1));
}

TEST_CASE("partial fractions: irreducible quadratic denominator is rejected") {
    CHECK_THROWS_AS(partial_fractions(parse_ratfunc("1/(x^2+1)")), NonSplitDenominator);
}

TEST_CASE("partial fractions re-sum exactly on random split inputs") {
    auto rng = testutil::make_rng(19);
    for (int t = 0; t < 200; ++t) {
        RatFunc f = testutil::random_split_ratfunc(rng);
        CHECK(partial_fractions(f).resum() == f);
    }
}
