#include <random>

#include <gtest/gtest.h>

#include "degloci/core/division.hpp"
#include "degloci/core/format.hpp"
#include "degloci/core/laurent.hpp"
#include "degloci/core/parse.hpp"
#include "degloci/core/series.hpp"
#include "degloci/core/substitute.hpp"

using namespace degloci;

namespace
{

Poly random_poly(std::mt19937 &rng, const Vars &v, unsigned max_deg, int nterms)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<unsigned> ex(0, max_deg);
    std::vector<Poly::Term> ts;
    for (int k = 0; k < nterms; ++k) {
        std::vector<unsigned> e(v->size());
        unsigned total = 0;
        for (auto &x : e) {
            x = ex(rng);
            if (total + x > max_deg) {
                x = 0;
            }
            total += x;
        }
        ts.push_back({key::from_exponents(e), Rational(coeff(rng))});
    }
    return Poly::from_terms(v, ts);
}

} // namespace

TEST(Monomial, KeyOrderIsGradedLex)
{
    const std::vector<unsigned> a{2, 0}, b{0, 3}, c{1, 1};
    EXPECT_LT(key::from_exponents(c), key::from_exponents(a));
    EXPECT_LT(key::from_exponents(a), key::from_exponents(b));
    EXPECT_EQ(key::degree(key::from_exponents(b)), 3u);
    EXPECT_EQ(key::exponent(key::from_exponents(c), 1), 1u);
}

TEST(Monomial, RejectsTooManyVariables)
{
    EXPECT_THROW(make_vars({"a", "b", "c", "d", "e", "f", "g", "h"}), out_of_scope);
}

TEST(Polynomial, DifferenceOfSquares)
{
    auto v = alpha_vars(2);
    Poly a1 = Poly::variable(v, 0), a2 = Poly::variable(v, 1);
    EXPECT_EQ((a1 + a2) * (a1 - a2), parse_poly("a1^2 - a2^2", v));
}

TEST(Polynomial, TruncatedProduct)
{
    auto v = alpha_vars(1);
    TruncSeries<Rational> s(parse_poly("1 + a1", v), 1);
    EXPECT_EQ((s * s).poly(), parse_poly("1 + 2a1", v));
}

TEST(Polynomial, MismatchedVariablesThrow)
{
    Poly a = Poly::variable(alpha_vars(2), 0);
    Poly b = Poly::variable(alpha_vars(3), 0);
    EXPECT_THROW(a + b, variable_mismatch);
    TruncSeries<Rational> s(a, 2), t(a, 3);
    EXPECT_THROW(s + t, truncation_mismatch);
}

TEST(Polynomial, RingLawsOnRandomOperands)
{
    std::mt19937 rng(7);
    auto v = alpha_vars(3);
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = random_poly(rng, v, 3, 5), q = random_poly(rng, v, 3, 5), r = random_poly(rng, v, 3, 5);
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ(p * q, q * p);
        EXPECT_TRUE((p - p).is_zero());
    }
}

TEST(Polynomial, LargeProductMatchesSmallRoute)
{
    // Exercises the hash accumulation path against repeated small products.
    std::mt19937 rng(11);
    auto v = alpha_vars(4);
    Poly p = random_poly(rng, v, 4, 40), q = random_poly(rng, v, 4, 40);
    Poly slow(v);
    for (const auto &t : q.terms()) {
        slow += p * Poly::from_sorted_terms(v, {t});
    }
    EXPECT_EQ(p * q, slow);
}

TEST(Polynomial, CheckedIntOverflowThrows)
{
    auto v = alpha_vars(1);
    Polynomial<CheckedInt> p(v, CheckedInt(1LL << 62));
    EXPECT_THROW(p * p * p, std::overflow_error);
}

TEST(Series, InvertExamples)
{
    auto v = alpha_vars(2);
    EXPECT_EQ(series_invert(TruncSeries<Rational>(Poly(v, Rational(1)), 5)).poly(), Poly(v, Rational(1)));
    EXPECT_EQ(series_invert(TruncSeries<Rational>(parse_poly("1 + 2a1", v), 3)).poly(),
              parse_poly("1 - 2a1 + 4a1^2 - 8a1^3", v));
    EXPECT_EQ(series_invert(TruncSeries<Rational>(parse_poly("1 + a1 + a2", v), 2)).poly(),
              parse_poly("1 - (a1 + a2) + (a1 + a2)^2", v));
}

TEST(Series, InvertIsTwoSided)
{
    std::mt19937 rng(3);
    auto v = alpha_vars(3);
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = random_poly(rng, v, 3, 6) + Poly(v, Rational(3));
        if (is_zero(p.constant_term())) {
            continue;
        }
        TruncSeries<Rational> s(p, 5);
        auto inv = series_invert(s);
        EXPECT_EQ((s * inv).poly(), Poly(v, Rational(1)));
        EXPECT_EQ((inv * s).poly(), Poly(v, Rational(1)));
    }
}

TEST(Series, ZeroConstantTermThrows)
{
    auto v = alpha_vars(1);
    EXPECT_THROW(series_invert(TruncSeries<Rational>(Poly::variable(v, 0), 3)), error);
}

TEST(Division, Examples)
{
    auto v = alpha_vars(2);
    EXPECT_EQ(exact_divide(parse_poly("a1^2 - a2^2", v), parse_poly("a1 - a2", v)), parse_poly("a1 + a2", v));
    EXPECT_THROW(exact_divide(parse_poly("a1^2 + a2", v), parse_poly("a1 - a2", v)), nonexact_division);
}

TEST(Division, ProductRoundTrip)
{
    std::mt19937 rng(5);
    auto v = alpha_vars(3);
    for (int trial = 0; trial < 30; ++trial) {
        Poly a = random_poly(rng, v, 3, 5), b = random_poly(rng, v, 3, 4);
        if (b.is_zero()) {
            continue;
        }
        EXPECT_EQ(exact_divide(a * b, b), a);
    }
}

TEST(Division, GradewiseSeries)
{
    auto v = alpha_vars(2);
    // (a1-a2)(1 - a1 + a1^2 - ...) truncated at 4, divided by (a1-a2).
    Poly den = parse_poly("a1 - a2", v);
    auto geo = series_invert(TruncSeries<Rational>(parse_poly("1 + a1", v), 4));
    TruncSeries<Rational> num = geo * den;
    auto q = exact_divide(num, den);
    EXPECT_EQ(q.bound(), 3u);
    EXPECT_EQ(q.poly(), geo.poly().truncated(3));
}

TEST(Substitute, Examples)
{
    auto v = alpha_vars(2);
    auto s = make_vars({"s1"});
    Assignment<Rational> m{{"a1", Poly::variable(s, 0)}, {"a2", -Poly::variable(s, 0)}};
    EXPECT_TRUE(substitute(parse_poly("a1 + a2", v), m, s).is_zero());

    auto xi = single_var("x");
    Poly half_x = Poly::variable(xi, 0, make_rational(1, 2));
    Assignment<Rational> h{{"a1", half_x}, {"a2", half_x}};
    EXPECT_EQ(substitute(parse_poly("a1a2", v), h, xi), parse_poly("1/4 x^2", xi));
}

TEST(Substitute, UnmappedVariableThrows)
{
    auto v = alpha_vars(2);
    Assignment<Rational> m{{"a1", Poly::variable(v, 0)}};
    EXPECT_THROW(substitute(parse_poly("a1 + a2", v), m, v), unmapped_variable);
}

TEST(Substitute, IsRingMorphism)
{
    std::mt19937 rng(9);
    auto v = alpha_vars(3);
    auto w = make_vars({"x", "y"});
    for (int trial = 0; trial < 15; ++trial) {
        Assignment<Rational> m;
        for (std::size_t i = 0; i < 3; ++i) {
            m.emplace(v->name(i), random_poly(rng, w, 2, 3));
        }
        Poly p = random_poly(rng, v, 3, 4), q = random_poly(rng, v, 3, 4);
        EXPECT_EQ(substitute(p * q, m, w), substitute(p, m, w) * substitute(q, m, w));
        EXPECT_EQ(substitute(p + q, m, w), substitute(p, m, w) + substitute(q, m, w));
    }
}

TEST(Substitute, SeriesKeepsBound)
{
    auto v = alpha_vars(2);
    auto w = single_var("x");
    Assignment<Rational> m{{"a1", Poly::variable(w, 0)}, {"a2", Poly::variable(w, 0)}};
    TruncSeries<Rational> s(parse_poly("1 + a1 + a1a2 + a2^3", v), 3);
    auto r = substitute(s, m, w);
    EXPECT_EQ(r.bound(), 3u);
    EXPECT_EQ(r.poly(), parse_poly("1 + x + x^2 + x^3", w));
}

TEST(Evaluate, PolynomialIdentityAtRandomPoints)
{
    std::mt19937 rng(13);
    auto v = alpha_vars(3);
    Poly p = random_poly(rng, v, 3, 6), q = random_poly(rng, v, 3, 6);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    for (int k = 0; k < 10; ++k) {
        std::vector<Rational> pt;
        for (int i = 0; i < 3; ++i) {
            pt.push_back(make_rational(num(rng), den(rng)));
        }
        EXPECT_EQ(evaluate(p * q, pt), evaluate(p, pt) * evaluate(q, pt));
    }
}

TEST(Laurent, Examples)
{
    auto v = alpha_vars(2);
    auto inv = LaurentFraction::monomial(v, 0, -1);
    auto two = inv + inv;
    EXPECT_EQ(to_string(two), "(2) / a1");

    auto a1a2 = LaurentFraction(parse_poly("a1a2", v));
    auto f = LaurentFraction::constant(v, Rational(1)) - LaurentFraction::monomial(v, 0, -1) * LaurentFraction::monomial(v, 1, -1);
    auto prod = f * a1a2;
    EXPECT_TRUE(prod.is_laurent_polynomial());
    EXPECT_EQ(prod.numerator(), parse_poly("a1a2 - 1", v));
    EXPECT_EQ(prod.shift(), (std::vector<int>{0, 0}));
}

TEST(Laurent, CancelsListedFactors)
{
    auto v = alpha_vars(2);
    Poly d = parse_poly("a1 - a2", v);
    LaurentFraction x = LaurentFraction(parse_poly("a1^2", v)).divided_by(d);
    LaurentFraction y = LaurentFraction(parse_poly("a2^2", v)).divided_by(d);
    LaurentFraction r = x - y;
    EXPECT_TRUE(r.is_laurent_polynomial());
    EXPECT_EQ(r.numerator(), parse_poly("a1 + a2", v));
}

TEST(Laurent, EvaluationMatchesArithmetic)
{
    auto v = alpha_vars(2, {"y"});
    LaurentFraction a = LaurentFraction(parse_poly("a1a2 - 1", v)).divided_by(parse_poly("a1a2 + y", v));
    LaurentFraction b = LaurentFraction(parse_poly("a1 + y a2", v)).divided_by(parse_poly("2a1 - 2a2", v));
    std::vector<Rational> pt{make_rational(3, 2), make_rational(-2, 7), make_rational(5, 3)};
    EXPECT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
}

TEST(Format, ChernDisplayOrder)
{
    auto c = chern_vars(3);
    FormatOptions o{chern_weights(3), false};
    EXPECT_EQ(to_string(parse_poly("c2 + c1^2 + 2c1 + 1", c), o), "1 + 2c1 + c1^2 + c2");
    EXPECT_EQ(to_string(parse_poly("-c3 + c1c2", c), o), "c1c2 - c3");
}
