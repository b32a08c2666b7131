#include <gtest/gtest.h>

#include "degloci/classes/sieve.hpp"
#include "degloci/core/format.hpp"
#include "degloci/core/parse.hpp"

using namespace degloci;

namespace
{

Poly chern(const std::string &text, unsigned n)
{
    return parse_poly(text, chern_vars(n));
}

Poly phi_chern(Family f, unsigned n, unsigned r, unsigned D)
{
    return schur_to_chern(phi_schur(OrbitId{f, n, r}, D), n);
}

} // namespace

TEST(Euler, Numbers)
{
    const auto e = euler_numbers(8);
    const std::vector<long> expect{1, 0, -1, 0, 5, 0, -61, 0, 1385};
    for (unsigned i = 0; i <= 8; ++i) {
        EXPECT_EQ(e[i], Rational(expect[i])) << i;
    }
}

TEST(Euler, BinomialMatrixInverse)
{
    for (Parity p : {Parity::Even, Parity::Odd}) {
        for (unsigned m = 0; m <= 5; ++m) {
            const Matrix prod = matmul(binomial_matrix(m, p), invert_binomial_matrix(m, p));
            for (unsigned i = 0; i <= m; ++i) {
                for (unsigned j = 0; j <= m; ++j) {
                    EXPECT_EQ(prod[i][j], Rational(i == j ? 1 : 0));
                }
            }
        }
    }
    const Matrix inv = invert_binomial_matrix(3, Parity::Even);
    const std::vector<std::vector<long>> expect{{1, -1, 5, -61}, {0, 1, -6, 75}, {0, 0, 1, -15}, {0, 0, 0, 1}};
    for (unsigned i = 0; i < 4; ++i) {
        for (unsigned j = 0; j < 4; ++j) {
            EXPECT_EQ(inv[i][j], Rational(expect[i][j]));
        }
    }
}

TEST(Phi, WedgeSeriesOracle)
{
    // Frozen from tests/oracle/sym_oracle.py (direct expansion of the subset sum).
    EXPECT_EQ(phi_chern(Family::Wedge, 3, 1, 7),
              chern("1 + 2c1c2 - 2c3 - 4c1^2c2 + 4c1c3"
                    " + 6c1^3c2 - 6c1^2c3 - 2c1c2^2 + 2c2c3"
                    " - 8c1^4c2 + 8c1^3c3 + 6c1^2c2^2 - 4c1c2c3 - 2c3^2"
                    " + 10c1^5c2 - 10c1^4c3 - 12c1^3c2^2 + 4c1^2c2c3 + 2c1c2^3 + 8c1c3^2 - 2c2^2c3",
                    3));
    EXPECT_EQ(phi_chern(Family::Wedge, 3, 3, 7),
              chern("c1c2 - c3 - 2c1^2c2 + 2c1c3"
                    " + 3c1^3c2 - 3c1^2c3 - c1c2^2 + c2c3"
                    " - 4c1^4c2 + 4c1^3c3 + 3c1^2c2^2 - 2c1c2c3 - c3^2"
                    " + 5c1^5c2 - 5c1^4c3 - 6c1^3c2^2 + 2c1^2c2c3 + c1c2^3 + 4c1c3^2 - c2^2c3",
                    3));
}

TEST(Phi, WedgeSeriesPublishedLowDegrees)
{
    // The published series agree with the subset sum through degree 4 only.
    EXPECT_EQ(phi_chern(Family::Wedge, 3, 1, 4), chern("1 + 2c1c2 - 2c3 - 4c1^2c2 + 4c1c3", 3));
    EXPECT_EQ(phi_chern(Family::Wedge, 3, 3, 4), chern("c1c2 - c3 - 2c1^2c2 + 2c1c3", 3));
    EXPECT_EQ(phi_chern(Family::Wedge, 2, 2, 4), chern("c1 - c1^2 + c1^3 - c1^4", 2));
}

TEST(Phi, PublishedSymSeries)
{
    EXPECT_EQ(phi_chern(Family::Sym, 2, 1, 5),
              chern("2c1 - 4c1^2 + 8c1^3 - 16c1^4 + 8c1^2c2 + 32c1^5 - 40c1^3c2", 2));
    EXPECT_EQ(phi_chern(Family::Sym, 2, 2, 5), chern("4c1c2 - 12c1^2c2 + 28c1^3c2 - 16c1c2^2", 2));
}

TEST(Phi, AlternantMatchesLiteralRoute)
{
    for (Family f : {Family::Wedge, Family::Sym}) {
        for (unsigned n = 1; n <= 4; ++n) {
            for (unsigned r : orbit_coranks(f, n)) {
                const OrbitId o{f, n, r};
                const unsigned D = n <= 3 ? 6 : 4;
                EXPECT_EQ(phi_class(o, D).poly(), phi_class_literal(o, D).poly()) << to_string(o);
            }
        }
    }
}

TEST(Phi, LowestTerm)
{
    // Lowest-degree term of the Sym classes is 2^r times the leading Schur class.
    const SchurExpansion s = phi_schur(OrbitId{Family::Sym, 3, 2}, 4);
    EXPECT_EQ(lowest_degree(s), 3);
    EXPECT_EQ(s.begin()->second, Rational(4));
    EXPECT_EQ(s.begin()->first, Partition({2, 1}));
}

TEST(Sieve, Coefficients)
{
    const auto c = sieve_coefficients(OrbitId{Family::Wedge, 4, 0}, false);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[1], std::make_pair(2u, Rational(-1)));
    EXPECT_EQ(c[2], std::make_pair(4u, Rational(5)));
    const auto s = sieve_coefficients(OrbitId{Family::Sym, 3, 1}, true);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[2], std::make_pair(3u, Rational(1)));
}

TEST(Sieve, PublishedSymClasses)
{
    const Poly s0 = schur_to_chern(ssm_sieve_schur(OrbitId{Family::Sym, 2, 0}, false, 4), 2);
    EXPECT_EQ(s0, chern("1 - 2c1 + 4c1^2 - 8c1^3 + 4c1c2 + 16c1^4 - 20c1^2c2", 2));
    const Poly s1 = schur_to_chern(ssm_sieve_schur(OrbitId{Family::Sym, 2, 1}, false, 4), 2);
    EXPECT_EQ(s1, chern("2c1 - 4c1^2 + 8c1^3 - 8c1c2 - 16c1^4 + 32c1^2c2", 2));
}

TEST(Sieve, PublishedSchurExpansions)
{
    EXPECT_EQ(to_string(ssm_sieve_schur(OrbitId{Family::Wedge, 4, 0}, false, 5)),
              "s0 - s1 + s2 + s11 - s3 - 2s21 - s111 + s4 + 3s31 + 2s22 + 3s211 + s1111"
              " - s5 - 4s41 - 5s32 - 6s311 - 5s221 - 4s2111");
    EXPECT_EQ(to_string(ssm_sieve_schur(OrbitId{Family::Sym, 3, 2}, false, 5)),
              "4s21 - 12s31 - 12s22 - 12s211 + 28s41 + 40s32 + 40s311 + 40s221");
}

TEST(Sieve, OrbitsSumToTotal)
{
    // The orbits partition the space, whose Segre-Schwartz-MacPherson class is 1.
    for (Family f : {Family::Wedge, Family::Sym}) {
        for (unsigned n = 2; n <= 4; ++n) {
            PhiTable t(f, n, 4);
            SchurExpansion sum;
            for (unsigned r : orbit_coranks(f, n)) {
                sum = sum + ssm_sieve_schur(OrbitId{f, n, r}, false, 4, &t);
            }
            EXPECT_EQ(to_string(sum), "s0") << family_name(f) << n;
        }
    }
}
