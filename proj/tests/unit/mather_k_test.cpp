#include <random>

#include <gtest/gtest.h>

#include "degloci/classes/mather.hpp"
#include "degloci/core/parse.hpp"
#include "degloci/kclasses/ktheory.hpp"

using namespace degloci;

namespace
{

Poly qpoly(const std::string &s)
{
    return parse_poly(s, q_vars());
}

std::vector<Rational> ints(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v) {
        out.emplace_back(x);
    }
    return out;
}

// Random (a_1..a_n, y) away from the poles a_i = a_j, a_i = 0, a_i a_j = -y.
std::vector<Rational> random_point(std::mt19937 &rng, std::size_t size)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (;;) {
        std::vector<Rational> p;
        for (std::size_t i = 0; i < size; ++i) {
            Rational x(num(rng), den(rng));
            x.canonicalize();
            p.push_back(x);
        }
        bool ok = true;
        const std::size_t n = size - 1;
        for (std::size_t i = 0; i < n && ok; ++i) {
            ok = sgn(p[i]) != 0;
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                ok = p[i] != p[j] && p[i] * p[j] != -p[n];
            }
        }
        if (ok) {
            return p;
        }
    }
}

// Subset sum evaluated directly at a point (a_1..a_n, y).
Rational phi_k_numeric(unsigned n, unsigned r, const std::vector<Rational> &p)
{
    const Rational y = p[n];
    Rational total(0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != r) {
            continue;
        }
        Rational t(1);
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) {
                const bool ii = mask >> i & 1, jj = mask >> j & 1;
                const Rational ai = p[i], aj = p[j];
                if (ii && jj && i < j) {
                    t *= (1 - 1 / (ai * aj)) / (1 + y / (ai * aj));
                } else if (ii && !jj) {
                    t *= (1 - 1 / (ai * aj)) * (1 + y * aj / ai) / ((1 + y / (ai * aj)) * (1 - aj / ai));
                }
            }
        }
        total += t;
    }
    return total;
}

} // namespace

TEST(EulerObstruction, Coefficients)
{
    EXPECT_EQ(euler_obstruction_wedge(4, 4), ints({1}));
    EXPECT_EQ(euler_obstruction_wedge(6, 2), ints({1, 2, 3}));
    EXPECT_EQ(euler_obstruction_wedge(4, 0), ints({1, 1, 1}));
    EXPECT_EQ(euler_obstruction_wedge(6, 4), ints({1, 3}));
    EXPECT_THROW(euler_obstruction_wedge(4, 1), invalid_orbit);
}

TEST(ChernMather, Examples)
{
    const SchurExpansion cm42 = chern_mather_wedge(4, 2);
    EXPECT_EQ(cm42, w_function(OrbitId{Family::Wedge, 4, 2}).schur +
                        scaled(w_function(OrbitId{Family::Wedge, 4, 4}).schur, Rational(2)));
    EXPECT_EQ(chern_mather_wedge(5, 5), w_function(OrbitId{Family::Wedge, 5, 5}).schur);
    for (unsigned n = 2; n <= 6; n += 2) {
        EXPECT_EQ(schur_to_alpha(chern_mather_wedge(n, 0), n), total_chern(Family::Wedge, n)) << n;
    }
    EXPECT_EQ(schur_to_alpha(chern_mather_wedge(5, 1), 5), total_chern(Family::Wedge, 5));
}

TEST(QAnalogues, Binomials)
{
    EXPECT_EQ(q_binomial(2, 1), qpoly("1 + q"));
    EXPECT_EQ(q_binomial(4, 2), qpoly("1 + q + 2q^2 + q^3 + q^4"));
    const std::vector<Rational> one{Rational(1)};
    for (unsigned n = 0; n <= 8; ++n) {
        for (unsigned m = 0; m <= n; ++m) {
            EXPECT_EQ(evaluate(q_binomial(n, m), std::span<const Rational>(one)), binomial(n, m));
            if (n >= 1 && m >= 1 && m < n) {
                const Poly qm = pow(Poly::variable(q_vars(), 0), m);
                EXPECT_EQ(q_binomial(n, m), q_binomial(n - 1, m - 1) + qm * q_binomial(n - 1, m));
            }
        }
    }
    EXPECT_THROW(q_binomial(2, 3), error);
}

TEST(QAnalogues, EulerNumbers)
{
    const auto e = q_euler_numbers(10);
    EXPECT_EQ(e[0], qpoly("1"));
    EXPECT_EQ(e[1], qpoly("0"));
    EXPECT_EQ(e[2], qpoly("-1"));
    EXPECT_EQ(e[4], q_binomial(4, 2) - qpoly("1"));
    const auto plain = euler_numbers(10);
    const std::vector<Rational> one{Rational(1)};
    for (unsigned n = 0; n <= 10; ++n) {
        EXPECT_EQ(evaluate(e[n], std::span<const Rational>(one)), plain[n]) << n;
    }
}

TEST(KPhi, SmallCases)
{
    EXPECT_TRUE(equivalent(phi_wedge_k(2, 0), LaurentFraction::constant(k_vars(2), Rational(1))));
    const Vars v = k_vars(2);
    const Poly p = parse_poly("a1a2 - 1", v), q = parse_poly("a1a2 + y", v);
    EXPECT_TRUE(equivalent(phi_wedge_k(2, 2), LaurentFraction(p, {q})));
    EXPECT_THROW(phi_wedge_k(5, 1), out_of_scope);
}

TEST(KPhi, MatchesNumericSubsetSum)
{
    std::mt19937 rng(11);
    for (unsigned n = 2; n <= 4; ++n) {
        for (unsigned r : orbit_coranks(Family::Wedge, n)) {
            const LaurentFraction f = phi_wedge_k(n, r);
            for (int trial = 0; trial < 5; ++trial) {
                const auto pt = random_point(rng, n + 1);
                EXPECT_EQ(f.evaluate(pt), phi_k_numeric(n, r, pt)) << n << "," << r;
            }
        }
    }
}

TEST(KPhi, Symmetric)
{
    std::mt19937 rng(5);
    const LaurentFraction f = phi_wedge_k(4, 2);
    for (int trial = 0; trial < 10; ++trial) {
        auto pt = random_point(rng, 5);
        const Rational a = f.evaluate(pt);
        std::swap(pt[trial % 4], pt[(trial + 1 + trial / 4) % 4]);
        EXPECT_EQ(f.evaluate(pt), a);
    }
}

TEST(MotivicSegre, SmallCases)
{
    EXPECT_TRUE(equivalent(motivic_segre_sieve(2, 2), phi_wedge_k(2, 2)));
    const LaurentFraction one = LaurentFraction::constant(k_vars(2), Rational(1));
    EXPECT_TRUE(equivalent(motivic_segre_sieve(2, 0), one - phi_wedge_k(2, 2)));
    // Summing the two orbits of the 2x2 case gives exactly 1 for every q.
    for (const char *q : {"-y", "y", "3/2"}) {
        EXPECT_TRUE(equivalent(motivic_segre_sieve(2, 0, parse_qspec(q)) + motivic_segre_sieve(2, 2, parse_qspec(q)), one));
    }
}
