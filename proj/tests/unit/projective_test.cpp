#include <random>

#include <gtest/gtest.h>

#include "degloci/core/parse.hpp"
#include "degloci/projective/projective.hpp"

using namespace degloci;

namespace
{

std::vector<Rational> ints(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v) {
        out.emplace_back(x);
    }
    return out;
}

Poly tpoly(const std::string &s)
{
    return parse_poly(s, single_var("t"));
}

} // namespace

TEST(Projectivize, PublishedSym3)
{
    EXPECT_EQ(projectivize(OrbitId{Family::Sym, 3, 0}, ClassKind::Csm).coeffs, ints({1, 3, 6, 6, 3, 0}));
    EXPECT_EQ(projectivize(OrbitId{Family::Sym, 3, 1}, ClassKind::Csm).coeffs, ints({0, 3, 9, 10, 6, 3}));
    EXPECT_EQ(projectivize(OrbitId{Family::Sym, 3, 2}, ClassKind::Csm).coeffs, ints({0, 0, 0, 4, 6, 3}));
}

TEST(Projectivize, OrbitsSumToAmbient)
{
    for (Family f : {Family::Wedge, Family::Sym}) {
        for (unsigned n = 1; n <= 5; ++n) {
            const unsigned N = ambient_dim(f, n);
            std::vector<Rational> csm(N, Rational(0)), ssm(N, Rational(0));
            for (unsigned r : orbit_coranks(f, n)) {
                const auto c = projectivize(OrbitId{f, n, r}, ClassKind::Csm);
                const auto s = projectivize(OrbitId{f, n, r}, ClassKind::Ssm);
                for (unsigned i = 0; i < N; ++i) {
                    csm[i] += c.coeffs[i];
                    ssm[i] += s.coeffs[i];
                }
            }
            for (unsigned i = 0; i < N; ++i) {
                EXPECT_EQ(csm[i], binomial(N, i)) << family_name(f) << n;
                EXPECT_EQ(ssm[i], Rational(i == 0 ? 1 : 0)) << family_name(f) << n;
            }
        }
    }
}

TEST(GeneralProjectivize, Substitution)
{
    const Poly p = parse_poly("a1", alpha_vars(1));
    const Poly q = general_projectivize(p, {1}, 2);
    EXPECT_EQ(q, parse_poly("a1 + 1/2 xi", q.vars()));
    const Poly s = general_projectivize(parse_poly("a1 + a2", alpha_vars(2)), {1, 1}, 2);
    EXPECT_EQ(s, parse_poly("a1 + a2 + xi", s.vars()));
    EXPECT_THROW(general_projectivize(p, {1}, 0), error);
}

TEST(GeneralProjectivize, AgreesWithProjectivize)
{
    const OrbitId o{Family::Sym, 3, 1};
    const Poly w = w_function(o).alpha();
    const Poly g = general_projectivize(w, {1, 1, 1}, 2);
    Assignment<Rational> zero;
    const Vars xi = single_var("xi");
    for (unsigned i = 0; i < 3; ++i) {
        zero.emplace(g.vars()->name(i), Poly(xi));
    }
    zero.emplace("xi", Poly::variable(xi, 0));
    const Poly e = substitute(g, zero, xi);
    const ProjClass c = projectivize(o, ClassKind::Csm);
    for (unsigned i = 0; i < c.N; ++i) {
        EXPECT_EQ(e.coefficient(key::from_exponents(std::vector<unsigned>{i})), c.coeffs[i]);
    }
}

TEST(AluffiJ, Examples)
{
    EXPECT_EQ(aluffi_J(tpoly("3 + 6t + 4t^2")), tpoly("3 - 2t + 4t^2"));
    EXPECT_EQ(aluffi_J(aluffi_J(tpoly("1 + 5t - 2t^3"))), tpoly("1 + 5t - 2t^3"));
    EXPECT_EQ(aluffi_J(tpoly("1")), tpoly("1"));
}

TEST(AluffiJ, InvolutionOnRandomPolynomials)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-5, 5);
    const Vars t = single_var("t");
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Poly::Term> ts;
        const unsigned deg = 1 + trial % 20;
        for (unsigned i = 0; i <= deg; ++i) {
            const int c = i == deg ? 1 + std::abs(coeff(rng)) : coeff(rng);
            if (c != 0) {
                ts.push_back({key::from_exponents(std::vector<unsigned>{i}), Rational(c)});
            }
        }
        const Poly p = Poly::from_terms(t, std::move(ts));
        const Poly j = aluffi_J(p);
        EXPECT_EQ(j.degree(), p.degree());
        EXPECT_EQ(aluffi_J(j), p);
    }
}

TEST(EulerTable, PublishedSym3)
{
    const auto rows = euler_char_table(Family::Sym, 3);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].chi, ints({0, 1, -1, 3, -1, 1}));
    EXPECT_EQ(rows[1].chi, ints({3, 2, 1, 0, 3, 0}));
    EXPECT_EQ(rows[2].chi, ints({3, 2, 4, 0, 0, 0}));
}

TEST(EulerTable, PublishedWedge6)
{
    const auto rows = euler_char_table(Family::Wedge, 6);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].chi, ints({0, -1, 1, -3, 5, -11, 21, -29, 29, -21, 11, -5, 3, -1, 1}));
    EXPECT_EQ(rows[1].chi, ints({0, 3, 0, 9, -6, 27, -36, 51, -36, 27, -6, 9, 0, 3, 0}));
    EXPECT_EQ(rows[2].chi, ints({15, 12, 12, 6, 12, -6, 24, -14, 14, 0, 0, 0, 0, 0, 0}));
}

TEST(EulerTable, ColumnSumsAndClosure)
{
    for (Family f : {Family::Wedge, Family::Sym}) {
        for (unsigned n = 2; n <= 5; ++n) {
            const unsigned N = ambient_dim(f, n);
            const auto rows = euler_char_table(f, n);
            const auto closed = euler_char_table(f, n, true);
            for (unsigned i = 0; i < N; ++i) {
                Rational sum(0);
                for (const auto &row : rows) {
                    sum += row.chi[i];
                }
                // chi(P^{N-1-i})
                EXPECT_EQ(sum, Rational(N - i)) << family_name(f) << n << " column " << i;
                // The closure of the first orbit is the whole space.
                EXPECT_EQ(closed.front().chi[i], Rational(N - i));
            }
        }
    }
}

TEST(ClosedInvariants, Examples)
{
    const auto s32 = closed_invariants(OrbitId{Family::Sym, 3, 2});
    EXPECT_EQ(s32.codim, 3u);
    EXPECT_EQ(s32.degree, Rational(4));
    EXPECT_EQ(s32.euler_char, Rational(3));
    const auto w64 = closed_invariants(OrbitId{Family::Wedge, 6, 4});
    EXPECT_EQ(w64.codim, 6u);
    EXPECT_EQ(w64.degree, Rational(14));
    EXPECT_EQ(w64.euler_char, Rational(15));
}

TEST(ClosedInvariants, AgreeWithClasses)
{
    for (Family f : {Family::Wedge, Family::Sym}) {
        for (unsigned n = 1; n <= 6; ++n) {
            for (unsigned r : orbit_coranks(f, n)) {
                if (r == n) {
                    continue;
                }
                const OrbitId o{f, n, r};
                const auto inv = closed_invariants(o);
                const ProjClass c = projectivize(o, ClassKind::Csm);
                const ProjClass cl = projectivize_closure(o, ClassKind::Csm);
                unsigned first = 0;
                while (first < cl.N && sgn(cl.coeffs[first]) == 0) {
                    ++first;
                }
                EXPECT_EQ(first, inv.codim) << to_string(o);
                EXPECT_EQ(cl.coeffs[first], inv.degree) << to_string(o);
                EXPECT_EQ(c.coeffs[c.N - 1], inv.euler_char) << to_string(o);
                EXPECT_EQ(euler_characteristics(c)[0], inv.euler_char) << to_string(o);
            }
        }
    }
}
