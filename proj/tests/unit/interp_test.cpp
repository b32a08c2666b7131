#include <gtest/gtest.h>

#include "degloci/classes/axioms.hpp"
#include "degloci/classes/interp.hpp"
#include "degloci/core/format.hpp"
#include "degloci/core/parse.hpp"

using namespace degloci;

namespace
{

Poly chern(const std::string &text, unsigned n)
{
    return parse_poly(text, chern_vars(n));
}

Poly w_chern(Family f, unsigned n, unsigned r)
{
    return w_function(OrbitId{f, n, r}).chern();
}

} // namespace

TEST(WInner, Examples)
{
    EXPECT_EQ(w_inner(Family::Wedge, 2), Poly(alpha_vars(2), Rational(1)));
    EXPECT_EQ(w_inner(Family::Sym, 2), parse_poly("1 + a1 + a2 + 4a1a2", alpha_vars(2)));
    EXPECT_EQ(to_chern_basis(w_inner(Family::Wedge, 4)), chern("1 + 2c1 + c1^2 + 2c2 + 2c1c2 + c2^2 + c1c3 - 4c4", 4));
    EXPECT_THROW(w_inner(Family::Wedge, 3), invalid_orbit);
}

TEST(WInner, LiteralRoute)
{
    for (unsigned k = 0; k <= 4; ++k) {
        EXPECT_EQ(w_inner(Family::Sym, k), w_inner_literal(Family::Sym, k)) << k;
        if (k % 2 == 0) {
            EXPECT_EQ(w_inner(Family::Wedge, k), w_inner_literal(Family::Wedge, k)) << k;
        }
    }
    EXPECT_EQ(w_inner(Family::Wedge, 6), w_inner_literal(Family::Wedge, 6));
}

TEST(WFunction, PublishedValues)
{
    EXPECT_EQ(w_chern(Family::Wedge, 2, 2), chern("c1", 2));
    EXPECT_EQ(w_chern(Family::Wedge, 3, 1), chern("1 + 2c1 + c1^2 + c2", 3));
    EXPECT_EQ(w_chern(Family::Wedge, 3, 3), chern("c1c2 - c3", 3));
    EXPECT_EQ(w_chern(Family::Wedge, 4, 0), chern("1 + 2c1 + c1^2 + 2c2 + 2c1c2 + c2^2 + c1c3 - 4c4", 4));
    EXPECT_EQ(w_chern(Family::Wedge, 4, 2), chern("c1 + 2c1^2 + c1^3 + 2c1c2 + 2c1^2c2 + c1c2^2 + c1^2c3 - 4c1c4", 4));
    EXPECT_EQ(w_chern(Family::Wedge, 4, 4), chern("c1c2c3 - c1^2c4 - c3^2", 4));
    EXPECT_EQ(w_chern(Family::Sym, 2, 0), chern("1 + c1 + 4c2", 2));
    EXPECT_EQ(w_chern(Family::Sym, 2, 1), chern("2c1 + 2c1^2", 2));
    EXPECT_EQ(w_chern(Family::Sym, 2, 2), chern("4c1c2", 2));
    EXPECT_EQ(w_function(OrbitId{Family::Sym, 2, 2}).alpha(), parse_poly("4a1^2a2 + 4a1a2^2", alpha_vars(2)));
}

TEST(WFunction, SymOracle)
{
    // Frozen from tests/oracle/sym_oracle.py.
    EXPECT_EQ(w_chern(Family::Sym, 3, 0), chern("1 + 2c1 + 5c2 + 3c3 + c1^2 + 5c1c2 + 4c1c3 + 4c2^2", 3));
    EXPECT_EQ(w_chern(Family::Sym, 3, 1),
              chern("2c1 + 4c1^2 + 2c1c2 + 14c1c3 + 8c3 + 2c1^3 + 2c1^2c2 + 8c1^2c3 + 8c2c3", 3));
    EXPECT_EQ(w_chern(Family::Sym, 3, 2), chern("4c1c2 - 4c3 + 4c1^2c2 + 4c1c2^2 - 4c1c3 - 4c2c3", 3));
    EXPECT_EQ(w_chern(Family::Sym, 3, 3), chern("8c1c2c3 - 8c3^2", 3));
}

TEST(WFunction, LiteralRoute)
{
    for (Family f : {Family::Wedge, Family::Sym}) {
        for (unsigned n = 1; n <= 4; ++n) {
            for (unsigned r : orbit_coranks(f, n)) {
                const OrbitId o{f, n, r};
                EXPECT_EQ(w_function(o).alpha(), w_function_literal(o)) << to_string(o);
            }
        }
    }
}

TEST(WFunction, TopAndLowestDegree)
{
    for (Family f : {Family::Wedge, Family::Sym}) {
        for (unsigned n = 1; n <= 5; ++n) {
            for (unsigned r : orbit_coranks(f, n)) {
                const OrbitId o{f, n, r};
                const WFunction w = w_function(o);
                EXPECT_EQ(w.top_degree(), static_cast<int>(w_top_degree(o))) << to_string(o);
                EXPECT_EQ(lowest_degree(w.schur), static_cast<int>(codim(o))) << to_string(o);
                const Partition low = f == Family::Wedge ? Partition::staircase(r > 0 ? r - 1 : 0)
                                                         : Partition::staircase(r);
                EXPECT_EQ(w.schur.begin()->first, low) << to_string(o);
                EXPECT_EQ(w.schur.begin()->second, f == Family::Wedge ? Rational(1) : Rational(1u << r));
            }
        }
    }
}

TEST(CsmToSsm, Examples)
{
    const Poly w22 = w_function(OrbitId{Family::Wedge, 2, 2}).alpha();
    EXPECT_EQ(to_chern_basis(csm_to_ssm(w22, Family::Wedge, 4).poly()), chern("c1 - c1^2 + c1^3 - c1^4", 2));
    EXPECT_EQ(csm_to_ssm(Poly(alpha_vars(3), Rational(1)), Family::Wedge, 0).poly(), Poly(alpha_vars(3), Rational(1)));
}

TEST(CsmToSsm, MatchesSieve)
{
    for (Family f : {Family::Wedge, Family::Sym}) {
        for (unsigned n = 1; n <= 4; ++n) {
            PhiTable t(f, n, 6);
            for (unsigned r : orbit_coranks(f, n)) {
                const OrbitId o{f, n, r};
                EXPECT_EQ(csm_to_ssm_schur(w_function(o), 6), ssm_sieve_schur(o, false, 6, &t)) << to_string(o);
            }
        }
    }
}

TEST(Restriction, Examples)
{
    const RestrictionData d20 = restriction_data(OrbitId{Family::Wedge, 2, 0});
    EXPECT_EQ(restrict_to(d20, parse_poly("a1 + a2", alpha_vars(2))), Poly(d20.vars));
    EXPECT_EQ(d20.tangent_chern, Poly(d20.vars, Rational(1)));
    EXPECT_EQ(d20.normal_euler, Poly(d20.vars, Rational(1)));

    const RestrictionData d33 = restriction_data(OrbitId{Family::Wedge, 3, 3});
    EXPECT_EQ(d33.normal_euler, parse_poly("(a1 + a2)(a1 + a3)(a2 + a3)", d33.vars));

    const RestrictionData d42 = restriction_data(OrbitId{Family::Wedge, 4, 2});
    EXPECT_EQ(d42.normal_euler, parse_poly("a3 + a4", d42.vars));
    EXPECT_EQ(d42.tangent_chern, parse_poly("(1 + s1 + a3)(1 - s1 + a3)(1 + s1 + a4)(1 - s1 + a4)", d42.vars));

    for (unsigned n = 2; n <= 6; ++n) {
        for (unsigned m : orbit_coranks(Family::Wedge, n)) {
            const RestrictionData d = restriction_data(OrbitId{Family::Wedge, n, m});
            EXPECT_EQ((d.tangent_chern * d.normal_euler).degree(), static_cast<int>(n * (n - 1) / 2 - (n - m) / 2));
        }
    }
    EXPECT_THROW(restriction_data(OrbitId{Family::Sym, 2, 1}), out_of_scope);
}

TEST(Axioms, WFunctionsPass)
{
    for (unsigned n = 1; n <= 5; ++n) {
        for (unsigned r : orbit_coranks(Family::Wedge, n)) {
            const OrbitId o{Family::Wedge, n, r};
            const AxiomReport rep = verify_axioms(o, w_function(o).alpha());
            EXPECT_TRUE(rep.ok()) << to_string(o);
        }
    }
}

TEST(Axioms, PerturbationFailsDegreeBound)
{
    const OrbitId o{Family::Wedge, 4, 2};
    const Poly c1 = elementary(alpha_vars(4), 1, 4);
    const AxiomReport rep = verify_axioms(o, w_function(o).alpha() + pow(c1, 6));
    bool axiom3_failed = false;
    for (const auto &c : rep.checks) {
        axiom3_failed |= c.axiom == 3 && !c.passed;
    }
    EXPECT_TRUE(axiom3_failed);
    EXPECT_FALSE(rep.ok());
}
