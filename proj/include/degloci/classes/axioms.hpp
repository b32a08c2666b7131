#pragma once

#include <string>
#include <vector>

#include "degloci/classes/orbit.hpp"
#include "degloci/core/division.hpp"
#include "degloci/core/substitute.hpp"

namespace degloci
{

// Restriction of the Chern roots to the stabilizer of a skew-symmetric orbit
// of corank m, with k = (n - m)/2:
//   (a_1, ..., a_n) -> (s1, -s1, ..., sk, -sk, a_{n-m+1}, ..., a_n).
struct RestrictionData
{
    OrbitId orbit;
    Vars vars;                      // s1..sk, a_{n-m+1}..a_n
    Assignment<Rational> substitution; // a_i -> image on vars
    Poly tangent_chern;             // c(T)
    Poly normal_euler;              // e(N)
};

inline RestrictionData restriction_data(const OrbitId &o)
{
    validate(o);
    if (o.family != Family::Wedge) {
        throw out_of_scope("restriction data is only available for skew-symmetric orbits");
    }
    const unsigned n = o.n, m = o.r, k = (n - m) / 2;
    std::vector<std::string> names;
    for (unsigned i = 1; i <= k; ++i) {
        names.push_back("s" + std::to_string(i));
    }
    for (unsigned j = n - m + 1; j <= n; ++j) {
        names.push_back("a" + std::to_string(j));
    }
    RestrictionData d{o, make_vars(names), {}, {}, {}};
    const Vars &v = d.vars;
    auto sigma = [&](unsigned i) { return Poly::variable(v, i); };       // 0-based
    auto alpha = [&](unsigned j) { return Poly::variable(v, k + j); };   // j-th free root, 0-based
    for (unsigned i = 0; i < k; ++i) {
        d.substitution.emplace("a" + std::to_string(2 * i + 1), sigma(i));
        d.substitution.emplace("a" + std::to_string(2 * i + 2), -sigma(i));
    }
    for (unsigned j = 0; j < m; ++j) {
        d.substitution.emplace("a" + std::to_string(n - m + 1 + j), alpha(j));
    }
    const Poly one(v, Rational(1));
    Poly ct = one;
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = i + 1; j < k; ++j) {
            for (int si : {1, -1}) {
                for (int sj : {1, -1}) {
                    ct *= one + sigma(i) * Rational(si) + sigma(j) * Rational(sj);
                }
            }
        }
        for (unsigned j = 0; j < m; ++j) {
            ct *= one + sigma(i) + alpha(j);
            ct *= one - sigma(i) + alpha(j);
        }
    }
    Poly en = one;
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = i + 1; j < m; ++j) {
            en *= alpha(i) + alpha(j);
        }
    }
    d.tangent_chern = std::move(ct);
    d.normal_euler = std::move(en);
    return d;
}

// Image of a polynomial in a_1..a_n under the restriction map.
inline Poly restrict_to(const RestrictionData &d, const Poly &p)
{
    return substitute(p, d.substitution, d.vars);
}

struct AxiomCheck
{
    unsigned omega_r; // corank of the orbit restricted to
    int axiom;        // 1, 2, 3, or 0 for vanishing outside the closure
    bool passed;
    std::string detail;
};

struct AxiomReport
{
    OrbitId orbit;
    std::vector<AxiomCheck> checks;

    bool ok() const
    {
        for (const auto &c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }
};

// Checks a candidate CSM class of the skew-symmetric orbit against the
// interpolation conditions at every orbit of the representation:
//   at the orbit itself, the restriction equals c(T) e(N);
//   elsewhere in the closure, c(T) divides it and its degree is below
//   deg c(T) e(N);
//   outside the closure, it vanishes.
inline AxiomReport verify_axioms(const OrbitId &o, const Poly &candidate)
{
    validate(o);
    if (o.family != Family::Wedge) {
        throw out_of_scope("interpolation check is only available for skew-symmetric orbits");
    }
    if (candidate.nvars() != o.n) {
        throw variable_mismatch("candidate must be a polynomial in a1..a" + std::to_string(o.n));
    }
    AxiomReport rep{o, {}};
    for (unsigned m : orbit_coranks(o.family, o.n)) {
        const RestrictionData d = restriction_data(OrbitId{o.family, o.n, m});
        const Poly phi = restrict_to(d, candidate);
        const Poly top = d.tangent_chern * d.normal_euler;
        if (m == o.r) {
            const bool eq = phi == top;
            rep.checks.push_back({m, 1, eq, eq ? "restriction equals c(T)e(N)" : "restriction differs from c(T)e(N)"});
            continue;
        }
        if (m < o.r) {
            const bool zero = phi.is_zero();
            rep.checks.push_back({m, 0, zero, zero ? "vanishes outside the closure" : "nonzero outside the closure"});
            continue;
        }
        const bool div = divides(d.tangent_chern, phi);
        rep.checks.push_back({m, 2, div, div ? "c(T) divides the restriction" : "c(T) does not divide the restriction"});
        const bool deg = phi.degree() < top.degree();
        rep.checks.push_back({m, 3, deg,
                              "degree " + std::to_string(phi.degree()) + (deg ? " < " : " >= ") +
                                  std::to_string(top.degree())});
    }
    return rep;
}

} // namespace degloci
