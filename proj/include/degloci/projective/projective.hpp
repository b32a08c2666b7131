#pragma once

#include <string>
#include <vector>

#include "degloci/classes/interp.hpp"
#include "degloci/classes/orbit.hpp"
#include "degloci/core/division.hpp"
#include "degloci/core/substitute.hpp"
#include "degloci/symfun/schur.hpp"

namespace degloci
{

enum class ClassKind
{
    Csm,
    Ssm
};

// Non-equivariant class in Q[xi]/xi^N, N = dimension of the representation.
struct ProjClass
{
    OrbitId orbit;
    unsigned N;
    std::vector<Rational> coeffs; // a_0..a_{N-1}
};

namespace detail
{

inline std::vector<Rational> proj_coeffs(const SchurExpansion &s, unsigned n, unsigned N)
{
    std::vector<Rational> a(N, Rational(0));
    for (const auto &[l, c] : s) {
        if (l.size() >= N) {
            continue;
        }
        Rational half(1, 1u << l.size());
        half.canonicalize();
        a[l.size()] += c * schur_principal(l, n) * half;
    }
    return a;
}

// p / (1 + xi)^N mod xi^N.
inline std::vector<Rational> divide_by_one_plus_xi_pow(std::vector<Rational> a, unsigned N)
{
    for (unsigned rep = 0; rep < N; ++rep) {
        for (std::size_t i = 1; i < a.size(); ++i) {
            a[i] -= a[i - 1];
        }
    }
    return a;
}

inline void check_integral(const std::vector<Rational> &a, const std::string &what)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].get_den() != 1) {
            throw internal_error(what + " has non-integer coefficient " + a[i].get_str() + " at xi^" +
                                 std::to_string(i));
        }
    }
}

} // namespace detail

// The W-function with every a_i replaced by xi/2, reduced mod xi^N; the SSM
// variant further divides by c(V) -> (1 + xi)^N.
inline ProjClass projectivize(const WFunction &w, ClassKind kind)
{
    const unsigned N = ambient_dim(w.orbit.family, w.orbit.n);
    auto a = detail::proj_coeffs(w.schur, w.orbit.n, N);
    detail::check_integral(a, "projectivized class of " + to_string(w.orbit));
    if (kind == ClassKind::Ssm) {
        a = detail::divide_by_one_plus_xi_pow(std::move(a), N);
    }
    return ProjClass{w.orbit, N, std::move(a)};
}

inline ProjClass projectivize(const OrbitId &o, ClassKind kind)
{
    return projectivize(w_function(o), kind);
}

// Class of the orbit closure: sum over the orbits of larger corank.
inline ProjClass projectivize_closure(const OrbitId &o, ClassKind kind)
{
    validate(o);
    ProjClass out{o, ambient_dim(o.family, o.n), std::vector<Rational>(ambient_dim(o.family, o.n), Rational(0))};
    for (unsigned m : orbit_coranks(o.family, o.n)) {
        if (m < o.r) {
            continue;
        }
        const ProjClass p = projectivize(OrbitId{o.family, o.n, m}, kind);
        for (unsigned i = 0; i < out.N; ++i) {
            out.coeffs[i] += p.coeffs[i];
        }
    }
    return out;
}

// a_i -> a_i + (w_i / w) xi on alpha_vars(n, {"xi"}); no reduction.
inline Poly general_projectivize(const Poly &p, const std::vector<long> &weights, long w)
{
    if (w == 0) {
        throw error("projectivization weight must be nonzero");
    }
    const unsigned n = static_cast<unsigned>(p.nvars());
    if (weights.size() != n) {
        throw variable_mismatch("need one weight per variable");
    }
    std::vector<std::string> names;
    for (unsigned i = 0; i < n; ++i) {
        names.push_back(p.vars()->name(i));
    }
    names.push_back("xi");
    const Vars v = make_vars(names);
    Assignment<Rational> m;
    for (unsigned i = 0; i < n; ++i) {
        m.emplace(names[i], Poly::variable(v, i) + Poly::variable(v, n) * make_rational(weights[i], w));
    }
    return substitute(p, m, v);
}

// J(p)(t) = (t p(-t-1) + p(0)) / (t+1), an involution on Q[t].
inline Poly aluffi_J(const Poly &p)
{
    if (p.nvars() != 1) {
        throw variable_mismatch("aluffi_J expects a polynomial in one variable");
    }
    const Vars &v = p.vars();
    const Poly t = Poly::variable(v, 0);
    const Poly one(v, Rational(1));
    Assignment<Rational> m;
    m.emplace(v->name(0), -t - one);
    const Poly num = t * substitute(p, m, v) + Poly(v, p.constant_term());
    return exact_divide(num, t + one);
}

// gamma(t) = sum a_i t^{N-1-i} for a class in P^{N-1}.
inline Poly gamma_poly(const ProjClass &c)
{
    const Vars t = single_var("t");
    std::vector<Poly::Term> ts;
    for (unsigned i = 0; i < c.N; ++i) {
        if (sgn(c.coeffs[i]) != 0) {
            ts.push_back({key::from_exponents(std::vector<unsigned>{c.N - 1 - i}), c.coeffs[i]});
        }
    }
    return Poly::from_terms(t, std::move(ts));
}

// chi(X_i) for i = 0..N-1, where X_i is the intersection with i general
// hyperplanes: the coefficient of (-t)^i in J(gamma).
inline std::vector<Rational> euler_characteristics(const ProjClass &c)
{
    const Poly chi = aluffi_J(gamma_poly(c));
    std::vector<Rational> out(c.N, Rational(0));
    for (const auto &term : chi.terms()) {
        const unsigned i = key::exponent(term.key, 0);
        if (i >= c.N) {
            throw internal_error("Euler characteristic polynomial has degree above the ambient dimension");
        }
        out[i] = i % 2 ? -term.coeff : term.coeff;
    }
    return out;
}

struct EulerCharRow
{
    unsigned r;
    std::vector<Rational> chi;
};

// One row per orbit (or orbit closure) with nonempty projectivization, that
// is every corank except r = n.
inline std::vector<EulerCharRow> euler_char_table(Family f, unsigned n, bool closure = false)
{
    validate(OrbitId{f, n, f == Family::Wedge ? n % 2 : 0});
    std::vector<EulerCharRow> rows;
    for (unsigned r : orbit_coranks(f, n)) {
        if (r == n) {
            continue;
        }
        const OrbitId o{f, n, r};
        const ProjClass c = closure ? projectivize_closure(o, ClassKind::Csm) : projectivize(o, ClassKind::Csm);
        rows.push_back({r, euler_characteristics(c)});
    }
    return rows;
}

struct ClosedInvariants
{
    unsigned codim;
    Rational degree;
    Rational euler_char;
};

// Codimension and degree of the projectivized orbit closure and the Euler
// characteristic of the projectivized orbit, from closed formulas.
inline ClosedInvariants closed_invariants(const OrbitId &o)
{
    validate(o);
    const unsigned n = o.n, r = o.r;
    Rational deg(1);
    if (o.family == Family::Wedge) {
        if (r >= 1) {
            for (unsigned i = 0; i + 2 <= r; ++i) {
                deg *= binomial(n + i, r - 1 - i) / binomial(2 * i + 1, i);
            }
            deg /= Rational(1u << (r - 1));
        }
    } else {
        for (unsigned i = 0; i < r; ++i) {
            deg *= binomial(n + i, r - i) / binomial(2 * i + 1, i);
        }
    }
    Rational chi(0);
    if (o.family == Family::Wedge) {
        if (r + 2 == n) {
            chi = binomial(n, 2);
        }
    } else if (r + 1 == n) {
        chi = Rational(n);
    } else if (r + 2 == n) {
        chi = binomial(n, 2);
    }
    return ClosedInvariants{codim(o), deg, chi};
}

} // namespace degloci
