#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "degloci/classes/orbit.hpp"
#include "degloci/classes/sieve.hpp"
#include "degloci/core/division.hpp"
#include "degloci/core/substitute.hpp"
#include "degloci/symfun/alternant.hpp"
#include "degloci/symfun/schur.hpp"

namespace degloci
{

// CSM class of an orbit as an exact symmetric polynomial, kept in the Schur
// basis. The alpha form is produced on demand since it is large for n = 6.
struct WFunction
{
    OrbitId orbit;
    SchurExpansion schur;

    Poly alpha() const
    {
        return schur_to_alpha(schur, orbit.n);
    }

    Poly chern() const
    {
        return schur_to_chern(schur, orbit.n);
    }

    int top_degree() const
    {
        return schur.empty() ? -1 : static_cast<int>(schur.rbegin()->first.size());
    }
};

// Top degree of the W-function.
inline unsigned w_top_degree(const OrbitId &o)
{
    const unsigned n = o.n, r = o.r;
    return o.family == Family::Wedge ? (n * n - 2 * n + r) / 2 : n * (n + 1) / 2 - (n - r + 1) / 2;
}

namespace detail
{

// Numerator P of the inner sum on the variables idx (the last k of them):
// W_k = 1/(norm * Vandermonde) * sum_tau sign(tau) tau(P).
// Off-block pairs contribute (1 + x + y)(x + y); a block {x, y} contributes
// (x - y) for Wedge and -y(1 + 2x)(1 - x + y) for Sym.
template <class C>
Polynomial<C> w_inner_numerator(Family f, const Vars &v, const std::vector<unsigned> &idx)
{
    Polynomial<C> p(v, C(1));
    const std::size_t k = idx.size();
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            const unsigned x = idx[a], y = idx[b];
            if (a % 2 == 0 && b == a + 1) {
                if (f == Family::Wedge) {
                    p *= linear<C>(v, 0, {{x, 1}, {y, -1}});
                } else {
                    p *= linear<C>(v, 0, {{y, -1}});
                    p *= linear<C>(v, 1, {{x, 2}});
                    p *= linear<C>(v, 1, {{x, -1}, {y, 1}});
                }
            } else {
                p *= linear<C>(v, 1, {{x, 1}, {y, 1}});
                p *= linear<C>(v, 0, {{x, 1}, {y, 1}});
            }
        }
    }
    return p;
}

inline Rational w_inner_norm(Family f, unsigned k)
{
    return f == Family::Wedge ? Rational(1u << (k / 2)) * factorial(k / 2) : factorial(k / 2);
}

inline void check_inner(Family f, unsigned k)
{
    if (f == Family::Wedge && k % 2) {
        throw invalid_orbit("skew-symmetric W-function needs an even number of variables, got " +
                            std::to_string(k));
    }
    if (k > max_n) {
        throw out_of_scope("W-function in " + std::to_string(k) + " variables");
    }
}

inline void check_integral(const SchurExpansion &s, const std::string &what)
{
    for (const auto &[l, c] : s) {
        if (c.get_den() != 1) {
            throw internal_error(what + " has a non-integer coefficient " + c.get_str() + " at s" + l.label());
        }
    }
}

} // namespace detail

// W_k in a_1..a_k: the alternant quotient of the cleared numerator.
inline Poly w_inner(Family f, unsigned k)
{
    detail::check_inner(f, k);
    if (k == 0) {
        return Poly(alpha_vars(0), Rational(1));
    }
    const Vars v = alpha_vars(k);
    std::vector<unsigned> idx(k);
    std::iota(idx.begin(), idx.end(), 0u);
    SchurExpansion s = detail::with_integer_fallback(
        [&]<class C>() { return alternant_quotient(detail::w_inner_numerator<C>(f, v, idx)); });
    s = scaled(std::move(s), Rational(1) / detail::w_inner_norm(f, k));
    detail::check_integral(s, "inner W-function");
    return schur_to_alpha(s, k);
}

// W_k by the literal rational sum: Wedge over pair partitions of [k], Sym
// over all permutations, each summand cleared to the common Vandermonde
// denominator, then exactly divided. Meant for small k.
inline Poly w_inner_literal(Family f, unsigned k)
{
    detail::check_inner(f, k);
    const Vars v = alpha_vars(k);
    std::vector<unsigned> all(k);
    std::iota(all.begin(), all.end(), 0u);
    const Poly vand = detail::vandermonde<Rational>(v, all);
    Poly total(v);
    if (f == Family::Wedge) {
        // Sum over pair partitions {b1 < b2}: sign * prod_cross (1+x+y)(x+y) *
        // prod_blocks (a_b1 - a_b2), with the sign of the cross Vandermonde
        // relative to the full one.
        std::vector<unsigned> order;
        std::vector<bool> used(k, false);
        std::function<void()> rec = [&]() {
            auto first = std::find(used.begin(), used.end(), false);
            if (first == used.end()) {
                // order lists the blocks as consecutive pairs; the permutation
                // taking 0..k-1 to order gives the Vandermonde sign.
                int inv = 0;
                for (std::size_t a = 0; a < k; ++a) {
                    for (std::size_t b = a + 1; b < k; ++b) {
                        inv += order[a] > order[b];
                    }
                }
                Poly t = detail::w_inner_numerator<Rational>(f, v, order);
                total += inv % 2 ? -t : t;
                return;
            }
            const unsigned i = static_cast<unsigned>(first - used.begin());
            used[i] = true;
            for (unsigned j = i + 1; j < k; ++j) {
                if (used[j]) {
                    continue;
                }
                used[j] = true;
                order.push_back(i);
                order.push_back(j);
                rec();
                order.pop_back();
                order.pop_back();
                used[j] = false;
            }
            used[i] = false;
        };
        rec();
        return exact_divide(total, vand);
    }
    const Poly p = detail::w_inner_numerator<Rational>(f, v, all);
    std::vector<unsigned> perm(all);
    do {
        int inv = 0;
        Assignment<Rational> m;
        for (unsigned i = 0; i < k; ++i) {
            m.emplace(v->name(i), Poly::variable(v, perm[i]));
            for (unsigned j = i + 1; j < k; ++j) {
                inv += perm[i] > perm[j];
            }
        }
        const Poly t = substitute(p, m, v);
        total += inv % 2 ? -t : t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return exact_divide(total, vand) * (Rational(1) / detail::w_inner_norm(f, k));
}

// CSM class of the orbit. The subset sum over I is symmetrized as a whole:
// it equals 1/(r! * norm_{n-r}) times the alternant quotient of
//   Vandermonde(I) * prod_pair (a_i + a_j) * prod_cross (a_i + a_j)(1 + a_i + a_j)
//   * P(a_complement)
// for I = {1..r}.
inline WFunction w_function(const OrbitId &o)
{
    validate(o);
    const unsigned n = o.n, r = o.r;
    const Vars v = alpha_vars(n);
    std::vector<unsigned> in(r), out(n - r);
    std::iota(in.begin(), in.end(), 0u);
    std::iota(out.begin(), out.end(), r);
    SchurExpansion s = detail::with_integer_fallback([&]<class C>() {
        Polynomial<C> h = detail::w_inner_numerator<C>(o.family, v, out);
        h *= detail::vandermonde<C>(v, in);
        for (std::size_t a = 0; a < r; ++a) {
            for (std::size_t b = (o.family == Family::Sym ? a : a + 1); b < r; ++b) {
                h *= detail::linear<C>(v, 0, {{in[a], 1}, {in[b], 1}});
            }
        }
        for (unsigned i : in) {
            for (unsigned j : out) {
                h *= detail::linear<C>(v, 0, {{i, 1}, {j, 1}});
                h *= detail::linear<C>(v, 1, {{i, 1}, {j, 1}});
            }
        }
        return alternant_quotient(h);
    });
    s = scaled(std::move(s), Rational(1) / (factorial(r) * detail::w_inner_norm(o.family, n - r)));
    detail::check_integral(s, "W-function " + to_string(o));
    return WFunction{o, std::move(s)};
}

// W-function by the literal subset sum with w_inner_literal, cleared to the
// full Vandermonde and exactly divided. Meant for n <= 4.
inline Poly w_function_literal(const OrbitId &o)
{
    validate(o);
    const unsigned n = o.n, r = o.r;
    const Vars v = alpha_vars(n);
    Poly total(v);
    for (const auto &in : detail::subsets(n, r)) {
        const auto out = detail::complement(in, n);
        // Inner function on the complement variables.
        const Poly inner = w_inner_literal(o.family, n - r);
        Assignment<Rational> m;
        for (std::size_t p = 0; p < out.size(); ++p) {
            m.emplace(inner.vars()->name(p), Poly::variable(v, out[p]));
        }
        Poly t = inner.nvars() == 0 ? Poly(v, inner.constant_term()) : substitute(inner, m, v);
        for (std::size_t a = 0; a < in.size(); ++a) {
            for (std::size_t b = (o.family == Family::Sym ? a : a + 1); b < in.size(); ++b) {
                t *= detail::linear<Rational>(v, 0, {{in[a], 1}, {in[b], 1}});
            }
        }
        for (unsigned i : in) {
            for (unsigned j : out) {
                t *= detail::linear<Rational>(v, 0, {{i, 1}, {j, 1}});
                t *= detail::linear<Rational>(v, 1, {{i, 1}, {j, 1}});
            }
        }
        t *= detail::vandermonde<Rational>(v, in);
        t *= detail::vandermonde<Rational>(v, out);
        total += t * Rational(detail::clearing_sign(in, out));
    }
    std::vector<unsigned> all(n);
    std::iota(all.begin(), all.end(), 0u);
    return exact_divide(total, detail::vandermonde<Rational>(v, all));
}

// ssm = csm / c(V) through degree D.
inline TruncSeries<Rational> csm_to_ssm(const Poly &csm, Family f, unsigned D)
{
    return TruncSeries<Rational>(divide_by_total_chern(csm, f, D), D);
}

// Schur form of csm / c(V) through degree D.
inline SchurExpansion csm_to_ssm_schur(const WFunction &w, unsigned D)
{
    return to_schur_basis(divide_by_total_chern(w.alpha(), w.orbit.family, D));
}

} // namespace degloci
