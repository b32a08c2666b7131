#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "degloci/core/polynomial.hpp"
#include "degloci/core/series.hpp"
#include "degloci/core/substitute.hpp"
#include "degloci/symfun/partition.hpp"

namespace degloci
{

// Schur expansion: partition -> nonzero coefficient.
using SchurExpansion = std::map<Partition, Rational>;

// e_k in the first n variables of `vars`.
inline Poly elementary(const Vars &vars, unsigned k, unsigned n)
{
    if (n > vars->size()) {
        throw variable_mismatch("elementary polynomial needs more variables");
    }
    std::vector<Poly::Term> ts;
    if (k > n) {
        return Poly(vars);
    }
    std::vector<unsigned> e(vars->size(), 0);
    // Iterate over k-subsets of [n] by bitmask.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != k) {
            continue;
        }
        for (unsigned i = 0; i < n; ++i) {
            e[i] = (mask >> i) & 1u;
        }
        ts.push_back({key::from_exponents(e), Rational(1)});
    }
    return Poly::from_terms(vars, std::move(ts));
}

// Assignment c_k -> e_k(a_1..a_n).
inline Assignment<Rational> chern_roots_assignment(unsigned n, const Vars &alpha)
{
    Assignment<Rational> m;
    for (unsigned k = 1; k <= n; ++k) {
        m.emplace("c" + std::to_string(k), elementary(alpha, k, n));
    }
    return m;
}

// Expands a polynomial in c_1..c_n into the alpha variables.
inline Poly chern_to_alpha(const Poly &p, unsigned n, const Vars &alpha)
{
    return substitute(p, chern_roots_assignment(n, alpha), alpha);
}

namespace detail
{

// Determinant of the m x m matrix with entries entry(i, j) (polynomials),
// by Laplace expansion along rows, memoized on the set of used columns.
template <class Entry>
Poly laplace_det(std::size_t m, const Vars &vars, Entry &&entry)
{
    if (m == 0) {
        return Poly(vars, Rational(1));
    }
    if (m > 20) {
        throw out_of_scope("determinant too large");
    }
    std::unordered_map<unsigned, Poly> memo;
    // f(mask): determinant of rows popcount(mask).. with columns outside mask.
    std::function<Poly(unsigned)> f = [&](unsigned mask) -> Poly {
        const unsigned row = static_cast<unsigned>(__builtin_popcount(mask));
        if (row == m) {
            return Poly(vars, Rational(1));
        }
        auto it = memo.find(mask);
        if (it != memo.end()) {
            return it->second;
        }
        Poly acc(vars);
        int pos = 0;
        for (unsigned j = 0; j < m; ++j) {
            if (mask & (1u << j)) {
                continue;
            }
            const Poly e = entry(row, j);
            if (!e.is_zero()) {
                Poly minor = f(mask | (1u << j));
                if (!minor.is_zero()) {
                    Poly t = e * minor;
                    if (pos % 2 == 0) {
                        acc += t;
                    } else {
                        acc -= t;
                    }
                }
            }
            ++pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return f(0);
}

} // namespace detail

// s_lambda in c_1..c_n: det(c_{lambda'_i + j - i}) with c_0 = 1 and c_k = 0
// outside 0..n. Zero when lambda has more than n parts.
inline Poly schur_chern(const Partition &lambda, unsigned n)
{
    const Vars c = chern_vars(n);
    if (lambda.length() > n) {
        return Poly(c);
    }
    const Partition conj = lambda.conjugate();
    const std::size_t m = conj.length();
    auto entry = [&](std::size_t i, std::size_t j) -> Poly {
        const long k = static_cast<long>(conj.part(i)) + static_cast<long>(j) - static_cast<long>(i);
        if (k == 0) {
            return Poly(c, Rational(1));
        }
        if (k < 0 || k > static_cast<long>(n)) {
            return Poly(c);
        }
        return Poly::variable(c, static_cast<std::size_t>(k - 1));
    };
    return detail::laplace_det(m, c, entry);
}

// s_lambda(a_1..a_n) on alpha_vars(n).
inline Poly schur_poly(const Partition &lambda, unsigned n)
{
    return chern_to_alpha(schur_chern(lambda, n), n, alpha_vars(n));
}

// Whether p (in exactly n variables) is invariant under all permutations.
inline bool is_symmetric(const Poly &p)
{
    const std::size_t n = p.nvars();
    std::vector<unsigned> e(n);
    std::size_t expected = 0, dominant = 0;
    for (const auto &t : p.terms()) {
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = key::exponent(t.key, i);
        }
        std::vector<unsigned> s = e;
        std::sort(s.begin(), s.end(), std::greater<>());
        if (s != e) {
            if (p.coefficient(key::from_exponents(s)) != t.coeff) {
                return false;
            }
            continue;
        }
        ++dominant;
        // Orbit size n! / prod(multiplicity!).
        std::size_t orbit = 1;
        for (std::size_t i = 1; i <= n; ++i) {
            orbit *= i;
        }
        for (std::size_t i = 0; i < n;) {
            std::size_t j = i;
            while (j < n && s[j] == s[i]) {
                ++j;
            }
            for (std::size_t k = 2; k <= j - i; ++k) {
                orbit /= k;
            }
            i = j;
        }
        expected += orbit;
    }
    return dominant > 0 ? expected == p.size() : p.is_zero();
}

namespace detail
{

struct SignedPerm
{
    std::vector<unsigned> image; // w(delta)
    int sign;
};

inline std::vector<SignedPerm> delta_permutations(unsigned n)
{
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<SignedPerm> out;
    do {
        int inv = 0;
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) {
                inv += perm[i] > perm[j];
            }
        }
        std::vector<unsigned> img(n);
        for (unsigned i = 0; i < n; ++i) {
            img[i] = n - 1 - perm[i];
        }
        out.push_back({std::move(img), inv % 2 ? -1 : 1});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace detail

// Schur coefficients of a symmetric polynomial in n variables. The
// coefficient of s_lambda is the coefficient of x^(lambda+delta) in
// p * Vandermonde, read off directly as
//   sum_w sign(w) [x^(lambda + delta - w(delta))] p.
inline SchurExpansion to_schur_basis(const Poly &p)
{
    if (!is_symmetric(p)) {
        throw not_symmetric("Schur conversion of a non-symmetric polynomial");
    }
    const unsigned n = static_cast<unsigned>(p.nvars());
    SchurExpansion out;
    if (p.is_zero()) {
        return out;
    }
    const auto perms = detail::delta_permutations(n);
    std::vector<unsigned> target(n), e(n);
    for (int d = p.low_degree(); d <= p.degree(); ++d) {
        if (p.homogeneous_part(static_cast<unsigned>(d)).is_zero()) {
            continue;
        }
        for (const auto &lambda : partitions_of(static_cast<unsigned>(d), n)) {
            for (unsigned i = 0; i < n; ++i) {
                target[i] = lambda.part(i) + (n - 1 - i);
            }
            Rational c(0);
            for (const auto &w : perms) {
                bool ok = true;
                for (unsigned i = 0; i < n && ok; ++i) {
                    if (target[i] < w.image[i]) {
                        ok = false;
                    } else {
                        e[i] = target[i] - w.image[i];
                    }
                }
                if (!ok) {
                    continue;
                }
                const Rational v = p.coefficient(key::from_exponents(e));
                if (w.sign > 0) {
                    c += v;
                } else {
                    c -= v;
                }
            }
            if (sgn(c) != 0) {
                out.emplace(lambda, c);
            }
        }
    }
    return out;
}

inline SchurExpansion to_schur_basis(const TruncSeries<Rational> &s)
{
    return to_schur_basis(s.poly());
}

// Reference conversion: repeatedly subtract coeff * s_lambda for the leading
// monomial of the lowest remaining degree.
inline SchurExpansion to_schur_basis_by_subtraction(Poly p)
{
    if (!is_symmetric(p)) {
        throw not_symmetric("Schur conversion of a non-symmetric polynomial");
    }
    const unsigned n = static_cast<unsigned>(p.nvars());
    SchurExpansion out;
    std::size_t guard = 0;
    while (!p.is_zero()) {
        const unsigned d = static_cast<unsigned>(p.low_degree());
        const Poly part = p.homogeneous_part(d);
        const auto &lt = part.leading_term();
        const auto exps = key::to_exponents(lt.key, n);
        const Partition lambda(exps);
        const Rational c = lt.coeff;
        out[lambda] += c;
        p -= schur_poly(lambda, n).with_vars(p.vars()) * c;
        if (++guard > 100000) {
            throw internal_error("Schur subtraction did not terminate");
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

inline Poly schur_to_chern(const SchurExpansion &s, unsigned n)
{
    Poly r(chern_vars(n));
    for (const auto &[lambda, c] : s) {
        r += schur_chern(lambda, n) * c;
    }
    return r;
}

inline Poly schur_to_alpha(const SchurExpansion &s, unsigned n)
{
    return chern_to_alpha(schur_to_chern(s, n), n, alpha_vars(n));
}

// Rewrites a symmetric polynomial in a_1..a_n in terms of c_1..c_n.
inline Poly to_chern_basis(const Poly &p)
{
    return schur_to_chern(to_schur_basis(p), static_cast<unsigned>(p.nvars()));
}

// s_lambda(1, ..., 1) with n ones, by the hook-content formula.
inline Rational schur_principal(const Partition &lambda, unsigned n)
{
    const Partition conj = lambda.conjugate();
    Rational r(1);
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        for (unsigned j = 0; j < lambda.part(i); ++j) {
            const long content = static_cast<long>(j) - static_cast<long>(i);
            const long hook = static_cast<long>(lambda.part(i) - j) + static_cast<long>(conj.part(j)) -
                              static_cast<long>(i) - 1;
            r *= make_rational(static_cast<long>(n) + content, hook);
        }
    }
    return r;
}

// Schur expansion restricted to degrees <= d.
inline SchurExpansion truncate(const SchurExpansion &s, unsigned d)
{
    SchurExpansion out;
    for (const auto &[l, c] : s) {
        if (l.size() <= d) {
            out.emplace(l, c);
        }
    }
    return out;
}

// Drops partitions with more than n parts (s_lambda vanishes in n variables).
inline SchurExpansion restrict_length(const SchurExpansion &s, unsigned n)
{
    SchurExpansion out;
    for (const auto &[l, c] : s) {
        if (l.length() <= n) {
            out.emplace(l, c);
        }
    }
    return out;
}

inline std::string to_string(const SchurExpansion &s, bool latex = false)
{
    if (s.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[l, c0] : s) {
        Rational c = c0;
        const bool neg = sgn(c) < 0;
        if (neg) {
            c = -c;
        }
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        if (c != 1) {
            out += latex && c.get_den() != 1
                       ? "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}"
                       : c.get_str();
        }
        if (latex) {
            const std::string lab = l.label();
            out += "s_{" + (lab.front() == '(' ? lab.substr(1, lab.size() - 2) : lab) + "}";
        } else {
            out += "s" + l.label();
        }
    }
    return out;
}

} // namespace degloci
