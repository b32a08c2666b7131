#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "degloci/classes/orbit.hpp"
#include "degloci/core/division.hpp"
#include "degloci/core/series.hpp"
#include "degloci/symfun/alternant.hpp"
#include "degloci/symfun/schur.hpp"

namespace degloci
{

// ---------------------------------------------------------------------------
// Euler numbers and binomial matrices

// E_0..E_max from 1/cosh(x) = sum E_n x^n / n!, by exact series inversion.
inline std::vector<Rational> euler_numbers(unsigned max)
{
    std::vector<Rational> cosh(max + 1, Rational(0));
    for (unsigned k = 0; k <= max; k += 2) {
        cosh[k] = Rational(1) / factorial(k);
    }
    std::vector<Rational> inv(max + 1, Rational(0));
    for (unsigned d = 0; d <= max; ++d) {
        Rational acc = d == 0 ? Rational(1) : Rational(0);
        for (unsigned k = 1; k <= d; ++k) {
            acc -= cosh[k] * inv[d - k];
        }
        inv[d] = acc; // cosh[0] == 1
    }
    for (unsigned d = 0; d <= max; ++d) {
        inv[d] *= factorial(d);
    }
    return inv;
}

enum class Parity
{
    Even,
    Odd
};

using Matrix = std::vector<std::vector<Rational>>;

// (binom(2j + p, 2i + p))_{0 <= i, j <= m}, p = 0 or 1.
inline Matrix binomial_matrix(unsigned m, Parity parity)
{
    const unsigned p = parity == Parity::Odd ? 1 : 0;
    Matrix a(m + 1, std::vector<Rational>(m + 1, Rational(0)));
    for (unsigned i = 0; i <= m; ++i) {
        for (unsigned j = 0; j <= m; ++j) {
            a[i][j] = binomial(2 * j + p, 2 * i + p);
        }
    }
    return a;
}

// (binom(2j + p, 2i + p) E_{2j-2i})_{0 <= i, j <= m}.
inline Matrix invert_binomial_matrix(unsigned m, Parity parity)
{
    const unsigned p = parity == Parity::Odd ? 1 : 0;
    const auto e = euler_numbers(2 * m);
    Matrix a(m + 1, std::vector<Rational>(m + 1, Rational(0)));
    for (unsigned i = 0; i <= m; ++i) {
        for (unsigned j = i; j <= m; ++j) {
            a[i][j] = binomial(2 * j + p, 2 * i + p) * e[2 * (j - i)];
        }
    }
    return a;
}

inline Matrix matmul(const Matrix &a, const Matrix &b)
{
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix c(n, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            if (sgn(a[i][l]) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < m; ++j) {
                c[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Phi classes

namespace detail
{

// Runs body<CheckedInt>() and repeats with arbitrary precision if a 128-bit
// coefficient overflows.
template <class Body>
auto with_integer_fallback(Body &&body)
{
    try {
        return body.template operator()<CheckedInt>();
    } catch (const std::overflow_error &) {
        return body.template operator()<Integer>();
    }
}

template <class C>
Polynomial<C> linear(const Vars &v, long c0, std::initializer_list<std::pair<unsigned, long>> terms)
{
    std::vector<std::pair<std::size_t, C>> t;
    for (auto [i, c] : terms) {
        t.emplace_back(i, C(c));
    }
    return linear_form<C>(v, C(c0), t);
}

// prod_{i<j in idx} (a_i - a_j)
template <class C>
Polynomial<C> vandermonde(const Vars &v, const std::vector<unsigned> &idx, unsigned bound = max_total_degree)
{
    Polynomial<C> r(v, C(1));
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            r = multiply(r, linear<C>(v, 0, {{idx[a], 1}, {idx[b], -1}}), bound);
        }
    }
    return r;
}

// The localization summand for the subset I, cleared of its (a_i - a_j)
// denominators: sign_I * A_I * Vandermonde(I) * Vandermonde(complement),
// where A_I is the product of the pair and cross factors with the unit
// denominators (1 + a_i + a_j) expanded as series. Truncated at `bound`.
template <class C>
Polynomial<C> phi_cleared_summand(Family f, const Vars &v, const std::vector<unsigned> &in,
                                  const std::vector<unsigned> &out, unsigned bound)
{
    Polynomial<C> num(v, C(1));
    std::vector<Polynomial<C>> units;
    for (std::size_t a = 0; a < in.size(); ++a) {
        for (std::size_t b = (f == Family::Sym ? a : a + 1); b < in.size(); ++b) {
            const unsigned i = in[a], j = in[b];
            num = multiply(num, linear<C>(v, 0, {{i, 1}, {j, 1}}), bound);
            units.push_back(linear<C>(v, 0, {{i, 1}, {j, 1}}));
        }
    }
    for (unsigned i : in) {
        for (unsigned j : out) {
            num = multiply(num, linear<C>(v, 0, {{i, 1}, {j, 1}}), bound);
            num = multiply(num, linear<C>(v, 1, {{i, 1}, {j, -1}}), bound);
            units.push_back(linear<C>(v, 0, {{i, 1}, {j, 1}}));
        }
    }
    num = multiply(num, vandermonde<C>(v, in, bound), bound);
    num = multiply(num, vandermonde<C>(v, out, bound), bound);
    for (const auto &u : units) {
        num = divide_unit_linear(num, u, bound);
    }
    return num;
}

inline std::vector<unsigned> complement(const std::vector<unsigned> &in, unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned i = 0; i < n; ++i) {
        if (std::find(in.begin(), in.end(), i) == in.end()) {
            out.push_back(i);
        }
    }
    return out;
}

inline std::vector<std::vector<unsigned>> subsets(unsigned n, unsigned r)
{
    std::vector<std::vector<unsigned>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != r) {
            continue;
        }
        std::vector<unsigned> s;
        for (unsigned i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                s.push_back(i);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

// (-1)^{#(a < b, a outside I, b in I)}
inline int clearing_sign(const std::vector<unsigned> &in, const std::vector<unsigned> &out)
{
    int inv = 0;
    for (unsigned a : out) {
        for (unsigned b : in) {
            inv += a < b;
        }
    }
    return inv % 2 ? -1 : 1;
}

inline void validate_phi(Family f, unsigned n, unsigned r)
{
    validate(OrbitId{f, n, r});
}

} // namespace detail

// Schur expansion of the Phi class through degree D. The subset sum is
// symmetric under permutations of I and of its complement separately, so it
// equals 1/(r!(n-r)!) times the full symmetrization of the I = {1..r} term,
// i.e. the alternant quotient of the cleared summand.
inline SchurExpansion phi_schur(const OrbitId &o, unsigned D)
{
    validate(o);
    const unsigned n = o.n, r = o.r;
    const unsigned bound = D + n * (n - 1) / 2;
    const Vars v = alpha_vars(n);
    std::vector<unsigned> in(r), out(n - r);
    std::iota(in.begin(), in.end(), 0u);
    std::iota(out.begin(), out.end(), r);
    SchurExpansion s = detail::with_integer_fallback([&]<class C>() {
        return alternant_quotient(detail::phi_cleared_summand<C>(o.family, v, in, out, bound), D);
    });
    return scaled(std::move(s), Rational(1) / (factorial(r) * factorial(n - r)));
}

// Phi class as a series in a_1..a_n through degree D (alternant route).
inline TruncSeries<Rational> phi_class(const OrbitId &o, unsigned D)
{
    return TruncSeries<Rational>(schur_to_alpha(phi_schur(o, D), o.n), D);
}

// Phi class by the literal subset sum: each summand is cleared to the full
// Vandermonde denominator, the numerators are summed, and the sum is divided
// gradewise by the Vandermonde with a zero-remainder check.
inline TruncSeries<Rational> phi_class_literal(const OrbitId &o, unsigned D)
{
    validate(o);
    const unsigned n = o.n;
    const unsigned vdeg = n * (n - 1) / 2;
    const unsigned bound = D + vdeg;
    const Vars v = alpha_vars(n);
    Poly total(v);
    for (const auto &in : detail::subsets(n, o.r)) {
        const auto out = detail::complement(in, n);
        Poly term = detail::phi_cleared_summand<Rational>(o.family, v, in, out, bound);
        total += term * Rational(detail::clearing_sign(in, out));
    }
    std::vector<unsigned> all(n);
    std::iota(all.begin(), all.end(), 0u);
    auto q = exact_divide(TruncSeries<Rational>(total, bound), detail::vandermonde<Rational>(v, all));
    return TruncSeries<Rational>(q.poly(), D);
}

// ---------------------------------------------------------------------------
// Sieve formulas

// Coefficients of the Phi classes in the sieve formula for the orbit (or its
// closure), as (corank, coefficient) pairs.
inline std::vector<std::pair<unsigned, Rational>> sieve_coefficients(const OrbitId &o, bool closure)
{
    validate(o);
    std::vector<std::pair<unsigned, Rational>> out;
    const unsigned n = o.n, r = o.r;
    if (o.family == Family::Wedge) {
        const auto e = euler_numbers(n - r);
        if (!closure) {
            for (unsigned i = 0; r + 2 * i <= n; ++i) {
                out.emplace_back(r + 2 * i, binomial(r + 2 * i, r) * e[2 * i]);
            }
            return out;
        }
        // Closure: sum of the orbit formulas over r, r+2, ..., n.
        std::map<unsigned, Rational> acc;
        for (unsigned k = r; k <= n; k += 2) {
            for (unsigned i = 0; k + 2 * i <= n; ++i) {
                acc[k + 2 * i] += binomial(k + 2 * i, k) * e[2 * i];
            }
        }
        for (auto &[k, c] : acc) {
            if (sgn(c) != 0) {
                out.emplace_back(k, c);
            }
        }
        return out;
    }
    for (unsigned i = 0; r + i <= n; ++i) {
        Rational c;
        if (!closure) {
            c = binomial(r + i, r);
        } else if (r == 0) {
            // The closure of the open orbit is the whole space: only Phi_{n,0} = 1.
            c = i == 0 ? Rational(1) : Rational(0);
        } else {
            c = binomial(r + i - 1, r - 1);
        }
        if (i % 2) {
            c = -c;
        }
        if (sgn(c) != 0) {
            out.emplace_back(r + i, c);
        }
    }
    return out;
}

// Phi classes of all orbits of one representation, computed once.
class PhiTable
{
public:
    PhiTable(Family f, unsigned n, unsigned D) : family_(f), n_(n), D_(D) {}

    const SchurExpansion &get(unsigned r)
    {
        auto it = cache_.find(r);
        if (it == cache_.end()) {
            it = cache_.emplace(r, phi_schur(OrbitId{family_, n_, r}, D_)).first;
        }
        return it->second;
    }

    unsigned bound() const
    {
        return D_;
    }

private:
    Family family_;
    unsigned n_, D_;
    std::map<unsigned, SchurExpansion> cache_;
};

// SSM class of the orbit (or closure) by the sieve formula, as a Schur
// expansion through degree D.
inline SchurExpansion ssm_sieve_schur(const OrbitId &o, bool closure, unsigned D, PhiTable *table = nullptr)
{
    validate(o);
    PhiTable local(o.family, o.n, D);
    PhiTable &t = table ? *table : local;
    if (t.bound() != D) {
        throw truncation_mismatch("Phi table computed to a different degree bound");
    }
    SchurExpansion s;
    for (const auto &[k, c] : sieve_coefficients(o, closure)) {
        s = s + scaled(t.get(k), c);
    }
    return s;
}

inline TruncSeries<Rational> ssm_sieve(const OrbitId &o, bool closure, unsigned D)
{
    return TruncSeries<Rational>(schur_to_alpha(ssm_sieve_schur(o, closure, D), o.n), D);
}

} // namespace degloci
