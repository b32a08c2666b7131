#pragma once

#include <string>
#include <vector>

#include "degloci/classes/orbit.hpp"
#include "degloci/classes/sieve.hpp"
#include "degloci/core/division.hpp"
#include "degloci/core/laurent.hpp"
#include "degloci/core/substitute.hpp"

namespace degloci
{

// ---------------------------------------------------------------------------
// q-analogues, as polynomials in the single variable q

inline Vars q_vars()
{
    return single_var("q");
}

// [n]_q = 1 + q + ... + q^{n-1}
inline Poly q_integer(unsigned n)
{
    std::vector<Poly::Term> ts;
    for (unsigned i = 0; i < n; ++i) {
        ts.push_back({key::from_exponents(std::vector<unsigned>{i}), Rational(1)});
    }
    return Poly::from_terms(q_vars(), std::move(ts));
}

inline Poly q_factorial(unsigned n)
{
    Poly r(q_vars(), Rational(1));
    for (unsigned i = 2; i <= n; ++i) {
        r *= q_integer(i);
    }
    return r;
}

inline Poly q_binomial(unsigned n, unsigned m)
{
    if (m > n) {
        throw error("q-binomial needs 0 <= m <= n, got n = " + std::to_string(n) + ", m = " + std::to_string(m));
    }
    return exact_divide(q_factorial(n), q_factorial(m) * q_factorial(n - m));
}

// E_0(q)..E_max(q) from 1/cosh_q(t) = sum E_n(q) t^n / [n]_q!. Comparing
// coefficients gives sum_k binom(n, 2k)_q E_{n-2k}(q) = [n = 0], so every
// E_n(q) is a polynomial in q.
inline std::vector<Poly> q_euler_numbers(unsigned max)
{
    std::vector<Poly> e;
    for (unsigned n = 0; n <= max; ++n) {
        Poly acc(q_vars(), Rational(n == 0 ? 1 : 0));
        for (unsigned k = 1; 2 * k <= n; ++k) {
            acc -= q_binomial(n, 2 * k) * e[n - 2 * k];
        }
        e.push_back(std::move(acc));
    }
    return e;
}

// ---------------------------------------------------------------------------
// K-theoretic Phi classes

inline constexpr unsigned max_n_ktheory = 4;

// Variables a1..an, y.
inline Vars k_vars(unsigned n)
{
    return alpha_vars(n, {"y"});
}

// Sum over |I| = r of
//   prod_{i<j in I} (a_i a_j - 1)/(a_i a_j + y)
//   * prod_{i in I, j not in I} (a_i a_j - 1)(a_i + y a_j) / ((a_i a_j + y)(a_i - a_j)).
// Every summand is cleared to prod_{i<j}(a_i a_j + y) * Vandermonde; the sum
// of numerators is divided exactly by the Vandermonde.
inline LaurentFraction phi_wedge_k(unsigned n, unsigned r)
{
    validate(OrbitId{Family::Wedge, n, r});
    if (n > max_n_ktheory) {
        throw out_of_scope("K-theoretic Phi classes are limited to n <= " + std::to_string(max_n_ktheory));
    }
    const Vars v = k_vars(n);
    const Poly one(v, Rational(1));
    auto a = [&](unsigned i) { return Poly::variable(v, i); };
    const Poly y = Poly::variable(v, n);
    std::vector<Poly> den;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            den.push_back(a(i) * a(j) + y);
        }
    }
    Poly total(v);
    for (const auto &in : detail::subsets(n, r)) {
        const auto out = detail::complement(in, n);
        std::vector<bool> inside(n, false);
        for (unsigned i : in) {
            inside[i] = true;
        }
        Poly t = one;
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) {
                if (inside[i] && inside[j]) {
                    t *= a(i) * a(j) - one;
                } else if (!inside[i] && !inside[j]) {
                    t *= a(i) * a(j) + y; // factor of the common denominator not used by this summand
                }
            }
        }
        for (unsigned i : in) {
            for (unsigned j : out) {
                t *= a(i) * a(j) - one;
                t *= a(i) + y * a(j);
            }
        }
        t *= detail::vandermonde<Rational>(v, in);
        t *= detail::vandermonde<Rational>(v, out);
        total += t * Rational(detail::clearing_sign(in, out));
    }
    std::vector<unsigned> all(n);
    std::iota(all.begin(), all.end(), 0u);
    const Poly num = exact_divide(total, detail::vandermonde<Rational>(v, all));
    return LaurentFraction(num, den);
}

// Specialization of q in the sieve coefficients: q = -y (default), q = y, or
// a fixed rational number.
struct QSpec
{
    enum class Kind
    {
        MinusY,
        PlusY,
        Value
    } kind = Kind::MinusY;
    Rational value = Rational(0);

    std::string describe() const
    {
        switch (kind) {
        case Kind::MinusY:
            return "q=-y";
        case Kind::PlusY:
            return "q=y";
        default:
            return "q=" + value.get_str();
        }
    }
};

inline QSpec parse_qspec(const std::string &s)
{
    if (s == "-y") {
        return QSpec{};
    }
    if (s == "y") {
        return QSpec{QSpec::Kind::PlusY, Rational(0)};
    }
    return QSpec{QSpec::Kind::Value, parse_rational(s)};
}

// A polynomial in q as a polynomial on vars after specializing q.
inline Poly specialize_q(const Poly &p, const QSpec &spec, const Vars &vars, std::size_t y_index)
{
    Assignment<Rational> m;
    switch (spec.kind) {
    case QSpec::Kind::MinusY:
        m.emplace("q", -Poly::variable(vars, y_index));
        break;
    case QSpec::Kind::PlusY:
        m.emplace("q", Poly::variable(vars, y_index));
        break;
    default:
        m.emplace("q", Poly(vars, spec.value));
    }
    return substitute(p, m, vars);
}

// Coefficients binom(r+2k, r)_q E_{2k}(q), k = 0..(n-r)/2, as polynomials in q.
inline std::vector<Poly> motivic_sieve_coefficients(unsigned n, unsigned r)
{
    validate(OrbitId{Family::Wedge, n, r});
    const auto e = q_euler_numbers(n - r);
    std::vector<Poly> out;
    for (unsigned k = 0; r + 2 * k <= n; ++k) {
        out.push_back(q_binomial(r + 2 * k, r) * e[2 * k]);
    }
    return out;
}

inline LaurentFraction motivic_segre_sieve(unsigned n, unsigned r, const QSpec &spec = {})
{
    const auto coeffs = motivic_sieve_coefficients(n, r);
    const Vars v = k_vars(n);
    LaurentFraction sum(v);
    for (unsigned k = 0; k < coeffs.size(); ++k) {
        const Poly c = specialize_q(coeffs[k], spec, v, n);
        if (c.is_zero()) {
            continue;
        }
        sum += LaurentFraction(c) * phi_wedge_k(n, r + 2 * k);
    }
    return sum;
}

} // namespace degloci
