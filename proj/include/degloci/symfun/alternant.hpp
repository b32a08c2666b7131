#pragma once

#include <algorithm>
#include <vector>

#include "degloci/core/polynomial.hpp"
#include "degloci/symfun/schur.hpp"

namespace degloci
{

// Schur expansion of sum_{w in S_n} sign(w) w(h) / Vandermonde(a_1..a_n).
// Each monomial x^a with distinct exponents contributes sign * coeff to
// s_{sort(a) - delta}, where sign is that of the sorting permutation;
// monomials with a repeated exponent cancel. Only monomials of degree
// <= max_degree + n(n-1)/2 are used, giving the expansion through
// max_degree.
template <class C>
SchurExpansion alternant_quotient(const Polynomial<C> &h, unsigned max_degree = max_total_degree)
{
    const std::size_t n = h.nvars();
    const unsigned shift = static_cast<unsigned>(n * (n - 1) / 2);
    SchurExpansion out;
    std::vector<unsigned> e(n);
    std::vector<unsigned> parts(n);
    for (const auto &t : h.terms()) {
        const unsigned d = key::degree(t.key);
        if (d < shift) {
            continue;
        }
        if (d - shift > max_degree) {
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = key::exponent(t.key, i);
        }
        // Insertion sort descending, counting transpositions.
        int swaps = 0;
        bool repeated = false;
        for (std::size_t i = 1; i < n && !repeated; ++i) {
            for (std::size_t j = i; j > 0; --j) {
                if (e[j] == e[j - 1]) {
                    repeated = true;
                    break;
                }
                if (e[j] > e[j - 1]) {
                    std::swap(e[j], e[j - 1]);
                    ++swaps;
                } else {
                    break;
                }
            }
        }
        if (repeated) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            parts[i] = e[i] - static_cast<unsigned>(n - 1 - i);
        }
        Rational c = to_rational(t.coeff);
        if (swaps % 2) {
            c = -c;
        }
        out[Partition(parts)] += c;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

inline SchurExpansion operator+(SchurExpansion a, const SchurExpansion &b)
{
    for (const auto &[l, c] : b) {
        auto [it, inserted] = a.try_emplace(l, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) {
                a.erase(it);
            }
        }
    }
    return a;
}

inline SchurExpansion scaled(SchurExpansion a, const Rational &c)
{
    if (sgn(c) == 0) {
        return {};
    }
    for (auto &kv : a) {
        kv.second *= c;
    }
    return a;
}

inline SchurExpansion operator-(SchurExpansion a, const SchurExpansion &b)
{
    return a + scaled(b, Rational(-1));
}

// Keeps only partitions with at most n parts (the image in n variables).
inline SchurExpansion restrict_length(const SchurExpansion &s, std::size_t n)
{
    SchurExpansion out;
    for (const auto &[l, c] : s) {
        if (l.length() <= n) {
            out.emplace(l, c);
        }
    }
    return out;
}

inline int lowest_degree(const SchurExpansion &s)
{
    return s.empty() ? -1 : static_cast<int>(s.begin()->first.size());
}

} // namespace degloci
