#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <vector>

#include "degloci/core/polynomial.hpp"
#include "degloci/core/series.hpp"

namespace degloci
{

namespace detail
{

// Graded-lex long division that must terminate with a zero remainder.
// If num = q * den exactly, the leading term of every intermediate remainder
// is divisible by the leading term of den; the first one that is not proves
// the division inexact.
inline Poly exact_divide_impl(const Poly &num, const Poly &den, unsigned keep_above_degree)
{
    if (den.is_zero()) {
        throw error("division by the zero polynomial");
    }
    if (!same_vars(num.vars(), den.vars())) {
        throw variable_mismatch("exact_divide operands have different variable sets");
    }
    const auto &lt = den.leading_term();
    std::map<Key, Rational> rem;
    for (const auto &t : num.terms()) {
        rem.emplace_hint(rem.end(), t.key, t.coeff);
    }
    std::vector<Poly::Term> quot;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        if (key::degree(top->first) < keep_above_degree) {
            break;
        }
        if (!key::divides(lt.key, top->first)) {
            throw nonexact_division("exact division left a nonzero remainder");
        }
        const Key qk = top->first - lt.key;
        const Rational qc = top->second / lt.coeff;
        for (const auto &dt : den.terms()) {
            const Key k = qk + dt.key;
            Rational v = qc * dt.coeff;
            auto [it, inserted] = rem.try_emplace(k, -v);
            if (!inserted) {
                it->second -= v;
                if (is_zero(it->second)) {
                    rem.erase(it);
                }
            }
        }
        quot.push_back({qk, qc});
    }
    std::reverse(quot.begin(), quot.end());
    return Poly::from_sorted_terms(num.vars(), std::move(quot));
}

} // namespace detail

// q with q * den == num exactly; throws nonexact_division otherwise.
inline Poly exact_divide(const Poly &num, const Poly &den)
{
    return detail::exact_divide_impl(num, den, 0);
}

// Gradewise division of a truncated series by a homogeneous polynomial. The
// quotient is exact up to degree bound - deg(den); each homogeneous component
// must divide with zero remainder.
inline TruncSeries<Rational> exact_divide(const TruncSeries<Rational> &num, const Poly &den)
{
    if (!den.is_homogeneous() || den.is_zero()) {
        throw error("gradewise series division needs a nonzero homogeneous divisor");
    }
    const int e = den.degree();
    if (e > static_cast<int>(num.bound())) {
        throw truncation_mismatch("divisor degree exceeds the series truncation bound");
    }
    Poly q = detail::exact_divide_impl(num.poly(), den, 0);
    return TruncSeries<Rational>(q, num.bound() - static_cast<unsigned>(e));
}

// Divides by each factor in turn.
inline Poly exact_divide_by_factors(Poly num, const std::vector<Poly> &factors)
{
    for (const auto &f : factors) {
        num = exact_divide(num, f);
    }
    return num;
}

inline TruncSeries<Rational> exact_divide_by_factors(TruncSeries<Rational> num, const std::vector<Poly> &factors)
{
    for (const auto &f : factors) {
        num = exact_divide(num, f);
    }
    return num;
}

// Whether den divides num; the quotient is stored in *quot when it does.
inline bool divides(const Poly &den, const Poly &num, Poly *quot = nullptr)
{
    try {
        Poly q = exact_divide(num, den);
        if (quot) {
            *quot = std::move(q);
        }
        return true;
    } catch (const nonexact_division &) {
        return false;
    }
}

} // namespace degloci
