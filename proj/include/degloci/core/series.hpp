#pragma once

#include <string>
#include <utility>
#include <vector>

#include "degloci/core/polynomial.hpp"

namespace degloci
{

// Polynomial together with an explicit total-degree bound D. Every stored
// monomial has degree <= D and every operation truncates to D.
template <class C>
class TruncSeries
{
public:
    TruncSeries(Polynomial<C> p, unsigned bound) : poly_(p.truncated(bound)), bound_(bound) {}

    static TruncSeries constant(Vars vars, const C &c, unsigned bound)
    {
        return TruncSeries(Polynomial<C>(std::move(vars), c), bound);
    }

    const Polynomial<C> &poly() const
    {
        return poly_;
    }

    unsigned bound() const
    {
        return bound_;
    }

    const Vars &vars() const
    {
        return poly_.vars();
    }

    TruncSeries &operator+=(const TruncSeries &o)
    {
        check_bound(o);
        poly_ += o.poly_;
        return *this;
    }

    TruncSeries &operator-=(const TruncSeries &o)
    {
        check_bound(o);
        poly_ -= o.poly_;
        return *this;
    }

    TruncSeries &operator*=(const C &c)
    {
        poly_ *= c;
        return *this;
    }

    TruncSeries operator-() const
    {
        return TruncSeries(-poly_, bound_);
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries &b)
    {
        a += b;
        return a;
    }

    friend TruncSeries operator-(TruncSeries a, const TruncSeries &b)
    {
        a -= b;
        return a;
    }

    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b)
    {
        a.check_bound(b);
        return TruncSeries(multiply(a.poly_, b.poly_, a.bound_), a.bound_);
    }

    friend TruncSeries operator*(TruncSeries a, const C &c)
    {
        a *= c;
        return a;
    }

    friend TruncSeries operator*(const C &c, TruncSeries a)
    {
        a *= c;
        return a;
    }

    // Multiplication by an exact polynomial factor.
    friend TruncSeries operator*(const TruncSeries &a, const Polynomial<C> &p)
    {
        return TruncSeries(multiply(a.poly_, p, a.bound_), a.bound_);
    }

    friend bool operator==(const TruncSeries &, const TruncSeries &) = default;

private:
    void check_bound(const TruncSeries &o) const
    {
        if (bound_ != o.bound_) {
            throw truncation_mismatch("series truncation bounds differ: " + std::to_string(bound_) + " vs " +
                                      std::to_string(o.bound_));
        }
    }

    Polynomial<C> poly_;
    unsigned bound_;
};

// num / den as power series truncated at `bound`. The constant term of den
// must be invertible in C (any nonzero rational, or +-1 for integer rings).
// Works one homogeneous component at a time:
//   q_d = (num_d - sum_{k>=1} den_k q_{d-k}) / den_0.
template <class C>
Polynomial<C> series_divide(const Polynomial<C> &num, const Polynomial<C> &den, unsigned bound)
{
    const C c0 = den.constant_term();
    if (is_zero(c0)) {
        throw error("series division by a series with zero constant term");
    }
    const int dd = std::min<int>(den.degree(), static_cast<int>(bound));
    std::vector<Polynomial<C>> den_parts;
    for (int k = 0; k <= dd; ++k) {
        den_parts.push_back(den.homogeneous_part(static_cast<unsigned>(k)));
    }
    std::vector<Polynomial<C>> q_parts;
    std::vector<typename Polynomial<C>::Term> out;
    const bool unit = (c0 == C(1));
    for (unsigned d = 0; d <= bound; ++d) {
        Polynomial<C> acc = num.homogeneous_part(d);
        for (int k = 1; k <= dd && k <= static_cast<int>(d); ++k) {
            if (den_parts[k].is_zero() || q_parts[d - k].is_zero()) {
                continue;
            }
            acc -= den_parts[k] * q_parts[d - k];
        }
        if (!unit) {
            std::vector<typename Polynomial<C>::Term> ts;
            for (const auto &t : acc.terms()) {
                ts.push_back({t.key, exact_quotient(t.coeff, c0)});
            }
            acc = Polynomial<C>::from_sorted_terms(acc.vars(), std::move(ts));
        }
        out.insert(out.end(), acc.terms().begin(), acc.terms().end());
        q_parts.push_back(std::move(acc));
    }
    return Polynomial<C>::from_sorted_terms(num.vars(), std::move(out));
}

template <class C>
TruncSeries<C> series_divide(const TruncSeries<C> &num, const Polynomial<C> &den)
{
    return TruncSeries<C>(series_divide(num.poly(), den, num.bound()), num.bound());
}

// p / (1 + L) for a linear form L without constant term, truncated at
// `bound`: q_d = p_d - L * q_{d-1}.
template <class C>
Polynomial<C> divide_unit_linear(const Polynomial<C> &p, const Polynomial<C> &linear, unsigned bound)
{
    if (!linear.is_homogeneous() || linear.degree() != 1) {
        throw error("divide_unit_linear expects a nonzero linear form");
    }
    std::vector<typename Polynomial<C>::Term> out;
    Polynomial<C> prev(p.vars());
    if (p.is_zero()) {
        return prev;
    }
    for (int d = 0; d <= static_cast<int>(bound); ++d) {
        Polynomial<C> q = p.homogeneous_part(static_cast<unsigned>(d));
        if (!prev.is_zero()) {
            q -= multiply(linear, prev, bound);
        }
        out.insert(out.end(), q.terms().begin(), q.terms().end());
        prev = std::move(q);
        if (prev.is_zero() && d >= p.degree()) {
            break;
        }
    }
    return Polynomial<C>::from_sorted_terms(p.vars(), std::move(out));
}

// Two-sided inverse up to the bound.
template <class C>
TruncSeries<C> series_invert(const TruncSeries<C> &p)
{
    Polynomial<C> one(p.vars(), C(1));
    return TruncSeries<C>(series_divide(one, p.poly(), p.bound()), p.bound());
}

} // namespace degloci
