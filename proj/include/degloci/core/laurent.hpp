#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "degloci/core/division.hpp"
#include "degloci/core/polynomial.hpp"

namespace degloci
{

// x^shift * num / (den[0] * den[1] * ...), with shift a signed exponent vector.
// Denominator factors are kept as an explicit list: each is non-constant,
// not a monomial, and monic in the graded-lex order, so equal factors compare
// equal and cancellation only needs trial division by listed factors.
class LaurentFraction
{
public:
    explicit LaurentFraction(Vars vars)
        : num_(vars), shift_(vars->size(), 0)
    {
    }

    LaurentFraction(Poly num, std::vector<Poly> den = {}, std::vector<int> shift = {})
        : num_(std::move(num)), den_(std::move(den)), shift_(std::move(shift))
    {
        if (shift_.empty()) {
            shift_.assign(num_.nvars(), 0);
        }
        if (shift_.size() != num_.nvars()) {
            throw variable_mismatch("Laurent shift has wrong length");
        }
        for (const auto &f : den_) {
            if (!same_vars(f.vars(), num_.vars())) {
                throw variable_mismatch("Laurent denominator uses another variable set");
            }
        }
        normalize();
    }

    static LaurentFraction constant(Vars vars, const Rational &c)
    {
        return LaurentFraction(Poly(std::move(vars), c));
    }

    // x_i^e for any integer e.
    static LaurentFraction monomial(Vars vars, std::size_t i, int e)
    {
        std::vector<int> s(vars->size(), 0);
        s.at(i) = e;
        return LaurentFraction(Poly(std::move(vars), Rational(1)), {}, std::move(s));
    }

    const Poly &numerator() const
    {
        return num_;
    }

    const std::vector<Poly> &denominator_factors() const
    {
        return den_;
    }

    const std::vector<int> &shift() const
    {
        return shift_;
    }

    const Vars &vars() const
    {
        return num_.vars();
    }

    bool is_zero() const
    {
        return num_.is_zero();
    }

    // True when the value is a Laurent polynomial (no denominator factors).
    bool is_laurent_polynomial() const
    {
        return den_.empty();
    }

    Poly denominator() const
    {
        Poly d(vars(), Rational(1));
        for (const auto &f : den_) {
            d *= f;
        }
        return d;
    }

    LaurentFraction operator-() const
    {
        LaurentFraction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend LaurentFraction operator+(const LaurentFraction &a, const LaurentFraction &b)
    {
        a.check_vars(b);
        if (a.is_zero()) {
            return b;
        }
        if (b.is_zero()) {
            return a;
        }
        std::vector<Poly> common = a.den_;
        std::vector<Poly> extra_a; // factors of b's denominator missing from a
        std::vector<Poly> rest = a.den_;
        for (const auto &f : b.den_) {
            auto it = std::find(rest.begin(), rest.end(), f);
            if (it != rest.end()) {
                rest.erase(it);
            } else {
                common.push_back(f);
                extra_a.push_back(f);
            }
        }
        std::vector<Poly> extra_b = rest; // factors of a's denominator missing from b
        std::vector<int> s(a.shift_.size());
        std::vector<unsigned> ea(s.size()), eb(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            s[i] = std::min(a.shift_[i], b.shift_[i]);
            ea[i] = static_cast<unsigned>(a.shift_[i] - s[i]);
            eb[i] = static_cast<unsigned>(b.shift_[i] - s[i]);
        }
        Poly na = a.num_ * Poly::monomial(a.vars(), ea, Rational(1));
        for (const auto &f : extra_a) {
            na *= f;
        }
        Poly nb = b.num_ * Poly::monomial(a.vars(), eb, Rational(1));
        for (const auto &f : extra_b) {
            nb *= f;
        }
        return LaurentFraction(na + nb, std::move(common), std::move(s));
    }

    friend LaurentFraction operator-(const LaurentFraction &a, const LaurentFraction &b)
    {
        return a + (-b);
    }

    friend LaurentFraction operator*(const LaurentFraction &a, const LaurentFraction &b)
    {
        a.check_vars(b);
        std::vector<Poly> den = a.den_;
        den.insert(den.end(), b.den_.begin(), b.den_.end());
        std::vector<int> s(a.shift_.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            s[i] = a.shift_[i] + b.shift_[i];
        }
        return LaurentFraction(a.num_ * b.num_, std::move(den), std::move(s));
    }

    friend LaurentFraction operator*(const LaurentFraction &a, const Rational &c)
    {
        LaurentFraction r = a;
        r.num_ *= c;
        if (r.num_.is_zero()) {
            r.normalize();
        }
        return r;
    }

    LaurentFraction &operator+=(const LaurentFraction &o)
    {
        return *this = *this + o;
    }

    LaurentFraction &operator*=(const LaurentFraction &o)
    {
        return *this = *this * o;
    }

    // Division by a polynomial; the divisor is split into the monomial part,
    // the constant, and one remaining factor.
    LaurentFraction divided_by(const Poly &p) const
    {
        if (p.is_zero()) {
            throw error("Laurent fraction divided by the zero polynomial");
        }
        LaurentFraction r = *this;
        r.den_.push_back(p);
        r.normalize();
        return r;
    }

    // Value-level equality: cross-multiplied numerators agree.
    friend bool equivalent(const LaurentFraction &a, const LaurentFraction &b)
    {
        return (a - b).is_zero();
    }

    Rational evaluate(std::span<const Rational> point) const
    {
        Rational d = degloci::evaluate(denominator(), point);
        if (is_zero_value(d)) {
            throw error("Laurent fraction evaluated at a pole");
        }
        Rational v = degloci::evaluate(num_, point) / d;
        for (std::size_t i = 0; i < shift_.size(); ++i) {
            if (shift_[i] == 0) {
                continue;
            }
            if (is_zero_value(point[i])) {
                throw error("Laurent fraction evaluated at a pole");
            }
            Rational x = shift_[i] > 0 ? point[i] : Rational(1 / point[i]);
            for (int k = 0; k < std::abs(shift_[i]); ++k) {
                v *= x;
            }
        }
        return v;
    }

private:
    static bool is_zero_value(const Rational &q)
    {
        return sgn(q) == 0;
    }

    void check_vars(const LaurentFraction &o) const
    {
        if (!same_vars(vars(), o.vars())) {
            throw variable_mismatch("Laurent fraction operands have different variable sets");
        }
    }

    // Moves the monomial content of a polynomial into the shift vector and
    // returns the remaining polynomial.
    Poly pull_monomial(const Poly &p, int sign)
    {
        const std::size_t n = p.nvars();
        std::vector<unsigned> lo(n, ~0u);
        for (const auto &t : p.terms()) {
            for (std::size_t i = 0; i < n; ++i) {
                lo[i] = std::min(lo[i], key::exponent(t.key, i));
            }
        }
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
            any = any || lo[i] > 0;
        }
        if (!any) {
            return p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            shift_[i] += sign * static_cast<int>(lo[i]);
        }
        const Key m = key::from_exponents(lo);
        std::vector<Poly::Term> ts;
        ts.reserve(p.size());
        for (const auto &t : p.terms()) {
            ts.push_back({t.key - m, t.coeff});
        }
        return Poly::from_terms(p.vars(), std::move(ts));
    }

    void normalize()
    {
        if (num_.is_zero()) {
            den_.clear();
            std::fill(shift_.begin(), shift_.end(), 0);
            return;
        }
        std::vector<Poly> factors;
        for (auto &f : den_) {
            if (f.is_zero()) {
                throw error("Laurent fraction with a zero denominator factor");
            }
            Poly g = pull_monomial(f, -1);
            const Rational lc = g.leading_term().coeff;
            num_ *= Rational(1 / lc);
            g *= Rational(1 / lc);
            if (g.degree() == 0) {
                continue;
            }
            factors.push_back(std::move(g));
        }
        num_ = pull_monomial(num_, +1);
        // Cancel listed factors against the numerator.
        std::vector<Poly> kept;
        for (auto &f : factors) {
            Poly q(num_.vars());
            if (divides(f, num_, &q)) {
                num_ = std::move(q);
            } else {
                kept.push_back(std::move(f));
            }
        }
        std::sort(kept.begin(), kept.end(), [](const Poly &a, const Poly &b) {
            return std::lexicographical_compare(a.terms().begin(), a.terms().end(), b.terms().begin(),
                                                b.terms().end(), [](const auto &x, const auto &y) {
                                                    if (x.key != y.key) {
                                                        return x.key < y.key;
                                                    }
                                                    return x.coeff < y.coeff;
                                                });
        });
        den_ = std::move(kept);
    }

    Poly num_;
    std::vector<Poly> den_;
    std::vector<int> shift_;
};

} // namespace degloci
