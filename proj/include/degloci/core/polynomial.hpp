#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "degloci/core/coefficients.hpp"
#include "degloci/core/errors.hpp"
#include "degloci/core/monomial.hpp"

namespace degloci
{

// Sparse multivariate polynomial over the coefficient ring C.
//
// Terms are kept sorted by ascending key (graded lex, see monomial.hpp) with
// no zero coefficients, so structural equality is mathematical equality and
// every homogeneous component is a contiguous run of terms.
template <class C>
class Polynomial
{
public:
    using coeff_type = C;

    struct Term {
        Key key;
        C coeff;

        friend bool operator==(const Term &, const Term &) = default;
    };

    Polynomial() : vars_(make_vars({})) {}

    explicit Polynomial(Vars vars) : vars_(std::move(vars)) {}

    Polynomial(Vars vars, const C &constant) : vars_(std::move(vars))
    {
        if (!::degloci::is_zero(constant)) {
            terms_.push_back({Key{0}, constant});
        }
    }

    static Polynomial variable(Vars vars, std::size_t i, const C &c = C(1))
    {
        if (i >= vars->size()) {
            throw error("variable index out of range");
        }
        Polynomial p(std::move(vars));
        if (!::degloci::is_zero(c)) {
            p.terms_.push_back({key::unit(i), c});
        }
        return p;
    }

    static Polynomial variable(Vars vars, const std::string &name, const C &c = C(1))
    {
        auto idx = vars->index_of(name);
        if (!idx) {
            throw unmapped_variable("no variable named '" + name + "'");
        }
        return variable(std::move(vars), *idx, c);
    }

    static Polynomial monomial(Vars vars, std::span<const unsigned> exps, const C &c)
    {
        if (exps.size() != vars->size()) {
            throw variable_mismatch("exponent vector length differs from variable count");
        }
        Polynomial p(std::move(vars));
        if (!::degloci::is_zero(c)) {
            p.terms_.push_back({key::from_exponents(exps), c});
        }
        return p;
    }

    // Builds from arbitrary (possibly repeated, unsorted) terms.
    static Polynomial from_terms(Vars vars, std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.key < b.key; });
        Polynomial p(std::move(vars));
        for (auto &t : terms) {
            if (!p.terms_.empty() && p.terms_.back().key == t.key) {
                p.terms_.back().coeff += t.coeff;
                if (::degloci::is_zero(p.terms_.back().coeff)) {
                    p.terms_.pop_back();
                }
            } else if (!::degloci::is_zero(t.coeff)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    // Caller guarantees sorted, unique, nonzero.
    static Polynomial from_sorted_terms(Vars vars, std::vector<Term> terms)
    {
        Polynomial p(std::move(vars));
        p.terms_ = std::move(terms);
        return p;
    }

    const Vars &vars() const
    {
        return vars_;
    }

    std::size_t nvars() const
    {
        return vars_->size();
    }

    const std::vector<Term> &terms() const
    {
        return terms_;
    }

    std::size_t size() const
    {
        return terms_.size();
    }

    bool is_zero() const
    {
        return terms_.empty();
    }

    // -1 for the zero polynomial.
    int degree() const
    {
        return terms_.empty() ? -1 : static_cast<int>(key::degree(terms_.back().key));
    }

    int low_degree() const
    {
        return terms_.empty() ? -1 : static_cast<int>(key::degree(terms_.front().key));
    }

    const Term &leading_term() const
    {
        if (terms_.empty()) {
            throw error("leading term of zero polynomial");
        }
        return terms_.back();
    }

    C coefficient(Key k) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term &t, Key kk) { return t.key < kk; });
        if (it != terms_.end() && it->key == k) {
            return it->coeff;
        }
        return C(0);
    }

    C coefficient(std::span<const unsigned> exps) const
    {
        return coefficient(key::from_exponents(exps));
    }

    C constant_term() const
    {
        return coefficient(Key{0});
    }

    bool is_homogeneous() const
    {
        return terms_.empty() || key::degree(terms_.front().key) == key::degree(terms_.back().key);
    }

    Polynomial homogeneous_part(unsigned d) const
    {
        auto [lo, hi] = degree_range(d);
        Polynomial p(vars_);
        p.terms_.assign(lo, hi);
        return p;
    }

    // Drops every term of total degree > bound.
    Polynomial truncated(unsigned bound) const
    {
        Polynomial p(vars_);
        if (bound >= max_total_degree) {
            p.terms_ = terms_;
            return p;
        }
        auto end = std::lower_bound(terms_.begin(), terms_.end(), key::degree_floor(bound + 1),
                                    [](const Term &t, Key kk) { return t.key < kk; });
        p.terms_.assign(terms_.begin(), end);
        return p;
    }

    // Same terms relabelled onto an equal-sized variable set.
    Polynomial with_vars(Vars vars) const
    {
        if (vars->size() < highest_var_used()) {
            throw variable_mismatch("relabelling onto a smaller variable set");
        }
        Polynomial p(std::move(vars));
        p.terms_ = terms_;
        return p;
    }

    std::size_t highest_var_used() const
    {
        std::size_t m = 0;
        for (const auto &t : terms_) {
            for (std::size_t i = 0; i < max_vars; ++i) {
                if (key::exponent(t.key, i) != 0) {
                    m = std::max(m, i + 1);
                }
            }
        }
        return m;
    }

    Polynomial operator-() const
    {
        Polynomial p(vars_);
        p.terms_.reserve(terms_.size());
        for (const auto &t : terms_) {
            p.terms_.push_back({t.key, C(-t.coeff)});
        }
        return p;
    }

    Polynomial &operator+=(const Polynomial &o)
    {
        check_vars(o);
        terms_ = merge_scaled(terms_, o.terms_, C(1), Key{0}, max_total_degree);
        return *this;
    }

    Polynomial &operator-=(const Polynomial &o)
    {
        check_vars(o);
        terms_ = merge_scaled(terms_, o.terms_, C(-1), Key{0}, max_total_degree);
        return *this;
    }

    Polynomial &operator*=(const C &c)
    {
        if (::degloci::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto &t : terms_) {
            t.coeff *= c;
        }
        return *this;
    }

    Polynomial &operator*=(const Polynomial &o)
    {
        return *this = multiply(*this, o, max_total_degree);
    }

    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        a += b;
        return a;
    }

    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        a -= b;
        return a;
    }

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        return multiply(a, b, max_total_degree);
    }

    friend Polynomial operator*(Polynomial a, const C &c)
    {
        a *= c;
        return a;
    }

    friend Polynomial operator*(const C &c, Polynomial a)
    {
        a *= c;
        return a;
    }

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        return same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
    }

    // Product with every term of total degree > bound discarded.
    friend Polynomial multiply(const Polynomial &a, const Polynomial &b, unsigned bound)
    {
        a.check_vars(b);
        Polynomial r(a.vars_);
        if (a.is_zero() || b.is_zero()) {
            return r;
        }
        // Terms above the bound are filtered before keys are added, so only an
        // unbounded product can overflow the packed degree byte.
        if (bound >= max_total_degree && a.degree() + b.degree() > static_cast<int>(max_total_degree)) {
            throw degree_overflow("product degree exceeds 255");
        }
        const Polynomial &small = a.size() <= b.size() ? a : b;
        const Polynomial &big = a.size() <= b.size() ? b : a;
        if (small.size() <= 16) {
            for (const auto &t : small.terms_) {
                r.terms_ = merge_scaled(r.terms_, big.terms_, t.coeff, t.key, bound);
            }
            return r;
        }
        std::unordered_map<Key, C> acc;
        acc.reserve(std::min<std::size_t>(a.size() * b.size(), std::size_t{1} << 22));
        for (const auto &x : a.terms_) {
            const unsigned dx = key::degree(x.key);
            for (const auto &y : b.terms_) {
                if (dx + key::degree(y.key) > bound) {
                    break;
                }
                C c = x.coeff * y.coeff;
                auto [it, inserted] = acc.try_emplace(x.key + y.key, c);
                if (!inserted) {
                    it->second += c;
                }
            }
        }
        r.terms_.reserve(acc.size());
        for (auto &[k, c] : acc) {
            if (!::degloci::is_zero(c)) {
                r.terms_.push_back({k, std::move(c)});
            }
        }
        std::sort(r.terms_.begin(), r.terms_.end(), [](const Term &x, const Term &y) { return x.key < y.key; });
        return r;
    }

    // dst + c * x^shift * src, keeping only terms of degree <= bound.
    // Both inputs sorted; shifting by a fixed key preserves order.
    static std::vector<Term> merge_scaled(const std::vector<Term> &dst, const std::vector<Term> &src, const C &c,
                                          Key shift, unsigned bound)
    {
        std::vector<Term> out;
        out.reserve(dst.size() + src.size());
        const unsigned sdeg = key::degree(shift);
        auto i = dst.begin();
        auto j = src.begin();
        while (j != src.end() && key::degree(j->key) + sdeg <= bound) {
            const Key kj = j->key + shift;
            while (i != dst.end() && i->key < kj) {
                out.push_back(*i++);
            }
            if (i != dst.end() && i->key == kj) {
                C v = i->coeff + c * j->coeff;
                if (!::degloci::is_zero(v)) {
                    out.push_back({kj, std::move(v)});
                }
                ++i;
            } else {
                C v = c * j->coeff;
                if (!::degloci::is_zero(v)) {
                    out.push_back({kj, std::move(v)});
                }
            }
            ++j;
        }
        out.insert(out.end(), i, dst.end());
        return out;
    }

private:
    void check_vars(const Polynomial &o) const
    {
        if (!same_vars(vars_, o.vars_)) {
            throw variable_mismatch("polynomial operands have different variable sets");
        }
    }

    auto degree_range(unsigned d) const
    {
        auto lo = std::lower_bound(terms_.begin(), terms_.end(), key::degree_floor(d),
                                   [](const Term &t, Key kk) { return t.key < kk; });
        auto hi = std::lower_bound(lo, terms_.end(), key::degree_floor(d + 1),
                                   [](const Term &t, Key kk) { return t.key < kk; });
        return std::pair{lo, hi};
    }

    Vars vars_;
    std::vector<Term> terms_;
};

using Poly = Polynomial<Rational>;

template <class C>
Polynomial<C> pow(const Polynomial<C> &p, unsigned e, unsigned bound = max_total_degree)
{
    Polynomial<C> r(p.vars(), C(1));
    Polynomial<C> base = p;
    while (e > 0) {
        if (e & 1u) {
            r = multiply(r, base, bound);
        }
        e >>= 1u;
        if (e > 0) {
            base = multiply(base, base, bound);
        }
    }
    return r;
}

// Coefficient-wise conversion between rings.
template <class To, class From, class F>
Polynomial<To> convert(const Polynomial<From> &p, F &&fn)
{
    std::vector<typename Polynomial<To>::Term> terms;
    terms.reserve(p.size());
    for (const auto &t : p.terms()) {
        To c = fn(t.coeff);
        if (!is_zero(c)) {
            terms.push_back({t.key, std::move(c)});
        }
    }
    return Polynomial<To>::from_sorted_terms(p.vars(), std::move(terms));
}

template <class From>
Poly to_rational_poly(const Polynomial<From> &p)
{
    return convert<Rational>(p, [](const From &c) { return to_rational(c); });
}

inline Polynomial<Integer> to_integer_poly(const Polynomial<CheckedInt> &p)
{
    return convert<Integer>(p, [](CheckedInt c) { return c.to_integer(); });
}

// Sum of c * x^k over a linear form's terms: c0 + sum coeffs[i] * var_i.
template <class C>
Polynomial<C> linear_form(const Vars &vars, const C &constant, const std::vector<std::pair<std::size_t, C>> &coeffs)
{
    std::vector<typename Polynomial<C>::Term> terms;
    terms.push_back({Key{0}, constant});
    for (const auto &[i, c] : coeffs) {
        terms.push_back({key::unit(i), c});
    }
    return Polynomial<C>::from_terms(vars, std::move(terms));
}

// Rational value at a point (one coordinate per variable).
template <class C>
Rational evaluate(const Polynomial<C> &p, std::span<const Rational> point)
{
    if (point.size() != p.nvars()) {
        throw variable_mismatch("evaluation point has wrong dimension");
    }
    std::vector<std::vector<Rational>> powers(p.nvars(), std::vector<Rational>{Rational(1)});
    Rational sum = 0;
    for (const auto &t : p.terms()) {
        Rational m = to_rational(t.coeff);
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            const unsigned e = key::exponent(t.key, i);
            if (e == 0) {
                continue;
            }
            auto &pw = powers[i];
            while (pw.size() <= e) {
                Rational next = pw.back() * point[i];
                pw.push_back(next);
            }
            m *= pw[e];
        }
        sum += m;
    }
    return sum;
}

} // namespace degloci
