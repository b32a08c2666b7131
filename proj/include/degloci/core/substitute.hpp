#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degloci/core/polynomial.hpp"
#include "degloci/core/series.hpp"

namespace degloci
{

template <class C>
using Assignment = std::map<std::string, Polynomial<C>>;

namespace detail
{

template <class C>
Polynomial<C> substitute_impl(const Polynomial<C> &p, const Assignment<C> &assignment, const Vars &target,
                              unsigned bound)
{
    const std::size_t n = p.nvars();
    std::vector<unsigned> max_exp(n, 0);
    for (const auto &t : p.terms()) {
        for (std::size_t i = 0; i < n; ++i) {
            max_exp[i] = std::max(max_exp[i], key::exponent(t.key, i));
        }
    }
    std::vector<const Polynomial<C> *> images(n, nullptr);
    bool monomial_images = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (max_exp[i] == 0) {
            continue;
        }
        auto it = assignment.find(p.vars()->name(i));
        if (it == assignment.end()) {
            throw unmapped_variable("substitution does not map variable '" + p.vars()->name(i) + "'");
        }
        if (!same_vars(it->second.vars(), target)) {
            throw variable_mismatch("substitution image for '" + p.vars()->name(i) + "' uses another variable set");
        }
        images[i] = &it->second;
        monomial_images = monomial_images && it->second.size() <= 1;
    }

    if (monomial_images) {
        // Every image is c*x^k (or zero): each term maps to a single term.
        std::vector<typename Polynomial<C>::Term> out;
        out.reserve(p.size());
        for (const auto &t : p.terms()) {
            C c = t.coeff;
            Key k = 0;
            bool dead = false;
            for (std::size_t i = 0; i < n && !dead; ++i) {
                const unsigned e = key::exponent(t.key, i);
                if (e == 0) {
                    continue;
                }
                if (images[i]->is_zero()) {
                    dead = true;
                    break;
                }
                const auto &img = images[i]->terms().front();
                for (unsigned j = 0; j < e; ++j) {
                    c *= img.coeff;
                    if (key::degree(k) + key::degree(img.key) > max_total_degree) {
                        throw degree_overflow("substitution degree exceeds 255");
                    }
                    k += img.key;
                }
            }
            if (!dead && key::degree(k) <= bound) {
                out.push_back({k, std::move(c)});
            }
        }
        return Polynomial<C>::from_terms(target, std::move(out));
    }

    std::vector<std::vector<Polynomial<C>>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!images[i]) {
            continue;
        }
        powers[i].push_back(Polynomial<C>(target, C(1)));
        for (unsigned e = 1; e <= max_exp[i]; ++e) {
            powers[i].push_back(multiply(powers[i].back(), *images[i], bound));
        }
    }
    Polynomial<C> result(target);
    for (const auto &t : p.terms()) {
        Polynomial<C> m(target, t.coeff);
        for (std::size_t i = 0; i < n && !m.is_zero(); ++i) {
            const unsigned e = key::exponent(t.key, i);
            if (e != 0) {
                m = multiply(m, powers[i][e], bound);
            }
        }
        result += m;
    }
    return result;
}

} // namespace detail

// Image of p under var -> assignment[var]. Every variable occurring in p must
// be mapped; all images live on `target`.
template <class C>
Polynomial<C> substitute(const Polynomial<C> &p, const Assignment<C> &assignment, const Vars &target)
{
    return detail::substitute_impl(p, assignment, target, max_total_degree);
}

// Series version: the truncation bound is preserved. Images must have zero
// constant term, otherwise truncating the input would lose information.
template <class C>
TruncSeries<C> substitute(const TruncSeries<C> &p, const Assignment<C> &assignment, const Vars &target)
{
    for (const auto &[name, img] : assignment) {
        if (!is_zero(img.constant_term())) {
            throw error("series substitution image for '" + name + "' has a constant term");
        }
    }
    return TruncSeries<C>(detail::substitute_impl(p.poly(), assignment, target, p.bound()), p.bound());
}

// Same polynomial with variable i of `from` renamed per `target` ordering.
template <class C>
Polynomial<C> rename_vars(const Polynomial<C> &p, const Vars &target)
{
    Assignment<C> a;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        a.emplace(p.vars()->name(i), Polynomial<C>::variable(target, p.vars()->name(i)));
    }
    return substitute(p, a, target);
}

} // namespace degloci
