#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "degloci/core/laurent.hpp"
#include "degloci/core/polynomial.hpp"

namespace degloci
{

struct FormatOptions
{
    // Per-variable degree weights used for ordering (c_k has weight k).
    std::vector<unsigned> weights;
    bool latex = false;
};

namespace detail
{

inline std::string latex_var(const std::string &name)
{
    // "a3" -> "\alpha_{3}", "c12" -> "c_{12}", anything else verbatim.
    if (name == "xi") {
        return "\\xi";
    }
    std::size_t split = name.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) {
        --split;
    }
    if (split == name.size() || split == 0) {
        return name;
    }
    std::string stem = name.substr(0, split);
    if (stem == "a") {
        stem = "\\alpha";
    } else if (stem == "s") {
        stem = "\\sigma";
    }
    return stem + "_{" + name.substr(split) + "}";
}

inline std::string monomial_string(Key k, const VarSet &vars, bool latex)
{
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const unsigned e = key::exponent(k, i);
        if (e == 0) {
            continue;
        }
        s += latex ? latex_var(vars.name(i)) : vars.name(i);
        if (e > 1) {
            s += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
        }
    }
    return s;
}

inline std::string coefficient_string(const Rational &c, bool latex)
{
    if (latex && c.get_den() != 1) {
        return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
    }
    return c.get_str();
}

} // namespace detail

// Terms in display order: weighted degree ascending, then exponent vectors
// lexicographically descending, e.g. "1 + 2c1 + c1^2 + c2".
template <class C>
std::vector<typename Polynomial<C>::Term> display_order(const Polynomial<C> &p, const std::vector<unsigned> &weights)
{
    auto ts = p.terms();
    const std::size_t n = p.nvars();
    auto wdeg = [&](Key k) {
        unsigned d = 0;
        for (std::size_t i = 0; i < n; ++i) {
            d += key::exponent(k, i) * (i < weights.size() ? weights[i] : 1u);
        }
        return d;
    };
    std::stable_sort(ts.begin(), ts.end(), [&](const auto &a, const auto &b) {
        const unsigned da = wdeg(a.key), db = wdeg(b.key);
        if (da != db) {
            return da < db;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned ea = key::exponent(a.key, i), eb = key::exponent(b.key, i);
            if (ea != eb) {
                return ea > eb;
            }
        }
        return false;
    });
    return ts;
}

inline std::vector<unsigned> chern_weights(std::size_t n)
{
    std::vector<unsigned> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = static_cast<unsigned>(i + 1);
    }
    return w;
}

template <class C>
std::string to_string(const Polynomial<C> &p, const FormatOptions &opt = {})
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &t : display_order(p, opt.weights)) {
        Rational c = to_rational(t.coeff);
        const bool neg = sgn(c) < 0;
        if (neg) {
            c = -c;
        }
        if (first) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        const std::string m = detail::monomial_string(t.key, *p.vars(), opt.latex);
        if (m.empty()) {
            out += detail::coefficient_string(c, opt.latex);
        } else if (c == 1) {
            out += m;
        } else {
            out += detail::coefficient_string(c, opt.latex) + (opt.latex ? " " : "") + m;
        }
    }
    return out;
}

template <class C>
std::ostream &operator<<(std::ostream &os, const Polynomial<C> &p)
{
    return os << to_string(p);
}

inline std::string to_string(const LaurentFraction &f, const FormatOptions &opt = {})
{
    std::string num = to_string(f.numerator(), opt);
    std::string mono_num, mono_den;
    for (std::size_t i = 0; i < f.shift().size(); ++i) {
        const int e = f.shift()[i];
        if (e == 0) {
            continue;
        }
        std::string v = f.vars()->name(i);
        if (std::abs(e) > 1) {
            v += "^" + std::to_string(std::abs(e));
        }
        (e > 0 ? mono_num : mono_den) += v;
    }
    if (mono_num.empty() && mono_den.empty() && f.denominator_factors().empty()) {
        return num;
    }
    std::string out = "(" + num + ")";
    if (!mono_num.empty()) {
        out += "*" + mono_num;
    }
    std::string den = mono_den;
    for (const auto &g : f.denominator_factors()) {
        den += "(" + to_string(g, opt) + ")";
    }
    if (!den.empty()) {
        out += " / " + den;
    }
    return out;
}

} // namespace degloci
