#pragma once

#include <string>
#include <vector>

#include "degloci/core/coefficients.hpp"
#include "degloci/core/polynomial.hpp"
#include "degloci/core/series.hpp"

namespace degloci
{

enum class Family
{
    Wedge,
    Sym
};

// Largest n handled: the alpha variables plus bookkeeping must fit in the
// seven-variable monomial keys.
inline constexpr unsigned max_n = 6;

inline std::string family_name(Family f)
{
    return f == Family::Wedge ? "wedge" : "sym";
}

inline Family parse_family(const std::string &s)
{
    if (s == "wedge" || s == "skew") {
        return Family::Wedge;
    }
    if (s == "sym" || s == "symmetric") {
        return Family::Sym;
    }
    throw error("unknown family '" + s + "' (expected wedge or sym)");
}

struct OrbitId
{
    Family family;
    unsigned n;
    unsigned r;

    friend bool operator==(const OrbitId &, const OrbitId &) = default;
};

inline std::string to_string(const OrbitId &o)
{
    return family_name(o.family) + "(" + std::to_string(o.n) + "," + std::to_string(o.r) + ")";
}

inline void validate(const OrbitId &o)
{
    if (o.n == 0) {
        throw invalid_orbit("n must be positive");
    }
    if (o.n > max_n) {
        throw out_of_scope("n = " + std::to_string(o.n) + " exceeds the supported maximum " + std::to_string(max_n));
    }
    if (o.r > o.n) {
        throw invalid_orbit("corank r = " + std::to_string(o.r) + " exceeds n = " + std::to_string(o.n));
    }
    if (o.family == Family::Wedge && (o.n - o.r) % 2 != 0) {
        throw invalid_orbit("skew-symmetric orbit needs n - r even, got n = " + std::to_string(o.n) +
                            ", r = " + std::to_string(o.r));
    }
}

// Coranks of all orbits of the representation, ascending.
inline std::vector<unsigned> orbit_coranks(Family f, unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned r = (f == Family::Wedge ? n % 2 : 0); r <= n; r += (f == Family::Wedge ? 2 : 1)) {
        out.push_back(r);
    }
    return out;
}

// Complex dimension of the representation.
inline unsigned ambient_dim(Family f, unsigned n)
{
    return f == Family::Wedge ? n * (n - 1) / 2 : n * (n + 1) / 2;
}

inline unsigned codim(const OrbitId &o)
{
    return o.family == Family::Wedge ? o.r * (o.r + 1) / 2 - o.r : o.r * (o.r + 1) / 2;
}

// Weights a_i + a_j of the representation (i < j, or i <= j for Sym).
inline std::vector<std::pair<unsigned, unsigned>> weight_pairs(Family f, unsigned n)
{
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = (f == Family::Wedge ? i + 1 : i); j < n; ++j) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

// Total Chern class c(V) = prod (1 + a_i + a_j) on alpha_vars(n).
inline Poly total_chern(Family f, unsigned n)
{
    const Vars v = alpha_vars(n);
    Poly r(v, Rational(1));
    for (auto [i, j] : weight_pairs(f, n)) {
        r *= linear_form<Rational>(v, Rational(1), {{i, Rational(1)}, {j, Rational(1)}});
    }
    return r;
}

// s / c(V) truncated at `bound`, by successive division by linear unit
// factors.
template <class C>
Polynomial<C> divide_by_total_chern(const Polynomial<C> &s, Family f, unsigned bound)
{
    Polynomial<C> q = s.truncated(bound);
    for (auto [i, j] : weight_pairs(f, static_cast<unsigned>(s.nvars()))) {
        q = divide_unit_linear(q, linear_form<C>(s.vars(), C(0), {{i, C(1)}, {j, C(1)}}), bound);
    }
    return q;
}

} // namespace degloci
