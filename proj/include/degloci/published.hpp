#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degloci/classes/orbit.hpp"
#include "degloci/core/format.hpp"
#include "degloci/core/parse.hpp"

namespace degloci::published
{

// Printed series of the skew-symmetric Phi classes for n = 3, in c1, c2, c3,
// through degree 7, as they appear in print (including the suspect terms).
inline std::optional<std::string> phi_wedge_series(unsigned n, unsigned r)
{
    if (n == 3 && r == 1) {
        return "1 + 2c1c2 - 2c3 - 4c1^2c2 + 4c1c3 + 4c1^3c2 + 2c1c2^2 - 4c1^2c3 - 2c2c3"
               " - 10c1^2c2^2 + 12c1c2c3 - 2c3^2"
               " - 8c1^5c2 + 24c1^3c2^2 + 2c1c2^3 + 8c1^4c3 - 32c1^2c2c3 + 8c1c3^2";
    }
    if (n == 3 && r == 3) {
        return "c1c2 - c3 - 2c1^2c2 + 2c1c3 + 2c1^3c2 + c1c2^2 - 2c1^2c3 - c2c3"
               " - 5c1^2c2^2 + 6c1c2c3 - c3^2"
               " - 4c1^5c2 + 12c1^3c2 + c1c2^3 + 4c1^4c3 - 16c1^2c2c3 - c2^2c3 + 4c1c3^2";
    }
    return std::nullopt;
}

inline constexpr unsigned phi_wedge_series_degree = 7;

// Printed E_10.
inline const Rational euler_10{-50512};

struct TermMismatch
{
    std::string monomial;
    Rational computed;
    Rational printed;
};

// Monomials (in c1..cn, up to weighted degree `max_degree`) where the two
// chern polynomials differ.
inline std::vector<TermMismatch> compare_terms(const Poly &computed, const Poly &printed, unsigned max_degree)
{
    const unsigned n = static_cast<unsigned>(computed.nvars());
    const auto w = chern_weights(n);
    auto weighted = [&](Key k) {
        unsigned d = 0;
        for (unsigned i = 0; i < n; ++i) {
            d += w[i] * key::exponent(k, i);
        }
        return d;
    };
    const Poly diff = computed - printed;
    std::vector<TermMismatch> out;
    for (const auto &t : display_order(diff, w)) {
        if (weighted(t.key) > max_degree) {
            continue;
        }
        out.push_back({detail::monomial_string(t.key, *computed.vars(), false), computed.coefficient(t.key),
                       printed.coefficient(t.key)});
    }
    return out;
}

inline std::string describe(const TermMismatch &m)
{
    return m.monomial + ": computed " + m.computed.get_str() + ", published " + m.printed.get_str();
}

} // namespace degloci::published
