#pragma once

#include <vector>

#include "degloci/classes/interp.hpp"

namespace degloci
{

// Local Euler obstruction of the skew-symmetric orbit closure of corank r,
// as its values on the orbits of corank r, r+2, ..., n.
inline std::vector<Rational> euler_obstruction_wedge(unsigned n, unsigned r)
{
    validate(OrbitId{Family::Wedge, n, r});
    std::vector<Rational> out;
    for (unsigned k = 0; r + 2 * k <= n; ++k) {
        out.push_back(binomial(r / 2 + k, r / 2));
    }
    return out;
}

// Chern-Mather class of the orbit closure: the Euler-obstruction weighted sum
// of the orbit CSM classes.
inline SchurExpansion chern_mather_wedge(unsigned n, unsigned r)
{
    const auto eu = euler_obstruction_wedge(n, r);
    SchurExpansion s;
    for (unsigned k = 0; k < eu.size(); ++k) {
        s = s + scaled(w_function(OrbitId{Family::Wedge, n, r + 2 * k}).schur, eu[k]);
    }
    return s;
}

} // namespace degloci
