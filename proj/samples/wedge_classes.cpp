// CSM and SSM classes of the skew-symmetric corank loci for n = 4.
#include <iostream>

#include "degloci/classes/class_expr.hpp"
#include "degloci/classes/interp.hpp"
#include "degloci/classes/sieve.hpp"

using namespace degloci;

int main()
{
    const unsigned n = 4, D = 6;
    for (unsigned r : orbit_coranks(Family::Wedge, n)) {
        const OrbitId o{Family::Wedge, n, r};
        const WFunction w = w_function(o);
        std::cout << to_string(o) << "\n";
        std::cout << "  csm  = " << to_string(w.chern(), FormatOptions{chern_weights(n)}) << "\n";
        std::cout << "  ssm  = " << to_string(truncate(ssm_sieve_schur(o, false, D), D)) << " + ...\n";
    }
}
