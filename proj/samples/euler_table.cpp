// Euler characteristics of linear sections of symmetric determinantal loci.
#include <iostream>

#include "degloci/projective/projective.hpp"

using namespace degloci;

int main()
{
    for (unsigned n = 2; n <= 4; ++n) {
        std::cout << "sym n=" << n << "\n";
        for (const auto &row : euler_char_table(Family::Sym, n)) {
            std::cout << "  r=" << row.r << ":";
            for (const auto &x : row.chi) {
                std::cout << " " << x;
            }
            std::cout << "\n";
        }
        for (unsigned r = 0; r < n; ++r) {
            const auto inv = closed_invariants(OrbitId{Family::Sym, n, r});
            std::cout << "  closure r=" << r << ": codim " << inv.codim << ", degree " << inv.degree << "\n";
        }
    }
}
