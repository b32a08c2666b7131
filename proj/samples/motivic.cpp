// K-theoretic Phi classes and the motivic Segre sieve for 2x2 forms.
#include <iostream>

#include "degloci/core/format.hpp"
#include "degloci/kclasses/ktheory.hpp"

using namespace degloci;

int main()
{
    for (unsigned r : {0u, 2u}) {
        std::cout << "Phi_K(2," << r << ") = " << to_string(phi_wedge_k(2, r)) << "\n";
    }
    const QSpec q = parse_qspec("-y");
    for (unsigned r : {0u, 2u}) {
        std::cout << "mS(2," << r << ") [" << q.describe() << "] = " << to_string(motivic_segre_sieve(2, r, q)) << "\n";
    }
    const auto e = q_euler_numbers(6);
    for (unsigned i = 0; i <= 6; i += 2) {
        std::cout << "E" << i << "(q) = " << to_string(e[i]) << "\n";
    }
}
