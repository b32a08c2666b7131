#include <iostream>
#include <string>
#include <vector>

#include "degloci/verify.hpp"

using namespace degloci;
using verify::CheckResult;

namespace
{

struct Criterion
{
    int id;
    std::string title;
    std::vector<CheckResult> parts;
    bool report_only = false;
};

bool print(const Criterion &c)
{
    bool ok = true;
    std::string detail;
    for (const auto &p : c.parts) {
        ok = ok && p.passed;
        detail += (detail.empty() ? "" : " | ") + p.detail;
    }
    const char *tag = c.report_only ? (ok ? "REPORT" : "REPORT(finding)") : (ok ? "PASS" : "FAIL");
    std::cout << tag << " " << c.id << " " << c.title << ": " << detail << "\n";
    return ok || c.report_only;
}

} // namespace

int main()
{
    std::vector<std::string> divergences, euler_warnings, k_notes;
    std::vector<Criterion> all;
    all.push_back({1, "printed W-functions", {verify::published_w_functions()}});
    all.push_back({2,
                   "sieve examples",
                   {verify::published_sieve_examples(), verify::published_phi_wedge3(&divergences)}});
    all.push_back({3, "cross-route equality (n<=4, D=6)", {verify::cross_route(4, 6)}});
    all.push_back({4, "Schur expansions", {verify::published_schur_expansions()}});
    all.push_back({5, "interpolation axioms (wedge, n<=5)", {verify::axioms(5)}});
    all.push_back({6, "normalization (n<=5, D=6)", {verify::normalization(5, 6)}});
    all.push_back({7, "projective layer (n<=6)", {verify::projective_layer(6)}});
    all.push_back({8, "Euler numbers", {verify::euler_layer(&euler_warnings)}});
    all.push_back({9, "Mather layer (n<=6)", {verify::mather_layer(6)}});
    all.push_back({10, "K layer", {verify::k_layer(&k_notes)}});
    all.push_back({11, "sign alternation (n<=4, D=6)", {verify::sign_alternation(4, 6)}, true});

    bool ok = true;
    for (const auto &c : all) {
        ok = print(c) && ok;
    }
    for (const auto &w : euler_warnings) {
        std::cout << "warning: " << w << "\n";
    }
    for (const auto &d : divergences) {
        std::cout << "warning: published Phi term differs: " << d << "\n";
    }
    for (const auto &n : k_notes) {
        std::cout << "note: " << n << "\n";
    }
    return ok ? 0 : 1;
}
