#pragma once

#include <optional>
#include <string>

#include "degloci/classes/orbit.hpp"
#include "degloci/core/format.hpp"
#include "degloci/symfun/schur.hpp"

namespace degloci
{

enum class Basis
{
    Alpha,
    Chern,
    Schur
};

inline std::string basis_name(Basis b)
{
    switch (b) {
    case Basis::Alpha:
        return "alpha";
    case Basis::Chern:
        return "chern";
    default:
        return "schur";
    }
}

inline Basis parse_basis(const std::string &s)
{
    if (s == "alpha") {
        return Basis::Alpha;
    }
    if (s == "chern") {
        return Basis::Chern;
    }
    if (s == "schur") {
        return Basis::Schur;
    }
    throw error("unknown basis '" + s + "' (expected alpha, chern or schur)");
}

// A symmetric class in n variables in one of three bases. `poly` holds the
// alpha or chern payload, `schur` the Schur payload. `bound` is the
// truncation degree, empty for exact classes.
struct ClassExpr
{
    Basis basis = Basis::Schur;
    unsigned n = 0;
    Poly poly{alpha_vars(0)};
    SchurExpansion schur;
    std::optional<OrbitId> orbit;
    std::optional<unsigned> bound;

    static ClassExpr from_schur(SchurExpansion s, unsigned n, std::optional<OrbitId> o = {},
                                std::optional<unsigned> bound = {})
    {
        ClassExpr c;
        c.basis = Basis::Schur;
        c.n = n;
        c.schur = bound ? truncate(restrict_length(s, n), *bound) : restrict_length(s, n);
        c.orbit = o;
        c.bound = bound;
        return c;
    }

    static ClassExpr from_alpha(const Poly &p, std::optional<OrbitId> o = {}, std::optional<unsigned> bound = {})
    {
        ClassExpr c;
        c.basis = Basis::Alpha;
        c.n = static_cast<unsigned>(p.nvars());
        c.poly = bound ? p.truncated(*bound) : p;
        c.orbit = o;
        c.bound = bound;
        return c;
    }
};

// Same class in another basis.
inline ClassExpr in_basis(const ClassExpr &c, Basis b)
{
    if (c.basis == b) {
        return c;
    }
    SchurExpansion s;
    switch (c.basis) {
    case Basis::Schur:
        s = c.schur;
        break;
    case Basis::Alpha:
        s = to_schur_basis(c.poly);
        break;
    case Basis::Chern:
        s = to_schur_basis(chern_to_alpha(c.poly, c.n, alpha_vars(c.n)));
        break;
    }
    ClassExpr out = c;
    out.basis = b;
    out.schur.clear();
    out.poly = Poly(alpha_vars(0));
    switch (b) {
    case Basis::Schur:
        out.schur = std::move(s);
        break;
    case Basis::Alpha:
        out.poly = schur_to_alpha(s, c.n);
        break;
    case Basis::Chern:
        out.poly = schur_to_chern(s, c.n);
        break;
    }
    return out;
}

inline std::string to_string(const ClassExpr &c, bool latex = false)
{
    if (c.basis == Basis::Schur) {
        return to_string(c.schur, latex);
    }
    FormatOptions opt;
    opt.latex = latex;
    if (c.basis == Basis::Chern) {
        opt.weights = chern_weights(c.n);
    }
    return to_string(c.poly, opt);
}

} // namespace degloci
