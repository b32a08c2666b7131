#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degloci/classes/axioms.hpp"
#include "degloci/classes/class_expr.hpp"
#include "degloci/classes/interp.hpp"
#include "degloci/classes/mather.hpp"
#include "degloci/classes/sieve.hpp"
#include "degloci/kclasses/ktheory.hpp"
#include "degloci/projective/projective.hpp"
#include "degloci/published.hpp"
#include "degloci/verify.hpp"

using namespace degloci;
using json = nlohmann::ordered_json;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_verify = 2;

enum class Format
{
    Text,
    Json,
    Latex
};

struct Common
{
    std::string family = "wedge";
    unsigned n = 2;
    unsigned r = 0;
    std::string format = "text";
    std::optional<unsigned> trunc;
    std::string basis = "chern";
    bool closure = false;
};

Format parse_format(const std::string &s)
{
    if (s == "text") {
        return Format::Text;
    }
    if (s == "json") {
        return Format::Json;
    }
    if (s == "latex") {
        return Format::Latex;
    }
    throw error("unknown --format '" + s + "' (expected text, json or latex)");
}

std::string frac(const Rational &c)
{
    return to_fraction_string(c);
}

json terms_json(const ClassExpr &c)
{
    json terms = json::array();
    if (c.basis == Basis::Schur) {
        for (const auto &[l, v] : c.schur) {
            terms.push_back({{"key", l.parts()}, {"coeff", frac(v)}});
        }
        return terms;
    }
    FormatOptions opt;
    if (c.basis == Basis::Chern) {
        opt.weights = chern_weights(c.n);
    }
    for (const auto &t : display_order(c.poly, opt.weights)) {
        terms.push_back({{"key", key::to_exponents(t.key, c.n)}, {"coeff", frac(t.coeff)}});
    }
    return terms;
}

void emit_warnings_text(const std::vector<std::string> &warnings)
{
    for (const auto &w : warnings) {
        std::cerr << "warning: " << w << "\n";
    }
}

// Emits a class document in the requested format.
void emit_class(const ClassExpr &c, const std::string &kind, Format fmt, const std::vector<std::string> &warnings,
                json extra = json::object())
{
    if (fmt == Format::Json) {
        json doc;
        doc["family"] = c.orbit ? family_name(c.orbit->family) : "";
        doc["n"] = c.n;
        doc["r"] = c.orbit ? static_cast<int>(c.orbit->r) : -1;
        doc["kind"] = kind;
        doc["basis"] = basis_name(c.basis);
        doc["trunc"] = c.bound ? static_cast<int>(*c.bound) : -1;
        doc["terms"] = terms_json(c);
        for (auto &[k, v] : extra.items()) {
            doc[k] = v;
        }
        doc["warnings"] = warnings;
        std::cout << doc.dump(2) << "\n";
        return;
    }
    emit_warnings_text(warnings);
    std::cout << to_string(c, fmt == Format::Latex) << "\n";
}

OrbitId orbit_of(const Common &o)
{
    return OrbitId{parse_family(o.family), o.n, o.r};
}

std::vector<unsigned> closure_coranks(const OrbitId &o)
{
    std::vector<unsigned> out;
    for (unsigned m : orbit_coranks(o.family, o.n)) {
        if (m >= o.r) {
            out.push_back(m);
        }
    }
    return out;
}

std::vector<std::string> sym_warnings(const OrbitId &o)
{
    if (o.family == Family::Sym && o.r > 0) {
        return {"lowest Schur term of the symmetric class has coefficient 2^r = " + std::to_string(1u << o.r) +
                "; the published normalization of the fundamental class states 2^(r-1)"};
    }
    return {};
}

// CSM (exact or truncated) or SSM (truncated) class in the Schur basis.
SchurExpansion class_schur(const OrbitId &o, const std::string &kind, const std::string &route, bool closure,
                           std::optional<unsigned> trunc)
{
    const std::vector<unsigned> ranks = closure ? closure_coranks(o) : std::vector<unsigned>{o.r};
    if (kind == "csm") {
        if (route == "interp") {
            SchurExpansion s;
            for (unsigned m : ranks) {
                s = s + w_function(OrbitId{o.family, o.n, m}).schur;
            }
            return s;
        }
        // ssm to the top degree of the CSM class times c(V) recovers it exactly.
        unsigned D = 0;
        for (unsigned m : ranks) {
            D = std::max(D, w_top_degree(OrbitId{o.family, o.n, m}));
        }
        if (trunc) {
            D = std::min(D, *trunc);
        }
        const Poly ssm = schur_to_alpha(ssm_sieve_schur(o, closure, D), o.n);
        return to_schur_basis(multiply(ssm, total_chern(o.family, o.n), D));
    }
    if (kind != "ssm") {
        throw error("unknown --kind '" + kind + "' (expected csm or ssm)");
    }
    const unsigned D = trunc.value_or(6);
    if (route == "sieve") {
        return ssm_sieve_schur(o, closure, D);
    }
    SchurExpansion csm;
    for (unsigned m : ranks) {
        csm = csm + w_function(OrbitId{o.family, o.n, m}).schur;
    }
    return to_schur_basis(divide_by_total_chern(schur_to_alpha(csm, o.n), o.family, D));
}

Poly xi_poly(const std::vector<Rational> &coeffs)
{
    const Vars xi = single_var("xi");
    std::vector<Poly::Term> ts;
    for (unsigned i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) != 0) {
            ts.push_back({key::from_exponents(std::vector<unsigned>{i}), coeffs[i]});
        }
    }
    return Poly::from_terms(xi, std::move(ts));
}

json rationals_json(const std::vector<Rational> &v)
{
    json a = json::array();
    for (const auto &x : v) {
        a.push_back(frac(x));
    }
    return a;
}

std::string latex_row(const std::vector<Rational> &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? " & " : "") + v[i].get_str();
    }
    return s;
}

void add_orbit_options(CLI::App *cmd, Common &c, bool with_r = true)
{
    cmd->add_option("--family", c.family, "wedge or sym")->required();
    cmd->add_option("--n", c.n, "matrix size")->required();
    if (with_r) {
        cmd->add_option("--r", c.r, "corank")->required();
    }
    cmd->add_option("--format", c.format, "text, json or latex");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Characteristic classes of skew-symmetric and symmetric matrix orbits"};
    app.require_subcommand(1);
    Common c;
    std::string kind = "csm", route = "interp", suite = "core", qspec = "-y", what = "segre";
    unsigned max_n = 4, euler_max = 10;

    auto *cls = app.add_subcommand("class", "CSM or SSM class of an orbit or orbit closure");
    add_orbit_options(cls, c);
    cls->add_option("--kind", kind, "csm or ssm");
    cls->add_option("--route", route, "sieve or interp");
    cls->add_option("--basis", c.basis, "chern, schur or alpha");
    cls->add_option("--trunc", c.trunc, "degree bound (default: exact for csm, 6 for ssm)");
    cls->add_flag("--closure", c.closure, "class of the orbit closure");

    auto *phi = app.add_subcommand("phi", "Phi class of an orbit");
    add_orbit_options(phi, c);
    phi->add_option("--basis", c.basis, "chern, schur or alpha");
    phi->add_option("--trunc", c.trunc, "degree bound (default 6)");

    auto *proj = app.add_subcommand("projective", "non-equivariant class of the projectivized orbit");
    add_orbit_options(proj, c);
    proj->add_option("--kind", kind, "csm or ssm");
    proj->add_flag("--closure", c.closure, "class of the orbit closure");

    auto *table = app.add_subcommand("table", "Euler characteristics of general linear sections");
    add_orbit_options(table, c, false);
    table->add_flag("--closure", c.closure, "rows for orbit closures");

    auto *invariants = app.add_subcommand("invariants", "codimension, degree and Euler characteristic");
    add_orbit_options(invariants, c);

    auto *mather = app.add_subcommand("mather", "Chern-Mather class of a skew-symmetric orbit closure");
    mather->add_option("--n", c.n, "matrix size")->required();
    mather->add_option("--r", c.r, "corank")->required();
    mather->add_option("--basis", c.basis, "chern, schur or alpha");
    mather->add_option("--format", c.format, "text, json or latex");

    auto *kth = app.add_subcommand("ktheory", "K-theoretic Phi or motivic Segre class (skew-symmetric, n <= 4)");
    kth->add_option("--n", c.n, "matrix size")->required();
    kth->add_option("--r", c.r, "corank")->required();
    kth->add_option("--what", what, "phi or segre");
    kth->add_option("--q", qspec, "specialization of q: -y (default), y, or a rational number");
    kth->add_option("--format", c.format, "text, json or latex");

    auto *euler = app.add_subcommand("euler", "Euler numbers and q-Euler numbers");
    euler->add_option("--max", euler_max, "largest index");
    euler->add_option("--format", c.format, "text, json or latex");

    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "core, axioms, cross or conjectures");
    verify->add_option("--max-n", max_n, "largest n");
    verify->add_option("--format", c.format, "text, json or latex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const Format fmt = parse_format(c.format);

        if (cls->parsed()) {
            const OrbitId o = orbit_of(c);
            validate(o);
            if (route != "sieve" && route != "interp") {
                throw error("unknown --route '" + route + "' (expected sieve or interp)");
            }
            const SchurExpansion s = class_schur(o, kind, route, c.closure, c.trunc);
            std::optional<unsigned> bound = kind == "ssm" ? std::optional<unsigned>(c.trunc.value_or(6)) : c.trunc;
            const ClassExpr e = in_basis(ClassExpr::from_schur(s, o.n, o, bound), parse_basis(c.basis));
            emit_class(e, kind, fmt, sym_warnings(o), {{"closure", c.closure}});
            return exit_ok;
        }

        if (phi->parsed()) {
            const OrbitId o = orbit_of(c);
            const unsigned D = c.trunc.value_or(6);
            const SchurExpansion s = phi_schur(o, D);
            std::vector<std::string> warnings;
            if (auto printed = published::phi_wedge_series(o.n, o.r); printed && o.family == Family::Wedge) {
                const Poly computed = schur_to_chern(s, o.n);
                const unsigned upto = std::min(D, published::phi_wedge_series_degree);
                for (const auto &m : published::compare_terms(computed, parse_poly(*printed, chern_vars(o.n)), upto)) {
                    warnings.push_back("published value differs: " + published::describe(m));
                }
            }
            const ClassExpr e = in_basis(ClassExpr::from_schur(s, o.n, o, D), parse_basis(c.basis));
            emit_class(e, "phi", fmt, warnings);
            return exit_ok;
        }

        if (proj->parsed()) {
            const OrbitId o = orbit_of(c);
            const ClassKind k = kind == "ssm" ? ClassKind::Ssm : kind == "csm" ? ClassKind::Csm
                                                                               : throw error("unknown --kind '" + kind + "'");
            const ProjClass p = c.closure ? projectivize_closure(o, k) : projectivize(o, k);
            const Poly x = xi_poly(p.coeffs);
            if (fmt == Format::Json) {
                json terms = json::array();
                for (unsigned i = 0; i < p.N; ++i) {
                    if (sgn(p.coeffs[i]) != 0) {
                        terms.push_back({{"key", {i}}, {"coeff", frac(p.coeffs[i])}});
                    }
                }
                json doc{{"family", family_name(o.family)}, {"n", o.n},         {"r", o.r},
                         {"kind", kind},                   {"basis", "xi"},     {"trunc", p.N},
                         {"terms", terms},                 {"closure", c.closure}, {"warnings", json::array()}};
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << to_string(x, FormatOptions{{}, fmt == Format::Latex}) << "\n";
            }
            return exit_ok;
        }

        if (table->parsed()) {
            const Family f = parse_family(c.family);
            const auto rows = euler_char_table(f, c.n, c.closure);
            if (fmt == Format::Json) {
                json jr = json::array();
                for (const auto &row : rows) {
                    jr.push_back({{"r", row.r}, {"chi", rationals_json(row.chi)}});
                }
                json doc{{"family", family_name(f)}, {"n", c.n},       {"kind", "table"},
                         {"closure", c.closure},    {"rows", jr},     {"warnings", json::array()}};
                std::cout << doc.dump(2) << "\n";
            } else if (fmt == Format::Latex) {
                const std::size_t cols = rows.empty() ? 0 : rows.front().chi.size();
                std::cout << "\\begin{tabular}{r|" << std::string(cols, 'r') << "}\n";
                for (const auto &row : rows) {
                    std::cout << "$r=" << row.r << "$ & " << latex_row(row.chi) << " \\\\\n";
                }
                std::cout << "\\end{tabular}\n";
            } else {
                for (const auto &row : rows) {
                    std::cout << "r=" << row.r << ":";
                    for (const auto &x : row.chi) {
                        std::cout << " " << x.get_str();
                    }
                    std::cout << "\n";
                }
            }
            return exit_ok;
        }

        if (invariants->parsed()) {
            const OrbitId o = orbit_of(c);
            const auto inv = closed_invariants(o);
            std::optional<Rational> degree_cls, chi_cls;
            if (o.r != o.n) {
                const ProjClass cl = projectivize_closure(o, ClassKind::Csm);
                degree_cls = cl.coeffs.at(inv.codim);
                chi_cls = projectivize(o, ClassKind::Csm).coeffs.back();
            }
            const bool agree = !degree_cls || (*degree_cls == inv.degree && *chi_cls == inv.euler_char);
            if (fmt == Format::Json) {
                json doc{{"family", family_name(o.family)},
                         {"n", o.n},
                         {"r", o.r},
                         {"kind", "invariants"},
                         {"codim", inv.codim},
                         {"degree", frac(inv.degree)},
                         {"euler_char", frac(inv.euler_char)},
                         {"agrees_with_classes", agree},
                         {"warnings", json::array()}};
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "codim " << inv.codim << "\ndegree " << inv.degree.get_str() << "\neuler_char "
                          << inv.euler_char.get_str() << "\n";
                if (o.r == o.n) {
                    std::cout << "(the projectivized orbit is empty)\n";
                }
            }
            return agree ? exit_ok : exit_verify;
        }

        if (mather->parsed()) {
            const OrbitId o{Family::Wedge, c.n, c.r};
            const auto eu = euler_obstruction_wedge(c.n, c.r);
            const ClassExpr e = in_basis(ClassExpr::from_schur(chern_mather_wedge(c.n, c.r), c.n, o),
                                         parse_basis(c.basis));
            emit_class(e, "mather", fmt, {}, {{"closure", true}, {"euler_obstruction", rationals_json(eu)}});
            return exit_ok;
        }

        if (kth->parsed()) {
            const QSpec q = parse_qspec(qspec);
            LaurentFraction f = what == "phi"     ? phi_wedge_k(c.n, c.r)
                                : what == "segre" ? motivic_segre_sieve(c.n, c.r, q)
                                                  : throw error("unknown --what '" + what + "' (expected phi or segre)");
            std::vector<std::string> warnings;
            if (what == "segre") {
                warnings.push_back("sieve coefficients use " + q.describe() +
                                   "; the published specialization of q is ambiguous");
            }
            if (fmt == Format::Json) {
                json den = json::array();
                for (const auto &d : f.denominator_factors()) {
                    den.push_back(to_string(d));
                }
                json doc{{"family", "wedge"},
                         {"n", c.n},
                         {"r", c.r},
                         {"kind", what == "phi" ? "phi_k" : "motivic"},
                         {"q", q.describe()},
                         {"numerator", to_string(f.numerator())},
                         {"denominator", den},
                         {"shift", f.shift()},
                         {"value", to_string(f)},
                         {"warnings", warnings}};
                std::cout << doc.dump(2) << "\n";
            } else {
                emit_warnings_text(warnings);
                std::cout << to_string(f, FormatOptions{{}, fmt == Format::Latex}) << "\n";
            }
            return exit_ok;
        }

        if (euler->parsed()) {
            const auto e = euler_numbers(euler_max);
            const auto eq = q_euler_numbers(euler_max);
            std::vector<std::string> warnings;
            if (euler_max >= 10 && e[10] != published::euler_10) {
                warnings.push_back("E10 computed " + e[10].get_str() + ", published value " +
                                   published::euler_10.get_str());
            }
            if (fmt == Format::Json) {
                json qj = json::array();
                for (const auto &p : eq) {
                    qj.push_back(to_string(p));
                }
                json doc{{"kind", "euler"}, {"values", rationals_json(e)}, {"q_values", qj}, {"warnings", warnings}};
                std::cout << doc.dump(2) << "\n";
            } else {
                emit_warnings_text(warnings);
                for (unsigned i = 0; i <= euler_max; ++i) {
                    std::cout << "E" << i << " = " << e[i].get_str() << "    E" << i << "(q) = " << to_string(eq[i])
                              << "\n";
                }
            }
            return exit_ok;
        }

        if (verify->parsed()) {
            const verify::Suite s = verify::run_suite(suite, max_n);
            const bool ok = verify::all_passed(s);
            if (fmt == Format::Json) {
                json checks = json::array();
                for (const auto &r : s) {
                    checks.push_back(
                        {{"name", r.name}, {"passed", r.passed}, {"report_only", r.report_only}, {"detail", r.detail}});
                }
                std::cout << json{{"suite", suite}, {"max_n", max_n}, {"passed", ok}, {"checks", checks}}.dump(2)
                          << "\n";
            } else {
                for (const auto &r : s) {
                    std::cout << (r.report_only ? "REPORT " : r.passed ? "PASS " : "FAIL ") << r.name << ": "
                              << r.detail << "\n";
                }
            }
            return ok ? exit_ok : exit_verify;
        }
    } catch (const degloci::error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
