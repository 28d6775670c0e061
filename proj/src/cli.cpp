#include "ncdisc/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ncdisc/algebra_file.hpp"
#include "ncdisc/automorphisms.hpp"
#include "ncdisc/discriminant.hpp"
#include "ncdisc/errors.hpp"
#include "ncdisc/expr.hpp"
#include "ncdisc/parallel.hpp"
#include "ncdisc/reference_checks.hpp"

namespace ncdisc {

namespace {

using json = nlohmann::ordered_json;

struct CliOptions {
    std::string algebra;
    std::string algebra_b;
    std::string expr;
    std::vector<std::string> exprs;
    std::string format = "text";
    long max_rank = 64;
    int threads = 1;
    int n = 2;
    bool diagnostic = false;
};

// dominance is probed for the completeness label only when the center is
// small enough that the discriminant is safely computable
constexpr long kAutDominanceRankCap = 32;

bool structured(const CliOptions& o) { return o.format == "structured"; }

CenterSpec center_of(const LoadedAlgebra& la, long max_rank) {
    if (!la.center_powers)
        throw PreconditionViolationError(
            "the algebra declares no center_powers");
    return make_center(la.algebra, *la.center_powers, max_rank);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int do_nf(const CliOptions& o, std::ostream& out) {
    LoadedAlgebra la = load_algebra(o.algebra);
    NCPoly p = parse_ncpoly(o.expr, la.algebra);
    if (structured(o)) {
        emit(out, json{{"subcommand", "nf"},
                       {"inputs",
                        {{"algebra", o.algebra}, {"expr", o.expr}}},
                       {"results", {{"normal_form", p.to_string()}}}});
    } else {
        out << p.to_string() << "\n";
    }
    return 0;
}

int do_trace(const CliOptions& o, std::ostream& out) {
    LoadedAlgebra la = load_algebra(o.algebra);
    CenterSpec c = center_of(la, o.max_rank);
    NCPoly p = parse_ncpoly(o.expr, la.algebra);
    CommPoly t = regular_trace(c, p);
    if (structured(o)) {
        emit(out, json{{"subcommand", "trace"},
                       {"inputs",
                        {{"algebra", o.algebra}, {"expr", o.expr}}},
                       {"results",
                        {{"trace", t.to_string()},
                         {"rank", c.rank}}}});
    } else {
        out << t.to_string() << "\n";
    }
    return 0;
}

int do_disc(const CliOptions& o, std::ostream& out) {
    LoadedAlgebra la = load_algebra(o.algebra);
    CenterSpec c = center_of(la, o.max_rank);
    DiscriminantResult d = discriminant(c);
    if (structured(o)) {
        emit(out, json{{"subcommand", "disc"},
                       {"inputs", {{"algebra", o.algebra}}},
                       {"results",
                        {{"raw", d.raw_det.to_string()},
                         {"principal", d.principal.to_string()},
                         {"rank", d.rank},
                         {"dominating_sufficient", d.dominating_sufficient}}}});
    } else {
        out << d.raw_det.to_string() << "\n";
        out << "principal: " << d.principal.to_string() << "\n";
        out << "rank: " << d.rank << "\n";
        out << "dominating(sufficient): "
            << (d.dominating_sufficient ? "true" : "false") << "\n";
    }
    return 0;
}

int do_dominating(const CliOptions& o, std::ostream& out) {
    LoadedAlgebra la = load_algebra(o.algebra);
    CommPoly f = parse_commpoly(o.expr, la.algebra->gen_count(),
                                la.algebra->field());
    bool verdict = is_dominating_sufficient(f);
    if (structured(o)) {
        emit(out, json{{"subcommand", "dominating"},
                       {"inputs",
                        {{"algebra", o.algebra}, {"expr", o.expr}}},
                       {"results", {{"dominating_sufficient", verdict}}}});
    } else {
        out << "dominating(sufficient): " << (verdict ? "true" : "false")
            << "\n";
    }
    return 0;
}

int do_aut(const CliOptions& o, std::ostream& out) {
    LoadedAlgebra la = load_algebra(o.algebra);
    AutGroupDescription d = enumerate_monomial_automorphisms(la.algebra);
    bool dominating = false;
    if (la.center_powers) {
        try {
            CenterSpec c = center_of(
                la, std::min(o.max_rank, kAutDominanceRankCap));
            dominating = discriminant(c).dominating_sufficient;
        } catch (const EngineError&) {
            dominating = false;
        }
    }
    d.completeness = completeness_label(dominating);
    if (structured(o)) {
        json fams = json::array();
        for (const auto& fam : d.families) {
            json comps = json::array();
            for (const auto& comp : fam.components) {
                json jc;
                json verts = json::array();
                for (int v : comp.vertices) verts.push_back(v + 1);
                jc["vertices"] = verts;
                jc["pinned"] = comp.pinned;
                if (comp.pinned) {
                    json vals = json::array();
                    for (const auto& lv : comp.lambda_values)
                        vals.push_back(lv.to_string());
                    jc["lambda_values"] = vals;
                }
                comps.push_back(jc);
            }
            json sigma = json::array();
            for (int s : fam.sigma) sigma.push_back(s + 1);
            json jf{{"sigma", sigma},
                    {"torus_dim", fam.torus_dim()},
                    {"components", comps}};
            if (fam.torus_dim() == 0) {
                json mems = json::array();
                for (const auto& m : explicit_member_data(
                         fam, la.algebra->gen_count())) {
                    json rs = json::array();
                    for (const auto& r : m.r) rs.push_back(r.to_string());
                    mems.push_back(rs);
                }
                jf["explicit_members"] = mems;
            }
            fams.push_back(jf);
        }
        emit(out, json{{"subcommand", "aut"},
                       {"inputs", {{"algebra", o.algebra}}},
                       {"results",
                        {{"structure", d.structure},
                         {"symmetry_index", d.symmetry_index},
                         {"symmetry_rank", d.symmetry_rank},
                         {"rank_uniform", d.rank_uniform},
                         {"completeness", d.completeness},
                         {"families", fams}}}});
    } else {
        out << d.structure << "\n";
        out << "families: " << d.families.size() << "\n";
        out << "completeness: " << d.completeness << "\n";
    }
    return 0;
}

int do_omega(const CliOptions& o, std::ostream& out) {
    LoadedAlgebra la = load_algebra(o.algebra);
    std::vector<NCPoly> factors;
    for (const auto& e : o.exprs)
        factors.push_back(parse_ncpoly(e, la.algebra));
    NCPoly w = antisymmetrized_product(factors);
    if (structured(o)) {
        emit(out, json{{"subcommand", "omega"},
                       {"inputs",
                        {{"algebra", o.algebra}, {"exprs", o.exprs}}},
                       {"results", {{"antisymmetrized", w.to_string()}}}});
    } else {
        out << w.to_string() << "\n";
    }
    return 0;
}

int do_verify412(const CliOptions& o, std::ostream& out) {
    OmegaIdentityReport rep =
        verify_omega_identities(o.n, o.diagnostic, o.max_rank);
    if (structured(o)) {
        json res{{"n", rep.n},
                 {"method", rep.method},
                 {"omega_square_in_center", rep.omega_square_in_center},
                 {"omega_square_matches", rep.omega_square_matches},
                 {"omega_unit", rep.omega_unit.to_string()},
                 {"disc_matches", rep.disc_matches},
                 {"disc_unit", rep.disc_unit.to_string()},
                 {"ok", rep.ok()}};
        if (rep.basis_checked) {
            json units = json::array();
            for (const auto& u : rep.block_units)
                units.push_back(u.to_string());
            res["basis"] = json{
                {"off_blocks_vanish", rep.off_blocks_vanish},
                {"blocks_proportional_to_minors",
                 rep.blocks_proportional_to_minors},
                {"congruence_holds", rep.congruence_holds},
                {"base_change_is_unit", rep.base_change_is_unit},
                {"base_change_det", rep.base_change_det.to_string()},
                {"block_sizes", rep.block_sizes},
                {"block_units", units}};
        }
        emit(out, json{{"subcommand", "verify412"},
                       {"inputs",
                        {{"n", o.n}, {"diagnostic", o.diagnostic}}},
                       {"results", res}});
    } else {
        out << "n: " << rep.n << "\n";
        out << "method: " << rep.method << "\n";
        out << "omega^2 central: "
            << (rep.omega_square_in_center ? "true" : "false") << "\n";
        out << "omega^2 matches reference determinant: "
            << (rep.omega_square_matches ? "true" : "false")
            << " (unit = " << rep.omega_unit.to_string() << ")\n";
        out << "discriminant matches reference^(2^(n-1)): "
            << (rep.disc_matches ? "true" : "false")
            << " (unit = " << rep.disc_unit.to_string() << ")\n";
        if (rep.basis_checked) {
            out << "basis: off-blocks vanish = "
                << (rep.off_blocks_vanish ? "true" : "false")
                << "; blocks match minors = "
                << (rep.blocks_proportional_to_minors ? "true" : "false")
                << "; congruence = "
                << (rep.congruence_holds ? "true" : "false")
                << "; base change det = "
                << rep.base_change_det.to_string() << "\n";
        }
        out << "ok: " << (rep.ok() ? "true" : "false") << "\n";
    }
    return rep.ok() ? 0 : 1;
}

int do_tensor_check(const CliOptions& o, std::ostream& out) {
    LoadedAlgebra la = load_algebra(o.algebra);
    LoadedAlgebra lb = load_algebra(o.algebra_b);
    CenterSpec ca = center_of(la, o.max_rank);
    CenterSpec cb = center_of(lb, o.max_rank);
    UnitComparison r = tensor_discriminant_check(ca, cb, o.max_rank);
    if (structured(o)) {
        emit(out, json{{"subcommand", "tensor-check"},
                       {"inputs",
                        {{"algebra", o.algebra},
                         {"algebra_b", o.algebra_b}}},
                       {"results",
                        {{"holds", r.ok},
                         {"unit", r.unit.to_string()}}}});
    } else {
        out << "holds: " << (r.ok ? "true" : "false") << "\n";
        out << "unit: " << r.unit.to_string() << "\n";
    }
    return r.ok ? 0 : 1;
}

int do_opposite_check(const CliOptions& o, std::ostream& out) {
    LoadedAlgebra la = load_algebra(o.algebra);
    CenterSpec ca = center_of(la, o.max_rank);
    UnitComparison r = opposite_discriminant_check(ca);
    if (structured(o)) {
        emit(out, json{{"subcommand", "opposite-check"},
                       {"inputs", {{"algebra", o.algebra}}},
                       {"results",
                        {{"holds", r.ok},
                         {"unit", r.unit.to_string()}}}});
    } else {
        out << "holds: " << (r.ok ? "true" : "false") << "\n";
        out << "unit: " << r.unit.to_string() << "\n";
    }
    return r.ok ? 0 : 1;
}

int do_suite(const CliOptions& o, std::ostream& out) {
    bool all = true;
    json items = json::array();
    for (const auto& check : reference_checks()) {
        std::ostringstream log;
        bool pass = false;
        std::string error;
        try {
            pass = check.run(log);
        } catch (const EngineError& e) {
            error = e.what();
        }
        all = all && pass;
        if (structured(o)) {
            json item{{"id", check.id},
                      {"description", check.description},
                      {"pass", pass}};
            if (!log.str().empty()) item["log"] = log.str();
            if (!error.empty()) item["error"] = error;
            items.push_back(item);
        } else {
            out << (pass ? "PASS" : "FAIL") << " " << check.id << " - "
                << check.description << "\n";
            if (!pass) {
                if (!error.empty()) out << "  error: " << error << "\n";
                std::istringstream lines(log.str());
                std::string line;
                while (std::getline(lines, line))
                    out << "  " << line << "\n";
            }
        }
    }
    if (structured(o)) {
        emit(out, json{{"subcommand", "paper-suite"},
                       {"results", {{"all_pass", all}, {"checks", items}}}});
    } else {
        out << (all ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CliOptions o;
    CLI::App app{"exact traces, discriminants and automorphism groups of "
                 "PBW algebras with relations x_j x_i = q_ij x_i x_j + a_ij"};
    app.name("ncdisc");
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--max-rank", o.max_rank,
                        "largest admitted free rank of the center");
        sub->add_option("--threads", o.threads, "worker thread count")
            ->check(CLI::PositiveNumber);
        return sub;
    };
    auto with_algebra = [&](CLI::App* sub) {
        sub->add_option("--algebra", o.algebra,
                        "preset (Wn:<n>, kminus1:<n>, Aq:<q>, Ex5.9:<l>) "
                        "or path to an algebra document")
            ->required();
        return sub;
    };

    CLI::App* nf = add_common(app.add_subcommand(
        "nf", "normal form of a generator expression"));
    with_algebra(nf)->add_option("--expr", o.expr, "expression in x1..xn")
        ->required();

    CLI::App* trace = add_common(app.add_subcommand(
        "trace", "regular trace of an element over the declared center"));
    with_algebra(trace)->add_option("--expr", o.expr, "expression in x1..xn")
        ->required();

    CLI::App* disc = add_common(app.add_subcommand(
        "disc", "discriminant over the declared center"));
    with_algebra(disc);

    CLI::App* dom = add_common(app.add_subcommand(
        "dominating", "sufficient dominance criterion for a central "
                      "polynomial"));
    with_algebra(dom)->add_option("--expr", o.expr, "expression in z1..zn")
        ->required();

    CLI::App* aut = add_common(app.add_subcommand(
        "aut", "enumerate monomial automorphisms"));
    with_algebra(aut);

    CLI::App* omega = add_common(app.add_subcommand(
        "omega", "antisymmetrized product of the given elements"));
    with_algebra(omega)
        ->add_option("--expr", o.exprs, "expression in x1..xn (repeatable)")
        ->required();

    CLI::App* verify = add_common(app.add_subcommand(
        "verify412", "antisymmetrizer identities for the skew algebra with "
                     "all a = 1"));
    verify->add_option("--n", o.n, "even generator count")->required();
    verify->add_flag("--diagnostic", o.diagnostic,
                     "also run the antisymmetrizer-basis block analysis");

    CLI::App* tensor = add_common(app.add_subcommand(
        "tensor-check", "discriminant of a tensor product against the "
                        "product formula"));
    with_algebra(tensor)
        ->add_option("--algebra-b", o.algebra_b, "second factor")
        ->required();

    CLI::App* opp = add_common(app.add_subcommand(
        "opposite-check", "discriminant of the opposite algebra against "
                          "the original"));
    with_algebra(opp);

    add_common(app.add_subcommand(
        "paper-suite", "run every reference check"));

    std::vector<std::string> argv_like = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("ncdisc");
        for (const auto& a : argv_like) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: Usage: " << e.what() << "\n";
        return 2;
    }

    try {
        set_max_workers(o.threads);
        if (app.got_subcommand("nf")) return do_nf(o, out);
        if (app.got_subcommand("trace")) return do_trace(o, out);
        if (app.got_subcommand("disc")) return do_disc(o, out);
        if (app.got_subcommand("dominating")) return do_dominating(o, out);
        if (app.got_subcommand("aut")) return do_aut(o, out);
        if (app.got_subcommand("omega")) return do_omega(o, out);
        if (app.got_subcommand("verify412")) return do_verify412(o, out);
        if (app.got_subcommand("tensor-check")) return do_tensor_check(o, out);
        if (app.got_subcommand("opposite-check"))
            return do_opposite_check(o, out);
        if (app.got_subcommand("paper-suite")) return do_suite(o, out);
        err << "error: Usage: no subcommand selected\n";
        return 2;
    } catch (const EngineError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: Internal: " << e.what() << "\n";
        return 1;
    }
}

} // namespace ncdisc
