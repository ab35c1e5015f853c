#include "gsp4spin/cli.hpp"

#include "gsp4spin/lfactors.hpp"
#include "gsp4spin/notation.hpp"
#include "gsp4spin/packets.hpp"
#include "gsp4spin/serialize.hpp"
#include "gsp4spin/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

namespace gsp4::cli {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kEmptyResult = 2;
constexpr int kVerifyFailure = 3;

struct CommonFlags {
    std::string extension = "unramified";
    long q = 0;
    std::vector<std::string> declares;
    std::vector<std::string> gl2_declares;
    std::vector<std::string> lambda_declares;
    std::vector<std::string> waldspurger;
    std::string format = "text";
    bool unicode = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--extension", flags.extension, "Quadratic extension kind")
        ->check(CLI::IsMember({"unramified", "ramified"}));
    cmd->add_option("--q", flags.q, "Residue field cardinality (numeric binding)");
    cmd->add_option("--declare", flags.declares,
                    "Character generator: NAME[:unramified|:ramified][:order=N][:eq=EXPR]");
    cmd->add_option("--declare-gl2", flags.gl2_declares,
                    "Cuspidal GL(2) rep: NAME[:omega=EXPR][:wald=yes|no][:jl=yes|no]"
                    "[:dihedral=LEXPR,LEXPR]");
    cmd->add_option("--declare-lambda", flags.lambda_declares,
                    "Abstract character of K^x: NAME[:restriction=EXPR][:ramified|:unramified]");
    cmd->add_option("--waldspurger", flags.waldspurger,
                    "Declared flag override: NAME[;jl]:LAMBDA_EXPR=yes|no");
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_flag("--unicode", flags.unicode, "Render nu, chi, |x as symbols");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

struct PendingGL2 {
    std::string name;
    std::string omega_expr = "1";
    std::optional<bool> wald_default;
    std::optional<bool> jl_default;
    std::vector<std::pair<std::string, std::pair<bool, bool>>> overrides; // expr -> (is_jl, flag)
    std::string dihedral_expr; // "LEXPR,LEXPR"
};

bool parse_yesno(const std::string& v, const std::string& what) {
    if (v == "yes" || v == "true" || v == "1") return true;
    if (v == "no" || v == "false" || v == "0") return false;
    throw DomainError("expected yes/no for " + what + ", got '" + v + "'");
}

Workspace build_workspace(const CommonFlags& flags) {
    Context::Builder builder;
    builder.extension(flags.extension == "unramified" ? ExtensionKind::Unramified
                                                      : ExtensionKind::Ramified,
                      "K");
    if (flags.q > 0) builder.bind_q(flags.q);

    std::vector<std::pair<std::string, std::string>> substitutions; // applied after freeze? no:
    for (const std::string& decl : flags.declares) {
        const std::vector<std::string> parts = split(decl, ':');
        if (parts.empty() || parts[0].empty()) throw DomainError("empty --declare");
        GeneratorDecl g;
        g.name = parts[0];
        if (is_reserved_word(g.name))
            throw DomainError("'" + g.name + "' is reserved notation and cannot be declared");
        for (std::size_t i = 1; i < parts.size(); ++i) {
            const std::string& p = parts[i];
            if (p == "unramified") g.ramification = Ramification::Unramified;
            else if (p == "ramified") g.ramification = Ramification::Ramified;
            else if (p.rfind("order=", 0) == 0) g.finite_order = std::stol(p.substr(6));
            else if (p.rfind("eq=", 0) == 0) substitutions.emplace_back(g.name, p.substr(3));
            else throw DomainError("unknown --declare attribute '" + p + "'");
        }
        builder.declare(std::move(g));
    }
    // eq=EXPR needs a context to parse; expand with a two-pass build
    if (!substitutions.empty()) {
        Workspace probe{builder.freeze(), {}, {}};
        Context::Builder second;
        second.extension(flags.extension == "unramified" ? ExtensionKind::Unramified
                                                         : ExtensionKind::Ramified,
                         "K");
        if (flags.q > 0) second.bind_q(flags.q);
        for (const GeneratorDecl& d : probe.ctx->generators()) {
            GeneratorDecl copy = d;
            for (const auto& [name, expr] : substitutions) {
                if (name != d.name) continue;
                const Character target = parse_character(probe, expr);
                copy.finite_order.reset();
                copy.substitution = SubstitutionWord{target.generator_exponents(),
                                                     target.nu_exponent(),
                                                     target.chi_exponent()};
            }
            second.declare(std::move(copy));
        }
        builder = second;
    }

    Workspace ws;
    ws.ctx = builder.freeze();

    for (const std::string& decl : flags.lambda_declares) {
        const std::vector<std::string> parts = split(decl, ':');
        if (parts.empty() || parts[0].empty()) throw DomainError("empty --declare-lambda");
        const std::string& name = parts[0];
        Character restriction = Character::one(ws.ctx);
        Ramification ram = Ramification::Ramified;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            const std::string& p = parts[i];
            if (p.rfind("restriction=", 0) == 0)
                restriction = parse_character(ws, p.substr(12));
            else if (p == "ramified") ram = Ramification::Ramified;
            else if (p == "unramified") ram = Ramification::Unramified;
            else throw DomainError("unknown --declare-lambda attribute '" + p + "'");
        }
        ws.lambda_names.emplace(name, CharacterK::abstract(name, restriction, ram));
    }

    std::vector<PendingGL2> pending;
    for (const std::string& decl : flags.gl2_declares) {
        const std::vector<std::string> parts = split(decl, ':');
        if (parts.empty() || parts[0].empty()) throw DomainError("empty --declare-gl2");
        PendingGL2 p;
        p.name = parts[0];
        if (is_reserved_word(p.name))
            throw DomainError("'" + p.name + "' is reserved notation and cannot be declared");
        for (std::size_t i = 1; i < parts.size(); ++i) {
            const std::string& a = parts[i];
            if (a.rfind("omega=", 0) == 0) p.omega_expr = a.substr(6);
            else if (a.rfind("wald=", 0) == 0) p.wald_default = parse_yesno(a.substr(5), "wald");
            else if (a.rfind("jl=", 0) == 0) p.jl_default = parse_yesno(a.substr(3), "jl");
            else if (a.rfind("dihedral=", 0) == 0) p.dihedral_expr = a.substr(9);
            else throw DomainError("unknown --declare-gl2 attribute '" + a + "'");
        }
        pending.push_back(std::move(p));
    }

    for (const std::string& w : flags.waldspurger) {
        const std::size_t colon = w.find(':');
        const std::size_t eq = w.rfind('=');
        if (colon == std::string::npos || eq == std::string::npos || eq < colon)
            throw DomainError("--waldspurger expects NAME[;jl]:LAMBDA_EXPR=yes|no");
        std::string target = w.substr(0, colon);
        bool is_jl = false;
        if (const std::size_t semi = target.find(";jl"); semi != std::string::npos) {
            is_jl = true;
            target = target.substr(0, semi);
        }
        const std::string expr = w.substr(colon + 1, eq - colon - 1);
        const bool flag = parse_yesno(w.substr(eq + 1), "--waldspurger");
        bool found = false;
        for (PendingGL2& p : pending) {
            if (p.name != target) continue;
            p.overrides.emplace_back(expr, std::make_pair(is_jl, flag));
            found = true;
        }
        if (!found)
            throw DomainError("--waldspurger references undeclared GL(2) rep '" + target + "'");
    }

    for (const PendingGL2& p : pending) {
        CuspidalGL2Data data{p.name, parse_character(ws, p.omega_expr), true, std::nullopt,
                             FlagTable{}, FlagTable{}};
        data.waldspurger.default_flag = p.wald_default;
        data.waldspurger_jl.default_flag = p.jl_default;
        for (const auto& [expr, spec] : p.overrides) {
            FlagTable& table = spec.first ? data.waldspurger_jl : data.waldspurger;
            table.entries.emplace_back(parse_lambda(ws, expr), spec.second);
        }
        if (!p.dihedral_expr.empty()) {
            const std::vector<std::string> two = split(p.dihedral_expr, ',');
            if (two.size() != 2) throw DomainError("dihedral= expects two characters of K^x");
            data.dihedral = DihedralDatum{parse_lambda(ws, two[0]), parse_lambda(ws, two[1])};
        }
        ws.gl2_reps.emplace(
            p.name, GL2Rep::cuspidal(std::make_shared<CuspidalGL2Data>(std::move(data)), ws.ctx));
    }
    return ws;
}

std::map<std::string, long double> parse_bindings(const std::vector<std::string>& binds) {
    std::map<std::string, long double> out;
    for (const std::string& b : binds) {
        const std::size_t eq = b.find('=');
        if (eq == std::string::npos) throw DomainError("--bind expects UNIT=VALUE");
        out[b.substr(0, eq)] = std::stold(b.substr(eq + 1));
    }
    return out;
}

int to_exit_code(const std::exception& e, std::ostream& err) {
    if (dynamic_cast<const NoBesselModel*>(&e)) {
        err << "error: " << e.what() << "\n";
        return kEmptyResult;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
}

// --- subcommand payloads ----------------------------------------------------

struct LFactorArgs {
    CommonFlags common;
    std::string rep;
    std::string lambda;
    std::string mu = "1";
};

int cmd_lfactor(const LFactorArgs& args, std::ostream& out) {
    const Workspace ws = build_workspace(args.common);
    const GSp4Rep rep = parse_rep(ws, args.rep);
    const BesselDatum bd{parse_lambda(ws, args.lambda)};
    const Character mu = parse_character(ws, args.mu);
    const LFactorReport report = compute_lfactor_report(rep, bd, mu);
    if (args.common.format == "structured") {
        out << serialize::lfactor_report_to_json(rep, bd, mu, report) << "\n";
        return kOk;
    }
    const bool uni = args.common.unicode;
    out << "type:        " << report.trace.row << "\n";
    out << "rep:         " << print_rep(rep, uni) << "\n";
    out << "lambda:      " << print_lambda(bd.lambda, uni) << "\n";
    if (!mu.is_trivial()) out << "mu:          " << print_character(mu, uni) << "\n";
    out << "regular:     " << print_factor(report.triple.regular, uni) << "\n";
    out << "exceptional: " << print_factor(report.triple.exceptional, uni) << "\n";
    out << "full:        " << print_factor(report.triple.full, uni) << "\n";
    for (const std::string& g : report.trace.guards) out << "guard:       " << g << "\n";
    for (const std::string& c : report.trace.caveats) out << "caveat:      " << c << "\n";
    return kOk;
}

struct PolesArgs {
    CommonFlags common;
    std::string rep;
    std::string lambda;
    std::string mu = "1";
    std::vector<std::string> binds;
};

int cmd_poles(const PolesArgs& args, std::ostream& out) {
    const Workspace ws = build_workspace(args.common);
    const GSp4Rep rep = parse_rep(ws, args.rep);
    const Character mu = parse_character(ws, args.mu);
    EulerFactor factor = EulerFactor::one(ws.ctx);
    if (args.lambda.empty()) {
        factor = l_full_any_model(rep, mu);
    } else {
        factor = l_full_anisotropic(rep, BesselDatum{parse_lambda(ws, args.lambda)}, mu).full;
    }
    if (!ws.ctx->q_binding())
        throw DomainError("poles need a numeric q (pass --q)");
    const SpecializedFactor spec = factor.specialize(
        static_cast<long double>(*ws.ctx->q_binding()), parse_bindings(args.binds));
    const auto poles = spec.poles();
    if (args.common.format == "structured") {
        std::ostringstream body;
        body << "{\n  \"factor\": \"" << print_factor(factor) << "\",\n  \"poles\": [";
        for (std::size_t i = 0; i < poles.size(); ++i) {
            body << (i ? ", " : "") << "{\"re_s\": " << static_cast<double>(poles[i].re_s)
                 << ", \"x\": " << static_cast<double>(poles[i].x)
                 << ", \"multiplicity\": " << poles[i].multiplicity << "}";
        }
        body << "]\n}";
        out << body.str() << "\n";
        return kOk;
    }
    out << "factor: " << print_factor(factor, args.common.unicode) << "\n";
    if (poles.empty()) out << "no poles\n";
    for (const PoleX& p : poles) {
        out << "Re(s) = " << static_cast<double>(p.re_s) << "  (X = "
            << static_cast<double>(p.x) << ", multiplicity " << p.multiplicity
            << ", modulo 2*pi*i/ln q)\n";
    }
    return kOk;
}

struct PacketArgs {
    CommonFlags common;
    std::string kind;
    std::string pi1;
    std::string pi2;
    std::string mu = "1";
};

int cmd_packet(const PacketArgs& args, std::ostream& out) {
    const Workspace ws = build_workspace(args.common);
    const Character mu = parse_character(ws, args.mu);
    Packet packet = [&] {
        if (args.kind == "endoscopic") {
            if (args.pi2.empty())
                throw DomainError("endoscopic packets need --pi1 and --pi2");
            return endoscopic_packet(parse_gl2(ws, args.pi1), parse_gl2(ws, args.pi2));
        }
        return sk_packet(parse_gl2(ws, args.pi1));
    }();
    const PacketIdentityReport report = verify_packet_identity(packet, mu);
    if (args.common.format == "structured") {
        out << serialize::packet_report_to_json(packet, mu, report) << "\n";
    } else {
        const bool uni = args.common.unicode;
        out << "source: " << (packet.source == Packet::Source::Endoscopic ? "endoscopic"
                                                                          : "saito-kurokawa")
            << "\n";
        for (const PacketMemberCheck& c : report.checks) {
            out << c.member << ": " << print_rep(c.rep, uni) << " [" << to_string(c.rep.type())
                << "]\n";
            out << "  spinor factor: " << print_factor(c.lhs, uni) << "\n";
            out << "  lift formula:  " << print_factor(c.rhs, uni) << "\n";
            out << "  " << (c.equal ? "equal" : "UNEQUAL") << "\n";
        }
        if (!packet.minus) out << "minus: ---\n";
        out << "verdict: " << (report.all_equal ? "equal" : "unequal") << "\n";
    }
    return report.all_equal ? kOk : kVerifyFailure;
}

struct VerifyArgs {
    std::uint64_t seed = 1;
    int instantiations = 20;
    std::string inject_fault;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    verify::Options opt;
    opt.seed = args.seed;
    opt.instantiations = args.instantiations;
    if (!args.inject_fault.empty()) {
        const auto type = gsp4_type_from_string(args.inject_fault);
        if (!type) throw DomainError("unknown row symbol '" + args.inject_fault + "'");
        opt.inject_fault = *type;
    }
    const verify::Summary summary = verify::run_all(opt);
    if (args.format == "structured") {
        std::ostringstream body;
        body << "{\n  \"seed\": " << args.seed << ",\n  \"checks_run\": "
             << summary.checks_run << ",\n  \"passed\": "
             << (summary.all_passed ? "true" : "false") << ",\n  \"failures\": [";
        for (std::size_t i = 0; i < summary.results.size(); ++i) {
            const auto& r = summary.results[i];
            body << (i ? ", " : "") << "{\"check\": \"" << r.check << "\", \"row\": \""
                 << r.row << "\"}";
        }
        body << "]\n}";
        out << body.str() << "\n";
        return summary.all_passed ? kOk : kVerifyFailure;
    }
    for (const auto& r : summary.results) {
        if (!r.passed)
            out << "FAIL [" << r.check << "] row " << r.row << ": " << r.detail
                << " (seed " << args.seed << ")\n";
    }
    if (summary.all_passed) {
        out << "all " << summary.checks_run << " checks passed (seed " << args.seed << ")\n";
        return kOk;
    }
    out << summary.results.size() << " of " << summary.checks_run << " checks failed\n";
    return kVerifyFailure;
}

int cmd_export(const std::string& format, std::ostream& out) {
    if (format == "structured")
        out << serialize::export_tables_json() << "\n";
    else
        out << serialize::export_tables_text();
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spinor L-factor calculator for GSp(4) over a p-adic field"};
    app.require_subcommand(1);

    LFactorArgs lf;
    CLI::App* lfactor = app.add_subcommand(
        "lfactor", "Regular, exceptional and full spinor L-factor of a representation");
    add_common(lfactor, lf.common);
    lfactor->add_option("--rep", lf.rep, "Representation expression")->required();
    lfactor->add_option("--lambda", lf.lambda, "Character of K^x (norm(...) or declared name)")
        ->required();
    lfactor->add_option("--mu", lf.mu, "Twisting character of k^x");

    PolesArgs pa;
    CLI::App* poles = app.add_subcommand("poles", "Numeric pole locations of the full factor");
    add_common(poles, pa.common);
    poles->add_option("--rep", pa.rep, "Representation expression")->required();
    poles->add_option("--lambda", pa.lambda, "Optional anisotropic model");
    poles->add_option("--mu", pa.mu, "Twisting character of k^x");
    poles->add_option("--bind", pa.binds, "Unit binding UNIT=VALUE");

    PacketArgs pk;
    CLI::App* packet = app.add_subcommand("packet", "Construct and check a local packet");
    add_common(packet, pk.common);
    packet->add_option("--kind", pk.kind, "Packet kind")
        ->check(CLI::IsMember({"endoscopic", "sk"}))
        ->required();
    packet->add_option("--pi1", pk.pi1, "First GL(2) representation")->required();
    packet->add_option("--pi2", pk.pi2, "Second GL(2) representation (endoscopic)");
    packet->add_option("--mu", pk.mu, "Twisting character of k^x");

    VerifyArgs va;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the randomized cross-table consistency suite");
    verify_cmd->add_option("--seed", va.seed, "Random seed");
    verify_cmd->add_option("--instantiations", va.instantiations,
                           "Randomized instantiations per row");
    verify_cmd->add_option("--inject-fault", va.inject_fault,
                           "Test-only: corrupt one table row and expect the suite to fail");
    verify_cmd->add_option("--format", va.format)->check(CLI::IsMember({"text", "structured"}));

    std::string export_format = "text";
    CLI::App* export_cmd =
        app.add_subcommand("export", "Dump the six classification tables");
    export_cmd->add_option("--format", export_format)
        ->check(CLI::IsMember({"text", "structured"}));

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (lfactor->parsed()) return cmd_lfactor(lf, out);
        if (poles->parsed()) return cmd_poles(pa, out);
        if (packet->parsed()) return cmd_packet(pk, out);
        if (verify_cmd->parsed()) return cmd_verify(va, out);
        if (export_cmd->parsed()) return cmd_export(export_format, out);
    } catch (const std::exception& e) {
        return to_exit_code(e, err);
    }
    err << "error: no subcommand\n";
    return kInputError;
}

} // namespace gsp4::cli
