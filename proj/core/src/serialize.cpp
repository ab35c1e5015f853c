#include "gsp4spin/serialize.hpp"

#include "gsp4spin/notation.hpp"

#include <json.hpp>

#include <sstream>

namespace gsp4::serialize {

using nlohmann::json;

namespace {

json char_to_j(const Character& c) {
    json gens = json::object();
    for (const auto& [g, e] : c.generator_exponents()) gens[g] = e;
    return json{{"gens", gens}, {"nu", c.nu_exponent().str()}, {"chi", c.chi_exponent()}};
}

Character char_from_j(const ContextPtr& ctx, const json& j) {
    // string fields hold the text notation, object fields the exponent lists
    if (j.is_string()) return parse_character(Workspace{ctx, {}, {}}, j.get<std::string>());
    std::map<std::string, long> gens;
    for (const auto& [g, e] : j.at("gens").items()) gens[g] = e.get<long>();
    return Character::from_word(ctx, gens, Rational::parse(j.at("nu").get<std::string>()),
                                j.at("chi").get<long>());
}

json lambda_to_j(const CharacterK& lambda) {
    json j{{"norm", char_to_j(lambda.norm_part())}};
    if (lambda.abstract_part()) {
        const auto& a = *lambda.abstract_part();
        j["abstract"] = json{
            {"name", a.name},
            {"restriction", char_to_j(a.restriction_to_base)},
            {"ramified", a.ramification == Ramification::Ramified},
        };
    } else {
        j["abstract"] = nullptr;
    }
    return j;
}

CharacterK lambda_from_j(const ContextPtr& ctx, const json& j) {
    if (j.is_string()) return parse_lambda(Workspace{ctx, {}, {}}, j.get<std::string>());
    CharacterK norm = CharacterK::norm_pullback(char_from_j(ctx, j.at("norm")));
    if (j.at("abstract").is_null()) return norm;
    const json& a = j.at("abstract");
    CharacterK abs = CharacterK::abstract(
        a.at("name").get<std::string>(), char_from_j(ctx, a.at("restriction")),
        a.at("ramified").get<bool>() ? Ramification::Ramified : Ramification::Unramified);
    return abs * norm;
}

json factor_to_j(const EulerFactor& f) {
    json monomials = json::array();
    for (const SatakeMonomial& m : f.monomials()) {
        json units = json::object();
        for (const auto& [u, e] : m.unit_exponents()) units[u] = e;
        monomials.push_back(
            json{{"sign", m.sign()}, {"units", units}, {"q", m.q_exponent().str()}});
    }
    return json{{"monomials", monomials}};
}

EulerFactor factor_from_j(const ContextPtr& ctx, const json& j) {
    EulerFactor f = EulerFactor::one(ctx);
    for (const json& mj : j.at("monomials")) {
        std::map<std::string, long> units;
        for (const auto& [u, e] : mj.at("units").items()) units[u] = e.get<long>();
        SatakeMonomial m(ctx, mj.at("sign").get<int>(), std::move(units),
                         Rational::parse(mj.at("q").get<std::string>()));
        f = f * EulerFactor::tate(m.character());
    }
    return f;
}

json flag_table_to_j(const FlagTable& t) {
    json entries = json::array();
    for (const auto& [lambda, flag] : t.entries)
        entries.push_back(json{{"lambda", lambda_to_j(lambda)}, {"flag", flag}});
    return json{{"default", t.default_flag ? json(*t.default_flag) : json(nullptr)},
                {"entries", entries}};
}

FlagTable flag_table_from_j(const ContextPtr& ctx, const json& j) {
    FlagTable t;
    if (!j.at("default").is_null()) t.default_flag = j.at("default").get<bool>();
    for (const json& e : j.at("entries"))
        t.entries.emplace_back(lambda_from_j(ctx, e.at("lambda")), e.at("flag").get<bool>());
    return t;
}

json gl2_to_j(const GL2Rep& pi) {
    switch (pi.kind()) {
    case GL2Kind::Principal:
        return json{{"kind", "principal"}, {"mu1", char_to_j(pi.mu1())}, {"mu2", char_to_j(pi.mu2())}};
    case GL2Kind::Special:
        return json{{"kind", "special"}, {"mu", char_to_j(pi.mu())}};
    case GL2Kind::OneDim:
        return json{{"kind", "onedim"}, {"mu", char_to_j(pi.mu())}};
    case GL2Kind::Cuspidal: {
        const CuspidalGL2Data& d = *pi.cusp_data();
        json dj{{"name", d.name},
                {"omega", char_to_j(d.central_character)},
                {"ramified", d.ramified},
                {"waldspurger", flag_table_to_j(d.waldspurger)},
                {"waldspurger_jl", flag_table_to_j(d.waldspurger_jl)}};
        if (d.dihedral)
            dj["dihedral"] = json{{"mu", lambda_to_j(d.dihedral->mu)},
                                  {"mu_conj", lambda_to_j(d.dihedral->mu_conjugate)}};
        else
            dj["dihedral"] = nullptr;
        return json{{"kind", "cuspidal"}, {"twist", char_to_j(pi.twist())}, {"data", dj}};
    }
    }
    throw Error("unreachable");
}

GL2Rep gl2_from_j(const ContextPtr& ctx, const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "principal")
        return GL2Rep::principal(char_from_j(ctx, j.at("mu1")), char_from_j(ctx, j.at("mu2")));
    if (kind == "special") return GL2Rep::special(char_from_j(ctx, j.at("mu")));
    if (kind == "onedim") return GL2Rep::one_dim(char_from_j(ctx, j.at("mu")));
    if (kind != "cuspidal") throw DomainError("unknown GL(2) kind '" + kind + "'");
    const json& dj = j.at("data");
    auto data = std::make_shared<CuspidalGL2Data>(CuspidalGL2Data{
        dj.at("name").get<std::string>(), char_from_j(ctx, dj.at("omega")),
        dj.at("ramified").get<bool>(), std::nullopt,
        flag_table_from_j(ctx, dj.at("waldspurger")),
        flag_table_from_j(ctx, dj.at("waldspurger_jl"))});
    if (!dj.at("dihedral").is_null()) {
        auto mutable_data = std::make_shared<CuspidalGL2Data>(*data);
        mutable_data->dihedral =
            DihedralDatum{lambda_from_j(ctx, dj.at("dihedral").at("mu")),
                          lambda_from_j(ctx, dj.at("dihedral").at("mu_conj"))};
        data = mutable_data;
    }
    return GL2Rep::cuspidal(std::move(data), ctx).twisted(char_from_j(ctx, j.at("twist")));
}

json rep_to_j(const GSp4Rep& pi) {
    json j{{"type", to_string(pi.type())}};
    json params = json::object();
    switch (pi.type()) {
    case GSp4Type::I:
        params["chi_1"] = char_to_j(pi.chi1());
        params["chi_2"] = char_to_j(pi.chi2());
        params["sigma"] = char_to_j(pi.sigma());
        break;
    case GSp4Type::IIa: case GSp4Type::IIb: case GSp4Type::IIIa: case GSp4Type::IIIb:
        params["chi"] = char_to_j(pi.chi());
        params["sigma"] = char_to_j(pi.sigma());
        break;
    case GSp4Type::IVa: case GSp4Type::IVb: case GSp4Type::IVc: case GSp4Type::IVd:
    case GSp4Type::VIa: case GSp4Type::VIb: case GSp4Type::VIc: case GSp4Type::VId:
        params["sigma"] = char_to_j(pi.sigma());
        break;
    case GSp4Type::Va: case GSp4Type::Vb: case GSp4Type::Vc: case GSp4Type::Vd:
    case GSp4Type::VaStar:
        params["xi"] = char_to_j(pi.xi());
        params["sigma"] = char_to_j(pi.sigma());
        break;
    case GSp4Type::VII:
        params["chi"] = char_to_j(pi.chi());
        params["pi"] = gl2_to_j(pi.pi());
        break;
    case GSp4Type::VIIIa: case GSp4Type::VIIIb:
        params["pi"] = gl2_to_j(pi.pi());
        break;
    case GSp4Type::IXa: case GSp4Type::IXb:
        params["xi"] = char_to_j(pi.xi());
        params["pi"] = gl2_to_j(pi.pi());
        break;
    case GSp4Type::X: case GSp4Type::XIa: case GSp4Type::XIb: case GSp4Type::XIaStar:
        params["sigma"] = char_to_j(pi.sigma());
        params["pi"] = gl2_to_j(pi.pi());
        break;
    case GSp4Type::CuspGeneric: case GSp4Type::CuspOtherNonGeneric: {
        const CuspGSp4Data& d = *pi.cusp_data();
        params["name"] = d.name;
        params["omega"] = char_to_j(d.central_character);
        params["twist"] = char_to_j(pi.cusp_twist());
        params["lambdas"] =
            d.policy == CuspGSp4Data::LambdaPolicy::All
                ? json("all")
                : (d.policy == CuspGSp4Data::LambdaPolicy::None ? json("none") : [&] {
                      json arr = json::array();
                      for (const CharacterK& l : d.lambdas) arr.push_back(lambda_to_j(l));
                      return arr;
                  }());
        break;
    }
    }
    j["parameters"] = params;
    j["display"] = print_rep(pi);
    return j;
}

GSp4Rep rep_from_j(const ContextPtr& ctx, const json& j) {
    if (j.is_string()) return parse_rep(Workspace{ctx, {}, {}}, j.get<std::string>());
    const std::string symbol = j.at("type").get<std::string>();
    const auto type = gsp4_type_from_string(symbol);
    if (!type) throw DomainError("unknown type symbol '" + symbol + "'");
    const json& p = j.at("parameters");
    const auto ch = [&](const char* key) { return char_from_j(ctx, p.at(key)); };
    switch (*type) {
    case GSp4Type::I: return GSp4Rep::make_I(ch("chi_1"), ch("chi_2"), ch("sigma"));
    case GSp4Type::IIa: return GSp4Rep::make_IIa(ch("chi"), ch("sigma"));
    case GSp4Type::IIb: return GSp4Rep::make_IIb(ch("chi"), ch("sigma"));
    case GSp4Type::IIIa: return GSp4Rep::make_IIIa(ch("chi"), ch("sigma"));
    case GSp4Type::IIIb: return GSp4Rep::make_IIIb(ch("chi"), ch("sigma"));
    case GSp4Type::IVa: return GSp4Rep::make_IVa(ch("sigma"));
    case GSp4Type::IVb: return GSp4Rep::make_IVb(ch("sigma"));
    case GSp4Type::IVc: return GSp4Rep::make_IVc(ch("sigma"));
    case GSp4Type::IVd: return GSp4Rep::make_IVd(ch("sigma"));
    case GSp4Type::Va: return GSp4Rep::make_Va(ch("xi"), ch("sigma"));
    case GSp4Type::Vb: return GSp4Rep::make_Vb(ch("xi"), ch("sigma"));
    case GSp4Type::Vc: return GSp4Rep::make_Vc(ch("xi"), ch("sigma"));
    case GSp4Type::Vd: return GSp4Rep::make_Vd(ch("xi"), ch("sigma"));
    case GSp4Type::VaStar: return GSp4Rep::make_Va_star(ch("sigma"), ch("xi"));
    case GSp4Type::VIa: return GSp4Rep::make_VIa(ch("sigma"));
    case GSp4Type::VIb: return GSp4Rep::make_VIb(ch("sigma"));
    case GSp4Type::VIc: return GSp4Rep::make_VIc(ch("sigma"));
    case GSp4Type::VId: return GSp4Rep::make_VId(ch("sigma"));
    case GSp4Type::VII: return GSp4Rep::make_VII(ch("chi"), gl2_from_j(ctx, p.at("pi")));
    case GSp4Type::VIIIa: return GSp4Rep::make_VIIIa(gl2_from_j(ctx, p.at("pi")));
    case GSp4Type::VIIIb: return GSp4Rep::make_VIIIb(gl2_from_j(ctx, p.at("pi")));
    case GSp4Type::IXa: return GSp4Rep::make_IXa(ch("xi"), gl2_from_j(ctx, p.at("pi")));
    case GSp4Type::IXb: return GSp4Rep::make_IXb(ch("xi"), gl2_from_j(ctx, p.at("pi")));
    case GSp4Type::X: return GSp4Rep::make_X(gl2_from_j(ctx, p.at("pi")), ch("sigma"));
    case GSp4Type::XIa: return GSp4Rep::make_XIa(gl2_from_j(ctx, p.at("pi")), ch("sigma"));
    case GSp4Type::XIb: return GSp4Rep::make_XIb(gl2_from_j(ctx, p.at("pi")), ch("sigma"));
    case GSp4Type::XIaStar:
        return GSp4Rep::make_XIa_star(ch("sigma"), gl2_from_j(ctx, p.at("pi")));
    case GSp4Type::CuspGeneric: case GSp4Type::CuspOtherNonGeneric: {
        auto policy = CuspGSp4Data::LambdaPolicy::All;
        std::vector<CharacterK> lambdas;
        const json& lj = p.at("lambdas");
        if (lj.is_string() && lj.get<std::string>() == "none")
            policy = CuspGSp4Data::LambdaPolicy::None;
        else if (lj.is_array()) {
            policy = CuspGSp4Data::LambdaPolicy::Listed;
            for (const json& l : lj) lambdas.push_back(lambda_from_j(ctx, l));
        }
        auto data = std::make_shared<CuspGSp4Data>(CuspGSp4Data{
            p.at("name").get<std::string>(), ch("omega"), policy, std::move(lambdas)});
        GSp4Rep rep = *type == GSp4Type::CuspGeneric
                          ? GSp4Rep::make_cuspidal_generic(std::move(data), ctx)
                          : GSp4Rep::make_cuspidal_nongeneric(std::move(data), ctx);
        return rep.twisted(ch("twist"));
    }
    }
    throw Error("unreachable");
}

json factor_record(const EulerFactor& f) {
    json j = factor_to_j(f);
    j["display"] = print_factor(f);
    return j;
}

} // namespace

// ---------------------------------------------------------------------------
// Public string API

std::string context_to_json(const Context& ctx) {
    json gens = json::array();
    for (const GeneratorDecl& d : ctx.generators()) {
        json gj{{"name", d.name},
                {"ramification",
                 d.ramification == Ramification::Unramified ? "unramified" : "ramified"}};
        if (d.ramification == Ramification::Unramified) gj["satake_unit"] = d.satake_unit;
        if (d.finite_order) gj["order"] = *d.finite_order;
        if (d.substitution) {
            json sub = json::object();
            json sg = json::object();
            for (const auto& [g, e] : d.substitution->generator_exponents) sg[g] = e;
            sub["gens"] = sg;
            sub["nu"] = d.substitution->nu_exponent.str();
            sub["chi"] = d.substitution->chi_exponent;
            gj["substitution"] = sub;
        }
        gens.push_back(gj);
    }
    json j{{"extension",
            json{{"label", ctx.extension_label()},
                 {"kind", ctx.extension_kind() == ExtensionKind::Unramified ? "unramified"
                                                                            : "ramified"}}},
           {"generators", gens},
           {"general_nu_exponents", ctx.general_nu_exponents_allowed()}};
    if (ctx.q_binding()) j["q"] = *ctx.q_binding();
    return j.dump(2);
}

ContextPtr context_from_json(const std::string& text) {
    const json j = json::parse(text);
    Context::Builder builder;
    const json& ext = j.at("extension");
    builder.extension(ext.at("kind").get<std::string>() == "unramified"
                          ? ExtensionKind::Unramified
                          : ExtensionKind::Ramified,
                      ext.at("label").get<std::string>());
    if (j.contains("q") && !j.at("q").is_null()) builder.bind_q(j.at("q").get<long>());
    if (j.value("general_nu_exponents", false)) builder.allow_general_nu_exponents();
    for (const json& gj : j.at("generators")) {
        GeneratorDecl d;
        d.name = gj.at("name").get<std::string>();
        d.ramification = gj.at("ramification").get<std::string>() == "unramified"
                             ? Ramification::Unramified
                             : Ramification::Ramified;
        if (gj.contains("satake_unit")) d.satake_unit = gj.at("satake_unit").get<std::string>();
        if (gj.contains("order")) d.finite_order = gj.at("order").get<long>();
        if (gj.contains("substitution")) {
            SubstitutionWord word;
            for (const auto& [g, e] : gj.at("substitution").at("gens").items())
                word.generator_exponents[g] = e.get<long>();
            word.nu_exponent = Rational::parse(gj.at("substitution").at("nu").get<std::string>());
            word.chi_exponent = gj.at("substitution").at("chi").get<long>();
            d.substitution = std::move(word);
        }
        builder.declare(std::move(d));
    }
    return builder.freeze();
}

std::string character_to_json(const Character& c) { return char_to_j(c).dump(2); }

Character character_from_json(const ContextPtr& ctx, const std::string& text) {
    return char_from_j(ctx, json::parse(text));
}

std::string lambda_to_json(const CharacterK& lambda) { return lambda_to_j(lambda).dump(2); }

CharacterK lambda_from_json(const ContextPtr& ctx, const std::string& text) {
    return lambda_from_j(ctx, json::parse(text));
}

std::string factor_to_json(const EulerFactor& f) { return factor_to_j(f).dump(2); }

EulerFactor factor_from_json(const ContextPtr& ctx, const std::string& text) {
    return factor_from_j(ctx, json::parse(text));
}

std::string gl2_to_json(const GL2Rep& pi) { return gl2_to_j(pi).dump(2); }

GL2Rep gl2_from_json(const ContextPtr& ctx, const std::string& text) {
    return gl2_from_j(ctx, json::parse(text));
}

std::string rep_to_json(const GSp4Rep& pi) { return rep_to_j(pi).dump(2); }

GSp4Rep rep_from_json(const ContextPtr& ctx, const std::string& text) {
    return rep_from_j(ctx, json::parse(text));
}

std::string lfactor_report_to_json(const GSp4Rep& pi, const BesselDatum& bd, const Character& mu,
                                   const LFactorReport& report) {
    json j{{"type", to_string(pi.type())},
           {"parameters", rep_to_j(pi).at("parameters")},
           {"lambda", lambda_to_j(bd.lambda)},
           {"mu", char_to_j(mu)},
           {"condition_trace",
            json{{"row", report.trace.row}, {"guards", report.trace.guards}}},
           {"regular", factor_record(report.triple.regular)},
           {"exceptional", factor_record(report.triple.exceptional)},
           {"full", factor_record(report.triple.full)},
           {"caveats", report.trace.caveats}};
    return j.dump(2);
}

std::string packet_report_to_json(const Packet& packet, const Character& mu,
                                  const PacketIdentityReport& report) {
    json j{{"source",
            packet.source == Packet::Source::Endoscopic ? "endoscopic" : "saito_kurokawa"},
           {"mu", char_to_j(mu)},
           {"plus", rep_to_j(packet.plus)},
           {"minus", packet.minus ? rep_to_j(*packet.minus) : json(nullptr)}};
    json lhs = json::object();
    json rhs = json::object();
    bool verdict = true;
    for (const PacketMemberCheck& c : report.checks) {
        lhs[c.member] = print_factor(c.lhs);
        rhs[c.member] = print_factor(c.rhs);
        verdict = verdict && c.equal;
    }
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["verdict"] = verdict ? "equal" : "unequal";
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// Table export

namespace {

struct DocWorkspace {
    ContextPtr ctx;
    GL2Rep pi_w;   // cuspidal, central character w, flags declared true
    GL2Rep pi_w2;  // a second cuspidal with the same central character
    GL2Rep pi_0;   // cuspidal with trivial central character
    GL2Rep pi_b;   // cuspidal with central character b^2
};

DocWorkspace doc_workspace(bool xi_equals_chi) {
    Context::Builder builder;
    builder.extension(ExtensionKind::Unramified, "K");
    for (const char* name : {"sigma", "chi", "chi_1", "chi_2", "mu", "a", "b", "w"})
        builder.declare_unramified(name);
    if (xi_equals_chi)
        builder.declare_equal_chi_ext("xi");
    else
        builder.declare_order2_unramified("xi");
    ContextPtr ctx = builder.freeze();

    const auto cusp = [&](const std::string& name, const Character& omega) {
        FlagTable yes;
        yes.default_flag = true;
        return GL2Rep::cuspidal(
            std::make_shared<CuspidalGL2Data>(
                CuspidalGL2Data{name, omega, true, std::nullopt, yes, yes}),
            ctx);
    };
    const Character w = Character::generator(ctx, "w");
    const Character b = Character::generator(ctx, "b");
    return DocWorkspace{ctx, cusp("pi", w), cusp("pi'", w), cusp("pi_0", Character::one(ctx)),
                        cusp("pi_b", b.pow(2))};
}

json table_row(const GSp4Rep& rep, const std::string& lambda_text,
               const std::optional<BesselDatum>& bd) {
    json row{{"type", to_string(rep.type())},
             {"pi", print_rep(rep)},
             {"lambda", lambda_text},
             {"caveats", row_caveats(rep.type())}};
    const Character one = Character::one(rep.context());
    if (bd) {
        row["l_regular"] = print_factor(l_regular(rep, *bd, one));
        row["l_exceptional"] = print_factor(l_exceptional(rep, *bd, one));
    } else {
        row["l_regular"] = nullptr;
        row["l_exceptional"] = nullptr;
    }
    try {
        row["l_full"] = print_factor(l_full_any_model(rep, one));
    } catch (const NoBesselModel&) {
        row["l_full"] = "no Bessel model";
    }
    return row;
}

json build_tables() {
    DocWorkspace dw = doc_workspace(false);
    DocWorkspace dc = doc_workspace(true); // xi identified with chi_{K/k}
    const ContextPtr& ctx = dw.ctx;
    const auto gen = [&](const char* n) { return Character::generator(ctx, n); };
    const auto genc = [&](const char* n) { return Character::generator(dc.ctx, n); };
    const Character sigma = gen("sigma");
    const Character chi = gen("chi");
    const Character xi = gen("xi");
    const auto norm_bd = [](const Character& c) {
        return BesselDatum{CharacterK::norm_pullback(c)};
    };
    const auto abstract_bd = [](const GSp4Rep& rep) {
        return BesselDatum{CharacterK::abstract("Lambda", rep.central_character(),
                                                Ramification::Ramified)};
    };

    // --- exceptional factors with their mu-dependence (six rows)
    json t1 = json::array();
    {
        const auto row = [&](const GSp4Rep& rep, const char* cond, const char* lambda) {
            const Character mu = Character::generator(rep.context(), "mu");
            t1.push_back(json{{"type", to_string(rep.type())},
                              {"pi", print_rep(rep)},
                              {"condition", cond},
                              {"lambda", lambda},
                              {"l_exceptional_mu", print_factor(exceptional_mu_formula(rep, mu))}});
        };
        row(GSp4Rep::make_IIb(chi, sigma), "", "(chi sigma) o N_{K/k}");
        row(GSp4Rep::make_Vb(xi, sigma), "xi != chi_{K/k}", "sigma o N_{K/k}");
        row(GSp4Rep::make_Vc(xi, sigma), "xi != chi_{K/k}", "(xi sigma) o N_{K/k}");
        row(GSp4Rep::make_Vd(genc("xi"), genc("sigma")), "xi == chi_{K/k}", "sigma o N_{K/k}");
        row(GSp4Rep::make_VIb(sigma), "", "sigma o N_{K/k}");
        row(GSp4Rep::make_XIb(dw.pi_0, sigma), "pi_{T~} != 0", "sigma o N_{K/k}");
    }

    // --- nonzero H-functionals (six rows)
    json t2 = json::array();
    {
        const auto row = [&](const GSp4Rep& rep, const char* cond, const std::string& rho) {
            t2.push_back(json{{"type", to_string(rep.type())},
                              {"pi", print_rep(rep)},
                              {"condition", cond},
                              {"rho", rho}});
        };
        row(GSp4Rep::make_IIb(chi, sigma), "", print_character(chi * sigma));
        row(GSp4Rep::make_Vb(xi, sigma), "xi != chi_{K/k}", print_character(sigma));
        row(GSp4Rep::make_Vc(xi, sigma), "xi != chi_{K/k}", print_character(xi * sigma));
        row(GSp4Rep::make_Vd(genc("xi"), genc("sigma")), "xi == chi_{K/k}",
            print_character(genc("sigma")) + ", " + print_character(genc("xi") * genc("sigma")));
        row(GSp4Rep::make_VIb(sigma), "", print_character(sigma));
        row(GSp4Rep::make_XIb(dw.pi_0, sigma), "pi_{T~} != 0", print_character(sigma));
    }

    // --- anisotropic Bessel models with regular and exceptional factors
    json t3 = json::array();
    {
        const auto add = [&](const GSp4Rep& rep, const std::string& lambda_text,
                             const std::optional<BesselDatum>& bd) {
            t3.push_back(table_row(rep, lambda_text, bd));
        };
        const GSp4Rep rI = GSp4Rep::make_I(gen("chi_1"), gen("chi_2"), sigma);
        add(rI, "all", abstract_bd(rI));
        const GSp4Rep rIIa = GSp4Rep::make_IIa(chi, sigma);
        add(rIIa, "all != (chi sigma) o N", abstract_bd(rIIa));
        add(GSp4Rep::make_IIb(chi, sigma), "(chi sigma) o N", norm_bd(chi * sigma));
        const GSp4Rep rIIIa = GSp4Rep::make_IIIa(chi, sigma);
        add(rIIIa, "all", abstract_bd(rIIIa));
        add(GSp4Rep::make_IIIb(chi, sigma), "none", std::nullopt);
        const GSp4Rep rIVa = GSp4Rep::make_IVa(sigma);
        add(rIVa, "all != sigma o N", abstract_bd(rIVa));
        add(GSp4Rep::make_IVb(sigma), "sigma o N", norm_bd(sigma));
        add(GSp4Rep::make_IVc(sigma), "none", std::nullopt);
        add(GSp4Rep::make_IVd(sigma), "none", std::nullopt);
        const GSp4Rep rVa = GSp4Rep::make_Va(xi, sigma);
        add(rVa, "all != sigma o N, (xi sigma) o N", abstract_bd(rVa));
        add(GSp4Rep::make_Vb(xi, sigma), "sigma o N if xi != chi_{K/k}", norm_bd(sigma));
        add(GSp4Rep::make_Vc(xi, sigma), "(xi sigma) o N if xi != chi_{K/k}",
            norm_bd(xi * sigma));
        add(GSp4Rep::make_Vd(genc("xi"), genc("sigma")), "sigma o N if xi == chi_{K/k}",
            BesselDatum{CharacterK::norm_pullback(genc("sigma"))});
        const GSp4Rep rVIa = GSp4Rep::make_VIa(sigma);
        add(rVIa, "all != sigma o N", abstract_bd(rVIa));
        add(GSp4Rep::make_VIb(sigma), "sigma o N", norm_bd(sigma));
        add(GSp4Rep::make_VIc(sigma), "none", std::nullopt);
        add(GSp4Rep::make_VId(sigma), "none", std::nullopt);
        const GSp4Rep rVII = GSp4Rep::make_VII(chi, dw.pi_w);
        add(rVII, "all", abstract_bd(rVII));
        const GSp4Rep rVIIIa = GSp4Rep::make_VIIIa(dw.pi_w);
        add(rVIIIa, "all with Hom(pi, Lambda) != 0", abstract_bd(rVIIIa));
        add(GSp4Rep::make_VIIIb(dw.pi_w), "all with Hom(pi, Lambda) == 0", std::nullopt);
        const GSp4Rep rIXa = GSp4Rep::make_IXa(xi, dw.pi_w);
        add(rIXa, "all, except mu, mu' if xi == chi_{K/k}", abstract_bd(rIXa));
        add(GSp4Rep::make_IXb(xi, dw.pi_w), "mu, mu' if xi == chi_{K/k}", std::nullopt);
        const GSp4Rep rX = GSp4Rep::make_X(dw.pi_w, sigma);
        add(rX, "all with Hom(sigma pi, Lambda) != 0", abstract_bd(rX));
        const GSp4Rep rXIa = GSp4Rep::make_XIa(dw.pi_0, sigma);
        add(rXIa, "all != sigma o N with Hom(sigma pi, Lambda) != 0", abstract_bd(rXIa));
        add(GSp4Rep::make_XIb(dw.pi_0, sigma), "sigma o N if Hom(pi, C) != 0", norm_bd(sigma));
        auto cusp_gen = GSp4Rep::make_cuspidal_generic(
            std::make_shared<CuspGSp4Data>(CuspGSp4Data{
                "Pi", Character::generator(ctx, "w"), CuspGSp4Data::LambdaPolicy::All, {}}),
            ctx);
        add(cusp_gen, "declared (external classification)", abstract_bd(cusp_gen));
        add(GSp4Rep::make_Va_star(genc("sigma"), genc("xi")), "sigma o N for xi == chi_{K/k}",
            BesselDatum{CharacterK::norm_pullback(genc("sigma"))});
        add(GSp4Rep::make_XIa_star(sigma, dw.pi_0), "sigma o N for Hom(pi^JL, 1) != 0",
            norm_bd(sigma));
        auto cusp_other = GSp4Rep::make_cuspidal_nongeneric(
            std::make_shared<CuspGSp4Data>(CuspGSp4Data{
                "Pi'", Character::generator(ctx, "w"), CuspGSp4Data::LambdaPolicy::All, {}}),
            ctx);
        add(cusp_other, "declared (external classification)", abstract_bd(cusp_other));
    }

    // --- full spinor factors, model independent
    json t4 = json::array();
    {
        const auto add = [&](const GSp4Rep& rep) {
            json row{{"type", to_string(rep.type())}, {"pi", print_rep(rep)}};
            try {
                row["l_full"] =
                    print_factor(l_full_any_model(rep, Character::one(rep.context())));
            } catch (const NoBesselModel&) {
                row["l_full"] = "no Bessel model";
            }
            row["caveats"] = row_caveats(rep.type());
            t4.push_back(row);
        };
        add(GSp4Rep::make_I(gen("chi_1"), gen("chi_2"), sigma));
        add(GSp4Rep::make_IIa(chi, sigma));
        add(GSp4Rep::make_IIb(chi, sigma));
        add(GSp4Rep::make_IIIa(chi, sigma));
        add(GSp4Rep::make_IIIb(chi, sigma));
        add(GSp4Rep::make_IVa(sigma));
        add(GSp4Rep::make_IVb(sigma));
        add(GSp4Rep::make_IVc(sigma));
        add(GSp4Rep::make_IVd(sigma));
        add(GSp4Rep::make_Va(xi, sigma));
        add(GSp4Rep::make_Vb(xi, sigma));
        add(GSp4Rep::make_Vc(xi, sigma));
        add(GSp4Rep::make_Vd(genc("xi"), genc("sigma")));
        add(GSp4Rep::make_VIa(sigma));
        add(GSp4Rep::make_VIb(sigma));
        add(GSp4Rep::make_VIc(sigma));
        add(GSp4Rep::make_VId(sigma));
        add(GSp4Rep::make_VII(chi, dw.pi_w));
        add(GSp4Rep::make_VIIIa(dw.pi_w));
        add(GSp4Rep::make_VIIIb(dw.pi_w));
        add(GSp4Rep::make_IXa(xi, dw.pi_w));
        add(GSp4Rep::make_IXb(xi, dw.pi_w));
        add(GSp4Rep::make_X(dw.pi_w, sigma));
        add(GSp4Rep::make_XIa(dw.pi_0, sigma));
        add(GSp4Rep::make_XIb(dw.pi_0, sigma));
        add(GSp4Rep::make_cuspidal_generic(
            std::make_shared<CuspGSp4Data>(CuspGSp4Data{
                "Pi", Character::generator(ctx, "w"), CuspGSp4Data::LambdaPolicy::All, {}}),
            ctx));
        add(GSp4Rep::make_Va_star(genc("sigma"), genc("xi")));
        add(GSp4Rep::make_XIa_star(sigma, dw.pi_0));
        add(GSp4Rep::make_cuspidal_nongeneric(
            std::make_shared<CuspGSp4Data>(CuspGSp4Data{
                "Pi'", Character::generator(ctx, "w"), CuspGSp4Data::LambdaPolicy::All, {}}),
            ctx));
    }

    // --- endoscopic packets
    json t5 = json::array();
    {
        const auto add = [&](const GL2Rep& p1, const GL2Rep& p2) {
            Packet p = endoscopic_packet(p1, p2);
            t5.push_back(json{
                {"pi1", print_gl2(p1)},
                {"pi2", print_gl2(p2)},
                {"plus", print_rep(p.plus)},
                {"plus_type", to_string(p.plus.type())},
                {"minus", p.minus ? json(print_rep(*p.minus)) : json(nullptr)},
                {"minus_type", p.minus ? json(to_string(p.minus->type())) : json(nullptr)}});
        };
        const Character a = gen("a");
        const Character b = gen("b");
        add(GL2Rep::principal(a, b), GL2Rep::principal(gen("mu"), a * b * gen("mu").inverse()));
        add(GL2Rep::principal(a, b.pow(2) * a.inverse()), GL2Rep::special(b));
        add(GL2Rep::principal(a, gen("w") * a.inverse()), dw.pi_w);
        add(GL2Rep::special(b), GL2Rep::special(b));
        add(GL2Rep::special(xi * b), GL2Rep::special(b));
        add(dw.pi_b, GL2Rep::special(b));
        add(dw.pi_w, dw.pi_w);
        add(dw.pi_w, dw.pi_w2);
    }

    // --- Saito-Kurokawa packets
    json t6 = json::array();
    {
        const auto add = [&](const GL2Rep& p1) {
            Packet p = sk_packet(p1);
            t6.push_back(json{
                {"pi", print_gl2(p1)},
                {"plus", print_rep(p.plus)},
                {"plus_type", to_string(p.plus.type())},
                {"minus", p.minus ? json(print_rep(*p.minus)) : json(nullptr)},
                {"minus_type", p.minus ? json(to_string(p.minus->type())) : json(nullptr)}});
        };
        const Character a = gen("a");
        add(GL2Rep::principal(a, a.inverse()));
        add(GL2Rep::special(Character::one(ctx)));
        add(GL2Rep::special(xi));
        add(dw.pi_0);
    }

    return json{{"tables",
                 json::array({
                     json{{"name", "exceptional_factors"}, {"rows", t1}},
                     json{{"name", "h_functionals"}, {"rows", t2}},
                     json{{"name", "anisotropic_bessel_spinor_factors"}, {"rows", t3}},
                     json{{"name", "full_spinor_factors"}, {"rows", t4}},
                     json{{"name", "endoscopic_packets"}, {"rows", t5}},
                     json{{"name", "saito_kurokawa_packets"}, {"rows", t6}},
                 })}};
}

} // namespace

std::string export_tables_json() { return build_tables().dump(2); }

std::string export_tables_text() {
    const json tables = build_tables();
    std::ostringstream out;
    for (const json& table : tables.at("tables")) {
        out << "== " << table.at("name").get<std::string>() << " ("
            << table.at("rows").size() << " rows)\n";
        for (const json& row : table.at("rows")) {
            out << "  ";
            if (row.contains("type") && row.at("type").is_string())
                out << row.at("type").get<std::string>() << ": ";
            if (row.contains("pi") && row.at("pi").is_string())
                out << row.at("pi").get<std::string>();
            if (row.contains("pi1"))
                out << "(" << row.at("pi1").get<std::string>() << ", "
                    << row.at("pi2").get<std::string>() << ")";
            if (row.contains("lambda") && row.at("lambda").is_string())
                out << " | Lambda: " << row.at("lambda").get<std::string>();
            if (row.contains("l_regular") && row.at("l_regular").is_string())
                out << " | reg: " << row.at("l_regular").get<std::string>();
            if (row.contains("l_exceptional") && row.at("l_exceptional").is_string())
                out << " | ex: " << row.at("l_exceptional").get<std::string>();
            if (row.contains("l_exceptional_mu"))
                out << " | ex(mu): " << row.at("l_exceptional_mu").get<std::string>();
            if (row.contains("rho")) out << " | rho: " << row.at("rho").get<std::string>();
            if (row.contains("l_full") && row.at("l_full").is_string())
                out << " | full: " << row.at("l_full").get<std::string>();
            if (row.contains("plus"))
                out << " | plus: " << row.at("plus").get<std::string>() << " | minus: "
                    << (row.at("minus").is_null() ? "---"
                                                  : row.at("minus").get<std::string>());
            out << "\n";
        }
    }
    return out.str();
}

} // namespace gsp4::serialize
