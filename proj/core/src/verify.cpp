#include "gsp4spin/verify.hpp"

#include "gsp4spin/notation.hpp"

#include <algorithm>
#include <set>

namespace gsp4::verify {

namespace {

enum class GenClass { UnramFree, RamFree, Order2Unram, Order2Ram, EqChi };

struct CtxPlan {
    ExtensionKind ext = ExtensionKind::Unramified;
    std::map<std::string, GenClass> classes;
};

void declare_by_class(Context::Builder& b, const std::string& name, GenClass cls) {
    switch (cls) {
    case GenClass::UnramFree: b.declare_unramified(name); return;
    case GenClass::RamFree: b.declare_ramified(name); return;
    case GenClass::Order2Unram: b.declare_order2_unramified(name); return;
    case GenClass::Order2Ram: b.declare_order2_ramified(name); return;
    case GenClass::EqChi: b.declare_equal_chi_ext(name); return;
    }
}

struct Instantiator {
    std::mt19937_64& rng;

    std::uint64_t pick(std::uint64_t n) { return rng() % n; }
    bool coin(double p = 0.5) { return std::uniform_real_distribution<>(0, 1)(rng) < p; }

    GenClass free_class() {
        const std::uint64_t r = pick(10);
        if (r < 5) return GenClass::UnramFree;
        if (r < 7) return GenClass::RamFree;
        if (r < 9) return GenClass::Order2Unram;
        return GenClass::EqChi;
    }

    GenClass quadratic_not_chi() {
        return coin(0.6) ? GenClass::Order2Unram : GenClass::Order2Ram;
    }

    ContextPtr build_ctx(const std::vector<std::pair<std::string, GenClass>>& gens) {
        Context::Builder b;
        b.extension(coin() ? ExtensionKind::Unramified : ExtensionKind::Ramified, "K");
        for (const auto& [name, cls] : gens) declare_by_class(b, name, cls);
        // probe generators present in every instantiation
        b.declare_unramified("u1");
        b.declare_unramified("u2");
        b.declare_ramified("r1");
        return b.freeze();
    }

    Character random_word(const ContextPtr& ctx, bool unramified_only) {
        std::map<std::string, long> gens;
        for (const GeneratorDecl& d : ctx->generators()) {
            if (unramified_only && d.ramification == Ramification::Ramified) continue;
            if (coin(0.35)) gens[d.name] = static_cast<long>(pick(5)) - 2;
        }
        long chi = 0;
        if (!unramified_only || ctx->extension_kind() == ExtensionKind::Unramified)
            chi = coin(0.3) ? 1 : 0;
        const Rational nu(static_cast<long>(pick(7)) - 3, 2);
        return Character::from_word(ctx, gens, nu, chi);
    }

    GL2Rep make_cusp(const ContextPtr& ctx, const std::string& name, const Character& omega,
                     std::optional<bool> wald_default, std::optional<bool> jl_default,
                     std::optional<DihedralDatum> dihedral = std::nullopt) {
        FlagTable wald;
        wald.default_flag = wald_default;
        FlagTable jl;
        jl.default_flag = jl_default;
        return GL2Rep::cuspidal(
            std::make_shared<CuspidalGL2Data>(
                CuspidalGL2Data{name, omega, true, std::move(dihedral), wald, jl}),
            ctx);
    }
};

} // namespace

Character InstanceFactory::random_unramified(const ContextPtr& ctx) {
    Instantiator inst{rng_};
    return inst.random_word(ctx, true);
}

Character InstanceFactory::random_character(const ContextPtr& ctx) {
    Instantiator inst{rng_};
    return inst.random_word(ctx, false);
}

RowInstance InstanceFactory::make(GSp4Type type, bool satisfy_guard, bool plain) {
    Instantiator inst{rng_};

    const bool needs_xi = type == GSp4Type::Va || type == GSp4Type::Vb || type == GSp4Type::Vc ||
                          type == GSp4Type::Vd || type == GSp4Type::VaStar ||
                          type == GSp4Type::IXa || type == GSp4Type::IXb;
    // which xi class keeps the row guard satisfied
    GenClass xi_class = plain ? GenClass::Order2Unram : inst.quadratic_not_chi();
    if (type == GSp4Type::Vd || type == GSp4Type::VaStar)
        xi_class = satisfy_guard ? GenClass::EqChi
                                 : (plain ? GenClass::Order2Unram : inst.quadratic_not_chi());
    if (type == GSp4Type::Vb || type == GSp4Type::Vc)
        xi_class = satisfy_guard
                       ? (plain ? GenClass::Order2Unram : inst.quadratic_not_chi())
                       : GenClass::EqChi;
    if (!plain && (type == GSp4Type::IXa || type == GSp4Type::IXb))
        xi_class = inst.coin() ? GenClass::EqChi : inst.quadratic_not_chi();

    const GenClass free = GenClass::UnramFree;
    std::vector<std::pair<std::string, GenClass>> gens{
        {"sigma", plain ? free : inst.free_class()},
        {"chi", plain ? free : inst.free_class()},
        {"chi_1", plain ? free : inst.free_class()},
        {"chi_2", plain ? free : inst.free_class()},
    };
    if (needs_xi) gens.emplace_back("xi", xi_class);

    const ContextPtr ctx = plain ? [&] {
        Context::Builder b;
        b.extension(ExtensionKind::Unramified, "K");
        for (const auto& [name, cls] : gens) declare_by_class(b, name, cls);
        b.declare_unramified("u1");
        b.declare_unramified("u2");
        b.declare_ramified("r1");
        return b.freeze();
    }() : inst.build_ctx(gens);
    const auto gen = [&](const char* n) { return Character::generator(ctx, n); };
    const Character sigma = gen("sigma");
    const Character one = Character::one(ctx);

    const bool flag = satisfy_guard || inst.coin(0.5);
    const auto rep = [&]() -> GSp4Rep {
        switch (type) {
        case GSp4Type::I: return GSp4Rep::make_I(gen("chi_1"), gen("chi_2"), sigma);
        case GSp4Type::IIa: return GSp4Rep::make_IIa(gen("chi"), sigma);
        case GSp4Type::IIb: return GSp4Rep::make_IIb(gen("chi"), sigma);
        case GSp4Type::IIIa: return GSp4Rep::make_IIIa(gen("chi"), sigma);
        case GSp4Type::IIIb: return GSp4Rep::make_IIIb(gen("chi"), sigma);
        case GSp4Type::IVa: return GSp4Rep::make_IVa(sigma);
        case GSp4Type::IVb: return GSp4Rep::make_IVb(sigma);
        case GSp4Type::IVc: return GSp4Rep::make_IVc(sigma);
        case GSp4Type::IVd: return GSp4Rep::make_IVd(sigma);
        case GSp4Type::Va: return GSp4Rep::make_Va(gen("xi"), sigma);
        case GSp4Type::Vb: return GSp4Rep::make_Vb(gen("xi"), sigma);
        case GSp4Type::Vc: return GSp4Rep::make_Vc(gen("xi"), sigma);
        case GSp4Type::Vd: return GSp4Rep::make_Vd(gen("xi"), sigma);
        case GSp4Type::VaStar: return GSp4Rep::make_Va_star(sigma, gen("xi"));
        case GSp4Type::VIa: return GSp4Rep::make_VIa(sigma);
        case GSp4Type::VIb: return GSp4Rep::make_VIb(sigma);
        case GSp4Type::VIc: return GSp4Rep::make_VIc(sigma);
        case GSp4Type::VId: return GSp4Rep::make_VId(sigma);
        case GSp4Type::VII:
            return GSp4Rep::make_VII(gen("chi"),
                                     inst.make_cusp(ctx, "picusp", gen("u1").pow(2), true, true));
        case GSp4Type::VIIIa:
            return GSp4Rep::make_VIIIa(inst.make_cusp(ctx, "picusp", gen("u1").pow(2), true, true));
        case GSp4Type::VIIIb:
            return GSp4Rep::make_VIIIb(
                inst.make_cusp(ctx, "picusp", gen("u1").pow(2), false, true));
        case GSp4Type::IXa:
        case GSp4Type::IXb: {
            const Character xi = gen("xi");
            const Character omega_pi = gen("u1").pow(2);
            std::optional<DihedralDatum> dihedral;
            if (xi == Character::chi_ext(ctx)) {
                const Character restriction = xi * omega_pi;
                dihedral = DihedralDatum{
                    CharacterK::abstract("mu_L", restriction, Ramification::Ramified),
                    CharacterK::abstract("mu_L_conj", restriction, Ramification::Ramified)};
            }
            GL2Rep pi = inst.make_cusp(ctx, "picusp", omega_pi, true, true, std::move(dihedral));
            return type == GSp4Type::IXa ? GSp4Rep::make_IXa(xi, pi)
                                         : GSp4Rep::make_IXb(xi, pi);
        }
        case GSp4Type::X:
            return GSp4Rep::make_X(inst.make_cusp(ctx, "picusp", gen("u1").pow(2), flag, true),
                                   sigma);
        case GSp4Type::XIa:
            return GSp4Rep::make_XIa(inst.make_cusp(ctx, "picusp", one, flag, true), sigma);
        case GSp4Type::XIb:
            return GSp4Rep::make_XIb(inst.make_cusp(ctx, "picusp", one, flag, !flag), sigma);
        case GSp4Type::XIaStar:
            return GSp4Rep::make_XIa_star(sigma,
                                          inst.make_cusp(ctx, "picusp", one, !flag, flag));
        case GSp4Type::CuspGeneric:
            return GSp4Rep::make_cuspidal_generic(
                std::make_shared<CuspGSp4Data>(CuspGSp4Data{
                    "Pi", gen("u1").pow(2), CuspGSp4Data::LambdaPolicy::All, {}}),
                ctx);
        case GSp4Type::CuspOtherNonGeneric:
            return GSp4Rep::make_cuspidal_nongeneric(
                std::make_shared<CuspGSp4Data>(CuspGSp4Data{
                    "Pi", gen("u1").pow(2), CuspGSp4Data::LambdaPolicy::All, {}}),
                ctx);
        }
        throw Error("unreachable");
    }();

    RowInstance out{ctx, rep, {}};
    const LambdaCondition cond = anisotropic_lambda_condition(rep);
    switch (cond.kind) {
    case LambdaCondition::Kind::None:
        break;
    case LambdaCondition::Kind::Exactly:
        for (const CharacterK& l : cond.members) out.models.push_back(BesselDatum{l});
        break;
    case LambdaCondition::Kind::All:
    case LambdaCondition::Kind::Filtered: {
        const CharacterK probe = CharacterK::abstract("Lambda_probe", rep.central_character(),
                                                      Ramification::Ramified);
        if (cond.admits(rep, probe)) out.models.push_back(BesselDatum{probe});
        break;
    }
    }
    // keep only data that genuinely provide models (guards may veto)
    std::erase_if(out.models,
                  [&](const BesselDatum& bd) { return !has_anisotropic_bessel(rep, bd); });
    return out;
}

// ---------------------------------------------------------------------------
// The consistency suite

namespace {

struct Suite {
    Summary summary;
    const Options& options;

    void record(const std::string& check, const std::string& row, bool passed,
                const std::string& detail) {
        summary.checks_run += 1;
        if (passed) return;
        summary.all_passed = false;
        summary.results.push_back({check, row, false, detail});
    }
};

std::string describe(const GSp4Rep& rep) { return print_rep(rep); }

const std::vector<GSp4Type>& model_bearing_rows() {
    static const std::vector<GSp4Type>* rows = [] {
        auto* v = new std::vector<GSp4Type>;
        for (GSp4Type t : all_gsp4_types()) {
            if (t == GSp4Type::IIIb || t == GSp4Type::IVc || t == GSp4Type::IVd ||
                t == GSp4Type::VIc || t == GSp4Type::VId)
                continue;
            v->push_back(t);
        }
        return v;
    }();
    return *rows;
}

void check_factorization(Suite& suite, InstanceFactory& factory) {
    for (GSp4Type type : model_bearing_rows()) {
        for (int i = 0; i < suite.options.instantiations; ++i) {
            RowInstance inst = factory.make(type);
            const Character one = Character::one(inst.ctx);
            for (const BesselDatum& bd : inst.models) {
                const LFactorTriple triple = l_full_anisotropic(inst.rep, bd, one);
                const EulerFactor full = l_full_any_model(inst.rep, one);
                const bool ok =
                    triple.full == full && triple.regular * triple.exceptional == triple.full;
                suite.record("factorization", to_string(type), ok,
                             describe(inst.rep) + ": reg*ex = " + print_factor(triple.full) +
                                 " vs full = " + print_factor(full));
                if (!ok) return;
            }
        }
    }
}

std::vector<Character> rho_candidates(InstanceFactory& factory, const RowInstance& inst) {
    const ContextPtr& ctx = inst.ctx;
    std::vector<Character> out;
    const auto push = [&](const Character& c) {
        if (!c.is_unramified()) return;
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    };
    const auto try_param = [&](const char* name) {
        if (ctx->find_generator(name)) push(Character::generator(ctx, name));
    };
    const GSp4Rep& rep = inst.rep;
    switch (rep.type()) {
    case GSp4Type::I:
        push(rep.chi1() * rep.sigma());
        push(rep.chi2() * rep.sigma());
        break;
    case GSp4Type::IIa: case GSp4Type::IIb:
        push(rep.chi() * rep.sigma());
        break;
    case GSp4Type::Va: case GSp4Type::Vb: case GSp4Type::Vc: case GSp4Type::Vd:
        push(rep.xi() * rep.sigma());
        break;
    case GSp4Type::VaStar:
        push(rep.xi() * rep.sigma());
        break;
    default:
        break;
    }
    if (!rep.is_cuspidal_class() && rep.type() != GSp4Type::VII &&
        rep.type() != GSp4Type::VIIIa && rep.type() != GSp4Type::VIIIb &&
        rep.type() != GSp4Type::IXa && rep.type() != GSp4Type::IXb) {
        push(rep.sigma());
        push(Character::chi_ext(ctx) * rep.sigma());
        push(Character::nu(ctx, Rational::half()) * rep.sigma());
    }
    push(Character::one(ctx));
    push(factory.random_unramified(ctx));
    try_param("u1");
    return out;
}

void check_pole_criterion(Suite& suite, InstanceFactory& factory) {
    for (GSp4Type type : all_gsp4_types()) {
        for (int i = 0; i < suite.options.instantiations; ++i) {
            RowInstance inst = factory.make(type);
            const Character one = Character::one(inst.ctx);
            for (const Character& rho : rho_candidates(factory, inst)) {
                const Character tate_char = Character::nu(inst.ctx, Rational::half()) * rho;
                const BesselDatum bd{CharacterK::norm_pullback(rho)};
                bool pole = false;
                if (has_anisotropic_bessel(inst.rep, bd)) {
                    const EulerFactor ex = l_exceptional(inst.rep, bd, one);
                    pole = ex.multiplicity(tate_char.satake_value()) == 1;
                }
                const bool functional = h_functional_dim(inst.rep, rho) == 1;
                suite.record("pole-criterion", to_string(type), pole == functional,
                             describe(inst.rep) + ", rho = " + print_character(rho) +
                                 ": pole=" + (pole ? "yes" : "no") +
                                 " functional=" + (functional ? "yes" : "no"));
                if (pole != functional) return;
            }
        }
    }
}

// For a model Lambda = rho o N the exceptional factor always divides
// L(s, nu^{1/2} rho) L(s, nu^{1/2} chi_{K/k} rho); the pair is invariant
// under rho -> chi_{K/k} rho, so the canonical norm part suffices.
void check_exceptional_divisibility(Suite& suite, InstanceFactory& factory) {
    for (GSp4Type type : model_bearing_rows()) {
        for (int i = 0; i < suite.options.instantiations; ++i) {
            RowInstance inst = factory.make(type);
            const ContextPtr& ctx = inst.ctx;
            const Character nu_half = Character::nu(ctx, Rational::half());
            for (const BesselDatum& bd : inst.models) {
                if (!bd.lambda.is_norm_pullback()) continue;
                const Character rho = bd.lambda.norm_part();
                const EulerFactor bound =
                    EulerFactor::tate(nu_half * rho) *
                    EulerFactor::tate(nu_half * Character::chi_ext(ctx) * rho);
                const EulerFactor ex = l_exceptional(inst.rep, bd, Character::one(ctx));
                const bool ok = ex.divides(bound);
                suite.record("exceptional-divides-tate-bound", to_string(type), ok,
                             describe(inst.rep) + ": " + print_factor(ex) +
                                 " does not divide " + print_factor(bound));
                if (!ok) return;
            }
        }
    }
}

void check_extended_sk(Suite& suite, InstanceFactory& factory) {
    const std::set<GSp4Type> expected{GSp4Type::IIb, GSp4Type::Vb,     GSp4Type::Vc,
                                      GSp4Type::Vd,  GSp4Type::VIb,    GSp4Type::XIb,
                                      GSp4Type::VaStar, GSp4Type::XIaStar};
    for (GSp4Type type : all_gsp4_types()) {
        bool witness = false;
        for (int i = 0; i < std::max(suite.options.instantiations, 4) && !witness; ++i) {
            RowInstance inst = i == 0 ? factory.make_plain(type) : factory.make(type);
            const Character one = Character::one(inst.ctx);
            for (const BesselDatum& bd : inst.models) {
                if (!l_exceptional(inst.rep, bd, one).is_one()) {
                    witness = true;
                    break;
                }
            }
        }
        const bool should = expected.count(type) > 0;
        suite.record("extended-sk", to_string(type), witness == should,
                     std::string("nontrivial exceptional witness ") +
                         (witness ? "found" : "not found") + ", expected " +
                         (should ? "one" : "none"));
    }
}

void check_twist_covariance(Suite& suite, InstanceFactory& factory) {
    const std::vector<GSp4Type> rows{GSp4Type::IIb, GSp4Type::Vb,  GSp4Type::Vc,
                                     GSp4Type::Vd,  GSp4Type::VIb, GSp4Type::XIb};
    for (GSp4Type type : rows) {
        for (int i = 0; i < suite.options.instantiations; ++i) {
            RowInstance inst = factory.make(type);
            if (inst.models.empty()) continue;
            const Character mu = factory.random_unramified(inst.ctx);
            const EulerFactor printed = exceptional_mu_formula(inst.rep, mu);
            const BesselDatum shifted{inst.models.front().lambda *
                                      CharacterK::norm_pullback(mu)};
            const EulerFactor twisted =
                l_exceptional(inst.rep.twisted(mu), shifted, Character::one(inst.ctx));
            suite.record("twist-covariance", to_string(type), printed == twisted,
                         describe(inst.rep) + ", mu = " + print_character(mu) + ": " +
                             print_factor(printed) + " vs " + print_factor(twisted));
            if (printed != twisted) return;
        }
    }
}

void check_packets(Suite& suite, InstanceFactory& factory) {
    for (int i = 0; i < suite.options.instantiations; ++i) {
        Context::Builder b;
        Instantiator inst{factory.rng()};
        b.extension(inst.coin() ? ExtensionKind::Unramified : ExtensionKind::Ramified, "K");
        b.declare_unramified("a");
        b.declare_unramified("m");
        b.declare_unramified("t");
        b.declare_ramified("r1");
        b.declare_order2_unramified("xi");
        const ContextPtr ctx = b.freeze();
        const auto gen = [&](const char* n) { return Character::generator(ctx, n); };
        const Character a = gen("a");
        const Character m = gen("m");
        const Character one = Character::one(ctx);
        const Character xi = gen("xi");
        const Character mu = inst.coin(0.7) ? inst.random_word(ctx, true)
                                            : inst.random_word(ctx, false);

        const GL2Rep cusp_m2 = inst.make_cusp(ctx, "pc", m.pow(2), true, true);
        const GL2Rep cusp_m2_other = inst.make_cusp(ctx, "pc2", m.pow(2), true, true);
        const GL2Rep cusp_0 = inst.make_cusp(ctx, "p0", one, true, true);

        const std::vector<std::pair<std::string, Packet>> endoscopic{
            {"principal/principal",
             endoscopic_packet(GL2Rep::principal(a, m.pow(2) * a.inverse()),
                               GL2Rep::principal(gen("t"), m.pow(2) * gen("t").inverse()))},
            {"principal/special",
             endoscopic_packet(GL2Rep::principal(a, m.pow(2) * a.inverse()),
                               GL2Rep::special(m))},
            {"principal/cuspidal",
             endoscopic_packet(GL2Rep::principal(a, m.pow(2) * a.inverse()), cusp_m2)},
            {"special/special", endoscopic_packet(GL2Rep::special(m), GL2Rep::special(m))},
            {"special-xi/special",
             endoscopic_packet(GL2Rep::special(xi * m), GL2Rep::special(m))},
            {"cuspidal/special", endoscopic_packet(cusp_m2, GL2Rep::special(m))},
            {"cuspidal/cuspidal-same", endoscopic_packet(cusp_m2, cusp_m2)},
            {"cuspidal/cuspidal-distinct", endoscopic_packet(cusp_m2, cusp_m2_other)},
        };
        for (const auto& [row, packet] : endoscopic) {
            const PacketIdentityReport report = verify_packet_identity(packet, mu);
            suite.record("endoscopic-identity", row, report.all_equal,
                         "mu = " + print_character(mu));
            if (!report.all_equal) return;
        }

        const std::vector<std::pair<std::string, Packet>> sk{
            {"principal", sk_packet(GL2Rep::principal(a, a.inverse()))},
            {"steinberg", sk_packet(GL2Rep::special(one))},
            {"xi-steinberg", sk_packet(GL2Rep::special(xi))},
            {"cuspidal", sk_packet(cusp_0)},
        };
        for (const auto& [row, packet] : sk) {
            const PacketIdentityReport report = verify_packet_identity(packet, mu);
            suite.record("sk-identity", row, report.all_equal, "mu = " + print_character(mu));
            if (!report.all_equal) return;
            if (packet.minus) {
                const Packet endo = endoscopic_packet(packet.pi1, GL2Rep::special(one));
                const bool same = endo.minus && *endo.minus == *packet.minus;
                suite.record("sk-minus-is-endoscopic-minus", row, same,
                             print_rep(*packet.minus));
                if (!same) return;
            }
        }
    }
}

struct FaultGuard {
    explicit FaultGuard(std::optional<GSp4Type> row) {
        testing_hooks::set_injected_table_fault(row);
    }
    ~FaultGuard() { testing_hooks::set_injected_table_fault(std::nullopt); }
};

} // namespace

Summary run_all(const Options& options) {
    const FaultGuard guard(options.inject_fault);
    Suite suite{Summary{}, options};
    InstanceFactory factory(options.seed);
    check_factorization(suite, factory);
    check_pole_criterion(suite, factory);
    check_exceptional_divisibility(suite, factory);
    check_extended_sk(suite, factory);
    check_twist_covariance(suite, factory);
    check_packets(suite, factory);
    return suite.summary;
}

} // namespace gsp4::verify
