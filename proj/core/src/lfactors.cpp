#include "gsp4spin/lfactors.hpp"

#include <algorithm>

namespace gsp4 {

namespace {

std::optional<GSp4Type> g_injected_fault;

Character nu_pow(const ContextPtr& ctx, long num, long den = 1) {
    return Character::nu(ctx, Rational(num, den));
}

EulerFactor tate(const Character& chi) { return EulerFactor::tate(chi); }

/// L_reg at mu = 1, assuming the model exists. Pure table lookup on the
/// printed parameters.
EulerFactor regular_table(const GSp4Rep& pi) {
    const ContextPtr& ctx = pi.context();
    const auto nu_half = nu_pow(ctx, 1, 2);
    EulerFactor f = EulerFactor::one(ctx);
    switch (pi.type()) {
    case GSp4Type::I:
        f = tate(pi.sigma()) * tate(pi.chi1() * pi.sigma()) * tate(pi.chi2() * pi.sigma()) *
            tate(pi.chi1() * pi.chi2() * pi.sigma());
        break;
    case GSp4Type::IIa:
        f = tate(pi.sigma()) * tate(pi.chi().pow(2) * pi.sigma()) *
            tate(nu_half * pi.chi() * pi.sigma());
        break;
    case GSp4Type::IIb:
        f = tate(pi.sigma()) * tate(pi.chi().pow(2) * pi.sigma()) *
            tate(nu_pow(ctx, -1, 2) * pi.chi() * pi.sigma());
        break;
    case GSp4Type::IIIa:
        f = tate(nu_half * pi.chi() * pi.sigma()) * tate(nu_half * pi.sigma());
        break;
    case GSp4Type::IVa:
        f = tate(nu_pow(ctx, 3, 2) * pi.sigma());
        break;
    case GSp4Type::IVb:
        f = tate(nu_pow(ctx, 3, 2) * pi.sigma()) * tate(nu_pow(ctx, -1, 2) * pi.sigma());
        break;
    case GSp4Type::Va:
        f = tate(nu_half * pi.sigma()) * tate(nu_half * pi.xi() * pi.sigma());
        break;
    case GSp4Type::Vb:
        f = tate(nu_pow(ctx, -1, 2) * pi.sigma()) * tate(nu_half * pi.xi() * pi.sigma());
        break;
    case GSp4Type::Vc:
        f = tate(nu_half * pi.sigma()) * tate(nu_pow(ctx, -1, 2) * pi.xi() * pi.sigma());
        break;
    case GSp4Type::Vd:
        f = tate(nu_pow(ctx, -1, 2) * pi.sigma()) *
            tate(nu_pow(ctx, -1, 2) * pi.xi() * pi.sigma());
        break;
    case GSp4Type::VIa:
        f = tate(nu_half * pi.sigma()) * tate(nu_half * pi.sigma());
        break;
    case GSp4Type::VIb:
        f = tate(nu_half * pi.sigma());
        break;
    case GSp4Type::VII: case GSp4Type::VIIIa: case GSp4Type::VIIIb:
    case GSp4Type::IXa: case GSp4Type::IXb:
    case GSp4Type::VaStar: case GSp4Type::XIaStar:
    case GSp4Type::CuspGeneric: case GSp4Type::CuspOtherNonGeneric:
        break; // 1
    case GSp4Type::X:
        f = tate(pi.sigma()) * tate(pi.pi().central_character() * pi.sigma());
        break;
    case GSp4Type::XIa:
        f = tate(nu_half * pi.sigma());
        break;
    case GSp4Type::XIb:
        f = tate(nu_pow(ctx, -1, 2) * pi.sigma());
        break;
    case GSp4Type::IIIb: case GSp4Type::IVc: case GSp4Type::IVd:
    case GSp4Type::VIc: case GSp4Type::VId:
        throw NoBesselModel("type " + to_string(pi.type()) + " has no anisotropic Bessel model");
    }
    return f;
}

/// L_ex at mu = 1, assuming the model exists.
EulerFactor exceptional_table(const GSp4Rep& pi) {
    const ContextPtr& ctx = pi.context();
    const auto nu_half = nu_pow(ctx, 1, 2);
    switch (pi.type()) {
    case GSp4Type::IIb:
        return tate(nu_half * pi.chi() * pi.sigma());
    case GSp4Type::Vb:
        return tate(nu_half * pi.sigma());
    case GSp4Type::Vc:
        return tate(nu_half * pi.xi() * pi.sigma());
    case GSp4Type::Vd:
    case GSp4Type::VaStar:
        return tate(nu_half * pi.sigma()) * tate(nu_half * pi.xi() * pi.sigma());
    case GSp4Type::VIb:
    case GSp4Type::XIb:
    case GSp4Type::XIaStar:
        return tate(nu_half * pi.sigma());
    default:
        return EulerFactor::one(ctx);
    }
}

/// Full factor at mu = 1, valid for every Bessel model (split included).
EulerFactor full_table(const GSp4Rep& pi) {
    const ContextPtr& ctx = pi.context();
    const auto nu_half = nu_pow(ctx, 1, 2);
    const auto nu_mhalf = nu_pow(ctx, -1, 2);
    EulerFactor f = EulerFactor::one(ctx);
    switch (pi.type()) {
    case GSp4Type::IIIb:
        f = tate(nu_half * pi.chi() * pi.sigma()) * tate(nu_half * pi.sigma()) *
            tate(nu_mhalf * pi.chi() * pi.sigma()) * tate(nu_mhalf * pi.sigma());
        break;
    case GSp4Type::IVc:
        f = tate(nu_pow(ctx, 3, 2) * pi.sigma()) * tate(nu_half * pi.sigma()) *
            tate(nu_pow(ctx, -3, 2) * pi.sigma());
        break;
    case GSp4Type::IVd:
        throw NoBesselModel("type IVd has no Bessel model");
    case GSp4Type::VIc:
        f = tate(nu_half * pi.sigma()) * tate(nu_half * pi.sigma()) *
            tate(nu_mhalf * pi.sigma());
        break;
    case GSp4Type::VId:
        f = tate(nu_half * pi.sigma()) * tate(nu_half * pi.sigma()) *
            tate(nu_mhalf * pi.sigma()) * tate(nu_mhalf * pi.sigma());
        break;
    default:
        f = regular_table(pi) * exceptional_table(pi);
        break;
    }
    if (g_injected_fault && *g_injected_fault == pi.type())
        f = f * tate(nu_pow(ctx, 5)); // deliberately wrong, for harness self-tests
    return f;
}

CharacterK norm_of(const Character& c) { return CharacterK::norm_pullback(c); }

bool flag_or_throw(const std::optional<bool>& flag, const std::string& what) {
    if (!flag) throw UndeclaredDatum("undeclared Waldspurger datum: " + what);
    return *flag;
}

DihedralDatum dihedral_or_throw(const GSp4Rep& pi) {
    auto d = pi.pi().dihedral();
    if (!d)
        throw UndeclaredDatum("types IXa/IXb with xi = chi_{K/k} need declared dihedral "
                              "parameters mu, mu' of pi");
    return *d;
}

} // namespace

namespace testing_hooks {
void set_injected_table_fault(std::optional<GSp4Type> row) { g_injected_fault = row; }
std::optional<GSp4Type> injected_table_fault() { return g_injected_fault; }
} // namespace testing_hooks

bool LambdaCondition::admits(const GSp4Rep& pi, const CharacterK& lambda) const {
    if (lambda.restriction_to_base() != pi.central_character()) return false;
    const auto listed = [&](const CharacterK& l) {
        return std::any_of(members.begin(), members.end(),
                           [&](const CharacterK& m) { return m == l; });
    };
    switch (kind) {
    case Kind::None:
        return false;
    case Kind::All:
        return !listed(lambda);
    case Kind::Exactly:
        return listed(lambda);
    case Kind::Filtered: {
        if (listed(lambda)) return false;
        const auto flag = filter->pi.hom_Ttilde_nonzero(lambda);
        return flag_or_throw(flag, "Hom(pi, Lambda) for the queried Lambda") ==
               filter->want_nonzero;
    }
    }
    throw Error("unreachable");
}

LambdaCondition anisotropic_lambda_condition(const GSp4Rep& pi) {
    const ContextPtr& ctx = pi.context();
    LambdaCondition cond;
    const auto chi_ext = Character::chi_ext(ctx);
    switch (pi.type()) {
    case GSp4Type::I:
    case GSp4Type::IIIa:
    case GSp4Type::VII:
        cond.kind = LambdaCondition::Kind::All;
        return cond;
    case GSp4Type::IIa:
        cond.kind = LambdaCondition::Kind::All;
        cond.members = {norm_of(pi.chi() * pi.sigma())};
        return cond;
    case GSp4Type::IVa:
    case GSp4Type::VIa:
        cond.kind = LambdaCondition::Kind::All;
        cond.members = {norm_of(pi.sigma())};
        return cond;
    case GSp4Type::Va:
        cond.kind = LambdaCondition::Kind::All;
        cond.members = {norm_of(pi.sigma()), norm_of(pi.xi() * pi.sigma())};
        return cond;
    case GSp4Type::IIb:
        cond.kind = LambdaCondition::Kind::Exactly;
        cond.members = {norm_of(pi.chi() * pi.sigma())};
        return cond;
    case GSp4Type::IVb:
    case GSp4Type::VIb:
        cond.kind = LambdaCondition::Kind::Exactly;
        cond.members = {norm_of(pi.sigma())};
        return cond;
    case GSp4Type::IIIb:
    case GSp4Type::IVc:
    case GSp4Type::IVd:
    case GSp4Type::VIc:
    case GSp4Type::VId:
        cond.kind = LambdaCondition::Kind::None;
        return cond;
    case GSp4Type::Vb:
        if (pi.xi() != chi_ext) {
            cond.kind = LambdaCondition::Kind::Exactly;
            cond.members = {norm_of(pi.sigma())};
            cond.guard_note = "xi != chi_{K/k}";
        } else {
            cond.guard_note = "xi == chi_{K/k} fails the table guard";
        }
        return cond;
    case GSp4Type::Vc:
        if (pi.xi() != chi_ext) {
            cond.kind = LambdaCondition::Kind::Exactly;
            cond.members = {norm_of(pi.xi() * pi.sigma())};
            cond.guard_note = "xi != chi_{K/k}";
        } else {
            cond.guard_note = "xi == chi_{K/k} fails the table guard";
        }
        return cond;
    case GSp4Type::Vd:
    case GSp4Type::VaStar:
        if (pi.xi() == chi_ext) {
            cond.kind = LambdaCondition::Kind::Exactly;
            cond.members = {norm_of(pi.sigma())};
            cond.guard_note = "xi == chi_{K/k}";
        } else {
            cond.guard_note = "xi != chi_{K/k} fails the table guard";
        }
        return cond;
    case GSp4Type::VIIIa:
        cond.kind = LambdaCondition::Kind::Filtered;
        cond.filter = {pi.pi(), true};
        cond.guard_note = "Hom(pi, Lambda) != 0";
        return cond;
    case GSp4Type::VIIIb:
        cond.kind = LambdaCondition::Kind::Filtered;
        cond.filter = {pi.pi(), false};
        cond.guard_note = "Hom(pi, Lambda) == 0";
        return cond;
    case GSp4Type::IXa:
        cond.kind = LambdaCondition::Kind::All;
        if (pi.xi() == chi_ext) {
            const DihedralDatum d = dihedral_or_throw(pi);
            cond.members = {d.mu, d.mu_conjugate};
            cond.guard_note = "xi == chi_{K/k}: mu, mu' excluded";
        }
        return cond;
    case GSp4Type::IXb:
        if (pi.xi() == chi_ext) {
            const DihedralDatum d = dihedral_or_throw(pi);
            cond.kind = LambdaCondition::Kind::Exactly;
            cond.members = {d.mu, d.mu_conjugate};
            cond.guard_note = "xi == chi_{K/k}: exactly mu, mu'";
        } else {
            cond.guard_note = "xi != chi_{K/k} fails the table guard";
        }
        return cond;
    case GSp4Type::X:
        cond.kind = LambdaCondition::Kind::Filtered;
        cond.filter = {pi.pi().twisted(pi.sigma()), true};
        cond.guard_note = "Hom(sigma pi, Lambda) != 0";
        return cond;
    case GSp4Type::XIa:
        cond.kind = LambdaCondition::Kind::Filtered;
        cond.filter = {pi.pi().twisted(pi.sigma()), true};
        cond.members = {norm_of(pi.sigma())};
        cond.guard_note = "Hom(sigma pi, Lambda) != 0, Lambda != sigma o N";
        return cond;
    case GSp4Type::XIb: {
        const bool flag = flag_or_throw(pi.pi().hom_Ttilde_nonzero(CharacterK::one(ctx)),
                                        "Hom(pi, C) for type XIb");
        if (flag) {
            cond.kind = LambdaCondition::Kind::Exactly;
            cond.members = {norm_of(pi.sigma())};
            cond.guard_note = "Hom(pi, C) != 0";
        } else {
            cond.guard_note = "Hom(pi, C) == 0 fails the table guard";
        }
        return cond;
    }
    case GSp4Type::XIaStar: {
        const bool flag = flag_or_throw(pi.pi().hom_Ttilde_jl_nonzero(CharacterK::one(ctx)),
                                        "Hom(pi^JL, 1) for type XIa*");
        if (flag) {
            cond.kind = LambdaCondition::Kind::Exactly;
            cond.members = {norm_of(pi.sigma())};
            cond.guard_note = "Hom(pi^JL, 1) != 0";
        } else {
            cond.guard_note = "Hom(pi^JL, 1) == 0 fails the table guard";
        }
        return cond;
    }
    case GSp4Type::CuspGeneric:
    case GSp4Type::CuspOtherNonGeneric: {
        const CuspGSp4Data& data = *pi.cusp_data();
        const CharacterK shift = norm_of(pi.cusp_twist());
        switch (data.policy) {
        case CuspGSp4Data::LambdaPolicy::All:
            cond.kind = LambdaCondition::Kind::All;
            break;
        case CuspGSp4Data::LambdaPolicy::None:
            cond.kind = LambdaCondition::Kind::None;
            break;
        case CuspGSp4Data::LambdaPolicy::Listed:
            cond.kind = LambdaCondition::Kind::Exactly;
            for (const CharacterK& l : data.lambdas) cond.members.push_back(l * shift);
            break;
        }
        cond.guard_note = "declared Bessel data of '" + data.name + "'";
        return cond;
    }
    }
    throw Error("unreachable");
}

bool has_anisotropic_bessel(const GSp4Rep& pi, const BesselDatum& bd) {
    return anisotropic_lambda_condition(pi).admits(pi, bd.lambda);
}

int h_functional_dim(const GSp4Rep& pi, const Character& rho) {
    require_same_context(pi.context(), rho.context());
    const auto chi_ext = Character::chi_ext(pi.context());
    switch (pi.type()) {
    case GSp4Type::IIb:
        return rho == pi.chi() * pi.sigma() ? 1 : 0;
    case GSp4Type::Vb:
        return pi.xi() != chi_ext && rho == pi.sigma() ? 1 : 0;
    case GSp4Type::Vc:
        return pi.xi() != chi_ext && rho == pi.xi() * pi.sigma() ? 1 : 0;
    case GSp4Type::Vd:
    case GSp4Type::VaStar:
        return pi.xi() == chi_ext && (rho == pi.sigma() || rho == pi.xi() * pi.sigma()) ? 1 : 0;
    case GSp4Type::VIb:
        return rho == pi.sigma() ? 1 : 0;
    case GSp4Type::XIb:
        if (rho != pi.sigma()) return 0;
        return flag_or_throw(pi.pi().hom_Ttilde_nonzero(CharacterK::one(pi.context())),
                             "Hom(pi, C) for type XIb")
                   ? 1
                   : 0;
    case GSp4Type::XIaStar:
        if (rho != pi.sigma()) return 0;
        return flag_or_throw(pi.pi().hom_Ttilde_jl_nonzero(CharacterK::one(pi.context())),
                             "Hom(pi^JL, 1) for type XIa*")
                   ? 1
                   : 0;
    default:
        return 0;
    }
}

namespace {

std::string explain_model_failure(const GSp4Rep& pi, const BesselDatum& bd) {
    const LambdaCondition cond = anisotropic_lambda_condition(pi);
    if (cond.kind == LambdaCondition::Kind::None) {
        std::string msg = "type " + to_string(pi.type()) + " admits no anisotropic Bessel model";
        if (!cond.guard_note.empty()) msg += " (" + cond.guard_note + ")";
        return msg;
    }
    if (bd.lambda.restriction_to_base() != pi.central_character())
        return "type " + to_string(pi.type()) +
               ": Lambda does not restrict to the central character on k^x";
    return "Lambda fails the table condition for type " + to_string(pi.type());
}

void require_model(const GSp4Rep& pi, const BesselDatum& bd) {
    if (!has_anisotropic_bessel(pi, bd))
        throw NoBesselModel("no anisotropic Bessel model: " + explain_model_failure(pi, bd));
}

bool is_star_type(GSp4Type t) { return t == GSp4Type::VaStar || t == GSp4Type::XIaStar; }

} // namespace

EulerFactor l_regular(const GSp4Rep& pi, const BesselDatum& bd, const Character& mu) {
    require_model(pi, bd);
    return regular_table(pi.twisted(mu));
}

EulerFactor l_exceptional(const GSp4Rep& pi, const BesselDatum& bd, const Character& mu) {
    require_model(pi, bd);
    if (is_star_type(pi.type()) && !mu.is_trivial())
        throw DomainError("exceptional factor of " + to_string(pi.type()) +
                          " is only tabulated for mu = 1; use the packet identities for "
                          "general mu");
    return exceptional_table(pi.twisted(mu));
}

LFactorTriple l_full_anisotropic(const GSp4Rep& pi, const BesselDatum& bd, const Character& mu) {
    LFactorTriple triple{l_regular(pi, bd, mu), l_exceptional(pi, bd, mu),
                         EulerFactor::one(pi.context())};
    triple.full = triple.regular * triple.exceptional;
    return triple;
}

EulerFactor l_full_any_model(const GSp4Rep& pi, const Character& mu) {
    if (pi.type() == GSp4Type::IVd) throw NoBesselModel("type IVd has no Bessel model");
    return full_table(pi.twisted(mu));
}

EulerFactor exceptional_mu_formula(const GSp4Rep& pi, const Character& mu) {
    const ContextPtr& ctx = pi.context();
    const auto nu_half_mu = nu_pow(ctx, 1, 2) * mu;
    switch (pi.type()) {
    case GSp4Type::IIb:
        return tate(nu_half_mu * pi.chi() * pi.sigma());
    case GSp4Type::Vb:
        return tate(nu_half_mu * pi.sigma());
    case GSp4Type::Vc:
        return tate(nu_half_mu * pi.xi() * pi.sigma());
    case GSp4Type::Vd:
        return tate(nu_half_mu * pi.sigma()) * tate(nu_half_mu * pi.xi() * pi.sigma());
    case GSp4Type::VIb:
    case GSp4Type::XIb:
        return tate(nu_half_mu * pi.sigma());
    default:
        throw DomainError("the mu-dependent exceptional table covers types IIb, Vb, Vc, Vd, "
                          "VIb, XIb only");
    }
}

std::vector<std::string> row_caveats(GSp4Type type) {
    std::vector<std::string> caveats;
    switch (type) {
    case GSp4Type::VaStar:
    case GSp4Type::XIaStar:
    case GSp4Type::CuspGeneric:
    case GSp4Type::CuspOtherNonGeneric:
        caveats.push_back("cuspidal-lift row: established only for odd residue characteristic");
        break;
    default:
        break;
    }
    switch (type) {
    case GSp4Type::VIIIa: case GSp4Type::VIIIb: case GSp4Type::X: case GSp4Type::XIa:
    case GSp4Type::XIb: case GSp4Type::XIaStar:
        caveats.push_back("existence condition uses a declared Waldspurger datum");
        break;
    case GSp4Type::IXa: case GSp4Type::IXb:
        caveats.push_back("Lambda rule uses the declared dihedral parameters mu, mu'");
        break;
    default:
        break;
    }
    return caveats;
}

LFactorReport compute_lfactor_report(const GSp4Rep& pi, const BesselDatum& bd,
                                     const Character& mu) {
    LFactorReport report{l_full_anisotropic(pi, bd, mu), ConditionTrace{}};
    report.trace.row = to_string(pi.type());
    const LambdaCondition cond = anisotropic_lambda_condition(pi);
    if (!cond.guard_note.empty()) report.trace.guards.push_back(cond.guard_note);
    report.trace.guards.push_back("Lambda restricts to the central character on k^x");
    report.trace.caveats = row_caveats(pi.type());
    return report;
}

} // namespace gsp4
