#include "gsp4spin/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace gsp4 {

// ---------------------------------------------------------------------------
// GL2Rep

GL2Rep::GL2Rep(GL2Kind kind, Character a, Character b, std::shared_ptr<const CuspidalGL2Data> cusp)
    : kind_(kind), a_(std::move(a)), b_(std::move(b)), cusp_(std::move(cusp)) {}

GL2Rep GL2Rep::principal(const Character& mu1, const Character& mu2) {
    require_same_context(mu1.context(), mu2.context());
    const Character nu = Character::nu(mu1.context(), Rational(1));
    if (mu1 == mu2 * nu || mu1 == mu2 * nu.inverse())
        throw DomainError("principal series mu1 x mu2 with mu1 = mu2 nu^{+-1} is reducible");
    return {GL2Kind::Principal, mu1, mu2, nullptr};
}

GL2Rep GL2Rep::special(const Character& mu) {
    return {GL2Kind::Special, mu, Character::one(mu.context()), nullptr};
}

GL2Rep GL2Rep::one_dim(const Character& mu) {
    return {GL2Kind::OneDim, mu, Character::one(mu.context()), nullptr};
}

GL2Rep GL2Rep::cuspidal(std::shared_ptr<const CuspidalGL2Data> data, const ContextPtr& ctx) {
    if (!data) throw ContextError("cuspidal GL(2) representation without declared data");
    if (data->name.empty()) throw ContextError("cuspidal GL(2) representation needs a name");
    require_same_context(data->central_character.context(), ctx);
    return {GL2Kind::Cuspidal, Character::one(ctx), Character::one(ctx), std::move(data)};
}

Character GL2Rep::central_character() const {
    switch (kind_) {
    case GL2Kind::Principal: return a_ * b_;
    case GL2Kind::Special:
    case GL2Kind::OneDim: return a_.pow(2);
    case GL2Kind::Cuspidal: return cusp_->central_character * b_.pow(2);
    }
    throw Error("unreachable");
}

GL2Rep GL2Rep::twisted(const Character& mu) const {
    switch (kind_) {
    case GL2Kind::Principal: return principal(mu * a_, mu * b_);
    case GL2Kind::Special: return special(mu * a_);
    case GL2Kind::OneDim: return one_dim(mu * a_);
    case GL2Kind::Cuspidal: return {GL2Kind::Cuspidal, a_, mu * b_, cusp_};
    }
    throw Error("unreachable");
}

std::optional<bool> GL2Rep::hom_Ttilde_nonzero(const CharacterK& lambda) const {
    // Hom(tau pi, Lambda) = Hom(pi, Lambda (tau o N)^{-1}): the torus sees
    // a twist through the norm.
    if (kind_ != GL2Kind::Cuspidal)
        throw DomainError("Waldspurger data is declared for cuspidal representations only");
    return cusp_->waldspurger.lookup(lambda * CharacterK::norm_pullback(b_.inverse()));
}

std::optional<bool> GL2Rep::hom_Ttilde_jl_nonzero(const CharacterK& lambda) const {
    if (kind_ != GL2Kind::Cuspidal)
        throw DomainError("Waldspurger data is declared for cuspidal representations only");
    return cusp_->waldspurger_jl.lookup(lambda * CharacterK::norm_pullback(b_.inverse()));
}

std::optional<DihedralDatum> GL2Rep::dihedral() const {
    if (kind_ != GL2Kind::Cuspidal || !cusp_->dihedral) return std::nullopt;
    const CharacterK tw = CharacterK::norm_pullback(b_);
    return DihedralDatum{cusp_->dihedral->mu * tw, cusp_->dihedral->mu_conjugate * tw};
}

bool GL2Rep::operator==(const GL2Rep& other) const {
    require_same_context(context(), other.context());
    if (kind_ != other.kind_) return false;
    switch (kind_) {
    case GL2Kind::Principal: return a_ == other.a_ && b_ == other.b_;
    case GL2Kind::Special:
    case GL2Kind::OneDim: return a_ == other.a_;
    case GL2Kind::Cuspidal: return cusp_->name == other.cusp_->name && b_ == other.b_;
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// GSp4Type

namespace {

struct TypeName {
    GSp4Type type;
    const char* symbol;
};

constexpr std::array<TypeName, 29> kTypeNames{{
    {GSp4Type::I, "I"},       {GSp4Type::IIa, "IIa"},   {GSp4Type::IIb, "IIb"},
    {GSp4Type::IIIa, "IIIa"}, {GSp4Type::IIIb, "IIIb"}, {GSp4Type::IVa, "IVa"},
    {GSp4Type::IVb, "IVb"},   {GSp4Type::IVc, "IVc"},   {GSp4Type::IVd, "IVd"},
    {GSp4Type::Va, "Va"},     {GSp4Type::Vb, "Vb"},     {GSp4Type::Vc, "Vc"},
    {GSp4Type::Vd, "Vd"},     {GSp4Type::VaStar, "Va*"},
    {GSp4Type::VIa, "VIa"},   {GSp4Type::VIb, "VIb"},   {GSp4Type::VIc, "VIc"},
    {GSp4Type::VId, "VId"},   {GSp4Type::VII, "VII"},   {GSp4Type::VIIIa, "VIIIa"},
    {GSp4Type::VIIIb, "VIIIb"}, {GSp4Type::IXa, "IXa"}, {GSp4Type::IXb, "IXb"},
    {GSp4Type::X, "X"},       {GSp4Type::XIa, "XIa"},   {GSp4Type::XIb, "XIb"},
    {GSp4Type::XIaStar, "XIa*"},
    {GSp4Type::CuspGeneric, "cuspidal_generic"},
    {GSp4Type::CuspOtherNonGeneric, "cuspidal_nongeneric"},
}};

} // namespace

const std::string& to_string(GSp4Type type) {
    static const std::map<GSp4Type, std::string>* names = [] {
        auto* m = new std::map<GSp4Type, std::string>;
        for (const TypeName& t : kTypeNames) (*m)[t.type] = t.symbol;
        return m;
    }();
    return names->at(type);
}

std::optional<GSp4Type> gsp4_type_from_string(const std::string& symbol) {
    for (const TypeName& t : kTypeNames)
        if (symbol == t.symbol) return t.type;
    return std::nullopt;
}

const std::vector<GSp4Type>& all_gsp4_types() {
    static const std::vector<GSp4Type>* types = [] {
        auto* v = new std::vector<GSp4Type>;
        for (const TypeName& t : kTypeNames) v->push_back(t.type);
        return v;
    }();
    return *types;
}

// ---------------------------------------------------------------------------
// GSp4Rep

GSp4Rep::GSp4Rep(GSp4Type type, ContextPtr ctx) : type_(type), ctx_(std::move(ctx)) {}

void GSp4Rep::require_quadratic_nontrivial(const Character& xi) {
    if (xi.is_trivial()) throw DomainError("xi parameter must be a nontrivial quadratic character");
    if (!xi.pow(2).is_trivial()) throw DomainError("xi parameter must be quadratic (xi^2 = 1)");
}

void GSp4Rep::require_trivial_central_cuspidal(const GL2Rep& pi) {
    if (pi.kind() != GL2Kind::Cuspidal)
        throw DomainError("parameter pi must be a cuspidal GL(2) representation");
    if (!pi.central_character().is_trivial())
        throw DomainError("parameter pi must have trivial central character");
}

GSp4Rep GSp4Rep::make_I(const Character& chi1, const Character& chi2, const Character& sigma) {
    require_same_context(chi1.context(), sigma.context());
    require_same_context(chi2.context(), sigma.context());
    GSp4Rep rep(GSp4Type::I, sigma.context());
    rep.chars_ = {chi1, chi2, sigma};
    return rep;
}

#define GSP4_TWO_CHAR_CTOR(NAME, TYPE, FIRST_IS_XI)                                        \
    GSp4Rep GSp4Rep::NAME(const Character& first, const Character& sigma) {                \
        require_same_context(first.context(), sigma.context());                            \
        if constexpr (FIRST_IS_XI) require_quadratic_nontrivial(first);                    \
        GSp4Rep rep(TYPE, sigma.context());                                                \
        rep.chars_ = {first, sigma};                                                       \
        return rep;                                                                        \
    }

GSP4_TWO_CHAR_CTOR(make_IIa, GSp4Type::IIa, false)
GSP4_TWO_CHAR_CTOR(make_IIb, GSp4Type::IIb, false)
GSP4_TWO_CHAR_CTOR(make_IIIa, GSp4Type::IIIa, false)
GSP4_TWO_CHAR_CTOR(make_IIIb, GSp4Type::IIIb, false)
GSP4_TWO_CHAR_CTOR(make_Va, GSp4Type::Va, true)
GSP4_TWO_CHAR_CTOR(make_Vb, GSp4Type::Vb, true)
GSP4_TWO_CHAR_CTOR(make_Vc, GSp4Type::Vc, true)
GSP4_TWO_CHAR_CTOR(make_Vd, GSp4Type::Vd, true)
#undef GSP4_TWO_CHAR_CTOR

#define GSP4_SIGMA_CTOR(NAME, TYPE)                                                        \
    GSp4Rep GSp4Rep::NAME(const Character& sigma) {                                        \
        GSp4Rep rep(TYPE, sigma.context());                                                \
        rep.chars_ = {sigma};                                                              \
        return rep;                                                                        \
    }

GSP4_SIGMA_CTOR(make_IVa, GSp4Type::IVa)
GSP4_SIGMA_CTOR(make_IVb, GSp4Type::IVb)
GSP4_SIGMA_CTOR(make_IVc, GSp4Type::IVc)
GSP4_SIGMA_CTOR(make_IVd, GSp4Type::IVd)
GSP4_SIGMA_CTOR(make_VIa, GSp4Type::VIa)
GSP4_SIGMA_CTOR(make_VIb, GSp4Type::VIb)
GSP4_SIGMA_CTOR(make_VIc, GSp4Type::VIc)
GSP4_SIGMA_CTOR(make_VId, GSp4Type::VId)
#undef GSP4_SIGMA_CTOR

GSp4Rep GSp4Rep::make_Va_star(const Character& sigma, const Character& xi) {
    require_same_context(sigma.context(), xi.context());
    require_quadratic_nontrivial(xi);
    GSp4Rep rep(GSp4Type::VaStar, sigma.context());
    rep.chars_ = {sigma, xi};
    return rep;
}

GSp4Rep GSp4Rep::make_VII(const Character& chi, const GL2Rep& pi) {
    require_same_context(chi.context(), pi.context());
    if (pi.kind() != GL2Kind::Cuspidal)
        throw DomainError("type VII requires a cuspidal GL(2) parameter");
    GSp4Rep rep(GSp4Type::VII, chi.context());
    rep.chars_ = {chi};
    rep.pi_ = pi;
    return rep;
}

GSp4Rep GSp4Rep::make_VIIIa(const GL2Rep& pi) {
    if (pi.kind() != GL2Kind::Cuspidal)
        throw DomainError("type VIIIa requires a cuspidal GL(2) parameter");
    GSp4Rep rep(GSp4Type::VIIIa, pi.context());
    rep.pi_ = pi;
    return rep;
}

GSp4Rep GSp4Rep::make_VIIIb(const GL2Rep& pi) {
    GSp4Rep rep = make_VIIIa(pi);
    rep.type_ = GSp4Type::VIIIb;
    return rep;
}

GSp4Rep GSp4Rep::make_IXa(const Character& xi, const GL2Rep& pi) {
    require_same_context(xi.context(), pi.context());
    require_quadratic_nontrivial(xi);
    if (pi.kind() != GL2Kind::Cuspidal)
        throw DomainError("type IXa requires a cuspidal GL(2) parameter");
    GSp4Rep rep(GSp4Type::IXa, xi.context());
    rep.chars_ = {xi};
    rep.pi_ = pi;
    return rep;
}

GSp4Rep GSp4Rep::make_IXb(const Character& xi, const GL2Rep& pi) {
    GSp4Rep rep = make_IXa(xi, pi);
    rep.type_ = GSp4Type::IXb;
    return rep;
}

GSp4Rep GSp4Rep::make_X(const GL2Rep& pi, const Character& sigma) {
    require_same_context(pi.context(), sigma.context());
    if (pi.kind() != GL2Kind::Cuspidal)
        throw DomainError("type X requires a cuspidal GL(2) parameter");
    GSp4Rep rep(GSp4Type::X, sigma.context());
    rep.chars_ = {sigma};
    rep.pi_ = pi;
    return rep;
}

GSp4Rep GSp4Rep::make_XIa(const GL2Rep& pi, const Character& sigma) {
    require_same_context(pi.context(), sigma.context());
    require_trivial_central_cuspidal(pi);
    GSp4Rep rep(GSp4Type::XIa, sigma.context());
    rep.chars_ = {sigma};
    rep.pi_ = pi;
    return rep;
}

GSp4Rep GSp4Rep::make_XIb(const GL2Rep& pi, const Character& sigma) {
    GSp4Rep rep = make_XIa(pi, sigma);
    rep.type_ = GSp4Type::XIb;
    return rep;
}

GSp4Rep GSp4Rep::make_XIa_star(const Character& sigma, const GL2Rep& pi) {
    require_same_context(pi.context(), sigma.context());
    require_trivial_central_cuspidal(pi);
    GSp4Rep rep(GSp4Type::XIaStar, sigma.context());
    rep.chars_ = {sigma};
    rep.pi_ = pi;
    return rep;
}

GSp4Rep GSp4Rep::make_cuspidal_generic(std::shared_ptr<const CuspGSp4Data> data,
                                       const ContextPtr& ctx) {
    if (!data) throw ContextError("cuspidal GSp(4) representation without declared data");
    require_same_context(data->central_character.context(), ctx);
    GSp4Rep rep(GSp4Type::CuspGeneric, ctx);
    rep.cusp_ = std::move(data);
    rep.cusp_twist_ = Character::one(ctx);
    return rep;
}

GSp4Rep GSp4Rep::make_cuspidal_nongeneric(std::shared_ptr<const CuspGSp4Data> data,
                                          const ContextPtr& ctx) {
    GSp4Rep rep = make_cuspidal_generic(std::move(data), ctx);
    rep.type_ = GSp4Type::CuspOtherNonGeneric;
    return rep;
}

namespace {

[[noreturn]] void no_such_parameter(GSp4Type type, const char* role) {
    throw DomainError("type " + to_string(type) + " has no parameter '" + role + "'");
}

} // namespace

const Character& GSp4Rep::sigma() const {
    switch (type_) {
    case GSp4Type::I: return chars_[2];
    case GSp4Type::IIa: case GSp4Type::IIb: case GSp4Type::IIIa: case GSp4Type::IIIb:
    case GSp4Type::Va: case GSp4Type::Vb: case GSp4Type::Vc: case GSp4Type::Vd:
        return chars_[1];
    case GSp4Type::IVa: case GSp4Type::IVb: case GSp4Type::IVc: case GSp4Type::IVd:
    case GSp4Type::VIa: case GSp4Type::VIb: case GSp4Type::VIc: case GSp4Type::VId:
    case GSp4Type::VaStar: case GSp4Type::X: case GSp4Type::XIa: case GSp4Type::XIb:
    case GSp4Type::XIaStar:
        return chars_[0];
    default: no_such_parameter(type_, "sigma");
    }
}

const Character& GSp4Rep::chi() const {
    switch (type_) {
    case GSp4Type::IIa: case GSp4Type::IIb: case GSp4Type::IIIa: case GSp4Type::IIIb:
    case GSp4Type::VII:
        return chars_[0];
    default: no_such_parameter(type_, "chi");
    }
}

const Character& GSp4Rep::chi1() const {
    if (type_ == GSp4Type::I) return chars_[0];
    no_such_parameter(type_, "chi_1");
}

const Character& GSp4Rep::chi2() const {
    if (type_ == GSp4Type::I) return chars_[1];
    no_such_parameter(type_, "chi_2");
}

const Character& GSp4Rep::xi() const {
    switch (type_) {
    case GSp4Type::Va: case GSp4Type::Vb: case GSp4Type::Vc: case GSp4Type::Vd:
    case GSp4Type::IXa: case GSp4Type::IXb:
        return chars_[0];
    case GSp4Type::VaStar: return chars_[1];
    default: no_such_parameter(type_, "xi");
    }
}

const GL2Rep& GSp4Rep::pi() const {
    if (!pi_) no_such_parameter(type_, "pi");
    return *pi_;
}

const Character& GSp4Rep::cusp_twist() const {
    if (!cusp_twist_) no_such_parameter(type_, "twist");
    return *cusp_twist_;
}

Character GSp4Rep::central_character() const {
    switch (type_) {
    case GSp4Type::I:
        return chars_[0] * chars_[1] * chars_[2].pow(2);
    case GSp4Type::IIa: case GSp4Type::IIb:
        return chi().pow(2) * sigma().pow(2);
    case GSp4Type::IIIa: case GSp4Type::IIIb:
        return chi() * sigma().pow(2);
    case GSp4Type::IVa: case GSp4Type::IVb: case GSp4Type::IVc: case GSp4Type::IVd:
    case GSp4Type::VIa: case GSp4Type::VIb: case GSp4Type::VIc: case GSp4Type::VId:
        return sigma().pow(2);
    case GSp4Type::Va: case GSp4Type::Vb: case GSp4Type::Vc: case GSp4Type::Vd:
        return sigma().pow(2); // xi^2 = 1
    case GSp4Type::VaStar: case GSp4Type::XIaStar:
        return sigma().pow(2); // theta lift of a pair with common omega = sigma^2
    case GSp4Type::VII:
        return chi() * pi().central_character();
    case GSp4Type::VIIIa: case GSp4Type::VIIIb:
        return pi().central_character();
    case GSp4Type::IXa: case GSp4Type::IXb:
        // nu xi |x nu^{-1/2} pi(mu): the nu-parts cancel
        return xi() * pi().central_character();
    case GSp4Type::X:
        return pi().central_character() * sigma().pow(2);
    case GSp4Type::XIa: case GSp4Type::XIb:
        return sigma().pow(2); // omega_pi trivial by construction
    case GSp4Type::CuspGeneric: case GSp4Type::CuspOtherNonGeneric:
        return cusp_->central_character * cusp_twist_->pow(2);
    }
    throw Error("unreachable");
}

GSp4Rep GSp4Rep::twisted(const Character& mu) const {
    require_same_context(ctx_, mu.context());
    GSp4Rep rep = *this;
    switch (type_) {
    case GSp4Type::I:
        rep.chars_[2] = mu * chars_[2];
        return rep;
    case GSp4Type::IIa: case GSp4Type::IIb: case GSp4Type::IIIa: case GSp4Type::IIIb:
    case GSp4Type::Va: case GSp4Type::Vb: case GSp4Type::Vc: case GSp4Type::Vd:
        rep.chars_[1] = mu * chars_[1];
        return rep;
    case GSp4Type::IVa: case GSp4Type::IVb: case GSp4Type::IVc: case GSp4Type::IVd:
    case GSp4Type::VIa: case GSp4Type::VIb: case GSp4Type::VIc: case GSp4Type::VId:
    case GSp4Type::VaStar: case GSp4Type::X: case GSp4Type::XIa: case GSp4Type::XIb:
    case GSp4Type::XIaStar:
        rep.chars_[0] = mu * chars_[0];
        return rep;
    case GSp4Type::VII: case GSp4Type::VIIIa: case GSp4Type::VIIIb:
    case GSp4Type::IXa: case GSp4Type::IXb:
        // Klingen-type families: the GL(2) parameter absorbs the twist
        rep.pi_ = pi_->twisted(mu);
        return rep;
    case GSp4Type::CuspGeneric: case GSp4Type::CuspOtherNonGeneric:
        rep.cusp_twist_ = mu * *cusp_twist_;
        return rep;
    }
    throw Error("unreachable");
}

bool GSp4Rep::is_generic() const {
    switch (type_) {
    case GSp4Type::I: case GSp4Type::IIa: case GSp4Type::IIIa: case GSp4Type::IVa:
    case GSp4Type::Va: case GSp4Type::VIa: case GSp4Type::VII: case GSp4Type::VIIIa:
    case GSp4Type::IXa: case GSp4Type::X: case GSp4Type::XIa: case GSp4Type::CuspGeneric:
        return true;
    default:
        return false;
    }
}

bool GSp4Rep::is_extended_sk() const {
    switch (type_) {
    case GSp4Type::IIb: case GSp4Type::Vb: case GSp4Type::Vc: case GSp4Type::Vd:
    case GSp4Type::VIb: case GSp4Type::VIc: case GSp4Type::VId: case GSp4Type::XIb:
    case GSp4Type::VaStar: case GSp4Type::XIaStar:
        return true;
    default:
        return false;
    }
}

bool GSp4Rep::has_xi_parameter() const {
    switch (type_) {
    case GSp4Type::Va: case GSp4Type::Vb: case GSp4Type::Vc: case GSp4Type::Vd:
    case GSp4Type::VaStar: case GSp4Type::IXa: case GSp4Type::IXb:
        return true;
    default:
        return false;
    }
}

bool GSp4Rep::operator==(const GSp4Rep& other) const {
    require_same_context(ctx_, other.ctx_);
    if (type_ != other.type_) return false;
    if (chars_.size() != other.chars_.size()) return false;
    for (std::size_t i = 0; i < chars_.size(); ++i)
        if (chars_[i] != other.chars_[i]) return false;
    if (pi_.has_value() != other.pi_.has_value()) return false;
    if (pi_ && *pi_ != *other.pi_) return false;
    if (is_cuspidal_class())
        return cusp_->name == other.cusp_->name && *cusp_twist_ == *other.cusp_twist_;
    return true;
}

} // namespace gsp4
