#include "gsp4spin/characters.hpp"

#include "gsp4spin/euler.hpp"

#include <algorithm>

namespace gsp4 {

Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return {std::stoll(text)};
        return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
    } catch (const std::exception&) {
        throw DomainError("malformed rational '" + text + "'");
    }
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a.get() != b.get()) throw ContextError("values from mismatched declaration contexts");
}

// ---------------------------------------------------------------------------
// Context

const GeneratorDecl* Context::find_generator(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &decls_[it->second];
}

std::optional<long> Context::unit_order(const std::string& unit) const {
    auto it = unit_to_generator_.find(unit);
    if (it == unit_to_generator_.end()) return std::nullopt;
    return find_generator(it->second)->finite_order;
}

const std::string& Context::unit_generator(const std::string& unit) const {
    static const std::string empty;
    auto it = unit_to_generator_.find(unit);
    return it == unit_to_generator_.end() ? empty : it->second;
}

const SubstitutionWord& Context::expansion(const std::string& name) const {
    auto it = expansions_.find(name);
    if (it == expansions_.end()) throw ContextError("undeclared generator '" + name + "'");
    return it->second;
}

Context::Builder& Context::Builder::extension(ExtensionKind kind, std::string label) {
    proto_.extension_kind_ = kind;
    proto_.extension_label_ = std::move(label);
    return *this;
}

Context::Builder& Context::Builder::bind_q(long q) {
    if (q < 2) throw ContextError("residue cardinality must be at least 2");
    proto_.q_ = q;
    return *this;
}

Context::Builder& Context::Builder::allow_general_nu_exponents(bool allow) {
    proto_.allow_general_nu_ = allow;
    return *this;
}

Context::Builder& Context::Builder::declare(GeneratorDecl decl) {
    if (decl.name.empty()) throw ContextError("generator with empty name");
    if (decl.satake_unit.empty()) decl.satake_unit = "u_" + decl.name;
    proto_.decls_.push_back(std::move(decl));
    return *this;
}

Context::Builder& Context::Builder::declare_unramified(const std::string& name) {
    GeneratorDecl decl;
    decl.name = name;
    return declare(std::move(decl));
}

Context::Builder& Context::Builder::declare_ramified(const std::string& name) {
    GeneratorDecl decl;
    decl.name = name;
    decl.ramification = Ramification::Ramified;
    return declare(std::move(decl));
}

Context::Builder& Context::Builder::declare_order2_unramified(const std::string& name) {
    GeneratorDecl decl;
    decl.name = name;
    decl.finite_order = 2;
    return declare(std::move(decl));
}

Context::Builder& Context::Builder::declare_order2_ramified(const std::string& name) {
    GeneratorDecl decl;
    decl.name = name;
    decl.ramification = Ramification::Ramified;
    decl.finite_order = 2;
    return declare(std::move(decl));
}

Context::Builder& Context::Builder::declare_equal_chi_ext(const std::string& name) {
    GeneratorDecl decl;
    decl.name = name;
    decl.ramification = proto_.extension_kind_ == ExtensionKind::Unramified
                            ? Ramification::Unramified
                            : Ramification::Ramified;
    SubstitutionWord word;
    word.chi_exponent = 1;
    decl.substitution = std::move(word);
    return declare(std::move(decl));
}

namespace {

// Expands one generator into terminal generators, detecting cycles.
void expand_generator(const Context& ctx, const std::map<std::string, std::size_t>& index,
                      const std::vector<GeneratorDecl>& decls, const std::string& name,
                      std::map<std::string, SubstitutionWord>& out,
                      std::vector<std::string>& stack) {
    if (out.count(name)) return;
    if (std::find(stack.begin(), stack.end(), name) != stack.end())
        throw ContextError("cyclic substitution rules through generator '" + name + "'");
    auto it = index.find(name);
    if (it == index.end()) throw ContextError("substitution references undeclared generator '" + name + "'");
    const GeneratorDecl& decl = decls[it->second];

    SubstitutionWord word;
    if (!decl.substitution) {
        word.generator_exponents[name] = 1;
        out[name] = word;
        return;
    }
    stack.push_back(name);
    word.nu_exponent = decl.substitution->nu_exponent;
    word.chi_exponent = decl.substitution->chi_exponent;
    for (const auto& [g, e] : decl.substitution->generator_exponents) {
        expand_generator(ctx, index, decls, g, out, stack);
        const SubstitutionWord& sub = out.at(g);
        for (const auto& [h, f] : sub.generator_exponents) word.generator_exponents[h] += e * f;
        word.nu_exponent += sub.nu_exponent * e;
        word.chi_exponent += e * sub.chi_exponent;
    }
    stack.pop_back();
    out[name] = std::move(word);
}

} // namespace

ContextPtr Context::Builder::freeze() const {
    auto ctx = std::shared_ptr<Context>(new Context(proto_));
    for (std::size_t i = 0; i < ctx->decls_.size(); ++i) {
        const GeneratorDecl& d = ctx->decls_[i];
        if (ctx->index_.count(d.name)) throw ContextError("duplicate generator '" + d.name + "'");
        ctx->index_[d.name] = i;
        if (d.finite_order && *d.finite_order < 1)
            throw ContextError("finite order of '" + d.name + "' must be at least 1");
        if (d.finite_order && d.substitution)
            throw ContextError("generator '" + d.name + "' declares both an order and a substitution");
    }
    std::vector<std::string> stack;
    for (const GeneratorDecl& d : ctx->decls_)
        expand_generator(*ctx, ctx->index_, ctx->decls_, d.name, ctx->expansions_, stack);
    for (const GeneratorDecl& d : ctx->decls_) {
        if (d.ramification != Ramification::Unramified || d.substitution) continue;
        auto [it, inserted] = ctx->unit_to_generator_.emplace(d.satake_unit, d.name);
        if (!inserted) throw ContextError("duplicate Satake unit symbol '" + d.satake_unit + "'");
    }
    return ctx;
}

// ---------------------------------------------------------------------------
// Character

Character::Character(ContextPtr ctx, std::map<std::string, long> gens, Rational nu, long chi)
    : ctx_(std::move(ctx)), gens_(std::move(gens)), nu_(nu), chi_(chi) {}

Character Character::one(const ContextPtr& ctx) { return from_word(ctx, {}, Rational(0), 0); }

Character Character::generator(const ContextPtr& ctx, const std::string& name) {
    return from_word(ctx, {{name, 1}}, Rational(0), 0);
}

Character Character::nu(const ContextPtr& ctx, const Rational& exponent) {
    return from_word(ctx, {}, exponent, 0);
}

Character Character::chi_ext(const ContextPtr& ctx) { return from_word(ctx, {}, Rational(0), 1); }

Character Character::from_word(const ContextPtr& ctx, const std::map<std::string, long>& gens,
                               const Rational& nu_exponent, long chi_exponent) {
    if (!ctx) throw ContextError("character without a context");
    std::map<std::string, long> terminal;
    Rational nu = nu_exponent;
    long chi = chi_exponent;
    for (const auto& [g, e] : gens) {
        if (e == 0) continue;
        const SubstitutionWord& word = ctx->expansion(g);
        for (const auto& [h, f] : word.generator_exponents) terminal[h] += e * f;
        nu += word.nu_exponent * e;
        chi += e * word.chi_exponent;
    }
    for (auto it = terminal.begin(); it != terminal.end();) {
        const GeneratorDecl* decl = ctx->find_generator(it->first);
        if (decl->finite_order) {
            const long n = *decl->finite_order;
            it->second = ((it->second % n) + n) % n;
        }
        if (it->second == 0)
            it = terminal.erase(it);
        else
            ++it;
    }
    chi = ((chi % 2) + 2) % 2;
    if (!ctx->general_nu_exponents_allowed() && !nu.is_half_integral())
        throw DomainError("nu-exponent " + nu.str() + " is not half-integral in this context");
    return Character(ctx, std::move(terminal), nu, chi);
}

Character Character::operator*(const Character& other) const {
    require_same_context(ctx_, other.ctx_);
    std::map<std::string, long> gens = gens_;
    for (const auto& [g, e] : other.gens_) gens[g] += e;
    return from_word(ctx_, gens, nu_ + other.nu_, chi_ + other.chi_);
}

Character Character::inverse() const { return pow(-1); }

Character Character::pow(long k) const {
    std::map<std::string, long> gens;
    for (const auto& [g, e] : gens_) gens[g] = e * k;
    return from_word(ctx_, gens, nu_ * k, chi_ * k);
}

bool Character::operator==(const Character& other) const {
    require_same_context(ctx_, other.ctx_);
    return gens_ == other.gens_ && nu_ == other.nu_ && chi_ == other.chi_;
}

bool Character::operator<(const Character& other) const {
    require_same_context(ctx_, other.ctx_);
    if (nu_ != other.nu_) return nu_ < other.nu_;
    if (chi_ != other.chi_) return chi_ < other.chi_;
    return gens_ < other.gens_;
}

bool Character::is_trivial() const { return gens_.empty() && nu_.is_zero() && chi_ == 0; }

bool Character::is_unramified() const {
    if (chi_ != 0 && ctx_->extension_kind() == ExtensionKind::Ramified) return false;
    for (const auto& [g, e] : gens_) {
        (void)e;
        if (ctx_->find_generator(g)->ramification == Ramification::Ramified) return false;
    }
    return true;
}

SatakeMonomial Character::satake_value() const {
    if (!is_unramified()) throw DomainError("Satake value of a ramified character");
    int sign = chi_ == 0 ? 1 : -1; // chi_{K/k}(uniformizer) = -1 for unramified K/k
    std::map<std::string, long> units;
    for (const auto& [g, e] : gens_) units[ctx_->find_generator(g)->satake_unit] = e;
    return SatakeMonomial(ctx_, sign, std::move(units), -nu_);
}

// ---------------------------------------------------------------------------
// CharacterK

CharacterK::CharacterK(std::optional<AbstractData> abstract, Character norm_part)
    : abstract_(std::move(abstract)), norm_part_(std::move(norm_part)) {}

CharacterK CharacterK::norm_pullback(const Character& base) {
    // Characters of k^x trivial on the norms of K^x are exactly {1, chi_{K/k}},
    // so the chi-component of the base is invisible after pullback.
    Character canonical = base.chi_exponent() == 0 ? base : base * Character::chi_ext(base.context());
    return CharacterK(std::nullopt, std::move(canonical));
}

CharacterK CharacterK::abstract(const std::string& name, const Character& restriction,
                                Ramification ramification) {
    if (name.empty()) throw ContextError("abstract character of K^x needs a name");
    AbstractData data{name, restriction, ramification};
    return CharacterK(std::move(data), Character::one(restriction.context()));
}

CharacterK CharacterK::one(const ContextPtr& ctx) { return norm_pullback(Character::one(ctx)); }

CharacterK CharacterK::operator*(const CharacterK& other) const {
    require_same_context(context(), other.context());
    if (abstract_ && other.abstract_)
        throw DomainError("product of two abstract characters of K^x is not representable");
    const std::optional<AbstractData>& abs = abstract_ ? abstract_ : other.abstract_;
    Character norm = norm_part_ * other.norm_part_;
    if (norm.chi_exponent() != 0) norm = norm * Character::chi_ext(norm.context());
    return CharacterK(abs, std::move(norm));
}

bool CharacterK::operator==(const CharacterK& other) const {
    require_same_context(context(), other.context());
    if (abstract_.has_value() != other.abstract_.has_value()) return false;
    if (abstract_ && abstract_->name != other.abstract_->name) return false;
    return norm_part_ == other.norm_part_;
}

Character CharacterK::restriction_to_base() const {
    Character r = norm_part_.pow(2); // N(a) = a^2 on k^x
    if (abstract_) r = r * abstract_->restriction_to_base;
    return r;
}

} // namespace gsp4
