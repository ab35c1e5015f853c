#pragma once

#include "gsp4spin/errors.hpp"
#include "gsp4spin/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gsp4 {

class Context;
class Character;
class SatakeMonomial;
using ContextPtr = std::shared_ptr<const Context>;

enum class Ramification { Unramified, Ramified };
enum class ExtensionKind { Unramified, Ramified };

/// Right-hand side of a substitution rule g = word. The word may involve
/// other generators, a power of the valuation character nu and the
/// quadratic character of the extension.
struct SubstitutionWord {
    std::map<std::string, long> generator_exponents;
    Rational nu_exponent;
    long chi_exponent = 0;
};

/// Declaration of one formal character generator of k^x.
struct GeneratorDecl {
    std::string name;
    Ramification ramification = Ramification::Unramified;
    /// Abstract Satake unit symbol; meaningful only for unramified
    /// generators. Defaults to "u_<name>".
    std::string satake_unit;
    /// g^n = 1. Mutually exclusive with a substitution rule.
    std::optional<long> finite_order;
    std::optional<SubstitutionWord> substitution;
};

/// Immutable declaration context: the residue cardinality q (symbolic with
/// an optional numeric binding), the quadratic extension K/k with its
/// attached character chi_{K/k}, and the generator set with relations.
/// Frozen on construction; all values built over it are pure.
class Context : public std::enable_shared_from_this<Context> {
public:
    class Builder;

    ExtensionKind extension_kind() const { return extension_kind_; }
    const std::string& extension_label() const { return extension_label_; }
    std::optional<long> q_binding() const { return q_; }
    bool general_nu_exponents_allowed() const { return allow_general_nu_; }

    const GeneratorDecl* find_generator(const std::string& name) const;
    const std::vector<GeneratorDecl>& generators() const { return decls_; }

    /// Order bound on a Satake unit symbol (the declared finite order of
    /// the generator it belongs to), or nullopt when the unit is free.
    std::optional<long> unit_order(const std::string& unit) const;
    /// Generator owning a unit symbol; empty when unknown.
    const std::string& unit_generator(const std::string& unit) const;

    /// Fully substituted expansion of a generator in terminal generators.
    const SubstitutionWord& expansion(const std::string& name) const;

private:
    friend class Builder;
    Context() = default;

    ExtensionKind extension_kind_ = ExtensionKind::Unramified;
    std::string extension_label_ = "K";
    std::optional<long> q_;
    bool allow_general_nu_ = false;
    std::vector<GeneratorDecl> decls_;
    std::map<std::string, std::size_t> index_;
    std::map<std::string, SubstitutionWord> expansions_;
    std::map<std::string, std::string> unit_to_generator_;
};

class Context::Builder {
public:
    Builder& extension(ExtensionKind kind, std::string label = "K");
    Builder& bind_q(long q);
    Builder& allow_general_nu_exponents(bool allow = true);
    Builder& declare(GeneratorDecl decl);

    Builder& declare_unramified(const std::string& name);
    Builder& declare_ramified(const std::string& name);
    Builder& declare_order2_unramified(const std::string& name);
    Builder& declare_order2_ramified(const std::string& name);
    /// g := chi_{K/k}, the usual identification for quadratic parameters.
    Builder& declare_equal_chi_ext(const std::string& name);

    /// Validates the declaration set (acyclic substitutions, orders >= 1,
    /// unique names and unit symbols) and freezes it.
    ContextPtr freeze() const;

private:
    Context proto_;
};

/// A smooth character of k^x in normal form: exponents of terminal
/// generators (reduced modulo declared finite orders), a rational power of
/// the valuation character nu, and an exponent of chi_{K/k} in {0,1}.
/// Equality of normal forms is group equality.
class Character {
public:
    static Character one(const ContextPtr& ctx);
    static Character generator(const ContextPtr& ctx, const std::string& name);
    static Character nu(const ContextPtr& ctx, const Rational& exponent);
    static Character chi_ext(const ContextPtr& ctx);
    static Character from_word(const ContextPtr& ctx, const std::map<std::string, long>& gens,
                               const Rational& nu_exponent, long chi_exponent);

    Character operator*(const Character& other) const;
    Character inverse() const;
    Character pow(long k) const;

    bool operator==(const Character& other) const;
    bool operator!=(const Character& other) const { return !(*this == other); }
    /// Total order compatible with equality, for use as a map key.
    bool operator<(const Character& other) const;

    bool is_trivial() const;
    bool is_unramified() const;
    /// Value at a uniformizer, as a symbolic Satake monomial.
    /// Requires is_unramified().
    SatakeMonomial satake_value() const;

    const std::map<std::string, long>& generator_exponents() const { return gens_; }
    const Rational& nu_exponent() const { return nu_; }
    long chi_exponent() const { return chi_; }
    const ContextPtr& context() const { return ctx_; }

private:
    Character(ContextPtr ctx, std::map<std::string, long> gens, Rational nu, long chi);

    ContextPtr ctx_;
    std::map<std::string, long> gens_;
    Rational nu_;
    long chi_ = 0;
};

/// Throws ContextError unless both values live over the same frozen context.
void require_same_context(const ContextPtr& a, const ContextPtr& b);

/// A smooth character of K^x: an optional declared abstract part times the
/// pullback of a character of k^x along the norm. Pullbacks along the norm
/// of a quadratic extension kill exactly {1, chi_{K/k}}, so the norm part
/// is stored with its chi_{K/k} component cleared.
class CharacterK {
public:
    struct AbstractData {
        std::string name;
        Character restriction_to_base;
        Ramification ramification = Ramification::Ramified;
    };

    static CharacterK norm_pullback(const Character& base);
    static CharacterK abstract(const std::string& name, const Character& restriction,
                               Ramification ramification);
    static CharacterK one(const ContextPtr& ctx);

    /// Multiplies two characters of K^x. At most one factor may carry an
    /// abstract part; products of two distinct abstract characters are not
    /// representable and raise DomainError.
    CharacterK operator*(const CharacterK& other) const;

    bool operator==(const CharacterK& other) const;
    bool operator!=(const CharacterK& other) const { return !(*this == other); }

    /// Restriction to k^x; for a pure norm pullback of rho this is rho^2.
    Character restriction_to_base() const;

    bool is_norm_pullback() const { return !abstract_.has_value(); }
    const std::optional<AbstractData>& abstract_part() const { return abstract_; }
    /// Canonical representative of the norm part (chi-free).
    const Character& norm_part() const { return norm_part_; }
    const ContextPtr& context() const { return norm_part_.context(); }

private:
    CharacterK(std::optional<AbstractData> abstract, Character norm_part);

    std::optional<AbstractData> abstract_;
    Character norm_part_;
};

} // namespace gsp4
