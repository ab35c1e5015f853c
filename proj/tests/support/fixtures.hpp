#pragma once

#include "gsp4spin/catalog.hpp"
#include "gsp4spin/characters.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace fixtures {

using namespace gsp4;

/// Standard context: unramified K/k, free unramified sigma/chi/chi_1/chi_2/mu,
/// order-two unramified xi, one ramified generator rho_r.
inline ContextPtr standard_ctx(ExtensionKind kind = ExtensionKind::Unramified) {
    Context::Builder b;
    b.extension(kind, "K");
    for (const char* name : {"sigma", "chi", "chi_1", "chi_2", "mu"})
        b.declare_unramified(name);
    b.declare_order2_unramified("xi");
    b.declare_ramified("rho_r");
    return b.freeze();
}

inline Character gen(const ContextPtr& ctx, const std::string& name) {
    return Character::generator(ctx, name);
}

inline Character nu(const ContextPtr& ctx, long num, long den = 1) {
    return Character::nu(ctx, Rational(num, den));
}

inline GL2Rep cusp(const ContextPtr& ctx, const std::string& name, const Character& omega,
                   std::optional<bool> wald = true, std::optional<bool> jl = true) {
    FlagTable w;
    w.default_flag = wald;
    FlagTable j;
    j.default_flag = jl;
    return GL2Rep::cuspidal(std::make_shared<CuspidalGL2Data>(
                                CuspidalGL2Data{name, omega, true, std::nullopt, w, j}),
                            ctx);
}

/// Random words over a context, for hand-rolled property tests.
class WordGen {
public:
    explicit WordGen(std::uint64_t seed) : rng_(seed) {}

    Character random_word(const ContextPtr& ctx, int max_letters = 10) {
        std::map<std::string, long> gens;
        const auto& decls = ctx->generators();
        std::uniform_int_distribution<int> count(0, max_letters);
        std::uniform_int_distribution<int> exp(-3, 3);
        const int letters = count(rng_);
        for (int i = 0; i < letters; ++i) {
            const auto& d = decls[rng_() % decls.size()];
            gens[d.name] += exp(rng_);
        }
        std::uniform_int_distribution<int> nu_num(-4, 4);
        return Character::from_word(ctx, gens, Rational(nu_num(rng_), 2),
                                    static_cast<long>(rng_() % 2));
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace fixtures
