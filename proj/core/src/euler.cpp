#include "gsp4spin/euler.hpp"

#include <algorithm>
#include <cmath>

namespace gsp4 {

// ---------------------------------------------------------------------------
// SatakeMonomial

SatakeMonomial::SatakeMonomial(ContextPtr ctx, int sign, std::map<std::string, long> units,
                               Rational q_exponent)
    : ctx_(std::move(ctx)), sign_(sign), units_(std::move(units)), q_exp_(q_exponent) {
    if (!ctx_) throw ContextError("monomial without a context");
    if (sign_ != 1 && sign_ != -1) throw DomainError("monomial sign must be +1 or -1");
    normalize();
}

SatakeMonomial SatakeMonomial::one(const ContextPtr& ctx) {
    return SatakeMonomial(ctx, 1, {}, Rational(0));
}

void SatakeMonomial::normalize() {
    for (auto it = units_.begin(); it != units_.end();) {
        if (auto order = ctx_->unit_order(it->first)) {
            it->second = ((it->second % *order) + *order) % *order;
        }
        if (it->second == 0)
            it = units_.erase(it);
        else
            ++it;
    }
}

SatakeMonomial SatakeMonomial::operator*(const SatakeMonomial& other) const {
    require_same_context(ctx_, other.ctx_);
    std::map<std::string, long> units = units_;
    for (const auto& [u, e] : other.units_) units[u] += e;
    return SatakeMonomial(ctx_, sign_ * other.sign_, std::move(units), q_exp_ + other.q_exp_);
}

bool SatakeMonomial::operator==(const SatakeMonomial& other) const {
    require_same_context(ctx_, other.ctx_);
    return sign_ == other.sign_ && q_exp_ == other.q_exp_ && units_ == other.units_;
}

bool SatakeMonomial::operator<(const SatakeMonomial& other) const {
    require_same_context(ctx_, other.ctx_);
    if (q_exp_ != other.q_exp_) return q_exp_ < other.q_exp_;
    if (sign_ != other.sign_) return sign_ < other.sign_;
    return units_ < other.units_;
}

Character SatakeMonomial::character() const {
    std::map<std::string, long> gens;
    for (const auto& [u, e] : units_) {
        const std::string& g = ctx_->unit_generator(u);
        if (g.empty()) throw DomainError("unit symbol '" + u + "' belongs to no generator");
        gens[g] = e;
    }
    long chi = 0;
    if (sign_ < 0) {
        if (ctx_->extension_kind() != ExtensionKind::Unramified)
            throw DomainError("negative monomial sign over a ramified extension");
        chi = 1;
    }
    return Character::from_word(ctx_, gens, -q_exp_, chi);
}

// ---------------------------------------------------------------------------
// EulerFactor

EulerFactor::EulerFactor(ContextPtr ctx, std::vector<SatakeMonomial> monomials)
    : ctx_(std::move(ctx)), monomials_(std::move(monomials)) {
    std::sort(monomials_.begin(), monomials_.end());
}

EulerFactor EulerFactor::one(const ContextPtr& ctx) { return EulerFactor(ctx, {}); }

EulerFactor EulerFactor::tate(const Character& chi) {
    if (!chi.is_unramified()) return one(chi.context());
    return EulerFactor(chi.context(), {chi.satake_value()});
}

EulerFactor EulerFactor::operator*(const EulerFactor& other) const {
    require_same_context(ctx_, other.ctx_);
    std::vector<SatakeMonomial> merged = monomials_;
    merged.insert(merged.end(), other.monomials_.begin(), other.monomials_.end());
    return EulerFactor(ctx_, std::move(merged));
}

bool EulerFactor::operator==(const EulerFactor& other) const {
    require_same_context(ctx_, other.ctx_);
    return monomials_ == other.monomials_;
}

bool EulerFactor::divides(const EulerFactor& other) const {
    require_same_context(ctx_, other.ctx_);
    std::size_t j = 0;
    for (const SatakeMonomial& m : monomials_) {
        while (j < other.monomials_.size() && other.monomials_[j] < m) ++j;
        if (j == other.monomials_.size() || !(other.monomials_[j] == m)) return false;
        ++j;
    }
    return true;
}

EulerFactor EulerFactor::quotient_by(const EulerFactor& divisor) const {
    if (!divisor.divides(*this)) throw DomainError("Euler factor quotient by a non-divisor");
    std::vector<SatakeMonomial> rest;
    std::size_t j = 0;
    for (const SatakeMonomial& m : monomials_) {
        if (j < divisor.monomials_.size() && divisor.monomials_[j] == m) {
            ++j;
            continue;
        }
        rest.push_back(m);
    }
    return EulerFactor(ctx_, std::move(rest));
}

std::size_t EulerFactor::multiplicity(const SatakeMonomial& m) const {
    std::size_t count = 0;
    for (const SatakeMonomial& x : monomials_)
        if (x == m) ++count;
    return count;
}

SpecializedFactor EulerFactor::specialize(long double q,
                                          const std::map<std::string, long double>& units) const {
    if (!(q > 1)) throw DomainError("specialization requires q > 1");
    std::vector<long double> values;
    values.reserve(monomials_.size());
    for (const SatakeMonomial& m : monomials_) {
        long double v = m.sign();
        for (const auto& [u, e] : m.unit_exponents()) {
            auto it = units.find(u);
            if (it == units.end()) throw DomainError("unbound unit symbol '" + u + "'");
            if (it->second == 0) throw DomainError("unit symbol '" + u + "' bound to zero");
            v *= std::pow(it->second, static_cast<long double>(e));
        }
        v *= std::pow(q, static_cast<long double>(m.q_exponent().to_double()));
        values.push_back(v);
    }
    return SpecializedFactor(q, std::move(values));
}

// ---------------------------------------------------------------------------
// SpecializedFactor

SpecializedFactor::SpecializedFactor(long double q, std::vector<long double> values)
    : q_(q), values_(std::move(values)) {
    coeffs_ = {1.0L};
    for (long double m : values_) {
        // multiply by (1 - m X)
        std::vector<long double> next(coeffs_.size() + 1, 0.0L);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            next[i] += coeffs_[i];
            next[i + 1] -= m * coeffs_[i];
        }
        coeffs_ = std::move(next);
    }
}

long double SpecializedFactor::eval_denominator(long double x) const {
    long double acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

long double SpecializedFactor::eval(long double x) const {
    long double acc = 1;
    for (long double m : values_) acc /= (1 - m * x);
    return acc;
}

std::vector<PoleX> SpecializedFactor::poles() const {
    std::vector<long double> xs;
    xs.reserve(values_.size());
    for (long double m : values_) xs.push_back(1.0L / m);
    std::sort(xs.begin(), xs.end());
    std::vector<PoleX> out;
    for (long double x : xs) {
        if (!out.empty() && std::fabs(out.back().x - x) <=
                                1e-9L * std::max<long double>(1.0L, std::fabs(x))) {
            ++out.back().multiplicity;
            continue;
        }
        PoleX p;
        p.x = x;
        p.multiplicity = 1;
        p.re_s = -std::log(std::fabs(x)) / std::log(q_);
        out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const PoleX& a, const PoleX& b) { return a.re_s < b.re_s; });
    return out;
}

} // namespace gsp4
