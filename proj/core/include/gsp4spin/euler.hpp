#pragma once

#include "gsp4spin/characters.hpp"
#include "gsp4spin/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace gsp4 {

/// A symbolic Satake parameter: a sign literal, abstract unit symbols with
/// integer exponents (reduced modulo the declared order of the generator a
/// unit belongs to), and a rational power of q. The represented value is
///     sign * prod units^exp * q^{q_exponent}.
class SatakeMonomial {
public:
    static SatakeMonomial one(const ContextPtr& ctx);
    SatakeMonomial(ContextPtr ctx, int sign, std::map<std::string, long> units, Rational q_exponent);

    SatakeMonomial operator*(const SatakeMonomial& other) const;

    int sign() const { return sign_; }
    const std::map<std::string, long>& unit_exponents() const { return units_; }
    const Rational& q_exponent() const { return q_exp_; }
    const ContextPtr& context() const { return ctx_; }

    bool operator==(const SatakeMonomial& other) const;
    bool operator!=(const SatakeMonomial& other) const { return !(*this == other); }
    bool operator<(const SatakeMonomial& other) const;

    /// The unique unramified character with this value at the uniformizer.
    Character character() const;

private:
    void normalize();

    ContextPtr ctx_;
    int sign_ = 1;
    std::map<std::string, long> units_;
    Rational q_exp_;
};

struct PoleX {
    long double x = 0;            // pole location in X = q^{-s}
    int multiplicity = 0;
    long double re_s = 0;         // real part of s, modulo 2*pi*i / ln q
};

/// Numeric specialization of an Euler factor: the monomial values m_i, and
/// the expanded denominator polynomial prod (1 - m_i X).
class SpecializedFactor {
public:
    SpecializedFactor(long double q, std::vector<long double> values);

    const std::vector<long double>& monomial_values() const { return values_; }
    const std::vector<long double>& denominator_coefficients() const { return coeffs_; }

    long double eval_denominator(long double x) const;
    /// Termwise product prod 1/(1 - m_i x).
    long double eval(long double x) const;
    /// Poles in X with multiplicities, sorted by Re(s).
    std::vector<PoleX> poles() const;

private:
    long double q_;
    std::vector<long double> values_;
    std::vector<long double> coeffs_;
};

/// A local Euler factor prod_i (1 - m_i q^{-s})^{-1}, stored as the
/// multiset of its Satake monomials m_i. The empty multiset is the trivial
/// factor 1. Multiplication is multiset union, so equality is exact and
/// independent of any expansion.
class EulerFactor {
public:
    static EulerFactor one(const ContextPtr& ctx);
    /// Tate factor L(s, chi): trivial for ramified chi, a single monomial
    /// chi(uniformizer) otherwise.
    static EulerFactor tate(const Character& chi);

    EulerFactor operator*(const EulerFactor& other) const;
    bool operator==(const EulerFactor& other) const;
    bool operator!=(const EulerFactor& other) const { return !(*this == other); }

    /// Multiset inclusion: every monomial of *this occurs in other with at
    /// least the same multiplicity.
    bool divides(const EulerFactor& other) const;
    /// Multiset difference; requires divisor.divides(*this).
    EulerFactor quotient_by(const EulerFactor& divisor) const;

    bool is_one() const { return monomials_.empty(); }
    std::size_t degree() const { return monomials_.size(); }
    std::size_t multiplicity(const SatakeMonomial& m) const;
    const std::vector<SatakeMonomial>& monomials() const { return monomials_; }
    const ContextPtr& context() const { return ctx_; }

    /// Binds q and the unit symbols to numbers. Every unit that occurs
    /// must be bound, bindings must be nonzero, and q must exceed 1.
    /// Half-integral q-exponents use the positive square root of q.
    SpecializedFactor specialize(long double q, const std::map<std::string, long double>& units) const;

private:
    EulerFactor(ContextPtr ctx, std::vector<SatakeMonomial> monomials);

    ContextPtr ctx_;
    std::vector<SatakeMonomial> monomials_; // sorted
};

} // namespace gsp4
