#pragma once

#include "gsp4spin/characters.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gsp4 {

// ---------------------------------------------------------------------------
// GL(2,k)

enum class GL2Kind { Principal, Special, OneDim, Cuspidal };

/// Dihedral parameter of a cuspidal representation pi(mu) attached to a
/// character mu of the quadratic extension with Galois conjugate mu' != mu.
/// The conjugate is declared alongside mu; no Galois action is computed.
struct DihedralDatum {
    CharacterK mu;
    CharacterK mu_conjugate;
};

/// Declared yes/no answers to Hom_{K^x}(pi, Lambda) != 0 questions. These
/// are external classification facts (Waldspurger, Tunnell, Saito) that the
/// data model cannot derive, so callers declare them: an optional default
/// plus per-Lambda overrides.
struct FlagTable {
    std::optional<bool> default_flag;
    std::vector<std::pair<CharacterK, bool>> entries;

    std::optional<bool> lookup(const CharacterK& lambda) const {
        for (const auto& [key, value] : entries)
            if (key == lambda) return value;
        return default_flag;
    }
};

/// Declared data of a cuspidal irreducible representation of GL(2,k).
struct CuspidalGL2Data {
    std::string name;
    Character central_character;
    bool ramified = true;
    std::optional<DihedralDatum> dihedral;
    FlagTable waldspurger;    // Hom_{K^x}(pi, Lambda) != 0
    FlagTable waldspurger_jl; // Hom_{K^x}(pi^JL, Lambda) != 0
};

/// An irreducible admissible representation of GL(2,k): a principal series
/// mu1 x mu2, a twist mu.St of the Steinberg, a one-dimensional mu(det), or
/// a declared cuspidal with an accumulated twist.
class GL2Rep {
public:
    static GL2Rep principal(const Character& mu1, const Character& mu2);
    static GL2Rep special(const Character& mu);
    static GL2Rep one_dim(const Character& mu);
    static GL2Rep cuspidal(std::shared_ptr<const CuspidalGL2Data> data, const ContextPtr& ctx);

    GL2Kind kind() const { return kind_; }
    Character central_character() const;
    GL2Rep twisted(const Character& mu) const;

    bool is_generic() const { return kind_ != GL2Kind::OneDim; }
    bool is_discrete_series() const {
        return kind_ == GL2Kind::Special || kind_ == GL2Kind::Cuspidal;
    }
    bool is_cuspidal() const { return kind_ == GL2Kind::Cuspidal; }

    /// Declared Waldspurger datum for this representation against lambda,
    /// with accumulated twists folded into the lookup. nullopt = undeclared.
    std::optional<bool> hom_Ttilde_nonzero(const CharacterK& lambda) const;
    std::optional<bool> hom_Ttilde_jl_nonzero(const CharacterK& lambda) const;
    /// Dihedral parameters adjusted for the accumulated twist.
    std::optional<DihedralDatum> dihedral() const;

    const Character& mu1() const { return a_; }
    const Character& mu2() const { return b_; }
    const Character& mu() const { return a_; }
    const Character& twist() const { return b_; } // cuspidal only
    const std::shared_ptr<const CuspidalGL2Data>& cusp_data() const { return cusp_; }

    bool operator==(const GL2Rep& other) const;
    bool operator!=(const GL2Rep& other) const { return !(*this == other); }
    const ContextPtr& context() const { return a_.context(); }

private:
    GL2Rep(GL2Kind kind, Character a, Character b, std::shared_ptr<const CuspidalGL2Data> cusp);

    GL2Kind kind_;
    Character a_; // principal: mu1; special/one-dim: mu; cuspidal: unused (trivial)
    Character b_; // principal: mu2; cuspidal: accumulated twist
    std::shared_ptr<const CuspidalGL2Data> cusp_;
};

// ---------------------------------------------------------------------------
// GSp(4,k)

/// Sally-Tadic / Roberts-Schmidt classification symbols, plus the two
/// cuspidal theta-lift types Va*, XIa* and opaque cuspidal classes.
enum class GSp4Type {
    I, IIa, IIb, IIIa, IIIb, IVa, IVb, IVc, IVd,
    Va, Vb, Vc, Vd, VaStar,
    VIa, VIb, VIc, VId,
    VII, VIIIa, VIIIb, IXa, IXb, X, XIa, XIb, XIaStar,
    CuspGeneric, CuspOtherNonGeneric,
};

/// Stable type-symbol strings "I" ... "XIb", "Va*", "XIa*",
/// "cuspidal_generic", "cuspidal_nongeneric".
const std::string& to_string(GSp4Type type);
std::optional<GSp4Type> gsp4_type_from_string(const std::string& symbol);
/// All 29 catalog types in table order.
const std::vector<GSp4Type>& all_gsp4_types();

/// Declared data of an opaque cuspidal representation of GSp(4,k): its
/// central character and which characters of K^x yield anisotropic Bessel
/// models (the classification for these lives outside this data model).
struct CuspGSp4Data {
    enum class LambdaPolicy { All, None, Listed };

    std::string name;
    Character central_character;
    LambdaPolicy policy = LambdaPolicy::All;
    std::vector<CharacterK> lambdas; // for Listed
};

/// A classified irreducible admissible representation of GSp(4,k): a type
/// symbol plus the character / GL(2) parameters of its printed form.
class GSp4Rep {
public:
    static GSp4Rep make_I(const Character& chi1, const Character& chi2, const Character& sigma);
    static GSp4Rep make_IIa(const Character& chi, const Character& sigma);
    static GSp4Rep make_IIb(const Character& chi, const Character& sigma);
    static GSp4Rep make_IIIa(const Character& chi, const Character& sigma);
    static GSp4Rep make_IIIb(const Character& chi, const Character& sigma);
    static GSp4Rep make_IVa(const Character& sigma);
    static GSp4Rep make_IVb(const Character& sigma);
    static GSp4Rep make_IVc(const Character& sigma);
    static GSp4Rep make_IVd(const Character& sigma);
    static GSp4Rep make_Va(const Character& xi, const Character& sigma);
    static GSp4Rep make_Vb(const Character& xi, const Character& sigma);
    static GSp4Rep make_Vc(const Character& xi, const Character& sigma);
    static GSp4Rep make_Vd(const Character& xi, const Character& sigma);
    static GSp4Rep make_Va_star(const Character& sigma, const Character& xi);
    static GSp4Rep make_VIa(const Character& sigma);
    static GSp4Rep make_VIb(const Character& sigma);
    static GSp4Rep make_VIc(const Character& sigma);
    static GSp4Rep make_VId(const Character& sigma);
    static GSp4Rep make_VII(const Character& chi, const GL2Rep& pi);
    static GSp4Rep make_VIIIa(const GL2Rep& pi);
    static GSp4Rep make_VIIIb(const GL2Rep& pi);
    static GSp4Rep make_IXa(const Character& xi, const GL2Rep& pi);
    static GSp4Rep make_IXb(const Character& xi, const GL2Rep& pi);
    static GSp4Rep make_X(const GL2Rep& pi, const Character& sigma);
    static GSp4Rep make_XIa(const GL2Rep& pi, const Character& sigma);
    static GSp4Rep make_XIb(const GL2Rep& pi, const Character& sigma);
    static GSp4Rep make_XIa_star(const Character& sigma, const GL2Rep& pi);
    static GSp4Rep make_cuspidal_generic(std::shared_ptr<const CuspGSp4Data> data,
                                         const ContextPtr& ctx);
    static GSp4Rep make_cuspidal_nongeneric(std::shared_ptr<const CuspGSp4Data> data,
                                            const ContextPtr& ctx);

    GSp4Type type() const { return type_; }
    const ContextPtr& context() const { return ctx_; }

    const Character& sigma() const;
    const Character& chi() const;
    const Character& chi1() const;
    const Character& chi2() const;
    const Character& xi() const;
    const GL2Rep& pi() const;
    const std::shared_ptr<const CuspGSp4Data>& cusp_data() const { return cusp_; }
    const Character& cusp_twist() const;

    /// The central character, computed from the inducing data of the
    /// printed form; declared for the opaque cuspidal classes.
    Character central_character() const;

    /// mu (x) Pi: same type symbol, the sigma slot (or the GL(2) parameter
    /// for Klingen-type families) absorbs mu. Covariant with the central
    /// character: omega goes to mu^2 omega.
    GSp4Rep twisted(const Character& mu) const;

    bool is_generic() const;
    /// Extended Saito-Kurokawa class: IIb, Vb, Vc, Vd, VIb, VIc, VId, XIb,
    /// Va*, XIa* - the only types with a nontrivial exceptional factor.
    bool is_extended_sk() const;

    bool has_xi_parameter() const;
    bool has_pi_parameter() const { return pi_.has_value(); }
    bool is_cuspidal_class() const {
        return type_ == GSp4Type::CuspGeneric || type_ == GSp4Type::CuspOtherNonGeneric;
    }

    bool operator==(const GSp4Rep& other) const;
    bool operator!=(const GSp4Rep& other) const { return !(*this == other); }

private:
    GSp4Rep(GSp4Type type, ContextPtr ctx);

    static void require_quadratic_nontrivial(const Character& xi);
    static void require_trivial_central_cuspidal(const GL2Rep& pi);

    GSp4Type type_;
    ContextPtr ctx_;
    std::vector<Character> chars_;   // role order: see accessors
    std::optional<GL2Rep> pi_;
    std::shared_ptr<const CuspGSp4Data> cusp_;
    std::optional<Character> cusp_twist_;
};

/// Anisotropic Bessel datum: a character Lambda of K^x together with the
/// (always nondegenerate) character psi of the unipotent radical.
struct BesselDatum {
    CharacterK lambda;
    static constexpr bool psi_nondegenerate = true;

    /// Recorded restriction of Lambda to k^x.
    Character lambda_restriction() const { return lambda.restriction_to_base(); }
};

} // namespace gsp4
