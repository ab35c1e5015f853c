#pragma once

#include "gsp4spin/catalog.hpp"
#include "gsp4spin/euler.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gsp4 {

/// Which characters Lambda of K^x yield an anisotropic Bessel model for a
/// given representation. Every kind carries the implicit admissibility
/// constraint Lambda|_{k^x} = omega.
struct LambdaCondition {
    enum class Kind {
        None,     // no anisotropic Bessel model at all
        All,      // all admissible Lambda, minus the listed exceptions
        Exactly,  // exactly the listed Lambda
        Filtered, // admissible Lambda passing a declared Waldspurger filter,
                  // minus the listed exceptions
    };

    Kind kind = Kind::None;
    std::vector<CharacterK> members; // exceptions (All/Filtered) or exact set (Exactly)
    struct WaldspurgerFilter {
        GL2Rep pi;
        bool want_nonzero = true;
    };
    std::optional<WaldspurgerFilter> filter;
    std::string guard_note; // which table guard fired, for query traces

    /// Does lambda satisfy this condition (admissibility included)?
    /// Throws UndeclaredDatum when a needed Waldspurger flag is missing.
    bool admits(const GSp4Rep& pi, const CharacterK& lambda) const;
};

/// The Lambda column of the anisotropic Bessel-model table for pi, over the
/// quadratic extension of pi's context.
LambdaCondition anisotropic_lambda_condition(const GSp4Rep& pi);

/// True iff (lambda, psi) is an anisotropic Bessel model of pi: lambda must
/// restrict to the central character and satisfy the table condition.
bool has_anisotropic_bessel(const GSp4Rep& pi, const BesselDatum& bd);

/// Dimension of the space of (H, rho o lambda_G)-equivariant functionals,
/// always 0 or 1. Zero for all generic types; one exactly on the classified
/// rows (IIb, Vb, Vc, Vd, VIb, XIb and the lift types Va*, XIa*) with their
/// guards. Throws UndeclaredDatum when the XIb/XIa* flags are missing.
int h_functional_dim(const GSp4Rep& pi, const Character& rho);

struct LFactorTriple {
    EulerFactor regular;
    EulerFactor exceptional;
    EulerFactor full; // = regular * exceptional
};

/// Regular part of the spinor L-factor attached to the model (lambda, psi)
/// and twist mu. Requires has_anisotropic_bessel(pi, bd). General mu is
/// computed through the twist identity
///   L(s, Pi, Lambda, mu) = L(s, mu Pi, (mu o N) Lambda, 1).
EulerFactor l_regular(const GSp4Rep& pi, const BesselDatum& bd, const Character& mu);

/// Exceptional part; same preconditions. Direct queries on the cuspidal
/// lift types Va*, XIa* are restricted to mu = 1 (general mu for those goes
/// through the packet identities).
EulerFactor l_exceptional(const GSp4Rep& pi, const BesselDatum& bd, const Character& mu);

/// Both parts and their product for an anisotropic model.
LFactorTriple l_full_anisotropic(const GSp4Rep& pi, const BesselDatum& bd, const Character& mu);

/// Full spinor L-factor, independent of the choice of Bessel model. Defined
/// for every type except IVd (which has no Bessel model at all).
EulerFactor l_full_any_model(const GSp4Rep& pi, const Character& mu);

/// The printed mu-dependent exceptional formula for the six non-cuspidal
/// types with a nontrivial exceptional factor (IIb, Vb, Vc, Vd, VIb, XIb).
/// This is an independent route used to cross-check twist covariance.
EulerFactor exceptional_mu_formula(const GSp4Rep& pi, const Character& mu);

/// Trace of which table row and guards produced a result.
struct ConditionTrace {
    std::string row;
    std::vector<std::string> guards;
    std::vector<std::string> caveats;
};

struct LFactorReport {
    LFactorTriple triple;
    ConditionTrace trace;
};

/// l_full_anisotropic plus the condition trace and caveat flags.
LFactorReport compute_lfactor_report(const GSp4Rep& pi, const BesselDatum& bd, const Character& mu);

/// Caveats attached to a row independent of any query (odd residue
/// characteristic restrictions, declared-flag dependence).
std::vector<std::string> row_caveats(GSp4Type type);

namespace testing_hooks {
/// Test-only fault injection: corrupts the regular-factor table entry of
/// one row so the verification suite can prove it catches table damage.
void set_injected_table_fault(std::optional<GSp4Type> row);
std::optional<GSp4Type> injected_table_fault();
} // namespace testing_hooks

} // namespace gsp4
