#pragma once

#include "gsp4spin/catalog.hpp"
#include "gsp4spin/euler.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gsp4 {

/// A local packet of GSp(4) representations lifted from GL(2) data: the
/// generic (or non-tempered) member Pi_+ and, when the inputs are discrete
/// series, the non-generic member Pi_-.
struct Packet {
    enum class Source { Endoscopic, SaitoKurokawa };

    Source source = Source::Endoscopic;
    GSp4Rep plus;
    std::optional<GSp4Rep> minus;
    GL2Rep pi1;
    std::optional<GL2Rep> pi2; // endoscopic only
};

/// Endoscopic L-packet {Pi_+-(pi1, pi2)} attached to two unitary generic
/// representations of GL(2,k) with common central character.
Packet endoscopic_packet(const GL2Rep& pi1, const GL2Rep& pi2);

/// Saito-Kurokawa Arthur packet {Pi^SK_+-(pi)} attached to a unitary
/// generic representation of GL(2,k) with trivial central character.
Packet sk_packet(const GL2Rep& pi);

/// Standard GL(2) Euler factor L(s, pi (x) mu).
EulerFactor gl2_lfactor(const GL2Rep& pi, const Character& mu);

/// One packet member checked against its product formula.
struct PacketMemberCheck {
    std::string member; // "plus" or "minus"
    GSp4Rep rep;
    EulerFactor lhs; // spinor factor of the member
    EulerFactor rhs; // product of GL(2) factors
    bool equal = false;
};

struct PacketIdentityReport {
    std::vector<PacketMemberCheck> checks;
    bool all_equal = true;
};

/// Compares each member's full spinor factor with the lift formula:
/// endoscopic members against L(s,pi1 x mu) L(s,pi2 x mu); SK plus against
/// L(s,pi x mu) L(s,nu^{1/2} mu) L(s,nu^{-1/2} mu) and SK minus against
/// L(s,pi x mu) L(s,nu^{1/2} mu).
PacketIdentityReport verify_packet_identity(const Packet& packet, const Character& mu);

} // namespace gsp4
