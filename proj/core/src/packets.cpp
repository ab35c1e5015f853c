#include "gsp4spin/packets.hpp"

#include "gsp4spin/lfactors.hpp"

#include <memory>

namespace gsp4 {

namespace {

Character nu_pow(const ContextPtr& ctx, long num, long den = 1) {
    return Character::nu(ctx, Rational(num, den));
}

/// theta_-(pi1, pi2) for two non-isomorphic cuspidal inputs: an opaque
/// cuspidal non-generic representation named after its arguments.
GSp4Rep opaque_theta_minus(const GL2Rep& pi1, const GL2Rep& pi2) {
    auto data = std::make_shared<CuspGSp4Data>(CuspGSp4Data{
        "theta_-(" + pi1.cusp_data()->name + "," + pi2.cusp_data()->name + ")",
        pi1.central_character(), CuspGSp4Data::LambdaPolicy::All, {}});
    return GSp4Rep::make_cuspidal_nongeneric(std::move(data), pi1.context());
}

GSp4Rep opaque_generic_lift(const GL2Rep& pi1, const GL2Rep& pi2) {
    auto data = std::make_shared<CuspGSp4Data>(CuspGSp4Data{
        "lift(" + pi1.cusp_data()->name + "," + pi2.cusp_data()->name + ")",
        pi1.central_character(), CuspGSp4Data::LambdaPolicy::All, {}});
    return GSp4Rep::make_cuspidal_generic(std::move(data), pi1.context());
}

/// Row dispatch for the endoscopic table with the inputs in a fixed role
/// order; `swapped` only affects which argument provides which parameter,
/// the packet itself is symmetric.
Packet endoscopic_rows(const GL2Rep& pi1, const GL2Rep& pi2) {
    const ContextPtr& ctx = pi1.context();
    Packet packet{Packet::Source::Endoscopic, GSp4Rep::make_IVd(Character::one(ctx)),
                  std::nullopt, pi1, pi2};

    const GL2Kind k1 = pi1.kind();
    const GL2Kind k2 = pi2.kind();

    if (k1 == GL2Kind::Principal && k2 == GL2Kind::Principal) {
        const Character& m1 = pi1.mu1();
        packet.plus = GSp4Rep::make_I(pi2.mu1() * m1.inverse(), pi2.mu2() * m1.inverse(), m1);
        return packet;
    }
    if (k1 == GL2Kind::Principal && k2 == GL2Kind::Special) {
        const Character& m1 = pi1.mu1();
        packet.plus = GSp4Rep::make_IIa(pi2.mu() * m1.inverse(), m1);
        return packet;
    }
    if (k1 == GL2Kind::Principal && k2 == GL2Kind::Cuspidal) {
        const Character& m1 = pi1.mu1();
        packet.plus = GSp4Rep::make_X(pi2.twisted(m1.inverse()), m1);
        return packet;
    }
    if (k1 == GL2Kind::Special && k2 == GL2Kind::Special) {
        const Character xi = pi1.mu() * pi2.mu().inverse();
        const Character& mu = pi2.mu();
        if (xi.is_trivial()) {
            packet.plus = GSp4Rep::make_VIa(mu);
            packet.minus = GSp4Rep::make_VIb(mu);
        } else {
            packet.plus = GSp4Rep::make_Va(xi, mu);
            packet.minus = GSp4Rep::make_Va_star(mu, xi);
        }
        return packet;
    }
    if (k1 == GL2Kind::Cuspidal && k2 == GL2Kind::Special) {
        const Character& mu = pi2.mu();
        const GL2Rep pi = pi1.twisted(mu.inverse()); // trivial central character
        packet.plus = GSp4Rep::make_XIa(pi, mu);
        packet.minus = GSp4Rep::make_XIa_star(mu, pi);
        return packet;
    }
    if (k1 == GL2Kind::Cuspidal && k2 == GL2Kind::Cuspidal) {
        if (pi1 == pi2) {
            packet.plus = GSp4Rep::make_VIIIa(pi1);
            packet.minus = GSp4Rep::make_VIIIb(pi1);
        } else {
            packet.plus = opaque_generic_lift(pi1, pi2);
            packet.minus = opaque_theta_minus(pi1, pi2);
        }
        return packet;
    }
    // remaining mixed orders: reuse the handled ones, the packet is symmetric
    Packet swapped = endoscopic_rows(pi2, pi1);
    swapped.pi1 = pi1;
    swapped.pi2 = pi2;
    return swapped;
}

} // namespace

Packet endoscopic_packet(const GL2Rep& pi1, const GL2Rep& pi2) {
    require_same_context(pi1.context(), pi2.context());
    if (!pi1.is_generic() || !pi2.is_generic())
        throw DomainError("endoscopic packets need generic GL(2) inputs");
    if (pi1.central_character() != pi2.central_character())
        throw DomainError("endoscopic packets need a common central character");
    return endoscopic_rows(pi1, pi2);
}

Packet sk_packet(const GL2Rep& pi) {
    const ContextPtr& ctx = pi.context();
    if (!pi.is_generic()) throw DomainError("Saito-Kurokawa packets need a generic GL(2) input");
    if (!pi.central_character().is_trivial())
        throw DomainError("Saito-Kurokawa packets need trivial central character");

    Packet packet{Packet::Source::SaitoKurokawa, GSp4Rep::make_IVd(Character::one(ctx)),
                  std::nullopt, pi, std::nullopt};
    const Character one = Character::one(ctx);

    switch (pi.kind()) {
    case GL2Kind::Principal:
        // mu x mu^{-1}
        packet.plus = GSp4Rep::make_IIb(pi.mu1(), pi.mu1().inverse());
        return packet;
    case GL2Kind::Special: {
        const Character& mu = pi.mu(); // quadratic since the central character is trivial
        if (mu.is_trivial()) {
            packet.plus = GSp4Rep::make_VIc(one);
            packet.minus = GSp4Rep::make_VIb(one);
        } else {
            // the "Vbc" member L(nu^{1/2} xi St, nu^{-1/2}), encoded in Vb coordinates
            packet.plus = GSp4Rep::make_Vb(mu, one);
            packet.minus = GSp4Rep::make_Va_star(one, mu);
        }
        return packet;
    }
    case GL2Kind::Cuspidal:
        packet.plus = GSp4Rep::make_XIb(pi, one);
        packet.minus = GSp4Rep::make_XIa_star(one, pi);
        return packet;
    case GL2Kind::OneDim:
        break;
    }
    throw Error("unreachable");
}

EulerFactor gl2_lfactor(const GL2Rep& pi, const Character& mu) {
    const ContextPtr& ctx = pi.context();
    const auto nu_half = nu_pow(ctx, 1, 2);
    switch (pi.kind()) {
    case GL2Kind::Principal:
        return EulerFactor::tate(mu * pi.mu1()) * EulerFactor::tate(mu * pi.mu2());
    case GL2Kind::Special:
        return EulerFactor::tate(nu_half * mu * pi.mu());
    case GL2Kind::OneDim:
        return EulerFactor::tate(nu_pow(ctx, -1, 2) * mu * pi.mu()) *
               EulerFactor::tate(nu_half * mu * pi.mu());
    case GL2Kind::Cuspidal:
        return EulerFactor::one(ctx);
    }
    throw Error("unreachable");
}

PacketIdentityReport verify_packet_identity(const Packet& packet, const Character& mu) {
    const ContextPtr& ctx = packet.plus.context();
    PacketIdentityReport report;

    EulerFactor rhs_plus = EulerFactor::one(ctx);
    EulerFactor rhs_minus = EulerFactor::one(ctx);
    if (packet.source == Packet::Source::Endoscopic) {
        rhs_plus = gl2_lfactor(packet.pi1, mu) * gl2_lfactor(*packet.pi2, mu);
        rhs_minus = rhs_plus;
    } else {
        const EulerFactor base = gl2_lfactor(packet.pi1, mu);
        rhs_plus = base * EulerFactor::tate(nu_pow(ctx, 1, 2) * mu) *
                   EulerFactor::tate(nu_pow(ctx, -1, 2) * mu);
        rhs_minus = base * EulerFactor::tate(nu_pow(ctx, 1, 2) * mu);
    }

    const auto check = [&](const std::string& name, const GSp4Rep& rep, const EulerFactor& rhs) {
        PacketMemberCheck c{name, rep, l_full_any_model(rep, mu), rhs, false};
        c.equal = c.lhs == c.rhs;
        report.all_equal = report.all_equal && c.equal;
        report.checks.push_back(std::move(c));
    };
    check("plus", packet.plus, rhs_plus);
    if (packet.minus) check("minus", *packet.minus, rhs_minus);
    return report;
}

} // namespace gsp4
