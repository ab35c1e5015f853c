#include "gsp4spin/serialize.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace gsp4;
using fixtures::cusp;
using fixtures::gen;
using fixtures::nu;

TEST_CASE("context round-trip") {
    Context::Builder b;
    b.extension(ExtensionKind::Ramified, "K").bind_q(9);
    b.declare_unramified("sigma");
    b.declare_order2_ramified("xi");
    GeneratorDecl sub;
    sub.name = "chi_1";
    sub.substitution = SubstitutionWord{{{"sigma", -2}}, Rational(1, 2), 1};
    b.declare(sub);
    const ContextPtr ctx = b.freeze();

    const ContextPtr back = serialize::context_from_json(serialize::context_to_json(*ctx));
    CHECK(back->extension_kind() == ExtensionKind::Ramified);
    CHECK(back->q_binding() == 9);
    CHECK(back->generators().size() == 3);
    CHECK(Character::generator(back, "chi_1") ==
          Character::from_word(back, {{"sigma", -2}}, Rational(1, 2), 1));
}

TEST_CASE("character, lambda and factor round-trips") {
    auto ctx = fixtures::standard_ctx();
    const Character c = nu(ctx, -3, 2) * gen(ctx, "xi") * gen(ctx, "sigma").pow(-2);
    CHECK(serialize::character_from_json(ctx, serialize::character_to_json(c)) == c);

    const CharacterK lam =
        CharacterK::abstract("Lam", c.pow(2), Ramification::Ramified) *
        CharacterK::norm_pullback(gen(ctx, "mu"));
    CHECK(serialize::lambda_from_json(ctx, serialize::lambda_to_json(lam)) == lam);

    const EulerFactor f = EulerFactor::tate(nu(ctx, 1, 2) * gen(ctx, "sigma")) *
                          EulerFactor::tate(Character::chi_ext(ctx) * gen(ctx, "mu"));
    CHECK(serialize::factor_from_json(ctx, serialize::factor_to_json(f)) == f);
}

TEST_CASE("representation round-trips") {
    auto ctx = fixtures::standard_ctx();
    const GL2Rep pi = cusp(ctx, "pi", gen(ctx, "mu").pow(2)).twisted(nu(ctx, 1, 2));
    CHECK(serialize::gl2_from_json(ctx, serialize::gl2_to_json(pi)) == pi);

    const std::vector<GSp4Rep> reps{
        GSp4Rep::make_I(gen(ctx, "chi_1"), gen(ctx, "chi_2"), gen(ctx, "sigma")),
        GSp4Rep::make_Vd(gen(ctx, "xi"), gen(ctx, "sigma")),
        GSp4Rep::make_IXb(gen(ctx, "xi"), cusp(ctx, "pi", gen(ctx, "mu").pow(2))),
        GSp4Rep::make_XIa_star(gen(ctx, "sigma"), cusp(ctx, "pi0", Character::one(ctx))),
        GSp4Rep::make_cuspidal_generic(
            std::make_shared<CuspGSp4Data>(CuspGSp4Data{
                "Pi", gen(ctx, "sigma").pow(2), CuspGSp4Data::LambdaPolicy::None, {}}),
            ctx),
    };
    for (const GSp4Rep& rep : reps)
        CHECK(serialize::rep_from_json(ctx, serialize::rep_to_json(rep)) == rep);
}

TEST_CASE("string fields in structured records accept the text notation") {
    auto ctx = fixtures::standard_ctx();
    CHECK(serialize::character_from_json(ctx, "\"nu^{1/2} sigma\"") ==
          nu(ctx, 1, 2) * gen(ctx, "sigma"));
    CHECK(serialize::lambda_from_json(ctx, "\"norm(sigma)\"") ==
          CharacterK::norm_pullback(gen(ctx, "sigma")));
    CHECK(serialize::rep_from_json(ctx, "\"tau(T, nu^{-1/2} sigma)\"") ==
          GSp4Rep::make_VIb(gen(ctx, "sigma")));
}

TEST_CASE("query report schema") {
    auto ctx = fixtures::standard_ctx();
    const Character sigma = gen(ctx, "sigma");
    const GSp4Rep vib = GSp4Rep::make_VIb(sigma);
    const BesselDatum bd{CharacterK::norm_pullback(sigma)};
    const Character one = Character::one(ctx);
    const LFactorReport report = compute_lfactor_report(vib, bd, one);
    const auto j = nlohmann::json::parse(serialize::lfactor_report_to_json(vib, bd, one, report));
    CHECK(j.at("type") == "VIb");
    CHECK(j.at("condition_trace").at("row") == "VIb");
    CHECK(j.at("regular").at("display") == "L(s, nu^{1/2} sigma)");
    CHECK(j.at("exceptional").at("display") == "L(s, nu^{1/2} sigma)");
    CHECK(j.at("full").at("display") == "L(s, nu^{1/2} sigma)^2");
    CHECK(j.contains("caveats"));
    // structured factors parse back to the computed ones
    CHECK(serialize::factor_from_json(ctx, j.at("full").dump()) == report.triple.full);
}

TEST_CASE("packet report schema") {
    auto ctx = fixtures::standard_ctx();
    const Character one = Character::one(ctx);
    const Packet packet = sk_packet(GL2Rep::special(one));
    const PacketIdentityReport ver = verify_packet_identity(packet, one);
    const auto j = nlohmann::json::parse(serialize::packet_report_to_json(packet, one, ver));
    CHECK(j.at("source") == "saito_kurokawa");
    CHECK(j.at("verdict") == "equal");
    CHECK(j.at("plus").at("type") == "VIc");
    CHECK(j.at("minus").at("type") == "VIb");
    CHECK(j.at("lhs").contains("plus"));
    CHECK(j.at("rhs").contains("minus"));
}

TEST_CASE("table export shape") {
    const auto j = nlohmann::json::parse(serialize::export_tables_json());
    const auto& tables = j.at("tables");
    REQUIRE(tables.size() == 6);
    CHECK(tables[0].at("name") == "exceptional_factors");
    CHECK(tables[0].at("rows").size() == 6);
    CHECK(tables[1].at("rows").size() == 6);
    CHECK(tables[2].at("rows").size() == 29);
    CHECK(tables[3].at("rows").size() == 29);
    CHECK(tables[4].at("rows").size() == 8);
    CHECK(tables[5].at("rows").size() == 4);

    // spot checks against the printed tables
    const auto& t3 = tables[2].at("rows");
    bool found_vib = false;
    for (const auto& row : t3) {
        if (row.at("type") != "VIb") continue;
        found_vib = true;
        CHECK(row.at("l_regular") == "L(s, nu^{1/2} sigma)");
        CHECK(row.at("l_exceptional") == "L(s, nu^{1/2} sigma)");
    }
    CHECK(found_vib);
    const auto& t4 = tables[3].at("rows");
    for (const auto& row : t4) {
        if (row.at("type") == "IVd") CHECK(row.at("l_full") == "no Bessel model");
        if (row.at("type") == "VIb") CHECK(row.at("l_full") == "L(s, nu^{1/2} sigma)^2");
    }
    CHECK_FALSE(serialize::export_tables_text().empty());
}
