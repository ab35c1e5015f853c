#pragma once

#include "gsp4spin/catalog.hpp"
#include "gsp4spin/lfactors.hpp"
#include "gsp4spin/packets.hpp"

#include <string>

namespace gsp4::serialize {

// Structured (JSON) serialization with exact round-trips. Rational
// exponents travel as "p/q" strings. The schemas are documented in the
// repository README.

std::string context_to_json(const Context& ctx);
ContextPtr context_from_json(const std::string& text);

std::string character_to_json(const Character& c);
Character character_from_json(const ContextPtr& ctx, const std::string& text);

std::string lambda_to_json(const CharacterK& lambda);
CharacterK lambda_from_json(const ContextPtr& ctx, const std::string& text);

std::string factor_to_json(const EulerFactor& f);
EulerFactor factor_from_json(const ContextPtr& ctx, const std::string& text);

std::string gl2_to_json(const GL2Rep& pi);
GL2Rep gl2_from_json(const ContextPtr& ctx, const std::string& text);

std::string rep_to_json(const GSp4Rep& pi);
GSp4Rep rep_from_json(const ContextPtr& ctx, const std::string& text);

/// Full query record: {type, parameters, lambda, mu, condition_trace,
/// regular, exceptional, full, caveats}.
std::string lfactor_report_to_json(const GSp4Rep& pi, const BesselDatum& bd, const Character& mu,
                                   const LFactorReport& report);

/// Packet record: {source, plus, minus, lhs, rhs, verdict}.
std::string packet_report_to_json(const Packet& packet, const Character& mu,
                                  const PacketIdentityReport& report);

/// Machine-readable dump of the six classification tables, rows encoded
/// with their guards and caveats.
std::string export_tables_json();
std::string export_tables_text();

} // namespace gsp4::serialize
