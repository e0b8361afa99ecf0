#pragma once

#include <string>

#include <json.hpp>

#include "bettiforge/analyzer.hpp"

namespace bettiforge {

inline constexpr const char* kSchemaVersion = "betti-forge/1";

/// Integers stay integers; other rationals become {"num", "den"}.
nlohmann::ordered_json rational_json(const mpq_class& q);

nlohmann::ordered_json betti_json(const BettiData& b);

/// The arithmetic sub-report: identical for a resolution-backed analysis
/// and for the verifier fed the same Betti data.
nlohmann::ordered_json arithmetic_json(const BettiArithmetic& a);

nlohmann::ordered_json report_json(const SurfaceReport& r);
nlohmann::ordered_json report_json(const CurveReport& r);

/// Pretty-printed JSON with a fixed key order.
std::string serialize_report(const SurfaceReport& r);
std::string serialize_report(const CurveReport& r);

std::string render_arithmetic(const BettiArithmetic& a);
std::string render_text(const SurfaceReport& r);
std::string render_text(const CurveReport& r);

/// "S(-k)" notation for a resolution given only by its Betti data.
std::string format_resolution(const BettiData& b);

}  // namespace bettiforge
