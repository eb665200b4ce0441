// report.hpp -- JSON forms of verification reports and traces

#pragma once

#include "thue/arena.hpp"

#include <nlohmann/json.hpp>

namespace thue {

/// {mode, depth, nodes, counterexample: null | {trace, witness}, elapsed_ms, ...}.
/// Positions in witnesses and violations are 0-based.
nlohmann::json to_json(const VerificationReport& report, bool include_timing = true);

nlohmann::json to_json(const Trace& trace);
nlohmann::json to_json(const SquareWitness& witness);

/// Accepts either a trace object {mode, trace: [...]} or a verification
/// report, whose counterexample trace is returned. Throws ParseError.
Trace trace_from_json(const nlohmann::json& value);

} // namespace thue
