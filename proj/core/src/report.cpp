// report.cpp -- JSON serialization for reports and traces

#include "thue/report.hpp"

#include "thue/errors.hpp"

namespace thue {

namespace {

nlohmann::json moves_json(const std::vector<Move>& moves)
{
    auto out = nlohmann::json::array();
    for (const auto& m : moves)
        out.push_back(format_move(m));
    return out;
}

} // namespace

nlohmann::json to_json(const SquareWitness& witness)
{
    return {{"start", witness.start}, {"period", witness.period}};
}

nlohmann::json to_json(const Trace& trace)
{
    nlohmann::json out = {
        {"mode", to_string(trace.mode)},
        {"match", trace.strategy.strict_pair_match ? "pair" : "track"},
        {"trace", moves_json(trace.moves)},
    };
    return out;
}

nlohmann::json to_json(const VerificationReport& report, bool include_timing)
{
    nlohmann::json out = {
        {"mode", to_string(report.mode)},
        {"match", report.strategy.strict_pair_match ? "pair" : "track"},
        {"depth", report.depth},
        {"min_period", report.min_period},
        {"nodes", report.nodes_visited},
        {"square_events", report.square_events},
        {"losing_sequences", report.losing_sequences},
        {"indexing", "0-based"},
    };
    if (report.counterexample) {
        const auto& cx = *report.counterexample;
        out["counterexample"] = {
            {"trace", moves_json(cx.trace)},
            {"witness", to_json(cx.witness)},
            {"favourite_changes", cx.favourite_changes},
        };
    } else {
        out["counterexample"] = nullptr;
    }
    nlohmann::json counts = nlohmann::json::object();
    for (std::size_t i = 0; i < kInvariantKinds; ++i)
        counts[std::string(to_string(static_cast<InvariantKind>(i)))] = report.invariant_counts[i];
    out["invariant_violations"] = counts;
    auto examples = nlohmann::json::array();
    for (const auto& v : report.violations) {
        examples.push_back({{"kind", to_string(v.kind)},
                            {"position", v.position},
                            {"trace", moves_json(v.trace)}});
    }
    out["violation_examples"] = examples;
    if (include_timing)
        out["elapsed_ms"] = report.elapsed_ms;
    return out;
}

Trace trace_from_json(const nlohmann::json& value)
{
    try {
        Trace trace;
        trace.mode = parse_starter(value.at("mode").get<std::string>());
        if (auto it = value.find("match"); it != value.end())
            trace.strategy.strict_pair_match = it->get<std::string>() == "pair";
        const nlohmann::json* moves = nullptr;
        if (auto it = value.find("trace"); it != value.end()) {
            moves = &*it;
        } else if (auto cx = value.find("counterexample"); cx != value.end()) {
            if (cx->is_null())
                throw ParseError("report has no counterexample to replay");
            moves = &cx->at("trace");
        } else {
            throw ParseError("JSON has neither 'trace' nor 'counterexample'");
        }
        for (const auto& m : *moves)
            trace.moves.push_back(parse_move(m.get<std::string>()));
        return trace;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed trace JSON: ") + e.what());
    }
}

} // namespace thue
