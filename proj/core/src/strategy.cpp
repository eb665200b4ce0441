// strategy.cpp -- transition rules for Ann's favourite-track strategy

#include "thue/strategy.hpp"

#include "thue/errors.hpp"
#include "thue/tau.hpp"

#include <string>

namespace thue {

const char* to_string(Rule rule)
{
    switch (rule) {
    case Rule::Opening:
        return "opening";
    case Rule::LeaveSeparator:
        return "leave-separator";
    case Rule::Switch:
        return "switch";
    case Rule::Keep:
        return "keep";
    }
    return "?";
}

std::pair<std::optional<Letter>, AnnState> initial_state(Starter mode, StrategyOptions options)
{
    AnnState state;
    state.mode = mode;
    state.phase = Phase::Initial;
    state.options = options;
    if (mode == Starter::BenStarts) {
        state.count = 1;
        return {std::nullopt, state};
    }
    const Letter opening = make_letter(0, tau_at(1));
    state.favourite_track = 0;
    state.count = 2;
    state.last_emitted = opening;
    return {opening, state};
}

namespace {

// Smallest track avoiding both arguments. Only reached by the strict-pair
// variant, whose history can break the default rules' preconditions.
int first_free_track(int avoid1, int avoid2)
{
    for (int t = 0; t < 3; ++t) {
        if (t != avoid1 && t != avoid2)
            return t;
    }
    return 0;
}

int leave_separator_track(const AnnState& state, Letter ben_move)
{
    switch (ben_move.track()) {
    case 0:
        return 1;
    case 1:
        return 0;
    default:
        break;
    }
    const int prev = state.ben_prev->track();
    if (prev == 2) {
        if (!state.options.strict_pair_match)
            throw StateError("favourite was 2 but Ben's previous move is on track 2");
        return first_free_track(2, 2);
    }
    return 1 - prev;
}

int switch_track(const AnnState& state, Letter ben_move)
{
    const int prev = state.ben_prev->track();
    const int cur = ben_move.track();
    const int track = 3 - prev - cur;
    if (prev == cur || track < 0 || track > 2 || track == cur) {
        if (!state.options.strict_pair_match)
            throw StateError("Ben's previous move shares the favourite track");
        return first_free_track(prev, cur);
    }
    return track;
}

} // namespace

Response respond(const AnnState& state, Letter ben_move)
{
    if (state.phase == Phase::Unstarted)
        throw StateError("respond() called before initial_state()");

    AnnState next = state;
    Rule rule;
    int track;

    if (state.phase == Phase::Initial) {
        rule = Rule::Opening;
        // 1 - ceil(track / 2)
        track = 1 - (ben_move.track() + 1) / 2;
    } else if (!state.ben_prev) {
        throw StateError("steady-state strategy without Ben's previous move");
    } else if (state.favourite_track == 2) {
        rule = Rule::LeaveSeparator;
        track = leave_separator_track(state, ben_move);
    } else {
        const bool matched = state.options.strict_pair_match
                                 ? state.last_emitted && ben_move == *state.last_emitted
                                 : ben_move.track() == state.favourite_track;
        if (matched) {
            rule = Rule::Switch;
            track = switch_track(state, ben_move);
        } else {
            rule = Rule::Keep;
            track = state.favourite_track;
        }
    }

    Letter letter;
    if (track == 2) {
        letter = separator_letter();
    } else {
        letter = make_letter(track, tau_at(next.count));
        ++next.count;
    }
    next.phase = Phase::AwaitingBen;
    next.favourite_track = track;
    next.ben_prev = ben_move;
    next.last_emitted = letter;
    return {letter, next, rule};
}

} // namespace thue
