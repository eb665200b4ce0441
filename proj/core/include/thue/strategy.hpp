// strategy.hpp -- Ann's favourite-track strategy as a pure state machine
//
// Ann keeps a favourite track (first component) and repeats it until Ben
// plays the same track. Her colors follow tau, except that the separator
// (2,d) does not consume a tau position.

#pragma once

#include "thue/letter.hpp"

#include <cstddef>
#include <optional>
#include <utility>

namespace thue {

struct StrategyOptions
{
    /// Trigger a favourite change only when Ben repeats Ann's whole last
    /// letter instead of just its track.
    bool strict_pair_match = false;

    friend bool operator==(const StrategyOptions&, const StrategyOptions&) = default;
};

enum class Phase {
    Unstarted,   ///< default-constructed; respond() refuses it
    Initial,     ///< Ann has not yet answered Ben's first move
    AwaitingBen, ///< steady state
};

/// Which transition produced Ann's letter.
enum class Rule {
    Opening,     ///< first answer to Ben (or Ann's first letter)
    LeaveSeparator, ///< favourite was track 2
    Switch,      ///< Ben matched the favourite
    Keep,        ///< no match, track unchanged
};

const char* to_string(Rule rule);

struct AnnState
{
    Starter mode = Starter::AnnStarts;
    Phase phase = Phase::Unstarted;
    int favourite_track = 0;
    /// Next tau index to consume (1-based).
    std::size_t count = 1;
    /// Ben's most recent move already incorporated.
    std::optional<Letter> ben_prev;
    /// Ann's most recent letter.
    std::optional<Letter> last_emitted;
    StrategyOptions options;

    friend bool operator==(const AnnState&, const AnnState&) = default;
};

/// Ann's opening letter (AnnStarts only) and the state awaiting Ben.
std::pair<std::optional<Letter>, AnnState> initial_state(Starter mode,
                                                         StrategyOptions options = {});

struct Response
{
    Letter letter;
    AnnState state;
    Rule rule;
};

/// Ann's reply to ben_move. Pure; throws StateError on an unstarted state
/// or when a track invariant of the default rule set is broken.
Response respond(const AnnState& state, Letter ben_move);

} // namespace thue
