// arena.hpp -- games between Ann's strategy and Ben adversaries, traces,
// replay, and the bounded exhaustive verifier

#pragma once

#include "thue/letter.hpp"
#include "thue/strategy.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace thue {

struct Move
{
    Player player = Player::Ann;
    Letter letter;

    friend bool operator==(const Move&, const Move&) = default;
};

/// "A 0a" / "B 0c".
std::string format_move(const Move& move);
Move parse_move(std::string_view line);

/// A game transcript as stored in trace files:
///
///     # mode=ann-starts
///     A 0a
///     B 0c
///     A 1b
///
/// Optional extra header lines "# key=value" are kept; "match=pair"
/// selects the strict-pair variant of the strategy on replay.
struct Trace
{
    Starter mode = Starter::AnnStarts;
    StrategyOptions strategy;
    std::vector<std::pair<std::string, std::string>> headers;
    std::vector<Move> moves;

    friend bool operator==(const Trace&, const Trace&) = default;
};

std::string format_trace(const Trace& trace);
/// Throws ParseError on malformed lines or a missing mode header with moves present.
Trace parse_trace(std::string_view text);

struct GameRecord
{
    Starter mode = Starter::AnnStarts;
    StrategyOptions strategy;
    std::size_t min_period = 2;
    std::vector<Move> moves;
    /// Rule behind each of Ann's letters, in order.
    std::vector<Rule> ann_rules;
    /// First square with period >= min_period; the game stops there.
    std::optional<SquareWitness> square;
    /// Shorter squares (the permitted doubled letters), logged as they occur.
    std::vector<SquareWitness> trivial_squares;

    GameWord word() const;
    Trace trace() const;

    friend bool operator==(const GameRecord&, const GameRecord&) = default;
};

/// Source of Ben's moves.
class BenAdversary
{
public:
    enum class Kind { Exhaustive, Random, Greedy, Mirror, Scripted };

    /// Placeholder for the verifier, which drives Ben itself; next() throws.
    static BenAdversary exhaustive();
    static BenAdversary random(std::uint64_t seed);
    /// Plays a square-completing letter when one exists, otherwise the
    /// letter leaving the longest near-square; ties go to the earlier letter.
    static BenAdversary greedy(std::size_t min_period = 2);
    /// Repeats Ann's last letter; (0,a) when Ann has not moved yet.
    static BenAdversary mirror();
    /// Plays the given moves, then stops.
    static BenAdversary scripted(std::vector<Letter> moves);

    Kind kind() const { return kind_; }
    std::uint64_t seed() const { return seed_; }

    /// Ben's move on the given word, or nullopt when a script runs out.
    std::optional<Letter> next(const GameWord& word);

private:
    explicit BenAdversary(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::uint64_t seed_ = 0;
    std::mt19937_64 rng_;
    std::size_t min_period_ = 2;
    std::vector<Letter> script_;
    std::size_t cursor_ = 0;
};

std::string_view to_string(BenAdversary::Kind kind);
/// "random", "greedy", "mirror", "scripted", "exhaustive". Throws ParseError.
BenAdversary::Kind parse_adversary_kind(std::string_view text);

struct PlayOptions
{
    std::size_t min_period = 2;
    StrategyOptions strategy;
};

/// Plays up to `rounds` Ben moves, each followed by Ann's reply. Stops at
/// the first square of period >= min_period or when the adversary runs
/// out of moves.
GameRecord play_game(Starter mode, BenAdversary& adversary, std::size_t rounds,
                     const PlayOptions& options = {});

/// Re-executes the strategy against the trace's Ben moves. Throws
/// DivergenceError if a recorded Ann move differs from the recomputed one,
/// or if the turn order is impossible.
GameRecord replay(const Trace& trace, std::size_t min_period = 2);

/// Ann's favourite changes (switch and leave-separator activations) among
/// her letters inside [window.start, window.end()).
std::size_t favourite_changes(const GameRecord& record, const SquareWitness& window);

// ---------------------------------------------------------------------------
// Exhaustive verification
// ---------------------------------------------------------------------------

enum class InvariantKind {
    DoubleSeparator,  ///< Ann emitted (2,d) on two consecutive turns
    TrackCollision,   ///< Ann's track equals the preceding letter's track
    PeriodThreeSquare ///< a square of period exactly 3 ends here
};

inline constexpr std::size_t kInvariantKinds = 3;

std::string_view to_string(InvariantKind kind);

struct InvariantViolation
{
    InvariantKind kind;
    /// 0-based index of the offending letter.
    std::size_t position = 0;
    std::vector<Move> trace;

    friend bool operator==(const InvariantViolation&, const InvariantViolation&) = default;
};

struct Counterexample
{
    /// Moves up to and including the letter that completes the square.
    std::vector<Move> trace;
    SquareWitness witness;
    std::size_t favourite_changes = 0;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerifyOptions
{
    std::size_t min_period = 2;
    StrategyOptions strategy;
    unsigned jobs = 1;
    /// The search is cut into 7^split_depth subtrees by Ben's first moves.
    std::size_t split_depth = 2;
    /// Refuse searches with more than this many Ben sequences.
    std::uint64_t max_nodes = 282'475'249; // 7^10
    /// Violations kept verbatim in the report (counts are always exact).
    std::size_t max_recorded_violations = 16;
};

struct VerificationReport
{
    Starter mode = Starter::AnnStarts;
    std::size_t depth = 0;
    std::size_t min_period = 2;
    StrategyOptions strategy;
    /// Complete Ben move sequences explored; 7^depth for a full sweep.
    std::uint64_t nodes_visited = 0;
    /// Positions (over all sequences) at which a square of period >= min_period ends.
    std::uint64_t square_events = 0;
    /// Ben sequences whose game contains such a square.
    std::uint64_t losing_sequences = 0;
    std::array<std::uint64_t, kInvariantKinds> invariant_counts{};
    /// First square in enumeration order.
    std::optional<Counterexample> counterexample;
    std::vector<InvariantViolation> violations;
    double elapsed_ms = 0;

    bool clean() const;
    /// Equality of everything except timing.
    bool same_outcome(const VerificationReport& other) const;
};

/// Enumerates every sequence of `depth` Ben moves, with Ann replying by the
/// strategy, and checks each appended letter for squares and the strategy
/// invariants. Nothing is pruned: play continues past a square so that
/// every sequence is checked. Reports are identical for any job count.
/// Throws DepthError when 7^depth exceeds options.max_nodes or depth is 0.
VerificationReport exhaustive_verify(Starter mode, std::size_t depth,
                                     const VerifyOptions& options = {});

} // namespace thue
